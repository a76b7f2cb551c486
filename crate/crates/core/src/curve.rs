//! Rational curves realizing each MBM orbit on the model variety.
//!
//! For the canonical representative `r*x - b*e` (with `x` the class of a
//! smooth genus `g` curve `C` on the surface) a pencil `g^1_k` on `C` with
//! `k = b*t/r - g + 1` gives a rational curve numerically equivalent to
//! `C - (g - 1 + k) e/t`. Its MBM locus has dimension `2n - k + g` and the
//! fibres of the rational quotient have dimension `k - g`.
//!
//! The orbit `(a, b) = (0, 1)` of `e` itself is realized instead by the
//! ruling of the exceptional divisor over the diagonal.

use crate::error::{Error, Result};
use crate::lattice::{DualClass, Family, FamilyKind};
use crate::orbit::{normalize, OrbitDescriptor};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RealizationKind {
    /// Image of a curve under a pencil `g^1_k`.
    Pencil,
    /// Fibre of the exceptional divisor over the diagonal.
    ExceptionalFiber,
}

impl RealizationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RealizationKind::Pencil => "pencil",
            RealizationKind::ExceptionalFiber => "exceptional_fiber",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveRealization {
    pub kind: RealizationKind,
    /// `a + 1`, from `q(x) = 2g - 2`.
    pub genus: i128,
    pub k: i128,
    pub r: i128,
    pub b_norm: i128,
    pub homology_class: DualClass,
    pub locus_dim: i128,
    pub fiber_dim: i128,
}

impl CurveRealization {
    /// Codimension of the MBM locus.
    pub fn codimension(&self, family: Family) -> i128 {
        2 * i128::from(family.n()) - self.locus_dim
    }
}

/// Allowed pencil degrees `[k_min, k_max]` for the family.
pub fn pencil_degree_range(family: Family) -> (i128, i128) {
    let n = i128::from(family.n());
    match family.kind() {
        FamilyKind::K3Type => (1, n),
        FamilyKind::KummerType => (2, n + 1),
    }
}

/// Lower bound on `k` needed for a `g^1_k` to exist on a general curve of genus `g`.
pub fn gonality_lower_bound(genus: i128) -> i128 {
    match genus {
        0 => 1,
        1 => 2,
        g => (g + 1) / 2 + 1,
    }
}

pub fn realize_orbit(family: Family, orbit: &OrbitDescriptor) -> Result<CurveRealization> {
    if orbit.family() != family {
        return Err(Error::InvalidOrbit { family, a: orbit.a, b: orbit.b });
    }
    let n = i128::from(family.n());
    let t = family.t();
    let norm = normalize(&orbit.canonical_rep)?;
    let (r, b_norm) = (norm.r, norm.b_norm);
    let genus = orbit.a + 1;
    let k = b_norm * t / r - genus + 1;
    let fail = |what: &str| {
        Err(Error::Inconsistency(format!(
            "orbit (a, b) = ({}, {}) of {family}: {what} (g = {genus}, k = {k})",
            orbit.a, orbit.b
        )))
    };

    if orbit.is_exceptional() {
        return Ok(CurveRealization {
            kind: RealizationKind::ExceptionalFiber,
            genus,
            k,
            r,
            b_norm,
            homology_class: DualClass {
                f_hat: Rational::from_integer(0),
                c_hat: Rational::new(-1, t),
                d: orbit.canonical_rep.d,
                family,
            },
            locus_dim: 2 * n - 1,
            fiber_dim: 1,
        });
    }

    let (k_min, k_max) = pencil_degree_range(family);
    if k < k_min || k > k_max {
        return fail("pencil degree out of range");
    }
    if k <= 2 * genus - 2 {
        return fail("k > 2g - 2 violated");
    }
    if k < gonality_lower_bound(genus) {
        return fail("gonality bound violated");
    }

    // C - (g - 1 + k) e_hat with e_hat = e/t, which is x - (b_norm/r) e.
    let homology_class = DualClass {
        f_hat: Rational::from_integer(1),
        c_hat: -Rational::new(genus - 1 + k, t),
        d: orbit.canonical_rep.d,
        family,
    };
    debug_assert_eq!(homology_class.c_hat, -Rational::new(b_norm, r));

    Ok(CurveRealization {
        kind: RealizationKind::Pencil,
        genus,
        k,
        r,
        b_norm,
        homology_class,
        locus_dim: 2 * n - k + genus,
        fiber_dim: k - genus,
    })
}

/// Largest genus of the curve `C` over all MBM orbits.
pub fn genus_bound(family: Family) -> i128 {
    let n = i128::from(family.n());
    let shift = match family.kind() {
        FamilyKind::K3Type => 3,
        FamilyKind::KummerType => 5,
    };
    // ceil((n + shift) / 4) - 1
    (n + shift + 3) / 4 - 1
}

/// Minimum of `q(alpha_hat)` over all MBM classes.
pub fn extremal_qhat(family: Family) -> Rational {
    let n = i128::from(family.n());
    match family.kind() {
        FamilyKind::K3Type => Rational::new(-(n + 3), 2),
        FamilyKind::KummerType => Rational::new(-(n + 1), 2),
    }
}
