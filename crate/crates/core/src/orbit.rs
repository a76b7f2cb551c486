//! Monodromy orbits of MBM classes.
//!
//! An orbit of primitive classes is determined by `q(alpha)` together with
//! `+-delta(alpha)`. For negative classes this is repackaged as the pair
//! `(a, b)` with `q(alpha_hat) = 2a - b^2/t` and `b = +-delta(alpha)`;
//! the class is MBM exactly when
//!
//! * K3 type: `b in [0, n-1]` and `-2 <= 2a < b^2/t`,
//! * Kummer type: `b in [1, n+1]` and `0 <= 2a < b^2/t`.
//!
//! [`classify`] reaches the same verdict by a different route: it moves the
//! class by monodromy to `r*x - b'*e` with `b' in [0, r/2]` and tests
//! `q(x)` against `-2` (resp. `0`).

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{Family, PicClass};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrbitDescriptor {
    pub a: i128,
    pub b: i128,
    pub q_hat: Rational,
    pub delta_abs: i128,
    pub canonical_rep: PicClass,
}

impl OrbitDescriptor {
    pub fn new(family: Family, a: i128, b: i128) -> Result<Self> {
        if !orbit_params_valid(family, a, b) {
            return Err(Error::InvalidOrbit { family, a, b });
        }
        Ok(OrbitDescriptor {
            a,
            b,
            q_hat: q_hat(family, a, b),
            delta_abs: b,
            canonical_rep: canonical_class(family, a, b),
        })
    }

    pub fn family(&self) -> Family {
        self.canonical_rep.family
    }

    /// The orbit of the exceptional class `e`.
    pub fn is_exceptional(&self) -> bool {
        self.a == 0 && self.b == 1
    }
}

/// `2a - b^2/t`.
pub fn q_hat(family: Family, a: i128, b: i128) -> Rational {
    Rational::from_integer(2 * a) - Rational::new(b * b, family.t())
}

pub fn orbit_params_valid(family: Family, a: i128, b: i128) -> bool {
    let t = family.t();
    let b_min = if family.is_k3() { 0 } else { 1 };
    // 2a < b^2/t  <=>  2a*t < b^2 since t > 0
    (b_min..=t / 2).contains(&b) && 2 * a >= family.min_qx() && 2 * a * t < b * b
}

/// All MBM orbits of the family, ordered by `(b, a)`.
pub fn enumerate_mbm_orbits(family: Family) -> Vec<OrbitDescriptor> {
    let t = family.t();
    let b_min = if family.is_k3() { 0 } else { 1 };
    let a_min = family.min_qx() / 2;
    let mut orbits = Vec::new();
    for b in b_min..=t / 2 {
        let mut a = a_min;
        while 2 * a * t < b * b {
            orbits.push(OrbitDescriptor::new(family, a, b).expect("enumerated parameters are valid"));
            a += 1;
        }
    }
    orbits
}

/// `(t/g) z - (b/g) e` with `g = gcd(b, t)` and `q(z) = 2a`.
pub fn canonical_representative(family: Family, a: i128, b: i128) -> Result<PicClass> {
    if !orbit_params_valid(family, a, b) {
        return Err(Error::InvalidOrbit { family, a, b });
    }
    Ok(canonical_class(family, a, b))
}

fn canonical_class(family: Family, a: i128, b: i128) -> PicClass {
    let t = family.t();
    let g = b.gcd(&t);
    PicClass::new(t / g, -b / g, a, family)
}

/// Result of moving a class by monodromy into the form `r*x - b_norm*e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalizedClass {
    /// `gcd(f, t)`, the divisibility of the class.
    pub r: i128,
    pub b_norm: i128,
    /// Square of the new reference class `x`.
    pub q_x: i128,
    /// Shift chosen so that `c - l*r` lands in `[-r/2, r/2]`.
    pub l: i128,
    pub family: Family,
}

impl NormalizedClass {
    /// `b_norm * t / r`, the `b` of the orbit parametrisation.
    pub fn theorem_b(&self) -> i128 {
        self.b_norm * (self.family.t() / self.r)
    }

    /// `r*x - b_norm*e` with `q(x) = q_x`.
    pub fn representative(&self) -> PicClass {
        PicClass::new(self.r, -self.b_norm, self.q_x / 2, self.family)
    }
}

/// Normalization without the Kummer torus-class check.
pub(crate) fn normalize_any(alpha: &PicClass) -> Result<NormalizedClass> {
    alpha.ensure_primitive()?;
    let square = alpha.bb_square();
    if square >= 0 {
        return Err(Error::NonNegativeSquare { square });
    }
    let family = alpha.family;
    let t = family.t();
    let r = alpha.f.gcd(&t);
    let m = alpha.f / r;
    let s = t / r;
    let q_y = m * m * 2 * alpha.d;

    let rem = alpha.c.mod_floor(&r);
    let b_prime = if 2 * rem > r { rem - r } else { rem };
    let l = (alpha.c - b_prime) / r;
    let q_x = q_y + t * l * l - 2 * alpha.c * l * s;

    Ok(NormalizedClass { r, b_norm: b_prime.abs(), q_x, l, family })
}

pub fn normalize(alpha: &PicClass) -> Result<NormalizedClass> {
    let norm = normalize_any(alpha)?;
    if !norm.family.is_k3() && norm.b_norm == 0 {
        return Err(Error::TorusClass);
    }
    Ok(norm)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotMbmReason {
    /// `q(x)` of the normalized form is below the family threshold.
    BelowThreshold { q_x: i128, threshold: i128 },
    /// Kummer class with trivial discriminant image.
    TorusClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Mbm { orbit: OrbitDescriptor, normalized: NormalizedClass },
    NotMbm { reason: NotMbmReason, normalized: NormalizedClass },
    NonNegativeSquare { square: i128 },
}

impl Classification {
    pub fn is_mbm(&self) -> bool {
        matches!(self, Classification::Mbm { .. })
    }

    pub fn orbit(&self) -> Option<&OrbitDescriptor> {
        match self {
            Classification::Mbm { orbit, .. } => Some(orbit),
            _ => None,
        }
    }
}

pub fn classify(alpha: &PicClass) -> Result<Classification> {
    alpha.ensure_primitive()?;
    let square = alpha.bb_square();
    if square >= 0 {
        return Ok(Classification::NonNegativeSquare { square });
    }
    let normalized = normalize_any(alpha)?;
    let family = alpha.family;
    if !family.is_k3() && normalized.b_norm == 0 {
        return Ok(Classification::NotMbm { reason: NotMbmReason::TorusClass, normalized });
    }
    let threshold = family.min_qx();
    if normalized.q_x < threshold {
        return Ok(Classification::NotMbm {
            reason: NotMbmReason::BelowThreshold { q_x: normalized.q_x, threshold },
            normalized,
        });
    }
    let a = normalized.q_x / 2;
    let b = normalized.theorem_b();
    let orbit = OrbitDescriptor::new(family, a, b).map_err(|_| {
        Error::Inconsistency(format!(
            "class {alpha} normalizes to (a, b) = ({a}, {b}), which fails the orbit inequalities"
        ))
    })?;
    Ok(Classification::Mbm { orbit, normalized })
}

pub fn same_orbit(alpha: &PicClass, beta: &PicClass) -> Result<bool> {
    if alpha.family != beta.family {
        return Err(Error::LatticeMismatch {
            left: alpha.family,
            left_d: alpha.d,
            right: beta.family,
            right_d: beta.d,
        });
    }
    Ok(alpha.bb_square() == beta.bb_square() && alpha.delta()?.signed_rep() == beta.delta()?.signed_rep())
}
