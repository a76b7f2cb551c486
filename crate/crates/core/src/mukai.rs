//! Walls of the positive cone coming from Mukai vectors.
//!
//! The moduli space is fixed by `v = (1, 0, 1-n)` (K3 type) or
//! `v = (1, 0, -1-n)` (Kummer type), so that `v^2 = t`. A Mukai vector
//! `a = (u, kappa, s)` is recorded only through `u`, `kappa^2` and `s`,
//! which is all the pairings below depend on. With the Mukai pairing
//! `(r1, k1, s1).(r2, k2, s2) = k1.k2 - r1 s2 - r2 s1`:
//!
//! * `a^2 = kappa^2 - 2us`
//! * `(v, a) = tu/2 - s`
//! * `(a, e) = -s - tu/2` for `e = (1, 0, n-1)` (resp. `(1, 0, n+1)`).
//!
//! The projection of `a` to `v^perp` is `t*kappa - (a, e)*e`, which lies in
//! the same monodromy orbit as `t*x - b*e` with `q(x) = a^2` and
//! `b = (v, a)`.

use std::collections::BTreeSet;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{Family, PicClass};
use crate::orbit::{enumerate_mbm_orbits, orbit_params_valid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AbstractMukaiVector {
    /// Rank component.
    pub u: i128,
    /// Self-intersection of the NS component; always even.
    pub kappa_sq: i128,
    /// Degree component.
    pub s: i128,
    pub family: Family,
}

impl AbstractMukaiVector {
    pub fn new(u: i128, kappa_sq: i128, s: i128, family: Family) -> Result<Self> {
        if kappa_sq % 2 != 0 {
            return Err(Error::OddKappaSquare(kappa_sq));
        }
        Ok(AbstractMukaiVector { u, kappa_sq, s, family })
    }

    pub fn square(&self) -> i128 {
        self.kappa_sq - 2 * self.u * self.s
    }

    pub fn pairing_with_v(&self) -> i128 {
        self.family.t() * self.u / 2 - self.s
    }

    pub fn pairing_with_e(&self) -> i128 {
        -self.s - self.family.t() * self.u / 2
    }

    /// Membership in the wall set of the moduli space.
    pub fn is_wall(&self) -> bool {
        let t = self.family.t();
        let pv = self.pairing_with_v();
        if self.family.is_k3() {
            self.square() >= -2 && 0 <= pv && 2 * pv <= t
        } else {
            self.square() >= 0 && 0 < pv && 2 * pv <= t
        }
    }

    /// Orbit parameters `(a, b)` of the projection to `v^perp`, or `None`
    /// when the projection has non-negative square and cuts no wall.
    pub fn to_orbit(&self) -> Result<Option<(i128, i128)>> {
        if !self.is_wall() {
            return Err(Error::NotAWall { u: self.u, kappa_sq: self.kappa_sq, s: self.s });
        }
        let a = self.square() / 2;
        let b = self.pairing_with_v();
        if 2 * a * self.family.t() >= b * b {
            return Ok(None);
        }
        if !orbit_params_valid(self.family, a, b) {
            return Err(Error::Inconsistency(format!(
                "wall vector {self:?} projects to invalid orbit ({a}, {b})"
            )));
        }
        Ok(Some((a, b)))
    }

    /// Wall vector `(u, kappa, tu/2 - b)` with `kappa^2 = 2a + 2u(tu/2 - b)`.
    pub fn from_orbit(family: Family, a: i128, b: i128, u: i128) -> Result<Self> {
        if !orbit_params_valid(family, a, b) {
            return Err(Error::InvalidOrbit { family, a, b });
        }
        let s = family.t() * u / 2 - b;
        AbstractMukaiVector::new(u, 2 * a + 2 * u * s, s, family)
    }

    /// Primitive class proportional to the projection `t*kappa - (a, e)*e`,
    /// written in the lattice `<kappa> + <e>` with `kappa` primitive.
    pub fn projection(&self) -> PicClass {
        let t = self.family.t();
        let c = -self.pairing_with_e();
        let g = t.gcd(&c);
        PicClass::new(t / g, c / g, self.kappa_sq / 2, self.family)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BridgeBounds {
    pub u: i128,
    pub s: i128,
    /// Bound on `|kappa^2|`.
    pub kappa_sq: i128,
}

impl BridgeBounds {
    /// `|u| <= 5`, `|s| <= 5t`, `|kappa^2| <= 8 t^2`.
    pub fn standard(family: Family) -> Self {
        let t = family.t();
        BridgeBounds { u: 5, s: 5 * t, kappa_sq: 8 * t * t }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeReport {
    pub family: Family,
    pub bounds: BridgeBounds,
    /// Orbits reached from wall vectors inside the bounds.
    pub from_walls: BTreeSet<(i128, i128)>,
    /// Orbits from the classification.
    pub enumerated: BTreeSet<(i128, i128)>,
    /// Wall vectors scanned.
    pub walls_seen: u64,
    /// Wall vectors whose projection has non-negative square.
    pub filtered: u64,
}

impl BridgeReport {
    pub fn matches(&self) -> bool {
        self.from_walls == self.enumerated
    }

    /// Orbits produced by walls but missing from the enumeration.
    pub fn unexpected(&self) -> Vec<(i128, i128)> {
        self.from_walls.difference(&self.enumerated).copied().collect()
    }

    /// Enumerated orbits that no wall inside the bounds reached.
    pub fn unreached(&self) -> Vec<(i128, i128)> {
        self.enumerated.difference(&self.from_walls).copied().collect()
    }
}

/// Orbits reached by one `u` slice, with counts of walls seen and filtered.
type Shard = (BTreeSet<(i128, i128)>, u64, u64);

/// Push every wall vector inside `bounds` through [`AbstractMukaiVector::to_orbit`]
/// and compare with the enumerated orbits.
pub fn bridge_scan(family: Family, bounds: BridgeBounds) -> Result<BridgeReport> {
    let kappa_max = bounds.kappa_sq - bounds.kappa_sq.rem_euclid(2);
    let shards: Vec<Result<Shard>> = (-bounds.u..=bounds.u)
        .into_par_iter()
        .map(|u| {
            let mut found = BTreeSet::new();
            let (mut seen, mut filtered) = (0u64, 0u64);
            for s in -bounds.s..=bounds.s {
                let mut kappa_sq = -kappa_max;
                while kappa_sq <= kappa_max {
                    let vector = AbstractMukaiVector { u, kappa_sq, s, family };
                    if vector.is_wall() {
                        seen += 1;
                        match vector.to_orbit()? {
                            Some(ab) => {
                                found.insert(ab);
                            }
                            None => filtered += 1,
                        }
                    }
                    kappa_sq += 2;
                }
            }
            Ok((found, seen, filtered))
        })
        .collect();

    let mut from_walls = BTreeSet::new();
    let (mut walls_seen, mut filtered) = (0, 0);
    for shard in shards {
        let (found, seen, skip) = shard?;
        from_walls.extend(found);
        walls_seen += seen;
        filtered += skip;
    }
    let enumerated = enumerate_mbm_orbits(family).iter().map(|o| (o.a, o.b)).collect();
    Ok(BridgeReport { family, bounds, from_walls, enumerated, walls_seen, filtered })
}
