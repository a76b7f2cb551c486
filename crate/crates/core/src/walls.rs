//! MBM walls in the positive cone of a rank-2 Picard lattice `<x> + <e>`.
//!
//! A ray `p*x + q*e` (with `p > 0`) is identified with its slope `q/p`.
//! For `d > 0` the positive cone is `2d p^2 > t q^2` and every negative
//! class `alpha = f*x + c*e` has orthogonal ray `(t c, 2d f)` inside it.
//! Walls accumulate towards the boundary of the cone, so a scan is only
//! complete relative to its coefficient bound.

use std::cmp::Ordering;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{Family, PicClass};
use crate::orbit::{classify, Classification, OrbitDescriptor};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WallRay {
    /// Primitive `(p, q)` with `p > 0` spanning the ray `p*x + q*e`.
    pub generator: (i128, i128),
    /// Sign-normalized MBM class orthogonal to the ray.
    pub source: PicClass,
    pub orbit: OrbitDescriptor,
}

impl WallRay {
    pub fn slope(&self) -> Rational {
        Rational::new(self.generator.1, self.generator.0)
    }

    pub fn generator_class(&self) -> PicClass {
        PicClass::new(self.generator.0, self.generator.1, self.source.d, self.source.family)
    }
}

/// Bounds on the ray slope `q/p` (`None` leaves a side open) and on the
/// source coefficients `|f|, |c|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanWindow {
    pub slope_lo: Option<Rational>,
    pub slope_hi: Option<Rational>,
    pub coeff_bound: i128,
}

impl ScanWindow {
    pub fn new(slope_lo: Option<Rational>, slope_hi: Option<Rational>, coeff_bound: i128) -> Result<Self> {
        let window = ScanWindow { slope_lo, slope_hi, coeff_bound };
        window.validate()?;
        Ok(window)
    }

    /// The whole positive cone.
    pub fn full(coeff_bound: i128) -> Result<Self> {
        Self::new(None, None, coeff_bound)
    }

    fn validate(&self) -> Result<()> {
        if self.coeff_bound < 1 {
            return Err(Error::EmptyWindow(format!("coefficient bound {} < 1", self.coeff_bound)));
        }
        if let (Some(lo), Some(hi)) = (self.slope_lo, self.slope_hi) {
            if lo >= hi {
                return Err(Error::EmptyWindow(format!("slope range [{lo}, {hi}] is empty")));
            }
        }
        Ok(())
    }

    pub fn contains_slope(&self, slope: Rational) -> bool {
        self.slope_lo.is_none_or(|lo| lo <= slope) && self.slope_hi.is_none_or(|hi| slope <= hi)
    }
}

/// Orient a source so that `f > 0`, or `f = 0` and `c > 0`.
fn is_sign_normalized(f: i128, c: i128) -> bool {
    f > 0 || (f == 0 && c > 0)
}

/// Primitive generator of the ray orthogonal to `alpha`, oriented by `x`.
/// `None` when the orthogonal line misses the positive cone.
pub fn orthogonal_ray(alpha: &PicClass) -> Option<(i128, i128)> {
    if alpha.d <= 0 || alpha.bb_square() >= 0 {
        return None;
    }
    let (mut p, mut q) = (alpha.family.t() * alpha.c, 2 * alpha.d * alpha.f);
    let g = p.gcd(&q);
    p /= g;
    q /= g;
    if p < 0 {
        p = -p;
        q = -q;
    }
    Some((p, q))
}

fn wall_for(family: Family, d: i128, f: i128, c: i128, window: &ScanWindow) -> Result<Option<WallRay>> {
    if !is_sign_normalized(f, c) || f.gcd(&c) != 1 {
        return Ok(None);
    }
    let source = PicClass::new(f, c, d, family);
    if source.bb_square() >= 0 {
        return Ok(None);
    }
    let Classification::Mbm { orbit, .. } = classify(&source)? else {
        return Ok(None);
    };
    let Some(generator) = orthogonal_ray(&source) else {
        return Ok(None);
    };
    let wall = WallRay { generator, source, orbit };
    Ok(window.contains_slope(wall.slope()).then_some(wall))
}

/// Classify every primitive class with `|f|, |c| <= coeff_bound` and
/// collect the walls of the MBM ones inside the window, sorted by slope.
///
/// For `d <= 0` classification still runs but no ray reaches the positive
/// cone, so the result is empty.
pub fn scan_walls(family: Family, d: i128, window: &ScanWindow) -> Result<Vec<WallRay>> {
    window.validate()?;
    let bound = window.coeff_bound;
    let per_f: Vec<Result<Vec<WallRay>>> = (0..=bound)
        .into_par_iter()
        .map(|f| {
            let mut found = Vec::new();
            for c in -bound..=bound {
                if let Some(wall) = wall_for(family, d, f, c, window)? {
                    found.push(wall);
                }
            }
            Ok(found)
        })
        .collect();
    let mut walls = Vec::new();
    for chunk in per_f {
        walls.extend(chunk?);
    }
    walls.sort_by_key(WallRay::slope);
    walls.dedup_by(|a, b| a.generator == b.generator);
    Ok(walls)
}

/// Walls adjacent to a probe class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    /// Closest wall with slope `<=` the probe slope.
    pub lower: Option<WallRay>,
    /// Closest wall with slope `>` the probe slope.
    pub upper: Option<WallRay>,
    /// The probe spans the lower wall itself.
    pub on_wall: bool,
    /// The answer only accounts for walls with source coefficients up to this bound.
    pub complete_within_bound: i128,
}

pub fn chamber_of(family: Family, d: i128, probe: &PicClass, window: &ScanWindow) -> Result<Chamber> {
    if d <= 0 {
        return Err(Error::NoPositiveCone { d });
    }
    if probe.family != family || probe.d != d {
        return Err(Error::LatticeMismatch { left: family, left_d: d, right: probe.family, right_d: probe.d });
    }
    if probe.bb_square() <= 0 || probe.f <= 0 {
        return Err(Error::OutsidePositiveCone { f: probe.f, c: probe.c });
    }
    let walls = scan_walls(family, d, window)?;
    let slope = Rational::new(probe.c, probe.f);
    let split = walls.partition_point(|w| w.slope() <= slope);
    let lower = split.checked_sub(1).map(|i| walls[i]);
    let upper = walls.get(split).copied();
    let on_wall = lower.is_some_and(|w| w.slope().cmp(&slope) == Ordering::Equal);
    Ok(Chamber { lower, upper, on_wall, complete_within_bound: window.coeff_bound })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_2() -> Family {
        Family::k3(2).unwrap()
    }

    #[test]
    fn k3_n2_d1_walls() {
        let walls = scan_walls(k3_2(), 1, &ScanWindow::full(10).unwrap()).unwrap();
        let gens: Vec<_> = walls.iter().map(|w| w.generator).collect();
        assert_eq!(gens, vec![(3, -2), (1, 0), (3, 2)]);
        let sources: Vec<_> = walls.iter().map(|w| (w.source.f, w.source.c)).collect();
        assert_eq!(sources, vec![(2, -3), (0, 1), (2, 3)]);
        assert_eq!((walls[0].orbit.a, walls[0].orbit.b), (-1, 1));
        for w in &walls {
            assert_eq!(w.generator_class().bb_pairing(&w.source).unwrap(), 0);
            assert!(w.generator_class().bb_square() > 0);
        }
    }

    #[test]
    fn window_restricts_slopes() {
        let window = ScanWindow::new(Some(Rational::new(-1, 2)), Some(Rational::from_integer(1)), 10).unwrap();
        let walls = scan_walls(k3_2(), 1, &window).unwrap();
        let gens: Vec<_> = walls.iter().map(|w| w.generator).collect();
        assert_eq!(gens, vec![(1, 0), (3, 2)]);
    }

    #[test]
    fn empty_windows_rejected() {
        assert!(matches!(ScanWindow::full(0), Err(Error::EmptyWindow(_))));
        let half = Rational::new(1, 2);
        assert!(ScanWindow::new(Some(half), Some(half), 3).is_err());
    }

    #[test]
    fn non_positive_d_yields_no_walls() {
        assert!(scan_walls(k3_2(), -1, &ScanWindow::full(6).unwrap()).unwrap().is_empty());
        assert!(scan_walls(k3_2(), 0, &ScanWindow::full(6).unwrap()).unwrap().is_empty());
        let probe = PicClass::new(1, 0, 0, k3_2());
        assert_eq!(
            chamber_of(k3_2(), 0, &probe, &ScanWindow::full(6).unwrap()),
            Err(Error::NoPositiveCone { d: 0 })
        );
    }

    #[test]
    fn chamber_examples() {
        let window = ScanWindow::full(10).unwrap();
        let probe = PicClass::new(4, -1, 1, k3_2());
        let ch = chamber_of(k3_2(), 1, &probe, &window).unwrap();
        assert_eq!(ch.lower.unwrap().generator, (3, -2));
        assert_eq!(ch.upper.unwrap().generator, (1, 0));
        assert!(!ch.on_wall);
        assert_eq!(ch.complete_within_bound, 10);

        let probe = PicClass::new(1, 0, 1, k3_2());
        let ch = chamber_of(k3_2(), 1, &probe, &window).unwrap();
        assert!(ch.on_wall);
        assert_eq!(ch.lower.unwrap().generator, (1, 0));
        assert_eq!(ch.upper.unwrap().generator, (3, 2));

        let bad = PicClass::new(1, 2, 1, k3_2());
        assert!(matches!(chamber_of(k3_2(), 1, &bad, &window), Err(Error::OutsidePositiveCone { .. })));
        let flipped = PicClass::new(-4, 1, 1, k3_2());
        assert!(chamber_of(k3_2(), 1, &flipped, &window).is_err());
    }

    #[test]
    fn kummer_walls_are_mbm() {
        let fam = Family::kummer(2).unwrap();
        let walls = scan_walls(fam, 1, &ScanWindow::full(10).unwrap()).unwrap();
        assert!(!walls.is_empty());
        for w in walls {
            assert!(classify(&w.source).unwrap().is_mbm());
        }
    }
}
