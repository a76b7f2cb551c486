//! Brute-force oracles that never go through the normalization code.
#![allow(dead_code)]

use mbm_core::{Family, Rational};

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Orbits from filtering the grid `a in [-1, t]`, `b in [0, t]` through the
/// stated inequalities, evaluated in rationals.
pub fn brute_force_orbits(family: Family) -> Vec<(i128, i128)> {
    let t = family.t();
    let n = i128::from(family.n());
    let mut out = Vec::new();
    for b in 0..=t {
        for a in -1..=t {
            let bound = Rational::new(b * b, 2 * (if family.is_k3() { n - 1 } else { n + 1 }));
            let two_a = Rational::from_integer(2 * a);
            let ok = if family.is_k3() {
                (0..=n - 1).contains(&b) && Rational::from_integer(-2) <= two_a && two_a < bound
            } else {
                (1..=n + 1).contains(&b) && Rational::from_integer(0) <= two_a && two_a < bound
            };
            if ok {
                out.push((a, b));
            }
        }
    }
    out.sort_by_key(|&(a, b)| (b, a));
    out
}

/// Invariants `(q(alpha), +-delta, q(alpha_hat))` of `f*x + c*e`, computed
/// from the definitions: divisibility is the gcd of the pairings with `x`
/// (which sees all of the unimodular part) and with `e`.
pub fn invariants(family: Family, f: i128, c: i128, d: i128) -> (i128, i128, Rational) {
    let t = family.t();
    let q = 2 * d * f * f - t * c * c;
    let div = gcd(f, c * t);
    let delta = (c * t / div).rem_euclid(t);
    let delta_abs = delta.min(t - delta);
    (q, delta_abs, Rational::new(q, div * div))
}

/// MBM orbit of a primitive class via the `(a, b)` characterization:
/// searches for an admissible `a` with `q(alpha_hat) = 2a - b^2/t`.
pub fn theorem_orbit(family: Family, f: i128, c: i128, d: i128) -> Option<(i128, i128)> {
    assert_eq!(gcd(f, c), 1, "oracle expects primitive input");
    let (q, b, q_hat) = invariants(family, f, c, d);
    if q >= 0 {
        return None;
    }
    let t = family.t();
    // q_hat < 0 and 2a >= -2 bound the search
    (-1..=t).find(|&a| q_hat == Rational::from_integer(2 * a) - Rational::new(b * b, t)).and_then(|a| {
        brute_force_orbits(family).contains(&(a, b)).then_some((a, b))
    })
}

/// Walls of `<2d> + <-t>` from primitive sources in `[-bound, bound]^2`,
/// as `(slope, source_f, source_c, a, b)` with the source oriented so that
/// `f > 0` or `f = 0, c > 0`.
pub fn brute_force_walls(family: Family, d: i128, bound: i128) -> Vec<(Rational, i128, i128, i128, i128)> {
    let t = family.t();
    let mut out = Vec::new();
    for f in 0..=bound {
        for c in -bound..=bound {
            if !(f > 0 || (f == 0 && c > 0)) || gcd(f, c) != 1 {
                continue;
            }
            if let Some((a, b)) = theorem_orbit(family, f, c, d) {
                // ray orthogonal to (f, c): (t c, 2 d f) up to orientation
                let (p, q) = (t * c, 2 * d * f);
                let slope = Rational::new(q, p);
                out.push((slope, f, c, a, b));
            }
        }
    }
    out.sort();
    out
}
