mod common;

use std::collections::{BTreeSet, HashSet};

use mbm_core::curve::{gonality_lower_bound, pencil_degree_range};
use mbm_core::{
    bridge_scan, classify, enumerate_mbm_orbits, extremal_qhat, genus_bound, realize_orbit, AbstractMukaiVector,
    BridgeBounds, Family, RealizationKind, ScanWindow,
};

fn families(max_n: i64) -> impl Iterator<Item = Family> {
    (2..=max_n).flat_map(|n| [Family::k3(n).unwrap(), Family::kummer(n).unwrap()])
}

#[test]
fn enumeration_matches_brute_force_grid() {
    for fam in families(20) {
        let got: Vec<_> = enumerate_mbm_orbits(fam).iter().map(|o| (o.a, o.b)).collect();
        assert_eq!(got, common::brute_force_orbits(fam), "{fam}");
    }
}

#[test]
fn orbit_invariants_are_injective() {
    for fam in families(20) {
        let orbits = enumerate_mbm_orbits(fam);
        let keys: HashSet<_> = orbits.iter().map(|o| (o.q_hat, o.delta_abs)).collect();
        assert_eq!(keys.len(), orbits.len(), "{fam}");
    }
}

#[test]
fn canonical_representatives_round_trip() {
    for fam in families(20) {
        for o in enumerate_mbm_orbits(fam) {
            let rep = o.canonical_rep;
            assert!(rep.is_primitive());
            let back = *classify(&rep).unwrap().orbit().unwrap();
            assert_eq!(back, o, "{fam}");
            // the oracle sees the same orbit
            assert_eq!(common::theorem_orbit(fam, rep.f, rep.c, rep.d), Some((o.a, o.b)));
            let (_, delta_abs, q_hat) = common::invariants(fam, rep.f, rep.c, rep.d);
            assert_eq!((q_hat, delta_abs), (o.q_hat, o.delta_abs));
        }
    }
}

#[test]
fn extremal_bound_is_attained() {
    for fam in families(50) {
        let min = enumerate_mbm_orbits(fam).iter().map(|o| o.q_hat).min().unwrap();
        assert_eq!(min, extremal_qhat(fam), "{fam}");
    }
}

#[test]
fn curve_realizations_are_feasible() {
    for fam in families(20) {
        let n = i128::from(fam.n());
        let (k_min, k_max) = pencil_degree_range(fam);
        let orbits = enumerate_mbm_orbits(fam);
        for o in &orbits {
            let real = realize_orbit(fam, o).unwrap();
            assert!(real.genus <= genus_bound(fam));
            assert_eq!(real.fiber_dim, real.codimension(fam));
            assert_eq!(real.homology_class.square(), o.q_hat);
            match real.kind {
                RealizationKind::Pencil => {
                    assert!((k_min..=k_max).contains(&real.k));
                    assert!(real.k > 2 * real.genus - 2);
                    assert!(real.k >= gonality_lower_bound(real.genus));
                    assert_eq!(real.locus_dim, 2 * n - real.k + real.genus);
                }
                RealizationKind::ExceptionalFiber => assert!(o.is_exceptional()),
            }
        }
        let extremal = orbits.iter().min_by_key(|o| o.q_hat).unwrap();
        let real = realize_orbit(fam, extremal).unwrap();
        let expected = if fam.is_k3() { (0, n) } else { (1, n + 1) };
        assert_eq!((real.genus, real.k), expected, "{fam}");
    }
}

#[test]
fn mukai_round_trip() {
    for fam in families(10) {
        for o in enumerate_mbm_orbits(fam) {
            for u in -5..=5 {
                let wall = AbstractMukaiVector::from_orbit(fam, o.a, o.b, u).unwrap();
                assert!(wall.is_wall());
                assert_eq!(wall.to_orbit().unwrap(), Some((o.a, o.b)));
            }
        }
    }
}

#[test]
fn mukai_scan_reaches_exactly_the_orbits() {
    for fam in families(10) {
        let report = bridge_scan(fam, BridgeBounds::standard(fam)).unwrap();
        assert!(report.matches(), "{fam}: unreached {:?}, unexpected {:?}", report.unreached(), report.unexpected());
        for &(a, b) in &report.from_walls {
            let o = enumerate_mbm_orbits(fam).into_iter().find(|o| (o.a, o.b) == (a, b)).unwrap();
            assert_eq!(mbm_core::orbit::q_hat(fam, a, b), o.q_hat);
        }
    }
}

#[test]
fn wall_scan_matches_wider_oracle_scan() {
    let fam = Family::k3(2).unwrap();
    let bound = 10;
    let walls = mbm_core::scan_walls(fam, 1, &ScanWindow::full(bound).unwrap()).unwrap();
    let got: BTreeSet<_> = walls.iter().map(|w| (w.slope(), w.source.f, w.source.c, w.orbit.a, w.orbit.b)).collect();
    let oracle: BTreeSet<_> = common::brute_force_walls(fam, 1, 3 * bound)
        .into_iter()
        .filter(|&(_, f, c, _, _)| f.abs() <= bound && c.abs() <= bound)
        .collect();
    assert_eq!(got, oracle);
}

#[test]
fn wall_scan_matches_oracle_on_other_lattices() {
    for (fam, d, bound) in [
        (Family::k3(3).unwrap(), 1, 12),
        (Family::k3(5).unwrap(), 3, 12),
        (Family::kummer(2).unwrap(), 1, 12),
        (Family::kummer(4).unwrap(), 5, 10),
    ] {
        let walls = mbm_core::scan_walls(fam, d, &ScanWindow::full(bound).unwrap()).unwrap();
        let got: BTreeSet<_> =
            walls.iter().map(|w| (w.slope(), w.source.f, w.source.c, w.orbit.a, w.orbit.b)).collect();
        let oracle: BTreeSet<_> = common::brute_force_walls(fam, d, bound).into_iter().collect();
        assert_eq!(got, oracle, "{fam} d={d}");
        let slopes: HashSet<_> = walls.iter().map(|w| w.slope()).collect();
        assert_eq!(slopes.len(), walls.len());
    }
}
