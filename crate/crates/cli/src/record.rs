//! Serializable output records.
//!
//! Every command emits one [`OutputRecord`]. Rationals are always written
//! as reduced `{num, den}` pairs with `den > 0`; field order follows the
//! struct declarations so output is byte-stable.

use std::collections::BTreeSet;

use mbm_core::{
    Chamber, Classification, CurveRealization, DiscriminantElement, DualClass, Family, NormalizedClass,
    NotMbmReason, OrbitDescriptor, PicClass, Rational, ScanWindow, WallRay,
};
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RationalOut {
    pub num: i128,
    pub den: i128,
}

impl From<Rational> for RationalOut {
    fn from(r: Rational) -> Self {
        // Ratio keeps itself reduced with a positive denominator.
        RationalOut { num: *r.numer(), den: *r.denom() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyOut {
    pub kind: &'static str,
    pub n: i64,
}

impl From<Family> for FamilyOut {
    fn from(f: Family) -> Self {
        FamilyOut { kind: f.kind().as_str(), n: f.n() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub family: FamilyOut,
    pub payload: Payload,
}

impl OutputRecord {
    pub fn new(command: &'static str, family: Family, payload: Payload) -> Self {
        OutputRecord { schema_version: SCHEMA_VERSION, command, family: family.into(), payload }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("records always serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Enumerate(EnumeratePayload),
    Classify(ClassifyPayload),
    Walls(WallsPayload),
    BmCheck(BmCheckPayload),
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassOut {
    pub f: i128,
    pub c: i128,
    pub d: i128,
    pub square: i128,
}

impl From<&PicClass> for ClassOut {
    fn from(a: &PicClass) -> Self {
        ClassOut { f: a.f, c: a.c, d: a.d, square: a.bb_square() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DualOut {
    pub f_hat: RationalOut,
    pub c_hat: RationalOut,
    pub square: RationalOut,
}

impl From<&DualClass> for DualOut {
    fn from(d: &DualClass) -> Self {
        DualOut { f_hat: d.f_hat.into(), c_hat: d.c_hat.into(), square: d.square().into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveOut {
    pub kind: &'static str,
    pub genus: i128,
    pub k: i128,
    pub r: i128,
    pub b_norm: i128,
    pub homology_class: DualOut,
    pub locus_dim: i128,
    pub fiber_dim: i128,
}

impl From<&CurveRealization> for CurveOut {
    fn from(c: &CurveRealization) -> Self {
        CurveOut {
            kind: c.kind.as_str(),
            genus: c.genus,
            k: c.k,
            r: c.r,
            b_norm: c.b_norm,
            homology_class: (&c.homology_class).into(),
            locus_dim: c.locus_dim,
            fiber_dim: c.fiber_dim,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitOut {
    pub a: i128,
    pub b: i128,
    pub q_hat: RationalOut,
    pub delta_abs: i128,
    pub canonical_rep: ClassOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveOut>,
}

impl OrbitOut {
    pub fn new(o: &OrbitDescriptor, curve: Option<&CurveRealization>) -> Self {
        OrbitOut {
            a: o.a,
            b: o.b,
            q_hat: o.q_hat.into(),
            delta_abs: o.delta_abs,
            canonical_rep: (&o.canonical_rep).into(),
            curve: curve.map(Into::into),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumeratePayload {
    pub orbit_count: usize,
    pub extremal_q_hat: RationalOut,
    pub genus_bound: i128,
    pub orbits: Vec<OrbitOut>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaOut {
    pub value: i128,
    pub modulus: i128,
    pub signed_rep: i128,
}

impl From<DiscriminantElement> for DeltaOut {
    fn from(d: DiscriminantElement) -> Self {
        DeltaOut { value: d.value(), modulus: d.modulus(), signed_rep: d.signed_rep() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalizationOut {
    pub r: i128,
    pub b_norm: i128,
    pub q_x: i128,
    pub l: i128,
    pub theorem_b: i128,
    pub representative: ClassOut,
}

impl From<&NormalizedClass> for NormalizationOut {
    fn from(n: &NormalizedClass) -> Self {
        NormalizationOut {
            r: n.r,
            b_norm: n.b_norm,
            q_x: n.q_x,
            l: n.l,
            theorem_b: n.theorem_b(),
            representative: (&n.representative()).into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyPayload {
    pub class: ClassOut,
    pub divisibility: i128,
    pub delta: DeltaOut,
    pub q_hat: RationalOut,
    pub verdict: &'static str,
    pub reason: Option<&'static str>,
    pub normalization: Option<NormalizationOut>,
    pub orbit: Option<OrbitOut>,
}

impl ClassifyPayload {
    pub fn new(
        alpha: &PicClass,
        divisibility: i128,
        delta: DiscriminantElement,
        q_hat: Rational,
        verdict: &Classification,
    ) -> Self {
        let (verdict_str, reason, normalization, orbit) = match verdict {
            Classification::Mbm { orbit, normalized } => {
                ("mbm", None, Some(normalized.into()), Some(OrbitOut::new(orbit, None)))
            }
            Classification::NotMbm { reason, normalized } => {
                let reason = match reason {
                    NotMbmReason::BelowThreshold { .. } => "below_threshold",
                    NotMbmReason::TorusClass => "torus_class",
                };
                ("not_mbm", Some(reason), Some(normalized.into()), None)
            }
            Classification::NonNegativeSquare { .. } => ("non_negative_square", None, None, None),
        };
        ClassifyPayload {
            class: alpha.into(),
            divisibility,
            delta: delta.into(),
            q_hat: q_hat.into(),
            verdict: verdict_str,
            reason,
            normalization,
            orbit,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorOut {
    pub p: i128,
    pub q: i128,
}

#[derive(Debug, Clone, Serialize)]
pub struct WallOrbitOut {
    pub a: i128,
    pub b: i128,
    pub q_hat: RationalOut,
    pub delta_abs: i128,
}

#[derive(Debug, Clone, Serialize)]
pub struct WallOut {
    pub slope: RationalOut,
    pub generator: GeneratorOut,
    pub source: ClassOut,
    pub orbit: WallOrbitOut,
}

impl From<&WallRay> for WallOut {
    fn from(w: &WallRay) -> Self {
        WallOut {
            slope: w.slope().into(),
            generator: GeneratorOut { p: w.generator.0, q: w.generator.1 },
            source: (&w.source).into(),
            orbit: WallOrbitOut { a: w.orbit.a, b: w.orbit.b, q_hat: w.orbit.q_hat.into(), delta_abs: w.orbit.delta_abs },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WindowOut {
    pub slope_lo: Option<RationalOut>,
    pub slope_hi: Option<RationalOut>,
    pub coeff_bound: i128,
}

impl From<&ScanWindow> for WindowOut {
    fn from(w: &ScanWindow) -> Self {
        WindowOut { slope_lo: w.slope_lo.map(Into::into), slope_hi: w.slope_hi.map(Into::into), coeff_bound: w.coeff_bound }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CompletenessOut {
    pub complete_within_bound: i128,
    pub note: &'static str,
}

pub const COMPLETENESS_NOTE: &str =
    "complete only within the scan bound: walls with source coefficients above coeff_bound are not listed";

#[derive(Debug, Clone, Serialize)]
pub struct ChamberOut {
    pub probe: ClassOut,
    pub probe_slope: RationalOut,
    pub lower: Option<WallOut>,
    pub upper: Option<WallOut>,
    pub on_wall: bool,
    pub completeness: CompletenessOut,
}

impl ChamberOut {
    pub fn new(probe: &PicClass, chamber: &Chamber) -> Self {
        ChamberOut {
            probe: probe.into(),
            probe_slope: Rational::new(probe.c, probe.f).into(),
            lower: chamber.lower.as_ref().map(Into::into),
            upper: chamber.upper.as_ref().map(Into::into),
            on_wall: chamber.on_wall,
            completeness: CompletenessOut { complete_within_bound: chamber.complete_within_bound, note: COMPLETENESS_NOTE },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WallsPayload {
    pub d: i128,
    pub window: WindowOut,
    pub completeness: CompletenessOut,
    pub wall_count: usize,
    pub walls: Vec<WallOut>,
    pub chamber: Option<ChamberOut>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct OrbitKey {
    pub a: i128,
    pub b: i128,
}

fn keys(set: impl IntoIterator<Item = (i128, i128)>) -> Vec<OrbitKey> {
    set.into_iter().map(|(a, b)| OrbitKey { a, b }).collect::<BTreeSet<_>>().into_iter().collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsOut {
    pub u: i128,
    pub s: i128,
    pub kappa_sq: i128,
}

#[derive(Debug, Clone, Serialize)]
pub struct BmCheckPayload {
    pub bounds: BoundsOut,
    pub walls_scanned: u64,
    pub filtered_non_negative: u64,
    pub wall_orbits: Vec<OrbitKey>,
    pub enumerated_orbits: Vec<OrbitKey>,
    pub unreached: Vec<OrbitKey>,
    pub unexpected: Vec<OrbitKey>,
    #[serde(rename = "match")]
    pub matched: bool,
}

impl From<&mbm_core::BridgeReport> for BmCheckPayload {
    fn from(r: &mbm_core::BridgeReport) -> Self {
        BmCheckPayload {
            bounds: BoundsOut { u: r.bounds.u, s: r.bounds.s, kappa_sq: r.bounds.kappa_sq },
            walls_scanned: r.walls_seen,
            filtered_non_negative: r.filtered,
            wall_orbits: keys(r.from_walls.iter().copied()),
            enumerated_orbits: keys(r.enumerated.iter().copied()),
            unreached: keys(r.unreached()),
            unexpected: keys(r.unexpected()),
            matched: r.matches(),
        }
    }
}

pub const WALLS_CSV_HEADER: &str = "slope_num,slope_den,source_f,source_c,orbit_a,orbit_b";
pub const ORBITS_CSV_HEADER: &str =
    "a,b,q_hat_num,q_hat_den,delta_abs,rep_f,rep_c,rep_d,curve_kind,genus,k,locus_dim,fiber_dim";

pub fn walls_csv(walls: &[WallRay]) -> String {
    let mut out = String::from(WALLS_CSV_HEADER);
    out.push('\n');
    for w in walls {
        let slope = w.slope();
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            slope.numer(),
            slope.denom(),
            w.source.f,
            w.source.c,
            w.orbit.a,
            w.orbit.b
        ));
    }
    out
}

pub fn orbits_csv(rows: &[(OrbitDescriptor, CurveRealization)]) -> String {
    let mut out = String::from(ORBITS_CSV_HEADER);
    out.push('\n');
    for (o, c) in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            o.a,
            o.b,
            o.q_hat.numer(),
            o.q_hat.denom(),
            o.delta_abs,
            o.canonical_rep.f,
            o.canonical_rep.c,
            o.canonical_rep.d,
            c.kind.as_str(),
            c.genus,
            c.k,
            c.locus_dim,
            c.fiber_dim
        ));
    }
    out
}
