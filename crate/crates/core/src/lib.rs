//! Exact classification of MBM classes on hyperkähler manifolds of
//! `K3^[n]` and generalized Kummer deformation type.
//!
//! A primitive class `alpha` of negative Beauville-Bogomolov square is MBM
//! (its orthogonal hyperplane supports a wall of the Kähler cone of some
//! birational model) according to two integers `(a, b)`: `b = +-delta(alpha)`
//! is its image in the discriminant group and `q(alpha_hat) = 2a - b^2/t`.
//! The crate
//!
//! * enumerates all MBM monodromy orbits of a family ([`orbit`]),
//! * decides MBM-ness of a concrete class by monodromy normalization,
//! * realizes each orbit by a rational curve and tracks the dimensions of
//!   its locus ([`curve`]),
//! * translates between orbits and walls given by Mukai vectors ([`mukai`]),
//! * scans walls of the positive cone of a rank-2 Picard lattice ([`walls`]).
//!
//! All arithmetic is exact: integers are `i128`, rationals are
//! [`Rational`] (`Ratio<i128>`).
//!
//! ```
//! use mbm_core::{classify, enumerate_mbm_orbits, Family, PicClass};
//!
//! let fam = Family::k3(2).unwrap();
//! assert_eq!(enumerate_mbm_orbits(fam).len(), 3);
//!
//! // 2x - 3e with q(x) = 2
//! let alpha = PicClass::new(2, -3, 1, fam);
//! let orbit = *classify(&alpha).unwrap().orbit().unwrap();
//! assert_eq!((orbit.a, orbit.b), (-1, 1));
//! ```

pub mod curve;
pub mod error;
pub mod lattice;
pub mod mukai;
pub mod orbit;
pub mod walls;

pub type Rational = num_rational::Ratio<i128>;

pub use curve::{extremal_qhat, genus_bound, realize_orbit, CurveRealization, RealizationKind};
pub use error::{Error, Result};
pub use lattice::{DiscriminantElement, DualClass, Family, FamilyKind, PicClass};
pub use mukai::{bridge_scan, AbstractMukaiVector, BridgeBounds, BridgeReport};
pub use orbit::{
    canonical_representative, classify, enumerate_mbm_orbits, normalize, orbit_params_valid, same_orbit,
    Classification, NormalizedClass, NotMbmReason, OrbitDescriptor,
};
pub use walls::{chamber_of, orthogonal_ray, scan_walls, Chamber, ScanWindow, WallRay};
