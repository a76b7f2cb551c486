use thiserror::Error;

use crate::lattice::Family;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension parameter n = {n} is out of range (need n >= 2)")]
    InvalidDimension { n: i64 },

    #[error("class ({f}, {c}) is not primitive")]
    NotPrimitive { f: i128, c: i128 },

    #[error("classes live in different lattices ({left} with d = {left_d} vs {right} with d = {right_d})")]
    LatticeMismatch {
        left: Family,
        left_d: i128,
        right: Family,
        right_d: i128,
    },

    #[error("class has non-negative square {square}")]
    NonNegativeSquare { square: i128 },

    /// Kummer type class whose image in the discriminant group vanishes.
    #[error("class lies in the orbit of a torus class (delta = 0) and is never MBM")]
    TorusClass,

    #[error("(a, b) = ({a}, {b}) does not describe an MBM orbit for {family}")]
    InvalidOrbit { family: Family, a: i128, b: i128 },

    #[error("Mukai vector (u = {u}, kappa^2 = {kappa_sq}, s = {s}) is not in the wall set")]
    NotAWall { u: i128, kappa_sq: i128, s: i128 },

    #[error("odd kappa^2 = {0}; the NS component must have even square")]
    OddKappaSquare(i128),

    #[error("empty scan window: {0}")]
    EmptyWindow(String),

    #[error("probe ({f}, {c}) is not in the positive cone")]
    OutsidePositiveCone { f: i128, c: i128 },

    #[error("lattice <{}> + <-t> has no positive classes oriented by x (need d > 0)", 2 * .d)]
    NoPositiveCone { d: i128 },

    /// A bound that the classification theorems guarantee was violated.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}
