//! Arithmetic in the rank-2 reference lattice `<x> + <e>`.
//!
//! `x` is a primitive class of square `2d` in the unimodular part of the
//! second cohomology and `e` is half of the exceptional divisor, with
//! `q(e) = -t`. The ambient lattice is never built explicitly: since `x` is
//! primitive in a unimodular summand, pairings against the full lattice
//! are captured by the closed forms used below.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// Deformations of the Hilbert scheme of `n` points on a K3 surface.
    K3Type,
    /// Deformations of the generalized Kummer variety `Kum^n(A)`.
    KummerType,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::K3Type => "k3",
            FamilyKind::KummerType => "kummer",
        }
    }
}

/// Deformation type together with `n`, half the complex dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    kind: FamilyKind,
    n: i64,
}

impl Family {
    pub fn new(kind: FamilyKind, n: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension { n });
        }
        Ok(Family { kind, n })
    }

    pub fn k3(n: i64) -> Result<Self> {
        Self::new(FamilyKind::K3Type, n)
    }

    pub fn kummer(n: i64) -> Result<Self> {
        Self::new(FamilyKind::KummerType, n)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Order of the discriminant group, `-q(e)`.
    pub fn t(&self) -> i128 {
        let n = i128::from(self.n);
        match self.kind {
            FamilyKind::K3Type => 2 * (n - 1),
            FamilyKind::KummerType => 2 * (n + 1),
        }
    }

    pub fn is_k3(&self) -> bool {
        self.kind == FamilyKind::K3Type
    }

    /// Smallest admissible value of `q(x)` on a normalized representative:
    /// `-2` for K3 type, `0` for Kummer type.
    pub fn min_qx(&self) -> i128 {
        match self.kind {
            FamilyKind::K3Type => -2,
            FamilyKind::KummerType => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[n={}]", self.kind.as_str(), self.n)
    }
}

/// The class `f*x + c*e` where `q(x) = 2d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PicClass {
    pub f: i128,
    pub c: i128,
    /// Half-square of the reference class `x`.
    pub d: i128,
    pub family: Family,
}

impl PicClass {
    pub fn new(f: i128, c: i128, d: i128, family: Family) -> Self {
        PicClass { f, c, d, family }
    }

    /// The class `e` of half the exceptional divisor. `d` only fixes which
    /// lattice the class lives in.
    pub fn exceptional(d: i128, family: Family) -> Self {
        PicClass::new(0, 1, d, family)
    }

    pub fn is_primitive(&self) -> bool {
        !(self.f == 0 && self.c == 0) && self.f.gcd(&self.c) == 1
    }

    pub fn ensure_primitive(&self) -> Result<()> {
        if self.is_primitive() {
            Ok(())
        } else {
            Err(Error::NotPrimitive { f: self.f, c: self.c })
        }
    }

    /// Beauville-Bogomolov square `2d f^2 - t c^2`.
    pub fn bb_square(&self) -> i128 {
        2 * self.d * self.f * self.f - self.family.t() * self.c * self.c
    }

    pub fn bb_pairing(&self, other: &PicClass) -> Result<i128> {
        self.ensure_same_lattice(other)?;
        Ok(2 * self.d * self.f * other.f - self.family.t() * self.c * other.c)
    }

    pub(crate) fn ensure_same_lattice(&self, other: &PicClass) -> Result<()> {
        if self.family != other.family || self.d != other.d {
            return Err(Error::LatticeMismatch {
                left: self.family,
                left_d: self.d,
                right: other.family,
                right_d: other.d,
            });
        }
        Ok(())
    }

    /// Positive generator of the ideal `(alpha, L)`, i.e. `gcd(f, c t)`.
    pub fn divisibility(&self) -> Result<i128> {
        self.ensure_primitive()?;
        Ok(self.f.gcd(&(self.c * self.family.t())))
    }

    /// Image of `alpha / d(alpha)` in the discriminant group `Z/tZ`,
    /// generated by `e/t`.
    pub fn delta(&self) -> Result<DiscriminantElement> {
        let div = self.divisibility()?;
        let t = self.family.t();
        Ok(DiscriminantElement::new(self.c * t / div, t))
    }

    pub fn dual_class(&self) -> Result<DualClass> {
        let div = self.divisibility()?;
        Ok(DualClass {
            f_hat: Rational::new(self.f, div),
            c_hat: Rational::new(self.c, div),
            d: self.d,
            family: self.family,
        })
    }

    /// Same class with both coefficients negated.
    pub fn negated(&self) -> Self {
        PicClass::new(-self.f, -self.c, self.d, self.family)
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x {} {}e (q(x) = {})", self.f, if self.c < 0 { '-' } else { '+' }, self.c.abs(), 2 * self.d)
    }
}

/// A rational class `f_hat*x + c_hat*e`, typically the dual `alpha / d(alpha)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DualClass {
    pub f_hat: Rational,
    pub c_hat: Rational,
    pub d: i128,
    pub family: Family,
}

impl DualClass {
    pub fn square(&self) -> Rational {
        let t = Rational::from_integer(self.family.t());
        Rational::from_integer(2 * self.d) * self.f_hat * self.f_hat - t * self.c_hat * self.c_hat
    }

    pub fn pairing(&self, class: &PicClass) -> Rational {
        let t = Rational::from_integer(self.family.t());
        Rational::from_integer(2 * self.d * class.f) * self.f_hat
            - t * Rational::from_integer(class.c) * self.c_hat
    }

    /// `e / t`, the dual of the exceptional class.
    pub fn exceptional_dual(d: i128, family: Family) -> Self {
        DualClass {
            f_hat: Rational::from_integer(0),
            c_hat: Rational::new(1, family.t()),
            d,
            family,
        }
    }
}

/// Residue class modulo `t` in the cyclic discriminant group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiscriminantElement {
    value: i128,
    t: i128,
}

impl DiscriminantElement {
    pub fn new(value: i128, t: i128) -> Self {
        DiscriminantElement { value: value.mod_floor(&t), t }
    }

    /// Residue in `[0, t)`.
    pub fn value(&self) -> i128 {
        self.value
    }

    pub fn modulus(&self) -> i128 {
        self.t
    }

    /// Representative of `+-delta` in `[0, t/2]`.
    pub fn signed_rep(&self) -> i128 {
        self.value.min(self.t - self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3(n: i64) -> Family {
        Family::k3(n).unwrap()
    }

    fn kum(n: i64) -> Family {
        Family::kummer(n).unwrap()
    }

    #[test]
    fn family_rejects_small_n() {
        assert_eq!(Family::k3(1), Err(Error::InvalidDimension { n: 1 }));
        assert!(Family::kummer(0).is_err());
        assert_eq!(k3(2).t(), 2);
        assert_eq!(kum(2).t(), 6);
    }

    #[test]
    fn bb_square_examples() {
        assert_eq!(PicClass::new(0, 1, 7, k3(2)).bb_square(), -2);
        assert_eq!(PicClass::new(1, 0, -1, k3(2)).bb_square(), -2);
        assert_eq!(PicClass::new(2, 1, -1, k3(3)).bb_square(), -12);
    }

    #[test]
    fn bb_pairing_examples() {
        let e = PicClass::new(0, 1, 0, k3(2));
        assert_eq!(e.bb_pairing(&e).unwrap(), -2);
        let x = PicClass::new(1, 0, 1, k3(2));
        assert_eq!(x.bb_pairing(&PicClass::new(0, 1, 1, k3(2))).unwrap(), 0);
        let a = PicClass::new(3, -2, 1, k3(2));
        assert_eq!(a.bb_pairing(&PicClass::new(1, 1, 1, k3(2))).unwrap(), 10);
    }

    #[test]
    fn bb_pairing_rejects_mismatched_lattices() {
        let a = PicClass::new(1, 1, 1, k3(2));
        assert!(matches!(a.bb_pairing(&PicClass::new(1, 1, 2, k3(2))), Err(Error::LatticeMismatch { .. })));
        assert!(a.bb_pairing(&PicClass::new(1, 1, 1, kum(2))).is_err());
    }

    #[test]
    fn divisibility_examples() {
        assert_eq!(PicClass::new(0, 1, 0, k3(3)).divisibility().unwrap(), 4);
        for c in -5..=5 {
            assert_eq!(PicClass::new(1, c, 3, k3(4)).divisibility().unwrap(), 1);
        }
        assert_eq!(PicClass::new(2, -3, 1, k3(2)).divisibility().unwrap(), 2);
        assert_eq!(PicClass::new(2, 2, 1, k3(2)).divisibility(), Err(Error::NotPrimitive { f: 2, c: 2 }));
        assert!(PicClass::new(0, 0, 1, k3(2)).divisibility().is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(PicClass::new(0, 1, 0, k3(3)).delta().unwrap().value(), 1);
        assert_eq!(PicClass::new(1, 0, 5, k3(3)).delta().unwrap().value(), 0);
        assert_eq!(PicClass::new(2, -3, 1, k3(2)).delta().unwrap().value(), 1);
    }

    #[test]
    fn signed_rep_folds_sign() {
        let t = 10;
        for v in -30..30 {
            let rep = DiscriminantElement::new(v, t).signed_rep();
            assert!((0..=t / 2).contains(&rep));
            assert_eq!(rep, DiscriminantElement::new(-v, t).signed_rep());
        }
    }

    #[test]
    fn dual_class_examples() {
        let e = PicClass::exceptional(0, k3(5));
        assert_eq!(e.dual_class().unwrap().square(), Rational::new(-1, 8));
        let e = PicClass::exceptional(0, kum(5));
        assert_eq!(e.dual_class().unwrap().square(), Rational::new(-1, 12));
        let a = PicClass::new(2, -1, -1, k3(3));
        let dual = a.dual_class().unwrap();
        assert_eq!((dual.f_hat, dual.c_hat), (Rational::from_integer(1), Rational::new(-1, 2)));
        assert_eq!(dual.square(), Rational::from_integer(-3));
    }

    #[test]
    fn exceptional_class_invariants() {
        for n in 2..=50 {
            for fam in [k3(n), kum(n)] {
                let e = PicClass::exceptional(0, fam);
                let t = fam.t();
                assert_eq!(e.divisibility().unwrap(), t);
                assert_eq!(e.delta().unwrap().value(), 1);
                assert_eq!(e.dual_class().unwrap().square(), Rational::new(-1, t));
                assert_eq!(e.dual_class().unwrap(), DualClass::exceptional_dual(0, fam));
                assert_eq!(DualClass::exceptional_dual(0, fam).pairing(&e), Rational::from_integer(-1));
            }
        }
    }
}
