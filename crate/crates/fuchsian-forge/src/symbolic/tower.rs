//! Exact rational functions in the formal variables, and the quadratic
//! extension generated by the square root of `c^2 - 1`.
//!
//! A [`MultiRat`] is a quotient of two [`MultiPoly`] values.  Quotients are
//! not forced into a canonical form — equality is decided by cross
//! multiplication — but every constructor cancels the small set of factors
//! that actually occur in the generator matrices (`n`, `c - 1`, `c + 1`,
//! `c - 1 + 2s^2` and single variables), which keeps intermediate results
//! small.
//!
//! A [`TowerElement`] is a pair `base + ext * w` where `w^2 = c^2 - 1`.
//! Since `c^2 - 1` is not a square in the rational function field, the pair
//! representation is unique and the tower is itself a field.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{rat_int, Rational};
use crate::symbolic::poly::{c_poly, MultiPoly, NVARS, VAR_N, VAR_R, VAR_S, VAR_T};

/// A quotient of two multivariate polynomials.
#[derive(Clone, Debug)]
pub struct MultiRat {
    num: MultiPoly,
    den: MultiPoly,
}

/// Factors worth cancelling: the scale variable, the three half-trace
/// variables, and the three polynomials that appear as denominators in the
/// generator matrices.
fn cancellation_basis() -> Vec<MultiPoly> {
    let one = MultiPoly::one();
    let c = c_poly();
    let s = MultiPoly::var(VAR_S);
    let two_s2 = s.mul(&s).mul_scalar(&rat_int(2));
    vec![
        MultiPoly::var(VAR_N),
        c.sub(&one),
        c.add(&one),
        c.sub(&one).add(&two_s2),
        MultiPoly::var(VAR_R),
        s,
        MultiPoly::var(VAR_T),
    ]
}

impl MultiRat {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut out = MultiRat { num, den };
        out.reduce();
        out
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        MultiRat {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(MultiPoly::from_int(n))
    }

    pub fn constant(q: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(q))
    }

    pub fn var(v: usize) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return;
        }
        for factor in cancellation_basis() {
            loop {
                match (self.num.div_exact(&factor), self.den.div_exact(&factor)) {
                    (Some(n), Some(d)) => {
                        self.num = n;
                        self.den = d;
                    }
                    _ => break,
                }
            }
        }
        // scale so the denominator has coprime integer coefficients and a
        // positive leading coefficient
        let scale = MultiPoly::constant(self.den.content());
        self.num = self.num.div_exact(&scale).unwrap();
        self.den = self.den.div_exact(&scale).unwrap();
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        MultiRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by the zero rational function");
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.num.mul_scalar(q), self.den.clone())
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&rat_int(n))
    }

    /// True when the function does not depend on `var`: the formal partial
    /// derivative of `num/den` is identically zero.  Over a field of
    /// characteristic zero this is exact, whether or not the quotient is in
    /// lowest terms.
    pub fn is_free_of(&self, var: usize) -> bool {
        let dn = self.num.derivative_in(var);
        let dd = self.den.derivative_in(var);
        dn.mul(&self.den).sub(&self.num.mul(&dd)).is_zero()
    }

    /// Evaluates at a rational point; `None` when the denominator vanishes
    /// there.
    pub fn eval(&self, vals: &[Rational; NVARS]) -> Option<Rational> {
        let d = self.den.eval(vals);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(vals) / d)
    }

    /// Evaluates with the variables bound to number-field elements; `None`
    /// when the denominator vanishes there.
    pub fn eval_in_field(
        &self,
        k: &crate::field::NumberField,
        vals: &[crate::field::FieldElement; NVARS],
    ) -> Option<crate::field::FieldElement> {
        let d = self.den.eval_in_field(k, vals);
        if d.is_zero() {
            return None;
        }
        let n = self.num.eval_in_field(k, vals);
        Some(k.div(&n, &d).expect("nonzero denominator divides"))
    }
}

impl PartialEq for MultiRat {
    fn eq(&self, other: &Self) -> bool {
        self.num
            .mul(&other.den)
            .sub(&other.num.mul(&self.den))
            .is_zero()
    }
}

impl Eq for MultiRat {}

impl fmt::Display for MultiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().map_or(false, |c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// An element `base + ext * w` of the quadratic tower, where `w` is the
/// formal square root of `c^2 - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerElement {
    base: MultiRat,
    ext: MultiRat,
}

impl TowerElement {
    /// The polynomial `c^2 - 1` whose square root generates the tower.
    pub fn radicand() -> MultiPoly {
        let c = c_poly();
        c.mul(&c).sub(&MultiPoly::one())
    }

    pub fn new(base: MultiRat, ext: MultiRat) -> Self {
        TowerElement { base, ext }
    }

    /// An element of the base field.
    pub fn from_rat(base: MultiRat) -> Self {
        TowerElement {
            base,
            ext: MultiRat::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(MultiRat::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The generator `w` itself (square root of `c^2 - 1`).
    pub fn radical() -> Self {
        TowerElement {
            base: MultiRat::zero(),
            ext: MultiRat::one(),
        }
    }

    pub fn base(&self) -> &MultiRat {
        &self.base
    }

    pub fn ext(&self) -> &MultiRat {
        &self.ext
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.ext.is_zero()
    }

    /// True when the radical part vanishes, i.e. the element lies in the
    /// rational function field.
    pub fn is_base(&self) -> bool {
        self.ext.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        TowerElement {
            base: self.base.add(&other.base),
            ext: self.ext.add(&other.ext),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        TowerElement {
            base: self.base.sub(&other.base),
            ext: self.ext.sub(&other.ext),
        }
    }

    pub fn neg(&self) -> Self {
        TowerElement {
            base: self.base.neg(),
            ext: self.ext.neg(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let rad = MultiRat::from_poly(Self::radicand());
        let base = self
            .base
            .mul(&other.base)
            .add(&self.ext.mul(&other.ext).mul(&rad));
        let ext = self.base.mul(&other.ext).add(&self.ext.mul(&other.base));
        TowerElement { base, ext }
    }

    pub fn scale(&self, q: &MultiRat) -> Self {
        TowerElement {
            base: self.base.mul(q),
            ext: self.ext.mul(q),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        TowerElement {
            base: self.base.scale_int(n),
            ext: self.ext.scale_int(n),
        }
    }

    /// Multiplicative inverse via the conjugate: the norm
    /// `base^2 - ext^2 (c^2 - 1)` lies in the base field and vanishes only
    /// for the zero element, because `c^2 - 1` is not a square there.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of the zero tower element");
        let rad = MultiRat::from_poly(Self::radicand());
        let norm = self
            .base
            .mul(&self.base)
            .sub(&self.ext.mul(&self.ext).mul(&rad));
        assert!(!norm.is_zero(), "nonzero tower element with zero norm");
        TowerElement {
            base: self.base.div(&norm),
            ext: self.ext.neg().div(&norm),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ext.is_zero() {
            write!(f, "{}", self.base)
        } else if self.base.is_zero() {
            write!(f, "[{}]*w", self.ext)
        } else {
            write!(f, "{} + [{}]*w", self.base, self.ext)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn c_rat() -> MultiRat {
        MultiRat::from_poly(c_poly())
    }

    #[test]
    fn quotients_cancel_shared_factors() {
        let one = MultiRat::one();
        let c = c_rat();
        let cm1 = c.sub(&one);
        let cp1 = c.add(&one);
        // (c^2 - 1) / (c - 1) == c + 1
        let q = MultiRat::new(
            TowerElement::radicand(),
            cm1.num().clone(),
        );
        assert_eq!(q, cp1);
        assert!(q.den().as_constant().is_some());
        // n r / n == r after reduction, and the result is visibly n-free
        let n = MultiRat::var(VAR_N);
        let r = MultiRat::var(VAR_R);
        let q2 = n.mul(&r).div(&n);
        assert_eq!(q2, r);
        assert!(q2.is_free_of(VAR_N));
        assert_eq!(q2.den().as_constant(), Some(rat_int(1)));
    }

    #[test]
    fn field_axioms_hold_in_samples() {
        let r = MultiRat::var(VAR_R);
        let s = MultiRat::var(VAR_S);
        let one = MultiRat::one();
        let a = r.add(&s.scale(&rat(1, 2)));
        let b = r.mul(&s).sub(&one);
        let c = s.sub(&r.mul(&r));
        // a/b + c/b = (a + c)/b
        let lhs = a.div(&b).add(&c.div(&b));
        assert_eq!(lhs, a.add(&c).div(&b));
        // (a/b) * (b/a) = 1
        assert_eq!(a.div(&b).mul(&b.div(&a)), one);
        // subtraction against itself
        assert!(a.div(&c).sub(&a.div(&c)).is_zero());
        // distributivity
        let d = a.mul(&b.add(&c));
        assert_eq!(d, a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn variable_dependence_is_detected_exactly() {
        let n = MultiRat::var(VAR_N);
        let r = MultiRat::var(VAR_R);
        let s = MultiRat::var(VAR_S);
        // (n^2 r) / (n^2 s) is n-free even without cancellation help
        let f = n.mul(&n).mul(&r).div(&n.mul(&n).mul(&s));
        assert!(f.is_free_of(VAR_N));
        assert!(!f.is_free_of(VAR_R));
        let g = r.add(&n).div(&s);
        assert!(!g.is_free_of(VAR_N));
        assert!(g.is_free_of(VAR_T));
    }

    #[test]
    fn evaluation_matches_hand_values() {
        let c = c_rat();
        let one = MultiRat::one();
        let f = c.add(&one).div(&c.sub(&one));
        let at = [rat_int(2), rat_int(2), rat_int(2), rat_int(1)];
        assert_eq!(f.eval(&at), Some(rat(10, 8)));
        let pole = c.sub(&one);
        let origin = [rat_int(0), rat_int(0), rat_int(0), rat_int(1)];
        assert_eq!(one.div(&pole).eval(&origin), None);
    }

    #[test]
    fn radical_squares_to_the_radicand() {
        let w = TowerElement::radical();
        let sq = w.mul(&w);
        assert!(sq.is_base());
        assert_eq!(*sq.base(), MultiRat::from_poly(TowerElement::radicand()));
        // (1 + w)(1 - w) = 1 - (c^2 - 1) = 2 - c^2
        let one = TowerElement::one();
        let p = one.add(&w).mul(&one.sub(&w));
        assert!(p.is_base());
        let c = c_rat();
        assert_eq!(*p.base(), MultiRat::from_int(2).sub(&c.mul(&c)));
    }

    #[test]
    fn tower_division_rationalizes_denominators() {
        let w = TowerElement::radical();
        let r = TowerElement::from_rat(MultiRat::var(VAR_R));
        let x = r.add(&w.scale(&MultiRat::var(VAR_S)));
        let y = w.add(&TowerElement::one());
        let q = x.div(&y);
        assert_eq!(q.mul(&y), x);
        assert_eq!(x.mul(&x.inv()), TowerElement::one());
        // 1/w = w / (c^2 - 1)
        let winv = w.inv();
        assert!(winv.base().is_zero());
        assert_eq!(
            *winv.ext(),
            MultiRat::one().div(&MultiRat::from_poly(TowerElement::radicand()))
        );
    }
}
