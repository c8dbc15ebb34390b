//! Sparse multivariate polynomials over the rationals in four formal
//! variables.
//!
//! The variables, in index order, are the three half-trace parameters `r`,
//! `s`, `t` and the free positive scale `n` that multiplies the off-diagonal
//! entries of the generator matrices.  Terms live in a sorted map from
//! exponent vectors to nonzero rational coefficients.  Exponent vectors are
//! compared lexicographically (the natural array order), which gives every
//! polynomial a unique representation and a well-defined leading term.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat_int, Rational};

/// Number of formal variables.
pub const NVARS: usize = 4;

/// Index of the half-trace variable `r` (half the trace of the first
/// generator).
pub const VAR_R: usize = 0;
/// Index of the half-trace variable `s` (half the trace of the second
/// generator).
pub const VAR_S: usize = 1;
/// Index of the half-trace variable `t` (half the trace of their product).
pub const VAR_T: usize = 2;
/// Index of the free scale variable `n` appearing in the off-diagonal
/// matrix entries.
pub const VAR_N: usize = 3;

const VAR_NAMES: [&str; NVARS] = ["r", "s", "t", "n"];

/// Exponent vector of a single monomial.
pub type Exponents = [u32; NVARS];

/// A sparse multivariate polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(q: Rational) -> Self {
        Self::monomial([0; NVARS], q)
    }

    /// A constant polynomial with integer value.
    pub fn from_int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    /// The polynomial consisting of the single variable `var`.
    pub fn var(var: usize) -> Self {
        assert!(var < NVARS, "variable index out of range");
        let mut exp = [0; NVARS];
        exp[var] = 1;
        Self::monomial(exp, Rational::one())
    }

    /// The polynomial with a single term `q * x^exp`.
    pub fn monomial(exp: Exponents, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(exp, q);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Returns the value of a constant polynomial, or `None` when any
    /// variable actually occurs.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (exp, coeff) = self.terms.iter().next().unwrap();
                if *exp == [0; NVARS] {
                    Some(coeff.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Leading term under the lexicographic order, or `None` for zero.
    pub fn leading(&self) -> Option<(Exponents, Rational)> {
        self.terms
            .iter()
            .next_back()
            .map(|(e, c)| (*e, c.clone()))
    }

    /// All terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, exp: Exponents, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += coeff;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (exp, coeff) in &other.terms {
            out.insert_term(*exp, coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (exp, coeff) in &other.terms {
            out.insert_term(*exp, -coeff.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (*e, -c.clone()))
            .collect();
        MultiPoly { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut exp = [0; NVARS];
                for i in 0..NVARS {
                    exp[i] = ea[i] + eb[i];
                }
                out.insert_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return MultiPoly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (*e, c * q))
            .collect();
        MultiPoly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Evaluates the polynomial at a rational point, one value per variable.
    pub fn eval(&self, vals: &[Rational; NVARS]) -> Rational {
        let mut acc = Rational::zero();
        for (exp, coeff) in &self.terms {
            let mut term = coeff.clone();
            for i in 0..NVARS {
                for _ in 0..exp[i] {
                    term *= &vals[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Evaluates the polynomial with the variables bound to number-field
    /// elements.
    pub fn eval_in_field(
        &self,
        k: &crate::field::NumberField,
        vals: &[crate::field::FieldElement; NVARS],
    ) -> crate::field::FieldElement {
        let mut acc = k.zero();
        for (exp, coeff) in &self.terms {
            let mut term = k.from_rational(coeff.clone());
            for i in 0..NVARS {
                for _ in 0..exp[i] {
                    term = k.mul(&term, &vals[i]);
                }
            }
            acc = k.add(&acc, &term);
        }
        acc
    }

    /// Largest exponent of `var` occurring in any term.
    pub fn deg_in(&self, var: usize) -> u32 {
        assert!(var < NVARS, "variable index out of range");
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Formal partial derivative with respect to `var`.
    pub fn derivative_in(&self, var: usize) -> Self {
        assert!(var < NVARS, "variable index out of range");
        let mut out = MultiPoly::zero();
        for (exp, coeff) in &self.terms {
            if exp[var] == 0 {
                continue;
            }
            let mut e = *exp;
            e[var] -= 1;
            out.insert_term(e, coeff * rat_int(exp[var] as i64));
        }
        out
    }

    /// Exact polynomial division: returns `q` with `self = q * divisor`, or
    /// `None` when no such polynomial exists.
    ///
    /// Repeatedly divides leading terms.  Because the leading term of a
    /// product is the product of the leading terms, the leading term of an
    /// exact multiple is always divisible by the divisor's, so the loop
    /// cannot miss a valid quotient; the remainder's leading term strictly
    /// decreases, so the loop terminates.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (dexp, dcoeff) = divisor.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while !rem.is_zero() {
            let (rexp, rcoeff) = rem.leading().unwrap();
            let mut qexp = [0; NVARS];
            for i in 0..NVARS {
                if rexp[i] < dexp[i] {
                    return None;
                }
                qexp[i] = rexp[i] - dexp[i];
            }
            let term = MultiPoly::monomial(qexp, &rcoeff / &dcoeff);
            rem = rem.sub(&term.mul(divisor));
            quot = quot.add(&term);
        }
        Some(quot)
    }

    /// Signed content: the rational `g` such that `self / g` has coprime
    /// integer coefficients and a positive leading coefficient.  Returns
    /// zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for coeff in self.terms.values() {
            num_gcd = num_gcd.gcd(coeff.numer());
            den_lcm = den_lcm.lcm(coeff.denom());
        }
        let magnitude = Rational::new(num_gcd, den_lcm);
        let (_, lead) = self.leading().unwrap();
        if lead.is_negative() {
            -magnitude
        } else {
            magnitude
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.terms.iter().rev().enumerate() {
            let positive = !coeff.is_negative();
            if i == 0 {
                if !positive {
                    write!(f, "-")?;
                }
            } else if positive {
                write!(f, " + ")?;
            } else {
                write!(f, " - ")?;
            }
            let mag = coeff.abs();
            let is_const = *exp == [0; NVARS];
            let mut wrote_factor = false;
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
                wrote_factor = true;
            }
            for (v, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    write!(f, "*")?;
                }
                write!(f, "{}", VAR_NAMES[v])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}

/// The commutator half-trace parameter `c = 4rst - 2r^2 - 2s^2 - 2t^2 + 1`
/// as a polynomial; the trace of the generator commutator is `-2c`.
pub fn c_poly() -> MultiPoly {
    let r = MultiPoly::var(VAR_R);
    let s = MultiPoly::var(VAR_S);
    let t = MultiPoly::var(VAR_T);
    let rst = r.mul(&s).mul(&t).mul_scalar(&rat_int(4));
    rst.sub(&r.mul(&r).mul_scalar(&rat_int(2)))
        .sub(&s.mul(&s).mul_scalar(&rat_int(2)))
        .sub(&t.mul(&t).mul_scalar(&rat_int(2)))
        .add(&MultiPoly::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn vals(r: i64, s: i64, t: i64, n: i64) -> [Rational; NVARS] {
        [rat_int(r), rat_int(s), rat_int(t), rat_int(n)]
    }

    #[test]
    fn constructs_evaluates_and_displays() {
        let c = c_poly();
        assert_eq!(c.eval(&vals(2, 2, 2, 1)), rat_int(9));
        assert_eq!(c.eval(&vals(1, 1, 1, 5)), rat_int(-1));
        assert_eq!(c.to_string(), "-2*r^2 + 4*r*s*t - 2*s^2 - 2*t^2 + 1");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(MultiPoly::from_int(-3).to_string(), "-3");
        let n = MultiPoly::var(VAR_N);
        assert_eq!(n.mul(&n).sub(&MultiPoly::one()).to_string(), "n^2 - 1");
        assert_eq!(c.num_terms(), 5);
        assert_eq!(c.as_constant(), None);
        assert_eq!(MultiPoly::from_int(7).as_constant(), Some(rat_int(7)));
    }

    #[test]
    fn ring_identities() {
        let r = MultiPoly::var(VAR_R);
        let s = MultiPoly::var(VAR_S);
        let a = r.mul(&r).add(&s.mul_scalar(&rat(1, 2)));
        let b = s.mul(&s).sub(&r.mul_scalar(&rat_int(3)));
        // (a + b)(a - b) = a^2 - b^2
        let lhs = a.add(&b).mul(&a.sub(&b));
        let rhs = a.mul(&a).sub(&b.mul(&b));
        assert_eq!(lhs, rhs);
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.sub(&a), MultiPoly::zero());
        assert_eq!(a.add(&a.neg()), MultiPoly::zero());
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
        assert_eq!(a.pow(0), MultiPoly::one());
    }

    #[test]
    fn exact_division_finds_cofactors() {
        let c = c_poly();
        let one = MultiPoly::one();
        let cm1 = c.sub(&one);
        let cp1 = c.add(&one);
        let prod = cm1.mul(&cp1);
        assert_eq!(prod.div_exact(&cm1), Some(cp1.clone()));
        assert_eq!(prod.div_exact(&cp1), Some(cm1.clone()));
        // c^2 - 1 = (c - 1)(c + 1)
        assert_eq!(c.mul(&c).sub(&one), prod);
        let r = MultiPoly::var(VAR_R);
        assert_eq!(r.add(&one).div_exact(&r), None);
        assert_eq!(cm1.div_exact(&cp1), None);
        assert_eq!(MultiPoly::zero().div_exact(&cm1), Some(MultiPoly::zero()));
        // scalar divisors always divide
        let half = MultiPoly::constant(rat(1, 2));
        assert_eq!(cm1.div_exact(&half), Some(cm1.mul_scalar(&rat_int(2))));
    }

    #[test]
    fn degrees_and_derivatives() {
        let c = c_poly();
        assert_eq!(c.deg_in(VAR_R), 2);
        assert_eq!(c.deg_in(VAR_N), 0);
        let dr = c.derivative_in(VAR_R);
        // d/dr (4rst - 2r^2 - 2s^2 - 2t^2 + 1) = 4st - 4r
        let r = MultiPoly::var(VAR_R);
        let s = MultiPoly::var(VAR_S);
        let t = MultiPoly::var(VAR_T);
        let expected = s.mul(&t).mul_scalar(&rat_int(4)).sub(&r.mul_scalar(&rat_int(4)));
        assert_eq!(dr, expected);
        assert_eq!(c.derivative_in(VAR_N), MultiPoly::zero());
    }

    #[test]
    fn content_normalizes_sign_and_scale() {
        let r = MultiPoly::var(VAR_R);
        let s = MultiPoly::var(VAR_S);
        let p = r.mul_scalar(&rat_int(6)).add(&s.mul_scalar(&rat_int(9)));
        assert_eq!(p.content(), rat_int(3));
        let q = r.mul_scalar(&rat(3, 2)).add(&MultiPoly::constant(rat(9, 4)));
        assert_eq!(q.content(), rat(3, 4));
        // leading term (largest r-power) is negative, so the content is too
        let m = r.mul(&r).mul_scalar(&rat_int(-2)).add(&s.mul_scalar(&rat_int(4)));
        assert_eq!(m.content(), rat_int(-2));
        assert_eq!(m.div_exact(&MultiPoly::constant(m.content())).unwrap().content(), rat_int(1));
        assert_eq!(MultiPoly::zero().content(), rat_int(0));
    }
}
