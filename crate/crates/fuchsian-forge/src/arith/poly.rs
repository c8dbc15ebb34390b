//! Univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order and the leading
//! coefficient is always nonzero; the zero polynomial is the empty list.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{RealInterval, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        UniPoly::new(vec![Rational::zero(), Rational::one()])
    }

    /// Convenience constructor from small integers, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| super::rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// The value as a rational when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, One::is_one)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    /// Panics if `div` is zero.
    pub fn div_rem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quo = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lead;
            for (j, b) in div.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                let delta = &q * b;
                rem[idx] = &rem[idx] - &delta;
            }
            quo[i - dd] = q;
        }
        (UniPoly::new(quo), UniPoly::new(rem))
    }

    /// Divides by the leading coefficient. Panics on the zero polynomial.
    pub fn monic(&self) -> UniPoly {
        let lead = self.leading().expect("monic of zero polynomial").clone();
        self.scale(&(Rational::one() / lead))
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * super::rat_int(i as i64 + 1))
                .collect(),
        )
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation over a rational interval; the result contains the
    /// image of every point of `iv`.
    pub fn eval_interval(&self, iv: &RealInterval) -> RealInterval {
        let mut acc = RealInterval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(iv).add(&RealInterval::point(c.clone()));
        }
        acc
    }

    /// Exact sign of the value at a rational point.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// Monic greatest common divisor via the Euclidean algorithm.
///
/// Each remainder is renormalized to control coefficient growth. The result
/// is monic; for coprime inputs it is the constant `1`. Panics if both
/// arguments are zero.
pub fn poly_gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    assert!(
        !(a.is_zero() && b.is_zero()),
        "gcd of two zero polynomials"
    );
    let mut p = a.clone();
    let mut q = b.clone();
    while !q.is_zero() {
        let (_, r) = p.div_rem(&q);
        p = q;
        q = if r.is_zero() { r } else { r.monic() };
    }
    p.monic()
}

/// Extended Euclidean algorithm: returns `(g, s, t)` with
/// `s*a + t*b = g` and `g` the monic gcd.
pub fn poly_xgcd(a: &UniPoly, b: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = UniPoly::one();
    let mut s1 = UniPoly::zero();
    let mut t0 = UniPoly::zero();
    let mut t1 = UniPoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let lead = r0.leading().expect("xgcd of two zero polynomials").clone();
    let inv = Rational::one() / lead;
    (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = UniPoly::new(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(UniPoly::from_ints(&[0, 0]).is_zero());
    }

    #[test]
    fn division_recombines() {
        let p = UniPoly::from_ints(&[-2, 0, 1]); // x^2 - 2
        let d = UniPoly::from_ints(&[-1, 1]); // x - 1
        let (q, r) = p.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), p);
        assert_eq!(r, UniPoly::from_ints(&[-1])); // value at 1
    }

    #[test]
    fn gcd_of_poly_with_shared_root() {
        let a = UniPoly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = UniPoly::from_ints(&[-1, 1]); // x - 1
        assert_eq!(poly_gcd(&a, &b), b);
    }

    #[test]
    fn gcd_of_coprime_polys_is_one() {
        let a = UniPoly::from_ints(&[-2, 0, 1]);
        let b = UniPoly::from_ints(&[-3, 0, 1]);
        assert_eq!(poly_gcd(&a, &b), UniPoly::one());
    }

    #[test]
    fn gcd_strips_multiplicity() {
        let a = UniPoly::from_ints(&[0, -1, 0, 1]); // x^3 - x
        let b = UniPoly::from_ints(&[0, 0, 1]); // x^2
        assert_eq!(poly_gcd(&a, &b), UniPoly::x());
    }

    #[test]
    fn xgcd_is_a_bezout_identity() {
        let a = UniPoly::from_ints(&[-2, 0, 1]);
        let b = UniPoly::from_ints(&[1, 1]);
        let (g, s, t) = poly_xgcd(&a, &b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        assert_eq!(g, UniPoly::one());
    }

    #[test]
    fn evaluation_and_derivative() {
        let p = UniPoly::from_ints(&[1, -2, 3]); // 3x^2 - 2x + 1
        assert_eq!(p.eval(&rat_int(2)), rat_int(9));
        assert_eq!(p.derivative(), UniPoly::from_ints(&[-2, 6]));
        assert_eq!(p.sign_at(&rat(1, 3)), 1);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(UniPoly::from_ints(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(UniPoly::from_ints(&[4, -2]).to_string(), "-2x + 4");
        let half = UniPoly::new(vec![rat(1, 2), rat(-3, 4)]);
        assert_eq!(half.to_string(), "-3/4x + 1/2");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }
}
