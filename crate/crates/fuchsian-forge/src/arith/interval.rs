//! Closed rational intervals with outward-rounded operations.
//!
//! An interval stands for every real number between its endpoints. All
//! operations return intervals that contain the exact image, so a chain of
//! interval computations yields a certified enclosure of the exact result.

use std::fmt;

use num_traits::{Signed, Zero};

use super::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct RealInterval {
    lo: Rational,
    hi: Rational,
}

impl RealInterval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RealInterval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        RealInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / super::rat_int(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &RealInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// `Some(1)` or `Some(-1)` when every point of the interval has that
    /// sign, `Some(0)` for the degenerate zero interval, `None` when the
    /// interval straddles zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn neg(&self) -> RealInterval {
        RealInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn sub(&self, other: &RealInterval) -> RealInterval {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RealInterval) -> RealInterval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        RealInterval { lo, hi }
    }

    pub fn scale(&self, c: &Rational) -> RealInterval {
        self.mul(&RealInterval::point(c.clone()))
    }

    /// Reciprocal; `None` when the interval touches zero.
    pub fn inv(&self) -> Option<RealInterval> {
        if self.contains_zero() {
            return None;
        }
        Some(RealInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, other: &RealInterval) -> Option<RealInterval> {
        Some(self.mul(&other.inv()?))
    }

    /// Outward-rounded square root with endpoint slack at most `width`.
    ///
    /// Requires a nonnegative interval; returns `None` when `lo < 0`
    /// (callers refine and retry). The result `[a, b]` satisfies
    /// `a^2 <= lo` and `b^2 >= hi`, so it contains the exact square root of
    /// every point of the input.
    pub fn sqrt(&self, width: &Rational) -> Option<RealInterval> {
        assert!(width.is_positive(), "sqrt slack must be positive");
        if self.lo.is_negative() {
            return None;
        }
        let lo = sqrt_lower(&self.lo, width);
        let hi = sqrt_upper(&self.hi, width);
        Some(RealInterval { lo, hi })
    }
}

/// Largest bisection point `a >= 0` found with `a^2 <= x`, within `width` of
/// the exact root.
fn sqrt_lower(x: &Rational, width: &Rational) -> Rational {
    if x.is_zero() {
        return Rational::zero();
    }
    let one = super::rat_int(1);
    let mut lo = Rational::zero();
    let mut hi = if x >= &one { x.clone() } else { one };
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / super::rat_int(2);
        if &(&mid * &mid) <= x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Smallest bisection point `b` found with `b^2 >= x`, within `width` of the
/// exact root.
fn sqrt_upper(x: &Rational, width: &Rational) -> Rational {
    if x.is_zero() {
        return Rational::zero();
    }
    let one = super::rat_int(1);
    let mut lo = Rational::zero();
    let mut hi = if x >= &one { x.clone() } else { one };
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / super::rat_int(2);
        if &(&mid * &mid) >= x {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealInterval{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{pow2_neg, rat, rat_int};

    #[test]
    fn arithmetic_has_correct_endpoints() {
        let a = RealInterval::new(rat_int(1), rat_int(2));
        let b = RealInterval::new(rat_int(-3), rat_int(1));
        assert_eq!(a.add(&b), RealInterval::new(rat_int(-2), rat_int(3)));
        assert_eq!(a.mul(&b), RealInterval::new(rat_int(-6), rat_int(2)));
        assert_eq!(a.neg(), RealInterval::new(rat_int(-2), rat_int(-1)));
    }

    #[test]
    fn reciprocal_needs_a_sign() {
        let a = RealInterval::new(rat_int(2), rat_int(4));
        assert_eq!(a.inv().unwrap(), RealInterval::new(rat(1, 4), rat(1, 2)));
        assert!(RealInterval::new(rat_int(-1), rat_int(1)).inv().is_none());
    }

    #[test]
    fn sqrt_brackets_the_exact_root() {
        let two = RealInterval::point(rat_int(2));
        let s = two.sqrt(&pow2_neg(20)).unwrap();
        assert!(s.lo().pow(2) <= rat_int(2));
        assert!(s.hi().pow(2) >= rat_int(2));
        assert!(s.width() < pow2_neg(18));
        assert!(RealInterval::new(rat_int(-1), rat_int(1))
            .sqrt(&pow2_neg(4))
            .is_none());
    }

    #[test]
    fn sqrt_of_exact_squares_is_tight_enough() {
        let iv = RealInterval::new(rat_int(4), rat_int(9));
        let s = iv.sqrt(&pow2_neg(16)).unwrap();
        assert!(s.contains(&rat_int(2)));
        assert!(s.contains(&rat_int(3)));
        assert!(*s.lo() <= rat_int(2) && *s.hi() >= rat_int(3));
    }

    #[test]
    fn signs() {
        assert_eq!(RealInterval::new(rat_int(1), rat_int(2)).sign(), Some(1));
        assert_eq!(RealInterval::new(rat_int(-2), rat_int(-1)).sign(), Some(-1));
        assert_eq!(RealInterval::point(rat_int(0)).sign(), Some(0));
        assert_eq!(RealInterval::new(rat_int(-1), rat_int(1)).sign(), None);
    }
}
