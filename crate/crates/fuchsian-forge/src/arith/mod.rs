//! Exact rational arithmetic: rationals, univariate polynomials over the
//! rationals, and closed rational intervals.
//!
//! Every computation in this crate bottoms out here. There is no floating
//! point anywhere: real numbers are represented either exactly (rationals)
//! or by rational intervals that certifiably contain them.

mod interval;
mod poly;
mod roots;

pub use interval::RealInterval;
pub use poly::{poly_gcd, poly_xgcd, UniPoly};
pub use roots::{cauchy_bound, isolate_real_roots, refine_root, sturm_chain, sign_variations};

use num_bigint::BigInt;
use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Zero is `0/1`.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. Rejects a zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// The rational `1 / 2^k`.
pub fn pow2_neg(k: usize) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(1) << k)
}

/// Nearest integer to `x` (ties round up).
pub fn round_nearest(x: &Rational) -> BigInt {
    (x + rat(1, 2)).floor().to_integer()
}
