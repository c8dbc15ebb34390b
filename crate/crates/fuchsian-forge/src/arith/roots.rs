//! Certified real root isolation for squarefree rational polynomials.
//!
//! Sturm's theorem gives exact real root counts over any rational interval;
//! recursive bisection then produces pairwise-disjoint isolating intervals,
//! and further bisection refines any of them to requested width. A root that
//! is hit exactly by a bisection point is reported as a degenerate interval
//! `[r, r]`, which keeps refinement from bisecting forever at a rational
//! root.

use num_traits::{Signed, Zero};

use super::{poly_gcd, RealInterval, Rational, UniPoly};
use crate::error::{Error, Result};

/// Sturm chain of `p`: starts `p, p'`, then each entry is the negated
/// remainder of the previous two, normalized to unit leading magnitude to
/// keep coefficients small.
pub fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        let lead = r.leading().unwrap().abs();
        chain.push(r.neg().scale(&lead.recip()));
    }
}

/// Number of sign changes in the chain evaluated at `x`, zeros skipped.
pub fn sign_variations(chain: &[UniPoly], x: &Rational) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for q in chain {
        let s = q.sign_at(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Exact number of real roots of the (squarefree) chain owner in the open
/// interval `(lo, hi)`; both endpoints must be non-roots.
fn count_roots_open(chain: &[UniPoly], lo: &Rational, hi: &Rational) -> usize {
    sign_variations(chain, lo) - sign_variations(chain, hi)
}

/// A bound `B` with every real root of `p` strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &UniPoly) -> Rational {
    let lead = p.leading().expect("bound of zero polynomial").abs();
    let mut m = Rational::zero();
    let deg = p.degree().unwrap();
    for i in 0..deg {
        let a = p.coeff(i).abs() / &lead;
        if a > m {
            m = a;
        }
    }
    m + super::rat_int(1)
}

/// Isolates all real roots of a squarefree polynomial.
///
/// Returns pairwise-disjoint intervals in ascending order, one per real
/// root. Exact rational roots encountered at bisection points come back as
/// degenerate `[r, r]` intervals; every other interval has non-root
/// endpoints and exactly one root in its interior.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<RealInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let g = poly_gcd(p, &p.derivative());
    if g.degree() != Some(0) {
        return Err(Error::NonSquarefree);
    }
    let chain = sturm_chain(p);
    let bound = cauchy_bound(p);
    let mut out = Vec::new();
    subdivide(&chain, p, &-bound.clone(), &bound, &mut out);
    disjointify(p, &mut out);
    Ok(out)
}

fn subdivide(
    chain: &[UniPoly],
    p: &UniPoly,
    lo: &Rational,
    hi: &Rational,
    out: &mut Vec<RealInterval>,
) {
    match count_roots_open(chain, lo, hi) {
        0 => {}
        1 => out.push(RealInterval::new(lo.clone(), hi.clone())),
        _ => {
            let mid = (lo + hi) / super::rat_int(2);
            if p.sign_at(&mid) == 0 {
                // Exact rational root at the bisection point: emit it as a
                // degenerate interval and recurse on flanks that shave off a
                // neighborhood containing only this root.
                let mut w = (hi - lo) / super::rat_int(4);
                loop {
                    let l = &mid - &w;
                    let r = &mid + &w;
                    if p.sign_at(&l) != 0
                        && p.sign_at(&r) != 0
                        && count_roots_open(chain, &l, &r) == 1
                    {
                        subdivide(chain, p, lo, &l, out);
                        out.push(RealInterval::point(mid.clone()));
                        subdivide(chain, p, &r, hi, out);
                        return;
                    }
                    w = w / super::rat_int(2);
                }
            }
            subdivide(chain, p, lo, &mid, out);
            subdivide(chain, p, &mid, hi, out);
        }
    }
}

/// Bisection halves can share an endpoint; shrink neighbors until all
/// intervals are pairwise disjoint as sets.
fn disjointify(p: &UniPoly, ivs: &mut [RealInterval]) {
    for i in 1..ivs.len() {
        while ivs[i - 1].hi() >= ivs[i].lo() {
            let target = {
                let w = ivs[i - 1].width().max(ivs[i].width());
                w / super::rat_int(4)
            };
            ivs[i - 1] = refine_root(&ivs[i - 1], p, &target);
            ivs[i] = refine_root(&ivs[i], p, &target);
        }
    }
}

/// Shrinks an isolating interval around its single simple root until its
/// width is at most `width`, by sign-based bisection.
///
/// If a bisection point (or an endpoint) turns out to be the root itself,
/// the exact degenerate interval `[r, r]` is returned immediately. The
/// output is always contained in the input.
pub fn refine_root(iv: &RealInterval, p: &UniPoly, width: &Rational) -> RealInterval {
    assert!(width.is_positive(), "refinement width must be positive");
    if iv.is_point() {
        return iv.clone();
    }
    if p.sign_at(iv.lo()) == 0 {
        return RealInterval::point(iv.lo().clone());
    }
    if p.sign_at(iv.hi()) == 0 {
        return RealInterval::point(iv.hi().clone());
    }
    let mut lo = iv.lo().clone();
    let mut hi = iv.hi().clone();
    let mut sign_lo = p.sign_at(&lo);
    debug_assert!(sign_lo != p.sign_at(&hi), "interval does not bracket a root");
    while &(&hi - &lo) >= width {
        let mid = (&lo + &hi) / super::rat_int(2);
        let s = p.sign_at(&mid);
        if s == 0 {
            return RealInterval::point(mid);
        }
        if s == sign_lo {
            lo = mid;
            sign_lo = s;
        } else {
            hi = mid;
        }
    }
    RealInterval::new(lo, hi)
}
