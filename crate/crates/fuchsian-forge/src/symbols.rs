//! Quaternion algebra symbols `(a, b)` over a number field and the
//! equivalence moves preserving the algebra's isomorphism class.
//!
//! The moves are: swapping the two slots, scaling the first slot by a
//! nonzero square, and replacing `b` by `b·v² − a·b·w²` (multiplication by
//! a norm from `K(√a)`). Every move has an exact inverse. Band
//! normalization composes moves to drive a real-split symbol into
//! `(1, 1+ε) × (1, 1+ε)` at the chosen embedding, returning the move list
//! so a verifier can replay it exactly.

use num_traits::{One, Signed};

use crate::arith::{rat, rat_int, round_nearest, Rational};
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};

/// A quaternion algebra presented by two nonzero field elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuaternionSymbol {
    a: FieldElement,
    b: FieldElement,
}

impl QuaternionSymbol {
    pub fn new(a: FieldElement, b: FieldElement) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::DegenerateSymbol);
        }
        Ok(QuaternionSymbol { a, b })
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> &FieldElement {
        &self.b
    }
}

/// One equivalence move. Parameters are field elements; the legality
/// conditions (`u ≠ 0`, `bv² − abw² ≠ 0`) refer to the symbol the step is
/// applied to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EquivalenceStep {
    Swap,
    ScaleA { u: FieldElement },
    MixB { v: FieldElement, w: FieldElement },
}

impl EquivalenceStep {
    /// The exact inverse move, relative to the symbol `pre` this step is
    /// applied to: applying `self` then the inverse returns to `pre`.
    pub fn inverse(&self, k: &NumberField, pre: &QuaternionSymbol) -> Result<EquivalenceStep> {
        match self {
            EquivalenceStep::Swap => Ok(EquivalenceStep::Swap),
            EquivalenceStep::ScaleA { u } => Ok(EquivalenceStep::ScaleA { u: k.inv(u)? }),
            EquivalenceStep::MixB { v, w } => {
                // delta = v^2 - a w^2; the new b is b*delta, and
                // (v/delta)^2 - a (w/delta)^2 = 1/delta undoes it.
                let delta = k.sub(&k.mul(v, v), &k.mul(&pre.a, &k.mul(w, w)));
                if delta.is_zero() {
                    return Err(Error::IllegalStep);
                }
                let inv = k.inv(&delta)?;
                Ok(EquivalenceStep::MixB {
                    v: k.mul(v, &inv),
                    w: k.neg(&k.mul(w, &inv)),
                })
            }
        }
    }
}

/// Applies one move, enforcing its legality condition.
pub fn apply_step(
    k: &NumberField,
    sym: &QuaternionSymbol,
    step: &EquivalenceStep,
) -> Result<QuaternionSymbol> {
    match step {
        EquivalenceStep::Swap => QuaternionSymbol::new(sym.b.clone(), sym.a.clone()),
        EquivalenceStep::ScaleA { u } => {
            if u.is_zero() {
                return Err(Error::IllegalStep);
            }
            let a = k.mul(&sym.a, &k.mul(u, u));
            QuaternionSymbol::new(a, sym.b.clone())
        }
        EquivalenceStep::MixB { v, w } => {
            let delta = k.sub(&k.mul(v, v), &k.mul(&sym.a, &k.mul(w, w)));
            let b = k.mul(&sym.b, &delta);
            if b.is_zero() {
                return Err(Error::IllegalStep);
            }
            QuaternionSymbol::new(sym.a.clone(), b)
        }
    }
}

/// Replays a whole move list.
pub fn apply_steps(
    k: &NumberField,
    sym: &QuaternionSymbol,
    steps: &[EquivalenceStep],
) -> Result<QuaternionSymbol> {
    let mut cur = sym.clone();
    for step in steps {
        cur = apply_step(k, &cur, step)?;
    }
    Ok(cur)
}

/// Does the algebra split over the reals at the chosen embedding?
/// Equivalent to `a > 0` or `b > 0` there.
pub fn real_split(k: &NumberField, sym: &QuaternionSymbol) -> bool {
    k.certified_sign(&sym.a) == 1 || k.certified_sign(&sym.b) == 1
}

/// The symbol of the surface algebra determined by the half-traces `t`
/// (of the product generator) and `c` (of the commutator):
/// `((2t)² − 4, −2c − 2)`.
pub fn surface_symbol(
    k: &NumberField,
    t_half: &FieldElement,
    c: &FieldElement,
) -> Result<QuaternionSymbol> {
    let four = k.from_int(4);
    let two_t = k.mul_rational(t_half, &rat_int(2));
    let a = k.sub(&k.mul(&two_t, &two_t), &four);
    let b = k.sub(&k.mul_rational(c, &rat_int(-2)), &k.from_int(2));
    if a.is_zero() || b.is_zero() {
        return Err(Error::DegenerateSymbol);
    }
    QuaternionSymbol::new(a, b)
}

/// Is `1 < e < 1 + eps` certified at the embedding (both strict)?
fn in_band(k: &NumberField, e: &FieldElement, eps: &Rational) -> bool {
    let upper = k.from_rational(Rational::one() + eps);
    k.certified_sign(&k.sub(e, &k.one())) == 1 && k.certified_sign(&k.sub(&upper, e)) == 1
}

/// Rational approximation of `√e` at the embedding; requires
/// `certified_sign(e) = +1`.
fn sqrt_target(k: &NumberField, e: &FieldElement) -> Rational {
    let mut width = rat(1, 1 << 16);
    let enclosure = loop {
        let iv = k.embed_to_width(e, &width);
        if iv.lo().is_positive() {
            break iv;
        }
        width = width / rat_int(16);
    };
    enclosure
        .sqrt(&rat(1, 1 << 24))
        .expect("enclosure of a certified-positive value has a nonnegative lower bound")
        .mid()
}

/// Searches `u = p/q` with ascending `q` so that `base·u²` lies strictly in
/// `(1, 1+eps)` at the embedding; `target²·base ≈ 1 + eps/2` guides `p`.
fn scale_search(
    k: &NumberField,
    base: &FieldElement,
    eps: &Rational,
    budget: u32,
) -> Option<Rational> {
    let inv_base = k.inv(base).ok()?;
    let centre = Rational::one() + eps / rat_int(2);
    let target = sqrt_target(k, &k.mul_rational(&inv_base, &centre));
    for q in 1..=budget {
        let qr = rat_int(q as i64);
        let p = round_nearest(&(&qr * &target));
        if !p.is_positive() {
            continue;
        }
        let u = Rational::new(p, qr.numer().clone());
        let scaled = k.mul_rational(base, &(&u * &u));
        if in_band(k, &scaled, eps) {
            return Some(u);
        }
    }
    None
}

/// Drives a real-split symbol into the band `(1, 1+eps)²` at the embedding.
///
/// Returns the normalized symbol together with the exact move list, found
/// by a deterministic search: an optional swap to make the first slot
/// positive, a square scaling of the first slot, then a norm mix of the
/// second slot (with `w = 0` when `b > 0`, else the smallest workable
/// integer `w`). Already-in-band slots get no step.
pub fn normalize_band(
    k: &NumberField,
    sym: &QuaternionSymbol,
    eps: &Rational,
) -> Result<(QuaternionSymbol, Vec<EquivalenceStep>)> {
    assert!(
        eps.is_positive() && *eps < Rational::one(),
        "band width must lie in (0, 1)"
    );
    if !real_split(k, sym) {
        return Err(Error::NotRealSplit);
    }
    let mut cur = sym.clone();
    let mut steps = Vec::new();

    if k.certified_sign(&cur.a) != 1 {
        // real_split guarantees b > 0 here.
        let step = EquivalenceStep::Swap;
        cur = apply_step(k, &cur, &step)?;
        steps.push(step);
    }

    if !in_band(k, &cur.a, eps) {
        let u = scale_search(k, &cur.a, eps, 100_000).ok_or_else(|| Error::BudgetExhausted {
            stage: "band-normalization(a-scale)".into(),
        })?;
        let step = EquivalenceStep::ScaleA {
            u: k.from_rational(u),
        };
        cur = apply_step(k, &cur, &step)?;
        steps.push(step);
    }

    if !in_band(k, &cur.b, eps) {
        let centre = Rational::one() + eps / rat_int(2);
        let inv_b = k.inv(&cur.b)?;
        let shift = k.mul_rational(&inv_b, &centre);
        let mut found = None;
        'outer: for w in 0u32..=64 {
            // Aim b(v^2 - a w^2) = centre, i.e. v^2 = a w^2 + centre/b.
            let wr = rat_int(w as i64);
            let v_sq = k.add(&k.mul_rational(&cur.a, &(&wr * &wr)), &shift);
            if k.certified_sign(&v_sq) != 1 {
                continue;
            }
            let target = sqrt_target(k, &v_sq);
            for q in 1..=1000u32 {
                let qr = rat_int(q as i64);
                let p = round_nearest(&(&qr * &target));
                if !p.is_positive() {
                    continue;
                }
                let v = Rational::new(p, qr.numer().clone());
                let vv = k.from_rational(&v * &v);
                let ww = k.mul_rational(&cur.a, &(&wr * &wr));
                let candidate_b = k.mul(&cur.b, &k.sub(&vv, &ww));
                if in_band(k, &candidate_b, eps) {
                    found = Some((v, wr));
                    break 'outer;
                }
            }
        }
        let (v, w) = found.ok_or_else(|| Error::BudgetExhausted {
            stage: "band-normalization(b-mix)".into(),
        })?;
        let step = EquivalenceStep::MixB {
            v: k.from_rational(v),
            w: k.from_rational(w),
        };
        cur = apply_step(k, &cur, &step)?;
        steps.push(step);
    }

    debug_assert!(in_band(k, &cur.a, eps) && in_band(k, &cur.b, eps));
    Ok((cur, steps))
}
