//! The four generator matrices of the genus-2 surface group, in exact
//! symbolic form, and the verification that every trace needed to compute
//! the group's invariants lies in the rational function field Q(r, s, t).
//!
//! The surface is a once-holed torus glued to its mirror image.  The torus
//! side is generated by two hyperbolic elements with half-traces `r` and `s`
//! whose product has half-trace `t`; the mirror side is obtained by
//! conjugating with `diag(1, -1)` (the [`QMatrix::reflect`] map).  The
//! entries involve the square root of `c^2 - 1` and a free positive scale
//! `n`, but the traces of the fourteen words checked here are free of both —
//! that fact is what makes `r`, `s`, `t` generate the trace field, and this
//! module proves it by exact computation.

use crate::arith::rat;
use crate::error::{Error, Result};
use crate::symbolic::poly::{c_poly, VAR_N, VAR_R, VAR_S, VAR_T};
use crate::symbolic::qmatrix::QMatrix;
use crate::symbolic::tower::{MultiRat, TowerElement};

/// One of the four group generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    Rho,
    Sigma,
    RhoPrime,
    SigmaPrime,
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Rho => 0,
            Letter::Sigma => 1,
            Letter::RhoPrime => 2,
            Letter::SigmaPrime => 3,
        }
    }
}

/// A named word in the generators whose trace the trace-field theorem
/// needs.
#[derive(Clone, Copy, Debug)]
pub struct TraceWord {
    pub name: &'static str,
    pub letters: &'static [Letter],
}

/// The fourteen words whose traces generate the trace field: the four
/// generators, products of two generators from opposite sides, and the
/// three-letter words that tie both sides together.
pub fn trace_words() -> &'static [TraceWord] {
    use Letter::{Rho, RhoPrime, Sigma, SigmaPrime};
    const WORDS: [TraceWord; 14] = [
        TraceWord { name: "rho", letters: &[Rho] },
        TraceWord { name: "sigma", letters: &[Sigma] },
        TraceWord { name: "rho'", letters: &[RhoPrime] },
        TraceWord { name: "sigma'", letters: &[SigmaPrime] },
        TraceWord { name: "rho sigma", letters: &[Rho, Sigma] },
        TraceWord { name: "rho' sigma'", letters: &[RhoPrime, SigmaPrime] },
        TraceWord { name: "rho rho'", letters: &[Rho, RhoPrime] },
        TraceWord { name: "rho sigma'", letters: &[Rho, SigmaPrime] },
        TraceWord { name: "sigma rho'", letters: &[Sigma, RhoPrime] },
        TraceWord { name: "sigma sigma'", letters: &[Sigma, SigmaPrime] },
        TraceWord { name: "rho sigma rho'", letters: &[Rho, Sigma, RhoPrime] },
        TraceWord { name: "rho sigma sigma'", letters: &[Rho, Sigma, SigmaPrime] },
        TraceWord { name: "rho rho' sigma'", letters: &[Rho, RhoPrime, SigmaPrime] },
        TraceWord { name: "sigma rho' sigma'", letters: &[Sigma, RhoPrime, SigmaPrime] },
    ];
    &WORDS
}

fn c_rat() -> MultiRat {
    MultiRat::from_poly(c_poly())
}

/// `2rs - t + ct`, the polynomial shared by several matrix entries.
fn b_poly() -> MultiRat {
    let r = MultiRat::var(VAR_R);
    let s = MultiRat::var(VAR_S);
    let t = MultiRat::var(VAR_T);
    r.mul(&s).scale_int(2).sub(&t).add(&c_rat().mul(&t))
}

/// `r(c - 1) + st - stc`, the polynomial shared by the closed forms of the
/// three-letter words.
fn a_poly() -> MultiRat {
    let r = MultiRat::var(VAR_R);
    let s = MultiRat::var(VAR_S);
    let t = MultiRat::var(VAR_T);
    let c = c_rat();
    let one = MultiRat::one();
    let st = s.mul(&t);
    r.mul(&c.sub(&one)).add(&st).sub(&st.mul(&c))
}

/// `c - 1 + 2s^2`, the denominator attached to the second generator.
fn s_denom() -> MultiRat {
    let s = MultiRat::var(VAR_S);
    c_rat()
        .sub(&MultiRat::one())
        .add(&s.mul(&s).scale_int(2))
}

/// The four generator matrices `[rho, sigma, rho', sigma']`.
///
/// With `w` the square root of `c^2 - 1` and `n > 0` the free scale:
///
/// ```text
/// rho   = r E + (r(c+1)/w) I - n(2rs - t + (c+w)t)/(2(c-1+2s^2)) P
///           + (2rs - t + (c-w)t)/(2n(c-1)) Q
/// sigma = s E - (s(c+1)/w) I + (n/2) P - (c-1+2s^2)/(2n(c-1)) Q
/// ```
///
/// and the primed generators negate the `P` and `Q` coordinates.
pub fn generators() -> [QMatrix; 4] {
    let r = MultiRat::var(VAR_R);
    let s = MultiRat::var(VAR_S);
    let t = MultiRat::var(VAR_T);
    let n = MultiRat::var(VAR_N);
    let one = MultiRat::one();
    let c = c_rat();
    let cm1 = c.sub(&one);
    let cp1 = c.add(&one);
    let sden = s_denom();
    let b = b_poly();
    let w = TowerElement::radical();
    let winv = w.inv();

    let rho = QMatrix::new([
        TowerElement::from_rat(r.clone()),
        winv.scale(&r.mul(&cp1)),
        TowerElement::from_rat(b.clone())
            .add(&w.scale(&t))
            .scale(&n.div(&sden.scale_int(2)).neg()),
        TowerElement::from_rat(b.clone())
            .sub(&w.scale(&t))
            .scale(&one.div(&n.mul(&cm1).scale_int(2))),
    ]);
    let sigma = QMatrix::new([
        TowerElement::from_rat(s.clone()),
        winv.scale(&s.mul(&cp1)).neg(),
        TowerElement::from_rat(n.scale(&rat(1, 2))),
        TowerElement::from_rat(sden.div(&n.mul(&cm1).scale_int(2)).neg()),
    ]);
    let rho_prime = rho.reflect();
    let sigma_prime = sigma.reflect();
    [rho, sigma, rho_prime, sigma_prime]
}

/// The product of the first two generators in closed form:
///
/// ```text
/// rho sigma = t E + (tw/(c-1)) I
///   + ((c+1+w) n (A - stw) / (2w(c-1+2s^2))) P
///   + ((c+1-w) (A + stw) / (2nw(c-1))) Q
/// ```
///
/// with `A = r(c-1) + st - stc`.  The field division by `w` is carried out
/// exactly by the tower arithmetic.
pub fn product_closed_form() -> QMatrix {
    let s = MultiRat::var(VAR_S);
    let t = MultiRat::var(VAR_T);
    let n = MultiRat::var(VAR_N);
    let one = MultiRat::one();
    let c = c_rat();
    let cm1 = c.sub(&one);
    let cp1 = c.add(&one);
    let st = s.mul(&t);
    let a = a_poly();
    let w = TowerElement::radical();

    let q0 = TowerElement::from_rat(t.clone());
    let q1 = w.scale(&t.div(&cm1));
    let q2 = TowerElement::from_rat(cp1.clone())
        .add(&w)
        .mul(&TowerElement::from_rat(a.clone()).sub(&w.scale(&st)))
        .scale(&n)
        .div(&w.scale(&s_denom().scale_int(2)));
    let q3 = TowerElement::from_rat(cp1)
        .sub(&w)
        .mul(&TowerElement::from_rat(a).add(&w.scale(&st)))
        .div(&w.scale(&n.mul(&cm1).scale_int(2)));
    QMatrix::new([q0, q1, q2, q3])
}

/// The closed form of the trace of a listed word, as a rational function of
/// `r`, `s`, `t` alone, or `None` for an unlisted name.  Words carried into
/// each other by the mirror symmetry share a form.
pub fn closed_trace_form(name: &str) -> Option<MultiRat> {
    let r = MultiRat::var(VAR_R);
    let s = MultiRat::var(VAR_S);
    let t = MultiRat::var(VAR_T);
    let one = MultiRat::one();
    let c = c_rat();
    let cm1 = c.sub(&one);
    let cp1 = c.add(&one);
    let form = match name {
        "rho" | "rho'" => r.scale_int(2),
        "sigma" | "sigma'" => s.scale_int(2),
        "rho sigma" | "rho' sigma'" => t.scale_int(2),
        "rho rho'" => {
            // 2r^2 + 2r^2(c+1)^2/(c^2-1)
            //      + 2((2rs - t + ct)^2 - (c^2-1)t^2)/((c-1+2s^2)(c-1))
            let r2 = r.mul(&r);
            let c2m1 = cp1.mul(&cm1);
            let b = b_poly();
            r2.scale_int(2)
                .add(&r2.scale_int(2).mul(&cp1).mul(&cp1).div(&c2m1))
                .add(
                    &b.mul(&b)
                        .sub(&c2m1.mul(&t).mul(&t))
                        .scale_int(2)
                        .div(&s_denom().mul(&cm1)),
                )
        }
        "rho sigma'" | "sigma rho'" => {
            // 2rs - 2rs(c+1)/(c-1) - 2(2rs - t + ct)/(c-1)
            let rs = r.mul(&s);
            rs.scale_int(2)
                .sub(&rs.scale_int(2).mul(&cp1).div(&cm1))
                .sub(&b_poly().scale_int(2).div(&cm1))
        }
        "sigma sigma'" => {
            // 2s^2 + 2s^2(c+1)/(c-1) + 2(c-1+2s^2)/(c-1)
            let s2 = s.mul(&s);
            s2.scale_int(2)
                .add(&s2.scale_int(2).mul(&cp1).div(&cm1))
                .add(&s_denom().scale_int(2).div(&cm1))
        }
        "rho sigma rho'" | "rho rho' sigma'" => {
            // 2tr + 2tr(c+1)/(c-1) + 2(c+1)(r - 2st)t/(c-1+2s^2)
            //     + 2(2stc - r(c-1))(2rs - t + tc)/((c-1)(c-1+2s^2))
            let tr = t.mul(&r);
            let st = s.mul(&t);
            tr.scale_int(2)
                .add(&tr.scale_int(2).mul(&cp1).div(&cm1))
                .add(
                    &cp1.mul(&r.sub(&st.scale_int(2)))
                        .mul(&t)
                        .scale_int(2)
                        .div(&s_denom()),
                )
                .add(
                    &st.mul(&c)
                        .scale_int(2)
                        .sub(&r.mul(&cm1))
                        .mul(&b_poly())
                        .scale_int(2)
                        .div(&cm1.mul(&s_denom())),
                )
        }
        "rho sigma sigma'" | "sigma rho' sigma'" => {
            // 2ts - 2ts(c+1)/(c-1) + 2(r(c-1) + st - stc)/(c-1)
            //     - 2(c+1)st/(c-1)
            let ts = t.mul(&s);
            ts.scale_int(2)
                .sub(&ts.scale_int(2).mul(&cp1).div(&cm1))
                .add(&a_poly().scale_int(2).div(&cm1))
                .sub(&cp1.mul(&s).mul(&t).scale_int(2).div(&cm1))
        }
        _ => return None,
    };
    Some(form)
}

/// Multiplies out a word left to right.
pub fn word_matrix(gens: &[QMatrix; 4], letters: &[Letter]) -> QMatrix {
    let mut out = QMatrix::identity();
    for letter in letters {
        out = out.mul(&gens[letter.index()]);
    }
    out
}

/// Verifies, by exact symbolic computation, that the trace of every listed
/// word is free of both the radical `w` and the scale `n`, and agrees with
/// its closed form in Q(r, s, t).  Returns the table of word names and
/// traces.
pub fn check_trace_field_membership() -> Result<Vec<(String, MultiRat)>> {
    let gens = generators();
    let mut table = Vec::with_capacity(trace_words().len());
    for word in trace_words() {
        let violation = |detail: &str| Error::TheoremViolation {
            word: word.name.to_string(),
            detail: detail.to_string(),
        };
        let trace = word_matrix(&gens, word.letters).trace();
        if !trace.is_base() {
            return Err(violation("trace has a nonzero radical part"));
        }
        let trace = trace.base().clone();
        if !trace.is_free_of(VAR_N) {
            return Err(violation("trace depends on the free scale n"));
        }
        let expected =
            closed_trace_form(word.name).expect("every listed word has a closed form");
        if trace != expected {
            return Err(violation("trace disagrees with its closed form"));
        }
        table.push((word.name.to_string(), trace));
    }
    Ok(table)
}

/// Verifies coordinatewise that multiplying the first two generators
/// reproduces [`product_closed_form`].
pub fn check_product_closed_form() -> Result<()> {
    let gens = generators();
    let direct = gens[0].mul(&gens[1]);
    let closed = product_closed_form();
    for i in 0..4 {
        if direct.coord(i) != closed.coord(i) {
            return Err(Error::IdentityViolation(format!(
                "product of the first two generators differs from its closed form in coordinate {i}"
            )));
        }
    }
    Ok(())
}

/// Verifies the commutator identities that drive both the boundary gluing
/// and the invariant-computation shortcuts:
///
/// 1. all four generators have determinant 1 (so adjugates are inverses);
/// 2. `tr [rho, sigma] = -2c`;
/// 3. `[rho sigma, sigma] = [rho, sigma]` (free reduction of words);
/// 4. `[rho, sigma]` is diagonal, hence fixed by the mirror map;
/// 5. `[rho', sigma'] = [rho, sigma]`;
/// 6. `[rho, sigma] [rho', sigma']^{-1}` is the identity — the genus-2
///    surface relation for this generating set.
pub fn check_commutator_identities() -> Result<()> {
    let violation = |detail: &str| Error::IdentityViolation(detail.to_string());
    let gens = generators();
    let names = ["rho", "sigma", "rho'", "sigma'"];
    for (g, name) in gens.iter().zip(names) {
        if g.det_form() != TowerElement::one() {
            return Err(violation(&format!("{name} does not have determinant 1")));
        }
    }
    let [rho, sigma, rho_p, sigma_p] = &gens;
    let commutator = |a: &QMatrix, b: &QMatrix| {
        a.mul(b).mul(&a.adjugate()).mul(&b.adjugate())
    };
    let k = commutator(rho, sigma);
    let trace = k.trace();
    if !trace.is_base() || *trace.base() != c_rat().scale_int(-2) {
        return Err(violation("the commutator trace is not -2c"));
    }
    let shifted = commutator(&rho.mul(sigma), sigma);
    if shifted != k {
        return Err(violation(
            "replacing the first generator by the product changes the commutator",
        ));
    }
    if !k.coord(2).is_zero() || !k.coord(3).is_zero() {
        return Err(violation("the commutator is not diagonal"));
    }
    let k_mirror = commutator(rho_p, sigma_p);
    if k_mirror != k {
        return Err(violation("the mirrored commutator differs"));
    }
    let relation = k.mul(&k_mirror.adjugate());
    if relation != QMatrix::identity() {
        return Err(violation("the surface relation does not close"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_int, Rational, UniPoly};
    use crate::field::{FieldElement, NumberField};
    use crate::symbolic::poly::NVARS;

    #[test]
    fn generator_traces_and_unit_determinants() {
        let gens = generators();
        let expected = [VAR_R, VAR_S, VAR_R, VAR_S];
        for (g, var) in gens.iter().zip(expected) {
            let tr = g.trace();
            assert!(tr.is_base());
            assert_eq!(*tr.base(), MultiRat::var(var).scale_int(2));
            assert_eq!(g.det_form(), TowerElement::one());
        }
    }

    #[test]
    fn product_matches_its_closed_form() {
        check_product_closed_form().unwrap();
        // and the closed form's own trace is 2t
        let closed = product_closed_form();
        assert_eq!(*closed.trace().base(), MultiRat::var(VAR_T).scale_int(2));
    }

    #[test]
    fn commutator_identities_hold() {
        check_commutator_identities().unwrap();
    }

    #[test]
    fn boundary_word_traces_lie_in_the_trace_field() {
        let table = check_trace_field_membership().unwrap();
        assert_eq!(table.len(), 14);
        // frozen values at r = s = t = 2 (where c = 9)
        let spot = [rat_int(2), rat_int(2), rat_int(2), rat_int(1)];
        let expected: [(&str, i64); 14] = [
            ("rho", 4),
            ("sigma", 4),
            ("rho'", 4),
            ("sigma'", 4),
            ("rho sigma", 4),
            ("rho' sigma'", 4),
            ("rho rho'", 22),
            ("rho sigma'", -8),
            ("sigma rho'", -8),
            ("sigma sigma'", 22),
            ("rho sigma rho'", 24),
            ("rho sigma sigma'", -16),
            ("rho rho' sigma'", 24),
            ("sigma rho' sigma'", -16),
        ];
        for ((name, trace), (expected_name, value)) in table.iter().zip(expected) {
            assert_eq!(name, expected_name);
            assert_eq!(trace.eval(&spot), Some(rat_int(value)), "word {name}");
        }
    }

    /// Specializes a symbolic matrix at rational parameter values inside the
    /// field generated by the square root of `c^2 - 1`, producing an honest
    /// 2x2 matrix.
    fn specialize(
        k: &NumberField,
        m: &QMatrix,
        vals: &[Rational; NVARS],
    ) -> [[FieldElement; 2]; 2] {
        let q: Vec<FieldElement> = m
            .coords()
            .iter()
            .map(|entry| {
                let base = entry.base().eval(vals).expect("nonvanishing denominator");
                let ext = entry.ext().eval(vals).expect("nonvanishing denominator");
                k.add(&k.from_rational(base), &k.mul_rational(&k.gen(), &ext))
            })
            .collect();
        [
            [k.add(&q[0], &q[1]), k.mul_rational(&q[2], &rat_int(2))],
            [k.mul_rational(&q[3], &rat_int(2)), k.sub(&q[0], &q[1])],
        ]
    }

    fn mat_mul(
        k: &NumberField,
        a: &[[FieldElement; 2]; 2],
        b: &[[FieldElement; 2]; 2],
    ) -> [[FieldElement; 2]; 2] {
        let entry = |i: usize, j: usize| {
            k.add(&k.mul(&a[i][0], &b[0][j]), &k.mul(&a[i][1], &b[1][j]))
        };
        [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
    }

    #[test]
    fn exact_field_oracle_confirms_the_trace_table() {
        // at r = s = t = 2 the radicand is c^2 - 1 = 80, so the entries live
        // in the real quadratic field generated by the positive root of
        // x^2 - 80; matrix products there are computed with no symbolic
        // machinery at all
        let modulus = UniPoly::from_ints(&[-80, 0, 1]);
        let k = NumberField::new(&modulus, 1).unwrap();
        let table = check_trace_field_membership().unwrap();
        let gens = generators();
        for n in [1i64, 2] {
            let spot = [rat_int(2), rat_int(2), rat_int(2), rat_int(n)];
            let mats: Vec<[[FieldElement; 2]; 2]> =
                gens.iter().map(|g| specialize(&k, g, &spot)).collect();
            for (word, (name, symbolic)) in trace_words().iter().zip(&table) {
                assert_eq!(word.name, name);
                let mut prod = [
                    [k.one(), k.zero()],
                    [k.zero(), k.one()],
                ];
                for letter in word.letters {
                    prod = mat_mul(&k, &prod, &mats[letter.index()]);
                }
                let trace = k.add(&prod[0][0], &prod[1][1]);
                let expected = k.from_rational(symbolic.eval(&spot).unwrap());
                assert!(
                    k.sub(&trace, &expected).is_zero(),
                    "word {name} at n = {n}"
                );
            }
        }
        // the scale changes the matrices themselves, only the traces are
        // invariant
        let at1 = specialize(&k, &gens[0], &[rat_int(2), rat_int(2), rat_int(2), rat_int(1)]);
        let at2 = specialize(&k, &gens[0], &[rat_int(2), rat_int(2), rat_int(2), rat_int(2)]);
        assert!(!k.sub(&at1[0][1], &at2[0][1]).is_zero());
    }

    #[test]
    fn closed_forms_cover_exactly_the_listed_words() {
        for word in trace_words() {
            assert!(closed_trace_form(word.name).is_some());
        }
        assert!(closed_trace_form("tau").is_none());
        assert!(closed_trace_form("").is_none());
        // mirror partners genuinely share one form
        assert_eq!(
            closed_trace_form("rho sigma'"),
            closed_trace_form("sigma rho'")
        );
    }
}
