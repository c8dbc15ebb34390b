//! Exact solutions of the five-variable quadric
//! `x² − a·y² + a·u² − b·v² + a·b·w² = 0` subject to `z² − 4 = a·u²`.
//!
//! Every rational line through the initial solution `(0, 1, 1, 0, 0)` meets
//! the quadric in exactly one further point; the direction `(m₁, …, m₅)`
//! is the search parameter. A subsequent homogeneous rescaling by `d`
//! pins `z − 2 = u` and `z + 2 = a·u`, which forces the norm identity
//! `z² − 4 = a·u²` exactly.

use crate::arith::{rat, Rational};
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};

/// Direction numbers of a rational line through the initial solution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamPoint {
    pub m1: FieldElement,
    pub m2: FieldElement,
    pub m3: FieldElement,
    pub m4: FieldElement,
    pub m5: FieldElement,
}

impl ParamPoint {
    pub fn new(m: [FieldElement; 5]) -> Self {
        let [m1, m2, m3, m4, m5] = m;
        ParamPoint { m1, m2, m3, m4, m5 }
    }
}

/// A fully scaled solution: both defining identities hold exactly and
/// `u ≠ 0`. Only `scaled_solution` constructs values of this type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadricSolution {
    x: FieldElement,
    y: FieldElement,
    z: FieldElement,
    u: FieldElement,
    v: FieldElement,
    w: FieldElement,
    d: FieldElement,
    tau: FieldElement,
    params: ParamPoint,
}

impl QuadricSolution {
    /// Reassembles a solution from recorded components without checking any
    /// identities.  Intended for certificate loading only: verification
    /// replays the construction from the parameters and compares against
    /// these values, so nothing is trusted.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        x: FieldElement,
        y: FieldElement,
        z: FieldElement,
        u: FieldElement,
        v: FieldElement,
        w: FieldElement,
        d: FieldElement,
        tau: FieldElement,
        params: ParamPoint,
    ) -> Self {
        QuadricSolution {
            x,
            y,
            z,
            u,
            v,
            w,
            d,
            tau,
            params,
        }
    }

    pub fn x(&self) -> &FieldElement {
        &self.x
    }
    pub fn y(&self) -> &FieldElement {
        &self.y
    }
    pub fn z(&self) -> &FieldElement {
        &self.z
    }
    pub fn u(&self) -> &FieldElement {
        &self.u
    }
    pub fn v(&self) -> &FieldElement {
        &self.v
    }
    pub fn w(&self) -> &FieldElement {
        &self.w
    }
    pub fn d(&self) -> &FieldElement {
        &self.d
    }
    pub fn tau(&self) -> &FieldElement {
        &self.tau
    }
    pub fn params(&self) -> &ParamPoint {
        &self.params
    }
}

/// Residual of the quadric at `(x, y, u, v, w)`:
/// `x² − a·y² + a·u² − b·v² + a·b·w²`. Zero iff the point lies on it.
pub fn quadric_residual(
    k: &NumberField,
    a: &FieldElement,
    b: &FieldElement,
    x: &FieldElement,
    y: &FieldElement,
    u: &FieldElement,
    v: &FieldElement,
    w: &FieldElement,
) -> FieldElement {
    let ab = k.mul(a, b);
    let mut acc = k.mul(x, x);
    acc = k.sub(&acc, &k.mul(a, &k.mul(y, y)));
    acc = k.add(&acc, &k.mul(a, &k.mul(u, u)));
    acc = k.sub(&acc, &k.mul(b, &k.mul(v, v)));
    acc = k.add(&acc, &k.mul(&ab, &k.mul(w, w)));
    acc
}

/// Residual of the norm identity: `z² − 4 − a·u²`.
pub fn norm_residual(
    k: &NumberField,
    a: &FieldElement,
    z: &FieldElement,
    u: &FieldElement,
) -> FieldElement {
    let zz = k.sub(&k.mul(z, z), &k.from_int(4));
    k.sub(&zz, &k.mul(a, &k.mul(u, u)))
}

/// The line parameter `τ = 2a(m₂ − m₃)/D` with
/// `D = m₁² − a·m₂² + a·m₃² − b·m₄² + a·b·m₅²`; the line through the
/// initial solution with direction `m` meets the quadric again at `τ`.
pub fn param_tau(
    k: &NumberField,
    a: &FieldElement,
    b: &FieldElement,
    m: &ParamPoint,
) -> Result<FieldElement> {
    let denom = quadric_residual(k, a, b, &m.m1, &m.m2, &m.m3, &m.m4, &m.m5);
    if denom.is_zero() {
        return Err(Error::SingularDirection);
    }
    let num = k.mul_rational(&k.mul(a, &k.sub(&m.m2, &m.m3)), &rat(2, 1));
    k.div(&num, &denom)
}

/// The second intersection point of the line with the quadric:
/// `(m₁τ, m₂τ+1, m₃τ+1, m₄τ, m₅τ)` as `(x, y, u, v, w)`.
pub fn base_solution(
    k: &NumberField,
    a: &FieldElement,
    b: &FieldElement,
    m: &ParamPoint,
) -> Result<[FieldElement; 5]> {
    let tau = param_tau(k, a, b, m)?;
    Ok([
        k.mul(&m.m1, &tau),
        k.add(&k.mul(&m.m2, &tau), &k.one()),
        k.add(&k.mul(&m.m3, &tau), &k.one()),
        k.mul(&m.m4, &tau),
        k.mul(&m.m5, &tau),
    ])
}

/// The homogeneous scale `d = 4/((m₃τ + 1)(a − 1))` making
/// `z − 2 = (m₃τ+1)d` and `z + 2 = a(m₃τ+1)d` consistent.
pub fn choose_d(
    k: &NumberField,
    a: &FieldElement,
    m3: &FieldElement,
    tau: &FieldElement,
) -> Result<FieldElement> {
    let a_minus_1 = k.sub(a, &k.one());
    if a_minus_1.is_zero() {
        return Err(Error::UnitA);
    }
    let u_base = k.add(&k.mul(m3, tau), &k.one());
    if u_base.is_zero() {
        return Err(Error::ZeroU);
    }
    k.div(&k.from_int(4), &k.mul(&u_base, &a_minus_1))
}

/// The full solution scaled by `d`, with
/// `z = (a+1)(m₃τ+1)d/2 = 2(a+1)/(a−1)`. Both residuals are exactly zero
/// and `u = 4/(a−1) ≠ 0`.
pub fn scaled_solution(
    k: &NumberField,
    a: &FieldElement,
    b: &FieldElement,
    m: &ParamPoint,
) -> Result<QuadricSolution> {
    let tau = param_tau(k, a, b, m)?;
    let d = choose_d(k, a, &m.m3, &tau)?;
    let base = base_solution(k, a, b, m)?;
    let [bx, by, bu, bv, bw] = base;
    let x = k.mul(&bx, &d);
    let y = k.mul(&by, &d);
    let u = k.mul(&bu, &d);
    let v = k.mul(&bv, &d);
    let w = k.mul(&bw, &d);
    let z = k.mul_rational(&k.mul(&k.add(a, &k.one()), &u), &rat(1, 2));
    debug_assert!(quadric_residual(k, a, b, &x, &y, &u, &v, &w).is_zero());
    debug_assert!(norm_residual(k, a, &z, &u).is_zero());
    debug_assert!(!u.is_zero());
    Ok(QuadricSolution {
        x,
        y,
        z,
        u,
        v,
        w,
        d,
        tau,
        params: m.clone(),
    })
}

/// A rescalable handle on a solution: the symbol slots and the direction
/// numbers. Rescaling multiplies the 1st, 4th and 5th direction numbers by
/// `r`, which moves the generator value `y/u` along a controlled law while
/// keeping the quadric identities intact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolutionFamily {
    pub a: FieldElement,
    pub b: FieldElement,
    pub m: [FieldElement; 5],
}

impl SolutionFamily {
    pub fn solution(&self, k: &NumberField) -> Result<QuadricSolution> {
        scaled_solution(k, &self.a, &self.b, &ParamPoint::new(self.m.clone()))
    }

    pub fn rescaled(&self, k: &NumberField, r: &Rational) -> SolutionFamily {
        let [m1, m2, m3, m4, m5] = self.m.clone();
        SolutionFamily {
            a: self.a.clone(),
            b: self.b.clone(),
            m: [
                k.mul_rational(&m1, r),
                m2,
                m3,
                k.mul_rational(&m4, r),
                k.mul_rational(&m5, r),
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_int, UniPoly};

    fn rationals() -> NumberField {
        NumberField::new(&UniPoly::x(), 0).unwrap()
    }

    fn point(k: &NumberField, m: [i64; 5]) -> ParamPoint {
        ParamPoint::new(m.map(|v| k.from_int(v)))
    }

    #[test]
    fn line_parameter_examples() {
        let k = rationals();
        let one = k.one();
        // m2 = m3 makes the numerator vanish
        let tau = param_tau(&k, &one, &one, &point(&k, [1, 2, 2, 0, 0])).unwrap();
        assert!(tau.is_zero());

        let tau = param_tau(&k, &one, &one, &point(&k, [1, 2, 1, 0, 0])).unwrap();
        assert_eq!(tau, k.from_int(-1));

        assert!(matches!(
            param_tau(&k, &one, &one, &point(&k, [1, 0, 0, 1, 0])),
            Err(Error::SingularDirection)
        ));
    }

    #[test]
    fn base_solutions_lie_on_the_quadric() {
        let k = rationals();
        let one = k.one();
        let a = k.from_int(3);
        let sol = base_solution(&k, &a, &one, &point(&k, [1, 2, 2, 0, 0])).unwrap();
        // tau = 0 reproduces the initial solution
        let expect = [k.zero(), k.one(), k.one(), k.zero(), k.zero()];
        assert_eq!(sol, expect);

        let sol = base_solution(&k, &one, &one, &point(&k, [1, 2, 1, 0, 0])).unwrap();
        assert_eq!(
            sol,
            [
                k.from_int(-1),
                k.from_int(-1),
                k.zero(),
                k.zero(),
                k.zero()
            ]
        );
        let [x, y, u, v, w] = sol;
        assert!(quadric_residual(&k, &one, &one, &x, &y, &u, &v, &w).is_zero());
    }

    #[test]
    fn scale_choice_examples() {
        let k = rationals();
        // m3*tau + 1 = 1 via m3 = 0
        let d = choose_d(&k, &k.from_int(5), &k.zero(), &k.from_int(7)).unwrap();
        assert_eq!(d, k.one());
        // m3*tau + 1 = 2 via m3 = 1, tau = 1
        let d = choose_d(&k, &k.from_int(2), &k.one(), &k.one()).unwrap();
        assert_eq!(d, k.from_int(2));
        assert!(matches!(
            choose_d(&k, &k.one(), &k.zero(), &k.one()),
            Err(Error::UnitA)
        ));
        assert!(matches!(
            choose_d(&k, &k.from_int(5), &k.from_int(-1), &k.one()),
            Err(Error::ZeroU)
        ));
    }

    #[test]
    fn scaled_solution_with_unit_scale() {
        let k = rationals();
        let a = k.from_int(5);
        let b = k.one();
        let sol = scaled_solution(&k, &a, &b, &point(&k, [1, 1, 0, 0, 0])).unwrap();
        assert_eq!(sol.tau(), &k.from_rational(rat(-5, 2)));
        assert_eq!(sol.d(), &k.one());
        assert_eq!(sol.x(), &k.from_rational(rat(-5, 2)));
        assert_eq!(sol.y(), &k.from_rational(rat(-3, 2)));
        assert_eq!(sol.u(), &k.one());
        assert_eq!(sol.z(), &k.from_int(3));
        assert!(sol.v().is_zero() && sol.w().is_zero());
        assert!(
            norm_residual(&k, &a, sol.z(), sol.u()).is_zero(),
            "3^2 - 4 = 5 * 1^2"
        );
    }

    #[test]
    fn zero_tau_reproduces_the_initial_solution_scaled() {
        let k = rationals();
        let a = k.from_int(2);
        let b = k.one();
        let sol = scaled_solution(&k, &a, &b, &point(&k, [1, 1, 1, 0, 0])).unwrap();
        assert!(sol.tau().is_zero());
        assert_eq!(sol.d(), &k.from_int(4));
        assert_eq!(sol.x(), &k.zero());
        assert_eq!(sol.y(), &k.from_int(4));
        assert_eq!(sol.u(), &k.from_int(4));
        assert_eq!(sol.z(), &k.from_int(6));
        assert!(norm_residual(&k, &a, sol.z(), sol.u()).is_zero());
    }

    #[test]
    fn rescaling_moves_only_the_odd_slots() {
        let k = rationals();
        let fam = SolutionFamily {
            a: k.from_int(2),
            b: k.from_int(3),
            m: [1, 2, 3, 4, 5].map(|v| k.from_int(v)),
        };
        let r = rat(7, 2);
        let scaled = fam.rescaled(&k, &r);
        assert_eq!(scaled.m[0], k.from_rational(rat(7, 2)));
        assert_eq!(scaled.m[1], k.from_int(2));
        assert_eq!(scaled.m[2], k.from_int(3));
        assert_eq!(scaled.m[3], k.from_int(14));
        assert_eq!(scaled.m[4], k.from_rational(rat(35, 2)));
        assert_eq!(rat_int(35) / rat_int(2), rat(35, 2));
    }
}
