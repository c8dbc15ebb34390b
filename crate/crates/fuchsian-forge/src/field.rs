//! Real number fields presented as `Q[x]/(f)` with a selected real root.
//!
//! A field is a monic squarefree modulus together with an isolating interval
//! for one of its real roots (the embedding). Elements are coordinate
//! vectors in the power basis `1, theta, ..., theta^(n-1)`. All arithmetic
//! is exact; questions about the real embedding (signs, enclosures) are
//! answered by refining the root interval until the answer is certified.
//!
//! Irreducibility of the modulus is not checked up front. A reducible
//! modulus surfaces dynamically: inversion of a nonzero non-unit reports the
//! discovered factor as evidence.

use num_traits::{One, Signed, Zero};

use crate::arith::{
    isolate_real_roots, poly_gcd, poly_xgcd, refine_root, sign_variations, sturm_chain,
    RealInterval, Rational, UniPoly,
};
use crate::error::{Error, Result};

/// An element of a number field, as coordinates in the power basis.
///
/// The vector length always equals the field degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldElement {
    coords: Vec<Rational>,
}

impl FieldElement {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The rational value when the element is rational (all higher
    /// coordinates zero).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }
}

/// A real number field: monic squarefree modulus, index of the chosen real
/// root in ascending order, and an isolating interval for that root.
///
/// Values are immutable after construction and all operations are pure, so
/// a field can be shared freely across threads.
#[derive(Clone, Debug)]
pub struct NumberField {
    modulus: UniPoly,
    embedding_index: usize,
    root_interval: RealInterval,
}

impl NumberField {
    /// Builds the field `Q[x]/(f)` with the `index`-th real root of `f`
    /// (ascending) as the distinguished embedding.
    ///
    /// `f` need not be monic; it is normalized. Fails with `NonSquarefree`
    /// for repeated roots and `NoSuchRealEmbedding` when `f` has at most
    /// `index` real roots.
    pub fn new(f: &UniPoly, index: usize) -> Result<Self> {
        if f.degree().map_or(true, |d| d == 0) {
            return Err(Error::NoSuchRealEmbedding);
        }
        let modulus = f.monic();
        let roots = isolate_real_roots(&modulus)?;
        let root_interval = roots.get(index).ok_or(Error::NoSuchRealEmbedding)?.clone();
        Ok(NumberField {
            modulus,
            embedding_index: index,
            root_interval,
        })
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn embedding_index(&self) -> usize {
        self.embedding_index
    }

    pub fn root_interval(&self) -> &RealInterval {
        &self.root_interval
    }

    /// Field degree `n = deg f`.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coords: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, q: Rational) -> FieldElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = q;
        FieldElement { coords }
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(crate::arith::rat_int(n))
    }

    /// The distinguished root `theta` as an element (zero for degree 1
    /// fields with modulus `x`, etc.).
    pub fn gen(&self) -> FieldElement {
        self.reduce(&UniPoly::x())
    }

    /// Reduces an arbitrary polynomial in `theta` into coordinates.
    pub fn reduce(&self, p: &UniPoly) -> FieldElement {
        let (_, r) = p.div_rem(&self.modulus);
        let mut coords: Vec<Rational> = r.coeffs().to_vec();
        coords.resize(self.degree(), Rational::zero());
        FieldElement { coords }
    }

    /// Builds an element directly from coordinates (padded or truncated
    /// reduction is *not* applied; the length must match the degree).
    pub fn from_coords(&self, coords: Vec<Rational>) -> Result<FieldElement> {
        if coords.len() != self.degree() {
            return Err(Error::Parse(format!(
                "element has {} coordinates, field degree is {}",
                coords.len(),
                self.degree()
            )));
        }
        Ok(FieldElement { coords })
    }

    /// The representative polynomial of degree `< n`.
    pub fn lift(&self, e: &FieldElement) -> UniPoly {
        UniPoly::new(e.coords.clone())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement {
            coords: a.coords.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.reduce(&self.lift(a).mul(&self.lift(b)))
    }

    pub fn mul_rational(&self, a: &FieldElement, q: &Rational) -> FieldElement {
        FieldElement {
            coords: a.coords.iter().map(|x| x * q).collect(),
        }
    }

    pub fn pow(&self, a: &FieldElement, e: usize) -> FieldElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on the
    /// lift and the modulus.
    ///
    /// A nonzero element whose lift shares a factor with the modulus proves
    /// the modulus reducible; the monic factor is returned as evidence.
    pub fn inv(&self, e: &FieldElement) -> Result<FieldElement> {
        if e.is_zero() {
            return Err(Error::ZeroElement);
        }
        let lifted = self.lift(e);
        let (g, s, _) = poly_xgcd(&lifted, &self.modulus);
        if g.degree() != Some(0) {
            return Err(Error::ReducibleModulus { factor: g });
        }
        // g is the constant 1 after normalization inside xgcd
        Ok(self.reduce(&s))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Monic minimal polynomial of `e` over `Q`: the first linear dependence
    /// among `1, e, e^2, ...`, found by exact Gaussian elimination.
    pub fn minimal_polynomial(&self, e: &FieldElement) -> UniPoly {
        let n = self.degree();
        let mut powers: Vec<FieldElement> = vec![self.one()];
        for _ in 0..n {
            let last = powers.last().unwrap();
            powers.push(self.mul(last, e));
        }
        for k in 1..=n {
            let cols: Vec<&[Rational]> = powers[..k].iter().map(|p| p.coords()).collect();
            if let Some(sol) = solve_exact(&cols, powers[k].coords()) {
                // e^k = sum sol[i] e^i  =>  x^k - sum sol[i] x^i
                let mut coeffs: Vec<Rational> = sol.into_iter().map(|c| -c).collect();
                coeffs.push(Rational::one());
                return UniPoly::new(coeffs);
            }
        }
        unreachable!("powers of an element span at most the field degree");
    }

    /// Does `e` generate the field, i.e. is its minimal polynomial of full
    /// degree?
    pub fn is_generator(&self, e: &FieldElement) -> bool {
        self.minimal_polynomial(e).degree() == Some(self.degree())
    }

    /// Degree of the subfield `Q(a, b)`: the rank of the span of the
    /// products `a^i b^j`.
    pub fn subfield_degree(&self, a: &FieldElement, b: &FieldElement) -> usize {
        let n = self.degree();
        let mut products = Vec::with_capacity(n * n);
        let mut ai = self.one();
        for _ in 0..n {
            let mut aibj = ai.clone();
            for _ in 0..n {
                products.push(aibj.clone());
                aibj = self.mul(&aibj, b);
            }
            ai = self.mul(&ai, a);
        }
        let cols: Vec<&[Rational]> = products.iter().map(|p| p.coords()).collect();
        rank_exact(&cols)
    }

    /// Isolating interval for `theta`, refined to at most the given width.
    pub fn theta_interval(&self, width: &Rational) -> RealInterval {
        refine_root(&self.root_interval, &self.modulus, width)
    }

    /// Certified enclosure of the image of `e` at the embedding, computed
    /// from a `theta` interval of the given refinement width.
    pub fn embed(&self, e: &FieldElement, theta_width: &Rational) -> RealInterval {
        let theta = self.theta_interval(theta_width);
        self.lift(e).eval_interval(&theta)
    }

    /// Refines until the enclosure of `e` is at most `target` wide. The
    /// theta enclosure is refined incrementally, so each halving continues
    /// from the previous interval instead of re-isolating from scratch.
    pub fn embed_to_width(&self, e: &FieldElement, target: &Rational) -> RealInterval {
        let lifted = self.lift(e);
        let start = self.root_interval.width().min(crate::arith::rat(1, 2));
        let mut theta = self.theta_interval(&start);
        loop {
            let iv = lifted.eval_interval(&theta);
            if iv.width() <= *target {
                return iv;
            }
            let next = theta.width() / crate::arith::rat_int(4);
            theta = refine_root(&theta, &self.modulus, &next);
        }
    }

    /// Exact sign of `e` at the embedding: `0` iff `e` is the zero element,
    /// otherwise the interval enclosure is refined until it excludes zero.
    ///
    /// Panics if a nonzero element vanishes at `theta`; that can only happen
    /// for a reducible modulus, which supported flows reject upstream.
    pub fn certified_sign(&self, e: &FieldElement) -> i8 {
        if e.is_zero() {
            return 0;
        }
        let lifted = self.lift(e);
        if let Some(q) = e.as_rational() {
            return if q.is_positive() { 1 } else { -1 };
        }
        // Rule out an exact zero at theta, which would make refinement loop.
        let g = poly_gcd(&lifted, &self.modulus);
        if g.degree().map_or(false, |d| d > 0) && self.vanishes_on_root(&g) {
            panic!(
                "modulus {} is reducible: nonzero element {} vanishes at the embedding",
                self.modulus, lifted
            );
        }
        let start = self.root_interval.width().min(crate::arith::rat(1, 2));
        let mut theta = self.theta_interval(&start);
        loop {
            match lifted.eval_interval(&theta).sign() {
                Some(s) if s != 0 => return s,
                _ => {
                    let next = theta.width() / crate::arith::rat_int(4);
                    theta = refine_root(&theta, &self.modulus, &next);
                }
            }
        }
    }

    /// Does the divisor `g` of the modulus have theta as a root? Exact test
    /// via a Sturm count over the isolating interval.
    fn vanishes_on_root(&self, g: &UniPoly) -> bool {
        let iv = &self.root_interval;
        if iv.is_point() {
            return g.sign_at(iv.lo()) == 0;
        }
        if g.sign_at(iv.lo()) == 0 || g.sign_at(iv.hi()) == 0 {
            // Endpoint roots of g are roots of the modulus too; isolation
            // guarantees modulus endpoints are non-roots, so g cannot vanish
            // there unless the interval is degenerate (handled above).
            return false;
        }
        let chain = sturm_chain(g);
        sign_variations(&chain, iv.lo()) > sign_variations(&chain, iv.hi())
    }
}

/// Solves `cols * x = rhs` exactly; `None` when inconsistent. Free
/// variables are set to zero.
fn solve_exact(cols: &[&[Rational]], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let n = cols.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].clone().recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let delta = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    for row in m.iter().skip(r) {
        if !row[n].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Rational::zero(); n];
    for (k, &c) in pivots.iter().enumerate() {
        sol[c] = m[k][n].clone();
    }
    Some(sol)
}

/// Rank of the column family by exact Gaussian elimination.
fn rank_exact(cols: &[&[Rational]]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let rows = cols[0].len();
    let mut m: Vec<Vec<Rational>> = cols.iter().map(|c| c.to_vec()).collect();
    let mut rank = 0;
    for row in 0..rows {
        let Some(p) = (rank..m.len()).find(|&j| !m[j][row].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][row].clone().recip();
        for x in m[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for j in 0..m.len() {
            if j != rank && !m[j][row].is_zero() {
                let f = m[j][row].clone();
                for i in row..rows {
                    let delta = &f * &m[rank][i];
                    m[j][i] = &m[j][i] - &delta;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn sqrt2_field() -> NumberField {
        NumberField::new(&UniPoly::from_ints(&[-2, 0, 1]), 1).unwrap()
    }

    #[test]
    fn constructs_fields_and_rejects_bad_moduli() {
        let k = sqrt2_field();
        assert_eq!(k.degree(), 2);
        assert!(k.root_interval().lo() > &rat_int(0));

        let cubic = NumberField::new(&UniPoly::from_ints(&[-1, -1, 0, 1]), 0).unwrap();
        let iv = cubic.theta_interval(&rat(1, 8));
        assert!(*iv.lo() >= rat_int(1) && *iv.hi() <= rat_int(2));

        assert!(matches!(
            NumberField::new(&UniPoly::from_ints(&[1, 0, 1]), 0),
            Err(Error::NoSuchRealEmbedding)
        ));
        assert!(matches!(
            NumberField::new(&UniPoly::from_ints(&[-2, 0, 1]), 2),
            Err(Error::NoSuchRealEmbedding)
        ));
        assert!(matches!(
            NumberField::new(&UniPoly::from_ints(&[1, -2, 1]), 0),
            Err(Error::NonSquarefree)
        ));
    }

    #[test]
    fn rational_field_via_linear_modulus() {
        let q = NumberField::new(&UniPoly::x(), 0).unwrap();
        assert_eq!(q.degree(), 1);
        let five = q.from_int(5);
        assert_eq!(q.certified_sign(&five), 1);
        assert_eq!(
            q.minimal_polynomial(&five),
            UniPoly::from_ints(&[-5, 1])
        );
    }

    #[test]
    fn inverse_of_theta_and_of_one_plus_theta() {
        let k = sqrt2_field();
        let theta = k.gen();
        let inv = k.inv(&theta).unwrap();
        assert_eq!(inv.coords(), &[rat_int(0), rat(1, 2)]);
        let e = k.add(&k.one(), &theta);
        let inv = k.inv(&e).unwrap();
        assert_eq!(inv.coords(), &[rat_int(-1), rat_int(1)]);
        assert_eq!(k.mul(&e, &inv), k.one());
        assert!(matches!(k.inv(&k.zero()), Err(Error::ZeroElement)));
    }

    #[test]
    fn reducible_modulus_is_reported_with_a_factor() {
        let k = NumberField::new(&UniPoly::from_ints(&[-1, 0, 1]), 1).unwrap(); // x^2 - 1
        let e = k.sub(&k.gen(), &k.one()); // theta - 1, a zero divisor
        match k.inv(&e) {
            Err(Error::ReducibleModulus { factor }) => {
                assert_eq!(factor, UniPoly::from_ints(&[-1, 1]));
            }
            other => panic!("expected ReducibleModulus, got {other:?}"),
        }
    }

    #[test]
    fn minimal_polynomials_in_sqrt2() {
        let k = sqrt2_field();
        let theta = k.gen();
        assert_eq!(k.minimal_polynomial(&theta), UniPoly::from_ints(&[-2, 0, 1]));
        assert_eq!(
            k.minimal_polynomial(&k.from_int(3)),
            UniPoly::from_ints(&[-3, 1])
        );
        let e = k.add(&k.one(), &theta);
        assert_eq!(k.minimal_polynomial(&e), UniPoly::from_ints(&[-1, -2, 1]));
        assert!(k.is_generator(&e));
        assert!(!k.is_generator(&k.from_int(7)));
    }

    #[test]
    fn certified_signs_track_the_chosen_embedding() {
        let k = sqrt2_field();
        let theta = k.gen();
        // theta - 1 > 0 at the positive root, theta - 3/2 < 0
        assert_eq!(k.certified_sign(&k.sub(&theta, &k.one())), 1);
        assert_eq!(
            k.certified_sign(&k.sub(&theta, &k.from_rational(rat(3, 2)))),
            -1
        );
        assert_eq!(k.certified_sign(&k.zero()), 0);

        let neg = NumberField::new(&UniPoly::from_ints(&[-2, 0, 1]), 0).unwrap();
        assert_eq!(neg.certified_sign(&neg.gen()), -1);
    }

    #[test]
    fn embeddings_enclose_the_root() {
        let k = sqrt2_field();
        let theta = k.gen();
        let iv = k.embed_to_width(&theta, &rat(1, 1_000_000));
        assert!(iv.lo().pow(2) < rat_int(2));
        assert!(iv.hi().pow(2) > rat_int(2));
        // 1 + theta^2 = 3 exactly
        let e = k.add(&k.one(), &k.mul(&theta, &theta));
        let iv = k.embed(&e, &rat(1, 4));
        assert_eq!(iv, RealInterval::point(rat_int(3)));
    }

    #[test]
    fn subfield_degrees() {
        let k = sqrt2_field();
        let theta = k.gen();
        assert_eq!(k.subfield_degree(&theta, &theta), 2);
        assert_eq!(k.subfield_degree(&k.from_int(2), &k.from_int(3)), 1);
        assert_eq!(k.subfield_degree(&k.from_int(2), &theta), 2);
    }
}
