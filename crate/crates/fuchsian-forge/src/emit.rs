//! Numeric side of a certificate: certified interval matrices for the four
//! generators at a chosen scale `M > 0`, at any requested precision.
//!
//! [`emit_matrices`] evaluates the generator entries at the certificate's
//! `r, s, t` with outward-rounded interval arithmetic, including interval
//! square roots of `s² − 1` and `c² − 1` (both positive because the
//! certificate certifies `s, c > 1`).  Precision is adaptive: the working
//! width shrinks until every entry interval is at most `2^(−precision_bits)`
//! wide.
//!
//! [`check_group_relation`] multiplies out the two candidate genus-2
//! boundary relations and reports how close each lands to `±identity`.  The
//! reflection fixes the diagonal commutator exactly — a fact the symbolic
//! module proves — so the expected outcome, frozen into the tests, is that
//! `[ρ,σ]·[ρ′,σ′]⁻¹` is the identity.
//!
//! [`export`]/[`parse_export`] render an emission as a document (exact
//! rational endpoint strings, no floats) and read it back.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::arith::{rat, rat_int, RealInterval, Rational};
use crate::error::{Error, Result};
use crate::field::NumberField;
use crate::realize::{verify_certificate, RealizationCertificate};
use crate::symbolic::Letter;

/// Names of the four emitted generators, in emission order (the same order
/// [`Letter::index`] uses).
pub const GENERATOR_NAMES: [&str; 4] = ["rho", "sigma", "rho'", "sigma'"];

/// A 2×2 matrix of certified interval entries.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalMatrix {
    entries: [[RealInterval; 2]; 2],
}

impl IntervalMatrix {
    pub fn new(entries: [[RealInterval; 2]; 2]) -> Self {
        IntervalMatrix { entries }
    }

    pub fn identity() -> Self {
        let one = || RealInterval::point(rat_int(1));
        let zero = || RealInterval::point(rat_int(0));
        IntervalMatrix {
            entries: [[one(), zero()], [zero(), one()]],
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> &RealInterval {
        &self.entries[row][col]
    }

    pub fn entries(&self) -> &[[RealInterval; 2]; 2] {
        &self.entries
    }

    pub fn mul(&self, other: &IntervalMatrix) -> IntervalMatrix {
        let e = |i: usize, j: usize| {
            self.entries[i][0]
                .mul(&other.entries[0][j])
                .add(&self.entries[i][1].mul(&other.entries[1][j]))
        };
        IntervalMatrix {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn trace(&self) -> RealInterval {
        self.entries[0][0].add(&self.entries[1][1])
    }

    pub fn det(&self) -> RealInterval {
        self.entries[0][0]
            .mul(&self.entries[1][1])
            .sub(&self.entries[0][1].mul(&self.entries[1][0]))
    }

    /// The adjugate — equal to the inverse whenever the underlying exact
    /// matrix has determinant 1, which holds for every generator and every
    /// word in them.
    pub fn adjugate(&self) -> IntervalMatrix {
        IntervalMatrix {
            entries: [
                [self.entries[1][1].clone(), self.entries[0][1].neg()],
                [self.entries[1][0].neg(), self.entries[0][0].clone()],
            ],
        }
    }

    /// Width of the widest entry.
    pub fn max_width(&self) -> Rational {
        self.entries
            .iter()
            .flatten()
            .map(RealInterval::width)
            .max()
            .unwrap()
    }
}

/// `x y x⁻¹ y⁻¹` with inverses taken as adjugates (exact for determinant-1
/// matrices).
pub fn commutator(x: &IntervalMatrix, y: &IntervalMatrix) -> IntervalMatrix {
    x.mul(y).mul(&x.adjugate()).mul(&y.adjugate())
}

/// The trace interval of a word in the four generators.
pub fn word_trace(mats: &[IntervalMatrix; 4], letters: &[Letter]) -> RealInterval {
    letters
        .iter()
        .fold(IntervalMatrix::identity(), |acc, l| {
            acc.mul(&mats[l.index()])
        })
        .trace()
}

/// The four generator matrices together with the data that fixed them.
#[derive(Clone, Debug, PartialEq)]
pub struct Emission {
    /// `rho, sigma, rho', sigma'` in [`Letter::index`] order.
    pub matrices: [IntervalMatrix; 4],
    /// The chosen positive scale.
    pub m: Rational,
    /// Enclosure of the derived scale `M(s√(c²−1) + (c−1)√(s²−1))/(c−1)`.
    pub m_tilde: RealInterval,
    /// Requested precision: every matrix entry is at most
    /// `2^(−precision_bits)` wide.
    pub precision_bits: u32,
}

/// `2^(−bits)` as an exact rational.
pub fn precision_width(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << (bits as usize))
}

/// Evaluates the generator matrices at the certificate's half-traces.
///
/// The certificate is verified first; emission refuses to evaluate
/// unverified data.  The scale must be positive.  Entry intervals come out
/// at most `2^(−precision_bits)` wide.
pub fn emit_matrices(
    k: &NumberField,
    cert: &RealizationCertificate,
    m: &Rational,
    precision_bits: u32,
) -> Result<Emission> {
    if !m.is_positive() {
        return Err(Error::NonpositiveM);
    }
    let report = verify_certificate(k, cert);
    if !report.passed() {
        return Err(Error::InvalidCertificate {
            detail: format!("emission refused: {}", report.failures().join(", ")),
        });
    }

    let target = precision_width(precision_bits);
    // start below the target: the interval arithmetic dilates widths by
    // magnitude-bounded factors, and the loop shrinks until they fit
    let mut working = &target / rat_int(16);
    loop {
        if let Some(emission) = try_emit(k, cert, m, precision_bits, &working) {
            return Ok(emission);
        }
        working /= rat_int(16);
    }
}

/// One emission attempt at a fixed working width.  `None` means the width
/// was too coarse (a square root saw a negative endpoint, a denominator
/// interval touched zero, or an entry came out too wide).
fn try_emit(
    k: &NumberField,
    cert: &RealizationCertificate,
    m: &Rational,
    precision_bits: u32,
    working: &Rational,
) -> Option<Emission> {
    let target = precision_width(precision_bits);
    let one = RealInterval::point(rat_int(1));

    let ir = k.embed_to_width(&cert.r, working);
    let is = k.embed_to_width(&cert.s, working);
    let it = k.embed_to_width(&cert.t, working);
    let ic = k.embed_to_width(&cert.c, working);

    // radicals: c^2 - 1 and s^2 - 1 are certified positive, so for a small
    // enough working width the enclosures admit square roots
    let c2m1 = ic.mul(&ic).sub(&one);
    let s2m1 = is.mul(&is).sub(&one);
    let big_c = c2m1.sqrt(working)?;
    let sqrt_s = s2m1.sqrt(working)?;

    let c_minus_1 = ic.sub(&one);
    let c_plus_1 = ic.add(&one);

    // M~ = M (s C + (c-1) sqrt(s^2-1)) / (c-1)
    let m_tilde = is
        .mul(&big_c)
        .add(&c_minus_1.mul(&sqrt_s))
        .div(&c_minus_1)?
        .scale(m);

    // shared subexpressions of the generator entries
    let b_val = is
        .mul(&ir)
        .scale(&rat_int(2))
        .sub(&it)
        .add(&ic.mul(&it)); // 2rs - t + ct
    let den_s = c_minus_1.add(&is.mul(&is).scale(&rat_int(2))); // c - 1 + 2s^2
    let two = rat_int(2);

    // rho: q0 = r, q1 = r(c+1)/C,
    //      q2 = -M~ (B + tC) / (2(c-1+2s^2)),  q3 = (B - tC) / (2 M~ (c-1))
    let rho = {
        let q0 = ir.clone();
        let q1 = ir.mul(&c_plus_1).div(&big_c)?;
        let q2 = m_tilde
            .mul(&b_val.add(&it.mul(&big_c)))
            .div(&den_s.scale(&two))?
            .neg();
        let q3 = b_val
            .sub(&it.mul(&big_c))
            .div(&m_tilde.mul(&c_minus_1).scale(&two))?;
        coords_to_matrix(&q0, &q1, &q2, &q3)
    };

    // sigma: q0 = s, q1 = -s(c+1)/C, q2 = M~/2, q3 = -(c-1+2s^2)/(2 M~ (c-1))
    let sigma = {
        let q0 = is.clone();
        let q1 = is.mul(&c_plus_1).div(&big_c)?.neg();
        let q2 = m_tilde.scale(&rat(1, 2));
        let q3 = den_s
            .div(&m_tilde.mul(&c_minus_1).scale(&two))?
            .neg();
        coords_to_matrix(&q0, &q1, &q2, &q3)
    };

    // the mirror generators negate the off-diagonal coordinates
    let reflect = |mat: &IntervalMatrix| {
        IntervalMatrix::new([
            [mat.entry(0, 0).clone(), mat.entry(0, 1).neg()],
            [mat.entry(1, 0).neg(), mat.entry(1, 1).clone()],
        ])
    };
    let rho_prime = reflect(&rho);
    let sigma_prime = reflect(&sigma);

    let matrices = [rho, sigma, rho_prime, sigma_prime];
    if matrices.iter().any(|mat| mat.max_width() > target) {
        return None;
    }
    Some(Emission {
        matrices,
        m: m.clone(),
        m_tilde,
        precision_bits,
    })
}

/// Assembles `q0·1 + q1·I + q2·(J+K) + q3·(J−K)` in the 2×2 model
/// (`I = diag(1,−1)`, `J+K` and `J−K` put a 2 in one off-diagonal corner):
/// entries `[[q0+q1, 2q2], [2q3, q0−q1]]`.
fn coords_to_matrix(
    q0: &RealInterval,
    q1: &RealInterval,
    q2: &RealInterval,
    q3: &RealInterval,
) -> IntervalMatrix {
    IntervalMatrix::new([
        [q0.add(q1), q2.scale(&rat_int(2))],
        [q3.scale(&rat_int(2)), q0.sub(q1)],
    ])
}

/// How one candidate boundary word compares to `±identity`.
#[derive(Clone, Debug)]
pub struct RelationCandidate {
    /// The multiplied-out word.
    pub matrix: IntervalMatrix,
    /// Sign of the nearer signed identity: `+1` or `-1`.
    pub nearest_sign: i8,
    /// Largest entrywise distance to that signed identity (an upper bound
    /// on the exact distance, from the interval endpoints).
    pub residual: Rational,
}

impl RelationCandidate {
    fn measure(matrix: IntervalMatrix) -> Self {
        let (plus, minus) = (residual_to(&matrix, 1), residual_to(&matrix, -1));
        let (nearest_sign, residual) = if plus <= minus { (1, plus) } else { (-1, minus) };
        RelationCandidate {
            matrix,
            nearest_sign,
            residual,
        }
    }

    pub fn within(&self, tol: &Rational) -> bool {
        self.residual <= *tol
    }
}

/// Upper bound on the entrywise distance to `sign · identity`.
fn residual_to(mat: &IntervalMatrix, sign: i64) -> Rational {
    let mut worst = Rational::from_integer(0.into());
    for row in 0..2 {
        for col in 0..2 {
            let target = if row == col { rat_int(sign) } else { rat_int(0) };
            let e = mat.entry(row, col);
            let d = (e.lo() - &target).abs().max((e.hi() - &target).abs());
            worst = worst.max(d);
        }
    }
    worst
}

/// Report of [`check_group_relation`]: both candidate relation words with
/// their distances to the nearest signed identity.
#[derive(Clone, Debug)]
pub struct RelationReport {
    /// `[ρ,σ]·[ρ′,σ′]`.
    pub w_plus: RelationCandidate,
    /// `[ρ,σ]·[ρ′,σ′]⁻¹`.
    pub w_minus: RelationCandidate,
    pub tol: Rational,
}

impl RelationReport {
    /// The frozen expected outcome: the reflection fixes the commutator, so
    /// `[ρ,σ]·[ρ′,σ′]⁻¹` is the identity (with sign `+1`).
    pub fn relation_holds(&self) -> bool {
        self.w_minus.nearest_sign == 1 && self.w_minus.within(&self.tol)
    }
}

/// Renders a rational exactly when short, as a rough scientific
/// approximation otherwise.  Display only; all stored values stay exact.
fn compact_rational(q: &Rational) -> String {
    let exact = q.to_string();
    if exact.len() <= 40 {
        return exact;
    }
    let num_digits = q.numer().magnitude().to_string().len() as i64;
    let den_digits = q.denom().magnitude().to_string().len() as i64;
    let e = num_digits - den_digits;
    let shift = 15 - e;
    let pow10 = |n: u32| Rational::from_integer(BigInt::from(10).pow(n));
    let scaled = if shift >= 0 {
        q * pow10(shift as u32)
    } else {
        q / pow10((-shift) as u32)
    };
    let mut mantissa: f64 = scaled
        .to_integer()
        .to_string()
        .parse()
        .unwrap_or(f64::INFINITY);
    mantissa /= 1e15;
    let mut e = e;
    if mantissa != 0.0 && mantissa.abs() < 1.0 {
        mantissa *= 10.0;
        e -= 1;
    }
    format!("~{mantissa:.3}e{e}")
}

impl std::fmt::Display for RelationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (name, cand) in [
            ("[rho,sigma]*[rho',sigma']   ", &self.w_plus),
            ("[rho,sigma]*[rho',sigma']^-1", &self.w_minus),
        ] {
            writeln!(
                f,
                "{name}: residual {} from {}identity ({} tol {})",
                compact_rational(&cand.residual),
                if cand.nearest_sign == 1 { "+" } else { "-" },
                if cand.within(&self.tol) { "within" } else { "exceeds" },
                compact_rational(&self.tol),
            )?;
        }
        write!(
            f,
            "{}",
            if self.relation_holds() {
                "boundary relation holds: [rho,sigma]*[rho',sigma']^-1 = identity"
            } else {
                "boundary relation NOT confirmed"
            }
        )
    }
}

/// Multiplies out both orientations of the genus-2 boundary word and
/// measures each against `±identity`.  Informational: never errors.
pub fn check_group_relation(mats: &[IntervalMatrix; 4], tol: &Rational) -> RelationReport {
    let k1 = commutator(&mats[0], &mats[1]);
    let k2 = commutator(&mats[2], &mats[3]);
    RelationReport {
        w_plus: RelationCandidate::measure(k1.mul(&k2)),
        w_minus: RelationCandidate::measure(k1.mul(&k2.adjugate())),
        tol: tol.clone(),
    }
}

// --- export ----------------------------------------------------------------

/// Format string carried by exported matrix documents.
pub const EXPORT_FORMAT: &str = "fuchsian-forge-matrices/1";

#[derive(Serialize, Deserialize)]
struct EmissionDoc {
    format: String,
    m: String,
    m_tilde: IntervalDoc,
    precision_bits: u32,
    matrices: Vec<MatrixDoc>,
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    name: String,
    entries: [[IntervalDoc; 2]; 2],
}

#[derive(Serialize, Deserialize)]
struct IntervalDoc {
    lo: String,
    hi: String,
    width: String,
}

fn interval_doc(iv: &RealInterval) -> IntervalDoc {
    IntervalDoc {
        lo: iv.lo().to_string(),
        hi: iv.hi().to_string(),
        width: iv.width().to_string(),
    }
}

fn parse_doc_rational(text: &str) -> Result<Rational> {
    let (num_str, den_str) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let parse_int = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational: {text:?}")))
    };
    let num = parse_int(num_str)?;
    let den = parse_int(den_str)?;
    if den == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator: {text:?}")));
    }
    Ok(Rational::new(num, den))
}

fn parse_interval_doc(doc: &IntervalDoc) -> Result<RealInterval> {
    let lo = parse_doc_rational(&doc.lo)?;
    let hi = parse_doc_rational(&doc.hi)?;
    if lo > hi {
        return Err(Error::Parse("interval endpoints out of order".to_string()));
    }
    let iv = RealInterval::new(lo, hi);
    if parse_doc_rational(&doc.width)? != iv.width() {
        return Err(Error::Parse(
            "recorded width disagrees with the endpoints".to_string(),
        ));
    }
    Ok(iv)
}

/// Renders an emission as a document.  Formats: `"attachment"` (structured,
/// suitable for embedding next to a certificate) and `"flat"` (one line per
/// entry).  Both carry exact rational endpoint strings, per-entry widths,
/// the scale `M`, the enclosure of the derived scale, and the precision.
pub fn export(emission: &Emission, format: &str) -> Result<String> {
    match format {
        "attachment" => {
            let doc = EmissionDoc {
                format: EXPORT_FORMAT.to_string(),
                m: emission.m.to_string(),
                m_tilde: interval_doc(&emission.m_tilde),
                precision_bits: emission.precision_bits,
                matrices: GENERATOR_NAMES
                    .iter()
                    .zip(&emission.matrices)
                    .map(|(name, mat)| MatrixDoc {
                        name: (*name).to_string(),
                        entries: [
                            [interval_doc(mat.entry(0, 0)), interval_doc(mat.entry(0, 1))],
                            [interval_doc(mat.entry(1, 0)), interval_doc(mat.entry(1, 1))],
                        ],
                    })
                    .collect(),
            };
            let mut text =
                serde_json::to_string_pretty(&doc).expect("emission documents always serialize");
            text.push('\n');
            Ok(text)
        }
        "flat" => {
            let mut text = String::new();
            text.push_str(&format!("# format: {EXPORT_FORMAT}\n"));
            text.push_str(&format!("# m: {}\n", emission.m));
            text.push_str(&format!(
                "# m_tilde: {} {}\n",
                emission.m_tilde.lo(),
                emission.m_tilde.hi()
            ));
            text.push_str(&format!("# precision_bits: {}\n", emission.precision_bits));
            text.push_str("# matrix row col lo hi width\n");
            for (name, mat) in GENERATOR_NAMES.iter().zip(&emission.matrices) {
                for row in 0..2 {
                    for col in 0..2 {
                        let e = mat.entry(row, col);
                        text.push_str(&format!(
                            "{name} {row} {col} {} {} {}\n",
                            e.lo(),
                            e.hi(),
                            e.width()
                        ));
                    }
                }
            }
            Ok(text)
        }
        other => Err(Error::UnknownFormat(other.to_string())),
    }
}

/// Reads back a document produced by [`export`] in the given format.
pub fn parse_export(text: &str, format: &str) -> Result<Emission> {
    match format {
        "attachment" => {
            let doc: EmissionDoc = serde_json::from_str(text)
                .map_err(|e| Error::Parse(format!("document does not parse: {e}")))?;
            if doc.format != EXPORT_FORMAT {
                return Err(Error::UnknownFormat(doc.format));
            }
            if doc.matrices.len() != 4 {
                return Err(Error::Parse(format!(
                    "expected 4 matrices, found {}",
                    doc.matrices.len()
                )));
            }
            let mut matrices = Vec::with_capacity(4);
            for (expected, mat) in GENERATOR_NAMES.iter().zip(&doc.matrices) {
                if mat.name != *expected {
                    return Err(Error::Parse(format!(
                        "matrix out of order: expected {expected:?}, found {:?}",
                        mat.name
                    )));
                }
                matrices.push(IntervalMatrix::new([
                    [
                        parse_interval_doc(&mat.entries[0][0])?,
                        parse_interval_doc(&mat.entries[0][1])?,
                    ],
                    [
                        parse_interval_doc(&mat.entries[1][0])?,
                        parse_interval_doc(&mat.entries[1][1])?,
                    ],
                ]));
            }
            Ok(Emission {
                matrices: matrices.try_into().expect("exactly four matrices"),
                m: parse_doc_rational(&doc.m)?,
                m_tilde: parse_interval_doc(&doc.m_tilde)?,
                precision_bits: doc.precision_bits,
            })
        }
        "flat" => parse_flat(text),
        other => Err(Error::UnknownFormat(other.to_string())),
    }
}

fn parse_flat(text: &str) -> Result<Emission> {
    let fail = |msg: &str| Error::Parse(msg.to_string());
    let mut m = None;
    let mut m_tilde = None;
    let mut precision_bits = None;
    let mut format_seen = false;
    let mut entries: Vec<(String, usize, usize, RealInterval)> = Vec::new();

    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(v) = rest.strip_prefix("format:") {
                format_seen = true;
                if v.trim() != EXPORT_FORMAT {
                    return Err(Error::UnknownFormat(v.trim().to_string()));
                }
            } else if let Some(v) = rest.strip_prefix("m:") {
                m = Some(parse_doc_rational(v.trim())?);
            } else if let Some(v) = rest.strip_prefix("m_tilde:") {
                let parts: Vec<&str> = v.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(fail("m_tilde line needs two endpoints"));
                }
                let lo = parse_doc_rational(parts[0])?;
                let hi = parse_doc_rational(parts[1])?;
                if lo > hi {
                    return Err(fail("m_tilde endpoints out of order"));
                }
                m_tilde = Some(RealInterval::new(lo, hi));
            } else if let Some(v) = rest.strip_prefix("precision_bits:") {
                precision_bits = Some(
                    v.trim()
                        .parse::<u32>()
                        .map_err(|_| fail("bad precision_bits"))?,
                );
            }
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 6 {
            return Err(fail("entry lines have six columns"));
        }
        let row: usize = parts[1].parse().map_err(|_| fail("bad row index"))?;
        let col: usize = parts[2].parse().map_err(|_| fail("bad column index"))?;
        if row > 1 || col > 1 {
            return Err(fail("entry index out of range"));
        }
        let lo = parse_doc_rational(parts[3])?;
        let hi = parse_doc_rational(parts[4])?;
        if lo > hi {
            return Err(fail("interval endpoints out of order"));
        }
        let iv = RealInterval::new(lo, hi);
        if parse_doc_rational(parts[5])? != iv.width() {
            return Err(fail("recorded width disagrees with the endpoints"));
        }
        entries.push((parts[0].to_string(), row, col, iv));
    }

    if !format_seen {
        return Err(Error::UnknownFormat("missing format line".to_string()));
    }
    if entries.len() != 16 {
        return Err(fail("expected 16 entry lines"));
    }
    let mut slots: [[Option<RealInterval>; 2]; 2] = Default::default();
    let mut matrices = Vec::with_capacity(4);
    let mut entry_iter = entries.into_iter();
    for expected in GENERATOR_NAMES {
        for _ in 0..4 {
            let (name, row, col, iv) = entry_iter.next().expect("counted above");
            if name != expected {
                return Err(fail("entries out of generator order"));
            }
            if slots[row][col].replace(iv).is_some() {
                return Err(fail("duplicate entry"));
            }
        }
        let take = |slot: &mut Option<RealInterval>| slot.take().ok_or_else(|| fail("missing entry"));
        matrices.push(IntervalMatrix::new([
            [take(&mut slots[0][0])?, take(&mut slots[0][1])?],
            [take(&mut slots[1][0])?, take(&mut slots[1][1])?],
        ]));
    }
    Ok(Emission {
        matrices: matrices.try_into().expect("exactly four matrices"),
        m: m.ok_or_else(|| fail("missing m line"))?,
        m_tilde: m_tilde.ok_or_else(|| fail("missing m_tilde line"))?,
        precision_bits: precision_bits.ok_or_else(|| fail("missing precision_bits line"))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::UniPoly;
    use crate::field::FieldElement;
    use crate::realize::{realize, RealizationConfig};
    use crate::symbolic::{closed_trace_form, trace_words, VAR_N};
    use crate::symbols::QuaternionSymbol;

    fn unit_certificate() -> (NumberField, RealizationCertificate) {
        let k = NumberField::new(&UniPoly::x(), 0).unwrap();
        let symbol = QuaternionSymbol::new(k.from_int(1), k.from_int(1)).unwrap();
        let cert = realize(&k, &symbol, &RealizationConfig::default()).unwrap();
        (k, cert)
    }

    fn sqrt2_certificate() -> (NumberField, RealizationCertificate) {
        let k = NumberField::new(&UniPoly::from_ints(&[-2, 0, 1]), 1).unwrap();
        let theta = k.gen();
        let symbol = QuaternionSymbol::new(theta.clone(), theta).unwrap();
        let cert = realize(&k, &symbol, &RealizationConfig::default()).unwrap();
        (k, cert)
    }

    /// Certified containment of a field element's embedding in an interval.
    fn encloses(k: &NumberField, iv: &RealInterval, e: &FieldElement) -> bool {
        if let Some(q) = e.as_rational() {
            return iv.contains(&q);
        }
        let fine = (iv.width() / rat_int(4096)).max(precision_width(200));
        iv.contains_interval(&k.embed_to_width(e, &fine))
    }

    #[test]
    fn entries_meet_the_requested_precision_and_basic_traces() {
        let (k, cert) = unit_certificate();
        let emission = emit_matrices(&k, &cert, &rat_int(1), 64).unwrap();
        let bound = precision_width(64);
        for mat in &emission.matrices {
            assert!(mat.max_width() <= bound);
            assert!(mat.det().contains(&rat_int(1)));
        }
        let two_r = k.mul_rational(&cert.r, &rat_int(2));
        let two_s = k.mul_rational(&cert.s, &rat_int(2));
        let two_t = k.mul_rational(&cert.t, &rat_int(2));
        assert!(encloses(&k, &emission.matrices[0].trace(), &two_r));
        assert!(encloses(&k, &emission.matrices[1].trace(), &two_s));
        let product = emission.matrices[0].mul(&emission.matrices[1]);
        assert!(encloses(&k, &product.trace(), &two_t));
        // the mirrors share the traces
        assert!(encloses(&k, &emission.matrices[2].trace(), &two_r));
        assert!(encloses(&k, &emission.matrices[3].trace(), &two_s));
    }

    #[test]
    fn commutator_trace_encloses_minus_two_c() {
        let (k, cert) = sqrt2_certificate();
        let emission = emit_matrices(&k, &cert, &rat_int(1), 96).unwrap();
        let comm = commutator(&emission.matrices[0], &emission.matrices[1]);
        let minus_two_c = k.mul_rational(&cert.c, &rat_int(-2));
        assert!(encloses(&k, &comm.trace(), &minus_two_c));
    }

    #[test]
    fn word_traces_enclose_the_symbolic_values_for_all_scales() {
        let (k, cert) = sqrt2_certificate();
        let args = [
            cert.r.clone(),
            cert.s.clone(),
            cert.t.clone(),
            k.one(), // the scale variable; every closed form is free of it
        ];
        for m in [rat_int(1), rat_int(2), rat(1, 2)] {
            let emission = emit_matrices(&k, &cert, &m, 80).unwrap();
            for word in trace_words() {
                let form = closed_trace_form(word.name).unwrap();
                assert!(form.is_free_of(VAR_N));
                let exact = form.eval_in_field(&k, &args).unwrap();
                let numeric = word_trace(&emission.matrices, word.letters);
                assert!(
                    encloses(&k, &numeric, &exact),
                    "word {} at scale {}: {} does not enclose the exact value",
                    word.name,
                    m,
                    numeric
                );
            }
        }
    }

    #[test]
    fn the_boundary_relation_report_selects_the_inverse_side() {
        let (k, cert) = unit_certificate();
        let tol = precision_width(64);
        let emission = emit_matrices(&k, &cert, &rat_int(1), 128).unwrap();
        let report = check_group_relation(&emission.matrices, &tol);
        assert!(report.relation_holds(), "{report}");
        assert!(report.w_minus.matrix.trace().contains(&rat_int(2)));
        // the other orientation squares the commutator; nowhere near +-identity
        assert!(!report.w_plus.within(&tol));

        // refinement monotonicity: more precision never enlarges the residual
        let coarse = emit_matrices(&k, &cert, &rat_int(1), 64).unwrap();
        let coarse_report = check_group_relation(&coarse.matrices, &tol);
        assert!(report.w_minus.residual <= coarse_report.w_minus.residual);
    }

    #[test]
    fn export_round_trips_in_both_formats() {
        let (k, cert) = unit_certificate();
        let emission = emit_matrices(&k, &cert, &rat(1, 2), 48).unwrap();
        for format in ["attachment", "flat"] {
            let text = export(&emission, format).unwrap();
            assert!(!text.contains('.'), "no floats in {format}");
            let back = parse_export(&text, format).unwrap();
            assert_eq!(back, emission, "round trip through {format}");
        }
        assert!(matches!(
            export(&emission, "yaml"),
            Err(Error::UnknownFormat(f)) if f == "yaml"
        ));
        assert!(matches!(
            parse_export("# format: something-else/1\n", "flat"),
            Err(Error::UnknownFormat(_))
        ));
        // a tampered width is caught
        let mut doc: super::EmissionDoc =
            serde_json::from_str(&export(&emission, "attachment").unwrap()).unwrap();
        doc.m_tilde.width = "7".to_string();
        let text = serde_json::to_string(&doc).unwrap();
        assert!(matches!(
            parse_export(&text, "attachment"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn rejects_bad_scales_and_unverified_certificates() {
        let (k, cert) = unit_certificate();
        assert!(matches!(
            emit_matrices(&k, &cert, &rat_int(0), 32),
            Err(Error::NonpositiveM)
        ));
        assert!(matches!(
            emit_matrices(&k, &cert, &rat_int(-3), 32),
            Err(Error::NonpositiveM)
        ));
        let mut tampered = cert.clone();
        tampered.r = k.add(&tampered.r, &k.one());
        assert!(matches!(
            emit_matrices(&k, &tampered, &rat_int(1), 32),
            Err(Error::InvalidCertificate { .. })
        ));
    }
}
