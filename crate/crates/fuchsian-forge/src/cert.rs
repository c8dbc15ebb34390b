//! Certificate files: a single JSON document carrying every field of a
//! [`RealizationCertificate`] plus the format-version string
//! [`CERT_FORMAT`].  Every number is an exact rational string (`"p/q"` or
//! `"p"`); no floating point appears anywhere.
//!
//! Serialization is canonical — equal certificates produce byte-identical
//! documents — because rationals are kept reduced with positive
//! denominators and struct fields serialize in declaration order.
//!
//! Loading never trusts the document: structural problems (bad rationals,
//! wrong coordinate lengths, out-of-order interval endpoints) surface as
//! [`Error::InvalidCertificate`], and a wrong or missing format string as
//! [`Error::UnknownFormat`].  Semantic validity is [`verify_certificate`]'s
//! job, not the loader's.
//!
//! [`verify_certificate`]: crate::realize::verify_certificate

use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{RealInterval, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::generator::GeneratorWitness;
use crate::quadric::{ParamPoint, QuadricSolution};
use crate::realize::RealizationCertificate;
use crate::symbols::{EquivalenceStep, QuaternionSymbol};

/// Format-version string every certificate document must carry.
pub const CERT_FORMAT: &str = "fuchsian-forge-cert/1";

// --- document shape -------------------------------------------------------
//
// Leaf numbers are strings; field elements are coordinate vectors in the
// power basis of the modulus; polynomials are coefficient vectors from the
// constant term up.

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    format: String,
    field: FieldDoc,
    input_symbol: SymbolDoc,
    equivalence_chain: Vec<StepDoc>,
    normalized_symbol: SymbolDoc,
    solution: SolutionDoc,
    witness: WitnessDoc,
    rescale_r: String,
    r: Vec<String>,
    s: Vec<String>,
    t: Vec<String>,
    c: Vec<String>,
    minpoly_s: Vec<String>,
    minpoly_s_squared: Vec<String>,
    inequality_certificates: Vec<InequalityDoc>,
}

#[derive(Serialize, Deserialize)]
struct FieldDoc {
    modulus: Vec<String>,
    embedding_index: usize,
}

#[derive(Serialize, Deserialize)]
struct SymbolDoc {
    a: Vec<String>,
    b: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum StepDoc {
    #[serde(rename = "swap")]
    Swap,
    #[serde(rename = "scale_a")]
    ScaleA { u: Vec<String> },
    #[serde(rename = "mix_b")]
    MixB { v: Vec<String>, w: Vec<String> },
}

#[derive(Serialize, Deserialize)]
struct SolutionDoc {
    x: Vec<String>,
    y: Vec<String>,
    z: Vec<String>,
    u: Vec<String>,
    v: Vec<String>,
    w: Vec<String>,
    d: Vec<String>,
    tau: Vec<String>,
    params: [Vec<String>; 5],
}

#[derive(Serialize, Deserialize)]
struct WitnessDoc {
    g_prime: Vec<String>,
    x0: Vec<String>,
    y0: Vec<String>,
    z0: Vec<String>,
    g: Vec<String>,
    minpoly_g: Vec<String>,
    minpoly_g_squared: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct InequalityDoc {
    expression: String,
    lo: String,
    hi: String,
}

// --- domain -> document ---------------------------------------------------

fn rational_str(q: &Rational) -> String {
    q.to_string()
}

fn element_doc(e: &FieldElement) -> Vec<String> {
    e.coords().iter().map(rational_str).collect()
}

fn poly_doc(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(rational_str).collect()
}

fn symbol_doc(sym: &QuaternionSymbol) -> SymbolDoc {
    SymbolDoc {
        a: element_doc(sym.a()),
        b: element_doc(sym.b()),
    }
}

fn step_doc(step: &EquivalenceStep) -> StepDoc {
    match step {
        EquivalenceStep::Swap => StepDoc::Swap,
        EquivalenceStep::ScaleA { u } => StepDoc::ScaleA { u: element_doc(u) },
        EquivalenceStep::MixB { v, w } => StepDoc::MixB {
            v: element_doc(v),
            w: element_doc(w),
        },
    }
}

fn certificate_doc(cert: &RealizationCertificate) -> CertificateDoc {
    let sol = &cert.solution;
    let params = sol.params();
    let witness = &cert.witness;
    CertificateDoc {
        format: CERT_FORMAT.to_string(),
        field: FieldDoc {
            modulus: poly_doc(&cert.field_modulus),
            embedding_index: cert.embedding_index,
        },
        input_symbol: symbol_doc(&cert.input_symbol),
        equivalence_chain: cert.equivalence_chain.iter().map(step_doc).collect(),
        normalized_symbol: symbol_doc(&cert.normalized_symbol),
        solution: SolutionDoc {
            x: element_doc(sol.x()),
            y: element_doc(sol.y()),
            z: element_doc(sol.z()),
            u: element_doc(sol.u()),
            v: element_doc(sol.v()),
            w: element_doc(sol.w()),
            d: element_doc(sol.d()),
            tau: element_doc(sol.tau()),
            params: [
                element_doc(&params.m1),
                element_doc(&params.m2),
                element_doc(&params.m3),
                element_doc(&params.m4),
                element_doc(&params.m5),
            ],
        },
        witness: WitnessDoc {
            g_prime: element_doc(&witness.g_prime),
            x0: element_doc(&witness.x0),
            y0: element_doc(&witness.y0),
            z0: element_doc(&witness.z0),
            g: element_doc(&witness.g),
            minpoly_g: poly_doc(&witness.minpoly_g),
            minpoly_g_squared: poly_doc(&witness.minpoly_g_squared),
        },
        rescale_r: rational_str(&cert.rescale_r),
        r: element_doc(&cert.r),
        s: element_doc(&cert.s),
        t: element_doc(&cert.t),
        c: element_doc(&cert.c),
        minpoly_s: poly_doc(&cert.minpoly_s),
        minpoly_s_squared: poly_doc(&cert.minpoly_s_squared),
        inequality_certificates: cert
            .inequality_certificates
            .iter()
            .map(|(expression, iv)| InequalityDoc {
                expression: expression.clone(),
                lo: rational_str(iv.lo()),
                hi: rational_str(iv.hi()),
            })
            .collect(),
    }
}

// --- document -> domain ---------------------------------------------------

fn invalid(detail: impl Into<String>) -> Error {
    Error::InvalidCertificate {
        detail: detail.into(),
    }
}

/// Parses `"p"` or `"p/q"` without ever panicking on hostile input.
fn parse_rational(text: &str) -> Result<Rational> {
    let (num_str, den_str) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: num_bigint::BigInt = num_str
        .parse()
        .map_err(|_| invalid(format!("bad rational numerator: {text:?}")))?;
    let den: num_bigint::BigInt = den_str
        .parse()
        .map_err(|_| invalid(format!("bad rational denominator: {text:?}")))?;
    if den.is_zero() {
        return Err(invalid(format!("zero denominator: {text:?}")));
    }
    Ok(Rational::new(num, den))
}

fn parse_poly(coeffs: &[String]) -> Result<UniPoly> {
    let coeffs = coeffs
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(coeffs))
}

fn parse_element(k: &NumberField, coords: &[String]) -> Result<FieldElement> {
    let coords = coords
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()?;
    k.from_coords(coords)
        .map_err(|e| invalid(format!("element does not fit the field: {e}")))
}

fn parse_symbol(k: &NumberField, doc: &SymbolDoc) -> Result<QuaternionSymbol> {
    QuaternionSymbol::new(parse_element(k, &doc.a)?, parse_element(k, &doc.b)?)
        .map_err(|e| invalid(format!("degenerate symbol in certificate: {e}")))
}

fn parse_step(k: &NumberField, doc: &StepDoc) -> Result<EquivalenceStep> {
    Ok(match doc {
        StepDoc::Swap => EquivalenceStep::Swap,
        StepDoc::ScaleA { u } => EquivalenceStep::ScaleA {
            u: parse_element(k, u)?,
        },
        StepDoc::MixB { v, w } => EquivalenceStep::MixB {
            v: parse_element(k, v)?,
            w: parse_element(k, w)?,
        },
    })
}

fn certificate_from_doc(doc: &CertificateDoc) -> Result<RealizationCertificate> {
    if doc.format != CERT_FORMAT {
        return Err(Error::UnknownFormat(doc.format.clone()));
    }
    let field_modulus = parse_poly(&doc.field.modulus)?;
    let k = NumberField::new(&field_modulus, doc.field.embedding_index)
        .map_err(|e| invalid(format!("certificate field does not construct: {e}")))?;
    if *k.modulus() != field_modulus {
        return Err(invalid("certificate modulus is not monic"));
    }

    let sol = &doc.solution;
    let solution = QuadricSolution::from_parts(
        parse_element(&k, &sol.x)?,
        parse_element(&k, &sol.y)?,
        parse_element(&k, &sol.z)?,
        parse_element(&k, &sol.u)?,
        parse_element(&k, &sol.v)?,
        parse_element(&k, &sol.w)?,
        parse_element(&k, &sol.d)?,
        parse_element(&k, &sol.tau)?,
        ParamPoint::new([
            parse_element(&k, &sol.params[0])?,
            parse_element(&k, &sol.params[1])?,
            parse_element(&k, &sol.params[2])?,
            parse_element(&k, &sol.params[3])?,
            parse_element(&k, &sol.params[4])?,
        ]),
    );

    let witness = GeneratorWitness {
        g_prime: parse_element(&k, &doc.witness.g_prime)?,
        x0: parse_element(&k, &doc.witness.x0)?,
        y0: parse_element(&k, &doc.witness.y0)?,
        z0: parse_element(&k, &doc.witness.z0)?,
        g: parse_element(&k, &doc.witness.g)?,
        minpoly_g: parse_poly(&doc.witness.minpoly_g)?,
        minpoly_g_squared: parse_poly(&doc.witness.minpoly_g_squared)?,
    };

    let inequality_certificates = doc
        .inequality_certificates
        .iter()
        .map(|iv| {
            let lo = parse_rational(&iv.lo)?;
            let hi = parse_rational(&iv.hi)?;
            if lo > hi {
                return Err(invalid(format!(
                    "interval endpoints out of order for {:?}",
                    iv.expression
                )));
            }
            Ok((iv.expression.clone(), RealInterval::new(lo, hi)))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(RealizationCertificate {
        field_modulus,
        embedding_index: doc.field.embedding_index,
        input_symbol: parse_symbol(&k, &doc.input_symbol)?,
        equivalence_chain: doc
            .equivalence_chain
            .iter()
            .map(|s| parse_step(&k, s))
            .collect::<Result<Vec<_>>>()?,
        normalized_symbol: parse_symbol(&k, &doc.normalized_symbol)?,
        solution,
        witness,
        rescale_r: parse_rational(&doc.rescale_r)?,
        r: parse_element(&k, &doc.r)?,
        s: parse_element(&k, &doc.s)?,
        t: parse_element(&k, &doc.t)?,
        c: parse_element(&k, &doc.c)?,
        minpoly_s: parse_poly(&doc.minpoly_s)?,
        minpoly_s_squared: parse_poly(&doc.minpoly_s_squared)?,
        inequality_certificates,
    })
}

// --- public API ------------------------------------------------------------

/// Renders a certificate as its canonical document.  Equal certificates
/// produce byte-identical output.
pub fn certificate_to_string(cert: &RealizationCertificate) -> String {
    let doc = certificate_doc(cert);
    let mut text = serde_json::to_string_pretty(&doc)
        .expect("certificate documents always serialize");
    text.push('\n');
    text
}

/// Parses a certificate document, checking the format string and every
/// structural constraint.  The result still needs [`verify_certificate`]
/// before any of its claims can be believed.
///
/// [`verify_certificate`]: crate::realize::verify_certificate
pub fn certificate_from_str(text: &str) -> Result<RealizationCertificate> {
    let doc: CertificateDoc = serde_json::from_str(text)
        .map_err(|e| invalid(format!("document does not parse: {e}")))?;
    certificate_from_doc(&doc)
}

/// Writes the canonical document to a file.
pub fn write_certificate(path: &Path, cert: &RealizationCertificate) -> Result<()> {
    std::fs::write(path, certificate_to_string(cert))
        .map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))
}

/// Reads and structurally validates a certificate file.
pub fn read_certificate(path: &Path) -> Result<RealizationCertificate> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    certificate_from_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realize::{realize, verify_certificate, RealizationConfig};

    fn sample_certificate() -> (NumberField, RealizationCertificate) {
        let k = NumberField::new(&UniPoly::from_ints(&[-2, 0, 1]), 1).unwrap();
        let theta = k.gen();
        let symbol = QuaternionSymbol::new(theta.clone(), theta).unwrap();
        let cert = realize(&k, &symbol, &RealizationConfig::default()).unwrap();
        (k, cert)
    }

    #[test]
    fn round_trips_and_serializes_deterministically() {
        let (k, cert) = sample_certificate();
        let text = certificate_to_string(&cert);
        assert_eq!(text, certificate_to_string(&cert));

        let reloaded = certificate_from_str(&text).unwrap();
        assert_eq!(reloaded, cert);
        assert_eq!(certificate_to_string(&reloaded), text);
        assert!(verify_certificate(&k, &reloaded).passed());

        // exact rational strings only: no floating point anywhere
        assert!(!text.contains('.'));
        assert!(text.contains("\"format\": \"fuchsian-forge-cert/1\""));
    }

    #[test]
    fn file_io_round_trips() {
        let (_, cert) = sample_certificate();
        let dir = std::env::temp_dir().join("fuchsian-forge-cert-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("sample.cert.json");
        write_certificate(&path, &cert).unwrap();
        let reloaded = read_certificate(&path).unwrap();
        assert_eq!(reloaded, cert);
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn rejects_malformed_documents() {
        let (_, cert) = sample_certificate();
        let text = certificate_to_string(&cert);

        // wrong format string
        let wrong = text.replace("fuchsian-forge-cert/1", "fuchsian-forge-cert/9");
        assert!(matches!(
            certificate_from_str(&wrong),
            Err(Error::UnknownFormat(v)) if v == "fuchsian-forge-cert/9"
        ));

        // not JSON at all
        assert!(matches!(
            certificate_from_str("not a document"),
            Err(Error::InvalidCertificate { .. })
        ));

        // a zero denominator must not panic
        let hostile = text.replacen("\"0\"", "\"1/0\"", 1);
        assert!(matches!(
            certificate_from_str(&hostile),
            Err(Error::InvalidCertificate { .. })
        ));
    }

    #[test]
    fn rejects_elements_of_the_wrong_degree() {
        let (_, cert) = sample_certificate();
        let mut doc = certificate_doc(&cert);
        doc.r.push("7".to_string());
        let text = serde_json::to_string(&doc).unwrap();
        assert!(matches!(
            certificate_from_str(&text),
            Err(Error::InvalidCertificate { .. })
        ));
    }
}
