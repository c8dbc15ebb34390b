//! What verification actually catches.
//!
//! Realizes `(2, 3)` over the rationals, confirms the certificate passes,
//! then breaks it in three different ways and shows exactly which named
//! checks fail for each kind of damage.  Nothing in a certificate is
//! trusted: every stored value is either replayed from more primitive data
//! or checked against an exact identity.
//!
//! Run with: `cargo run --example verify_and_tamper`

use fuchsian_forge::arith::UniPoly;
use fuchsian_forge::error::Result;
use fuchsian_forge::field::NumberField;
use fuchsian_forge::realize::{realize, verify_certificate, RealizationConfig};
use fuchsian_forge::symbols::QuaternionSymbol;

fn main() -> Result<()> {
    let k = NumberField::new(&UniPoly::x(), 0)?;
    let symbol = QuaternionSymbol::new(k.from_int(2), k.from_int(3))?;
    let cert = realize(&k, &symbol, &RealizationConfig::default())?;

    println!("fresh certificate for (2, 3) over Q:");
    let report = verify_certificate(&k, &cert);
    println!("{report}");
    assert!(report.passed());

    // 1. shift a half-trace: the exact trace identity snaps
    let mut broken = cert.clone();
    broken.r = k.add(&broken.r, &k.one());
    show("after adding 1 to r", &k, &broken);

    // 2. swap in a wrong minimal polynomial: recomputation disagrees
    let mut broken = cert.clone();
    broken.minpoly_s = UniPoly::from_ints(&[-7, 1]);
    show("after swapping the stored minimal polynomial of s", &k, &broken);

    // 3. forge the rescale factor: the witness linkage breaks
    let mut broken = cert.clone();
    broken.rescale_r = &broken.rescale_r + fuchsian_forge::arith::rat(1, 3);
    show("after nudging the rescale factor", &k, &broken);

    Ok(())
}

fn show(
    what: &str,
    k: &NumberField,
    cert: &fuchsian_forge::realize::RealizationCertificate,
) {
    let report = verify_certificate(k, cert);
    println!();
    println!("{what}, the failing checks are:");
    for name in report.failures() {
        println!("  FAIL {name}");
    }
    assert!(!report.passed());
}
