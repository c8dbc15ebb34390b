//! End-to-end realization over a real quadratic field.
//!
//! Builds the field `Q(sqrt 2)` with its positive embedding, asks for the
//! quaternion symbol `(theta, theta)`, and runs the whole pipeline: band
//! normalization, parameter search, quadric solution, generator rescaling,
//! half-trace assembly, and certification.  The resulting certificate is
//! written to disk, read back, and independently re-verified.
//!
//! Run with: `cargo run --example realize_sqrt2`

use fuchsian_forge::arith::UniPoly;
use fuchsian_forge::cert::{read_certificate, write_certificate};
use fuchsian_forge::error::Result;
use fuchsian_forge::field::NumberField;
use fuchsian_forge::realize::{realize, verify_certificate, RealizationConfig};
use fuchsian_forge::symbols::QuaternionSymbol;

fn main() -> Result<()> {
    // Q[x]/(x^2 - 2), embedding index 1 = the positive root
    let k = NumberField::new(&UniPoly::from_ints(&[-2, 0, 1]), 1)?;
    let theta = k.gen();
    let symbol = QuaternionSymbol::new(theta.clone(), theta)?;

    println!("realizing (theta, theta) over Q(sqrt 2) ...");
    let cert = realize(&k, &symbol, &RealizationConfig::default())?;

    println!();
    println!("half-traces (coordinates in the power basis 1, theta):");
    println!("  r = {}", k.lift(&cert.r));
    println!("  s = {}", k.lift(&cert.s));
    println!("  t = {}", k.lift(&cert.t));
    println!("  c = {}", k.lift(&cert.c));
    println!();
    println!("s generates the field: its minimal polynomial is");
    println!("  {}", cert.minpoly_s);
    println!("and the minimal polynomial of s^2 is");
    println!("  {}", cert.minpoly_s_squared);
    println!();

    let path = std::env::temp_dir().join("realize_sqrt2.cert.json");
    write_certificate(&path, &cert)?;
    println!("certificate written to {}", path.display());

    // reload and check from nothing but the file
    let reloaded = read_certificate(&path)?;
    assert_eq!(reloaded, cert, "the file round-trips exactly");
    let k2 = reloaded.number_field()?;
    let report = verify_certificate(&k2, &reloaded);
    println!();
    println!("independent verification of the reloaded file:");
    println!("{report}");
    assert!(report.passed());
    std::fs::remove_file(&path).ok();
    Ok(())
}
