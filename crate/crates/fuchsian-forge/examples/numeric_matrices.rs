//! Certified numeric matrices from a certificate.
//!
//! Realizes `(1, 2 + theta)` over `Q(sqrt 5)`, then evaluates the four
//! generator matrices as interval enclosures at 128-bit precision, checks
//! the genus-2 boundary relation numerically, and confirms that the
//! numeric traces enclose the exact symbolic values — tying the numeric
//! side back to the symbolic proof.
//!
//! Run with: `cargo run --example numeric_matrices`

use fuchsian_forge::arith::{rat, rat_int, UniPoly};
use fuchsian_forge::emit::{
    check_group_relation, commutator, emit_matrices, word_trace, GENERATOR_NAMES,
};
use fuchsian_forge::error::Result;
use fuchsian_forge::field::NumberField;
use fuchsian_forge::realize::{realize, RealizationConfig};
use fuchsian_forge::symbolic::{closed_trace_form, trace_words};
use fuchsian_forge::symbols::QuaternionSymbol;

fn main() -> Result<()> {
    // Q[x]/(x^2 - 5) at its positive root
    let k = NumberField::new(&UniPoly::from_ints(&[-5, 0, 1]), 1)?;
    let theta = k.gen();
    let symbol = QuaternionSymbol::new(k.from_int(1), k.add(&k.from_int(2), &theta))?;
    println!("realizing (1, 2 + theta) over Q(sqrt 5) ...");
    let cert = realize(&k, &symbol, &RealizationConfig::default())?;

    for m in [rat_int(1), rat_int(2), rat(1, 2)] {
        println!();
        println!("emission at scale M = {m}, 128-bit entries:");
        let emission = emit_matrices(&k, &cert, &m, 128)?;
        for (name, mat) in GENERATOR_NAMES.iter().zip(&emission.matrices) {
            println!(
                "  {name:<7} widest entry {:>9.1e}   det contains 1: {}   trace width {:>9.1e}",
                width_f64(&mat.max_width()),
                mat.det().contains(&rat_int(1)),
                width_f64(&mat.trace().width()),
            );
        }

        let tol = rat_int(1) / rat_int(2).pow(64); // 2^-64
        let report = check_group_relation(&emission.matrices, &tol);
        println!("{report}");
        assert!(report.relation_holds());

        // numeric traces enclose the exact symbolic values
        let args = [cert.r.clone(), cert.s.clone(), cert.t.clone(), k.one()];
        let mut enclosed = 0;
        for word in trace_words() {
            let exact = closed_trace_form(word.name)
                .unwrap()
                .eval_in_field(&k, &args)
                .unwrap();
            let numeric = word_trace(&emission.matrices, word.letters);
            let fine = k.embed_to_width(&exact, &(numeric.width() / rat_int(4096)));
            assert!(numeric.contains_interval(&fine), "tr({})", word.name);
            enclosed += 1;
        }
        println!("  all {enclosed} word traces enclose their exact symbolic values");
    }

    // footnote-level sanity: the commutator trace encloses -2c
    let emission = emit_matrices(&k, &cert, &rat_int(1), 128)?;
    let comm = commutator(&emission.matrices[0], &emission.matrices[1]);
    let minus_two_c = k.mul_rational(&cert.c, &rat_int(-2));
    let fine = k.embed_to_width(&minus_two_c, &(comm.trace().width() / rat_int(4096)));
    assert!(comm.trace().contains_interval(&fine));
    println!();
    println!("tr [rho, sigma] encloses -2c, as the closed forms demand");
    Ok(())
}

/// Rough float rendering of a tiny rational width, for display only.
fn width_f64(w: &fuchsian_forge::arith::Rational) -> f64 {
    let digits = 60i32;
    let scaled = w * fuchsian_forge::arith::rat_int(10).pow(digits);
    let approx: f64 = scaled.to_integer().to_string().parse().unwrap_or(f64::MAX);
    approx / 10f64.powi(digits)
}
