//! Minimal polynomials, field generation, and the involution behind the
//! generator search.
//!
//! The realization pipeline must find an element `g` that generates the
//! whole field and whose square still does.  The tool for reasoning about
//! squares is the minimal polynomial: if `minpoly(g)` keeps a nonzero odd
//! coefficient, then `g^2` generates as much as `g` does.  The search
//! works with a proxy value `g'` linked to `g` by the involution
//! `g = 1 + 2/(g' - 1)`, whose effect on minimal polynomials is an exact
//! polynomial transform demonstrated here.
//!
//! Run with: `cargo run --example minimal_polynomials`

use fuchsian_forge::arith::{rat, UniPoly};
use fuchsian_forge::error::Result;
use fuchsian_forge::field::NumberField;
use fuchsian_forge::generator::{
    g_from_gprime, mobius_transform_minpoly, odd_coeff_signature, primitive_shift,
};
use num_traits::Zero;

fn main() -> Result<()> {
    let k = NumberField::new(&UniPoly::from_ints(&[-1, -1, 0, 1]), 0)?;
    let theta = k.gen();
    println!("working in Q[x]/(x^3 - x - 1), degree {}", k.degree());
    println!();

    // minimal polynomials of a few elements
    let examples = [
        ("theta", theta.clone()),
        ("theta^2", k.mul(&theta, &theta)),
        ("theta + 1/2", k.add(&theta, &k.from_rational(rat(1, 2)))),
        ("7", k.from_int(7)),
    ];
    for (name, e) in &examples {
        println!(
            "minpoly({name}) = {}   (generates the field: {})",
            k.minimal_polynomial(e),
            k.is_generator(e)
        );
    }
    println!();

    // a primitive shift recombines two elements into a generator of the
    // subfield they span together
    let a = k.mul(&theta, &theta);
    let b = theta.clone();
    let shift = primitive_shift(&k, &a, &b);
    let combined = k.add(&a, &k.mul_rational(&b, &shift));
    println!(
        "theta^2 and theta together span the field; theta^2 + {shift}*theta generates it: {}",
        k.is_generator(&combined)
    );
    println!();

    // the involution g = 1 + 2/(g' - 1) acts on minimal polynomials as an
    // exact transform: (x-1)^n f(1 + 2/(x-1)), suitably normalized
    let g_prime = k.add(&k.mul(&theta, &theta), &k.from_int(2));
    let g = g_from_gprime(&k, &g_prime)?;
    let f = k.minimal_polynomial(&g_prime);
    let transformed = mobius_transform_minpoly(&f);
    let direct = k.minimal_polynomial(&g);
    println!("g' = theta^2 + 2 has minpoly {f}");
    println!("g  = 1 + 2/(g' - 1)  has minpoly {direct}");
    println!("the transform of the first: {transformed}");
    assert_eq!(transformed.monic(), direct, "same polynomial");
    println!("they agree, so the involution never needs a fresh minpoly computation");
    println!();

    // applying the transform twice scales by 2^n and returns f itself
    let twice = mobius_transform_minpoly(&transformed);
    assert_eq!(twice.monic(), f.monic());
    println!("applying the transform twice returns the original (times 2^deg)");
    println!();

    // the odd-coefficient signature: nonzero means the square generates too
    for (name, e) in &examples[..2] {
        let f = k.minimal_polynomial(e);
        let sig = odd_coeff_signature(&f);
        let sq_deg = k.minimal_polynomial(&k.mul(e, e)).degree().unwrap();
        println!(
            "odd-coefficient signature of minpoly({name}) = {sig}; deg minpoly({name}^2) = {sq_deg}"
        );
        if !sig.is_zero() {
            assert_eq!(Some(sq_deg), f.degree(), "nonzero signature forces equality");
        }
    }
    Ok(())
}
