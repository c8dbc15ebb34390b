//! Quaternion symbols, their equivalence moves, and band normalization.
//!
//! A symbol `(a, b)` names the algebra with `i^2 = a`, `j^2 = b`,
//! `ij = -ji`.  Two moves preserve the isomorphism class: scaling `a` by a
//! nonzero square, and replacing `b` by `b v^2 - a b w^2`; swapping the
//! slots does too.  The realization pipeline uses recorded chains of these
//! moves to drive the first slot into a narrow band just above 1, where
//! the parameter search has room to work.  Every chain is replayable, and
//! certificates store it for the verifier to replay.
//!
//! Run with: `cargo run --example hilbert_symbol_moves`

use fuchsian_forge::arith::{rat, UniPoly};
use fuchsian_forge::error::Result;
use fuchsian_forge::field::NumberField;
use fuchsian_forge::symbols::{
    apply_steps, normalize_band, real_split, EquivalenceStep, QuaternionSymbol,
};

fn main() -> Result<()> {
    let q = NumberField::new(&UniPoly::x(), 0)?;

    // splitness at the real embedding: at least one slot positive
    println!("real-splitness over Q:");
    for (a, b) in [(4, 1), (-3, 2), (-1, -1)] {
        let sym = QuaternionSymbol::new(q.from_int(a), q.from_int(b))?;
        println!("  ({a}, {b}) split: {}", real_split(&q, &sym));
    }
    println!();

    // normalize (4, 1) into the band (1, 1 + 1/4)
    let sym = QuaternionSymbol::new(q.from_int(4), q.from_int(1))?;
    let eps = rat(1, 4);
    let (normalized, chain) = normalize_band(&q, &sym, &eps)?;
    println!("normalizing (4, 1) into (1, 1 + {eps}):");
    print_chain(&q, &chain);
    println!(
        "  result: ({}, {})",
        q.lift(normalized.a()),
        q.lift(normalized.b())
    );

    // the recorded chain replays to the same symbol
    let replayed = apply_steps(&q, &sym, &chain)?;
    assert_eq!(replayed, normalized);
    println!("  replaying the chain reproduces it exactly");
    println!();

    // a negative first slot forces a swap first; splitness is preserved
    let sym = QuaternionSymbol::new(q.from_int(-3), q.from_int(2))?;
    let (normalized, chain) = normalize_band(&q, &sym, &eps)?;
    println!("normalizing (-3, 2):");
    print_chain(&q, &chain);
    println!(
        "  result: ({}, {})",
        q.lift(normalized.a()),
        q.lift(normalized.b())
    );
    assert!(real_split(&q, &normalized));
    println!();

    // the same machinery over a cubic field
    let k = NumberField::new(&UniPoly::from_ints(&[-1, -1, 0, 1]), 0)?;
    let sym = QuaternionSymbol::new(k.from_int(2), k.gen())?;
    let (normalized, chain) = normalize_band(&k, &sym, &rat(1, 8))?;
    println!("normalizing (2, x) over Q[x]/(x^3 - x - 1):");
    print_chain(&k, &chain);
    println!(
        "  result: ({}, {})",
        k.lift(normalized.a()),
        k.lift(normalized.b())
    );
    assert_eq!(apply_steps(&k, &sym, &chain)?, normalized);
    Ok(())
}

fn print_chain(k: &NumberField, chain: &[EquivalenceStep]) {
    if chain.is_empty() {
        println!("  (already in the band; empty chain)");
    }
    for step in chain {
        match step {
            EquivalenceStep::Swap => println!("  swap the slots"),
            EquivalenceStep::ScaleA { u } => {
                println!("  scale a by the square of {}", k.lift(u))
            }
            EquivalenceStep::MixB { v, w } => println!(
                "  replace b by b*v^2 - a*b*w^2 with v = {}, w = {}",
                k.lift(v),
                k.lift(w)
            ),
        }
    }
}
