//! The exact-arithmetic bedrock: isolating real roots and certifying signs.
//!
//! Everything the crate certifies rests on two abilities demonstrated
//! here: isolating the real roots of a rational polynomial into disjoint
//! rational intervals (Sturm chains + bisection), and deciding the sign of
//! a field element at a chosen real embedding by refining its enclosure
//! until zero is excluded.
//!
//! Run with: `cargo run --example real_root_isolation`

use fuchsian_forge::arith::{isolate_real_roots, rat, refine_root, UniPoly};
use fuchsian_forge::error::Result;
use fuchsian_forge::field::NumberField;

fn main() -> Result<()> {
    // x^3 - x - 1 has exactly one real root (the plastic ratio)
    let cubic = UniPoly::from_ints(&[-1, -1, 0, 1]);
    println!("real roots of {cubic}:");
    for iv in isolate_real_roots(&cubic)? {
        let tight = refine_root(&iv, &cubic, &rat(1, 1_000_000));
        println!("  isolated in {iv}, refined to {tight}");
    }
    println!();

    // x^2 - 2 has two; the embedding index picks one in ascending order
    let quadratic = UniPoly::from_ints(&[-2, 0, 1]);
    println!("real roots of {quadratic}, ascending:");
    for (index, iv) in isolate_real_roots(&quadratic)?.iter().enumerate() {
        println!("  root {index}: {iv}");
    }
    println!();

    // the same element has different certified signs at different embeddings
    let negative_root = NumberField::new(&quadratic, 0)?;
    let positive_root = NumberField::new(&quadratic, 1)?;
    let theta_minus = negative_root.gen();
    let theta_plus = positive_root.gen();
    println!("certified sign of theta in Q[x]/(x^2 - 2):");
    println!(
        "  at embedding 0 (theta = -sqrt 2): {:+}",
        negative_root.certified_sign(&theta_minus)
    );
    println!(
        "  at embedding 1 (theta = +sqrt 2): {:+}",
        positive_root.certified_sign(&theta_plus)
    );
    println!();

    // enclosures refine deterministically and nest
    let e = positive_root.add(
        &positive_root.mul(&theta_plus, &theta_plus),
        &theta_plus,
    ); // 2 + sqrt 2
    println!("nested enclosures of 2 + sqrt 2:");
    let mut width = rat(1, 10);
    let mut previous: Option<fuchsian_forge::arith::RealInterval> = None;
    for _ in 0..4 {
        let iv = positive_root.embed_to_width(&e, &width);
        if let Some(outer) = &previous {
            assert!(outer.contains_interval(&iv), "refinement nests");
        }
        println!("  width <= {width}: {iv}");
        previous = Some(iv);
        width /= fuchsian_forge::arith::rat_int(100);
    }
    Ok(())
}
