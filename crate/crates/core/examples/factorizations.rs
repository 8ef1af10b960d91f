//! Ordered and unordered factorizations, counted through the exponent
//! vector of `m` as identical balls in labeled cells.
//!
//! Run with `cargo run --example factorizations -- 360`.

use mixed_stirling::factor;
use mixed_stirling::mixed;

fn main() -> mixed_stirling::Result<()> {
    let m: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(360);
    let f = factor::factorize(m)?;
    println!("{m} = {f}  (Omega = {})", f.big_omega());
    if m < 2 {
        return Ok(());
    }
    println!("ordered factorizations with units (k factors, any >= 1) and without (all >= 2):");
    for k in 1..=f.big_omega() {
        println!(
            "  k={k}: {} {}",
            factor::ordered_factorizations_with_units(m, k)?,
            factor::ordered_factorizations_no_units(m, k)?,
        );
    }
    let balls = f.as_balls();
    println!(
        "same for k=3 as labeled-cell partitions of balls {balls}: {} {}",
        mixed::product_formula_labeled_cells(&balls, 3),
        mixed::surjective_formula_labeled_cells(&balls, 3),
    );
    println!(
        "all ordered factorizations: {}",
        factor::total_ordered_factorizations(m)?
    );
    println!(
        "multiplicative partitions: {}",
        factor::unordered_multiplicative_partitions(m)?
    );

    let big = 1_000_003u64 * 1_000_033;
    println!("{big} = {}", factor::factorize(big)?);
    Ok(())
}
