//! r-mixed Stirling and Bell numbers, checked against brute force on the
//! worked example with four balls, cells `(2, 1)` and `r = 2`.
//!
//! Run with `cargo run --example r_mixed`.

use mixed_stirling::mixed::{literal, r_mixed_bell, r_mixed_stirling};
use mixed_stirling::oracle::{self, SizeGuard};
use mixed_stirling::{BallSpec, CellSpec, PartitionProblem};

fn main() -> mixed_stirling::Result<()> {
    let cells = CellSpec::new(vec![2, 1])?;
    let problem = PartitionProblem::non_empty(BallSpec::distinct(4), cells.clone()).with_prefix(2)?;
    let listing = oracle::enumerate(&problem, &SizeGuard::default())?;
    println!("{problem}: {} configurations", listing.len());
    for config in &listing {
        println!("  {}", config.serialize());
    }
    println!("r_mixed_stirling(4, {cells}, 2) = {}", r_mixed_stirling(4, &cells, 2)?);
    println!("r_mixed_bell(4, {cells}, 2) = {}", r_mixed_bell(4, &cells, 2)?);

    println!("printed formulas at the same point:");
    println!(
        "  composition form: {}",
        literal::r_mixed_stirling_composition(4, &cells, 2)?
    );
    println!(
        "  two-step sum (t=2, k=2): {}",
        literal::r_mixed_stirling_theorem(4, 2, 2, 2)?
    );
    Ok(())
}
