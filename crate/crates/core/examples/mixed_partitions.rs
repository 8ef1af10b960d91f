//! Distinct balls into a mix of interchangeable and labeled cells.
//!
//! `B0(n, k, r)` puts `n` distinct balls into `r` interchangeable cells and
//! `k - 1` labeled cells, empty cells allowed; `B(n, k, r)` forbids empty
//! cells. General cell specs list group sizes: `(2, 1)` is a pair of
//! interchangeable cells plus one more cell.
//!
//! Run with `cargo run --example mixed_partitions`.

use mixed_stirling::mixed::{self, b0_nkr, b_nkr, b_nkr_recurrence};
use mixed_stirling::oracle::{self, SizeGuard};
use mixed_stirling::{BallSpec, CellSpec, PartitionProblem};

fn main() -> mixed_stirling::Result<()> {
    let guard = SizeGuard::default();

    let problem = PartitionProblem::empty_allowed(BallSpec::distinct(2), CellSpec::mixed(2, 1));
    println!("B0(2,2,2) = {}", b0_nkr(2, 2, 2)?);
    println!("the {} configurations of {problem}:", oracle::count(&problem, &guard)?);
    for config in oracle::enumerate(&problem, &guard)? {
        println!("  {}", config.serialize());
    }

    println!("B(n,3,2) by the sum and by the recurrence:");
    for n in 1..=8 {
        println!("  n={n}: {} {}", b_nkr(n, 3, 2)?, b_nkr_recurrence(n, 3, 2)?);
    }

    let cells = CellSpec::new(vec![2, 1])?;
    println!(
        "4 distinct balls into {cells}: {} non-empty, {} with empties",
        mixed::mixed_distinct_balls_multinomial(4, &cells),
        mixed::mixed_distinct_balls_empty(4, &cells),
    );

    let balls = BallSpec::new(vec![2, 1])?;
    let repeated = PartitionProblem::non_empty(balls.clone(), cells.clone());
    println!(
        "balls {balls} into {cells}, non-empty: {}",
        mixed::mixed_count(&repeated, &guard)?
    );
    println!(
        "balls {balls} into 3 labeled cells: {} with empties, {} without",
        mixed::product_formula_labeled_cells(&balls, 3),
        mixed::surjective_formula_labeled_cells(&balls, 3),
    );
    Ok(())
}
