//! Checks every registered identity against brute-force enumeration on a
//! small grid and prints one line per identity.
//!
//! Run with `cargo run --release --example audit -- n=0..5,k=1..3`.

use mixed_stirling::audit::{run_audit, Grid};
use mixed_stirling::oracle::SizeGuard;

fn main() -> mixed_stirling::Result<()> {
    let overrides = std::env::args().nth(1).unwrap_or_default();
    let grid = Grid::default().with_overrides(&overrides)?;
    let report = run_audit(&grid, &SizeGuard::default());
    println!("grid: {grid}");
    print!("{}", report.summary());
    for verdict in report.verdicts.iter().filter(|v| !v.counterexamples.is_empty()) {
        let first = &verdict.counterexamples[0];
        println!(
            "{}: at {} formula gives {}, enumeration gives {}",
            verdict.identity, first.point, first.formula, first.oracle
        );
    }
    Ok(())
}
