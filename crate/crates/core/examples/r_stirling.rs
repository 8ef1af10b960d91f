//! r-Stirling numbers, r-Bell numbers and r-Bell polynomials: partitions in
//! which the elements `1..=r` land in distinct blocks.
//!
//! Run with `cargo run --example r_stirling`.

use mixed_stirling::mixed::{r_bell, r_bell_direct, r_bell_polynomial, r_stirling2};

fn main() -> mixed_stirling::Result<()> {
    for r in 1..=3 {
        println!("r = {r}");
        for n in r..=7 {
            let row: Vec<String> = (r..=n).map(|k| r_stirling2(n, k, r).to_string()).collect();
            println!("  {{{n} k}}_{r}, k={r}..{n}: {}", row.join(" "));
        }
    }

    println!("B_(n,2) = sum_k {{n+2 k+2}}_2:");
    for n in 2..=8 {
        println!(
            "  n={n}: {}   partitions of {{1..{n}}} with 1,2 apart: {}",
            r_bell(n, 2)?,
            r_bell_direct(n, 2)?
        );
    }
    println!(
        "B_(4,2)(x) at x = 0, 1, 2: {} {} {}",
        r_bell_polynomial(4, 2, 0),
        r_bell_polynomial(4, 2, 1),
        r_bell_polynomial(4, 2, 2)
    );
    Ok(())
}
