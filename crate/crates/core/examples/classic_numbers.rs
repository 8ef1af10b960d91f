//! Stirling numbers of the second kind, Bell numbers and the polynomial
//! identity `x^n = sum_k {n k} x(x-1)..(x-k+1)`.
//!
//! Run with `cargo run --example classic_numbers`.

use mixed_stirling::stirling::{bell, falling_factorial, stirling2, stirling2_cumulative};
use mixed_stirling::Signed;

fn main() {
    println!("Stirling triangle {{n k}}:");
    for n in 0..=8 {
        let row: Vec<String> = (0..=n).map(|k| stirling2(n, k).to_string()).collect();
        println!("  n={n}: {}", row.join(" "));
    }

    let bells: Vec<String> = (0..=12).map(|n| bell(n).to_string()).collect();
    println!("Bell numbers B_0..B_12: {}", bells.join(", "));
    println!("B_100 = {}", bell(100));
    println!(
        "partitions of a 10-set into at most 3 blocks: {}",
        stirling2_cumulative(10, 3)
    );

    let (n, x) = (6, 5i64);
    let expansion: Signed = (0..=n)
        .map(|k| Signed::from(stirling2(n, k)) * falling_factorial(x, k))
        .sum();
    println!("{x}^{n} = {} = sum_k {{{n} k}} ({x})_k = {expansion}", x.pow(n as u32));
}
