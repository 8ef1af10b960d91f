//! Drives the command-line front end in-process, the same way the
//! `mixstir` binary does.
//!
//! Run with `cargo run --example cli_tables`.

fn run(args: &[&str]) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = mixed_stirling::cli::run(
        std::iter::once("mixstir").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    print!("$ mixstir {}\n{}", args.join(" "), String::from_utf8_lossy(&out));
    if code != 0 {
        println!("{}exit code {code}", String::from_utf8_lossy(&err));
    }
}

fn main() {
    run(&["table", "stirling2", "--n", "0..6"]);
    run(&["table", "b0", "--n", "0..5", "--k", "1..3", "--r", "2"]);
    run(&["compute", "rbell", "--n", "5", "--r", "2", "--format", "json"]);
    run(&["factor", "--m", "720", "--k", "3"]);
    run(&[
        "compute",
        "oracle-count",
        "--balls",
        "1,1,1",
        "--cells",
        "2",
        "--guard-max-balls",
        "2",
    ]);
}
