fn main() {
    std::process::exit(mixed_stirling::cli::main());
}
