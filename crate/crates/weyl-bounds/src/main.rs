fn main() {
    std::process::exit(weyl_bounds::cli::run(std::env::args().skip(1).collect()));
}
