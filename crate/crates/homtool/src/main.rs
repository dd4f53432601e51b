fn main() {
    std::process::exit(homtool::cli::run(std::env::args().collect()));
}
