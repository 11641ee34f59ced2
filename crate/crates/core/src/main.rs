fn main() {
    std::process::exit(kleingeo::cli::run());
}
