fn main() {
    std::process::exit(hemigraph::cli::run());
}
