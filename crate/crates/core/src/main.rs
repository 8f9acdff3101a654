fn main() {
    std::process::exit(mrep::cli::main());
}
