fn main() {
    std::process::exit(l3code::cli::run());
}
