fn main() {
    std::process::exit(jk_core::cli::run());
}
