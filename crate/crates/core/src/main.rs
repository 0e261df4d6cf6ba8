fn main() {
    std::process::exit(harmconv::cli::run(std::env::args_os()));
}
