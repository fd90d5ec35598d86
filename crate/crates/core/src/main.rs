fn main() {
    std::process::exit(mckay::cli::run_from_args(std::env::args_os()));
}
