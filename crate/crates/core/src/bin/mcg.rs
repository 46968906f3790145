fn main() {
    std::process::exit(mcg_signature::cli::main_with_args(std::env::args_os()));
}
