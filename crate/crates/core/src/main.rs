fn main() {
    std::process::exit(lgpot::cli::main_with_args(std::env::args_os()));
}
