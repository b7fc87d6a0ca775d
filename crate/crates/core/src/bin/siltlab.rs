fn main() {
    std::process::exit(siltlab::cli::main_with_args(std::env::args_os()));
}
