fn main() {
    std::process::exit(nqa_cli::main_with_args(std::env::args_os()));
}
