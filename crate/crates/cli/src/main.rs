fn main() {
    std::process::exit(bary_cli::run(std::env::args_os()));
}
