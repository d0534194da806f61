fn main() {
    std::process::exit(frobsplit::cli::run(std::env::args_os()));
}
