fn main() {
    std::process::exit(qcongruence::cli::cli_main(std::env::args_os()));
}
