fn main() {
    std::process::exit(minsep::cli::cli_run(std::env::args_os()));
}
