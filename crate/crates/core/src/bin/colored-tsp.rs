fn main() {
    std::process::exit(colored_tsp::cli::run_from(std::env::args_os()));
}
