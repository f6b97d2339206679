fn main() {
    std::process::exit(rees_covers::cli::run(std::env::args_os()));
}
