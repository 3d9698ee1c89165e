fn main() {
    std::process::exit(cherednik2::cli::run(std::env::args_os()));
}
