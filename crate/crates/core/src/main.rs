fn main() {
    std::process::exit(tiltcert::cli::run(std::env::args_os()));
}
