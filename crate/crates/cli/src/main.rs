fn main() {
    std::process::exit(levelpers_cli::run(std::env::args_os()));
}
