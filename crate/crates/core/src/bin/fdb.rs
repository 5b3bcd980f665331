fn main() {
    std::process::exit(fdb::cli::run(std::env::args_os()));
}
