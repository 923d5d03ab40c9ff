fn main() {
    std::process::exit(avkit::cli::main_with(std::env::args_os()));
}
