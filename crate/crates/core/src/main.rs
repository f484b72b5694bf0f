fn main() {
    std::process::exit(gridbond::cli::main_with(std::env::args_os()));
}
