fn main() {
    std::process::exit(ramsearch::cli::main_with_env());
}
