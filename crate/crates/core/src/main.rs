fn main() {
    std::process::exit(regmap::cli::run(std::env::args_os()));
}
