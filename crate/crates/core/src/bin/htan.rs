fn main() {
    std::process::exit(higher_tangent::cli::main_with_args(std::env::args_os()));
}
