fn main() {
    std::process::exit(aquawave_bench::cli::main_with_args(std::env::args_os()));
}
