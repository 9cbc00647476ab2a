fn main() {
    std::process::exit(parabolic_strata::cli::main_with_env());
}
