fn main() {
    std::process::exit(mdisc::cli::main_with_args(std::env::args_os()));
}
