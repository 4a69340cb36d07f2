fn main() {
    std::process::exit(deform_hydrogen::cli::run_from(std::env::args_os()));
}
