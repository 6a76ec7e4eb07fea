fn main() {
    std::process::exit(ssp_groups::cli::run(std::env::args_os()));
}
