fn main() {
    std::process::exit(ybcorr::cli::run(std::env::args_os()));
}
