fn main() {
    std::process::exit(rota_cli::run(std::env::args_os()));
}
