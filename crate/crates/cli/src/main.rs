fn main() {
    std::process::exit(tamari_forge_cli::run(std::env::args_os()));
}
