fn main() {
    std::process::exit(qutrit_teleport::cli::run_cli(std::env::args_os()));
}
