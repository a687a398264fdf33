use std::process::ExitCode;

fn main() -> ExitCode {
    zeta_sieve_cli::init_logging();
    ExitCode::from(zeta_sieve_cli::run(std::env::args_os()))
}
