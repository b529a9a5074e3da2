use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(rmhg::cli::run_from(std::env::args_os()))
}
