use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(tmcount::cli::run(std::env::args_os()) as u8)
}
