use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(kostka_core::cli::run(std::env::args()) as u8)
}
