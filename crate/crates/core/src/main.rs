use std::process::ExitCode;

fn main() -> ExitCode {
    pentachain::cli::run()
}
