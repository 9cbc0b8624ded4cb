use std::process::ExitCode;

fn main() -> ExitCode {
    orbit_rank::cli::run()
}
