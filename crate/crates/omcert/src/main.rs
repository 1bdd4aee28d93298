use std::process::ExitCode;

fn main() -> ExitCode {
    omcert::cli::run()
}
