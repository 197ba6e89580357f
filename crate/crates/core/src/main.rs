use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = quandle::cli::run(std::env::args_os());
    let written = if result.exit_code == quandle::cli::EXIT_USAGE {
        std::io::stderr().write_all(result.payload.as_bytes())
    } else {
        std::io::stdout().write_all(result.payload.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(quandle::cli::EXIT_USAGE as u8);
    }
    ExitCode::from(result.exit_code as u8)
}
