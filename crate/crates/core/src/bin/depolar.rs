use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let report = depolar::cli::run(std::env::args_os());
    let out = report.render();
    if report.exit_code == 0 {
        let _ = std::io::stdout().write_all(out.as_bytes());
    } else {
        let _ = std::io::stderr().write_all(out.as_bytes());
    }
    ExitCode::from(report.exit_code as u8)
}
