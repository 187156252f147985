use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let report = srw_core::cli::main_with_args(std::env::args_os());
    std::io::stdout().write_all(report.stdout.as_bytes()).ok();
    std::io::stderr().write_all(report.stderr.as_bytes()).ok();
    ExitCode::from(report.exit_code as u8)
}
