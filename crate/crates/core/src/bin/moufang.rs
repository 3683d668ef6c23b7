use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = moufang::cli::run_from_args(std::env::args_os());
    if code == moufang::cli::EXIT_USAGE {
        eprint!("{out}");
    } else {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    ExitCode::from(code as u8)
}
