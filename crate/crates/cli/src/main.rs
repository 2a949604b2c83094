use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = langlands_cli::execute(std::env::args_os().skip(1));
    let written = if code == 0 {
        std::io::stdout().write_all(out.as_bytes())
    } else {
        std::io::stderr().write_all(out.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(code as u8)
}
