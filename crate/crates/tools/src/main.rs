use std::io;
use std::process::ExitCode;

use coalition_tools::cli::{run, GUARD_ENV};

fn main() -> ExitCode {
    let code = run(
        std::env::args_os(),
        std::env::var(GUARD_ENV).ok(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
