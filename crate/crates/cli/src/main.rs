use std::io::Write;
use std::process::ExitCode;

use bcover_cli::{dispatch, emit, usage, Args, COMMANDS};
use clap::Parser;

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if !COMMANDS.contains(&args.command.as_str()) {
        eprintln!("unknown command {:?}", args.command);
        eprint!("{}", usage());
        return ExitCode::from(1);
    }
    let report = dispatch(&args.command, &args);
    if let Some(error) = &report.error {
        eprintln!("error: {error}");
    }
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(emit(&report, args.format).as_bytes())
        .is_err()
    {
        return ExitCode::from(1);
    }
    ExitCode::from(report.status.exit_code())
}
