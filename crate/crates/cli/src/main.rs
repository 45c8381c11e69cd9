use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use zlab_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let res = run(&cli, &mut out);
    let _ = out.flush();
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("zlab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
