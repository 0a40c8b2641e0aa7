use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use colorhopf_cli::{render, run, write_artifact, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let mut code = outcome.code;
    if let (Some(path), Some(a)) = (&cli.out, &outcome.artifact) {
        if let Err(e) = write_artifact(path, a) {
            eprintln!("cannot write {}: {e}", path.display());
            code = code.max(1);
        }
    }
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(render(&cli, &outcome.report).as_bytes());
    ExitCode::from(code as u8)
}
