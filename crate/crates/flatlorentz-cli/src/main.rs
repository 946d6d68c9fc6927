use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use flatlorentz_cli::{run, Cli};

fn init_threads() {
    if let Some(n) = std::env::var("FLATLORENTZ_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    let mut stdout = std::io::stdout().lock();
    match (&out.artifact, &cli.global.out) {
        (Some(a), Some(path)) => {
            if let Err(e) = std::fs::write(path, a) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
            let _ = stdout.write_all(out.report.as_bytes());
        }
        (Some(a), None) if out.artifact_to_stdout => {
            let _ = stdout.write_all(a.as_bytes());
            eprint!("{}", out.report);
        }
        _ => {
            let _ = stdout.write_all(out.report.as_bytes());
        }
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
