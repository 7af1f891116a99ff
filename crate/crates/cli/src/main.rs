mod args;
mod compute;
mod error;
mod io;
mod report;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, CliResult};

fn pool(threads: Option<usize>) -> CliResult<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::Usage(e.to_string()))
}

/// Command body plus whether it succeeded.
type Work = Box<dyn FnOnce() -> CliResult<(String, bool)> + Send>;

fn run(cli: Cli) -> CliResult<()> {
    let (common, work): (_, Work) = match cli.command {
        Command::Compute(a) => (a.common.clone(), Box::new(move || compute::run(&a).map(|s| (s, true)))),
        Command::Detect(a) => (a.common.clone(), Box::new(move || report::detect_cmd(&a).map(|s| (s, true)))),
        Command::Audit(a) => (a.common.clone(), Box::new(move || report::audit_cmd(&a))),
        Command::Catalog(a) => (a.common.clone(), Box::new(move || report::catalog_cmd(&a).map(|s| (s, true)))),
    };
    let (text, ok) = pool(common.threads)?.install(work)?;
    io::write_output(common.out.as_deref(), &text)?;
    if ok {
        Ok(())
    } else {
        Err(CliError::AuditFailed)
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
