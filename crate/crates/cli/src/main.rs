use clap::Parser;

use ocm_cli::{run, Cli, CliError};

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error=cannot start thread pool: {e}");
            std::process::exit(2);
        }
    }
    match run(&cli) {
        Ok(report) => emit(&report),
        Err(CliError::Verification(report)) => {
            emit(&report);
            std::process::exit(1);
        }
        Err(e) => {
            eprintln!("error={e}");
            if let Some(hint) = hint(&cli, &e) {
                eprintln!("hint={hint}");
            }
            std::process::exit(e.exit_code());
        }
    }
}

// A closed pipe (`ocm ... | head`) is not an error worth reporting.
fn emit(report: &ocm_cli::RunReport) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = write!(out, "{report}").and_then(|_| out.flush());
}

fn hint(cli: &Cli, e: &CliError) -> Option<&'static str> {
    use ocm_cli::{Command, Mode};
    if e.exit_code() != 3 {
        return None;
    }
    Some(match &cli.command {
        Command::SolveAocm { mode: Mode::Brute, .. } => "use --mode exact, or raise --edge-cap (runtime doubles per edge)",
        Command::SolveAocm { mode: Mode::Exact, .. } => "raise --node-budget or use --mode greedy",
        Command::Verify { .. } => "lower --max-n",
        _ => "instance too large for this command",
    })
}
