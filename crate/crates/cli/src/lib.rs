//! The `wed` command-line tool as a library, so that tests can drive it
//! without spawning processes.

pub mod args;
pub mod campaign;
pub mod commands;
pub mod report;

use std::fs;

use clap::Parser;

pub use args::Cli;
pub use commands::Output;
pub use report::{Exit, RunReport, Status};

use args::Command;

/// Parses `argv` (without the program name) and runs the command.
pub fn run_args<I, S>(argv: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let command = argv.join(" ");
    match Cli::try_parse_from(std::iter::once("wed".to_string()).chain(argv)) {
        Ok(cli) => run(&cli, &command),
        Err(e) => {
            let exit = if e.use_stderr() { Exit::Error } else { Exit::Yes };
            let text = e.render().to_string();
            match exit {
                Exit::Yes => Output::ok(text),
                _ => Output::failure(text.trim_end()),
            }
        }
    }
}

pub fn run(cli: &Cli, command: &str) -> Output {
    match &cli.command {
        Command::Catalog { name } => commands::catalog(name.as_deref()),
        Command::Check(args) => commands::check(args, command),
        Command::Mwis { file } => commands::mwis(file, command),
        Command::Eds(args) => commands::eds(args, command),
        Command::Gen(g) => commands::generate(g),
        Command::Campaign { spec, output } => {
            let text = match fs::read_to_string(spec) {
                Ok(t) => t,
                Err(e) => return Output::failure(format!("{}: {e}", spec.display())),
            };
            let spec = match campaign::parse_spec(&text) {
                Ok(s) => s,
                Err(e) => return Output::failure(e.to_string()),
            };
            let rows = match campaign::run_campaign(&spec) {
                Ok(r) => r,
                Err(e) => return Output::failure(e.to_string()),
            };
            let csv = campaign::to_csv(&spec, &rows);
            let mismatches = rows.iter().filter(|r| !r.agree).count();
            let mut out = match output {
                None => Output::ok(csv),
                Some(path) => match fs::write(path, csv) {
                    Ok(()) => Output::ok(String::new()),
                    Err(e) => return Output::failure(format!("{}: {e}", path.display())),
                },
            };
            out.stderr = format!("{} instances, {mismatches} disagreements\n", rows.len());
            out.exit = campaign::campaign_exit(&spec, &rows);
            out
        }
    }
}
