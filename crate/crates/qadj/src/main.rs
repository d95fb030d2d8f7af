use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qadj::{run, Cli, CliError, RunConfiguration};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_doc = cli.common.format == Some(qadj::Format::Doc);
    let outcome = RunConfiguration::try_from(cli).and_then(|config| {
        let text = run(&config)?;
        match &config.out {
            Some(path) => fs::write(path, text).map_err(|e| {
                CliError::input("unwritable-output", e.to_string()).with_fragment(path.display().to_string())
            }),
            None => std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::input("unwritable-output", e.to_string())),
        }
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if as_doc {
                eprintln!("{}", e.to_json());
            } else {
                eprintln!("{e}");
            }
            ExitCode::from(e.exit)
        }
    }
}
