//! Command-line front end for `qadj-core`: input documents, structured
//! reports, DOT dual graphs and SVG face diagrams.

pub mod config;
pub mod error;
pub mod graph_doc;
pub mod input;
mod report;
pub mod svg;
pub mod text;

use serde_json::json;

pub use config::{Cli, Format, InputSource, RunConfiguration, Task};
pub use error::CliError;

pub const REPORT_SCHEMA: &str = "qadj.report";
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Runs one configuration and returns the text to write.
pub fn run(config: &RunConfiguration) -> Result<String, CliError> {
    let subject = input::load(&config.input, config.depth_limit)?;
    let g = &subject.graph;
    let mut echo = subject.echo.clone();
    let mut extra = json!({});
    let built = match &config.task {
        Task::Resolve => report::resolve(g),
        Task::Faces => report::faces(g, config.r_limit)?,
        Task::Charvar { depth } => {
            extra = json!({ "depth": depth });
            report::charvar(g, config.r_limit, *depth, config.qbound)?
        }
        Task::Alexander => report::alexander(g)?,
        Task::Lct { direction } => {
            extra = json!({ "direction": direction.as_deref().map(text::rats) });
            report::lct(g, direction.as_deref())?
        }
        Task::Multiplier { gamma } => {
            extra = json!({ "gamma": text::rats(gamma) });
            report::multiplier(g, gamma)?
        }
        Task::Semicont { special } => {
            let other = input::load(special, config.depth_limit)?;
            echo = json!({ "general": subject.echo, "special": other.echo });
            report::semicont(g, &other.graph, config.r_limit)?
        }
        Task::Plot => {
            let title = match &config.input {
                InputSource::Inline(t) => t.join(", "),
                InputSource::File(p) => p.display().to_string(),
            };
            report::plot(g, config.r_limit, &title)?
        }
    };
    Ok(match config.format {
        Format::Human => built.human,
        Format::Dot | Format::Svg => built.raw.unwrap_or(built.human),
        Format::Doc => {
            let doc = json!({
                "schema": REPORT_SCHEMA,
                "schema_version": REPORT_SCHEMA_VERSION,
                "tool": { "name": "qadj", "version": env!("CARGO_PKG_VERSION") },
                "command": config.task.name(),
                "input": echo,
                "config": {
                    "qbound": config.qbound,
                    "rlimit": config.r_limit,
                    "depth_limit": config.depth_limit,
                    "format": config.format.name(),
                    "options": extra,
                },
                "result": built.result,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
            s.push('\n');
            s
        }
    })
}
