use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qadj_core::rational::parse_rational;
use qadj_core::Rational;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "qadj", version, about = "Exact invariants of plane curve singularities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// JSON germ document ({"branches": [...]}) or resolution graph document
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Branch equations in x, y; a single product is split into factors
    #[arg(long, global = true, num_args = 1.., value_name = "EXPR")]
    pub poly: Vec<String>,
    /// Largest character denominator
    #[arg(long, global = true, default_value_t = 60)]
    pub qbound: u32,
    /// Largest number of branches for the arrangement computations
    #[arg(long, global = true, default_value_t = qadj_core::polytopes::DEFAULT_R_LIMIT)]
    pub rlimit: usize,
    /// Blow-up depth limit
    #[arg(long, global = true, default_value_t = qadj_core::resolution::DEFAULT_MAX_DEPTH)]
    pub depth_limit: usize,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Embedded resolution: graph document, DOT or table
    Resolve,
    /// Faces of quasiadjunction with triples, dimensions and volumes
    Faces,
    /// Components of the characteristic variety
    Charvar {
        /// Also list the characters of at least this depth
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Hodge data and higher Alexander polynomials of an irreducible germ
    Alexander,
    /// Log-canonical region and thresholds along a ray
    Lct {
        /// Ray direction, one rational per branch (default all ones)
        #[arg(long, num_args = 1.., value_name = "Q")]
        direction: Vec<String>,
    },
    /// Multiplier ideal at the given exponents
    Multiplier {
        #[arg(long, num_args = 1.., required = true, value_name = "Q")]
        gamma: Vec<String>,
    },
    /// Compare a germ with a degeneration of it
    Semicont {
        #[arg(long, num_args = 1.., value_name = "EXPR", conflicts_with = "special_input")]
        special: Vec<String>,
        #[arg(long, value_name = "FILE")]
        special_input: Option<PathBuf>,
    },
    /// SVG diagram of the faces in the unit square (two branches only)
    Plot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Doc,
    Svg,
    Dot,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Human => "human",
            Format::Doc => "doc",
            Format::Svg => "svg",
            Format::Dot => "dot",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSource {
    File(PathBuf),
    Inline(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Task {
    Resolve,
    Faces,
    Charvar { depth: Option<usize> },
    Alexander,
    Lct { direction: Option<Vec<Rational>> },
    Multiplier { gamma: Vec<Rational> },
    Semicont { special: InputSource },
    Plot,
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Resolve => "resolve",
            Task::Faces => "faces",
            Task::Charvar { .. } => "charvar",
            Task::Alexander => "alexander",
            Task::Lct { .. } => "lct",
            Task::Multiplier { .. } => "multiplier",
            Task::Semicont { .. } => "semicont",
            Task::Plot => "plot",
        }
    }
}

/// A validated run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfiguration {
    pub task: Task,
    pub input: InputSource,
    pub qbound: u32,
    pub r_limit: usize,
    pub depth_limit: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

fn source(file: Option<PathBuf>, inline: Vec<String>, what: &str) -> Result<InputSource, CliError> {
    match (file, inline.is_empty()) {
        (Some(p), true) => Ok(InputSource::File(p)),
        (None, false) => Ok(InputSource::Inline(inline)),
        (Some(_), false) => Err(CliError::input(
            "input-conflict",
            format!("give either a file or expressions for the {what}, not both"),
        )),
        (None, true) => Err(CliError::input("missing-input", format!("no {what} given"))),
    }
}

fn rationals(texts: &[String]) -> Result<Vec<Rational>, CliError> {
    texts
        .iter()
        .map(|t| {
            parse_rational(t).ok_or_else(|| CliError::input("bad-rational", "not a rational number").with_fragment(t))
        })
        .collect()
}

impl TryFrom<Cli> for RunConfiguration {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        let c = cli.common;
        if c.qbound == 0 || c.rlimit == 0 || c.depth_limit == 0 {
            return Err(CliError::input("non-positive-bound", "bounds must be positive"));
        }
        let task = match cli.command {
            Command::Resolve => Task::Resolve,
            Command::Faces => Task::Faces,
            Command::Charvar { depth } => Task::Charvar { depth },
            Command::Alexander => Task::Alexander,
            Command::Lct { direction } => Task::Lct {
                direction: if direction.is_empty() {
                    None
                } else {
                    Some(rationals(&direction)?)
                },
            },
            Command::Multiplier { gamma } => Task::Multiplier {
                gamma: rationals(&gamma)?,
            },
            Command::Semicont { special, special_input } => Task::Semicont {
                special: source(special_input, special, "special germ")?,
            },
            Command::Plot => Task::Plot,
        };
        let format = c
            .format
            .unwrap_or(if task == Task::Plot { Format::Svg } else { Format::Human });
        let allowed = matches!(
            (&task, format),
            (_, Format::Human | Format::Doc) | (Task::Resolve, Format::Dot) | (Task::Plot, Format::Svg)
        );
        if !allowed {
            return Err(CliError::input(
                "unsupported-format",
                format!("{} cannot write {}", task.name(), format.name()),
            ));
        }
        Ok(RunConfiguration {
            input: source(c.input, c.poly, "germ")?,
            task,
            qbound: c.qbound,
            r_limit: c.rlimit,
            depth_limit: c.depth_limit,
            format,
            out: c.out,
        })
    }
}
