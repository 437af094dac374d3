mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spun_normal::error::ErrorCategory;

#[derive(Parser)]
#[command(name = "spun", version, about = "Normal and spun normal surfaces on ideal triangulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summary: sizes, edge degrees, cusps, solution space dimensions.
    Info(Common),
    /// Tetrahedral and edge solutions and their pairing with the edge functionals.
    Basis(Common),
    /// The Q-matching matrix with its rank and nullity.
    Qmatch(Common),
    /// Fundamental solutions of the Q-matching system.
    Enumerate(Common),
    /// Boundary classes of a solution, or the index of the boundary image.
    Boundary(BoundaryArgs),
}

#[derive(Args)]
struct Common {
    /// Triangulation file.
    #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
    path: Option<PathBuf>,
    /// Built-in triangulation: figure8 or gieseking.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BoundaryArgs {
    #[command(flatten)]
    common: Common,
    /// Q-coordinates, tetrahedron-major, e.g. 1,0,0,0,0,2.
    #[arg(long, value_name = "A,B,C,...", allow_hyphen_values = true)]
    vector: Option<String>,
    /// Report the index of the image of all integer solutions.
    #[arg(long)]
    index: bool,
    /// Only report this cusp.
    #[arg(long, value_name = "N")]
    cusp: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Math(#[from] spun_normal::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(e) if e.category() == ErrorCategory::Assertion => 3,
            _ => 2,
        }
    }
}

fn load(common: &Common) -> Result<(String, spun_normal::Triangulation), CliError> {
    if let Some(name) = &common.builtin {
        let tri = spun_normal::builtin::by_name(name).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown builtin {name:?} (expected one of {})",
                spun_normal::builtin::NAMES.join(", ")
            ))
        })?;
        return Ok((format!("builtin {name}"), tri));
    }
    let path = common.path.as_ref().expect("clap requires a path or --builtin");
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok((path.display().to_string(), spun_normal::Triangulation::parse(&text)?))
}

fn run(cli: Cli) -> Result<(serde_json::Value, Format), CliError> {
    let (common, doc) = match &cli.command {
        Command::Info(c) => (c, commands::info(load(c)?)?),
        Command::Basis(c) => (c, commands::basis(load(c)?)?),
        Command::Qmatch(c) => (c, commands::qmatch(load(c)?)?),
        Command::Enumerate(c) => (c, commands::enumerate(load(c)?)?),
        Command::Boundary(b) => {
            if b.vector.is_none() && !b.index {
                return Err(CliError::Usage("boundary needs --vector, --index, or both".into()));
            }
            let request = commands::BoundaryRequest {
                vector: b.vector.as_deref(),
                index: b.index,
                cusp: b.cusp,
            };
            (&b.common, commands::boundary(load(&b.common)?, &request)?)
        }
    };
    Ok((doc, common.format))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((doc, Format::Json)) => {
            println!("{}", serde_json::to_string_pretty(&doc).expect("documents serialize"));
            ExitCode::SUCCESS
        }
        Ok((doc, Format::Text)) => {
            print!("{}", render::text(&doc));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
