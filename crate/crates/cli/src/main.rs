//! `horospinor` — spin-decorated horospheres from spinors.
//!
//! Subcommands: `lambda`, `tetra`, `grassmann`, `svg`, `ford`. Input is a
//! JSON document on stdin or `--input`, or inline `--spinor` flags. Output is
//! JSON on stdout (CSV for the lambda matrix with `--format csv`; SVG for the
//! drawing commands). Exit codes: 0 success, 2 parse error, 3 domain error.

mod commands;
mod error;
mod input;
mod report;
mod svg;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use horospinor::Field;

use crate::error::CliError;
use crate::input::InputDocument;
use crate::svg::Window;

#[derive(Parser)]
#[command(name = "horospinor", version, about = "Spin-decorated horospheres, complex lambda lengths and Pluecker coordinates")]
struct Cli {
    /// Tolerance override for verdicts and consistency flags
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Output format; csv applies to the lambda matrix
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Input JSON file (default: stdin)
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Inline spinor as RE,IM,RE,IM; repeatable, takes precedence over --input
    #[arg(long = "spinor", global = true, value_name = "RE,IM,RE,IM", allow_hyphen_values = true)]
    spinors: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Antisymmetric lambda matrix, complex distances and horosphere data
    Lambda,
    /// Ptolemy residual and shape parameters of a 4-spinor ideal tetrahedron
    Tetra,
    /// Pluecker coordinates, positivity verdict and gauge normalisation
    Grassmann {
        /// Real gauge group SL(2,R) with the totally-positive verdict
        #[arg(long, conflicts_with = "complex")]
        real: bool,
        /// Complex gauge group SL(2,C) with the vanishing-coordinate report (default)
        #[arg(long)]
        complex: bool,
    },
    /// SVG drawing of the horocycle configuration
    Svg {
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 600)]
        height: u32,
        /// Window as RE0,IM0,RE1,IM1; default: bounding box padded 10%
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// SVG of the Ford circles with denominator up to qmax
    Ford {
        #[arg(long)]
        qmax: u32,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 600)]
        height: u32,
    },
}

fn read_input(cli: &Cli) -> Result<InputDocument, CliError> {
    let mut doc = if !cli.spinors.is_empty() {
        InputDocument::from_inline(&cli.spinors)?
    } else {
        let text = match &cli.input {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?,
            None => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| CliError::Parse(format!("cannot read stdin: {e}")))?;
                buf
            }
        };
        InputDocument::from_json(&text)?
    };
    if let Some(tol) = cli.tol {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::Parse("--tol must be a positive finite number".into()));
        }
        doc.tol = Some(tol);
    }
    Ok(doc)
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Lambda => {
            let doc = read_input(cli)?;
            let report = commands::cmd_lambda(&doc)?;
            match cli.format {
                Format::Csv => Ok(report::lambda_matrix_csv(&report.lambda_matrix)),
                Format::Json => to_json(&report),
            }
        }
        Command::Tetra => {
            let doc = read_input(cli)?;
            to_json(&commands::cmd_tetra(&doc)?)
        }
        Command::Grassmann { real, complex: _ } => {
            let doc = read_input(cli)?;
            let field = if *real { Field::Real } else { Field::Complex };
            to_json(&commands::cmd_grassmann(&doc, field)?)
        }
        Command::Svg { width, height, window } => {
            let doc = read_input(cli)?;
            let window = window.as_deref().map(Window::parse).transpose()?;
            let ks = doc.nonzero_spinor_values()?;
            svg::render_spinors(&ks, *width, *height, window)
        }
        Command::Ford { qmax, width, height } => svg::render_ford(*qmax, *width, *height),
    }
}

fn to_json(report: &report::ReportDocument) -> Result<String, CliError> {
    serde_json::to_string_pretty(report).map_err(|e| CliError::Parse(e.to_string()))
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => print!("{output}{}", if output.ends_with('\n') { "" } else { "\n" }),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
