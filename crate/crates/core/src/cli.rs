//! Command-line frontend.
//!
//! ```text
//! mobius-mpoly gen     --m 4 --n 2 --format edgelist
//! mobius-mpoly line    --m 5 --n 6
//! mobius-mpoly mpoly   --m 7 --n 3 [--line] --format latex
//! mobius-mpoly indices --from-file g.txt --alpha 1,0.5 --format json
//! mobius-mpoly verify  --subject thm32 --m-range 4:6 --n-range 4:6 --format json
//! ```
//!
//! Exit status: 0 on success, 1 on I/O failure, 2 on invalid parameters or input,
//! 3 when a verify run contains theorem mismatches. Proposition mismatches are
//! reported but do not change the exit status.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::indices::{indices_from_edges, indices_from_mpoly, Alpha, IndexAgreement, IndexSet};
use crate::ladder::ladder;
use crate::polynomial::RenderFormat;
use crate::verify::{
    default_grid, verify_all_default, verify_prop41, verify_prop42, verify_propositions,
    verify_thm31, verify_thm32, GridRange, Subject, VerificationReport,
};

#[derive(Debug, Parser)]
#[command(
    name = "mobius-mpoly",
    version,
    about = "M-polynomials and degree-based indices of generalized Möbius ladders"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the ladder M_{m,n}.
    Gen(GraphCmd),
    /// Emit the line graph of the ladder (or of --from-file).
    Line(GraphCmd),
    /// Emit the M-polynomial.
    Mpoly(PolyCmd),
    /// Emit the six indices computed from edges and from the M-polynomial.
    Indices(PolyCmd),
    /// Compare the closed forms with the generated-graph oracle.
    Verify(VerifyCmd),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifySubject {
    Thm31,
    Thm32,
    Props,
    All,
}

#[derive(Debug, Args)]
pub struct GraphSource {
    /// Ladder length parameter (m >= 4).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "from_file")]
    pub m: Option<i64>,
    /// Ladder width parameter (n >= 2).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "from_file")]
    pub n: Option<i64>,
    /// Read the graph from an edge-list file instead of generating a ladder.
    #[arg(long, value_name = "PATH")]
    pub from_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphCmd {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct PolyCmd {
    #[command(flatten)]
    pub source: GraphSource,
    /// Use the line graph of the source graph.
    #[arg(long)]
    pub line: bool,
    /// Randić exponents, comma separated or repeated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1")]
    pub alpha: Vec<f64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyCmd {
    #[arg(long, value_enum, default_value_t = VerifySubject::All)]
    pub subject: VerifySubject,
    /// Inclusive m range `A:B`; defaults to each subject's grid.
    #[arg(long, value_name = "A:B")]
    pub m_range: Option<GridRange>,
    /// Inclusive n range `A:B`; defaults to each subject's grid.
    #[arg(long, value_name = "A:B")]
    pub n_range: Option<GridRange>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1")]
    pub alpha: Vec<f64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidParams(_) => 2,
            CliError::Io { .. } => 1,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::InvalidParams(e.to_string())
}

/// Result of a successful command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    TheoremMismatch,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::TheoremMismatch => 3,
        }
    }
}

impl GraphSource {
    fn load(&self) -> Result<Graph, CliError> {
        if let Some(path) = &self.from_file {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            return Graph::from_edgelist(&text)
                .map_err(|e| CliError::InvalidParams(format!("{}: {e}", path.display())));
        }
        match (self.m, self.n) {
            (Some(m), Some(n)) => ladder(m, n).map_err(invalid),
            _ => Err(invalid("--m and --n are required unless --from-file is given")),
        }
    }
}

fn parse_alphas(values: &[f64]) -> Result<Vec<Alpha>, CliError> {
    values
        .iter()
        .map(|&v| Alpha::new(v).ok_or_else(|| invalid(format!("alpha must be finite, got {v}"))))
        .collect()
}

fn unsupported(format: Format, command: &str) -> CliError {
    invalid(format!("format {format:?} is not supported by `{command}`").to_lowercase())
}

fn render_graph(g: &Graph, format: Format, command: &str) -> Result<String, CliError> {
    match format {
        Format::Text | Format::Edgelist => Ok(g.to_edgelist()),
        Format::Json => Ok(g.to_json() + "\n"),
        Format::Latex => Err(unsupported(format, command)),
    }
}

#[derive(Serialize)]
struct IndicesJson<'a> {
    from_edges: &'a IndexSet,
    from_mpoly: &'a IndexSet,
    agree: &'a IndexAgreement,
    all_agree: bool,
}

fn render_indices(edges: &IndexSet, poly: &IndexSet, format: Format) -> Result<String, CliError> {
    let agree = edges.agreement(poly);
    match format {
        Format::Json => {
            let doc = IndicesJson {
                from_edges: edges,
                from_mpoly: poly,
                agree: &agree,
                all_agree: agree.all(),
            };
            Ok(serde_json::to_string(&doc).expect("indices serialize") + "\n")
        }
        Format::Text => {
            let mut out = format!("{:<8} {:>28} {:>28} status\n", "index", "edges", "mpoly");
            let mut row = |name: String, a: String, b: String, ok: bool| {
                writeln!(out, "{name:<8} {a:>28} {b:>28} {}", if ok { "agree" } else { "DISAGREE" })
                    .unwrap();
            };
            row("M1".into(), edges.m1.to_string(), poly.m1.to_string(), agree.m1);
            row("M2".into(), edges.m2.to_string(), poly.m2.to_string(), agree.m2);
            row("MM2".into(), edges.mm2.to_string(), poly.mm2.to_string(), agree.mm2);
            row("SDD".into(), edges.sdd.to_string(), poly.sdd.to_string(), agree.sdd);
            for (a, v) in &edges.r_alpha {
                row(format!("R_{a}"), v.to_string(), poly.r_alpha[a].to_string(), agree.r_alpha[a]);
            }
            for (a, v) in &edges.rr_alpha {
                row(format!("RR_{a}"), v.to_string(), poly.rr_alpha[a].to_string(), agree.rr_alpha[a]);
            }
            Ok(out)
        }
        Format::Latex | Format::Edgelist => Err(unsupported(format, "indices")),
    }
}

fn run_verify(cmd: &VerifyCmd) -> Result<VerificationReport, CliError> {
    let alphas = parse_alphas(&cmd.alpha)?;
    let explicit = cmd.m_range.is_some() || cmd.n_range.is_some();
    let grid_for = |subject: Subject| {
        let (m, n) = default_grid(subject);
        (cmd.m_range.unwrap_or(m), cmd.n_range.unwrap_or(n))
    };
    let thm31 = || {
        let (m, n) = grid_for(Subject::Thm31);
        verify_thm31(m, n)
    };
    let thm32 = || {
        let (m, n) = grid_for(Subject::Thm32);
        verify_thm32(m, n)
    };
    let props = || {
        if explicit {
            let (m, n) = grid_for(Subject::Prop41);
            verify_propositions(m, n, &alphas)
        } else {
            let (m41, n41) = grid_for(Subject::Prop41);
            let (m42, n42) = grid_for(Subject::Prop42);
            Ok(VerificationReport::merge([
                verify_prop41(m41, n41, &alphas)?,
                verify_prop42(m42, n42, &alphas)?,
            ]))
        }
    };
    let report = match cmd.subject {
        VerifySubject::Thm31 => thm31(),
        VerifySubject::Thm32 => thm32(),
        VerifySubject::Props => props(),
        VerifySubject::All if !explicit => Ok(verify_all_default(&alphas)),
        VerifySubject::All => (|| Ok(VerificationReport::merge([thm31()?, thm32()?, props()?])))(),
    };
    report.map_err(invalid)
}

/// Executes one parsed command, writing its output to `--out` or `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<Outcome, CliError> {
    let mut outcome = Outcome::Success;
    let (text, output) = match &cli.command {
        Command::Gen(cmd) => (
            render_graph(&cmd.source.load()?, cmd.output.format, "gen")?,
            &cmd.output,
        ),
        Command::Line(cmd) => (
            render_graph(&cmd.source.load()?.line_graph(), cmd.output.format, "line")?,
            &cmd.output,
        ),
        Command::Mpoly(cmd) => {
            let mut g = cmd.source.load()?;
            if cmd.line {
                g = g.line_graph();
            }
            let p = g.m_polynomial();
            let format = match cmd.output.format {
                Format::Text => RenderFormat::Plain,
                Format::Latex => RenderFormat::Latex,
                Format::Json => RenderFormat::Json,
                Format::Edgelist => return Err(unsupported(Format::Edgelist, "mpoly")),
            };
            (p.render(format) + "\n", &cmd.output)
        }
        Command::Indices(cmd) => {
            let alphas = parse_alphas(&cmd.alpha)?;
            let mut g = cmd.source.load()?;
            if cmd.line {
                g = g.line_graph();
            }
            let edges = indices_from_edges(&g, &alphas);
            let poly = indices_from_mpoly(&g.m_polynomial(), &alphas).map_err(invalid)?;
            (render_indices(&edges, &poly, cmd.output.format)?, &cmd.output)
        }
        Command::Verify(cmd) => {
            let report = run_verify(cmd)?;
            if report.has_theorem_mismatch() {
                outcome = Outcome::TheoremMismatch;
            }
            let text = match cmd.output.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
                f => return Err(unsupported(f, "verify")),
            };
            (text, &cmd.output)
        }
    };

    match &output.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?,
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })?,
    }
    Ok(outcome)
}

/// Parses `args` (including the program name) and runs; returns the exit status.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return e.exit_code();
        }
    };
    match run(&cli, stdout) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if matches!(e, CliError::InvalidParams(_)) {
                let _ = writeln!(stderr, "\nFor more information, try '--help'.");
            }
            e.exit_code()
        }
    }
}
