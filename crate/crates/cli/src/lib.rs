//! Commands behind the `asym` binary. Each command returns its report and
//! exit code instead of printing, so tests can drive it in-process.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use asym_core::colouring::{audit, colour_bound, parse_colours, run, ColouringError, RunOptions};
use asym_core::graph::{FamilySpec, Graph, GraphError};
use asym_core::oracle::{evaluate, interior_support_check, is_asymmetric, OracleError, Quantity};
use asym_core::symmetry::{
    chain_length_bound, elementary_chain_bound, AutomorphismSearch, BoundMode, SymmetryError,
    DEFAULT_GROUP_CAP,
};
use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_CAP: u8 = 2;
pub const EXIT_INVARIANT: u8 = 3;
pub const EXIT_NOT_ASYMMETRIC: u8 = 4;

/// Environment variable that overrides the default group cap.
pub const CAP_ENV: &str = "ASYM_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Cap(_) => EXIT_CAP,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SymmetryError> for CliError {
    fn from(e: SymmetryError) -> Self {
        match e {
            SymmetryError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            SymmetryError::ColouringLength { .. } => CliError::Input(e.to_string()),
            _ => CliError::Invariant(e.to_string()),
        }
    }
}

impl From<ColouringError> for CliError {
    fn from(e: ColouringError) -> Self {
        match e {
            ColouringError::Symmetry(inner) => inner.into(),
            ColouringError::Internal(_) => CliError::Invariant(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Symmetry(inner) => inner.into(),
            OracleError::TooLarge { .. } => CliError::Cap(e.to_string()),
            OracleError::LemmaContradicted => CliError::Invariant(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    File(PathBuf),
    Family(FamilySpec),
}

impl Input {
    pub fn load(&self) -> Result<Graph, CliError> {
        match self {
            Input::File(path) => Ok(read(path)?
                .parse::<Graph>()
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?),
            Input::Family(spec) => Ok(Graph::family_graph(*spec)?),
        }
    }

    fn describe(&self) -> String {
        match self {
            Input::File(path) => path.display().to_string(),
            Input::Family(spec) => spec.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Kv,
}

/// Family selector plus its size parameters, as typed on the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyArgs {
    pub family: String,
    pub degree: Option<usize>,
    pub radius: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub w: Option<usize>,
    pub h: Option<usize>,
}

impl FamilyArgs {
    pub fn spec(&self) -> Result<FamilySpec, CliError> {
        let need = |value: Option<usize>, flag: &str| {
            value.ok_or_else(|| CliError::Input(format!("family {} needs --{flag}", self.family)))
        };
        Ok(match self.family.as_str() {
            "tree" => FamilySpec::Tree {
                degree: need(self.degree, "degree")?,
                radius: need(self.radius, "radius")?,
            },
            "cycle" => FamilySpec::Cycle {
                n: need(self.n, "n")?,
            },
            "path" => FamilySpec::Path {
                n: need(self.n, "n")?,
            },
            "complete" => FamilySpec::Complete {
                n: need(self.n, "n")?,
            },
            "complete-bipartite" | "complete_bipartite" => FamilySpec::CompleteBipartite {
                m: need(self.m, "m")?,
                n: need(self.n, "n")?,
            },
            "grid" => FamilySpec::Grid {
                w: need(self.w, "w")?,
                h: need(self.h, "h")?,
            },
            other => return Err(CliError::Input(format!("unknown family {other:?}"))),
        })
    }
}

/// Exactly one of a graph file and a family.
pub fn resolve_input(file: Option<PathBuf>, family: Option<FamilyArgs>) -> Result<Input, CliError> {
    match (file, family) {
        (Some(path), None) => Ok(Input::File(path)),
        (None, Some(args)) => Ok(Input::Family(args.spec()?)),
        (Some(_), Some(_)) => Err(CliError::Input(
            "give either --input or --family, not both".into(),
        )),
        (None, None) => Err(CliError::Input(
            "missing graph: give --input or --family".into(),
        )),
    }
}

/// Explicit flag, then the environment value, then the default.
pub fn resolve_cap(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match env {
        Some(raw) => raw.trim().parse().map_err(|_| {
            CliError::Input(format!(
                "{CAP_ENV} must be a non-negative integer, got {raw:?}"
            ))
        }),
        None => Ok(DEFAULT_GROUP_CAP),
    }
}

pub fn parse_bound_mode(name: &str) -> Result<BoundMode, CliError> {
    match name {
        "csg" => Ok(BoundMode::Classification),
        "elementary" => Ok(BoundMode::Elementary),
        other => Err(CliError::Input(format!("unknown bound mode {other:?}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input: Input,
    pub root: usize,
    /// `None` runs to the eccentricity of the root.
    pub horizon: Option<usize>,
    pub bound_mode: BoundMode,
    pub cap: usize,
    pub out: Option<PathBuf>,
    pub trace: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(input: Input, root: usize) -> RunConfig {
        RunConfig {
            input,
            root,
            horizon: None,
            bound_mode: BoundMode::Classification,
            cap: DEFAULT_GROUP_CAP,
            out: None,
            trace: None,
            format: Format::Text,
        }
    }
}

/// What a command wants printed and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

/// Ordered key/value report rendered either as `key: value` or `key=value`.
#[derive(Debug, Default)]
struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    fn put(&mut self, key: impl Into<String>, value: impl ToString) {
        self.lines.push((key.into(), value.to_string()));
    }

    fn render(&self, format: Format) -> String {
        let sep = match format {
            Format::Text => ": ",
            Format::Kv => "=",
        };
        self.lines
            .iter()
            .map(|(k, v)| format!("{k}{sep}{v}\n"))
            .collect()
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Runs the construction, audits it, and checks the result with the oracle.
pub fn cmd_colour(config: &RunConfig) -> Result<Outcome, CliError> {
    let graph = config.input.load()?;
    let n = graph.vertex_count();
    if config.root >= n {
        return Err(CliError::Input(format!(
            "root {} out of range for a graph on {n} vertices",
            config.root
        )));
    }
    let options = RunOptions {
        bound_mode: config.bound_mode,
        cap: config.cap,
    };
    let outcome = run(&graph, config.root, config.horizon, &options)?;
    let horizon = outcome.trace.horizon;
    let rigid = interior_support_check(&graph, config.root, horizon)?;
    let checks = audit(&graph, &outcome, rigid);
    let asymmetric = is_asymmetric(&graph, outcome.colouring.colours())?;

    if let Some(path) = &config.out {
        write(path, &outcome.colouring.to_text())?;
    }
    if let Some(path) = &config.trace {
        write(path, &outcome.trace.to_text())?;
    }

    let delta = graph.max_degree();
    let bound = colour_bound(delta.max(1));
    let mut report = Report::default();
    report.put("graph", config.input.describe());
    report.put("vertices", n);
    report.put("edges", graph.edge_count());
    report.put("max_degree", delta);
    report.put("root", config.root);
    report.put("horizon", horizon);
    report.put("bound_mode", config.bound_mode.name());
    report.put("cap", config.cap);
    report.put("colours_used", outcome.colouring.distinct_colours());
    report.put("colour_bound", format!("{:?}", bound.total));
    report.put("max_numeric", outcome.colouring.max_numeric());
    report.put("numeric_bound", bound.max_numeric);
    report.put("interior_rigid", rigid);
    for result in &checks.results {
        report.put(
            format!("check.{}", result.property),
            format!(
                "{}/{}",
                result.checks - result.violations.len(),
                result.checks
            ),
        );
    }
    for (property, detail) in checks.violations() {
        report.put("violation", format!("{property}: {detail}"));
    }
    report.put("asymmetric", asymmetric);
    let passed = checks.passed();
    report.put("status", if passed { "ok" } else { "invariant-violation" });
    let mut stdout = report.render(config.format);
    if config.format == Format::Text && config.out.is_none() {
        stdout.push('\n');
        stdout.push_str(&outcome.colouring.to_text());
    }
    Ok(Outcome {
        stdout,
        code: if passed { EXIT_OK } else { EXIT_INVARIANT },
    })
}

/// Exit 0 iff the colouring in `colouring` is asymmetric on the graph.
pub fn cmd_verify(
    input: &Input,
    colouring: &Path,
    cap: usize,
    format: Format,
) -> Result<Outcome, CliError> {
    let graph = input.load()?;
    let colours = parse_colours(&read(colouring)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", colouring.display())))?;
    if colours.len() != graph.vertex_count() {
        return Err(CliError::Input(format!(
            "{}: {} colours for a graph on {} vertices",
            colouring.display(),
            colours.len(),
            graph.vertex_count()
        )));
    }
    let mut report = Report::default();
    let asymmetric = is_asymmetric(&graph, &colours)?;
    report.put("asymmetric", asymmetric);
    if !asymmetric {
        let stabilizer = AutomorphismSearch::new(&graph)
            .colouring(&colours)
            .cap(cap)
            .group()?;
        report.put("stabilizer_order", stabilizer.order());
    }
    Ok(Outcome {
        stdout: report.render(format),
        code: if asymmetric {
            EXIT_OK
        } else {
            EXIT_NOT_ASYMMETRIC
        },
    })
}

/// Prints one oracle report.
pub fn cmd_oracle(
    input: &Input,
    quantity: Quantity,
    cap: usize,
    format: Format,
) -> Result<Outcome, CliError> {
    let graph = input.load()?;
    let report = evaluate(&graph, quantity, cap)?;
    let stdout = match format {
        Format::Kv => report.to_kv(),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "graph: {}", input.describe()).unwrap();
            for line in report.to_kv().lines() {
                let (k, v) = line.split_once('=').unwrap();
                writeln!(out, "{k}: {v}").unwrap();
            }
            out
        }
    };
    Ok(Outcome {
        stdout,
        code: EXIT_OK,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Colours,
    Chain,
}

/// Closed-form bounds: the colour budget for maximal degree `value`, or
/// the longest subgroup chain in `Sym_value`.
pub fn cmd_bound(kind: BoundKind, value: i64, format: Format) -> Result<Outcome, CliError> {
    if value < 1 {
        return Err(CliError::Input(format!(
            "bound input must be a positive integer, got {value}"
        )));
    }
    let v = value as usize;
    let mut report = Report::default();
    match kind {
        BoundKind::Colours => {
            let bound = colour_bound(v);
            report.put("kind", "colours");
            report.put("delta", v);
            report.put("value", format!("{:?}", bound.total));
            report.put("numeric_bound", bound.max_numeric);
        }
        BoundKind::Chain => {
            report.put("kind", "chain");
            report.put("n", v);
            report.put("value", chain_length_bound(v));
            report.put(
                "elementary_bound",
                format!("{:?}", elementary_chain_bound(v)),
            );
        }
    }
    Ok(Outcome {
        stdout: report.render(format),
        code: EXIT_OK,
    })
}
