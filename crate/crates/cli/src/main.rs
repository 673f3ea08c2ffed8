use std::path::PathBuf;
use std::process::ExitCode;

use asym_cli::{
    cmd_bound, cmd_colour, cmd_oracle, cmd_verify, parse_bound_mode, resolve_cap, resolve_input,
    BoundKind, CliError, FamilyArgs, Format, Input, Outcome, RunConfig, CAP_ENV, EXIT_INPUT,
};
use asym_core::oracle::Quantity;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "asym",
    version,
    about = "Asymmetric colourings of bounded-degree graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph file: vertex count, then one `u v` line per edge.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in family: tree, cycle, path, complete, complete-bipartite, grid.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long)]
    radius: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    w: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
}

impl GraphArgs {
    fn resolve(self) -> Result<Input, CliError> {
        let family = self.family.map(|family| FamilyArgs {
            family,
            degree: self.degree,
            radius: self.radius,
            n: self.n,
            m: self.m,
            w: self.w,
            h: self.h,
        });
        resolve_input(self.input, family)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Kv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Kv => Format::Kv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantityArg {
    Motion,
    Dnumber,
    Autorder,
    MotionLemma,
    InteriorSupport,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    Colours,
    Chain,
}

#[derive(Subcommand)]
enum Command {
    /// Run the construction, audit every step, and check asymmetry.
    Colour {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Number of spheres to colour; defaults to the eccentricity of the root.
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long, default_value = "csg", value_parser = ["csg", "elementary"])]
        bound_mode: String,
        /// Largest group stored explicitly (default 1000000, or $ASYM_CAP).
        #[arg(long)]
        cap: Option<usize>,
        /// Write the colouring here instead of appending it to the report.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the refinement trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Exit 0 iff the colouring file is asymmetric on the graph.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Exhaustive oracle quantities.
    Oracle {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum)]
        quantity: QuantityArg,
        /// Largest colour count tried by dnumber.
        #[arg(long, default_value_t = 8)]
        max_colours: usize,
        /// Root and ball radius for interior-support.
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long = "ball-radius")]
        ball_radius: Option<usize>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Closed-form bounds.
    Bound {
        #[arg(value_enum)]
        kind: BoundArg,
        #[arg(allow_negative_numbers = true)]
        value: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn dispatch(command: Command) -> Result<Outcome, CliError> {
    let env_cap = std::env::var(CAP_ENV).ok();
    match command {
        Command::Colour {
            graph,
            root,
            horizon,
            bound_mode,
            cap,
            out,
            trace,
            format,
        } => {
            let config = RunConfig {
                input: graph.resolve()?,
                root,
                horizon,
                bound_mode: parse_bound_mode(&bound_mode)?,
                cap: resolve_cap(cap, env_cap.as_deref())?,
                out,
                trace,
                format: format.into(),
            };
            cmd_colour(&config)
        }
        Command::Verify {
            graph,
            colouring,
            cap,
            format,
        } => {
            let cap = resolve_cap(cap, env_cap.as_deref())?;
            cmd_verify(&graph.resolve()?, &colouring, cap, format.into())
        }
        Command::Oracle {
            graph,
            quantity,
            max_colours,
            root,
            ball_radius,
            cap,
            format,
        } => {
            let input = graph.resolve()?;
            let quantity = match quantity {
                QuantityArg::Motion => Quantity::Motion,
                QuantityArg::Dnumber => Quantity::DistinguishingNumber { max_colours },
                QuantityArg::Autorder => Quantity::AutOrder,
                QuantityArg::MotionLemma => Quantity::MotionLemma,
                QuantityArg::InteriorSupport => {
                    let radius = match ball_radius {
                        Some(r) => r,
                        None => input.load()?.eccentricity(root),
                    };
                    Quantity::InteriorSupport { root, radius }
                }
            };
            cmd_oracle(
                &input,
                quantity,
                resolve_cap(cap, env_cap.as_deref())?,
                format.into(),
            )
        }
        Command::Bound {
            kind,
            value,
            format,
        } => {
            let kind = match kind {
                BoundArg::Colours => BoundKind::Colours,
                BoundArg::Chain => BoundKind::Chain,
            };
            cmd_bound(kind, value, format.into())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
