//! The sphere-by-sphere asymmetric colouring construction.
//!
//! Colours come from `{0} ∪ {1,2,…} ∪ {1̄,2̄,…} ∪ {∞}`: the root alone gets
//! `0`, vertices not yet reached get `∞`, the inner refinement loop works
//! with the numeric colours, and the final split of each step hands out
//! barred colours.

mod audit;
mod construction;
mod trace;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::partition::Partition;
use crate::symmetry::SymmetryError;

pub use audit::{audit, Audit, Property, PropertyResult};
pub use construction::{
    ball_group, extend_colouring, initial_colouring, neighbourhood_refinement, run, RunOptions,
    RunOutcome,
};
pub use trace::{RefinementTrace, SplitClass, StepTrace, ORBIT_CONVENTION};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error("root {root} out of range for a graph on {vertex_count} vertices")]
    RootOutOfRange { root: usize, vertex_count: usize },
    #[error("horizon {horizon} exceeds the eccentricity {eccentricity} of the root")]
    HorizonTooLarge { horizon: usize, eccentricity: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

/// A colour of the construction's palette.
///
/// The derived order is `Root < Numeric(1) < Numeric(2) < … < Barred(1) <
/// … < Far`; only its restriction to numeric colours is ever consulted by
/// the construction itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    Root,
    Numeric(u32),
    Barred(u32),
    Far,
}

impl Colour {
    /// `c + j` on numeric colours.
    pub fn offset(self, j: u32) -> Option<Colour> {
        match self {
            Colour::Numeric(n) => Some(Colour::Numeric(n + j)),
            _ => None,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colour::Root => f.write_str("0"),
            Colour::Numeric(n) => write!(f, "{n}"),
            Colour::Barred(b) => write!(f, "b:{b}"),
            Colour::Far => f.write_str("inf"),
        }
    }
}

impl FromStr for Colour {
    type Err = String;

    fn from_str(token: &str) -> Result<Colour, String> {
        match token {
            "0" => Ok(Colour::Root),
            "inf" => Ok(Colour::Far),
            _ => {
                if let Some(b) = token.strip_prefix("b:") {
                    match b.parse::<u32>() {
                        Ok(b) if b >= 1 => Ok(Colour::Barred(b)),
                        _ => Err(format!("invalid barred colour {token:?}")),
                    }
                } else {
                    token
                        .parse::<u32>()
                        .map(Colour::Numeric)
                        .map_err(|_| format!("invalid colour token {token:?}"))
                }
            }
        }
    }
}

/// A total vertex colouring produced at step `radius` of a run rooted at
/// `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    root: usize,
    radius: usize,
    colours: Vec<Colour>,
}

impl Colouring {
    pub fn new(root: usize, radius: usize, colours: Vec<Colour>) -> Colouring {
        Colouring {
            root,
            radius,
            colours,
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.colours[v]
    }

    pub fn max_numeric(&self) -> u32 {
        self.colours
            .iter()
            .filter_map(|c| match c {
                Colour::Numeric(n) => Some(*n),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Distinct colours in use, `∞` excluded.
    pub fn distinct_colours(&self) -> usize {
        let mut used: Vec<Colour> = self
            .colours
            .iter()
            .copied()
            .filter(|&c| c != Colour::Far)
            .collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// Properties (a) and (b): the root is the only `0`, and `∞` marks
    /// exactly the vertices beyond the radius. Returns the offending vertex.
    pub fn check_root_and_far(&self, graph: &Graph) -> Result<(), usize> {
        let dist = graph.distances_from(self.root);
        for (v, &c) in self.colours.iter().enumerate() {
            if (c == Colour::Root) != (v == self.root)
                || (c == Colour::Far) != (dist[v] > self.radius)
            {
                return Err(v);
            }
            if matches!(c, Colour::Barred(_)) && dist[v] > self.radius {
                return Err(v);
            }
        }
        Ok(())
    }

    /// `v<TAB>token` per vertex.
    pub fn to_text(&self) -> String {
        colours_to_text(&self.colours)
    }
}

pub fn colours_to_text(colours: &[Colour]) -> String {
    colours
        .iter()
        .enumerate()
        .map(|(v, c)| format!("{v}\t{c}\n"))
        .collect()
}

/// Parses the `v<TAB>token` colouring format. Every vertex `0..n` must
/// appear exactly once, in any order.
pub fn parse_colours(text: &str) -> Result<Vec<Colour>, ColouringError> {
    let mut entries: Vec<(usize, Colour, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let syntax = |message: String| ColouringError::Syntax { line, message };
        let (v, token) = trimmed
            .split_once('\t')
            .or_else(|| trimmed.split_once(' '))
            .ok_or_else(|| syntax("expected \"vertex<TAB>colour\"".into()))?;
        let v: usize = v
            .trim()
            .parse()
            .map_err(|_| syntax(format!("invalid vertex {v:?}")))?;
        let c: Colour = token.trim().parse().map_err(syntax)?;
        entries.push((v, c, line));
    }
    let n = entries.len();
    let mut colours = vec![None; n];
    for (v, c, line) in entries {
        if v >= n {
            return Err(ColouringError::Syntax {
                line,
                message: format!("vertex {v} out of range for {n} entries"),
            });
        }
        if colours[v].replace(c).is_some() {
            return Err(ColouringError::Syntax {
                line,
                message: format!("vertex {v} coloured twice"),
            });
        }
    }
    Ok(colours.into_iter().map(|c| c.unwrap()).collect())
}

/// `c[𝓑](B) = min_{v∈B} c(v)` for each block, in block order.
pub fn induced_colouring(colours: &[Colour], partition: &Partition) -> Vec<Colour> {
    partition
        .blocks()
        .iter()
        .map(|b| {
            b.iter()
                .map(|&v| colours[v])
                .min()
                .expect("blocks are non-empty")
        })
        .collect()
}

/// `⌈√n⌉` in exact integer arithmetic.
pub fn ceil_sqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while r * r < n {
        r += 1;
    }
    r
}

/// Colour budgets for maximal degree `Δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColourBound {
    /// `1 + (5/2 + 3/2·log₂Δ)·⌈√Δ⌉`.
    pub total: f64,
    /// Largest admissible numeric colour, `⌊1 + (1 + log₂Δ)·⌈3⌈√Δ⌉/2⌉⌋`.
    pub max_numeric: u64,
    /// Number of sphere visits at which one vertex may be recoloured,
    /// `1 + log₂Δ`.
    pub recolour_visits: f64,
}

pub fn colour_bound(delta: usize) -> ColourBound {
    assert!(delta >= 1, "the colour bound needs maximal degree >= 1");
    let log = (delta as f64).log2();
    let s = ceil_sqrt(delta);
    ColourBound {
        total: 1.0 + (2.5 + 1.5 * log) * s as f64,
        max_numeric: (1.0 + (1.0 + log) * (3 * s).div_ceil(2) as f64 + 1e-9).floor() as u64,
        recolour_visits: 1.0 + log,
    }
}
