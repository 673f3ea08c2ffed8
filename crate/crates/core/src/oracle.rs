//! Exhaustive ground truth: asymmetry, distinguishing numbers, motion, the
//! Motion Lemma, and rigidity of truncation interiors.
//!
//! Nothing here samples. Every search has an explicit size guard and fails
//! with an error rather than returning a guess.

use std::fmt::{self, Write};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::Graph;
use crate::symmetry::{
    all_permutations, automorphism_group, AutomorphismSearch, PermGroup, Permutation,
    SymmetryError, DEFAULT_GROUP_CAP,
};

/// Largest graph the `n!` filtering oracles accept.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 8;
/// Largest graph [`distinguishing_number`] accepts.
pub const DISTINGUISHING_MAX_VERTICES: usize = 12;
/// Largest graph the exhaustive 2-colouring search accepts.
pub const TWO_COLOURING_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error("{search} needs at most {limit} vertices, got {vertices}")]
    TooLarge {
        search: &'static str,
        vertices: usize,
        limit: usize,
    },
    #[error("no asymmetric colouring with at most {max_colours} colours")]
    NoColouring { max_colours: usize },
    #[error("motion is undefined: the graph has no nontrivial automorphism")]
    Asymmetric,
    #[error("root {root} out of range for a graph on {vertex_count} vertices")]
    RootOutOfRange { root: usize, vertex_count: usize },
    #[error("radius {radius} exceeds the eccentricity {eccentricity} of the root")]
    RadiusTooLarge { radius: usize, eccentricity: usize },
    #[error("Motion Lemma hypothesis holds but no asymmetric 2-colouring exists")]
    LemmaContradicted,
}

fn guard(search: &'static str, graph: &Graph, limit: usize) -> Result<(), OracleError> {
    let vertices = graph.vertex_count();
    if vertices > limit {
        return Err(OracleError::TooLarge {
            search,
            vertices,
            limit,
        });
    }
    Ok(())
}

fn preserves_edges(graph: &Graph, images: &[usize]) -> bool {
    graph
        .edges()
        .all(|(u, v)| graph.has_edge(images[u], images[v]))
}

/// Automorphisms found by testing every bijection of the vertex set.
pub fn brute_force_automorphisms(graph: &Graph) -> Result<PermGroup, OracleError> {
    guard("bijection filtering", graph, BRUTE_FORCE_MAX_VERTICES)?;
    let n = graph.vertex_count();
    let elements = all_permutations(n)
        .into_iter()
        .filter(|images| preserves_edges(graph, images))
        .map(|images| Permutation::from_images(images).expect("a permutation"))
        .collect();
    Ok(PermGroup::from_elements(n, elements))
}

/// Asymmetry by testing every bijection of the vertex set.
pub fn is_asymmetric_brute_force<C: PartialEq>(
    graph: &Graph,
    colours: &[C],
) -> Result<bool, OracleError> {
    check_length(graph, colours.len())?;
    guard("bijection filtering", graph, BRUTE_FORCE_MAX_VERTICES)?;
    let n = graph.vertex_count();
    Ok(!all_permutations(n).into_iter().any(|images| {
        images.iter().enumerate().any(|(v, &w)| v != w)
            && images
                .iter()
                .enumerate()
                .all(|(v, &w)| colours[v] == colours[w])
            && preserves_edges(graph, &images)
    }))
}

fn check_length(graph: &Graph, found: usize) -> Result<(), SymmetryError> {
    let expected = graph.vertex_count();
    if found != expected {
        return Err(SymmetryError::ColouringLength { expected, found });
    }
    Ok(())
}

/// True iff the identity is the only automorphism preserving `colours`.
pub fn is_asymmetric<C: Ord>(graph: &Graph, colours: &[C]) -> Result<bool, SymmetryError> {
    check_length(graph, colours.len())?;
    Ok(AutomorphismSearch::new(graph)
        .colouring(colours)
        .find_nontrivial()?
        .is_none())
}

/// A minimal asymmetric colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distinguishing {
    /// `D(G)`.
    pub number: usize,
    /// Colours `0..number`, the first asymmetric one in enumeration order.
    pub colouring: Vec<usize>,
    /// Colourings examined over all tried colour counts.
    pub examined: u64,
}

/// Calls `visit` on every colouring of `0..n` with colours `0..c` in which
/// colour `j > 0` first appears after colour `j − 1` (one per orbit of the
/// colour permutations). Stops once `visit` returns true.
fn each_normalized(n: usize, c: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(
        pos: usize,
        used: usize,
        c: usize,
        current: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if pos == current.len() {
            return visit(current);
        }
        for colour in 0..(used + 1).min(c) {
            current[pos] = colour;
            if go(pos + 1, used.max(colour + 1), c, current, visit) {
                return true;
            }
        }
        false
    }
    let mut current = vec![0; n];
    go(0, 0, c, &mut current, visit)
}

fn stabilizer_trivial(nontrivial: &[Permutation], colours: &[usize]) -> bool {
    !nontrivial
        .iter()
        .any(|g| (0..colours.len()).all(|v| colours[g.apply(v)] == colours[v]))
}

/// `D(G)`: the least `c ≤ max_colours` admitting an asymmetric colouring.
///
/// Colour permutations preserve asymmetry, so only normalized colourings
/// are enumerated; every smaller colour count is searched to exhaustion
/// before the answer is returned.
pub fn distinguishing_number(
    graph: &Graph,
    max_colours: usize,
) -> Result<Distinguishing, OracleError> {
    distinguishing_number_capped(graph, max_colours, DEFAULT_GROUP_CAP)
}

fn distinguishing_number_capped(
    graph: &Graph,
    max_colours: usize,
    cap: usize,
) -> Result<Distinguishing, OracleError> {
    guard("distinguishing search", graph, DISTINGUISHING_MAX_VERTICES)?;
    let group = automorphism_group(graph, cap)?;
    let nontrivial: Vec<Permutation> = group
        .elements()
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();
    let n = graph.vertex_count();
    let mut examined = 0u64;
    for c in 1..=max_colours {
        let mut found = None;
        each_normalized(n, c, &mut |colours| {
            examined += 1;
            if stabilizer_trivial(&nontrivial, colours) {
                found = Some(colours.to_vec());
                return true;
            }
            false
        });
        if let Some(colouring) = found {
            return Ok(Distinguishing {
                number: c,
                colouring,
                examined,
            });
        }
    }
    Err(OracleError::NoColouring { max_colours })
}

/// Whether some colouring with `colours` colours is asymmetric, by
/// exhaustion over normalized colourings.
pub fn has_asymmetric_colouring(graph: &Graph, colours: usize) -> Result<bool, OracleError> {
    guard("distinguishing search", graph, DISTINGUISHING_MAX_VERTICES)?;
    let group = automorphism_group(graph, DEFAULT_GROUP_CAP)?;
    let nontrivial: Vec<Permutation> = group
        .elements()
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();
    Ok(each_normalized(graph.vertex_count(), colours, &mut |c| {
        stabilizer_trivial(&nontrivial, c)
    }))
}

/// Least number of vertices moved by a nontrivial automorphism.
pub fn motion(graph: &Graph) -> Result<usize, OracleError> {
    let group = automorphism_group(graph, DEFAULT_GROUP_CAP)?;
    motion_of(&group)
}

fn motion_of(group: &PermGroup) -> Result<usize, OracleError> {
    group
        .elements()
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| g.support().len())
        .min()
        .ok_or(OracleError::Asymmetric)
}

/// `2^{m/2} ≥ order`, compared exactly as `2^m ≥ order²`.
pub fn motion_lemma_hypothesis(motion: usize, order: usize) -> bool {
    let square = (order as u128) * (order as u128);
    motion >= 128 || (1u128 << motion) >= square
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotionLemma {
    pub motion: usize,
    pub aut_order: usize,
    pub hypothesis: bool,
    /// The first asymmetric 2-colouring in binary counting order; present
    /// exactly when the hypothesis holds.
    pub colouring: Option<Vec<usize>>,
    pub examined: u64,
}

/// Computes `m` and `|Aut G|`; when `2^{m/2} ≥ |Aut G|`, searches every
/// 2-colouring for an asymmetric one. Failing to find one would contradict
/// the lemma and is reported as [`OracleError::LemmaContradicted`].
pub fn motion_lemma_check(graph: &Graph) -> Result<MotionLemma, OracleError> {
    motion_lemma_check_capped(graph, DEFAULT_GROUP_CAP)
}

fn motion_lemma_check_capped(graph: &Graph, cap: usize) -> Result<MotionLemma, OracleError> {
    let group = automorphism_group(graph, cap)?;
    let motion = motion_of(&group)?;
    let aut_order = group.order();
    let hypothesis = motion_lemma_hypothesis(motion, aut_order);
    if !hypothesis {
        return Ok(MotionLemma {
            motion,
            aut_order,
            hypothesis,
            colouring: None,
            examined: 0,
        });
    }
    guard("2-colouring search", graph, TWO_COLOURING_MAX_VERTICES)?;
    let nontrivial: Vec<Permutation> = group
        .elements()
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();
    let n = graph.vertex_count();
    let mut colours = vec![0usize; n];
    for mask in 0u64..(1 << n) {
        for (v, c) in colours.iter_mut().enumerate() {
            *c = (mask >> v & 1) as usize;
        }
        if stabilizer_trivial(&nontrivial, &colours) {
            return Ok(MotionLemma {
                motion,
                aut_order,
                hypothesis,
                colouring: Some(colours),
                examined: mask + 1,
            });
        }
    }
    Err(OracleError::LemmaContradicted)
}

/// True iff no nontrivial automorphism moves only vertices of
/// `B(root, radius − 1)`.
pub fn interior_support_check(
    graph: &Graph,
    root: usize,
    radius: usize,
) -> Result<bool, OracleError> {
    let n = graph.vertex_count();
    if root >= n {
        return Err(OracleError::RootOutOfRange {
            root,
            vertex_count: n,
        });
    }
    let eccentricity = graph.eccentricity(root);
    if radius > eccentricity {
        return Err(OracleError::RadiusTooLarge {
            radius,
            eccentricity,
        });
    }
    let dist = graph.distances_from(root);
    // Interior vertices share one colour, every other vertex has its own.
    let colours: Vec<usize> = (0..n)
        .map(|v| {
            if radius > 0 && dist[v] < radius {
                0
            } else {
                v + 1
            }
        })
        .collect();
    Ok(AutomorphismSearch::new(graph)
        .colouring(&colours)
        .find_nontrivial()?
        .is_none())
}

/// Quantities the oracle can report on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Motion,
    DistinguishingNumber { max_colours: usize },
    AutOrder,
    MotionLemma,
    InteriorSupport { root: usize, radius: usize },
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Motion => "motion",
            Quantity::DistinguishingNumber { .. } => "dnumber",
            Quantity::AutOrder => "autorder",
            Quantity::MotionLemma => "motion-lemma",
            Quantity::InteriorSupport { .. } => "interior-support",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleValue {
    Integer(u64),
    Boolean(bool),
    Distinguishing(Distinguishing),
    MotionLemma(MotionLemma),
}

impl fmt::Display for OracleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleValue::Integer(x) => write!(f, "{x}"),
            OracleValue::Boolean(b) => write!(f, "{b}"),
            OracleValue::Distinguishing(d) => write!(f, "{}", d.number),
            OracleValue::MotionLemma(m) => f.write_str(if !m.hypothesis {
                "hypothesis-not-satisfied"
            } else {
                "colouring-found"
            }),
        }
    }
}

fn join(colours: &[usize]) -> String {
    colours
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// One oracle evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub quantity: &'static str,
    pub value: OracleValue,
    pub search_space: u64,
    pub elapsed: Duration,
}

impl OracleReport {
    /// `key=value` lines. `elapsed_ms` is the only nondeterministic line.
    pub fn to_kv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "quantity={}", self.quantity).unwrap();
        writeln!(out, "value={}", self.value).unwrap();
        match &self.value {
            OracleValue::Distinguishing(d) => {
                writeln!(out, "colouring={}", join(&d.colouring)).unwrap();
            }
            OracleValue::MotionLemma(m) => {
                writeln!(out, "motion={}", m.motion).unwrap();
                writeln!(out, "aut_order={}", m.aut_order).unwrap();
                writeln!(out, "hypothesis={}", m.hypothesis).unwrap();
                if let Some(c) = &m.colouring {
                    writeln!(out, "colouring={}", join(c)).unwrap();
                }
            }
            _ => {}
        }
        writeln!(out, "search_space={}", self.search_space).unwrap();
        writeln!(out, "elapsed_ms={:.3}", self.elapsed.as_secs_f64() * 1e3).unwrap();
        out
    }
}

/// Evaluates `quantity` and times it; `cap` bounds every stored group.
pub fn evaluate(
    graph: &Graph,
    quantity: Quantity,
    cap: usize,
) -> Result<OracleReport, OracleError> {
    let start = Instant::now();
    let (value, search_space) = match quantity {
        Quantity::Motion => {
            let group = automorphism_group(graph, cap)?;
            (
                OracleValue::Integer(motion_of(&group)? as u64),
                group.order() as u64,
            )
        }
        Quantity::AutOrder => {
            let order = automorphism_group(graph, cap)?.order() as u64;
            (OracleValue::Integer(order), order)
        }
        Quantity::DistinguishingNumber { max_colours } => {
            let d = distinguishing_number_capped(graph, max_colours, cap)?;
            let examined = d.examined;
            (OracleValue::Distinguishing(d), examined)
        }
        Quantity::MotionLemma => {
            let m = motion_lemma_check_capped(graph, cap)?;
            let examined = m.examined;
            (OracleValue::MotionLemma(m), examined)
        }
        Quantity::InteriorSupport { root, radius } => {
            let rigid = interior_support_check(graph, root, radius)?;
            let interior = graph
                .distances_from(root)
                .iter()
                .filter(|&&d| d < radius)
                .count();
            (OracleValue::Boolean(rigid), interior as u64)
        }
    };
    Ok(OracleReport {
        quantity: quantity.name(),
        value,
        search_space,
        elapsed: start.elapsed(),
    })
}
