use std::fmt::Write;

use super::{Colour, Colouring};
use crate::partition::Partition;
use crate::symmetry::{BoundMode, PermGroup};

/// The orbit list of step `k` is taken on the current sphere `S(v₀,k)`,
/// whose vertices are the ones the next sphere's neighbourhoods are read
/// against.
pub const ORBIT_CONVENTION: &str = "orbits of the step group on the current sphere S(v0,k)";

/// Groups with at most this many elements are listed in full in the text
/// trace.
const LISTED_GROUP_ORDER: usize = 24;

/// One class of the finest partition and its chunks in the final split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitClass {
    pub class: Vec<usize>,
    pub chunks: Vec<Vec<usize>>,
}

/// Everything step `k → k+1` computed.
#[derive(Debug, Clone)]
pub struct StepTrace {
    pub k: usize,
    /// `S(v₀,k)` and `S(v₀,k+1)`, ascending.
    pub current_sphere: Vec<usize>,
    pub next_sphere: Vec<usize>,
    /// `A₁,…,A_n`: orbits of the step group on the current sphere.
    pub orbits: Partition,
    /// `𝓑₀ ⊒ 𝓑₁ ⊒ … ⊒ 𝓑_n`, partitions of the next sphere.
    pub partitions: Vec<Partition>,
    /// Permutations induced by the step group on the blocks of `𝓑_n`
    /// (block `b` is `partitions[n].blocks()[b]`).
    pub block_group: PermGroup,
    /// `Γ̃_{k,i}` for `i = 0..=n`, as subgroups of `block_group`.
    pub running: Vec<PermGroup>,
    /// Admissible fixing-set length at inner index `i`.
    pub size_bounds: Vec<usize>,
    /// Chosen blocks of `𝓑_{i+1}` at inner index `i`, as block indices in
    /// recolouring order (member `j` receives offset `j + 1`).
    pub fixing_sets: Vec<Vec<usize>>,
    /// `c_{k,i}` on the next sphere (aligned with `next_sphere`), `i = 0..=n`.
    pub sphere_colours: Vec<Vec<Colour>>,
    pub split: Vec<SplitClass>,
    /// `c_{k+1}`.
    pub colouring: Colouring,
}

impl StepTrace {
    pub fn inner_steps(&self) -> usize {
        self.fixing_sets.len()
    }

    /// `c_{k,i}(v)` for `v` in the next sphere.
    pub fn inner_colour(&self, i: usize, v: usize) -> Colour {
        let pos = self
            .next_sphere
            .binary_search(&v)
            .expect("vertex in the next sphere");
        self.sphere_colours[i][pos]
    }
}

/// The complete record of a run.
#[derive(Debug, Clone)]
pub struct RefinementTrace {
    pub root: usize,
    pub horizon: usize,
    pub max_degree: usize,
    /// `⌈√Δ⌉`.
    pub chunk_size: usize,
    pub bound_mode: BoundMode,
    pub initial: Colouring,
    /// `groups[k]`: restrictions to `B(v₀,k)` of the stabiliser of `c_k`.
    pub groups: Vec<PermGroup>,
    pub steps: Vec<StepTrace>,
}

fn colour_list(vertices: &[usize], colours: impl Fn(usize) -> Colour) -> String {
    vertices
        .iter()
        .map(|&v| format!("{v}:{}", colours(v)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_group(out: &mut String, key: &str, group: &PermGroup) {
    writeln!(out, "{key}_order: {}", group.order()).unwrap();
    if group.order() <= LISTED_GROUP_ORDER {
        for p in group.elements() {
            writeln!(out, "  {p}").unwrap();
        }
    }
}

impl RefinementTrace {
    /// Structured text report with one section per `(k, i)`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# refinement trace").unwrap();
        writeln!(out, "root: {}", self.root).unwrap();
        writeln!(out, "horizon: {}", self.horizon).unwrap();
        writeln!(out, "max_degree: {}", self.max_degree).unwrap();
        writeln!(out, "chunk_size: {}", self.chunk_size).unwrap();
        writeln!(out, "bound_mode: {}", self.bound_mode.name()).unwrap();
        writeln!(out, "orbit_convention: {ORBIT_CONVENTION}").unwrap();
        writeln!(out).unwrap();
        writeln!(out, "[k=0 initial]").unwrap();
        write_group(&mut out, "group", &self.groups[0]);
        for step in &self.steps {
            let k = step.k;
            writeln!(out).unwrap();
            writeln!(out, "[k={k}]").unwrap();
            writeln!(out, "sphere_k: {:?}", step.current_sphere).unwrap();
            writeln!(out, "sphere_k+1: {:?}", step.next_sphere).unwrap();
            writeln!(out, "orbits: {}", step.orbits).unwrap();
            for (i, p) in step.partitions.iter().enumerate() {
                writeln!(out, "B_{i}: {p}").unwrap();
            }
            write_group(&mut out, "block_group", &step.block_group);
            writeln!(
                out,
                "c_{k},0: {}",
                colour_list(&step.next_sphere, |v| step.inner_colour(0, v))
            )
            .unwrap();
            for i in 0..step.inner_steps() {
                writeln!(out).unwrap();
                writeln!(out, "[k={k} i={i}]").unwrap();
                writeln!(out, "running_order: {}", step.running[i].order()).unwrap();
                writeln!(out, "size_bound: {}", step.size_bounds[i]).unwrap();
                let blocks = step.partitions[i + 1].blocks();
                let chosen: Vec<String> = step.fixing_sets[i]
                    .iter()
                    .map(|&b| Partition::new(vec![blocks[b].clone()]).to_string())
                    .collect();
                writeln!(out, "fixing_set: [{}]", chosen.join(" ")).unwrap();
                let changes: Vec<String> = step
                    .next_sphere
                    .iter()
                    .filter(|&&v| step.inner_colour(i, v) != step.inner_colour(i + 1, v))
                    .map(|&v| {
                        format!(
                            "{v}:{}->{}",
                            step.inner_colour(i, v),
                            step.inner_colour(i + 1, v)
                        )
                    })
                    .collect();
                writeln!(out, "changes: {}", changes.join(" ")).unwrap();
            }
            writeln!(out).unwrap();
            writeln!(out, "[k={k} split]").unwrap();
            writeln!(
                out,
                "running_order: {}",
                step.running.last().map_or(0, PermGroup::order)
            )
            .unwrap();
            for class in &step.split {
                let chunks: Vec<String> = class
                    .chunks
                    .iter()
                    .map(|c| colour_list(c, |v| step.colouring.colour(v)))
                    .collect();
                writeln!(out, "class {:?}: {}", class.class, chunks.join(" | ")).unwrap();
            }
            write_group(&mut out, "group", &self.groups[k + 1]);
        }
        out
    }
}
