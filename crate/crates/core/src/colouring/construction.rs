use std::collections::BTreeMap;

use super::trace::{RefinementTrace, SplitClass, StepTrace};
use super::{ceil_sqrt, induced_colouring, Colour, Colouring, ColouringError};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::symmetry::{
    colouring_stabilizer, minimal_fixing_set, orbits, AutomorphismSearch, BoundMode, PermGroup,
    Permutation, SymmetryError, DEFAULT_GROUP_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub bound_mode: BoundMode,
    pub cap: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            bound_mode: BoundMode::Classification,
            cap: DEFAULT_GROUP_CAP,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub colouring: Colouring,
    pub trace: RefinementTrace,
}

/// `c₀`: the root is `0`, everything else `∞`.
pub fn initial_colouring(graph: &Graph, root: usize) -> Result<Colouring, ColouringError> {
    if !graph.contains(root) {
        return Err(ColouringError::RootOutOfRange {
            root,
            vertex_count: graph.vertex_count(),
        });
    }
    let mut colours = vec![Colour::Far; graph.vertex_count()];
    colours[root] = Colour::Root;
    Ok(Colouring::new(root, 0, colours))
}

/// Restrictions to `B(v₀,k)` of the automorphisms preserving `c_k`, where
/// `k` is the colouring's radius.
///
/// Everything the next step reads from the stabiliser of `c_k` (orbits on
/// `S(v₀,k)` and the induced permutations of neighbourhood classes in
/// `S(v₀,k+1)`) depends only on this restriction.
pub fn ball_group(
    graph: &Graph,
    colouring: &Colouring,
    cap: usize,
) -> Result<PermGroup, SymmetryError> {
    let ball = graph.ball(colouring.root(), colouring.radius());
    AutomorphismSearch::new(graph)
        .colouring(colouring.colours())
        .support(&ball)
        .cap(cap)
        .group()
}

/// `𝓑₀,…,𝓑_n`: `𝓑₀ = {next_sphere}`, and `𝓑_i` splits each class of
/// `𝓑_{i−1}` by the exact neighbour set inside the orbit `A_i`.
pub fn neighbourhood_refinement(
    graph: &Graph,
    next_sphere: &[usize],
    orbit_list: &Partition,
) -> Vec<Partition> {
    let mut partitions = vec![Partition::new(vec![next_sphere.to_vec()])];
    let mut in_orbit = vec![false; graph.vertex_count()];
    for orbit in orbit_list.blocks() {
        for &v in orbit {
            in_orbit[v] = true;
        }
        let mut blocks = Vec::new();
        for block in partitions.last().unwrap().blocks() {
            let mut by_neighbours: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for &x in block {
                let key: Vec<usize> = graph
                    .neighbours(x)
                    .iter()
                    .copied()
                    .filter(|&u| in_orbit[u])
                    .collect();
                by_neighbours.entry(key).or_default().push(x);
            }
            blocks.extend(by_neighbours.into_values());
        }
        for &v in orbit {
            in_orbit[v] = false;
        }
        partitions.push(Partition::new(blocks));
    }
    partitions
}

fn internal(msg: impl Into<String>) -> ColouringError {
    ColouringError::Internal(msg.into())
}

/// The permutations `group` induces on the classes of `finest`, a
/// partition of `S(v₀,k+1)` whose classes are exactly the sets of vertices
/// sharing a neighbourhood in `S(v₀,k)`.
fn induced_block_group(
    graph: &Graph,
    group: &PermGroup,
    current_sphere: &[usize],
    finest: &Partition,
) -> Result<PermGroup, ColouringError> {
    let mut in_current = vec![false; graph.vertex_count()];
    for &v in current_sphere {
        in_current[v] = true;
    }
    let signature = |x: usize| -> Vec<usize> {
        graph
            .neighbours(x)
            .iter()
            .copied()
            .filter(|&u| in_current[u])
            .collect()
    };
    let signatures: Vec<Vec<usize>> = finest.blocks().iter().map(|b| signature(b[0])).collect();
    let by_signature: BTreeMap<&[usize], usize> = signatures
        .iter()
        .enumerate()
        .map(|(b, s)| (s.as_slice(), b))
        .collect();
    if by_signature.len() != signatures.len() {
        return Err(internal("two finest classes share a neighbourhood"));
    }
    let mut perms = Vec::with_capacity(group.order());
    for g in group.elements() {
        let images = signatures
            .iter()
            .map(|sig| {
                let mut image: Vec<usize> = sig.iter().map(|&u| g.apply(u)).collect();
                image.sort_unstable();
                by_signature.get(image.as_slice()).copied().ok_or_else(|| {
                    internal("step group does not permute the neighbourhood classes")
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        perms.push(Permutation::from_images(images)?);
    }
    Ok(PermGroup::from_elements(finest.len(), perms))
}

/// `Γ̃_{k,i}`: elements of the block group preserving every induced
/// colouring `c[𝓑_j]`, `j ≤ i`.
fn running_stabilizer(
    block_group: &PermGroup,
    partitions: &[Partition],
    index_partitions: &[Partition],
    colours: &[Colour],
    i: usize,
) -> PermGroup {
    let mut running = block_group.clone();
    for j in 0..=i {
        let induced = induced_colouring(colours, &partitions[j]);
        // Lift c[𝓑_j] to the finest classes so each element acts on it by
        // its block permutation.
        let mut lifted = vec![Colour::Far; block_group.degree()];
        for (b, idx_block) in index_partitions[j].blocks().iter().enumerate() {
            for &f in idx_block {
                lifted[f] = induced[b];
            }
        }
        running = colouring_stabilizer(&running, &lifted);
    }
    running
}

/// Chunks of at most `⌈√Δ⌉` consecutive vertices: `min(|class|, ⌈√Δ⌉+1)`
/// chunks of balanced sizes, larger chunks first. The first chunk keeps
/// the colour, chunk `t ≥ 1` receives `t̄`, so at most `⌈√Δ⌉` barred
/// colours appear.
fn split_class(class: &[usize], chunk_size: usize) -> Vec<Vec<usize>> {
    let parts = class.len().min(chunk_size + 1);
    let (base, extra) = (class.len() / parts, class.len() % parts);
    let mut chunks = Vec::with_capacity(parts);
    let mut start = 0;
    for t in 0..parts {
        let len = base + usize::from(t < extra);
        chunks.push(class[start..start + len].to_vec());
        start += len;
    }
    chunks
}

/// One step `c_k → c_{k+1}`, given the restriction `step_group` of the
/// stabiliser of `c_k` to `B(v₀,k)` (see [`ball_group`]).
pub fn extend_colouring(
    graph: &Graph,
    current: &Colouring,
    step_group: &PermGroup,
    options: &RunOptions,
) -> Result<StepTrace, ColouringError> {
    let root = current.root();
    let k = current.radius();
    let dist = graph.distances_from(root);
    let sphere = |r: usize| -> Vec<usize> {
        (0..graph.vertex_count())
            .filter(|&v| dist[v] == r)
            .collect()
    };
    let current_sphere = sphere(k);
    let next_sphere = sphere(k + 1);
    let chunk_size = ceil_sqrt(graph.max_degree().max(1));

    let orbit_list = orbits(step_group, &current_sphere)?;
    let partitions = neighbourhood_refinement(graph, &next_sphere, &orbit_list);
    let n = orbit_list.len();
    let finest = &partitions[n];

    let block_group = induced_block_group(graph, step_group, &current_sphere, finest)?;
    let finest_of = finest.block_index(graph.vertex_count());
    let index_partitions: Vec<Partition> = partitions
        .iter()
        .map(|p| {
            Partition::new(
                p.blocks()
                    .iter()
                    .map(|b| {
                        let mut idx: Vec<usize> =
                            b.iter().map(|&v| finest_of[v].unwrap()).collect();
                        idx.sort_unstable();
                        idx.dedup();
                        idx
                    })
                    .collect(),
            )
        })
        .collect();

    let mut colours = current.colours().to_vec();
    for &v in &next_sphere {
        colours[v] = Colour::Numeric(1);
    }
    let snapshot = |colours: &[Colour]| next_sphere.iter().map(|&v| colours[v]).collect::<Vec<_>>();
    let mut sphere_colours = vec![snapshot(&colours)];
    let mut running = Vec::with_capacity(n + 1);
    let mut size_bounds = Vec::with_capacity(n);
    let mut fixing_sets = Vec::with_capacity(n);

    for i in 0..n {
        let tilde = running_stabilizer(&block_group, &partitions, &index_partitions, &colours, i);
        let bound = options
            .bound_mode
            .fixing_set_bound(orbit_list.blocks()[i].len());
        let mut chosen = minimal_fixing_set(&tilde, &index_partitions[i + 1], bound)?;
        // Offsets go to members in order of their minimum vertex.
        chosen.sort_unstable();
        for (j, &b) in chosen.iter().enumerate() {
            for &v in &partitions[i + 1].blocks()[b] {
                colours[v] = colours[v].offset(j as u32 + 1).ok_or_else(|| {
                    internal(format!("non-numeric colour on the active sphere at {v}"))
                })?;
            }
        }
        running.push(tilde);
        size_bounds.push(bound);
        fixing_sets.push(chosen);
        sphere_colours.push(snapshot(&colours));
    }
    running.push(running_stabilizer(
        &block_group,
        &partitions,
        &index_partitions,
        &colours,
        n,
    ));

    let mut split = Vec::with_capacity(finest.len());
    for class in finest.blocks() {
        let chunks = split_class(class, chunk_size);
        for (t, chunk) in chunks.iter().enumerate().skip(1) {
            for &v in chunk {
                colours[v] = Colour::Barred(t as u32);
            }
        }
        split.push(SplitClass {
            class: class.clone(),
            chunks,
        });
    }

    Ok(StepTrace {
        k,
        current_sphere,
        next_sphere,
        orbits: orbit_list,
        partitions,
        block_group,
        running,
        size_bounds,
        fixing_sets,
        sphere_colours,
        split,
        colouring: Colouring::new(root, k + 1, colours),
    })
}

/// Runs the construction from `root` out to `horizon` (default: the
/// eccentricity of the root).
pub fn run(
    graph: &Graph,
    root: usize,
    horizon: Option<usize>,
    options: &RunOptions,
) -> Result<RunOutcome, ColouringError> {
    let mut colouring = initial_colouring(graph, root)?;
    let eccentricity = graph.eccentricity(root);
    let horizon = horizon.unwrap_or(eccentricity);
    if horizon > eccentricity {
        return Err(ColouringError::HorizonTooLarge {
            horizon,
            eccentricity,
        });
    }
    let initial = colouring.clone();
    let mut groups = vec![ball_group(graph, &colouring, options.cap)?];
    let mut steps = Vec::with_capacity(horizon);
    for _ in 0..horizon {
        let step = extend_colouring(graph, &colouring, groups.last().unwrap(), options)?;
        colouring = step.colouring.clone();
        groups.push(ball_group(graph, &colouring, options.cap)?);
        steps.push(step);
    }
    Ok(RunOutcome {
        colouring,
        trace: RefinementTrace {
            root,
            horizon,
            max_degree: graph.max_degree(),
            chunk_size: ceil_sqrt(graph.max_degree().max(1)),
            bound_mode: options.bound_mode,
            initial,
            groups,
            steps,
        },
    })
}
