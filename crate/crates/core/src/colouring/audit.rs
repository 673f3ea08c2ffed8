//! Re-verification of a finished run against every invariant the
//! construction promises, recomputed from the recorded trace.

use std::fmt;

use super::construction::RunOutcome;
use super::{ceil_sqrt, colour_bound, induced_colouring, Colour};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::symmetry::{chain_length_bound, orbits, PermGroup, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    /// (a) only the root has colour `0`.
    RootColour,
    /// (b) `∞` exactly beyond the radius; barred colours only inside it.
    FarColour,
    /// (c) `c_{k+1}` agrees with `c_k` on `B(v₀,k)`.
    Restriction,
    /// (d), first part: the new stabiliser fixes `B(v₀,k)` pointwise.
    /// Only checked when the caller certifies interior rigidity.
    PointwiseFixing,
    /// (d), second part: orbits in `B(v₀,k)` have at most `⌈√Δ⌉` points.
    OrbitSize,
    /// `Γ_{k+1} ⊆ Γ_k` on `B(v₀,k)`.
    Monotone,
    /// `𝓑_{i+1}` refines `𝓑_i`.
    Nesting,
    /// (i) induced colourings of earlier partitions survive recolouring.
    InducedUnchanged,
    /// (ii) every `𝓑_i` block is monochromatic under `c_{k,i}`.
    Monochromatic,
    /// (iii) `Γ̃_{k,i}` fixes every `𝓑_i` block setwise.
    RunningFixesBlocks,
    /// The recorded `Γ̃_{k,i}` matches an independent recomputation.
    RunningStabilizer,
    /// `𝒮` fixes as much as all of `𝓑_{i+1}` and is inclusion-minimal.
    FixingSet,
    /// `|𝒮| ≤ ⌈3⌈√Δ⌉/2⌉`, the step bound, and the chain-length bound.
    FixingSetSize,
    /// `|S| ≤ |B′|/2` for each chosen `S` inside `B′ ∈ 𝓑_i`.
    Halving,
    /// `c_{k,i+1}(v) = c_{k,i}(v) + j` on `S_j`, unchanged elsewhere.
    RecolourRule,
    /// A vertex is recoloured at most `1 + log₂Δ` times per step.
    RecolourCount,
    /// `𝓑_n` classes have at most `Δ` vertices; each `𝓑_i`, `i ≥ 1`, has at
    /// most one larger class.
    ClassSizes,
    /// Final split: chunks of at most `⌈√Δ⌉` vertices, first chunk keeps
    /// its colour, the others receive distinct barred colours `≤ ⌈√Δ⌉`.
    Split,
    /// Distinct colours of the result stay within the total bound.
    ColourCount,
    /// The largest numeric colour stays within the numeric bound.
    NumericBound,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::RootColour => "a_root_colour",
            Property::FarColour => "b_far_colour",
            Property::Restriction => "c_restriction",
            Property::PointwiseFixing => "d1_pointwise_fixing",
            Property::OrbitSize => "d2_orbit_size",
            Property::Monotone => "stabiliser_monotone",
            Property::Nesting => "partition_nesting",
            Property::InducedUnchanged => "i_induced_unchanged",
            Property::Monochromatic => "ii_monochromatic",
            Property::RunningFixesBlocks => "iii_running_fixes_blocks",
            Property::RunningStabilizer => "running_stabiliser_recomputed",
            Property::FixingSet => "fixing_set_minimal",
            Property::FixingSetSize => "fixing_set_size",
            Property::Halving => "fixing_set_halving",
            Property::RecolourRule => "recolour_rule",
            Property::RecolourCount => "recolour_count",
            Property::ClassSizes => "class_sizes",
            Property::Split => "final_split",
            Property::ColourCount => "colour_count",
            Property::NumericBound => "numeric_bound",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub property: Property,
    pub checks: usize,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Audit {
    pub results: Vec<PropertyResult>,
}

impl Audit {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.violations.is_empty())
    }

    pub fn violations(&self) -> impl Iterator<Item = (Property, &str)> {
        self.results
            .iter()
            .flat_map(|r| r.violations.iter().map(move |v| (r.property, v.as_str())))
    }

    pub fn result(&self, property: Property) -> Option<&PropertyResult> {
        self.results.iter().find(|r| r.property == property)
    }

    fn check(&mut self, property: Property, ok: bool, detail: impl FnOnce() -> String) {
        let idx = match self.results.iter().position(|r| r.property == property) {
            Some(idx) => idx,
            None => {
                self.results.push(PropertyResult {
                    property,
                    checks: 0,
                    violations: Vec::new(),
                });
                self.results.len() - 1
            }
        };
        let entry = &mut self.results[idx];
        entry.checks += 1;
        if !ok {
            entry.violations.push(detail());
        }
    }
}

/// Restriction of `p` to `domain`, identity elsewhere.
fn restrict(p: &Permutation, domain: &[bool]) -> Permutation {
    let images = (0..p.degree())
        .map(|v| if domain[v] { p.apply(v) } else { v })
        .collect();
    Permutation::from_images(images).expect("restriction to an invariant set is a permutation")
}

/// Elements of `group` (acting on finest-class indices) fixing each listed
/// block of `blocks` setwise.
fn fixing_count(group: &PermGroup, blocks: &Partition, which: &[usize]) -> usize {
    group
        .elements()
        .iter()
        .filter(|g| which.iter().all(|&b| g.fixes_setwise(&blocks.blocks()[b])))
        .count()
}

/// Checks every recorded step of `outcome`.
///
/// `claim_pointwise` enables the first part of (d): set it only when no
/// nontrivial automorphism is supported inside `B(v₀,K−1)` (see
/// [`crate::oracle::interior_support_check`]).
pub fn audit(graph: &Graph, outcome: &RunOutcome, claim_pointwise: bool) -> Audit {
    let trace = &outcome.trace;
    let mut audit = Audit::default();
    let delta = graph.max_degree().max(1);
    let s = ceil_sqrt(delta);
    let bound = colour_bound(delta);
    let dist = graph.distances_from(trace.root);
    let in_ball = |r: usize| -> Vec<bool> { dist.iter().map(|&d| d <= r).collect() };
    let ball = |r: usize| -> Vec<usize> {
        (0..graph.vertex_count())
            .filter(|&v| dist[v] <= r)
            .collect()
    };
    let recolour_cap = bound.recolour_visits + 1e-9;
    let fixing_cap = (3 * s).div_ceil(2);

    let mut colourings = vec![&trace.initial];
    colourings.extend(trace.steps.iter().map(|st| &st.colouring));

    for (k, c) in colourings.iter().enumerate() {
        let dist_ok = c.check_root_and_far(graph);
        let bad = dist_ok.err();
        let root_bad = bad.is_some_and(|v| (c.colour(v) == Colour::Root) != (v == trace.root));
        audit.check(Property::RootColour, !root_bad, || {
            format!("k={k}: vertex {}", bad.unwrap())
        });
        audit.check(Property::FarColour, bad.is_none() || root_bad, || {
            format!(
                "k={k}: vertex {} has colour {}",
                bad.unwrap(),
                c.colour(bad.unwrap())
            )
        });

        let group = &trace.groups[k];
        match orbits(group, &ball(k)) {
            Ok(orbit_list) => {
                let largest = orbit_list.blocks().iter().map(Vec::len).max().unwrap_or(0);
                audit.check(Property::OrbitSize, largest <= s, || {
                    format!("k={k}: orbit of size {largest} > {s}")
                });
            }
            Err(e) => audit.check(Property::OrbitSize, false, || format!("k={k}: {e}")),
        }
    }

    for step in &trace.steps {
        let k = step.k;
        let before = colourings[k];
        let after = &step.colouring;
        let inner_ball = in_ball(k);

        let agree = (0..graph.vertex_count())
            .filter(|&v| inner_ball[v])
            .all(|v| before.colour(v) == after.colour(v));
        audit.check(Property::Restriction, agree, || {
            format!("k={k}: colours on B(v0,{k}) changed")
        });

        let (old, new) = (&trace.groups[k], &trace.groups[k + 1]);
        let monotone = new
            .elements()
            .iter()
            .all(|p| old.contains(&restrict(p, &inner_ball)));
        audit.check(Property::Monotone, monotone, || {
            format!("k={k}: new stabiliser not inside the old")
        });
        if claim_pointwise {
            let fixes = new
                .elements()
                .iter()
                .all(|p| (0..p.degree()).all(|v| !inner_ball[v] || p.fixes(v)));
            audit.check(Property::PointwiseFixing, fixes, || {
                format!(
                    "k={k}: stabiliser of c_{} moves a vertex of B(v0,{k})",
                    k + 1
                )
            });
        }

        let n = step.orbits.len();
        for i in 0..n {
            let nested = step.partitions[i + 1].refines(&step.partitions[i]);
            audit.check(Property::Nesting, nested, || {
                format!("k={k}: B_{} does not refine B_{i}", i + 1)
            });
        }

        // Class sizes.
        let finest = &step.partitions[n];
        let largest = finest.blocks().iter().map(Vec::len).max().unwrap_or(0);
        audit.check(Property::ClassSizes, largest <= delta, || {
            format!("k={k}: class of B_n with {largest} > {delta} vertices")
        });
        for i in 1..=n {
            let big = step.partitions[i]
                .blocks()
                .iter()
                .filter(|b| b.len() > delta)
                .count();
            audit.check(Property::ClassSizes, big <= 1, || {
                format!("k={k}: B_{i} has {big} classes above {delta}")
            });
        }

        // Colourings c_{k,i} on the next sphere.
        let colours_at = |i: usize| -> Vec<Colour> {
            let mut all = vec![Colour::Far; graph.vertex_count()];
            for (pos, &v) in step.next_sphere.iter().enumerate() {
                all[v] = step.sphere_colours[i][pos];
            }
            all
        };
        for i in 0..=n {
            let ci = colours_at(i);
            let mono = step.partitions[i]
                .blocks()
                .iter()
                .all(|b| b.iter().all(|&v| ci[v] == ci[b[0]]));
            audit.check(Property::Monochromatic, mono, || {
                format!("k={k}: a block of B_{i} is not monochromatic")
            });
            if i >= 1 {
                let prev = colours_at(i - 1);
                for j in 0..i {
                    let same = induced_colouring(&ci, &step.partitions[j])
                        == induced_colouring(&prev, &step.partitions[j]);
                    audit.check(Property::InducedUnchanged, same, || {
                        format!("k={k}: c[B_{j}] changed from c_{k},{} to c_{k},{i}", i - 1)
                    });
                }
            }
        }

        // Finest-class bookkeeping for the block-level groups.
        let finest_of = finest.block_index(graph.vertex_count());
        let as_indices = |p: &Partition| -> Partition {
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
        };
        let index_partitions: Vec<Partition> = step.partitions.iter().map(as_indices).collect();

        for i in 0..=n {
            let ci = colours_at(i);
            // Recompute Γ̃_{k,i} by direct block-image comparison.
            let expected = step.block_group.filter(|g| {
                (0..=i).all(|j| {
                    let induced = induced_colouring(&ci, &step.partitions[j]);
                    let blocks = index_partitions[j].blocks();
                    let parent = index_partitions[j].block_index(finest.len());
                    blocks.iter().enumerate().all(|(b, idx)| {
                        let image = parent[g.apply(idx[0])].unwrap();
                        induced[image] == induced[b]
                    })
                })
            });
            let recorded = &step.running[i];
            audit.check(Property::RunningStabilizer, *recorded == expected, || {
                format!("k={k} i={i}: recorded running group differs from recomputation")
            });
            let fixes = recorded.elements().iter().all(|g| {
                index_partitions[i]
                    .blocks()
                    .iter()
                    .all(|b| g.fixes_setwise(b))
            });
            audit.check(Property::RunningFixesBlocks, fixes, || {
                format!("k={k} i={i}: running group moves a block of B_{i}")
            });
        }

        let mut visits = vec![0usize; graph.vertex_count()];
        for i in 0..n {
            let chosen = &step.fixing_sets[i];
            let running = &step.running[i];
            let target_blocks = &index_partitions[i + 1];
            let all: Vec<usize> = (0..target_blocks.len()).collect();
            let target = fixing_count(running, target_blocks, &all);
            audit.check(
                Property::FixingSet,
                fixing_count(running, target_blocks, chosen) == target,
                || format!("k={k} i={i}: fixing set does not reach the block stabiliser"),
            );
            for drop in 0..chosen.len() {
                let mut rest = chosen.clone();
                rest.remove(drop);
                audit.check(
                    Property::FixingSet,
                    fixing_count(running, target_blocks, &rest) > target,
                    || format!("k={k} i={i}: member {} is redundant", chosen[drop]),
                );
            }

            let orbit_size = step.orbits.blocks()[i].len();
            let len = chosen.len();
            let size_ok = len <= fixing_cap
                && len <= step.size_bounds[i]
                && len <= chain_length_bound(orbit_size.max(1));
            audit.check(Property::FixingSetSize, size_ok, || {
                format!(
                    "k={k} i={i}: |S| = {len} against caps {fixing_cap}, {}",
                    step.size_bounds[i]
                )
            });

            let coarse = &step.partitions[i];
            let coarse_of = coarse.block_index(graph.vertex_count());
            let fine = &step.partitions[i + 1];
            let mut offset = vec![0u32; graph.vertex_count()];
            for (j, &b) in chosen.iter().enumerate() {
                let member = &fine.blocks()[b];
                let parent = &coarse.blocks()[coarse_of[member[0]].unwrap()];
                audit.check(Property::Halving, 2 * member.len() <= parent.len(), || {
                    format!(
                        "k={k} i={i}: |S| = {} inside a class of {}",
                        member.len(),
                        parent.len()
                    )
                });
                for &v in member {
                    offset[v] = j as u32 + 1;
                    visits[v] += 1;
                }
            }
            let (prev, next) = (colours_at(i), colours_at(i + 1));
            let rule = step.next_sphere.iter().all(|&v| match (prev[v], next[v]) {
                (Colour::Numeric(a), Colour::Numeric(b)) => b == a + offset[v],
                _ => false,
            });
            audit.check(Property::RecolourRule, rule, || {
                format!("k={k} i={i}: colours do not follow c + j")
            });
        }
        let most = visits.iter().copied().max().unwrap_or(0);
        audit.check(Property::RecolourCount, most as f64 <= recolour_cap, || {
            format!("k={k}: a vertex was recoloured {most} times")
        });

        // Final split.
        let last = colours_at(n);
        let split_classes: Vec<&Vec<usize>> = step.split.iter().map(|c| &c.class).collect();
        let covers = split_classes.len() == finest.len()
            && split_classes
                .iter()
                .zip(finest.blocks())
                .all(|(a, b)| *a == b);
        audit.check(Property::Split, covers, || {
            format!("k={k}: split classes differ from B_n")
        });
        for class in &step.split {
            let flat: Vec<usize> = class.chunks.iter().flatten().copied().collect();
            let parts_ok =
                flat == class.class && class.chunks.iter().all(|c| !c.is_empty() && c.len() <= s);
            let colours_ok = class.chunks.iter().enumerate().all(|(t, chunk)| {
                chunk.iter().all(|&v| {
                    let want = if t == 0 {
                        last[v]
                    } else {
                        Colour::Barred(t as u32)
                    };
                    after.colour(v) == want && t <= s
                })
            });
            audit.check(Property::Split, parts_ok && colours_ok, || {
                format!("k={k}: class {:?} split as {:?}", class.class, class.chunks)
            });
        }
    }

    let used = outcome.colouring.distinct_colours();
    audit.check(
        Property::ColourCount,
        used as f64 <= bound.total + 1e-9,
        || format!("{used} colours used, bound {:.3}", bound.total),
    );
    let max_numeric = outcome.colouring.max_numeric() as u64;
    audit.check(
        Property::NumericBound,
        max_numeric <= bound.max_numeric,
        || format!("numeric colour {max_numeric} above {}", bound.max_numeric),
    );
    audit.results.sort_by_key(|r| r.property);
    audit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{run, RunOptions};
    use crate::graph::FamilySpec;

    #[test]
    fn clean_runs_pass() {
        for spec in [
            FamilySpec::Cycle { n: 5 },
            FamilySpec::Tree {
                degree: 3,
                radius: 3,
            },
            FamilySpec::Complete { n: 4 },
            FamilySpec::Grid { w: 3, h: 3 },
            FamilySpec::CompleteBipartite { m: 2, n: 3 },
        ] {
            let g = Graph::family_graph(spec).unwrap();
            let out = run(&g, 0, None, &RunOptions::default()).unwrap();
            let a = audit(&g, &out, false);
            assert!(
                a.passed(),
                "{spec}: {:?}",
                a.violations().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn tampering_is_detected() {
        let g = Graph::family_graph(FamilySpec::Tree {
            degree: 3,
            radius: 2,
        })
        .unwrap();
        let mut out = run(&g, 0, None, &RunOptions::default()).unwrap();
        let step = &mut out.trace.steps[1];
        let v = step.next_sphere[0];
        let mut colours = step.colouring.colours().to_vec();
        colours[v] = Colour::Numeric(40);
        step.colouring = crate::colouring::Colouring::new(0, 2, colours);
        let a = audit(&g, &out, false);
        assert!(!a.passed());
        assert!(!a.result(Property::Split).unwrap().violations.is_empty());
    }
}
