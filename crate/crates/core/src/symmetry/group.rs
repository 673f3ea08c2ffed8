use std::collections::BTreeSet;
use std::fmt;

use super::{Permutation, SymmetryError};
use crate::partition::Partition;

/// Default bound on the number of stored group elements.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A permutation group stored as its full, sorted element list.
///
/// Equality compares degree and elements; generators are not part of it.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Option<Vec<Permutation>>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
            generators: None,
        }
    }

    /// Wraps an element set that is already known to be a group.
    /// Closure is the caller's responsibility; see [`PermGroup::is_closed`].
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> PermGroup {
        debug_assert!(elements.iter().all(|p| p.degree() == degree));
        elements.sort_unstable();
        elements.dedup();
        PermGroup {
            degree,
            elements,
            generators: None,
        }
    }

    /// The closure of `generators`, failing once it exceeds `cap` elements.
    pub fn generate(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<PermGroup, SymmetryError> {
        let identity = Permutation::identity(degree);
        let mut seen: BTreeSet<Permutation> = BTreeSet::from([identity.clone()]);
        let mut frontier = vec![identity];
        while let Some(x) = frontier.pop() {
            for g in &generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(SymmetryError::CapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    frontier.push(y);
                }
            }
        }
        Ok(PermGroup {
            degree,
            elements: seen.into_iter().collect(),
            generators: Some(generators),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> Option<&[Permutation]> {
        self.generators.as_deref()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Direct check of the group axioms on the stored element list.
    pub fn is_closed(&self) -> bool {
        let has_identity = self.elements.iter().any(Permutation::is_identity);
        has_identity
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self.elements.iter().all(|b| self.contains(&a.compose(b)))
            })
    }

    /// Elements satisfying `keep`. The predicate must define a subgroup.
    pub fn filter(&self, keep: impl Fn(&Permutation) -> bool) -> PermGroup {
        PermGroup {
            degree: self.degree,
            elements: self.elements.iter().filter(|p| keep(p)).cloned().collect(),
            generators: None,
        }
    }
}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.elements {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Orbits of `group` on `domain`, which must be setwise invariant.
pub fn orbits(group: &PermGroup, domain: &[usize]) -> Result<Partition, SymmetryError> {
    let mut in_domain = vec![false; group.degree()];
    for &v in domain {
        if v >= group.degree() {
            return Err(SymmetryError::OutOfDomain {
                vertex: v,
                degree: group.degree(),
            });
        }
        in_domain[v] = true;
    }
    let mut assigned = vec![false; group.degree()];
    let mut blocks = Vec::new();
    let mut sorted = domain.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &v in &sorted {
        if assigned[v] {
            continue;
        }
        let mut block = Vec::new();
        for g in group.elements() {
            let w = g.apply(v);
            if !in_domain[w] {
                return Err(SymmetryError::NotInvariant {
                    vertex: v,
                    image: w,
                });
            }
            if !assigned[w] {
                assigned[w] = true;
                block.push(w);
            }
        }
        blocks.push(block);
    }
    Ok(Partition::new(blocks))
}

/// `Γ_(S)`: elements fixing every target.
pub fn pointwise_stabilizer(group: &PermGroup, targets: &[usize]) -> PermGroup {
    group.filter(|g| targets.iter().all(|&v| g.fixes(v)))
}

/// Elements mapping every block of `partition` onto itself.
pub fn block_stabilizer(group: &PermGroup, partition: &Partition) -> PermGroup {
    group.filter(|g| partition.blocks().iter().all(|b| g.fixes_setwise(b)))
}

/// `Γ_c`: elements with `c(γv) = c(v)` for every `v`.
pub fn colouring_stabilizer<C: PartialEq>(group: &PermGroup, colouring: &[C]) -> PermGroup {
    assert_eq!(
        colouring.len(),
        group.degree(),
        "colouring must be total on the domain"
    );
    group.filter(|g| (0..colouring.len()).all(|v| colouring[g.apply(v)] == colouring[v]))
}
