//! Exhaustive automorphism search by individualisation and colour
//! refinement.
//!
//! Two labellings are carried in lockstep: the "left" one individualises
//! the lowest vertex of the first non-singleton cell, the "right" one tries
//! every vertex of the matching cell. Both are refined with the same
//! canonical relabelling (ranks of sorted neighbourhood signatures), so a
//! branch survives only while the two signature multisets agree. A
//! discrete left labelling then determines a candidate map, which is
//! verified edge by edge.
//!
//! With a support set, only the restriction of each automorphism to the
//! support is collected: branching is confined to support cells, and once
//! the support is discrete a single extension to the whole graph is
//! searched for.

use super::{PermGroup, Permutation, SymmetryError, DEFAULT_GROUP_CAP};
use crate::graph::Graph;

/// Builder for colour-preserving automorphism searches.
#[derive(Debug, Clone)]
pub struct AutomorphismSearch<'g> {
    graph: &'g Graph,
    cells: Vec<usize>,
    support: Option<Vec<bool>>,
    cap: usize,
    error: Option<SymmetryError>,
}

impl<'g> AutomorphismSearch<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        AutomorphismSearch {
            graph,
            cells: vec![0; graph.vertex_count()],
            support: None,
            cap: DEFAULT_GROUP_CAP,
            error: None,
        }
    }

    /// Restrict to automorphisms with `colours[γv] == colours[v]`.
    pub fn colouring<C: Ord>(mut self, colours: &[C]) -> Self {
        if colours.len() != self.graph.vertex_count() {
            self.error = Some(SymmetryError::ColouringLength {
                expected: self.graph.vertex_count(),
                found: colours.len(),
            });
            return self;
        }
        let mut sorted: Vec<&C> = colours.iter().collect();
        sorted.sort();
        sorted.dedup();
        self.cells = colours
            .iter()
            .map(|c| sorted.binary_search(&c).unwrap())
            .collect();
        self
    }

    /// Collect restrictions to `support` (extended by the identity) instead
    /// of whole automorphisms. Only automorphisms that preserve the support
    /// setwise are considered.
    pub fn support(mut self, support: &[usize]) -> Self {
        let mut mask = vec![false; self.graph.vertex_count()];
        for &v in support {
            if v >= mask.len() {
                self.error = Some(SymmetryError::OutOfDomain {
                    vertex: v,
                    degree: self.graph.vertex_count(),
                });
                return self;
            }
            mask[v] = true;
        }
        self.support = Some(mask);
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// All automorphisms (or their restrictions to the support).
    pub fn group(&self) -> Result<PermGroup, SymmetryError> {
        let mut found = Vec::new();
        self.run(&mut found, false)?;
        Ok(PermGroup::from_elements(self.graph.vertex_count(), found))
    }

    /// Some non-identity element, if one exists.
    pub fn find_nontrivial(&self) -> Result<Option<Permutation>, SymmetryError> {
        let mut found = Vec::new();
        self.run(&mut found, true)?;
        Ok(found.into_iter().find(|p| !p.is_identity()))
    }

    fn run(
        &self,
        found: &mut Vec<Permutation>,
        stop_at_nontrivial: bool,
    ) -> Result<(), SymmetryError> {
        if let Some(err) = &self.error {
            return Err(err.clone());
        }
        let n = self.graph.vertex_count();
        if n == 0 {
            found.push(Permutation::identity(0));
            return Ok(());
        }
        let support = self.support.clone().unwrap_or_else(|| vec![true; n]);
        // Support membership is part of the initial cell so cells never mix.
        let initial: Vec<usize> = self
            .cells
            .iter()
            .zip(&support)
            .map(|(&c, &s)| 2 * c + usize::from(s))
            .collect();
        let engine = Engine {
            graph: self.graph,
            initial: &initial,
            support: &support,
        };
        let mut left = initial.clone();
        let mut right = initial.clone();
        if !engine.refine(&mut left, &mut right) {
            unreachable!("a labelling is always compatible with itself");
        }
        let mut ctx = Collect {
            found,
            cap: self.cap,
            stop_at_nontrivial,
            done: false,
        };
        engine.collect(&left, &right, &mut ctx)
    }
}

/// Full automorphism group of an uncoloured graph.
pub fn automorphism_group(graph: &Graph, cap: usize) -> Result<PermGroup, SymmetryError> {
    AutomorphismSearch::new(graph).cap(cap).group()
}

struct Collect<'a> {
    found: &'a mut Vec<Permutation>,
    cap: usize,
    stop_at_nontrivial: bool,
    done: bool,
}

struct Engine<'a> {
    graph: &'a Graph,
    initial: &'a [usize],
    support: &'a [bool],
}

impl Engine<'_> {
    fn n(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Refines both labellings to a stable colouring. Returns false as soon
    /// as their signature multisets differ.
    fn refine(&self, left: &mut [usize], right: &mut [usize]) -> bool {
        let mut classes = count_classes(left);
        loop {
            let sig_left = self.signatures(left);
            let sig_right = self.signatures(right);
            let mut sorted_left = sig_left.clone();
            sorted_left.sort_unstable();
            let mut sorted_right = sig_right.clone();
            sorted_right.sort_unstable();
            if sorted_left != sorted_right {
                return false;
            }
            sorted_left.dedup();
            for (label, sig) in left.iter_mut().zip(&sig_left) {
                *label = sorted_left.binary_search(sig).unwrap();
            }
            for (label, sig) in right.iter_mut().zip(&sig_right) {
                *label = sorted_left.binary_search(sig).unwrap();
            }
            let next = sorted_left.len();
            if next == classes {
                return true;
            }
            classes = next;
        }
    }

    fn signatures(&self, labels: &[usize]) -> Vec<Vec<usize>> {
        (0..self.n())
            .map(|v| {
                let mut sig = Vec::with_capacity(self.graph.degree(v) + 1);
                sig.extend(self.graph.neighbours(v).iter().map(|&u| labels[u]));
                sig.sort_unstable();
                sig.insert(0, labels[v]);
                sig
            })
            .collect()
    }

    /// Lowest label among non-singleton cells, optionally only support
    /// cells, with the lowest vertex of that cell.
    fn target_cell(&self, labels: &[usize], support_only: bool) -> Option<(usize, usize)> {
        let mut size = vec![0usize; self.n()];
        for &l in labels {
            size[l] += 1;
        }
        let label = (0..self.n())
            .filter(|&v| !support_only || self.support[v])
            .map(|v| labels[v])
            .filter(|&l| size[l] > 1)
            .min()?;
        let v = (0..self.n()).find(|&v| labels[v] == label).unwrap();
        Some((label, v))
    }

    fn branch(
        &self,
        left: &[usize],
        right: &[usize],
        v: usize,
        w: usize,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut l = left.to_vec();
        let mut r = right.to_vec();
        // Labels are ranks below n, so n is fresh on both sides.
        l[v] = self.n();
        r[w] = self.n();
        self.refine(&mut l, &mut r).then_some((l, r))
    }

    fn collect(
        &self,
        left: &[usize],
        right: &[usize],
        ctx: &mut Collect<'_>,
    ) -> Result<(), SymmetryError> {
        match self.target_cell(left, true) {
            None => {
                // Support discrete: the restriction is determined.
                if self.extends(left, right) {
                    let mut images: Vec<u32> = (0..self.n() as u32).collect();
                    let mut by_label = vec![usize::MAX; self.n()];
                    for (w, &l) in right.iter().enumerate() {
                        by_label[l] = w;
                    }
                    for v in (0..self.n()).filter(|&v| self.support[v]) {
                        images[v] = by_label[left[v]] as u32;
                    }
                    let p = Permutation::from_images_unchecked(images);
                    if ctx.found.len() >= ctx.cap {
                        return Err(SymmetryError::CapExceeded { cap: ctx.cap });
                    }
                    if ctx.stop_at_nontrivial && !p.is_identity() {
                        ctx.done = true;
                    }
                    ctx.found.push(p);
                }
                Ok(())
            }
            Some((label, v)) => {
                for w in (0..self.n()).filter(|&w| right[w] == label) {
                    if let Some((l, r)) = self.branch(left, right, v, w) {
                        self.collect(&l, &r, ctx)?;
                        if ctx.done {
                            break;
                        }
                    }
                }
                Ok(())
            }
        }
    }

    /// Whether the partial correspondence extends to an automorphism.
    fn extends(&self, left: &[usize], right: &[usize]) -> bool {
        match self.target_cell(left, false) {
            None => self.is_automorphism(left, right),
            Some((label, v)) => (0..self.n()).filter(|&w| right[w] == label).any(|w| {
                self.branch(left, right, v, w)
                    .is_some_and(|(l, r)| self.extends(&l, &r))
            }),
        }
    }

    fn is_automorphism(&self, left: &[usize], right: &[usize]) -> bool {
        let mut by_label = vec![usize::MAX; self.n()];
        for (w, &l) in right.iter().enumerate() {
            by_label[l] = w;
        }
        let map: Vec<usize> = left.iter().map(|&l| by_label[l]).collect();
        (0..self.n()).all(|v| {
            let w = map[v];
            self.initial[v] == self.initial[w]
                && self.graph.degree(v) == self.graph.degree(w)
                && self
                    .graph
                    .neighbours(v)
                    .iter()
                    .all(|&u| self.graph.has_edge(w, map[u]))
        })
    }
}

fn count_classes(labels: &[usize]) -> usize {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}
