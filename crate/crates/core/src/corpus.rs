//! Exhaustive corpus of connected graphs up to isomorphism.
//!
//! Every connected graph on `n` vertices has a vertex whose removal leaves
//! a connected graph, so extending each connected graph on `n − 1` vertices
//! by a new vertex with every nonempty neighbourhood reaches all of them.
//! Duplicates are removed with an exact canonical form.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex count [`connected_graphs`] accepts.
pub const MAX_CORPUS_VERTICES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("corpus generation supports at most {MAX_CORPUS_VERTICES} vertices, got {0}")]
pub struct CorpusTooLarge(pub usize);

type Adjacency = Vec<u16>;

/// Upper-triangle adjacency bits under the labelling `order` (position →
/// vertex).
fn code(adj: &Adjacency, order: &[usize]) -> u64 {
    let n = order.len();
    let mut bits = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            bits <<= 1;
            if adj[order[i]] >> order[j] & 1 == 1 {
                bits |= 1;
            }
        }
    }
    bits
}

/// Minimal code over all labellings that list vertices by ascending
/// invariant. The invariant is isomorphism-invariant, so the result is a
/// complete invariant.
fn canonical(adj: &Adjacency) -> (u64, Vec<usize>) {
    let n = adj.len();
    let degree = |v: usize| adj[v].count_ones();
    let invariant = |v: usize| {
        let mut nbr: Vec<u32> = (0..n)
            .filter(|&u| adj[v] >> u & 1 == 1)
            .map(degree)
            .collect();
        nbr.sort_unstable();
        (degree(v), nbr)
    };
    let mut classes: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        classes.entry(invariant(v)).or_default().push(v);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut order = Vec::with_capacity(n);
    fn walk(
        adj: &Adjacency,
        classes: &[Vec<usize>],
        class: usize,
        used: &mut Vec<bool>,
        order: &mut Vec<usize>,
        best: &mut Option<(u64, Vec<usize>)>,
    ) {
        if class == classes.len() {
            let c = code(adj, order);
            if best.as_ref().is_none_or(|(b, _)| c < *b) {
                *best = Some((c, order.clone()));
            }
            return;
        }
        let members = &classes[class];
        let placed = order.len() - classes[..class].iter().map(Vec::len).sum::<usize>();
        if placed == members.len() {
            walk(adj, classes, class + 1, used, order, best);
            return;
        }
        for &v in members {
            if !used[v] {
                used[v] = true;
                order.push(v);
                walk(adj, classes, class, used, order, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    walk(adj, &classes, 0, &mut vec![false; n], &mut order, &mut best);
    best.expect("at least one labelling")
}

fn relabel(adj: &Adjacency, order: &[usize]) -> Adjacency {
    let n = adj.len();
    let mut position = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let mut out = vec![0u16; n];
    for (u, &row) in adj.iter().enumerate() {
        for v in 0..n {
            if row >> v & 1 == 1 {
                out[position[u]] |= 1 << position[v];
            }
        }
    }
    out
}

fn to_graph(adj: &Adjacency) -> Graph {
    let n = adj.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| adj[u] >> v & 1 == 1)
                .map(move |v| (u, v))
        })
        .collect();
    Graph::new(n, &edges).expect("corpus graphs are connected and simple")
}

/// Canonically labelled connected graphs on exactly `n` vertices, one per
/// isomorphism class, ordered by edge count and then canonical code.
fn layer(previous: &[Adjacency], n: usize) -> Vec<Adjacency> {
    let mut seen: BTreeMap<(u32, u64), Adjacency> = BTreeMap::new();
    for base in previous {
        for mask in 1u16..(1 << (n - 1)) {
            let mut adj = base.clone();
            adj.push(mask);
            for (u, row) in adj.iter_mut().enumerate().take(n - 1) {
                if mask >> u & 1 == 1 {
                    *row |= 1 << (n - 1);
                }
            }
            let (c, order) = canonical(&adj);
            let edges = adj.iter().map(|r| r.count_ones()).sum::<u32>() / 2;
            seen.entry((edges, c))
                .or_insert_with(|| relabel(&adj, &order));
        }
    }
    seen.into_values().collect()
}

/// All connected graphs with `1..=max_vertices` vertices up to isomorphism,
/// by vertex count, then edge count, then canonical code.
pub fn connected_graphs(max_vertices: usize) -> Result<Vec<Graph>, CorpusTooLarge> {
    if max_vertices > MAX_CORPUS_VERTICES {
        return Err(CorpusTooLarge(max_vertices));
    }
    let mut out = Vec::new();
    let mut current: Vec<Adjacency> = vec![vec![0]];
    for n in 1..=max_vertices {
        if n > 1 {
            current = layer(&current, n);
        }
        out.extend(current.iter().map(to_graph));
    }
    Ok(out)
}
