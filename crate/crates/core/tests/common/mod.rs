#![allow(dead_code)]

use asym_core::graph::Graph;
use proptest::prelude::*;

/// Random connected graphs: a random spanning tree plus random chords.
pub fn connected_graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        let chords = proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2);
        (parents, chords).prop_map(move |(parents, chords)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if chords[bit] && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

/// Sparse variant: at most a few chords, so degrees and groups stay small.
pub fn sparse_graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (2..=max_vertices).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        let chords = proptest::collection::vec((0..n, 0..n), 0..3);
        (parents, chords).prop_map(move |(parents, chords)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            for (u, v) in chords {
                let e = (u.min(v), u.max(v));
                if u != v && !edges.contains(&e) && !edges.contains(&(e.1, e.0)) {
                    edges.push(e);
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}
