mod common;

use asym_core::graph::{FamilySpec, Graph, GraphError};
use proptest::prelude::*;

proptest! {
    #[test]
    fn text_round_trip(g in common::connected_graph(9)) {
        let back: Graph = g.to_text().parse().unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn spheres_partition_the_vertex_set(g in common::connected_graph(9), root_seed in 0usize..100) {
        let root = root_seed % g.vertex_count();
        let mut seen = vec![0; g.vertex_count()];
        for k in 0..=g.eccentricity(root) {
            let sphere = g.sphere(root, k);
            prop_assert!(!sphere.is_empty());
            for &v in &sphere {
                seen[v] += 1;
            }
            prop_assert_eq!(g.ball(root, k).len(), (0..=k).map(|j| g.sphere(root, j).len()).sum::<usize>());
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn degree_sum_is_twice_the_edge_count(g in common::connected_graph(9)) {
        let sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }
}

#[test]
fn tree_sphere_sizes() {
    for d in 2..=5 {
        for radius in 1..=4 {
            let t = Graph::family_graph(FamilySpec::Tree { degree: d, radius }).unwrap();
            assert_eq!(t.sphere(0, 0), vec![0]);
            for k in 1..=radius {
                assert_eq!(
                    t.sphere(0, k).len(),
                    d * (d - 1).pow(k as u32 - 1),
                    "tree({d},{radius}) k={k}"
                );
            }
            assert_eq!(t.eccentricity(0), radius);
            assert_eq!(t.max_degree(), d);
        }
    }
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(matches!(
        "3\n0 1\n".parse::<Graph>(),
        Err(GraphError::Disconnected {
            reached: 2,
            vertex_count: 3
        })
    ));
    assert!(matches!(
        "2\n0 0\n".parse::<Graph>(),
        Err(GraphError::SelfLoop { vertex: 0 })
    ));
    assert!(matches!(
        "2\n0 1\n1 0\n".parse::<Graph>(),
        Err(GraphError::DuplicateEdge { u: 0, v: 1 })
    ));
    assert!(matches!(
        "2\n0 5\n".parse::<Graph>(),
        Err(GraphError::VertexOutOfRange { vertex: 5, .. })
    ));
    assert!(matches!(
        "2\n0 x\n".parse::<Graph>(),
        Err(GraphError::Syntax { line: 2, .. })
    ));
    assert!(matches!(
        "# nothing\n".parse::<Graph>(),
        Err(GraphError::Syntax { .. })
    ));
    assert!(Graph::family_graph(FamilySpec::Tree {
        degree: 1,
        radius: 2
    })
    .is_err());
}

#[test]
fn corpus_counts_match_the_known_sequence() {
    let all = asym_core::corpus::connected_graphs(7).unwrap();
    let counts: Vec<usize> = (1..=7)
        .map(|n| all.iter().filter(|g| g.vertex_count() == n).count())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
}
