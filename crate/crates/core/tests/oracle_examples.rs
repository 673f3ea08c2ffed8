mod common;

use asym_core::corpus::connected_graphs;
use asym_core::graph::{FamilySpec, Graph};
use asym_core::oracle::{
    distinguishing_number, has_asymmetric_colouring, interior_support_check, is_asymmetric,
    is_asymmetric_brute_force, motion, motion_lemma_check, OracleError,
};
use proptest::prelude::*;

fn family(spec: FamilySpec) -> Graph {
    Graph::family_graph(spec).unwrap()
}

#[test]
fn distinguishing_numbers_of_small_families() {
    let cases = [
        (FamilySpec::Cycle { n: 5 }, 3),
        (FamilySpec::Cycle { n: 6 }, 2),
        (FamilySpec::Complete { n: 4 }, 4),
        (FamilySpec::CompleteBipartite { m: 3, n: 3 }, 4),
        (FamilySpec::Path { n: 4 }, 2),
        (FamilySpec::Cycle { n: 4 }, 3),
    ];
    for (spec, expected) in cases {
        let g = family(spec);
        let d = distinguishing_number(&g, 6).unwrap();
        assert_eq!(d.number, expected, "{spec}");
        assert!(is_asymmetric(&g, &d.colouring).unwrap());
        assert!(d.colouring.iter().all(|&c| c < expected));
        assert!(
            !has_asymmetric_colouring(&g, expected - 1).unwrap(),
            "{spec}"
        );
    }
}

#[test]
fn motion_of_small_families() {
    assert_eq!(motion(&family(FamilySpec::Cycle { n: 5 })), Ok(4));
    assert_eq!(motion(&family(FamilySpec::Cycle { n: 6 })), Ok(4));
    assert_eq!(motion(&family(FamilySpec::Complete { n: 4 })), Ok(2));
    assert_eq!(motion(&family(FamilySpec::Path { n: 5 })), Ok(4));
    assert_eq!(motion(&family(FamilySpec::Path { n: 6 })), Ok(6));
    // Smallest asymmetric tree: a spider with legs 1, 2, 3.
    let spider = Graph::new(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
    assert_eq!(motion(&spider), Err(OracleError::Asymmetric));
}

#[test]
fn interior_support_examples() {
    let t33 = family(FamilySpec::Tree {
        degree: 3,
        radius: 3,
    });
    assert_eq!(interior_support_check(&t33, 0, 3), Ok(true));
    // A path 0-1-2 with twin leaves 3, 4 on vertex 1: swapping them stays
    // inside B(0, 2).
    let twins = Graph::new(6, &[(0, 1), (1, 2), (2, 5), (1, 3), (1, 4)]).unwrap();
    assert_eq!(interior_support_check(&twins, 0, 3), Ok(false));
    assert_eq!(interior_support_check(&twins, 0, 1), Ok(true));
    let spider = Graph::new(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
    assert_eq!(interior_support_check(&spider, 0, 3), Ok(true));
}

#[test]
fn motion_lemma_holds_on_trees_and_paths() {
    for spec in [
        FamilySpec::Path { n: 5 },
        FamilySpec::Path { n: 8 },
        FamilySpec::Grid { w: 2, h: 3 },
    ] {
        let g = family(spec);
        let m = motion_lemma_check(&g).unwrap();
        if m.hypothesis {
            assert!(
                is_asymmetric(&g, m.colouring.as_ref().unwrap()).unwrap(),
                "{spec}"
            );
        }
    }
}

#[test]
fn every_six_vertex_graph_agrees_with_bijection_filtering() {
    for g in connected_graphs(6).unwrap() {
        for mask in [0u32, 1, 5, 0b10110, 0b111000] {
            let colours: Vec<u32> = (0..g.vertex_count()).map(|v| mask >> v & 1).collect();
            assert_eq!(
                is_asymmetric(&g, &colours).unwrap(),
                is_asymmetric_brute_force(&g, &colours).unwrap(),
                "{}",
                g.to_text()
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn distinguishing_colourings_are_minimal(g in common::connected_graph(7)) {
        let d = distinguishing_number(&g, 7).unwrap();
        prop_assert!(is_asymmetric_brute_force(&g, &d.colouring).unwrap());
        if d.number > 1 {
            prop_assert!(!has_asymmetric_colouring(&g, d.number - 1).unwrap());
        }
        prop_assert!(d.number <= g.max_degree() + 1);
    }

    #[test]
    fn motion_is_at_most_the_order(g in common::connected_graph(8)) {
        match motion(&g) {
            Ok(m) => prop_assert!((2..=g.vertex_count()).contains(&m)),
            Err(e) => prop_assert_eq!(e, OracleError::Asymmetric),
        }
    }
}
