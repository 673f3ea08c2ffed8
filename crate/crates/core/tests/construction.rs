use asym_core::colouring::{audit, colour_bound, run, Colour, Property, RunOptions};
use asym_core::corpus::connected_graphs;
use asym_core::graph::{FamilySpec, Graph};
use asym_core::oracle::{interior_support_check, is_asymmetric, is_asymmetric_brute_force};
use asym_core::symmetry::BoundMode;

fn family(spec: FamilySpec) -> Graph {
    Graph::family_graph(spec).unwrap()
}

#[test]
fn every_root_of_every_six_vertex_graph_passes_the_audit() {
    for g in connected_graphs(6).unwrap() {
        for root in 0..g.vertex_count() {
            let out = run(&g, root, None, &RunOptions::default()).unwrap();
            let report = audit(&g, &out, false);
            assert!(
                report.passed(),
                "{} root {root}: {:?}",
                g.to_text(),
                report.violations().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn elementary_bound_mode_also_passes() {
    let options = RunOptions {
        bound_mode: BoundMode::Elementary,
        ..RunOptions::default()
    };
    for g in connected_graphs(5).unwrap() {
        let out = run(&g, 0, None, &options).unwrap();
        assert!(audit(&g, &out, false).passed(), "{}", g.to_text());
    }
}

#[test]
fn cycle_of_five_is_made_asymmetric() {
    let c5 = family(FamilySpec::Cycle { n: 5 });
    let out = run(&c5, 0, None, &RunOptions::default()).unwrap();
    assert!(is_asymmetric_brute_force(&c5, out.colouring.colours()).unwrap());
    assert!(out.colouring.distinct_colours() as f64 <= colour_bound(2).total);
    assert_eq!(out.colouring.colour(0), Colour::Root);
}

#[test]
fn tree_of_degree_three_splits_sibling_pairs() {
    let t = family(FamilySpec::Tree {
        degree: 3,
        radius: 2,
    });
    let out = run(&t, 0, None, &RunOptions::default()).unwrap();
    let step = &out.trace.steps[1];
    assert_eq!(step.k, 1);
    assert_eq!(step.split.len(), 3);
    for class in &step.split {
        assert_eq!(class.class.len(), 2);
        let barred: Vec<Colour> = class
            .class
            .iter()
            .map(|&v| out.colouring.colour(v))
            .filter(|c| matches!(c, Colour::Barred(_)))
            .collect();
        assert_eq!(barred, vec![Colour::Barred(1)]);
    }
    let report = audit(&t, &out, true);
    assert!(report.passed());
    assert!(report.result(Property::OrbitSize).unwrap().checks >= 3);
    assert!(is_asymmetric(&t, out.colouring.colours()).unwrap());
    assert!(out.colouring.max_numeric() as u64 <= colour_bound(3).max_numeric);
}

#[test]
fn truncated_trees_become_asymmetric() {
    for d in [3, 4, 5] {
        for radius in [2, 3] {
            let t = family(FamilySpec::Tree { degree: d, radius });
            assert!(interior_support_check(&t, 0, radius).unwrap());
            let out = run(&t, 0, None, &RunOptions::default()).unwrap();
            assert!(
                is_asymmetric(&t, out.colouring.colours()).unwrap(),
                "tree({d},{radius})"
            );
            let report = audit(&t, &out, true);
            assert!(
                report.passed(),
                "tree({d},{radius}): {:?}",
                report.violations().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn partial_horizon_leaves_far_vertices() {
    let t = family(FamilySpec::Tree {
        degree: 3,
        radius: 3,
    });
    let out = run(&t, 0, Some(1), &RunOptions::default()).unwrap();
    assert_eq!(out.colouring.radius(), 1);
    assert!(t
        .sphere(0, 2)
        .iter()
        .all(|&v| out.colouring.colour(v) == Colour::Far));
    assert!(audit(&t, &out, false).passed());
    assert!(run(&t, 0, Some(4), &RunOptions::default()).is_err());
    assert!(run(&t, 99, None, &RunOptions::default()).is_err());
}

#[test]
fn runs_are_deterministic() {
    let g = family(FamilySpec::Grid { w: 3, h: 3 });
    let a = run(&g, 4, None, &RunOptions::default()).unwrap();
    let b = run(&g, 4, None, &RunOptions::default()).unwrap();
    assert_eq!(a.colouring, b.colouring);
    assert_eq!(a.trace.to_text(), b.trace.to_text());
}
