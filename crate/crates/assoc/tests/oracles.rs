use okamoto_algebra::Exec;
use okamoto_assoc::export::{census_json, to_dot, to_json};
use okamoto_assoc::ribbon::{casimir_drift_along, inside_out};
use okamoto_assoc::{path_independence, Chord, Color, ColoredTriangulation, FlipGraph, RibbonState, COLORS};
use okamoto_cluster::reference::seed_ring;
use okamoto_cluster::Seed;
use proptest::prelude::*;

#[test]
fn first_flip_of_the_reference() {
    let t = ColoredTriangulation::reference().flip(Color::O);
    assert_eq!(t.chords, [Chord(2, 5), Chord(3, 5), Chord(1, 5)]);
}

#[test]
fn invalid_triangulations_are_rejected() {
    assert!(ColoredTriangulation::new([Chord(1, 4), Chord(2, 5), Chord(1, 3)]).is_err());
    assert!(ColoredTriangulation::new([Chord(1, 2), Chord(1, 3), Chord(1, 4)]).is_err());
    assert!(ColoredTriangulation::new([Chord(1, 3), Chord(1, 4), Chord(1, 5)]).is_ok());
}

#[test]
fn reference_quiver_is_the_triangle() {
    assert_eq!(ColoredTriangulation::reference().quiver(), okamoto_cluster::reference::triangle_quiver());
}

#[test]
fn loop_arrows_do_not_follow_mutation() {
    // the chord part is mutation-consistent, the loop rows are not
    let g = FlipGraph::enumerate();
    let mut loops_off = 0;
    for t in &g.vertices {
        for c in COLORS {
            let k = 3 + c.index();
            let mutated = t.extended_quiver().mutate(k);
            let geometric = t.flip(c).extended_quiver();
            assert!((3..6).all(|i| (3..6).all(|j| mutated.eps(i, j) == geometric.eps(i, j))));
            if mutated != geometric {
                loops_off += 1;
            }
        }
    }
    assert!(loops_off > 0);
}

#[test]
fn dropping_the_fold_factor_breaks_the_casimir() {
    let ring = seed_ring("Z");
    let s = RibbonState::reference(&ring);
    let k = 3;
    let coords = Seed::x(s.graph.quiver(), s.coords.clone()).unwrap().mutate(k).coords;
    let bare = RibbonState { graph: s.graph.whitehead(Color::O), tri: s.tri.flip(Color::O), coords };
    assert_ne!(bare.casimir(Color::O), s.casimir(Color::O));
    assert_eq!(s.flip(Color::O).casimir(Color::O), s.casimir(Color::O));
}

#[test]
fn loop_edges_do_not_flip() {
    let s = RibbonState::reference(&seed_ring("Z"));
    assert!(s.flip_label("O1").is_err());
    assert!(s.flip_label("X").is_err());
    assert_eq!(s.flip_label("B2").unwrap(), s.flip(Color::B));
}

#[test]
fn ribbon_flip_is_involutive() {
    let s = RibbonState::reference(&seed_ring("Z"));
    for c in COLORS {
        let back = s.flip(c).flip(c);
        assert_eq!(back.coords, s.coords);
        assert_eq!(back.tri, s.tri);
        assert_eq!(back.graph.shape(), s.graph.shape());
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let g = FlipGraph::enumerate();
    let a = path_independence(&g, Exec::Sequential);
    let b = path_independence(&g, Exec::Parallel);
    assert_eq!(a.seeds, b.seeds);
    assert_eq!((a.cycle_checks, a.failures.len()), (43, 0));
    assert_eq!((b.cycle_checks, b.failures.len()), (43, 0));
}

#[test]
fn inside_out_table_rows_in_order() {
    let r = inside_out();
    let crossings: Vec<Vec<Color>> = r.trajectory[1..5].iter().map(|s| s.graph.crossings(Color::O)).collect();
    assert_eq!(
        crossings,
        vec![vec![Color::O], vec![Color::O, Color::B], vec![Color::O, Color::B, Color::G], vec![Color::B, Color::G]]
    );
}

#[test]
fn exports_are_complete() {
    let g = FlipGraph::enumerate();
    let dot = to_dot(&g);
    assert_eq!(dot.matches(" -- ").count(), 126);
    assert_eq!(dot.matches("// face").count(), 36);
    let v: serde_json::Value = serde_json::from_str(&to_json(&g)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 84);
    assert_eq!(v["edges"].as_array().unwrap().len(), 126);
    let c: serde_json::Value = serde_json::from_str(&census_json(&g)).unwrap();
    assert_eq!(c["genus"], 4);
}

fn color() -> impl Strategy<Value = Color> {
    prop_oneof![Just(Color::O), Just(Color::B), Just(Color::G)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn casimirs_survive_any_short_walk(walk in proptest::collection::vec(color(), 0..=9)) {
        prop_assert_eq!(casimir_drift_along(&walk), None);
    }

    #[test]
    fn walk_then_reverse_restores_the_state(walk in proptest::collection::vec(color(), 0..=9)) {
        let s0 = RibbonState::reference(&seed_ring("Z"));
        let there = walk.iter().fold(s0.clone(), |s, c| s.flip(*c));
        let back = walk.iter().rev().fold(there, |s, c| s.flip(*c));
        prop_assert_eq!(back.coords, s0.coords);
        prop_assert_eq!(back.tri, s0.tri);
    }

    #[test]
    fn whitehead_matches_dual(walk in proptest::collection::vec(color(), 0..=12)) {
        let s0 = RibbonState::reference(&seed_ring("Z"));
        let mut s = s0;
        for c in walk {
            s = s.flip(c);
            prop_assert!(s.graph.is_valid());
            prop_assert_eq!(s.graph.shape(), okamoto_assoc::RibbonGraph::dual(&s.tri).shape());
        }
    }
}
