use okamoto_algebra::{Ring, RF};
use okamoto_cluster::json::{word_from_json, word_to_json, SeedJson};
use okamoto_cluster::reference::{reference_x_seed, seed_ring};
use okamoto_cluster::{Quiver, Seed, Step, Word};
use proptest::prelude::*;

fn arb_quiver(n: usize) -> impl Strategy<Value = Quiver> {
    proptest::collection::vec(-2i32..=2, n * (n - 1) / 2).prop_map(move |upper| {
        let mut eps = vec![vec![0; n]; n];
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let e = it.next().unwrap();
                eps[i][j] = e;
                eps[j][i] = -e;
            }
        }
        let labels = (0..n).map(|i| format!("v{i}")).collect();
        Quiver::new(labels, eps).unwrap()
    })
}

fn generic_seed(q: Quiver, x: bool) -> Seed {
    let ring = Ring::new((0..q.len()).map(|i| format!("x{i}"))).unwrap();
    let coords = (0..q.len()).map(|i| RF::var(ring.require(&format!("x{i}")).unwrap())).collect();
    if x {
        Seed::x(q, coords).unwrap()
    } else {
        Seed::a(q, coords).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn mutation_is_involutive(q in arb_quiver(4), k in 0usize..4) {
        prop_assert_eq!(q.mutate(k).mutate(k), q.clone());
        prop_assert!(q.mutate(k).is_skew_symmetric());
        let x = generic_seed(q.clone(), true);
        prop_assert_eq!(x.mutate(k).mutate(k), x);
        let a = generic_seed(q, false);
        prop_assert_eq!(a.mutate(k).mutate(k), a);
    }

    #[test]
    fn ensemble_map_commutes(q in arb_quiver(4), k in 0usize..4) {
        let a = generic_seed(q, false);
        prop_assert_eq!(
            okamoto_cluster::ensemble_map(&a.mutate(k)),
            okamoto_cluster::ensemble_map(&a).mutate(k)
        );
    }

    #[test]
    fn word_then_inverse(steps in proptest::collection::vec(0usize..6, 0..6), swap in 0usize..3) {
        let ring = seed_ring("Z");
        let s0 = reference_x_seed(&ring);
        let mut list = steps.into_iter().map(Step::Mu).collect::<Vec<_>>();
        let mut p: Vec<usize> = (0..6).collect();
        p.swap(3 + swap, 3 + (swap + 1) % 3);
        list.insert(list.len() / 2, Step::Sigma(p));
        let w = Word::from_application_order(list);
        prop_assert_eq!(w.inverse().apply(&w.apply(&s0)), s0);
    }
}

#[test]
fn empty_quiver_maps_to_ones() {
    let a = generic_seed(Quiver::empty(&["a", "b", "c"]), false);
    let x = okamoto_cluster::ensemble_map(&a);
    assert!(x.coords.iter().all(|c| c.is_one()));
}

#[test]
fn json_round_trips() {
    let ring = seed_ring("Z");
    let s0 = reference_x_seed(&ring);
    let w = Word::parse_list("O,B,sigma_G,G", &s0.quiver).unwrap();
    let s1 = w.apply(&s0);
    let j = serde_json::to_string(&SeedJson::from_seed(&s1, &ring)).unwrap();
    let back: SeedJson = serde_json::from_str(&j).unwrap();
    let (s2, _) = back.to_seed().unwrap();
    assert_eq!(s2, s1);
    let wj = serde_json::to_string(&word_to_json(&w, &s0.quiver)).unwrap();
    let steps: Vec<okamoto_cluster::json::StepJson> = serde_json::from_str(&wj).unwrap();
    assert_eq!(word_from_json(&steps, &s0.quiver).unwrap(), w);
}

#[test]
fn seeded_mutation_suite() {
    let checks = okamoto_cluster::props::run_checks(11, 24);
    for c in &checks {
        println!("{c}");
    }
    assert!(okamoto_algebra::all_pass(&checks));
}
