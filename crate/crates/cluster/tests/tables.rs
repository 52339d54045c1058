use okamoto_algebra::{parse, Ring, RF};
use okamoto_cluster::reference::{
    clockwise_quiver, reference_a_seed, reference_x_seed, seed_ring, triangle_quiver,
};
use okamoto_cluster::word::{clustrans_word, coxeter_word, sigma, sigma_by_mutations, w2_word, COLORS};
use okamoto_cluster::{ensemble_map, is_positive_laurent, Seed, Word};

fn chords(seed: &Seed) -> Vec<RF> {
    ["O2", "B2", "G2"].iter().map(|l| seed.coord(l).unwrap().clone()).collect()
}

fn exprs(ring: &Ring, row: [&str; 3]) -> Vec<RF> {
    row.iter().map(|s| parse(s, ring).unwrap()).collect()
}

const ZCHANGE: [&str; 3] = [
    "(1+Z_O2+Z_O2*Z_B2)/(Z_B2*(1+Z_G2+Z_O2*Z_G2))",
    "(1+Z_B2+Z_B2*Z_G2)/(Z_G2*(1+Z_O2+Z_O2*Z_B2))",
    "(1+Z_G2+Z_O2*Z_G2)/(Z_O2*(1+Z_B2+Z_B2*Z_G2))",
];

#[test]
fn x_charts_along_clustrans() {
    let ring = seed_ring("Z");
    let s0 = reference_x_seed(&ring);
    let w = clustrans_word(&s0.quiver).unwrap();
    let traj = w.trajectory(&s0);
    let rows: [[&str; 3]; 4] = [
        ["1/Z_O2", "Z_O2*Z_B2/(1+Z_O2)", "Z_G2*(1+Z_O2)"],
        ["Z_B2/(1+Z_O2+Z_O2*Z_B2)", "(1+Z_O2)/(Z_O2*Z_B2)", "Z_G2*(1+Z_O2)"],
        [
            "Z_B2*(1+Z_G2+Z_O2*Z_G2)/(1+Z_O2+Z_O2*Z_B2)",
            "(1+Z_O2)/(Z_O2*Z_B2)",
            "1/(Z_G2*(1+Z_O2))",
        ],
        ZCHANGE,
    ];
    // steps 1..4 are mutations; the last row is after sigma_O
    assert_eq!(chords(&traj[1]), exprs(&ring, rows[0]));
    assert_eq!(chords(&traj[2]), exprs(&ring, rows[1]));
    assert_eq!(chords(&traj[3]), exprs(&ring, rows[2]));
    assert_eq!(chords(&traj[5]), exprs(&ring, rows[3]));
    // in quiver terms the whole transformation is the identity
    assert_eq!(traj[5].quiver, s0.quiver);
}

#[test]
fn a_charts_along_clustrans() {
    let ring = seed_ring("C");
    let s0 = reference_a_seed(&ring);
    let w = Word::mus(&s0.quiver, &["O", "G", "B", "O"]).unwrap();
    let traj = w.trajectory(&s0);
    let t = "C_O2+C_B2+C_G2";
    let rows = [
        ["(C_B2+C_G2)/C_O2".to_string(), "C_B2".into(), "C_G2".into()],
        ["(C_B2+C_G2)/C_O2".into(), format!("({t})/(C_O2*C_B2)"), "C_G2".into()],
        ["(C_B2+C_G2)/C_O2".into(), format!("({t})/(C_O2*C_B2)"), format!("({t})/(C_O2*C_G2)")],
        [format!("({t})/(C_B2*C_G2)"), format!("({t})/(C_O2*C_B2)"), format!("({t})/(C_O2*C_G2)")],
    ];
    for (k, row) in rows.iter().enumerate() {
        let want: Vec<RF> = row.iter().map(|s| parse(s, &ring).unwrap()).collect();
        assert_eq!(chords(&traj[k + 1]), want, "row {}", k + 1);
        assert!(chords(&traj[k + 1]).iter().all(is_positive_laurent));
    }
}

#[test]
fn sigma_o_steps() {
    let ring = seed_ring("Z");
    let s0 = reference_x_seed(&ring);
    let w = sigma_by_mutations(&s0.quiver, "O", false).unwrap();
    let traj = w.trajectory(&s0);
    let rows: [[&str; 3]; 5] = [
        ["(1+Z_B2)*Z_O2", "Z_B2^-1", "Z_B2*Z_G2/(1+Z_B2)"],
        ["(1+Z_B2)*Z_O2", "Z_G2/(1+Z_B2+Z_B2*Z_G2)", "(1+Z_B2)/(Z_B2*Z_G2)"],
        ["Z_O2*Z_G2/(1+Z_G2)", "(1+Z_B2+Z_B2*Z_G2)/Z_G2", "1/(Z_B2*(1+Z_G2))"],
        ["Z_O2*Z_G2/(1+Z_G2)", "Z_G2^-1", "Z_B2*(1+Z_G2)"],
        ["Z_O2", "Z_G2", "Z_B2"],
    ];
    for (k, row) in rows.iter().enumerate() {
        assert_eq!(chords(&traj[k + 1]), exprs(&ring, *row), "row {}", k + 1);
    }
    // orientation reverses
    assert_eq!(traj[5].quiver, clockwise_quiver());
    assert_eq!(traj[5], sigma(&s0.quiver, "O").unwrap().apply(&s0));
}

#[test]
fn ensemble_map_reference_values() {
    let cring = seed_ring("C");
    let a0 = reference_a_seed(&cring);
    let x = ensemble_map(&a0);
    let want = ["1", "1", "1", "C_G2/C_B2", "C_O2/C_G2", "C_B2/C_O2"];
    let want: Vec<RF> = want.iter().map(|s| parse(s, &cring).unwrap()).collect();
    assert_eq!(x.coords, want);
}

#[test]
fn ensemble_map_commutes_with_mutation() {
    let cring = seed_ring("C");
    let a0 = reference_a_seed(&cring);
    for k in 0..6 {
        assert_eq!(ensemble_map(&a0.mutate(k)), ensemble_map(&a0).mutate(k), "vertex {k}");
    }
}

#[test]
fn zchange_pulls_back_to_identity() {
    let cring = seed_ring("C");
    let a0 = reference_a_seed(&cring);
    let w = clustrans_word(&a0.quiver).unwrap();
    assert_eq!(ensemble_map(&w.apply(&a0)), ensemble_map(&a0));
}

#[test]
fn coxeter_and_w2_relations() {
    let ring = seed_ring("Z");
    let s0 = reference_x_seed(&ring);
    let q = &s0.quiver;
    for alpha in COLORS {
        assert_eq!(coxeter_word(q, alpha).unwrap().apply(&s0), s0);
        let a = sigma_by_mutations(q, alpha, false).unwrap().apply(&s0);
        let b = sigma_by_mutations(q, alpha, true).unwrap().apply(&s0);
        assert_eq!(a, b);
        assert_eq!(a, sigma(q, alpha).unwrap().apply(&s0));
    }
    let w = w2_word(q, "O", false).unwrap();
    let once = w.apply(&s0);
    assert_eq!(chords(&once), exprs(&ring, ZCHANGE));
    assert_eq!(once.quiver, triangle_quiver());
    assert_eq!(w.apply(&once), s0);
    assert_eq!(w2_word(q, "O", true).unwrap().apply(&s0), once);
}

#[test]
fn word_round_trip_restores_seed() {
    let ring = seed_ring("Z");
    let s0 = reference_x_seed(&ring);
    let w = Word::parse_list("O,B,G,O,sigma_O,B", &s0.quiver).unwrap();
    assert_eq!(w.len(), 6);
    assert_eq!(w.inverse().apply(&w.apply(&s0)), s0);
    assert_eq!(Word::identity().apply(&s0), s0);
}

#[test]
fn check_suite_passes() {
    for c in okamoto_cluster::suite::run_checks() {
        assert!(c.pass, "{c}");
    }
}
