//! Frozen reference charts and the checks run against them.

use okamoto_algebra::{parse, print, Check, Ring, RF};

use crate::reference::{clockwise_quiver, generic_seed, reference_a_seed, reference_x_seed, seed_ring};
use crate::seed::{ensemble_map, is_positive_laurent, Seed};
use crate::word::{clustrans_word, sigma, sigma_by_mutations, Word};

/// Chord chart after the full cluster transformation.
pub const ZCHANGE: [&str; 3] = [
    "(1+Z_O2+Z_O2*Z_B2)/(Z_B2*(1+Z_G2+Z_O2*Z_G2))",
    "(1+Z_B2+Z_B2*Z_G2)/(Z_G2*(1+Z_O2+Z_O2*Z_B2))",
    "(1+Z_G2+Z_O2*Z_G2)/(Z_O2*(1+Z_B2+Z_B2*Z_G2))",
];

/// The nine-step word evaluated on the clockwise quiver.
pub const ZCHANGE_CLOCKWISE: [&str; 3] = [
    "(1+Z_O2+Z_O2*Z_G2)/(Z_G2*(1+Z_B2+Z_O2*Z_B2))",
    "(1+Z_B2+Z_O2*Z_B2)/(Z_O2*(1+Z_G2+Z_B2*Z_G2))",
    "(1+Z_G2+Z_B2*Z_G2)/(Z_B2*(1+Z_O2+Z_O2*Z_G2))",
];

/// X-charts after mu_O, mu_B, mu_G; the chart after the final mu_O and
/// sigma_O is [`ZCHANGE`].
pub const X_STEPS: [[&str; 3]; 3] = [
    ["1/Z_O2", "Z_O2*Z_B2/(1+Z_O2)", "Z_G2*(1+Z_O2)"],
    ["Z_B2/(1+Z_O2+Z_O2*Z_B2)", "(1+Z_O2)/(Z_O2*Z_B2)", "Z_G2*(1+Z_O2)"],
    ["Z_B2*(1+Z_G2+Z_O2*Z_G2)/(1+Z_O2+Z_O2*Z_B2)", "(1+Z_O2)/(Z_O2*Z_B2)", "1/(Z_G2*(1+Z_O2))"],
];

/// A-charts after mu_O, mu_B, mu_G, mu_O, with `T = C_O2+C_B2+C_G2`.
pub const A_STEPS: [[&str; 3]; 4] = [
    ["(C_B2+C_G2)/C_O2", "C_B2", "C_G2"],
    ["(C_B2+C_G2)/C_O2", "T/(C_O2*C_B2)", "C_G2"],
    ["(C_B2+C_G2)/C_O2", "T/(C_O2*C_B2)", "T/(C_O2*C_G2)"],
    ["T/(C_B2*C_G2)", "T/(C_O2*C_B2)", "T/(C_O2*C_G2)"],
];

/// X-charts along sigma_O = (mu_B mu_G)^2 mu_B.
pub const SIGMA_STEPS: [[&str; 3]; 5] = [
    ["(1+Z_B2)*Z_O2", "Z_B2^-1", "Z_B2*Z_G2/(1+Z_B2)"],
    ["(1+Z_B2)*Z_O2", "Z_G2/(1+Z_B2+Z_B2*Z_G2)", "(1+Z_B2)/(Z_B2*Z_G2)"],
    ["Z_O2*Z_G2/(1+Z_G2)", "(1+Z_B2+Z_B2*Z_G2)/Z_G2", "1/(Z_B2*(1+Z_G2))"],
    ["Z_O2*Z_G2/(1+Z_G2)", "Z_G2^-1", "Z_B2*(1+Z_G2)"],
    ["Z_O2", "Z_G2", "Z_B2"],
];

pub fn chords(seed: &Seed) -> Vec<RF> {
    ["O2", "B2", "G2"].iter().map(|l| seed.coord(l).expect("chord vertex").clone()).collect()
}

pub fn exprs(ring: &Ring, row: &[&str]) -> Vec<RF> {
    row.iter().map(|s| parse(&s.replace('T', "(C_O2+C_B2+C_G2)"), ring).expect("frozen expression")).collect()
}

/// First position where the computed chart differs from the expected one.
pub fn chart_mismatch(ring: &Ring, got: &[RF], want: &[RF]) -> Option<String> {
    got.iter().zip(want).position(|(a, b)| a != b).map(|i| {
        format!("position {i}: got {}, expected {}", print(&got[i], ring), print(&want[i], ring))
    })
}

fn rows_check(id: &str, topic: &str, ring: &Ring, traj: &[Seed], rows: &[&[&str]]) -> Check {
    let witness = rows.iter().enumerate().find_map(|(k, row)| {
        chart_mismatch(ring, &chords(&traj[k + 1]), &exprs(ring, row)).map(|w| format!("row {}: {w}", k + 1))
    });
    Check::from_witness(id, topic, witness)
}

/// Tables of charts, the full transformation, the A-side pullback and the
/// ensemble map.
pub fn run_checks() -> Vec<Check> {
    let zr = seed_ring("Z");
    let s0 = reference_x_seed(&zr);
    let q = s0.quiver.clone();
    let mut out = Vec::new();

    let w = clustrans_word(&q).expect("reference labels");
    let traj = w.trajectory(&s0);
    let rows: Vec<&[&str]> = X_STEPS.iter().map(|r| &r[..]).collect();
    out.push(rows_check("x-steps", "X-charts after each of the first three mutations", &zr, &traj, &rows));
    out.push(Check::from_witness(
        "clustrans-zchange",
        "the four mutations then sigma_O give the changed chart",
        chart_mismatch(&zr, &chords(&traj[5]), &exprs(&zr, &ZCHANGE)),
    ));
    out.push(Check::new("clustrans-quiver", "the transformation fixes the quiver", traj[5].quiver == q));

    let cr = seed_ring("C");
    let a0 = reference_a_seed(&cr);
    let aw = Word::mus(&q, &["O", "G", "B", "O"]).expect("reference labels");
    let atraj = aw.trajectory(&a0);
    let rows: Vec<&[&str]> = A_STEPS.iter().map(|r| &r[..]).collect();
    out.push(rows_check("a-steps", "A-charts after each of the four mutations", &cr, &atraj, &rows));
    out.push(Check::new(
        "a-steps-laurent",
        "every A-chart entry is a Laurent polynomial with positive coefficients",
        atraj[1..].iter().all(|s| chords(s).iter().all(is_positive_laurent)),
    ));
    let full = clustrans_word(&a0.quiver).expect("reference labels");
    out.push(Check::new(
        "a-pullback",
        "the transformation pulls back to the identity through the ensemble map",
        ensemble_map(&full.apply(&a0)) == ensemble_map(&a0),
    ));
    out.push(Check::new(
        "ensemble-commutes",
        "the ensemble map commutes with every mutation",
        (0..a0.quiver.len()).all(|k| ensemble_map(&a0.mutate(k)) == ensemble_map(&a0).mutate(k)),
    ));

    let sw = sigma_by_mutations(&q, "O", false).expect("reference labels");
    let straj = sw.trajectory(&s0);
    let rows: Vec<&[&str]> = SIGMA_STEPS.iter().map(|r| &r[..]).collect();
    out.push(rows_check("sigma-steps", "X-charts along the five mutations of sigma_O", &zr, &straj, &rows));
    out.push(Check::new(
        "sigma-orientation",
        "sigma_O reverses the quiver and equals the plain swap",
        straj[5].quiver == clockwise_quiver() && straj[5] == sigma(&q, "O").expect("label").apply(&s0),
    ));
    out
}

/// Generic X-seed on the clockwise quiver over `Z_*`.
pub fn clockwise_seed(ring: &Ring) -> Seed {
    generic_seed(clockwise_quiver(), ring, "Z", true)
}
