use std::time::Instant;

use okamoto_algebra::Check;
use okamoto_painleve::{chart, fricke, harnad, stokes, w2, ChartRing, Corner, HarnadParameters, MonodromyChart};

fn report(name: &str, checks: &[Check], t: Instant) {
    println!("{name}: {:.2?}", t.elapsed());
    for c in checks {
        println!("  {c}");
    }
    assert!(checks.iter().all(|c| c.pass), "{name} failed");
}

#[test]
fn chart_relations() {
    let t = Instant::now();
    let cr = ChartRing::new();
    let m = MonodromyChart::build(&cr);
    report("chart", &m.relations(&cr), t);
    let _ = chart::CHART_VARS;
}

#[test]
fn w2_pipeline() {
    let t = Instant::now();
    let cr = ChartRing::new();
    let m = MonodromyChart::build(&cr);
    let rep = w2::realize(&cr, &m, &Corner::standard(&cr)).unwrap();
    report("w2", &rep.checks, t);
    let t = Instant::now();
    report("traces", &fricke::verify(&cr, &m, &rep.triple), t);
}

#[test]
fn stokes_pipeline() {
    let t = Instant::now();
    let cr = ChartRing::new();
    let m = MonodromyChart::build(&cr);
    let rep = stokes::from_monodromy(&cr, &m).unwrap();
    let mut checks = rep.checks.clone();
    checks.extend(stokes::scaling_checks(&cr, &rep.data));
    report("stokes", &checks, t);
}

#[test]
fn additive_pipeline() {
    let t = Instant::now();
    let hp = HarnadParameters::new();
    report("fuchsian", &harnad::fuchsian_checks(&hp), t);
    let t = Instant::now();
    let rep = harnad::dual_v(&hp).unwrap();
    let mut checks = rep.checks.clone();
    checks.push(harnad::birkhoff_shift(&hp, &rep.v));
    report("dual", &checks, t);
    let t = Instant::now();
    let (_, checks) = harnad::additive_w2(&hp).unwrap();
    report("shift", &checks, t);
}
