//! The acceptance criteria as groups of checks.

use std::time::{Duration, Instant};

use okamoto_algebra::Check;

use crate::suites::{self, Options, Suite};

/// Wall-time budget for `verify all`.
pub const VERIFY_ALL_BUDGET: Duration = Duration::from_secs(60);

#[derive(Clone, Debug)]
pub struct Criterion {
    pub number: usize,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl Criterion {
    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn line(&self) -> String {
        let mut s = format!(
            "criterion {:>2} [{}] {} ({} checks, {} ms)",
            self.number,
            if self.pass() { "pass" } else { "FAIL" },
            self.title,
            self.checks.len(),
            self.elapsed.as_millis()
        );
        if let Some(c) = self.checks.iter().find(|c| !c.pass) {
            s.push_str(&format!(": {}", c));
        }
        s
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

/// Checks grouped by criterion.
pub fn criteria(opts: Options) -> Vec<Criterion> {
    let (pv, tp) = timed(|| suites::painleve_checks(opts));
    let (av, ta) = timed(|| suites::assoc_checks(opts));
    let (cv, tc) = timed(suites::cluster_tables);
    let (zc, tz) = timed(suites::zchange_agreement);
    let (props, tprops) = timed(|| {
        let mut v = suites::algebra_checks();
        v.extend(suites::cluster_properties());
        v.extend(suites::convolution_checks());
        v
    });
    let (reports, tall) = timed(|| suites::run_suite(Suite::All, opts));
    let mut c11 = props;
    c11.push(
        Check::new(
            "verify-all-time",
            "the full verification finishes within its budget",
            tall < VERIFY_ALL_BUDGET,
        )
        .with_witness(format!("{} ms", tall.as_millis())),
    );
    c11.push(Check::from_witness(
        "verify-all-pass",
        "every suite of the full verification passes",
        reports.iter().find_map(|r| r.first_failure().map(|c| format!("{}: {}", r.suite, c.id))),
    ));
    let mut c2 = pv.w2.clone();
    c2.push(zc);
    let mut c5 = av.census.clone();
    c5.extend(av.flips.iter().cloned());
    let mut c10 = pv.traces.clone();
    c10.extend(pv.state.iter().cloned());
    let c = |number, title, checks, elapsed| Criterion { number, title, checks, elapsed };
    vec![
        c(1, "chart relations", pv.chart.clone(), tp),
        c(2, "convolved triple, product at infinity and chart change", c2, tp + tz),
        c(3, "mutation tables, transformation, pullback and ensemble map", cv, tc),
        c(4, "Coxeter relation and the nine-step word", av.relations.clone(), ta),
        c(5, "flip graph census", c5, ta),
        c(6, "path independence around independent cycles", av.paths.clone(), ta),
        c(7, "Stokes data", pv.stokes.clone(), tp),
        c(8, "additive side", pv.additive.clone(), tp),
        c(9, "fat graph Casimirs and the inside-out move", av.ribbon.clone(), ta),
        c(10, "traces and the cubic relation", c10, tp),
        c(11, "randomized property suites and the full run", c11, tprops + tall),
    ]
}
