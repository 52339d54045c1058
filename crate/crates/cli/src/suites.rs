//! Verification suites, one per library crate.

use std::time::Instant;

use okamoto_algebra::{parse, print, Check, Exec, RF};
use okamoto_assoc::AssocChecks;
use okamoto_cluster::reference::seed_ring;
use okamoto_cluster::suite::{exprs, ZCHANGE};
use okamoto_painleve::{w2, ChartRing, Corner, PainleveChecks};

use crate::export::{golden_check, Kind};
use crate::report::SuiteReport;

/// Seed and instance count of the randomized property checks.
pub const PROPERTY_SEED: u64 = 20;
pub const PROPERTY_CASES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Algebra,
    Associahedron,
    Cluster,
    Convolution,
    Painleve,
    All,
}

/// Individual suites in name order.
pub const SUITES: [Suite; 5] = [Suite::Algebra, Suite::Associahedron, Suite::Cluster, Suite::Convolution, Suite::Painleve];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Associahedron => "associahedron",
            Suite::Cluster => "cluster",
            Suite::Convolution => "convolution",
            Suite::Painleve => "painleve",
            Suite::All => "all",
        }
    }
}

/// Knobs for mutation testing of the suites themselves.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub exec: Exec,
    /// Add 1 to the first corner entry of the `w2` completion.
    pub perturb_corner: bool,
}

pub fn algebra_checks() -> Vec<Check> {
    okamoto_algebra::props::run_checks(PROPERTY_SEED, PROPERTY_CASES)
}

pub fn cluster_tables() -> Vec<Check> {
    okamoto_cluster::suite::run_checks()
}

pub fn cluster_properties() -> Vec<Check> {
    okamoto_cluster::props::run_checks(PROPERTY_SEED, PROPERTY_CASES)
}

pub fn convolution_checks() -> Vec<Check> {
    okamoto_convolution::props::run_checks(PROPERTY_SEED, PROPERTY_CASES)
}

pub fn painleve_checks(opts: Options) -> PainleveChecks {
    if opts.perturb_corner {
        okamoto_painleve::run_checks_with(|cr| {
            let mut c = Corner::standard(cr);
            c.a = &c.a + &RF::one();
            c
        })
    } else {
        okamoto_painleve::run_checks()
    }
}

pub fn assoc_checks(opts: Options) -> AssocChecks {
    okamoto_assoc::run_checks(opts.exec)
}

/// The chart change read off the mutation word agrees with the one read
/// off the convolved monodromy.
pub fn zchange_agreement() -> Check {
    let zr = seed_ring("Z");
    let cr = ChartRing::new();
    let from_word = exprs(&zr, &ZCHANGE);
    let from_monodromy = w2::zchange(&cr);
    let witness = from_word.iter().zip(&from_monodromy).enumerate().find_map(|(k, (a, b))| {
        let text = print(a, &zr);
        match parse(&text, &cr.ring) {
            Ok(moved) if &moved == b => None,
            Ok(_) => Some(format!("position {k}: word gives {text}, monodromy gives {}", print(b, &cr.ring))),
            Err(e) => Some(format!("position {k}: {e}")),
        }
    });
    Check::from_witness("zchange-cluster", "word and monodromy give the same chart change", witness)
}

fn suite_checks(suite: Suite, opts: Options) -> Vec<Check> {
    match suite {
        Suite::Algebra => algebra_checks(),
        Suite::Cluster => {
            let mut v = cluster_tables();
            v.extend(cluster_properties());
            v.push(golden_check(Kind::Chart));
            v
        }
        Suite::Convolution => convolution_checks(),
        Suite::Painleve => {
            let mut v = painleve_checks(opts).all();
            v.push(zchange_agreement());
            v.push(golden_check(Kind::Stokes));
            v
        }
        Suite::Associahedron => {
            let mut v = assoc_checks(opts).all();
            v.extend([Kind::Census, Kind::FlipGraphDot, Kind::FlipGraphJson].map(golden_check));
            v
        }
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

pub fn run_one(suite: Suite, opts: Options) -> SuiteReport {
    let t = Instant::now();
    let checks = suite_checks(suite, opts);
    SuiteReport::new(suite.name(), &checks, t.elapsed())
}

/// Reports for `suite`, or for every suite in name order. Suites run
/// concurrently unless `opts.exec` is sequential.
pub fn run_suite(suite: Suite, opts: Options) -> Vec<SuiteReport> {
    if suite != Suite::All {
        return vec![run_one(suite, opts)];
    }
    if !opts.exec.is_parallel() {
        return SUITES.iter().map(|&s| run_one(s, opts)).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = SUITES.iter().map(|&s| scope.spawn(move || run_one(s, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}
