//! The Painleve VI instance: a monodromy chart over cluster coordinates, the
//! multiplicative convolution realizing the transformation `w2` and its
//! chart map, trace coordinates, Stokes data, and the additive side.

pub mod chart;
pub mod fricke;
pub mod harnad;
pub mod state;
pub mod stokes;
pub mod w2;

use okamoto_algebra::{all_pass, AlgebraError, Check};
use okamoto_convolution::ConvolutionError;
use thiserror::Error;

pub use chart::{ChartRing, MonodromyChart};
pub use fricke::FrickeData;
pub use harnad::HarnadParameters;
pub use state::ChartState;
pub use stokes::StokesData;
pub use w2::Corner;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PainleveError {
    #[error("unexpected shape: {0}")]
    Shape(String),
    #[error("triangular factorization failed: a leading minor vanishes")]
    Factorization,
    #[error(transparent)]
    Convolution(#[from] ConvolutionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Checks grouped by topic, in a fixed order.
#[derive(Clone, Debug, Default)]
pub struct PainleveChecks {
    pub chart: Vec<Check>,
    pub w2: Vec<Check>,
    pub state: Vec<Check>,
    pub traces: Vec<Check>,
    pub stokes: Vec<Check>,
    pub additive: Vec<Check>,
}

impl PainleveChecks {
    pub fn all(&self) -> Vec<Check> {
        [&self.chart, &self.w2, &self.state, &self.traces, &self.stokes, &self.additive]
            .into_iter()
            .flatten()
            .cloned()
            .collect()
    }
}

fn error_check(id: &str, e: PainleveError) -> Vec<Check> {
    vec![Check::new(id, "pipeline completed", false).with_witness(e.to_string())]
}

/// Chart map checks: Casimir preservation, product inversion, involution.
pub fn state_checks(cr: &ChartRing) -> Vec<Check> {
    let s0 = ChartState::reference(cr);
    let s1 = s0.w2();
    let s2 = s1.w2();
    let prod = &(&s1.z[0] * &s1.z[1]) * &s1.z[2];
    let nu = s0.nu();
    let (q, nu1) = w2::param_map(&cr.q(), &nu);
    let (q2, nu2) = w2::param_map(&q, &nu1);
    vec![
        Check::new("state-casimir", "Casimir holds after the map", s1.casimir_holds() && s2.casimir_holds()),
        Check::new("state-product", "product of the new chord coordinates is 1/(Z_O2 Z_B2 Z_G2)", prod == nu),
        Check::new("state-involution", "the chart map is an involution", s2 == s0),
        Check::new("param-involution", "the parameter map squares to the identity", q2 == cr.q() && nu2 == nu),
    ]
}

/// Every Painleve check: chart, `w2`, chart map, traces, Stokes data and
/// the additive side.
pub fn run_checks() -> PainleveChecks {
    run_checks_with(Corner::standard)
}

/// [`run_checks`] with another corner block in the `w2` completion.
pub fn run_checks_with(corner: impl Fn(&ChartRing) -> Corner) -> PainleveChecks {
    let cr = ChartRing::new();
    let chart = MonodromyChart::build(&cr);
    let mut out = PainleveChecks { chart: chart.relations(&cr), ..Default::default() };
    match w2::realize(&cr, &chart, &corner(&cr)) {
        Ok(rep) => {
            // traces of a wrong triple blow up symbolically
            out.traces = if all_pass(&rep.checks) {
                fricke::verify(&cr, &chart, &rep.triple)
            } else {
                vec![Check::new("traces-skipped", "trace checks need a correct convolved triple", false)
                    .with_witness("w2 checks failed")]
            };
            out.w2 = rep.checks;
        }
        Err(e) => out.w2 = error_check("w2-pipeline", e),
    }
    out.state = state_checks(&cr);
    match stokes::from_monodromy(&cr, &chart) {
        Ok(rep) => {
            out.stokes = rep.checks;
            out.stokes.extend(stokes::scaling_checks(&cr, &rep.data));
        }
        Err(e) => out.stokes = error_check("stokes-pipeline", e),
    }
    let hp = HarnadParameters::new();
    out.additive = harnad::fuchsian_checks(&hp);
    match harnad::dual_v(&hp) {
        Ok(rep) => {
            out.additive.push(harnad::birkhoff_shift(&hp, &rep.v));
            out.additive.extend(rep.checks);
        }
        Err(e) => out.additive.extend(error_check("dual-pipeline", e)),
    }
    match harnad::additive_w2(&hp) {
        Ok((_, checks)) => out.additive.extend(checks),
        Err(e) => out.additive.extend(error_check("shift-pipeline", e)),
    }
    out
}
