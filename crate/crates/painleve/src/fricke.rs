//! Trace coordinates of the chart and the cubic surface they satisfy.

use okamoto_algebra::{Check, Matrix, RF};

use crate::chart::{ChartRing, MonodromyChart};

/// The patterns `(i, j, k)` with `x_i = tr(M_j M_k)`.
pub const PATTERNS: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

/// Traces `x_i` and the coefficients of the cubic relation.
#[derive(Clone, Debug)]
pub struct FrickeData {
    pub x: [RF; 3],
    /// `omega_1, omega_2, omega_3, omega_4`.
    pub omega: [RF; 4],
}

fn trace_pair(m: &[Matrix], j: usize, k: usize) -> RF {
    m[j].mul(&m[k]).trace()
}

impl FrickeData {
    pub fn new(cr: &ChartRing, chart: &MonodromyChart) -> FrickeData {
        let x = PATTERNS.map(|(_, j, k)| trace_pair(&chart.m, j, k));
        let [i1, i2, i3] = cr.iota();
        let g: Vec<RF> = [i1, i2, i3, cr.iinf_value()]
            .iter()
            .map(|i| i + &i.recip().expect("nonzero"))
            .collect();
        let omega = [
            &(&g[0] * &g[3]) + &(&g[1] * &g[2]),
            &(&g[1] * &g[3]) + &(&g[2] * &g[0]),
            &(&g[2] * &g[3]) + &(&g[0] * &g[1]),
            &(&(&(&(&g[0] * &g[1]) * &g[2]) * &g[3]) + &g.iter().map(|x| x * x).sum::<RF>()) - &RF::int(4),
        ];
        FrickeData { x, omega }
    }

    /// `x1 x2 x3 + sum x_i^2 - sum omega_i x_i + omega_4`.
    pub fn cubic(&self) -> RF {
        let x = &self.x;
        let prod = &(&x[0] * &x[1]) * &x[2];
        let sq: RF = x.iter().map(|v| v * v).sum();
        let lin: RF = x.iter().zip(&self.omega).map(|(v, w)| v * w).sum();
        &(&(&prod + &sq) - &lin) + &self.omega[3]
    }
}

/// Trace invariance under the transformation and the cubic relation.
pub fn verify(cr: &ChartRing, chart: &MonodromyChart, transformed: &[Matrix; 3]) -> Vec<Check> {
    let rules = cr.casimir();
    let iota = cr.iota();
    let iinf = cr.var("iinf");
    let data = FrickeData::new(cr, chart);
    let mut out = Vec::new();
    for (i, j, k) in PATTERNS {
        let xt = &(&iinf * &iota[i]) * &trace_pair(transformed, j, k);
        let pass = rules.equal(&xt, &data.x[i]);
        out.push(
            Check::new(format!("trace-x{}", i + 1), "rescaled trace of the transformed pair", pass)
                .with_witness(cr.print(&rules.reduce(&(&xt - &data.x[i])))),
        );
    }
    let cubic = rules.reduce(&data.cubic());
    out.push(
        Check::new("fricke-cubic", "cubic relation among the traces", cubic.is_zero())
            .with_witness(cr.print(&cubic)),
    );
    out
}
