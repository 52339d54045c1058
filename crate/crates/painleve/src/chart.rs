//! The monodromy chart: three generators over the chord coordinates
//! `Z_O2, Z_B2, Z_G2` and square roots `i1, i2, i3` of the local eigenvalues.

use okamoto_algebra::{parse, Check, Matrix, Ring, RuleSet, SubstitutionRule, RF};

/// Variables of the chart ring. `iinf` is eliminated by the Casimir rule;
/// `tau0` is a free scalar used by the Stokes-side addition.
pub const CHART_VARS: [&str; 8] = ["Z_O2", "Z_B2", "Z_G2", "i1", "i2", "i3", "iinf", "tau0"];

/// Ring and named elements shared by every chart computation.
#[derive(Clone, Debug)]
pub struct ChartRing {
    pub ring: Ring,
}

impl Default for ChartRing {
    fn default() -> Self {
        ChartRing::new()
    }
}

impl ChartRing {
    pub fn new() -> ChartRing {
        ChartRing { ring: Ring::new(CHART_VARS).expect("valid names") }
    }

    /// Parse an expression in the chart variables.
    pub fn e(&self, src: &str) -> RF {
        parse(src, &self.ring).unwrap_or_else(|err| panic!("bad chart expression `{src}`: {err}"))
    }

    pub fn var(&self, name: &str) -> RF {
        RF::var(self.ring.require(name).expect("chart variable"))
    }

    pub fn index(&self, name: &str) -> usize {
        self.ring.require(name).expect("chart variable")
    }

    /// `Z_O2, Z_B2, Z_G2`.
    pub fn z(&self) -> [RF; 3] {
        [self.var("Z_O2"), self.var("Z_B2"), self.var("Z_G2")]
    }

    pub fn iota(&self) -> [RF; 3] {
        [self.var("i1"), self.var("i2"), self.var("i3")]
    }

    /// Local eigenvalues `i_k^2`.
    pub fn q(&self) -> [RF; 3] {
        self.iota().map(|i| i.pow(2))
    }

    /// The cubic Casimir `Z_O2 Z_B2 Z_G2`.
    pub fn cycle(&self) -> RF {
        self.e("Z_O2*Z_B2*Z_G2")
    }

    /// Value of `iinf` forced by the cubic Casimir.
    pub fn iinf_value(&self) -> RF {
        self.e("Z_O2*Z_B2*Z_G2/(i1*i2*i3)")
    }

    /// `iinf -> Z_O2 Z_B2 Z_G2 / (i1 i2 i3)`.
    pub fn casimir(&self) -> RuleSet {
        RuleSet::new(vec![SubstitutionRule::new(self.index("iinf"), 1, self.iinf_value())])
    }

    pub fn print(&self, r: &RF) -> String {
        okamoto_algebra::print(r, &self.ring)
    }

    pub fn matrix(&self, rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| self.e(s)).collect()).collect())
    }
}

/// `M_1, M_2, M_3` and `M_inf = (M_1 M_2 M_3)^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyChart {
    pub m: [Matrix; 3],
    pub m_inf: Matrix,
}

impl MonodromyChart {
    /// The chart in i-variables, with every defining relation verified.
    pub fn build(cr: &ChartRing) -> MonodromyChart {
        let m1 = cr.matrix(&[&["0", "i1/Z_O2"], &["-Z_O2/i1", "i1 + 1/i1"]]);
        let m2 = cr.matrix(&[
            &["1/i2 + i2 + i2/Z_B2", "1/i2 + i2 + i2/Z_B2 + Z_B2/i2"],
            &["-i2/Z_B2", "-i2/Z_B2"],
        ]);
        let m3 = cr.matrix(&[
            &["1/i3 + i3 + Z_G2/i3", "Z_G2/i3"],
            &["-1/i3 - i3 - i3/Z_G2 - Z_G2/i3", "-Z_G2/i3"],
        ]);
        let m_inf = m1.mul(&m2).mul(&m3).inverse(&RuleSet::empty()).expect("unimodular");
        
        MonodromyChart { m: [m1, m2, m3], m_inf }
    }

    /// Rescaled generators `i_k M_k`, with eigenvalues `{1, i_k^2}`.
    pub fn hat(&self, cr: &ChartRing) -> [Matrix; 3] {
        let i = cr.iota();
        [self.m[0].scale(&i[0]), self.m[1].scale(&i[1]), self.m[2].scale(&i[2])]
    }

    /// The quadratic relations, the product relation, unit determinants and
    /// the triangular shape of `M_inf` with its lower-left entry.
    pub fn relations(&self, cr: &ChartRing) -> Vec<Check> {
        let none = RuleSet::empty();
        let mut out = Vec::new();
        let iota = cr.iota();
        let inf = cr.iinf_value();
        let mut eig: Vec<(String, &Matrix, RF)> = (0..3)
            .map(|k| (format!("quadratic-m{}", k + 1), &self.m[k], iota[k].clone()))
            .collect();
        eig.push(("quadratic-minf".into(), &self.m_inf, inf.clone()));
        for (id, m, ev) in eig {
            let inv = ev.recip().expect("nonzero");
            let lhs = m.add_scalar(&-&ev).mul(&m.add_scalar(&-&inv));
            out.push(Check::new(id, "eigenvalue quadratic", lhs.is_zero()));
        }
        let prod = Matrix::product(&[&self.m[0], &self.m[1], &self.m[2], &self.m_inf], Default::default());
        out.push(Check::new("product", "M1 M2 M3 Minf = 1", prod == Matrix::identity(2)));
        for k in 0..3 {
            out.push(Check::new(
                format!("det-m{}", k + 1),
                "unit determinant",
                self.m[k].det(&none).is_one(),
            ));
        }
        let diag = Matrix::from_rows(vec![
            vec![inf.clone(), self.m_inf[(0, 1)].clone()],
            vec![self.m_inf[(1, 0)].clone(), inf.recip().expect("nonzero")],
        ]);
        out.push(Check::new(
            "minf-shape",
            "Minf lower triangular with diagonal (iinf, 1/iinf)",
            self.m_inf[(0, 1)].is_zero() && self.m_inf == diag,
        ));
        out.push(Check::new("minf-corner", "lower-left entry of Minf", self.m_inf[(1, 0)] == -&minf_corner(cr)));
        out
    }
}

/// Minus the lower-left entry of `M_inf`, expanded independently and frozen.
pub fn minf_corner(cr: &ChartRing) -> RF {
    cr.e(
        "(Z_O2*Z_B2^2*Z_G2^2 + Z_O2*Z_B2^2*Z_G2*i3^2 + Z_O2*Z_B2^2*Z_G2 + Z_O2*Z_B2^2*i3^2 \
         + Z_O2*Z_B2*i2^2*i3^2 + Z_O2*Z_B2*i3^2 + Z_O2*i2^2*i3^2 + i1^2*i2^2*i3^2 + i2^2*i3^2) \
         /(Z_B2*Z_G2*i1*i2*i3)",
    )
}
