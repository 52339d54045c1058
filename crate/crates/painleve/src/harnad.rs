//! The additive side: rank-one Fuchsian residues in the `(a_k, b_k)`
//! parametrization, their parameter-free convolution to the 3x3 matrix V,
//! and the convolution at the shifting eigenvalue.

use okamoto_algebra::{parse, Check, Matrix, Ring, RuleSet, SubstitutionRule, RF};
use okamoto_convolution::{middle_convolution_add, MatrixTuple, McOptions};

use crate::w2::first_mismatch_in;
use crate::PainleveError;

pub const HARNAD_VARS: [&str; 10] = ["a1", "a2", "a3", "b1", "b2", "b3", "t1", "t2", "t3", "tinf"];

/// Variables `a_k, b_k`, exponents `t_k` and `tinf`, with the three
/// constraints as rewrite rules applied in order: `tinf -> -sum a_k b_k`,
/// then `b3^2`, then `a3^2 -> -a1^2 - a2^2`.
#[derive(Clone, Debug)]
pub struct HarnadParameters {
    pub ring: Ring,
    pub conds: RuleSet,
}

impl Default for HarnadParameters {
    fn default() -> Self {
        HarnadParameters::new()
    }
}

impl HarnadParameters {
    pub fn new() -> HarnadParameters {
        let ring = Ring::new(HARNAD_VARS).expect("valid names");
        let rule = |var: &str, power: i16, src: &str| {
            SubstitutionRule::new(ring.require(var).expect("variable"), power, parse(src, &ring).expect("rule"))
        };
        let conds = RuleSet::new(vec![
            rule("tinf", 1, "-a1*b1 - a2*b2 - a3*b3"),
            rule("b3", 2, "-t3^2/(a1^2 + a2^2) + t1^2/a1^2 - b1^2 + t2^2/a2^2 - b2^2"),
            rule("a3", 2, "-a1^2 - a2^2"),
        ]);
        HarnadParameters { ring, conds }
    }

    pub fn e(&self, src: &str) -> RF {
        parse(src, &self.ring).unwrap_or_else(|err| panic!("bad expression `{src}`: {err}"))
    }

    pub fn print(&self, r: &RF) -> String {
        okamoto_algebra::print(r, &self.ring)
    }

    pub fn theta(&self) -> [RF; 3] {
        [self.e("t1"), self.e("t2"), self.e("t3")]
    }

    /// The three constraints as expressions that must vanish.
    pub fn constraints(&self) -> [RF; 3] {
        [
            self.e("a1*b1 + a2*b2 + a3*b3 + tinf"),
            self.e("a1^2 + a2^2 + a3^2"),
            self.e("t1^2/a1^2 - b1^2 + t2^2/a2^2 - b2^2 + t3^2/a3^2 - b3^2"),
        ]
    }

    /// Shift `gamma = -(tinf + t1 + t2 + t3)/2`.
    pub fn gamma(&self) -> RF {
        self.e("-(tinf + t1 + t2 + t3)/2")
    }

    /// Nonzero eigenvalues `(+-tinf - t1 - t2 - t3)/2` of V.
    pub fn e_pm(&self) -> (RF, RF) {
        (self.e("(tinf - t1 - t2 - t3)/2"), self.e("(-tinf - t1 - t2 - t3)/2"))
    }

    /// Residues `A_k = 1/2 (a b, -a^2; b^2 - t^2/a^2, -a b)`.
    pub fn fuchsian(&self) -> MatrixTuple {
        let mats = (1..=3)
            .map(|k| {
                let s = |src: &str| self.e(&src.replace('k', &k.to_string()));
                let h = RF::ratio(1, 2);
                Matrix::from_rows(vec![
                    vec![s("ak*bk"), s("-ak^2")],
                    vec![s("bk^2 - tk^2/ak^2"), s("-ak*bk")],
                ])
                .scale(&h)
            })
            .collect();
        MatrixTuple::add(mats).expect("three 2x2 residues")
    }

    /// `A_k + t_k/2`, with eigenvalues `{0, t_k}`.
    pub fn hat(&self) -> MatrixTuple {
        let t = self.theta();
        let a = self.fuchsian();
        let mats = a.matrices().iter().zip(&t).map(|(m, tk)| m.add_scalar(&tk.scale(&half()))).collect();
        MatrixTuple::add(mats).expect("three 2x2 residues")
    }

    /// Completion built on the kernel vectors `(a_k^2/(a_k b_k + t_k), 1)`.
    pub fn completion(&self) -> Matrix {
        let rows: [[&str; 6]; 6] = [
            ["a1^2/(a1*b1 + t1)", "0", "0", "0", "0", "0"],
            ["1", "0", "0", "1", "0", "0"],
            ["0", "a2^2/(a2*b2 + t2)", "0", "0", "0", "0"],
            ["0", "1", "0", "0", "a1/a2", "0"],
            ["0", "0", "a3^2/(a3*b3 + t3)", "0", "0", "0"],
            ["0", "0", "1", "0", "0", "a1/a3"],
        ];
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| self.e(x)).collect()).collect())
    }

    /// Closed form of V.
    pub fn expected_v(&self) -> Matrix {
        let rows: [[&str; 3]; 3] = [
            [
                "t1",
                "(a2*b1 - a1*b2 + t1*a2/a1 + t2*a1/a2)/2",
                "(a3*b1 - a1*b3 + t1*a3/a1 + t3*a1/a3)/2",
            ],
            [
                "(a1*b2 - a2*b1 + t1*a2/a1 + t2*a1/a2)/2",
                "t2",
                "(a3*b2 - a2*b3 + t2*a3/a2 + t3*a2/a3)/2",
            ],
            [
                "(a1*b3 - a3*b1 + t1*a3/a1 + t3*a1/a3)/2",
                "(a2*b3 - a3*b2 + t2*a3/a2 + t3*a2/a3)/2",
                "t3",
            ],
        ];
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| self.e(x)).collect()).collect()).neg()
    }

    /// Substitute `t1 = t2 = t3 = 0`.
    pub fn at_zero_theta(&self, m: &Matrix) -> Matrix {
        let mut vals: Vec<Option<RF>> = vec![None; self.ring.len()];
        for t in ["t1", "t2", "t3"] {
            vals[self.ring.require(t).expect("variable")] = Some(RF::zero());
        }
        m.substitute(&vals)
    }

    /// The rule set with `t1 = t2 = t3 = 0` substituted.
    pub fn conds_at_zero_theta(&self) -> RuleSet {
        let mut vals: Vec<Option<RF>> = vec![None; self.ring.len()];
        for t in ["t1", "t2", "t3"] {
            vals[self.ring.require(t).expect("variable")] = Some(RF::zero());
        }
        RuleSet::new(
            self.conds
                .rules()
                .iter()
                .map(|r| SubstitutionRule::new(r.var, r.power, r.replacement.substitute(&vals)))
                .collect(),
        )
    }
}

fn half() -> okamoto_algebra::Q {
    okamoto_algebra::Q::new(1.into(), 2.into())
}

/// Shape checks on the residues.
pub fn fuchsian_checks(hp: &HarnadParameters) -> Vec<Check> {
    let none = RuleSet::empty();
    let rules = &hp.conds;
    let a = hp.fuchsian();
    let hat = hp.hat();
    let t = hp.theta();
    let quarter = okamoto_algebra::Q::new((-1).into(), 4.into());
    let mut out = vec![
        Check::new("residue-trace", "tr A_k = 0", a.matrices().iter().all(|m| m.trace().is_zero())),
        Check::new(
            "residue-det",
            "det A_k = -t_k^2/4",
            a.matrices().iter().zip(&t).all(|(m, tk)| m.det(&none) == tk.pow(2).scale(&quarter)),
        ),
        Check::new(
            "hat-spectra",
            "eigenvalues of A_k + t_k/2 are {0, t_k}",
            hat.matrices().iter().zip(&t).all(|(m, tk)| m.charpoly(&none).has_spectrum(&[RF::zero(), tk.clone()], &none)),
        ),
    ];
    let sum = a.sum();
    let tinf = hp.e("tinf");
    out.push(Check::new(
        "residue-infinity",
        "-sum A_k has eigenvalues +-tinf/2",
        sum.neg().charpoly(rules).has_spectrum(&[tinf.scale(&half()), -&tinf.scale(&half())], rules),
    ));
    out.push(Check::new(
        "constraints",
        "the three constraints reduce to zero",
        hp.constraints().iter().all(|c| rules.is_zero(c)),
    ));
    out
}

#[derive(Clone, Debug)]
pub struct DualReport {
    pub v: Matrix,
    pub b: [Matrix; 3],
    pub checks: Vec<Check>,
}

/// Parameter-free convolution of the rescaled residues in the given
/// completion, quotienting by K alone; V is minus the sum of the outputs.
pub fn dual_v(hp: &HarnadParameters) -> Result<DualReport, PainleveError> {
    let rules = &hp.conds;
    let t = hp.theta();
    let opts = McOptions { k_only: true, ..McOptions::with_completion(hp.completion()) };
    let result = middle_convolution_add(&hp.hat(), &RF::zero(), &opts, rules)?;
    if result.output.size() != 3 {
        return Err(PainleveError::Shape(format!("expected 3x3 output, got {}", result.output.size())));
    }
    let bs = result.output.matrices();
    let b = [bs[0].clone(), bs[1].clone(), bs[2].clone()];
    let v = result.output.sum().neg().reduce(rules);
    let mut checks = vec![Check::new("k-dim", "dim K = 3", result.subspaces.dim_k() == 3)];
    checks.push(Check::from_witness(
        "v-entrywise",
        "V equals its closed form",
        first_mismatch_in(std::slice::from_ref(&v), &[hp.expected_v()], rules, |r| hp.print(r)),
    ));
    checks.push(Check::new(
        "v-diagonal",
        "V_kk = -t_k",
        (0..3).all(|k| rules.equal(&v[(k, k)], &-&t[k])),
    ));
    let (ep, em) = hp.e_pm();
    checks.push(Check::new(
        "v-charpoly",
        "eigenvalues of V are {0, e+, e-}",
        v.charpoly(rules).has_spectrum(&[RF::zero(), ep, em], rules),
    ));
    let rank_one = b.iter().zip(&t).all(|(m, tk)| {
        m.rank(rules) == 1 && m.charpoly(rules).has_spectrum(&[RF::zero(), RF::zero(), tk.clone()], rules)
    });
    checks.push(Check::new("b-rank-one", "each B_k has rank 1 and eigenvalues {0, 0, t_k}", rank_one));
    let rows = b.iter().enumerate().all(|(k, m)| {
        (0..3).all(|i| (0..3).all(|j| {
            let want = if i == k { -&v[(i, j)] } else { RF::zero() };
            rules.equal(&m[(i, j)], &want)
        }))
    });
    checks.push(Check::new("b-row-slices", "B_k is minus the k-th row of V", rows));
    let v0 = hp.at_zero_theta(&v);
    let r0 = hp.conds_at_zero_theta();
    checks.push(Check::new(
        "v-skew-at-zero",
        "off-diagonal part of V is skew at t = 0",
        v0.add(&v0.transpose()).is_zero_mod(&r0),
    ));
    Ok(DualReport { v, b, checks })
}

/// Convolution of the rescaled residues at `gamma`, an eigenvalue of
/// `-(sum of rescaled residues)`.
pub fn additive_w2(hp: &HarnadParameters) -> Result<(MatrixTuple, Vec<Check>), PainleveError> {
    let rules = &hp.conds;
    let gamma = rules.reduce(&hp.gamma());
    let hat = hp.hat();
    let mut checks = vec![Check::new(
        "gamma-eigenvalue",
        "gamma is an eigenvalue of the rescaled residue at infinity",
        hat.sum().neg().charpoly(rules).has_root(&gamma, rules),
    )];
    let result = middle_convolution_add(&hat, &gamma, &McOptions::default(), rules)?;
    let s = &result.subspaces;
    checks.push(Check::new("shift-dims", "dim K = 3 and dim L = 1", s.dim_k() == 3 && s.dim_l() == 1 && result.direct));
    checks.push(Check::new("shift-size", "output triple is 2x2", result.output.size() == 2));
    let t = hp.theta();
    let spectra = result.output.size() == 2
        && result.output.matrices().iter().zip(&t).all(|(m, tk)| {
            m.charpoly(rules).has_spectrum(&[RF::zero(), tk + &gamma], rules)
        });
    checks.push(Check::new("shift-spectra", "eigenvalues {0, t_k + gamma}", spectra));
    Ok((result.output, checks))
}

/// `theta -> (theta_k - sum of the others) / 2` cyclically, including
/// `tinf` as a fourth exponent.
pub fn theta_map(th: &[RF; 4]) -> [RF; 4] {
    let total: RF = th.iter().cloned().sum();
    th.clone().map(|x| (&x.scale(&okamoto_algebra::Q::from_integer(2.into())) - &total).scale(&half()))
}

/// Spectrum of `V - gamma` is `{0, -gamma, tinf}`.
pub fn birkhoff_shift(hp: &HarnadParameters, v: &Matrix) -> Check {
    let rules = &hp.conds;
    let gamma = hp.gamma();
    let shifted = v.add_scalar(&-&gamma);
    Check::new(
        "v-shift-spectrum",
        "eigenvalues of V - gamma are {0, -gamma, tinf}",
        shifted.charpoly(rules).has_spectrum(&[RF::zero(), -&gamma, hp.e("tinf")], rules),
    )
}
