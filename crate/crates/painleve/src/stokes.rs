//! Stokes data from the monodromy chart: parameter-free convolution to a
//! triple of 3x3 pseudo-reflections, then triangular factorization of
//! their product.

use okamoto_algebra::{Check, Matrix, RuleSet, RF};
use okamoto_convolution::{addition_mult, middle_convolution_mult, MatrixTuple, McOptions};

use crate::chart::{ChartRing, MonodromyChart};
use crate::w2::first_mismatch;
use crate::PainleveError;

/// `M0`, upper unitriangular `S1` and lower triangular `S2` with
/// `M0 S1 S2 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StokesData {
    pub m0: Matrix,
    pub s1: Matrix,
    pub s2: Matrix,
}

impl StokesData {
    /// `(tau0 M0, S1, S2 / tau0)`.
    pub fn scaled(&self, tau0: &RF) -> StokesData {
        let inv = tau0.recip().expect("nonzero scalar");
        StokesData { m0: self.m0.scale(tau0), s1: self.s1.clone(), s2: self.s2.scale(&inv) }
    }

    pub fn product(&self) -> Matrix {
        Matrix::product(&[&self.m0, &self.s1, &self.s2], Default::default())
    }
}

/// Completion sharing its K columns with the `w2` completion.
pub fn completion(cr: &ChartRing) -> Matrix {
    cr.matrix(&[
        &["i1^2/Z_O2", "0", "0", "1", "0", "0"],
        &["1", "0", "0", "0", "0", "0"],
        &["0", "-1 - Z_B2/i2^2", "0", "0", "-1/i2^2", "0"],
        &["0", "1", "0", "0", "0", "0"],
        &["0", "0", "-1", "0", "0", "0"],
        &["0", "0", "1 + i3^2/Z_G2", "0", "0", "-1/(Z_B2*Z_G2)"],
    ])
}

/// Closed forms of `S1` and `S2`.
pub fn expected(cr: &ChartRing) -> (Matrix, Matrix) {
    let s1 = cr.matrix(&[
        &[
            "1",
            "-1 - 1/Z_B2 - i1^2/(Z_O2*Z_B2)",
            "1 + 1/Z_G2 + 1/(Z_B2*Z_G2) + i2^2/(Z_B2*Z_G2)*(1 + 1/Z_B2 + i1^2/(Z_O2*Z_B2))",
        ],
        &["0", "1", "-1 - 1/Z_G2 - i2^2/(Z_B2*Z_G2)"],
        &["0", "0", "1"],
    ]);
    let s2 = cr.matrix(&[
        &["i1^2", "0", "0"],
        &["i2^2*(1 + Z_O2) + Z_O2*Z_B2", "i2^2", "0"],
        &["Z_B2*(i3^2 + Z_G2) + Z_O2*Z_B2*Z_G2", "i3^2*(1 + Z_B2) + Z_B2*Z_G2", "i3^2"],
    ]);
    (s1, s2)
}

/// Factor `p = S1 S2` with `S1` unipotent upper and `S2` lower triangular,
/// through the LU factorization of the reversed matrix.
pub fn killing_factor(p: &Matrix, rules: &RuleSet) -> Option<(Matrix, Matrix)> {
    let j = Matrix::reversal(p.rows());
    let (l, u) = j.mul(p).mul(&j).lu(rules)?;
    Some((j.mul(&l).mul(&j), j.mul(&u).mul(&j)))
}

#[derive(Clone, Debug)]
pub struct StokesReport {
    pub data: StokesData,
    /// The convolved pseudo-reflections.
    pub r: [Matrix; 3],
    pub checks: Vec<Check>,
}

fn is_upper_unitriangular(m: &Matrix, rules: &RuleSet) -> bool {
    (0..m.rows()).all(|i| {
        (0..=i).all(|j| if i == j { rules.equal(&m[(i, j)], &RF::one()) } else { rules.is_zero(&m[(i, j)]) })
    })
}

fn is_lower_triangular(m: &Matrix, rules: &RuleSet) -> bool {
    (0..m.rows()).all(|i| (i + 1..m.cols()).all(|j| rules.is_zero(&m[(i, j)])))
}

pub fn from_monodromy(cr: &ChartRing, chart: &MonodromyChart) -> Result<StokesReport, PainleveError> {
    let rules = cr.casimir();
    let input = MatrixTuple::mult(chart.m.to_vec())?;
    let hat = addition_mult(&input, &cr.iota())?;
    let opts = McOptions { k_only: true, ..McOptions::with_completion(completion(cr)) };
    let result = middle_convolution_mult(&hat, &RF::one(), &opts, &rules)?;
    if result.output.size() != 3 {
        return Err(PainleveError::Shape(format!("expected 3x3 output, got {}", result.output.size())));
    }
    let r: Vec<Matrix> = result.output.matrices().to_vec();
    let r = [r[0].clone(), r[1].clone(), r[2].clone()];
    let prod = Matrix::product(&[&r[0], &r[1], &r[2]], Default::default());
    let (s1, s2) = killing_factor(&prod, &rules).ok_or(PainleveError::Factorization)?;
    let m0 = s1.mul(&s2).inverse(&rules)?;
    let data = StokesData { m0, s1, s2 };
    let mut checks = Vec::new();
    let one = Matrix::identity(3);
    checks.push(Check::new(
        "pseudo-reflections",
        "each R_k - 1 has rank 1",
        r.iter().all(|m| m.sub(&one).rank(&rules) == 1),
    ));
    checks.push(Check::new(
        "killing-shape",
        "S1 unipotent upper, S2 lower triangular, S1 S2 = R1 R2 R3",
        is_upper_unitriangular(&data.s1, &rules)
            && is_lower_triangular(&data.s2, &rules)
            && data.s1.mul(&data.s2).equal_mod(&prod, &rules),
    ));
    let (e1, e2) = expected(cr);
    checks.push(Check::from_witness(
        "stokes-entrywise",
        "S1 and S2 equal their closed forms",
        first_mismatch(&[data.s1.clone(), data.s2.clone()], &[e1, e2], &rules, cr),
    ));
    checks.push(Check::new(
        "stokes-diag-s1",
        "diagonal of S1 is (1,1,1)",
        (0..3).all(|i| data.s1[(i, i)].is_one()),
    ));
    checks.push(Check::new(
        "stokes-eig-s2",
        "eigenvalues of S2 are i_k^2",
        data.s2.charpoly(&rules).has_spectrum(&cr.q(), &rules),
    ));
    checks.push(Check::new("stokes-relation", "M0 S1 S2 = 1", data.product().equal_mod(&one, &rules)));
    let m0_eig = [RF::one(), cr.e("iinf/(i1*i2*i3)"), cr.e("1/(iinf*i1*i2*i3)")];
    checks.push(Check::new(
        "stokes-eig-m0",
        "eigenvalues of M0 after eliminating iinf",
        data.m0.charpoly(&rules).has_spectrum(&m0_eig, &rules),
    ));
    Ok(StokesReport { data, r, checks })
}

/// The Stokes-side addition `(tau0 M0, S1, S2/tau0)`: the group relation
/// survives, eigenvalues of `M0` scale by `tau0` and `tau0 = 1` is the
/// identity.
pub fn scaling_checks(cr: &ChartRing, data: &StokesData) -> Vec<Check> {
    let rules = cr.casimir();
    let tau0 = cr.var("tau0");
    let scaled = data.scaled(&tau0);
    let one = Matrix::identity(3);
    let base = data.m0.charpoly(&rules);
    let moved = scaled.m0.charpoly(&rules);
    // det(lambda - tau0 M0) = tau0^3 det(lambda/tau0 - M0)
    let rescaled: Vec<RF> =
        base.coeffs().iter().enumerate().map(|(i, c)| c * &tau0.pow(3 - i as i32)).collect();
    let eig_ok = moved.coeffs().iter().zip(&rescaled).all(|(a, b)| rules.equal(a, b));
    let mut unit: Vec<Option<RF>> = vec![None; cr.ring.len()];
    unit[cr.index("tau0")] = Some(RF::one());
    let at_one = StokesData {
        m0: scaled.m0.substitute(&unit),
        s1: scaled.s1.substitute(&unit),
        s2: scaled.s2.substitute(&unit),
    };
    vec![
        Check::new("tau0-relation", "scaled triple keeps M0 S1 S2 = 1", scaled.product().equal_mod(&one, &rules)),
        Check::new("tau0-eigenvalues", "eigenvalues of M0 scale by tau0", eig_ok),
        Check::new("tau0-identity", "tau0 = 1 is the identity", &at_one == data),
    ]
}
