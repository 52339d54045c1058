//! Multiplicative middle convolution realizing the Okamoto symmetry `w2`,
//! its closed-form output and the equivalent change of chart coordinates.

use okamoto_algebra::{Check, Matrix, RuleSet, SubstitutionRule, RF};
use okamoto_convolution::{addition_mult, middle_convolution_mult, MatrixTuple, McOptions, McResult};

use crate::chart::{ChartRing, MonodromyChart};
use crate::PainleveError;

/// Upper-right corner `(a, b; c, d)` of the basis completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corner {
    pub a: RF,
    pub b: RF,
    pub c: RF,
    pub d: RF,
}

impl Corner {
    /// The unique corner for which the output matches the shape of the
    /// rescaled input triple.
    pub fn standard(cr: &ChartRing) -> Corner {
        Corner {
            a: cr.e("-i1*i2*Z_G2*(1 + Z_G2)*(1 + Z_O2 + Z_O2*Z_B2)/Z_O2"),
            b: cr.e("-i1*i2*Z_G2^2*(1 + 1/Z_O2 + 1/(Z_O2*Z_G2))"),
            c: cr.e("i1*i2*(1 + 1/Z_B2 + 1/(Z_O2*Z_B2))"),
            d: cr.e("-i1*i2*Z_G2*(1 + 1/Z_O2 + 1/(Z_O2*Z_G2))"),
        }
    }
}

/// Completion whose first three columns span K and the fourth L.
pub fn completion(cr: &ChartRing, corner: &Corner) -> Matrix {
    let mut m = cr.matrix(&[
        &["i1^2/Z_O2", "0", "0", "-Z_B2*Z_G2", "0", "0"],
        &["1", "0", "0", "0", "0", "0"],
        &["0", "-1 - Z_B2/i2^2", "0", "Z_G2", "0", "0"],
        &["0", "1", "0", "-Z_G2", "0", "0"],
        &["0", "0", "-1", "0", "0", "0"],
        &["0", "0", "1 + i3^2/Z_G2", "1", "0", "0"],
    ]);
    m[(0, 4)] = corner.a.clone();
    m[(0, 5)] = corner.b.clone();
    m[(5, 4)] = corner.c.clone();
    m[(5, 5)] = corner.d.clone();
    m
}

/// `1 + Z_O2 + Z_O2 Z_B2` and its cyclic images.
fn s(cr: &ChartRing) -> [RF; 3] {
    [cr.e("1 + Z_O2 + Z_O2*Z_B2"), cr.e("1 + Z_G2 + Z_O2*Z_G2"), cr.e("1 + Z_B2 + Z_B2*Z_G2")]
}

/// Closed form of the transformed triple.
pub fn expected_triple(cr: &ChartRing) -> [Matrix; 3] {
    let [s1, s2, s3] = s(cr);
    let ctx = |src: &str| {
        let src = src.replace("S1", &format!("({})", cr.print(&s1)));
        let src = src.replace("S2", &format!("({})", cr.print(&s2)));
        cr.e(&src.replace("S3", &format!("({})", cr.print(&s3))))
    };
    let m = |rows: [[&str; 2]; 2]| {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| ctx(x)).collect()).collect())
    };
    let n2 = "-i2^2*S1/(Z_O2*Z_B2*S3)";
    [
        m([
            ["0", "i1^2*S2/(Z_O2*Z_G2*S1)"],
            ["-S1/(Z_B2*S2)", "1 + i1^2/(Z_O2*Z_B2*Z_G2)"],
        ]),
        m([
            [
                "1 + i2^2*(1 + Z_B2)*S2/(Z_O2*Z_B2*Z_G2*S3)",
                "(1 + Z_B2)*(S2/Z_G2)*(i2^2/(Z_O2*Z_B2*S3) + 1/S1)",
            ],
            [n2, n2],
        ]),
        m([
            ["i3^2/(Z_O2*Z_B2*Z_G2) + (1 + Z_G2)*S1/(Z_O2*S3)", "S2/(Z_O2*S3)"],
            [
                "-(1 + Z_G2)*S1*(i3^2*S3 + Z_B2*Z_G2*S2)/(Z_O2*Z_B2*Z_G2*S3*S2)",
                "-S2/(Z_O2*S3)",
            ],
        ]),
    ]
}

/// Lower-left entry of the transformed `M_inf`, up to sign.
pub fn z_tilde(cr: &ChartRing) -> RF {
    cr.e(
        "Z_O2*Z_G2*(1 + Z_O2 + Z_O2*Z_B2)*(1 + Z_O2*(1 + Z_B2 + Z_B2*Z_G2)/i1^2 \
         + Z_O2*Z_B2*(Z_B2*Z_G2*(1 + Z_G2)/(i1^2*i2^2*i3^2) \
         + (1 + Z_B2 + Z_B2*Z_G2)/(i1^2*i2^2)))/(1 + Z_G2 + Z_O2*Z_G2)",
    )
}

/// Closed form of `(M~_1 M~_2 M~_3)^{-1}`.
pub fn expected_inf(cr: &ChartRing) -> Matrix {
    Matrix::from_rows(vec![
        vec![cr.e("(Z_O2*Z_B2*Z_G2)^2/(i1^2*i2^2*i3^2)"), RF::zero()],
        vec![-&z_tilde(cr), cr.cycle()],
    ])
}

/// Images of `Z_O2, Z_B2, Z_G2` under the chart map.
pub fn zchange(cr: &ChartRing) -> [RF; 3] {
    let [s1, s2, s3] = s(cr);
    let [zo, zb, zg] = cr.z();
    [&s1 / &(&zb * &s2), &s3 / &(&zg * &s1), &s2 / &(&zo * &s3)]
}

/// Entrywise chart map on an expression even in every `i_k`: the chord
/// coordinates go through the cyclic change and `i_k^2 -> nu i_k^2`, with
/// `nu = 1/(Z_O2 Z_B2 Z_G2)` taken before the change.
pub fn chart_map(cr: &ChartRing, r: &RF) -> RF {
    let mut values: Vec<Option<RF>> = vec![None; cr.ring.len()];
    for (name, img) in ["Z_O2", "Z_B2", "Z_G2"].iter().zip(zchange(cr)) {
        values[cr.index(name)] = Some(img);
    }
    let moved = r.substitute(&values);
    let nu = cr.cycle().recip().expect("nonzero");
    let rules: Vec<SubstitutionRule> = ["i1", "i2", "i3"]
        .iter()
        .map(|n| SubstitutionRule::new(cr.index(n), 2, &nu * &cr.var(n).pow(2)))
        .collect();
    rules.iter().fold(moved, |acc, rule| rule.apply(&acc))
}

/// True when every exponent of `i1, i2, i3` is even.
pub fn is_even_in_iota(cr: &ChartRing, r: &RF) -> bool {
    let idx: Vec<usize> = ["i1", "i2", "i3"].iter().map(|n| cr.index(n)).collect();
    [r.numer(), r.denom()]
        .iter()
        .all(|p| p.terms().iter().all(|(m, _)| idx.iter().all(|&i| m.exp(i) % 2 == 0)))
}

/// Output of the realization together with its verification.
#[derive(Clone, Debug)]
pub struct W2Report {
    pub triple: [Matrix; 3],
    pub result: McResult,
    pub checks: Vec<Check>,
}

/// First entry where two lists of matrices differ modulo `rules`.
pub fn first_mismatch_in(
    a: &[Matrix],
    b: &[Matrix],
    rules: &RuleSet,
    print: impl Fn(&RF) -> String,
) -> Option<String> {
    for (k, (x, y)) in a.iter().zip(b).enumerate() {
        for i in 0..x.rows() {
            for j in 0..x.cols() {
                if !rules.equal(&x[(i, j)], &y[(i, j)]) {
                    return Some(format!(
                        "matrix {} entry ({},{}): got {}, expected {}",
                        k + 1,
                        i + 1,
                        j + 1,
                        print(&x[(i, j)]),
                        print(&y[(i, j)])
                    ));
                }
            }
        }
    }
    None
}

pub fn first_mismatch(a: &[Matrix], b: &[Matrix], rules: &RuleSet, cr: &ChartRing) -> Option<String> {
    first_mismatch_in(a, b, rules, |r| cr.print(r))
}

/// Rescale by `(i1, i2, i3)`, convolve with `nu = 1/(Z_O2 Z_B2 Z_G2)` in
/// the given completion and compare with every closed form.
pub fn realize(cr: &ChartRing, chart: &MonodromyChart, corner: &Corner) -> Result<W2Report, PainleveError> {
    let rules = cr.casimir();
    let input = MatrixTuple::mult(chart.m.to_vec())?;
    let hat = addition_mult(&input, &cr.iota())?;
    let nu = cr.cycle().recip().expect("nonzero");
    let opts = McOptions::with_completion(completion(cr, corner));
    let result = middle_convolution_mult(&hat, &nu, &opts, &rules)?;
    let out: Vec<Matrix> = result.output.matrices().to_vec();
    let mut checks = vec![
        Check::new("subspace-dims", "dim K = 3 and dim L = 1", {
            let s = &result.subspaces;
            s.dim_k() == 3 && s.dim_l() == 1 && result.direct
        }),
        Check::new("output-size", "output triple is 2x2", result.output.size() == 2),
    ];
    if result.output.size() != 2 {
        return Ok(W2Report { triple: chart.m.clone(), result, checks });
    }
    let triple = [out[0].clone(), out[1].clone(), out[2].clone()];
    let expected = expected_triple(cr);
    checks.push(Check::from_witness(
        "tildeN-entrywise",
        "convolved triple equals its closed form",
        first_mismatch(&triple, &expected, &rules, cr),
    ));
    // later checks are meaningless once an entry is off
    if !okamoto_algebra::all_pass(&checks) {
        return Ok(W2Report { triple, result, checks });
    }
    let nu_q = cr.q().map(|q| &q * &nu);
    let spectra = (0..3).all(|k| {
        triple[k].charpoly(&rules).has_spectrum(&[RF::one(), nu_q[k].clone()], &rules)
    });
    checks.push(Check::new("tildeN-spectra", "eigenvalues {1, nu i_k^2}", spectra));
    let inf = Matrix::product(&[&triple[0], &triple[1], &triple[2]], Default::default())
        .inverse(&rules)
        .map_err(PainleveError::from)?;
    checks.push(Check::from_witness(
        "tildeN-infinity",
        "inverse product equals its closed form",
        first_mismatch(&[inf], &[expected_inf(cr)], &rules, cr),
    ));
    let hat_m = chart.hat(cr);
    let even = hat_m.iter().all(|m| m.entries().iter().all(|x| is_even_in_iota(cr, x)));
    let mapped: Vec<Matrix> = hat_m.iter().map(|m| m.map(|x| chart_map(cr, x))).collect();
    checks.push(Check::from_witness(
        "zchange-entrywise",
        "chart map of the rescaled triple equals the convolved triple",
        if even { first_mismatch(&mapped, &triple, &rules, cr) } else { Some("odd power of i_k".into()) },
    ));
    Ok(W2Report { triple, result, checks })
}

/// `(i_k^2, nu) -> (nu i_k^2, 1/nu)` on free symbols.
pub fn param_map(q: &[RF; 3], nu: &RF) -> ([RF; 3], RF) {
    (q.clone().map(|x| &x * nu), nu.recip().expect("nonzero"))
}
