//! Seeded random checks that middle convolution composes in its parameter.

use okamoto_algebra::{Check, Matrix, RuleSet, Q, RF};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::invariants::{random_invertible, random_scalar, same_invariants};
use crate::mc::{middle_convolution_add, middle_convolution_mult, McOptions};
use crate::tuple::MatrixTuple;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn random_add_tuple<R: Rng>(rng: &mut R) -> MatrixTuple {
    let mats = (0..2)
        .map(|_| {
            let v: Vec<RF> = (0..4).map(|_| RF::int(rng.gen_range(-3..=3))).collect();
            Matrix::from_fn(2, 2, |i, j| v[2 * i + j].clone())
        })
        .collect();
    MatrixTuple::add(mats).expect("2x2 pair")
}

fn first_failure(cases: usize, mut f: impl FnMut() -> Result<bool, String>) -> Option<String> {
    (0..cases).find_map(|k| match f() {
        Ok(true) => None,
        Ok(false) => Some(format!("case {k}: invariants differ")),
        Err(e) => Some(format!("case {k}: {e}")),
    })
}

/// `MC_a MC_b ~ MC_ab`, `MC_1 ~ id` and the additive analogues, on `cases`
/// random pairs of 2x2 matrices each.
pub fn run_checks(seed: u64, cases: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let none = RuleSet::empty();
    let opts = McOptions::default();
    let mut out = Vec::new();

    let w = first_failure(cases, || {
        let t = MatrixTuple::mult(vec![random_invertible(&mut rng, 2, 3), random_invertible(&mut rng, 2, 3)])
            .map_err(|e| e.to_string())?;
        let n1 = random_scalar(&mut rng, &[q(1), q(-1)]);
        let n1v = n1.constant_value().expect("constant");
        let n2 = random_scalar(&mut rng, &[q(1), q(-1), n1v.recip()]);
        let mc = |t: &MatrixTuple, nu: &RF| middle_convolution_mult(t, nu, &opts, &none).map(|r| r.output);
        let twice = mc(&mc(&t, &n2).map_err(|e| e.to_string())?, &n1).map_err(|e| e.to_string())?;
        let once = mc(&t, &(&n1 * &n2)).map_err(|e| e.to_string())?;
        let id = mc(&t, &RF::one()).map_err(|e| e.to_string())?;
        Ok(same_invariants(&twice, &once, 3, &none) && same_invariants(&id, &t, 3, &none))
    });
    out.push(Check::from_witness(
        "mc-multiplicative",
        "two convolutions equal one with the product parameter, and parameter 1 is trivial",
        w,
    ));

    let w = first_failure(cases, || {
        let t = random_add_tuple(&mut rng);
        let l1 = random_scalar(&mut rng, &[q(0)]);
        let l1v = l1.constant_value().expect("constant");
        let l2 = random_scalar(&mut rng, &[q(0), -l1v]);
        let mc = |t: &MatrixTuple, mu: &RF| middle_convolution_add(t, mu, &opts, &none).map(|r| r.output);
        let twice = mc(&mc(&t, &l2).map_err(|e| e.to_string())?, &l1).map_err(|e| e.to_string())?;
        let once = mc(&t, &(&l1 + &l2)).map_err(|e| e.to_string())?;
        let id = mc(&t, &RF::zero()).map_err(|e| e.to_string())?;
        Ok(same_invariants(&twice, &once, 3, &none) && same_invariants(&id, &t, 3, &none))
    });
    out.push(Check::from_witness(
        "mc-additive",
        "two additive convolutions equal one with the summed parameter, and parameter 0 is trivial",
        w,
    ));
    out
}
