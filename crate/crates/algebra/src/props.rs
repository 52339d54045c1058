//! Seeded property checks over random instances, for runtime verification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::check::Check;
use crate::matrix::Matrix;
use crate::rational::RF;
use crate::rules::RuleSet;

/// Random polynomial with up to three terms in the first `vars` variables.
pub fn random_poly<R: Rng>(rng: &mut R, vars: usize) -> RF {
    let mut p = RF::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut t = RF::int(rng.gen_range(-4..=4));
        for v in 0..vars {
            t = &t * &RF::var(v).pow(rng.gen_range(0..=2));
        }
        p = &p + &t;
    }
    p
}

/// Random small rational function in the first `vars` variables.
pub fn random_rf<R: Rng>(rng: &mut R, vars: usize) -> RF {
    let num = random_poly(rng, vars);
    let den = random_poly(rng, vars);
    if den.is_zero() {
        num
    } else {
        &num / &den
    }
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, r: i64) -> Matrix {
    let vals: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-r..=r)).collect();
    Matrix::from_fn(rows, cols, |i, j| RF::int(vals[i * cols + j]))
}

/// `p(M)` by Horner's rule on matrices.
pub fn eval_charpoly(m: &Matrix, rules: &RuleSet) -> Matrix {
    let p = m.charpoly(rules);
    let n = m.rows();
    let mut acc = Matrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m).add_scalar(c);
    }
    acc.reduce(rules)
}

fn first_failure(cases: usize, mut f: impl FnMut(usize) -> Option<String>) -> Option<String> {
    (0..cases).find_map(|k| f(k).map(|w| format!("case {k}: {w}")))
}

/// Field axioms, Cayley-Hamilton up to 3x3, rank-nullity and inverses on
/// `cases` random instances each.
pub fn run_checks(seed: u64, cases: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let none = RuleSet::empty();
    let mut out = Vec::new();

    let w = first_failure(cases, |_| {
        let (a, b, c) = (random_rf(&mut rng, 3), random_rf(&mut rng, 3), random_rf(&mut rng, 3));
        let ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a + &b) + &c == &a + &(&b + &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &(&a + &b) - &b == a
            && a.recip().map_or(a.is_zero(), |r| (&a * &r).is_one());
        (!ok).then(|| format!("{a:?}, {b:?}, {c:?}"))
    });
    out.push(Check::from_witness("ring-axioms", "field axioms on random rational functions", w));

    let w = first_failure(cases, |k| {
        let n = 1 + k % 3;
        let vals: Vec<RF> = (0..n * n).map(|_| random_poly(&mut rng, 2)).collect();
        let m = Matrix::from_fn(n, n, |i, j| vals[i * n + j].clone());
        if !eval_charpoly(&m, &none).is_zero() {
            return Some(format!("{n}x{n} matrix does not annihilate p"));
        }
        // second route: p(t) = det(t - M) at integer points
        let p = m.charpoly(&none);
        (-2..=2).map(RF::int).find(|t| p.eval(t) != m.neg().add_scalar(t).det(&none)).map(|t| format!("{n}x{n}: p({t:?}) != det"))
    });
    out.push(Check::from_witness("cayley-hamilton", "every matrix up to 3x3 annihilates its characteristic polynomial, which matches det(t - M)", w));

    let w = first_failure(cases, |_| {
        let (rows, cols, inner) = (rng.gen_range(1..=4), rng.gen_range(1..=4), rng.gen_range(1..=4));
        // products of thin factors give rank deficiency
        let m = random_int_matrix(&mut rng, rows, inner, 3).mul(&random_int_matrix(&mut rng, inner, cols, 3));
        let ker = m.nullspace(&none);
        let rank = m.rank(&none);
        let in_kernel = ker.iter().all(|v| m.mul_vec(v).iter().all(RF::is_zero));
        (rank + ker.len() != cols || !in_kernel || rank > inner.min(rows))
            .then(|| format!("{rows}x{cols}: rank {rank}, nullity {}", ker.len()))
    });
    out.push(Check::from_witness("rank-nullity", "rank plus nullity is the column count and kernels are annihilated", w));

    let w = first_failure(cases, |_| {
        let n = rng.gen_range(1..=3);
        let vals: Vec<RF> = (0..n * n).map(|_| random_poly(&mut rng, 2)).collect();
        let m = Matrix::from_fn(n, n, |i, j| vals[i * n + j].clone());
        match m.inverse(&none) {
            Ok(inv) => (!m.mul(&inv).equal_mod(&Matrix::identity(n), &none)).then(|| "M M^-1 != 1".to_string()),
            Err(_) => (!m.det(&none).is_zero()).then(|| "inverse refused with nonzero determinant".to_string()),
        }
    });
    out.push(Check::from_witness("inverse", "symbolic inverses multiply back to the identity", w));

    let w = first_failure(cases, |_| {
        let (p, q, r) = (random_rf(&mut rng, 2), random_rf(&mut rng, 2), random_rf(&mut rng, 2));
        if p.is_zero() || r.is_zero() {
            return None;
        }
        let lhs = &(&p * &q) / &(&p * &r);
        let rhs = &q / &r;
        (lhs != rhs).then(|| "common factor survived".to_string())
    });
    out.push(Check::from_witness("canonical-form", "common factors cancel to one normal form", w));
    out
}
