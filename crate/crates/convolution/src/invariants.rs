//! Conjugacy invariants of tuples, for comparing convolutions that agree
//! only up to a change of basis.

use okamoto_algebra::{Matrix, RuleSet, SpectralPoly, Q, RF};
use rand::Rng;

use crate::tuple::MatrixTuple;

/// Characteristic polynomial of every member.
pub fn char_polys(t: &MatrixTuple, rules: &RuleSet) -> Vec<SpectralPoly> {
    t.matrices().iter().map(|m| m.charpoly(rules)).collect()
}

/// Traces of all products `M_{w_1} ... M_{w_k}` for words of length
/// `1..=max_len`, in lexicographic word order.
pub fn trace_words(t: &MatrixTuple, max_len: usize) -> Vec<RF> {
    let mut out = Vec::new();
    let mut layer: Vec<Matrix> = t.matrices().to_vec();
    for len in 1..=max_len {
        out.extend(layer.iter().map(Matrix::trace));
        if len == max_len {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|w| t.matrices().iter().map(move |m| w.mul(m)))
            .collect();
    }
    out
}

/// Same size, same characteristic polynomials, same short trace words.
pub fn same_invariants(a: &MatrixTuple, b: &MatrixTuple, max_len: usize, rules: &RuleSet) -> bool {
    if a.size() != b.size() || a.len() != b.len() {
        return false;
    }
    let pa = char_polys(a, rules);
    let pb = char_polys(b, rules);
    if !pa.iter().zip(&pb).all(|(x, y)| x.equal_mod(y, rules)) {
        return false;
    }
    let ta = trace_words(a, max_len);
    let tb = trace_words(b, max_len);
    ta.iter().zip(&tb).all(|(x, y)| rules.equal(x, y))
}

/// Random integer matrix with entries in `-r..=r` and nonzero determinant.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize, r: i64) -> Matrix {
    loop {
        let vals: Vec<RF> = (0..n * n).map(|_| RF::int(rng.gen_range(-r..=r))).collect();
        let m = Matrix::from_fn(n, n, |i, j| vals[i * n + j].clone());
        if !m.det(&RuleSet::empty()).is_zero() {
            return m;
        }
    }
}

/// Random nonzero rational `a/b` with small numerator and denominator,
/// avoiding the listed values.
pub fn random_scalar<R: Rng>(rng: &mut R, avoid: &[Q]) -> RF {
    loop {
        let a: i64 = rng.gen_range(-7..=7);
        let b: i64 = rng.gen_range(1..=5);
        if a == 0 {
            continue;
        }
        let q = Q::new(a.into(), b.into());
        if !avoid.contains(&q) {
            return RF::constant(q);
        }
    }
}
