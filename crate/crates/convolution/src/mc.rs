use okamoto_algebra::{par, Exec, Matrix, RuleSet, RF};

use crate::tuple::{Flavor, MatrixTuple};
use crate::ConvolutionError;

/// Block matrices `N_i` (multiplicative) of size `n p`.
///
/// Block row i of `N_i` is `(nu(M_1 - 1), ..., nu(M_{i-1} - 1), nu M_i,
/// M_{i+1} - 1, ..., M_p - 1)`; every other block row is the identity.
pub fn convolution_mult(t: &MatrixTuple, nu: &RF) -> Result<Vec<Matrix>, ConvolutionError> {
    t.require(Flavor::Mult)?;
    if nu.is_zero() {
        return Err(ConvolutionError::ZeroScalar(0));
    }
    let (n, p) = (t.size(), t.len());
    let one = Matrix::identity(n);
    let minus_one: Vec<Matrix> = t.matrices().iter().map(|m| m.sub(&one)).collect();
    Ok((0..p)
        .map(|i| {
            let mut big = Matrix::identity(n * p);
            for j in 0..p {
                let block = match j.cmp(&i) {
                    std::cmp::Ordering::Less => minus_one[j].scale(nu),
                    std::cmp::Ordering::Equal => t.get(i).scale(nu),
                    std::cmp::Ordering::Greater => minus_one[j].clone(),
                };
                big.set_block(i * n, j * n, &block);
            }
            big
        })
        .collect())
}

/// Block matrices `B_i` (additive): zero outside block row i, which reads
/// `(A_1, ..., A_i + mu, ..., A_p)`.
pub fn convolution_add(t: &MatrixTuple, mu: &RF) -> Result<Vec<Matrix>, ConvolutionError> {
    t.require(Flavor::Add)?;
    let (n, p) = (t.size(), t.len());
    Ok((0..p)
        .map(|i| {
            let mut big = Matrix::zeros(n * p, n * p);
            for j in 0..p {
                let block = if j == i { t.get(j).add_scalar(mu) } else { t.get(j).clone() };
                big.set_block(i * n, j * n, &block);
            }
            big
        })
        .collect())
}

/// Invariant subspaces of a convolved tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspacePair {
    /// `(i, v)`: v is supported on block i.
    pub k: Vec<(usize, Vec<RF>)>,
    pub l: Vec<Vec<RF>>,
}

impl SubspacePair {
    pub fn dim_k(&self) -> usize {
        self.k.len()
    }

    pub fn dim_l(&self) -> usize {
        self.l.len()
    }

    pub fn k_vectors(&self) -> impl Iterator<Item = &Vec<RF>> {
        self.k.iter().map(|(_, v)| v)
    }
}

fn embed(block: usize, n: usize, p: usize, v: &[RF]) -> Vec<RF> {
    let mut out = vec![RF::zero(); n * p];
    out[block * n..(block + 1) * n].clone_from_slice(v);
    out
}

fn k_from(blocks: &[Matrix], n: usize, rules: &RuleSet) -> Vec<(usize, Vec<RF>)> {
    let p = blocks.len();
    let mut k = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for v in b.nullspace(rules) {
            k.push((i, embed(i, n, p, &v)));
        }
    }
    k
}

/// Common kernel of a list of matrices.
fn common_kernel(ms: &[Matrix], rules: &RuleSet) -> Vec<Vec<RF>> {
    let cols = ms[0].cols();
    let rows: usize = ms.iter().map(|m| m.rows()).sum();
    let mut stacked = Matrix::zeros(rows, cols);
    let mut r = 0;
    for m in ms {
        stacked.set_block(r, 0, m);
        r += m.rows();
    }
    stacked.nullspace(rules)
}

/// K and L for the multiplicative convolution.
///
/// For `nu != 1`, L is generated by `(M_2...M_p v, M_3...M_p v, ..., v)`
/// with `v` in `ker(nu M_1...M_p - 1)`; for `nu = 1`, L is computed as the
/// common fixed space of the `N_i`.
pub fn invariant_subspaces_mult(
    t: &MatrixTuple,
    nu: &RF,
    rules: &RuleSet,
) -> Result<SubspacePair, ConvolutionError> {
    t.require(Flavor::Mult)?;
    let (n, p) = (t.size(), t.len());
    let one = Matrix::identity(n);
    let minus_one: Vec<Matrix> = t.matrices().iter().map(|m| m.sub(&one)).collect();
    let k = k_from(&minus_one, n, rules);
    let l = if rules.equal(nu, &RF::one()) {
        let ns = convolution_mult(t, nu)?;
        let big_one = Matrix::identity(n * p);
        let shifted: Vec<Matrix> = ns.iter().map(|m| m.sub(&big_one)).collect();
        common_kernel(&shifted, rules)
    } else {
        let gen = t.product().scale(nu).sub(&one);
        gen.nullspace(rules)
            .into_iter()
            .map(|v| {
                let mut out = vec![RF::zero(); n * p];
                let mut w = v.clone();
                for i in (0..p).rev() {
                    out[i * n..(i + 1) * n].clone_from_slice(&w);
                    w = t.get(i).mul_vec(&w);
                }
                out.iter().map(|x| rules.reduce(x)).collect()
            })
            .collect()
    };
    Ok(SubspacePair { k, l })
}

/// K and L for the additive convolution.
///
/// For `mu != 0`, L is generated by `(v, ..., v)` with `v` in
/// `ker(A_1 + ... + A_p + mu)`; for `mu = 0`, L = `ker(B_1 + ... + B_p)`.
pub fn invariant_subspaces_add(
    t: &MatrixTuple,
    mu: &RF,
    rules: &RuleSet,
) -> Result<SubspacePair, ConvolutionError> {
    t.require(Flavor::Add)?;
    let (n, p) = (t.size(), t.len());
    let k = k_from(t.matrices(), n, rules);
    let l = if rules.is_zero(mu) {
        let bs = convolution_add(t, mu)?;
        let mut sum = Matrix::zeros(n * p, n * p);
        for b in &bs {
            sum = sum.add(b);
        }
        sum.nullspace(rules)
    } else {
        t.sum()
            .add_scalar(mu)
            .nullspace(rules)
            .into_iter()
            .map(|v| (0..p).flat_map(|_| v.iter().cloned()).collect())
            .collect()
    };
    Ok(SubspacePair { k, l })
}

/// How to build the quotient.
#[derive(Clone, Debug)]
#[derive(Default)]
pub struct McOptions {
    /// Basis completion whose leading columns span the quotiented subspace.
    pub completion: Option<Matrix>,
    /// Quotient by K alone, leaving L inside the output.
    pub k_only: bool,
    pub exec: Exec,
}


impl McOptions {
    pub fn with_completion(c: Matrix) -> McOptions {
        McOptions { completion: Some(c), ..McOptions::default() }
    }
}

/// Full record of one middle convolution.
#[derive(Clone, Debug)]
pub struct McResult {
    pub output: MatrixTuple,
    pub subspaces: SubspacePair,
    pub completion: Matrix,
    /// The convolved matrices after conjugation by the completion.
    pub conjugated: Vec<Matrix>,
    /// Number of leading columns quotiented out.
    pub quotient_dim: usize,
    /// Whether the quotiented subspaces met only in zero.
    pub direct: bool,
    /// Whether the upper-right coupling blocks vanish too.
    pub decoupled: bool,
}

/// Greedy completion: the given columns, then unit vectors in increasing
/// index order whenever they raise the rank.
pub fn auto_completion(leading: &[Vec<RF>], dim: usize, rules: &RuleSet) -> Matrix {
    let mut cols: Vec<Vec<RF>> = leading.to_vec();
    let mut rank = columns_rank(&cols, dim, rules);
    for e in 0..dim {
        if cols.len() == dim {
            break;
        }
        let mut unit = vec![RF::zero(); dim];
        unit[e] = RF::one();
        cols.push(unit);
        let r = columns_rank(&cols, dim, rules);
        if r > rank {
            rank = r;
        } else {
            cols.pop();
        }
    }
    Matrix::from_fn(dim, cols.len(), |i, j| cols[j][i].clone())
}

fn columns_rank(cols: &[Vec<RF>], dim: usize, rules: &RuleSet) -> usize {
    if cols.is_empty() {
        return 0;
    }
    Matrix::from_fn(dim, cols.len(), |i, j| cols[j][i].clone()).rank(rules)
}

fn quotient(
    mats: Vec<Matrix>,
    flavor: Flavor,
    subspaces: SubspacePair,
    opts: &McOptions,
    rules: &RuleSet,
) -> Result<McResult, ConvolutionError> {
    let dim = mats.first().map_or(0, |m| m.rows());
    let mut candidates: Vec<Vec<RF>> = subspaces.k_vectors().cloned().collect();
    if !opts.k_only {
        candidates.extend(subspaces.l.iter().cloned());
    }
    // basis of K + L, keeping vectors in order while they raise the rank
    let mut leading: Vec<Vec<RF>> = Vec::new();
    for v in candidates.iter() {
        leading.push(v.clone());
        if columns_rank(&leading, dim, rules) < leading.len() {
            leading.pop();
        }
    }
    let d = leading.len();
    let direct = d == candidates.len();
    let completion = match &opts.completion {
        Some(c) => {
            if c.rows() != dim || c.cols() != dim {
                return Err(ConvolutionError::Shape(format!("completion must be {dim}x{dim}")));
            }
            // leading columns must span exactly the same space
            let lead = c.submatrix(0, 0, dim, d);
            let both: Vec<Vec<RF>> =
                (0..d).map(|j| lead.col(j)).chain(leading.iter().cloned()).collect();
            if columns_rank(&both, dim, rules) != d || lead.rank(rules) != d {
                return Err(ConvolutionError::CompletionSpan);
            }
            c.clone()
        }
        None => auto_completion(&leading, dim, rules),
    };
    let inv = completion.inverse(rules).map_err(|_| ConvolutionError::CompletionSingular)?;
    let conjugated: Vec<Matrix> =
        par::map(opts.exec, &mats, |m| inv.mul(m).mul(&completion).reduce(rules));
    let q = dim - d;
    let mut decoupled = true;
    for (i, c) in conjugated.iter().enumerate() {
        if !c.submatrix(d, 0, q, d).is_zero_mod(rules) {
            return Err(ConvolutionError::NotInvariant(i));
        }
        if !c.submatrix(0, d, d, q).is_zero_mod(rules) {
            decoupled = false;
        }
    }
    let out: Vec<Matrix> = conjugated.iter().map(|c| c.submatrix(d, d, q, q)).collect();
    let output = if q == 0 {
        MatrixTuple::empty(flavor, out.len())
    } else {
        MatrixTuple::new(flavor, out)?
    };
    Ok(McResult { output, subspaces, completion, conjugated, quotient_dim: d, direct, decoupled })
}

/// Multiplicative middle convolution.
pub fn middle_convolution_mult(
    t: &MatrixTuple,
    nu: &RF,
    opts: &McOptions,
    rules: &RuleSet,
) -> Result<McResult, ConvolutionError> {
    let ns = convolution_mult(t, nu)?;
    let sub = invariant_subspaces_mult(t, nu, rules)?;
    quotient(ns, Flavor::Mult, sub, opts, rules)
}

/// Additive middle convolution.
pub fn middle_convolution_add(
    t: &MatrixTuple,
    mu: &RF,
    opts: &McOptions,
    rules: &RuleSet,
) -> Result<McResult, ConvolutionError> {
    let bs = convolution_add(t, mu)?;
    let sub = invariant_subspaces_add(t, mu, rules)?;
    quotient(bs, Flavor::Add, sub, opts, rules)
}
