use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::AlgebraError;
use crate::par::{self, Exec};
use crate::poly::Q;
use crate::rational::RF;
use crate::rules::RuleSet;
use crate::spectral::SpectralPoly;

/// Dense row-major matrix over the rational function field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RF>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for i in 0..self.rows {
            l.entry(&self.row(i));
        }
        l.finish()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = RF;
    fn index(&self, (i, j): (usize, usize)) -> &RF {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RF {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![RF::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = RF::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &RF) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RF>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> RF) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn column(v: Vec<RF>) -> Matrix {
        Matrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vec<RF> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<RF> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[RF] {
        &self.data
    }

    pub fn map(&self, f: impl Fn(&RF) -> RF) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn par_map(&self, exec: Exec, f: impl Fn(&RF) -> RF + Sync + Send) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: par::map(exec, &self.data, f) }
    }

    pub fn reduce(&self, rules: &RuleSet) -> Matrix {
        if rules.is_empty() {
            return self.clone();
        }
        self.map(|x| rules.reduce(x))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Rows and columns picked by index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn hstack(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks[0].rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut c = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            m.set_block(0, c, b);
            c += b.cols;
        }
        m
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            m.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_zero_mod(&self, rules: &RuleSet) -> bool {
        self.data.iter().all(|x| rules.is_zero(x))
    }

    pub fn equal_mod(&self, other: &Matrix, rules: &RuleSet) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| rules.equal(a, b))
    }

    /// Entrywise equality modulo `rules`, checked on the chosen executor.
    pub fn equal_mod_exec(&self, other: &Matrix, rules: &RuleSet, exec: Exec) -> bool {
        if self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        let pairs: Vec<(&RF, &RF)> = self.data.iter().zip(&other.data).collect();
        par::all(exec, &pairs, |(a, b)| rules.equal(a, b))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.map(|x| -x)
    }

    pub fn scale(&self, c: &RF) -> Matrix {
        self.map(|x| x * c)
    }

    pub fn scale_q(&self, c: &Q) -> Matrix {
        self.map(|x| x.scale(c))
    }

    pub fn add_scalar(&self, c: &RF) -> Matrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] = &m[(i, i)] + c;
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.mul_with(other, Exec::Sequential)
    }

    /// Product with entries computed on the chosen executor.
    pub fn mul_with(&self, other: &Matrix, exec: Exec) -> Matrix {
        assert_eq!(self.cols, other.rows, "mul shape");
        let (n, m, k) = (self.rows, other.cols, self.cols);
        let data = par::map_range(exec, n * m, |idx| {
            let (i, j) = (idx / m, idx % m);
            let mut acc = RF::zero();
            for t in 0..k {
                let a = &self[(i, t)];
                if a.is_zero() {
                    continue;
                }
                let b = &other[(t, j)];
                if b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            acc
        });
        Matrix { rows: n, cols: m, data }
    }

    pub fn mul_vec(&self, v: &[RF]) -> Vec<RF> {
        assert_eq!(self.cols, v.len(), "mul_vec shape");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn product(ms: &[&Matrix], exec: Exec) -> Matrix {
        let mut it = ms.iter();
        let first = (*it.next().expect("empty product")).clone();
        it.fold(first, |acc, m| acc.mul_with(m, exec))
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut r = Matrix::identity(self.rows);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    pub fn trace(&self) -> RF {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Reduced row echelon form modulo `rules`; returns pivot columns and
    /// the determinant factor (product of pivots with row-swap signs).
    fn rref(&self, rules: &RuleSet, augment: Option<&Matrix>) -> (Matrix, Vec<usize>, RF) {
        let width = self.cols + augment.map_or(0, |a| a.cols);
        let mut m = match augment {
            Some(a) => Matrix::hstack(&[self, a]),
            None => self.clone(),
        };
        m = m.reduce(rules);
        let mut pivots = Vec::new();
        let mut det = RF::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // simplest entry that is nonzero modulo the rules
            let mut best: Option<(usize, usize)> = None;
            for i in r..self.rows {
                let e = &m[(i, c)];
                if rules.is_zero(e) {
                    continue;
                }
                let cost = e.numer().len() + e.denom().len();
                if best.is_none_or(|(_, bc)| cost < bc) {
                    best = Some((i, cost));
                }
            }
            let Some((p, _)) = best else { continue };
            if p != r {
                for j in 0..width {
                    m.data.swap(p * width + j, r * width + j);
                }
                det = -det;
            }
            let piv = m[(r, c)].clone();
            det = &det * &piv;
            let inv = piv.recip().expect("pivot is nonzero");
            for j in 0..width {
                m[(r, j)] = rules.reduce(&(&m[(r, j)] * &inv));
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = m[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..width {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    m[(i, j)] = rules.reduce(&(&m[(i, j)] - &(&f * &m[(r, j)])));
                }
                m[(i, c)] = RF::zero();
            }
            pivots.push(c);
            r += 1;
        }
        if pivots.len() < self.rows.min(self.cols) || !self.is_square() {
            det = RF::zero();
        }
        (m, pivots, rules.reduce(&det))
    }

    pub fn rank(&self, rules: &RuleSet) -> usize {
        self.rref(rules, None).1.len()
    }

    pub fn det(&self, rules: &RuleSet) -> RF {
        assert!(self.is_square(), "det of non-square matrix");
        if self.rows == 0 {
            return RF::one();
        }
        if self.rows <= 3 && rules.is_empty() {
            return self.det_cofactor();
        }
        self.rref(rules, None).2
    }

    fn det_cofactor(&self) -> RF {
        let a = |i, j| &self[(i, j)];
        match self.rows {
            1 => a(0, 0).clone(),
            2 => &(a(0, 0) * a(1, 1)) - &(a(0, 1) * a(1, 0)),
            _ => {
                let m0 = &(a(1, 1) * a(2, 2)) - &(a(1, 2) * a(2, 1));
                let m1 = &(a(1, 0) * a(2, 2)) - &(a(1, 2) * a(2, 0));
                let m2 = &(a(1, 0) * a(2, 1)) - &(a(1, 1) * a(2, 0));
                &(&(a(0, 0) * &m0) - &(a(0, 1) * &m1)) + &(a(0, 2) * &m2)
            }
        }
    }

    /// Inverse by Gauss-Jordan elimination modulo `rules`.
    pub fn inverse(&self, rules: &RuleSet) -> Result<Matrix, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::Shape(format!("{}x{} has no inverse", self.rows, self.cols)));
        }
        let n = self.rows;
        let (m, pivots, _) = self.rref(rules, Some(&Matrix::identity(n)));
        if pivots.len() < n {
            return Err(AlgebraError::Singular { det: "0".into() });
        }
        Ok(m.submatrix(0, n, n, n))
    }

    /// Basis of the right kernel, one column vector per free variable.
    pub fn nullspace(&self, rules: &RuleSet) -> Vec<Vec<RF>> {
        let (m, pivots, _) = self.rref(rules, None);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![RF::zero(); self.cols];
                v[f] = RF::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&m[(r, f)];
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial det(lambda - A) by Faddeev-LeVerrier.
    pub fn charpoly(&self, rules: &RuleSet) -> SpectralPoly {
        assert!(self.is_square(), "charpoly of non-square matrix");
        let n = self.rows;
        let a = self.reduce(rules);
        let mut coeffs = vec![RF::zero(); n + 1];
        coeffs[n] = RF::one();
        let mut mk = Matrix::zeros(n, n);
        for k in 1..=n {
            mk = a.mul(&mk).add_scalar(&coeffs[n - k + 1]).reduce(rules);
            let t = a.mul(&mk).trace();
            coeffs[n - k] = rules.reduce(&t.scale(&Q::new((-1).into(), (k as i64).into())));
        }
        SpectralPoly::new(coeffs)
    }

    /// `p^{-1} self p`.
    pub fn conjugate_by(&self, p: &Matrix, rules: &RuleSet) -> Result<Matrix, AlgebraError> {
        Ok(p.inverse(rules)?.mul(self).mul(p).reduce(rules))
    }

    /// Doolittle factorization `self = L U` without pivoting, with L unit
    /// lower triangular. `None` when a leading minor vanishes.
    pub fn lu(&self, rules: &RuleSet) -> Option<(Matrix, Matrix)> {
        assert!(self.is_square(), "lu of non-square matrix");
        let n = self.rows;
        let mut l = Matrix::identity(n);
        let mut u = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut s = self[(i, j)].clone();
                for k in 0..i {
                    s = &s - &(&l[(i, k)] * &u[(k, j)]);
                }
                u[(i, j)] = rules.reduce(&s);
            }
            if rules.is_zero(&u[(i, i)]) {
                return None;
            }
            for j in i + 1..n {
                let mut s = self[(j, i)].clone();
                for k in 0..i {
                    s = &s - &(&l[(j, k)] * &u[(k, i)]);
                }
                l[(j, i)] = rules.reduce(&(&s / &u[(i, i)]));
            }
        }
        Some((l, u))
    }

    /// Anti-diagonal reversal permutation.
    pub fn reversal(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |i, j| if i + j + 1 == n { RF::one() } else { RF::zero() })
    }

    pub fn substitute(&self, values: &[Option<RF>]) -> Matrix {
        self.map(|x| x.substitute(values))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> RF {
        RF::var(i)
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(vec![
            vec![x(0), RF::one(), RF::zero()],
            vec![RF::int(2), x(1), RF::one()],
            vec![RF::zero(), x(0), RF::int(3)],
        ]);
        let inv = m.inverse(&RuleSet::empty()).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert_eq!(m.det(&RuleSet::empty()), m.rref(&RuleSet::empty(), None).2);
    }

    #[test]
    fn cayley_hamilton_2x2() {
        let m = Matrix::from_rows(vec![vec![x(0), x(1)], vec![RF::int(1), x(2)]]);
        let cp = m.charpoly(&RuleSet::empty());
        let c = cp.coeffs();
        let val = m.mul(&m).add(&m.scale(&c[1])).add_scalar(&c[0]);
        assert!(val.is_zero());
    }

    #[test]
    fn lu_reproduces() {
        let m = Matrix::from_rows(vec![vec![x(0), x(1)], vec![RF::int(1), x(2)]]);
        let (l, u) = m.lu(&RuleSet::empty()).unwrap();
        assert_eq!(l.mul(&u), m);
    }
}
