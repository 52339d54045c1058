use okamoto_algebra::{Exec, Matrix, RuleSet, RF};

use crate::ConvolutionError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Monodromy-type tuples, convolved with a multiplicative parameter.
    Mult,
    /// Residue-type tuples, convolved with an additive parameter.
    Add,
}

/// Ordered tuple of square matrices of a common size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTuple {
    pub flavor: Flavor,
    mats: Vec<Matrix>,
    size: usize,
}

impl MatrixTuple {
    pub fn new(flavor: Flavor, mats: Vec<Matrix>) -> Result<MatrixTuple, ConvolutionError> {
        let size = mats.first().map_or(0, |m| m.rows());
        for (i, m) in mats.iter().enumerate() {
            if !m.is_square() || m.rows() != size {
                return Err(ConvolutionError::Shape(format!(
                    "matrix {i} is {}x{}, expected {size}x{size}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(MatrixTuple { flavor, mats, size })
    }

    pub fn mult(mats: Vec<Matrix>) -> Result<MatrixTuple, ConvolutionError> {
        MatrixTuple::new(Flavor::Mult, mats)
    }

    pub fn add(mats: Vec<Matrix>) -> Result<MatrixTuple, ConvolutionError> {
        MatrixTuple::new(Flavor::Add, mats)
    }

    /// Tuple of `p` matrices of size 0.
    pub fn empty(flavor: Flavor, p: usize) -> MatrixTuple {
        MatrixTuple { flavor, mats: vec![Matrix::zeros(0, 0); p], size: 0 }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn get(&self, i: usize) -> &Matrix {
        &self.mats[i]
    }

    pub fn into_matrices(self) -> Vec<Matrix> {
        self.mats
    }

    pub fn map(&self, exec: Exec, f: impl Fn(&Matrix) -> Matrix + Sync + Send) -> MatrixTuple {
        let mats = okamoto_algebra::par::map(exec, &self.mats, f);
        MatrixTuple { flavor: self.flavor, mats, size: self.size }
    }

    pub fn require(&self, flavor: Flavor) -> Result<(), ConvolutionError> {
        if self.flavor == flavor {
            Ok(())
        } else {
            Err(ConvolutionError::Flavor { expected: flavor, found: self.flavor })
        }
    }

    /// `M_1 M_2 ... M_p`.
    pub fn product(&self) -> Matrix {
        let mut acc = Matrix::identity(self.size);
        for m in &self.mats {
            acc = acc.mul(m);
        }
        acc
    }

    /// `A_1 + ... + A_p`.
    pub fn sum(&self) -> Matrix {
        let mut acc = Matrix::zeros(self.size, self.size);
        for m in &self.mats {
            acc = acc.add(m);
        }
        acc
    }

    /// The matrix at infinity: `(M_1...M_p)^{-1}` or `-(A_1 + ... + A_p)`.
    pub fn at_infinity(&self, rules: &RuleSet) -> Result<Matrix, ConvolutionError> {
        match self.flavor {
            Flavor::Mult => Ok(self.product().inverse(rules)?),
            Flavor::Add => Ok(self.sum().neg()),
        }
    }

    pub fn reduce(&self, rules: &RuleSet) -> MatrixTuple {
        self.map(Exec::Sequential, |m| m.reduce(rules))
    }

    pub fn equal_mod(&self, other: &MatrixTuple, rules: &RuleSet) -> bool {
        self.mats.len() == other.mats.len()
            && self.mats.iter().zip(&other.mats).all(|(a, b)| a.equal_mod(b, rules))
    }
}

/// `(tau_1 M_1, ..., tau_p M_p)`.
pub fn addition_mult(t: &MatrixTuple, tau: &[RF]) -> Result<MatrixTuple, ConvolutionError> {
    t.require(Flavor::Mult)?;
    check_len(t, tau)?;
    if let Some(i) = tau.iter().position(|x| x.is_zero()) {
        return Err(ConvolutionError::ZeroScalar(i));
    }
    let mats = t.mats.iter().zip(tau).map(|(m, s)| m.scale(s)).collect();
    MatrixTuple::new(Flavor::Mult, mats)
}

/// `(A_1 + s_1, ..., A_p + s_p)`.
pub fn addition_add(t: &MatrixTuple, sigma: &[RF]) -> Result<MatrixTuple, ConvolutionError> {
    t.require(Flavor::Add)?;
    check_len(t, sigma)?;
    let mats = t.mats.iter().zip(sigma).map(|(m, s)| m.add_scalar(s)).collect();
    MatrixTuple::new(Flavor::Add, mats)
}

fn check_len(t: &MatrixTuple, s: &[RF]) -> Result<(), ConvolutionError> {
    if s.len() != t.len() {
        return Err(ConvolutionError::Shape(format!("{} scalars for {} matrices", s.len(), t.len())));
    }
    Ok(())
}
