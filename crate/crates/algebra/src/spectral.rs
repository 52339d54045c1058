use std::fmt;

use crate::rational::RF;
use crate::rules::RuleSet;

/// Monic polynomial in a spectral variable with rational-function
/// coefficients, stored lowest degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct SpectralPoly {
    coeffs: Vec<RF>,
}

impl fmt::Debug for SpectralPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl SpectralPoly {
    pub fn new(coeffs: Vec<RF>) -> SpectralPoly {
        SpectralPoly { coeffs }
    }

    /// `prod (lambda - r)` over the given roots.
    pub fn from_roots(roots: &[RF]) -> SpectralPoly {
        let mut c = vec![RF::one()];
        for r in roots {
            let mut next = vec![RF::zero(); c.len() + 1];
            for (i, ci) in c.iter().enumerate() {
                next[i + 1] = &next[i + 1] + ci;
                next[i] = &next[i] - &(ci * r);
            }
            c = next;
        }
        SpectralPoly { coeffs: c }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[RF] {
        &self.coeffs
    }

    pub fn eval(&self, x: &RF) -> RF {
        let mut acc = RF::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn has_root(&self, x: &RF, rules: &RuleSet) -> bool {
        rules.is_zero(&self.eval(x))
    }

    /// Coefficientwise equality modulo `rules`.
    pub fn equal_mod(&self, other: &SpectralPoly, rules: &RuleSet) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| rules.equal(a, b))
    }

    /// True when the roots (with multiplicity) are exactly `roots`.
    pub fn has_spectrum(&self, roots: &[RF], rules: &RuleSet) -> bool {
        self.equal_mod(&SpectralPoly::from_roots(roots), rules)
    }
}
