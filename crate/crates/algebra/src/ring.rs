use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;

/// Hard cap on the number of variables in one context.
pub const MAX_VARS: usize = 16;

/// Exponent vector of a Laurent monomial.
///
/// Ordered graded-lexicographically: total degree first, then lexicographic
/// with variable 0 the most significant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [i16; MAX_VARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; MAX_VARS]);

    pub fn var(i: usize) -> Mono {
        let mut m = Mono::ONE;
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn exp(&self, i: usize) -> i16 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        out
    }

    pub fn div(&self, other: &Mono) -> Mono {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a -= *b;
        }
        out
    }

    pub fn pow(&self, k: i32) -> Mono {
        let mut out = *self;
        for a in out.0.iter_mut() {
            *a = (*a as i32 * k) as i16;
        }
        out
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Mono) -> Mono {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        out
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Split into the parts with positive and negative exponents.
    pub fn split_sign(&self) -> (Mono, Mono) {
        let mut pos = Mono::ONE;
        let mut neg = Mono::ONE;
        for i in 0..MAX_VARS {
            let e = self.0[i];
            if e > 0 {
                pos.0[i] = e;
            } else if e < 0 {
                neg.0[i] = -e;
            }
        }
        (pos, neg)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.0[..last])
    }
}

/// Named variables of a computation, sorted alphabetically.
///
/// The index of a name is its slot in every [`Mono`] built over this ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Arc<Vec<String>>,
}

impl Ring {
    pub fn new<I, S>(names: I) -> Result<Ring, AlgebraError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v: Vec<String> = names.into_iter().map(Into::into).collect();
        v.sort();
        v.dedup();
        if v.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(v.len()));
        }
        for name in &v {
            if !is_identifier(name) {
                return Err(AlgebraError::BadIdentifier(name.clone()));
            }
        }
        Ok(Ring { names: Arc::new(v) })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Index of `name`, or an unknown-variable error.
    pub fn require(&self, name: &str) -> Result<usize, AlgebraError> {
        self.index(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    /// Slot map from this ring into `target` (every name must exist there).
    pub fn embedding_into(&self, target: &Ring) -> Result<Vec<usize>, AlgebraError> {
        self.names.iter().map(|n| target.require(n)).collect()
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x = Mono::var(0);
        let y = Mono::var(1);
        assert!(x > y);
        assert!(y.mul(&y) > x);
        assert!(x.mul(&y) > y.mul(&y));
    }

    #[test]
    fn ring_sorts_names() {
        let r = Ring::new(["iota1", "Z_O2", "Z_B2"]).unwrap();
        assert_eq!(r.names(), &["Z_B2", "Z_O2", "iota1"]);
        assert_eq!(r.index("iota1"), Some(2));
        assert!(Ring::new(["1x"]).is_err());
    }
}
