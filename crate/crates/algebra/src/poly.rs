use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{Mono, MAX_VARS};

pub type Q = BigRational;

/// Sparse Laurent polynomial over Q.
///
/// Terms are kept sorted by decreasing monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, Q)>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list()
            .entries(self.terms.iter().map(|(m, c)| (c.to_string(), m)))
            .finish()
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::ONE, c)] }
        }
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(Q::from_integer(BigInt::from(n)))
    }

    pub fn var(i: usize) -> Poly {
        Poly::monomial(Mono::var(i), Q::one())
    }

    pub fn monomial(m: Mono, c: Q) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Build from arbitrary terms; merges duplicates and drops zeros.
    pub fn from_terms(mut terms: Vec<(Mono, Q)>) -> Poly {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono, Q)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, Q)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn lead(&self) -> Option<&(Mono, Q)> {
        self.terms.first()
    }

    pub fn lead_coeff(&self) -> Q {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Q::zero)
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_nonneg())
    }

    pub fn total_degree(&self) -> i32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> i16 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, var: usize) -> i16 {
        self.terms.iter().map(|(m, _)| m.exp(var)).min().unwrap_or(0)
    }

    /// Bitmask of variables occurring with nonzero exponent.
    pub fn support(&self) -> u32 {
        let mut mask = 0u32;
        for (m, _) in &self.terms {
            for i in 0..MAX_VARS {
                if m.exp(i) != 0 {
                    mask |= 1 << i;
                }
            }
        }
        mask
    }

    /// Componentwise minimum of all exponents (the monomial content).
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::ONE,
            Some((m, _)) => it.fold(*m, |acc, (n, _)| acc.meet(n)),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        // multiplication by a monomial preserves grlex order
        Poly { terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect() }
    }

    pub fn div_mono(&self, m: &Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(n, c)| (n.div(m), c.clone())).collect() }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    ///
    /// Both operands must be genuine polynomials (nonnegative exponents).
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = d.terms[0].clone();
        if d.terms.len() == 1 {
            if !self.terms.iter().all(|(m, _)| dm.divides(m)) {
                return None;
            }
            let inv = dc.recip();
            return Some(Poly {
                terms: self.terms.iter().map(|(m, c)| (m.div(&dm), c * &inv)).collect(),
            });
        }
        let dinv = dc.recip();
        let mut rem = self.clone();
        let mut quot: Vec<(Mono, Q)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            if !dm.divides(&rm) {
                return None;
            }
            let qm = rm.div(&dm);
            let qc = &rc * &dinv;
            rem = rem.sub_scaled_shift(d, &qm, &qc);
            quot.push((qm, qc));
        }
        // quotient terms are produced in decreasing order
        Some(Poly { terms: quot })
    }

    /// `self - c * m * other`, merging in one pass.
    fn sub_scaled_shift(&self, other: &Poly, m: &Mono, c: &Q) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(n, d)| (n.mul(m), d * c)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (n, d) = b.next().unwrap();
                    out.push((n, -d));
                }
                (Some((am, _)), Some((bm, _))) => match am.cmp(bm) {
                    std::cmp::Ordering::Greater => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Less => {
                        let (n, d) = b.next().unwrap();
                        out.push((n, -d));
                    }
                    std::cmp::Ordering::Equal => {
                        let (am, ac) = a.next().unwrap();
                        let (_, bc) = b.next().unwrap();
                        let s = ac - bc;
                        if !s.is_zero() {
                            out.push((*am, s));
                        }
                    }
                },
            }
        }
        Poly { terms: out }
    }

    /// Coefficients with respect to one variable, keyed by exponent.
    pub fn coefficients_in(&self, var: usize) -> BTreeMap<i16, Poly> {
        let mut buckets: BTreeMap<i16, Vec<(Mono, Q)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let mut rest = *m;
            rest.0[var] = 0;
            buckets.entry(e).or_default().push((rest, c.clone()));
        }
        buckets.into_iter().map(|(e, t)| (e, Poly::from_terms(t))).collect()
    }

    /// Dense univariate view in `var`: index k holds the coefficient of var^k.
    pub fn to_univariate(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var).max(0) as usize;
        let mut out = vec![Poly::zero(); deg + 1];
        for (e, c) in self.coefficients_in(var) {
            out[e as usize] = c;
        }
        out
    }

    pub fn from_univariate(var: usize, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let shift = Mono::var(var).pow(k as i32);
            for (m, q) in &c.terms {
                terms.push((m.mul(&shift), q.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Scale to integer coefficients with content 1 and positive leading
    /// coefficient. Returns the scalar `s` with `self = s * result`.
    pub fn primitive_integer(&self) -> (Q, Poly) {
        if self.is_zero() {
            return (Q::one(), Poly::zero());
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        if self.terms[0].1.is_negative() {
            num_gcd = -num_gcd;
        }
        let s = Q::new(num_gcd, den_lcm);
        let inv = s.recip();
        (s, self.scale(&inv))
    }

    /// Integer coefficients of a polynomial already in integer form.
    pub fn integer_coeffs(&self) -> Option<Vec<(Mono, BigInt)>> {
        self.terms
            .iter()
            .map(|(m, c)| if c.is_integer() { Some((*m, c.to_integer())) } else { None })
            .collect()
    }

    /// Evaluate at a rational point (indexed by variable slot).
    pub fn eval(&self, point: &[Q]) -> Option<Q> {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = point.get(i)?;
                if e < 0 && x.is_zero() {
                    return None;
                }
                t *= num_traits::pow::Pow::pow(x, e as i32);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Rename variable slots through `map` (old slot -> new slot).
    pub fn remap(&self, map: &[usize]) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut n = Mono::ONE;
                for (i, &e) in m.0.iter().enumerate() {
                    if e != 0 {
                        n.0[map[i]] += e;
                    }
                }
                (n, c.clone())
            })
            .collect();
        Poly::from_terms(terms)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.sub_scaled_shift(rhs, &Mono::ONE, &-Q::one())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.sub_scaled_shift(rhs, &Mono::ONE, &Q::one())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return Poly {
                terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        let mut acc: Vec<(Mono, Q)> = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                acc.push((m.mul(n), c * d));
            }
        }
        Poly::from_terms(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::var(0)
    }
    fn y() -> Poly {
        Poly::var(1)
    }

    #[test]
    fn arithmetic_cancels() {
        let p = &x() + &y();
        let q = &x() - &y();
        let prod = &p * &q;
        let expect = &(&x() * &x()) - &(&y() * &y());
        assert_eq!(prod, expect);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division() {
        let p = &x() + &y();
        let q = &(&x() * &x()) + &Poly::int(3);
        let prod = &p * &q;
        assert_eq!(prod.div_exact(&p), Some(q.clone()));
        assert_eq!(prod.div_exact(&q), Some(p));
        assert_eq!(q.div_exact(&y()), None);
    }

    #[test]
    fn primitive_form() {
        let p = Poly::from_terms(vec![
            (Mono::var(0), Q::new((-2).into(), 3.into())),
            (Mono::ONE, Q::new(4.into(), 9.into())),
        ]);
        let (s, pp) = p.primitive_integer();
        assert_eq!(pp.scale(&s), p);
        assert_eq!(pp.lead_coeff(), Q::from_integer(3.into()));
    }
}
