use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::gcd::gcd;
use crate::poly::{Poly, Q};
use crate::ring::Mono;

/// Element of the fraction field Q(x_0, ..., x_15).
///
/// Canonical form: `num / den` with both sides free of negative exponents,
/// coprime, and `den` a primitive integer polynomial with positive leading
/// coefficient. Two equal functions therefore compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

pub type RF = RationalFunction;

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        RF::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> RF {
        RF { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RF {
        RF { num: Poly::one(), den: Poly::one() }
    }

    pub fn int(n: i64) -> RF {
        RF::constant(Q::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> RF {
        RF::constant(Q::new(n.into(), d.into()))
    }

    pub fn constant(c: Q) -> RF {
        RF { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn var(i: usize) -> RF {
        RF { num: Poly::var(i), den: Poly::one() }
    }

    /// From a Laurent polynomial.
    pub fn from_poly(p: Poly) -> RF {
        let mc = p.monomial_content();
        let (_, neg) = mc.split_sign();
        if neg.is_one() {
            RF { num: p, den: Poly::one() }
        } else {
            RF { num: p.mul_mono(&neg), den: Poly::monomial(neg, Q::one()) }
        }
    }

    pub fn monomial(m: Mono, c: Q) -> RF {
        RF::from_poly(Poly::monomial(m, c))
    }

    /// `num / den` for Laurent polynomials; `None` when `den` is zero.
    pub fn from_fraction(num: Poly, den: Poly) -> Option<RF> {
        if den.is_zero() {
            return None;
        }
        let n = RF::from_poly(num);
        let d = RF::from_poly(den);
        Some(n.checked_div(&d).expect("nonzero"))
    }

    /// Build from coprime parts, normalizing the denominator only.
    fn from_coprime(num: Poly, den: Poly) -> RF {
        if num.is_zero() {
            return RF::zero();
        }
        if let Some(c) = den.constant_value() {
            return RF { num: num.scale(&c.recip()), den: Poly::one() };
        }
        let (s, pp) = den.primitive_integer();
        RF { num: num.scale(&s.recip()), den: pp }
    }

    /// Reduce an arbitrary pair of polynomials (nonnegative exponents).
    fn reduce(num: Poly, den: Poly) -> RF {
        if num.is_zero() {
            return RF::zero();
        }
        if den.is_constant() {
            return RF::from_coprime(num, den);
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            RF::from_coprime(num, den)
        } else {
            RF::from_coprime(
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True for nonzero constant multiples of a Laurent monomial.
    pub fn is_monomial(&self) -> bool {
        self.num.is_monomial() && self.den.is_monomial()
    }

    pub fn constant_value(&self) -> Option<Q> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    /// Bitmask of variables that occur.
    pub fn support(&self) -> u32 {
        self.num.support() | self.den.support()
    }

    pub fn recip(&self) -> Option<RF> {
        if self.is_zero() {
            return None;
        }
        Some(RF::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RF) -> Option<RF> {
        let inv = rhs.recip()?;
        Some(self * &inv)
    }

    pub fn pow(&self, k: i32) -> RF {
        if k < 0 {
            return self.recip().expect("negative power of zero").pow(-k);
        }
        RF { num: self.num.pow(k as u32), den: self.den.pow(k as u32) }
    }

    pub fn scale(&self, c: &Q) -> RF {
        if c.is_zero() {
            return RF::zero();
        }
        RF { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Evaluate at a rational point; `None` on a pole.
    pub fn eval(&self, point: &[Q]) -> Option<Q> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point)? / d)
    }

    pub fn remap(&self, map: &[usize]) -> RF {
        RF::reduce(self.num.remap(map), self.den.remap(map))
    }

    /// Substitute rational functions for variables (slot i -> `values[i]`,
    /// `None` leaves the variable alone).
    pub fn substitute(&self, values: &[Option<RF>]) -> RF {
        let n = substitute_poly(&self.num, values);
        let d = substitute_poly(&self.den, values);
        n.checked_div(&d).expect("substitution hit a pole")
    }
}

fn substitute_poly(p: &Poly, values: &[Option<RF>]) -> RF {
    let mut acc = RF::zero();
    // group identical substitution powers through a small cache
    let mut cache: std::collections::HashMap<(usize, i16), RF> = std::collections::HashMap::new();
    for (m, c) in p.terms() {
        let mut kept = Mono::ONE;
        let mut term = RF::constant(c.clone());
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            match values.get(i).and_then(|v| v.as_ref()) {
                Some(v) => {
                    let pw = cache.entry((i, e)).or_insert_with(|| v.pow(e as i32)).clone();
                    term = &term * &pw;
                }
                None => kept.0[i] = e,
            }
        }
        if !kept.is_one() {
            term = &term * &RF::monomial(kept, Q::one());
        }
        acc = &acc + &term;
    }
    acc
}

impl Add for &RF {
    type Output = RF;
    fn add(self, rhs: &RF) -> RF {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RF { num, den: Poly::one() };
            }
            return RF::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            return RF::from_coprime(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RF::from_coprime(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RF::from_coprime(num, &self.den * &rhs.den);
        }
        let bd = self.den.div_exact(&g).expect("gcd divides");
        let dd = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &dd) + &(&rhs.num * &bd);
        if num.is_zero() {
            return RF::zero();
        }
        // only factors of g can cancel
        let h = gcd(&num, &g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (num.div_exact(&h).unwrap(), g.div_exact(&h).unwrap())
        };
        RF::from_coprime(num, &(&bd * &dd) * &g)
    }
}

impl Sub for &RF {
    type Output = RF;
    fn sub(self, rhs: &RF) -> RF {
        self + &(-rhs)
    }
}

impl Neg for &RF {
    type Output = RF;
    fn neg(self) -> RF {
        RF { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RF {
    type Output = RF;
    fn mul(self, rhs: &RF) -> RF {
        if self.is_zero() || rhs.is_zero() {
            return RF::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RF { num: &self.num * &rhs.num, den: Poly::one() };
        }
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RF::from_coprime(&a * &c, &b * &d)
    }
}

fn cancel(n: &Poly, d: &Poly) -> (Poly, Poly) {
    if n.is_constant() || d.is_constant() {
        return (n.clone(), d.clone());
    }
    let g = gcd(n, d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
    }
}

impl Div for &RF {
    type Output = RF;
    fn div(self, rhs: &RF) -> RF {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RF {
            type Output = RF;
            fn $f(self, rhs: RF) -> RF {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RF> for RF {
            type Output = RF;
            fn $f(self, rhs: &RF) -> RF {
                (&self).$f(rhs)
            }
        }
        impl $tr<RF> for &RF {
            type Output = RF;
            fn $f(self, rhs: RF) -> RF {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RF {
    type Output = RF;
    fn neg(self) -> RF {
        -&self
    }
}

impl From<i64> for RF {
    fn from(n: i64) -> RF {
        RF::int(n)
    }
}

impl From<Poly> for RF {
    fn from(p: Poly) -> RF {
        RF::from_poly(p)
    }
}

impl Zero for RF {
    fn zero() -> RF {
        RF::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RF {
    fn one() -> RF {
        RF::one()
    }
}

impl std::iter::Sum for RF {
    fn sum<I: Iterator<Item = RF>>(iter: I) -> RF {
        iter.fold(RF::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for RF {
    fn product<I: Iterator<Item = RF>>(iter: I) -> RF {
        iter.fold(RF::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_after_cancellation() {
        let x = RF::var(0);
        let y = RF::var(1);
        let a = (&x + &y) / (&x - &y);
        let b = (&x - &y) / (&x + &y);
        assert!((&a * &b).is_one());
        let s = &a + &b;
        let expect = (RF::int(2) * (&x * &x + &y * &y)) / (&x * &x - &y * &y);
        assert_eq!(s, expect);
        assert!((&s - &expect).is_zero());
    }

    #[test]
    fn laurent_input() {
        let m = Mono::var(0).pow(-2);
        let r = RF::monomial(m, Q::one());
        assert_eq!(r.denom(), &Poly::var(0).pow(2));
        assert_eq!(&r * &RF::var(0).pow(2), RF::one());
    }
}
