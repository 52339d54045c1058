//! Multivariate polynomial gcd over Q.
//!
//! Strategy, cheapest first: monomial content, trial division, variables
//! present in only one operand, a modular degree-zero certificate per
//! shared variable, and finally a subresultant remainder sequence over
//! the remaining polynomial coefficient ring.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{Poly, Q};
use crate::ring::MAX_VARS;

const P: u64 = (1u64 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn bigint_mod(n: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let r = n.mod_floor(&p);
    r.to_u64().unwrap_or(0)
}

fn q_mod(c: &Q) -> Option<u64> {
    let d = bigint_mod(c.denom());
    if d == 0 {
        return None;
    }
    Some(mulmod(bigint_mod(c.numer()), invmod(d)))
}

/// Image of `p` in F_p[x] after substituting `point` for every other variable.
fn eval_univariate_mod(p: &Poly, var: usize, point: &[u64; MAX_VARS]) -> Option<Vec<u64>> {
    let deg = p.degree_in(var).max(0) as usize;
    let mut out = vec![0u64; deg + 1];
    for (m, c) in p.terms() {
        let mut t = q_mod(c)?;
        for i in 0..MAX_VARS {
            let e = m.exp(i);
            if i == var || e == 0 {
                continue;
            }
            t = mulmod(t, powmod(point[i], e as u64));
        }
        let k = m.exp(var) as usize;
        out[k] = addmod(out[k], t);
    }
    Some(out)
}

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

/// Degree of gcd in F_p[x].
fn univariate_gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    let is_zero = |v: &Vec<u64>| v.len() == 1 && v[0] == 0;
    loop {
        if is_zero(&b) {
            return a.len() - 1;
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let inv = invmod(*b.last().unwrap());
        while a.len() >= b.len() && !is_zero(&a) {
            let shift = a.len() - b.len();
            let f = mulmod(*a.last().unwrap(), inv);
            for (i, &bc) in b.iter().enumerate() {
                a[i + shift] = submod(a[i + shift], mulmod(f, bc));
            }
            a.pop();
            trim(&mut a);
            if a.is_empty() {
                a.push(0);
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// Proves that gcd(a, b) has degree 0 in `var`, by a random evaluation.
/// `false` means "not proven", not "disproven".
fn certify_coprime_in(a: &Poly, b: &Poly, var: usize, rng: &mut ChaCha8Rng) -> bool {
    let da = a.degree_in(var) as usize;
    let db = b.degree_in(var) as usize;
    for _ in 0..3 {
        let mut point = [0u64; MAX_VARS];
        for v in point.iter_mut() {
            *v = rng.gen_range(2..P);
        }
        let (Some(ia), Some(ib)) = (
            eval_univariate_mod(a, var, &point),
            eval_univariate_mod(b, var, &point),
        ) else {
            continue;
        };
        if ia[da] == 0 || ib[db] == 0 {
            continue;
        }
        return univariate_gcd_degree_mod(ia, ib) == 0;
    }
    false
}

fn support_vars(mask: u32) -> impl Iterator<Item = usize> {
    (0..MAX_VARS).filter(move |i| mask & (1 << i) != 0)
}

/// Greatest common divisor, normalized to a primitive integer polynomial
/// with positive leading coefficient. Inputs must have nonnegative exponents.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6f6b_616d_6f74_6f);
    gcd_inner(a, b, &mut rng)
}

/// Gcd of a list; short-circuits on 1.
pub fn gcd_many<'a, I: IntoIterator<Item = &'a Poly>>(items: I) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6f6b_616d_6f74_6f);
    gcd_list(items, &mut rng)
}

fn gcd_list<'a, I: IntoIterator<Item = &'a Poly>>(items: I, rng: &mut ChaCha8Rng) -> Poly {
    let mut g = Poly::zero();
    for p in items {
        g = gcd_inner(&g, p, rng);
        if g.is_one() {
            break;
        }
    }
    g
}

fn gcd_inner(a: &Poly, b: &Poly, rng: &mut ChaCha8Rng) -> Poly {
    if a.is_zero() {
        return b.primitive_integer().1;
    }
    if b.is_zero() {
        return a.primitive_integer().1;
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.meet(&mb);
    let a = a.div_mono(&ma).primitive_integer().1;
    let b = b.div_mono(&mb).primitive_integer().1;
    let core = gcd_stripped(&a, &b, rng);
    core.mul_mono(&mg)
}

/// Both inputs primitive integer polynomials without monomial content.
fn gcd_stripped(a: &Poly, b: &Poly, rng: &mut ChaCha8Rng) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.clone();
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if large.div_exact(small).is_some() {
        return small.clone();
    }
    let sa = a.support();
    let sb = b.support();
    let only_a = sa & !sb;
    let only_b = sb & !sa;
    if only_a != 0 {
        let x = support_vars(only_a).next().unwrap();
        return gcd_with_content(a, x, b, rng);
    }
    if only_b != 0 {
        let x = support_vars(only_b).next().unwrap();
        return gcd_with_content(b, x, a, rng);
    }
    let common = sa & sb;
    let mut uncertified: Vec<usize> = Vec::new();
    for x in support_vars(common) {
        if certify_coprime_in(a, b, x, rng) {
            if common.count_ones() == 1 {
                return Poly::one();
            }
            // gcd is free of x, so it divides every x-coefficient of both
            let ca = content_in(a, x, rng);
            let cb = content_in(b, x, rng);
            return gcd_inner(&ca, &cb, rng);
        }
        uncertified.push(x);
    }
    let x = *uncertified
        .iter()
        .min_by_key(|&&v| (a.degree_in(v).max(b.degree_in(v)), v))
        .unwrap();
    gcd_prs(a, b, x, rng)
}

/// gcd(a, b) where `x` occurs in `a` but not in `b`.
fn gcd_with_content(a: &Poly, x: usize, b: &Poly, rng: &mut ChaCha8Rng) -> Poly {
    let coeffs = a.coefficients_in(x);
    let mut g = b.clone();
    for c in coeffs.values() {
        g = gcd_inner(&g, c, rng);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Content of `p` as a polynomial in `x`.
fn content_in(p: &Poly, x: usize, rng: &mut ChaCha8Rng) -> Poly {
    let coeffs = p.coefficients_in(x);
    let mut sorted: Vec<&Poly> = coeffs.values().collect();
    sorted.sort_by_key(|c| c.len());
    gcd_list(sorted, rng)
}

fn gcd_prs(a: &Poly, b: &Poly, x: usize, rng: &mut ChaCha8Rng) -> Poly {
    let ca = content_in(a, x, rng);
    let cb = content_in(b, x, rng);
    let cg = gcd_inner(&ca, &cb, rng);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let mut ua = pa.to_univariate(x);
    let mut ub = pb.to_univariate(x);
    if ua.len() < ub.len() {
        std::mem::swap(&mut ua, &mut ub);
    }
    let g = subresultant_gcd(ua, ub);
    let gp = Poly::from_univariate(x, &g);
    let gc = content_in(&gp, x, rng);
    let gpp = gp.div_exact(&gc).expect("content divides");
    (&cg * &gpp).primitive_integer().1
}

fn ulead(u: &[Poly]) -> &Poly {
    u.last().unwrap()
}

fn utrim(u: &mut Vec<Poly>) {
    while u.len() > 1 && u.last().unwrap().is_zero() {
        u.pop();
    }
}

/// Pseudo-remainder of `a` by `b` in D[x].
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut r: Vec<Poly> = a.to_vec();
    let db = b.len() - 1;
    let lb = ulead(b).clone();
    let mut steps = (a.len() as i64) - (b.len() as i64) + 1;
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let lr = ulead(&r).clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(&lr * bc);
        }
        r.pop();
        utrim(&mut r);
        if r.is_empty() {
            r.push(Poly::zero());
        }
        steps -= 1;
    }
    if steps > 0 {
        let f = lb.pow(steps as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn subresultant_gcd(mut a: Vec<Poly>, mut b: Vec<Poly>) -> Vec<Poly> {
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let d = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if r.len() == 1 && r[0].is_zero() {
            return b;
        }
        if r.len() == 1 {
            return vec![Poly::one()];
        }
        let divisor = &g * &h.pow(d);
        let next: Vec<Poly> = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        a = b;
        b = next;
        g = ulead(&a).clone();
        h = match d {
            0 => h,
            1 => g.clone(),
            _ => g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant division is exact"),
        };
    }
}

/// Integer content of a polynomial with rational coefficients (as a scalar).
pub fn scalar_content(p: &Poly) -> Q {
    if p.is_zero() {
        return Q::one();
    }
    let (s, _) = p.primitive_integer();
    s.abs()
}

/// Least common multiple of two polynomials, in primitive integer form.
pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    let g = gcd(a, b);
    (a * &b.div_exact(&g).expect("gcd divides")).primitive_integer().1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = &(&v(0) * &v(1)) + &Poly::int(1);
        let g = &v(0) + &(&v(2) * &Poly::int(3));
        let h = &(&v(1) * &v(1)) - &v(2);
        let a = &f * &g;
        let b = &f * &h;
        assert_eq!(gcd(&a, &b), f.primitive_integer().1);
        assert!(gcd(&g, &h).is_one());
    }

    #[test]
    fn gcd_needs_prs() {
        // common factor hidden in a shared-variable setting
        let f = &(&v(0) * &v(0)) + &(&v(1) * &v(0)) + &Poly::int(1);
        let g = &v(0) + &v(1);
        let h = &v(0) - &(&v(1) * &v(1));
        let a = &(&f * &g) * &g;
        let b = &(&f * &h) * &g;
        assert_eq!(gcd(&a, &b), (&f * &g).primitive_integer().1);
    }

    #[test]
    fn monomial_parts() {
        let a = &(&v(0) * &v(0)) * &(&v(1) + &Poly::int(1));
        let b = &v(0) * &(&v(1) + &Poly::int(1));
        assert_eq!(gcd(&a, &b), b);
    }
}
