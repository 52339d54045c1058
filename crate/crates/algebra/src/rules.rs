use std::collections::BTreeMap;

use crate::poly::Poly;
use crate::rational::RF;
use crate::ring::Mono;

/// Rewrite rule `var^power -> replacement`.
///
/// Applied to a polynomial by writing every exponent `e` of `var` as
/// `power * k + r` with `0 <= r < power` and replacing `var^(power*k)` by
/// `replacement^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionRule {
    pub var: usize,
    pub power: i16,
    pub replacement: RF,
}

impl SubstitutionRule {
    pub fn new(var: usize, power: i16, replacement: RF) -> SubstitutionRule {
        assert!(power >= 1, "rule power must be positive");
        SubstitutionRule { var, power, replacement }
    }

    pub fn apply_poly(&self, p: &Poly) -> RF {
        if p.degree_in(self.var) < self.power && p.min_degree_in(self.var) >= 0 {
            return RF::from_poly(p.clone());
        }
        let mut groups: BTreeMap<i32, Vec<(Mono, crate::poly::Q)>> = BTreeMap::new();
        for (m, c) in p.terms() {
            let e = m.exp(self.var) as i32;
            let k = e.div_euclid(self.power as i32);
            let mut rest = *m;
            rest.0[self.var] = (e - k * self.power as i32) as i16;
            groups.entry(k).or_default().push((rest, c.clone()));
        }
        let mut acc = RF::zero();
        for (k, terms) in groups {
            let part = RF::from_poly(Poly::from_terms(terms));
            if k == 0 {
                acc = &acc + &part;
            } else {
                acc = &acc + &(&part * &self.replacement.pow(k));
            }
        }
        acc
    }

    pub fn apply(&self, r: &RF) -> RF {
        let n = self.apply_poly(r.numer());
        if r.denom().is_one() {
            return n;
        }
        let d = self.apply_poly(r.denom());
        n.checked_div(&d).expect("rule sent a denominator to zero")
    }
}

/// Ordered list of rewrite rules, applied repeatedly in order until stable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RuleSet {
    rules: Vec<SubstitutionRule>,
}

const MAX_PASSES: usize = 8;

impl RuleSet {
    pub fn new(rules: Vec<SubstitutionRule>) -> RuleSet {
        RuleSet { rules }
    }

    pub fn empty() -> RuleSet {
        RuleSet::default()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rules(&self) -> &[SubstitutionRule] {
        &self.rules
    }

    pub fn push(&mut self, rule: SubstitutionRule) {
        self.rules.push(rule);
    }

    fn touches(&self, r: &RF) -> bool {
        let s = r.support();
        self.rules.iter().any(|rule| s & (1 << rule.var) != 0)
    }

    /// Normal form of a rational function.
    pub fn reduce(&self, r: &RF) -> RF {
        if self.rules.is_empty() || !self.touches(r) {
            return r.clone();
        }
        let mut cur = r.clone();
        for _ in 0..MAX_PASSES {
            let mut next = cur.clone();
            for rule in &self.rules {
                next = rule.apply(&next);
            }
            if next == cur {
                break;
            }
            cur = next;
        }
        cur
    }

    fn reduce_poly(&self, p: &Poly) -> RF {
        self.reduce(&RF::from_poly(p.clone()))
    }

    /// Zero test modulo the rules: the numerator must reduce to zero.
    pub fn is_zero(&self, r: &RF) -> bool {
        if r.is_zero() {
            return true;
        }
        if self.rules.is_empty() {
            return false;
        }
        self.reduce_poly(r.numer()).is_zero()
    }

    pub fn equal(&self, a: &RF, b: &RF) -> bool {
        if a == b {
            return true;
        }
        self.is_zero(&(a - b))
    }
}

/// Equality of rational functions modulo a rule set.
pub fn rf_equal_mod(a: &RF, b: &RF, rules: &RuleSet) -> bool {
    rules.equal(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_division_of_exponents() {
        // x^2 -> y; x^5 = x * y^2
        let rule = SubstitutionRule::new(0, 2, RF::var(1));
        let p = Poly::var(0).pow(5);
        let got = rule.apply_poly(&p);
        assert_eq!(got, &RF::var(0) * &RF::var(1).pow(2));
    }

    #[test]
    fn quadratic_extension_zero_test() {
        // x^2 -> 2: (x - 1)(x + 1) - 1 == 0
        let rules = RuleSet::new(vec![SubstitutionRule::new(0, 2, RF::int(2))]);
        let x = RF::var(0);
        let e = &(&(&x - &RF::one()) * &(&x + &RF::one())) - &RF::one();
        assert!(rules.is_zero(&e));
        assert!(!rules.is_zero(&x));
    }
}
