//! Text form of rational functions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := power (('*' | '/') power)*
//! power  := atom ['^' ['-'] integer]
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! The printer emits the same grammar, so `parse(print(r)) == r`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::AlgebraError;
use crate::poly::{Poly, Q};
use crate::rational::RF;
use crate::ring::{is_identifier, Mono, Ring};
use crate::rules::{RuleSet, SubstitutionRule};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> AlgebraError {
        AlgebraError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn expr(&mut self) -> Result<RF, AlgebraError> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RF, AlgebraError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    acc = acc.checked_div(&d).ok_or(AlgebraError::DivisionByZero { pos: at })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RF, AlgebraError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.pos;
        let n = self.integer()?;
        let k: i32 = n
            .try_into()
            .map_err(|_| AlgebraError::Syntax { pos: at, msg: "exponent too large".into() })?;
        if neg {
            if base.is_zero() {
                return Err(AlgebraError::DivisionByZero { pos: at });
            }
            Ok(base.pow(-k))
        } else {
            Ok(base.pow(k))
        }
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<RF, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(RF::constant(Q::from_integer(self.integer()?))),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(RF::var(self.ring.require(name)?))
            }
            Some(c) => Err(self.err(format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parse an expression over the variables of `ring`.
pub fn parse(src: &str, ring: &Ring) -> Result<RF, AlgebraError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, ring };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parse `var^k -> expr` (or `var -> expr`) into a rule.
pub fn parse_rule(src: &str, ring: &Ring) -> Result<SubstitutionRule, AlgebraError> {
    let Some(arrow) = src.find("->") else {
        return Err(AlgebraError::Syntax { pos: 0, msg: "expected `->`".into() });
    };
    let lhs = src[..arrow].trim();
    let (name, power) = match lhs.split_once('^') {
        Some((n, k)) => {
            let k: i16 = k.trim().parse().map_err(|_| AlgebraError::Syntax {
                pos: 0,
                msg: "rule power must be a positive integer".into(),
            })?;
            (n.trim(), k)
        }
        None => (lhs, 1),
    };
    if !is_identifier(name) || power < 1 {
        return Err(AlgebraError::Syntax { pos: 0, msg: format!("bad rule head `{lhs}`") });
    }
    let var = ring.require(name)?;
    let rhs = parse(&src[arrow + 2..], ring).map_err(|e| match e {
        AlgebraError::Syntax { pos, msg } => AlgebraError::Syntax { pos: pos + arrow + 2, msg },
        AlgebraError::DivisionByZero { pos } => AlgebraError::DivisionByZero { pos: pos + arrow + 2 },
        other => other,
    })?;
    Ok(SubstitutionRule::new(var, power, rhs))
}

pub fn parse_rules<'s, I: IntoIterator<Item = &'s str>>(
    srcs: I,
    ring: &Ring,
) -> Result<RuleSet, AlgebraError> {
    let rules = srcs.into_iter().map(|s| parse_rule(s, ring)).collect::<Result<_, _>>()?;
    Ok(RuleSet::new(rules))
}

fn print_mono(m: &Mono, ring: &Ring) -> String {
    let mut parts = Vec::new();
    for i in 0..ring.len() {
        let e = m.exp(i);
        match e {
            0 => {}
            1 => parts.push(ring.name(i).to_string()),
            _ => parts.push(format!("{}^{}", ring.name(i), e)),
        }
    }
    parts.join("*")
}

fn print_q(c: &Q) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Print a Laurent polynomial.
pub fn print_poly(p: &Poly, ring: &Ring) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = print_mono(m, ring);
        if mono.is_empty() {
            out.push_str(&print_q(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else if a.denom().is_one() {
            out.push_str(&format!("{}*{}", a.numer(), mono));
        } else {
            out.push_str(&format!("{}*{}/{}", a.numer(), mono, a.denom()));
        }
    }
    out
}

/// Print a rational function in the parser's grammar.
pub fn print(r: &RF, ring: &Ring) -> String {
    let n = print_poly(r.numer(), ring);
    if r.denom().is_one() {
        return n;
    }
    let d = print_poly(r.denom(), ring);
    let n = if r.numer().len() > 1 { format!("({n})") } else { n };
    let single_factor = r.denom().is_monomial()
        && r.denom().lead_coeff().is_one()
        && r.denom().terms()[0].0 .0.iter().filter(|&&e| e != 0).count() == 1;
    let d = if single_factor || r.denom().is_constant() { d } else { format!("({d})") };
    format!("{n}/{d}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn roundtrip() {
        let r = ring();
        for s in ["x", "-x + 1", "(x + y)/(2*x*y)", "x^-2*y", "3/(x^2 + 1)", "-(x - y)^3/z", "1/2*x"] {
            let e = parse(s, &r).unwrap();
            let printed = print(&e, &r);
            assert_eq!(parse(&printed, &r).unwrap(), e, "{s} -> {printed}");
        }
    }

    #[test]
    fn errors_carry_position() {
        let r = ring();
        assert!(matches!(parse("x + w", &r), Err(AlgebraError::UnknownVariable(_))));
        assert!(matches!(parse("x / 0", &r), Err(AlgebraError::DivisionByZero { pos: 3 })));
        assert!(matches!(parse("x +", &r), Err(AlgebraError::Syntax { .. })));
    }

    #[test]
    fn rule_text() {
        let r = ring();
        let rule = parse_rule("x^2 -> y + 1", &r).unwrap();
        assert_eq!(rule.power, 2);
        assert_eq!(rule.replacement, parse("y+1", &r).unwrap());
    }
}
