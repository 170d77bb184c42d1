//! Parser for integer polynomial expressions as they are usually typeset:
//! implicit multiplication, `^` or superscript exponents, parentheses and
//! either ASCII `-` or Unicode `−` for minus, e.g. `-2ab^3 + 5abcd` or
//! `(b - c)²(a - 2b + c)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numkernel::BigInt;

/// Sparse integer polynomial keyed by exponent vectors over a fixed alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sparse {
    nvars: usize,
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Sparse {
    fn constant(nvars: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        Sparse { nvars, terms }
    }

    fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, BigInt::one());
        Sparse { nvars, terms }
    }

    fn add(mut self, other: &Sparse, sign: i32) -> Self {
        for (e, c) in &other.terms {
            let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
            if sign < 0 {
                *entry -= c;
            } else {
                *entry += c;
            }
        }
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    fn mul(&self, other: &Sparse) -> Self {
        let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                *out.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Sparse { nvars: self.nvars, terms: out }
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Sparse::constant(self.nvars, BigInt::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [char],
}

fn superscript_digit(c: char) -> Option<u32> {
    match c {
        '⁰' => Some(0),
        '¹' => Some(1),
        '²' => Some(2),
        '³' => Some(3),
        '⁴' => Some(4),
        '⁵' => Some(5),
        '⁶' => Some(6),
        '⁷' => Some(7),
        '⁸' => Some(8),
        '⁹' => Some(9),
        _ => None,
    }
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<char> {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        let text: String = self.chars.iter().collect();
        Err(Error::Parse(format!("{msg} at offset {} in {text:?}", self.pos)))
    }

    fn is_minus(c: char) -> bool {
        c == '-' || c == '−'
    }

    fn expr(&mut self) -> Result<Sparse> {
        let n = self.vars.len();
        let mut acc = Sparse::constant(n, BigInt::zero());
        let mut sign = 1;
        match self.peek() {
            Some(c) if Self::is_minus(c) => {
                sign = -1;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = acc.add(&t, sign);
            match self.peek() {
                Some(c) if Self::is_minus(c) => {
                    sign = -1;
                    self.pos += 1;
                }
                Some('+') => {
                    sign = 1;
                    self.pos += 1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') | Some('·') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(c) if c == '(' || c.is_ascii_digit() || self.vars.contains(&c) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        // no whitespace skipping between base and exponent marker
        match self.chars.get(self.pos).copied() {
            Some('^') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if start == self.pos {
                    return self.err("missing exponent");
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                s.parse().map_err(|_| Error::Parse(format!("bad exponent {s}")))
            }
            Some(c) if superscript_digit(c).is_some() => {
                let mut e = 0u32;
                while let Some(d) = self.chars.get(self.pos).and_then(|&c| superscript_digit(c)) {
                    e = e * 10 + d;
                    self.pos += 1;
                }
                Ok(e)
            }
            _ => Ok(1),
        }
    }

    fn factor(&mut self) -> Result<Sparse> {
        let n = self.vars.len();
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                Sparse::constant(n, s.parse().expect("digits"))
            }
            Some(c) => match self.vars.iter().position(|&v| v == c) {
                Some(i) => {
                    self.pos += 1;
                    Sparse::var(n, i)
                }
                None => return self.err(&format!("unexpected character {c:?}")),
            },
            None => return self.err("unexpected end of input"),
        };
        let e = self.exponent()?;
        Ok(if e == 1 { base } else { base.pow(e) })
    }
}

/// Parses `text` as an integer polynomial in the variables `vars`.
pub fn parse_sparse(text: &str, vars: &[char]) -> Result<Sparse> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, vars };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coef(s: &Sparse, e: &[u32]) -> i64 {
        s.terms.get(e).map(|c| c.to_string().parse().unwrap()).unwrap_or(0)
    }

    #[test]
    fn implicit_products_and_exponents() {
        let s = parse_sparse("-2ab^3 + 5abcd - 2", &['a', 'b', 'c', 'd']).unwrap();
        assert_eq!(coef(&s, &[1, 3, 0, 0]), -2);
        assert_eq!(coef(&s, &[1, 1, 1, 1]), 5);
        assert_eq!(coef(&s, &[0, 0, 0, 0]), -2);
        assert_eq!(s.terms.len(), 3);
    }

    #[test]
    fn unicode_minus_and_superscripts() {
        let s = parse_sparse("−2ab³ + ab²c", &['a', 'b', 'c', 'd']).unwrap();
        assert_eq!(coef(&s, &[1, 3, 0, 0]), -2);
        assert_eq!(coef(&s, &[1, 2, 1, 0]), 1);
    }

    #[test]
    fn parenthesised_product() {
        // (t+1)(t-1)^2 = t^3 - t^2 - t + 1
        let s = parse_sparse("(t + 1)(t - 1)^2", &['t']).unwrap();
        assert_eq!(coef(&s, &[3]), 1);
        assert_eq!(coef(&s, &[2]), -1);
        assert_eq!(coef(&s, &[1]), -1);
        assert_eq!(coef(&s, &[0]), 1);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_sparse("2x + 1", &['t']).is_err());
        assert!(parse_sparse("(t + 1", &['t']).is_err());
        assert!(parse_sparse("t^", &['t']).is_err());
    }
}
