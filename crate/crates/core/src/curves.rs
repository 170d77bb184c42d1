//! Extension curves `y² = 2ξ₄² − ξ₃² + 2` (right) and `y² = 2ξ₁² − ξ₂² + 2`
//! (left): an integer point at `t` is exactly an extension of `ξ(n, t)` to
//! a length-5 sequence.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{is_trivial, xi_eval, xi_poly, Side};
use crate::numkernel::{as_perfect_square, BigInt};
use crate::polyring::{horner, UPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct CurveSpec {
    pub side: Side,
    pub n: usize,
    pub rhs: UPoly,
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rhs)
    }
}

impl CurveSpec {
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        self.rhs.integer_coeffs().expect("curve polynomials are integral")
    }
}

pub fn curve_rhs(n: usize, side: Side) -> Result<CurveSpec> {
    if n == 0 {
        return Err(Error::Domain("curve index n must be at least 1".into()));
    }
    let xi = xi_poly(n);
    let (outer, inner) = match side {
        Side::Right => (&xi[3], &xi[2]),
        Side::Left => (&xi[0], &xi[1]),
    };
    let two = UPoly::from_i64s(&[2]);
    let rhs = &(&(&two * &(outer * outer)) - &(inner * inner)) + &two;
    Ok(CurveSpec { side, n, rhs })
}

/// `gcd(f, f′)` is constant, computed exactly; see also [`squarefree_mod_p`].
pub fn is_squarefree(c: &CurveSpec) -> bool {
    poly_is_squarefree(&c.rhs)
}

pub fn poly_is_squarefree(f: &UPoly) -> bool {
    if f.is_zero() {
        return false;
    }
    let g = f.gcd(&f.derivative()).expect("f is nonzero");
    g.degree() == Some(0)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    trim_mod(&mut a);
    trim_mod(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().expect("nonempty"), p - 2, p);
        while a.len() >= b.len() {
            let k = mul_mod(*a.last().expect("nonempty"), inv, p);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                let sub = mul_mod(k, bc, p);
                a[i + shift] = (a[i + shift] + p - sub) % p;
            }
            trim_mod(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Certificate modulo the prime `p`: if `p` does not divide the leading
/// coefficient and `f mod p` is squarefree, `f` is squarefree over `ℚ`.
/// `None` when the test is inconclusive for this prime.
pub fn squarefree_mod_p(f: &[BigInt], p: u64) -> Option<bool> {
    let pb = BigInt::from(p);
    let reduce = |c: &BigInt| c.mod_floor(&pb).to_u64().expect("reduced below p");
    let fm: Vec<u64> = f.iter().map(reduce).collect();
    if fm.last().is_none_or(|&c| c == 0) {
        return None;
    }
    let dm: Vec<u64> = f.iter().enumerate().skip(1).map(|(i, c)| reduce(&(c * BigInt::from(i)))).collect();
    if dm.len() != fm.len() - 1 || dm.last() == Some(&0) {
        return None;
    }
    (gcd_degree_mod(fm, dm, p) == 0).then_some(true)
}

/// Two 61/62-bit primes used for the modular cross-check.
pub const CHECK_PRIMES: [u64; 2] = [2_305_843_009_213_693_951, 4_611_686_018_427_387_847];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveHit {
    pub t: String,
    pub y: String,
    /// `ξ(n, t)` is itself a trivial sequence.
    pub trivial: bool,
}

fn hit_at(c: &CurveSpec, coeffs: &[BigInt], t: &BigInt) -> Option<CurveHit> {
    let v = horner(coeffs, t);
    if v.is_negative() {
        return None;
    }
    let y = as_perfect_square(&v)?;
    let trivial = is_trivial(xi_eval(c.n, t).coords()).is_some();
    Some(CurveHit { t: t.to_string(), y: y.to_string(), trivial })
}

/// All `t_min ≤ t ≤ t_max` where the right-hand side is a square, with the
/// nonnegative root, in ascending `t`.
pub fn scan_integer_points(c: &CurveSpec, t_min: i64, t_max: i64) -> Result<Vec<CurveHit>> {
    if t_min > t_max {
        return Err(Error::Domain(format!("empty range [{t_min}, {t_max}]")));
    }
    let coeffs = c.integer_coeffs();
    let one = |t: i64| hit_at(c, &coeffs, &BigInt::from(t));
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok((t_min..=t_max).into_par_iter().filter_map(one).collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok((t_min..=t_max).filter_map(one).collect())
    }
}

pub fn hits_csv(hits: &[CurveHit]) -> String {
    let mut out = String::from("t,y,trivial\n");
    for h in hits {
        out.push_str(&format!("{},{},{}\n", h.t, h.y, h.trivial));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::extends;

    #[test]
    fn printed_curves() {
        let r1 = curve_rhs(1, Side::Right).unwrap();
        assert_eq!(r1.rhs, UPoly::parse("4t^6 + 80t^5 + 620t^4 + 2400t^3 + 4905t^2 + 5020t + 2020").unwrap());
        assert_eq!(r1.to_string(), "4t^6 + 80t^5 + 620t^4 + 2400t^3 + 4905t^2 + 5020t + 2020");
        let l1 = curve_rhs(1, Side::Left).unwrap();
        assert_eq!(l1.rhs, UPoly::parse("4t^6 + 40t^5 + 120t^4 - 595t^2 - 970t - 455").unwrap());
        let r2 = curve_rhs(2, Side::Right).unwrap();
        assert!(r2.to_string().starts_with("16t^10 + 480t^9"));
        assert!(curve_rhs(0, Side::Left).is_err());
    }

    #[test]
    fn squarefree_examples() {
        assert!(is_squarefree(&curve_rhs(1, Side::Right).unwrap()));
        assert!(is_squarefree(&curve_rhs(3, Side::Left).unwrap()));
        assert!(!poly_is_squarefree(&UPoly::from_i64s(&[1, 2, 1])));
        let c = curve_rhs(5, Side::Right).unwrap();
        assert_eq!(squarefree_mod_p(&c.integer_coeffs(), CHECK_PRIMES[0]), Some(true));
        assert_eq!(squarefree_mod_p(&[1, 2, 1].map(BigInt::from), CHECK_PRIMES[0]), None);
    }

    #[test]
    fn scan_examples() {
        let r1 = curve_rhs(1, Side::Right).unwrap();
        let hits = scan_integer_points(&r1, -4, -1).unwrap();
        let ys: Vec<&str> = hits.iter().map(|h| h.y.as_str()).collect();
        assert_eq!(ys, ["2", "1", "4", "7"]);
        assert!(hits.iter().all(|h| h.trivial));
        assert!(scan_integer_points(&r1, 0, 10).unwrap().is_empty());
        let l1 = curve_rhs(1, Side::Left).unwrap();
        let h = scan_integer_points(&l1, -2, -2).unwrap();
        assert_eq!(h[0].y, "1");
        assert!(scan_integer_points(&l1, 3, 2).is_err());
    }

    #[test]
    fn scan_matches_extends() {
        for n in 1..4 {
            for side in [Side::Left, Side::Right] {
                let c = curve_rhs(n, side).unwrap();
                let hits = scan_integer_points(&c, -30, 30).unwrap();
                for t in -30i64..=30 {
                    let e = extends(xi_eval(n, &BigInt::from(t)).coords(), side).map(|y| y.to_string());
                    let h = hits.iter().find(|h| h.t == t.to_string()).map(|h| h.y.clone());
                    assert_eq!(e, h, "n={n} side={side} t={t}");
                }
            }
        }
    }

    #[test]
    fn degrees_and_leads() {
        for n in 1..8 {
            for side in [Side::Left, Side::Right] {
                let c = curve_rhs(n, side).unwrap();
                assert_eq!(c.rhs.degree(), Some(4 * n + 2));
                assert!(c.rhs.lead().is_positive());
            }
        }
    }
}
