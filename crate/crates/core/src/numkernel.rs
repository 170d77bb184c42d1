//! Exact integer and rational scalars.
//!
//! `BigInt` and `BigRat` are the `num` types; this module adds the square
//! machinery the rest of the crate leans on (integer square root, perfect
//! square detection with a residue prefilter) and decimal parse/format.

use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;
pub type BigRat = num_rational::BigRational;

// Quadratic residue masks. A square must be a residue modulo each of these.
const SQ_MOD64: u64 = 0x0202_0212_0203_0213;
const MOD63: u64 = 63;
const MOD65: u64 = 65;
const MOD11: u64 = 11;

fn residue_table(m: u64) -> Vec<bool> {
    let mut t = vec![false; m as usize];
    for r in 0..m {
        t[((r * r) % m) as usize] = true;
    }
    t
}

struct Residues {
    m63: Vec<bool>,
    m65: Vec<bool>,
    m11: Vec<bool>,
}

fn residues() -> &'static Residues {
    static R: std::sync::OnceLock<Residues> = std::sync::OnceLock::new();
    R.get_or_init(|| Residues { m63: residue_table(MOD63), m65: residue_table(MOD65), m11: residue_table(MOD11) })
}

/// Cheap rejection test: `false` means `n` is certainly not a square.
#[inline]
fn maybe_square_residue(low64: u64, m63: u64, m65: u64, m11: u64) -> bool {
    if (SQ_MOD64 >> (low64 & 63)) & 1 == 0 {
        return false;
    }
    let r = residues();
    r.m63[m63 as usize] && r.m65[m65 as usize] && r.m11[m11 as usize]
}

/// Integer square root: the unique `r` with `r^2 <= n < (r+1)^2`.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::Domain(format!("isqrt of negative value {n}")));
    }
    Ok(n.sqrt())
}

/// Returns `r >= 0` with `r^2 = n` when `n` is a perfect square.
pub fn as_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some(BigInt::zero());
    }
    let low = n.iter_u64_digits().next().unwrap_or(0);
    let m63 = (n % MOD63).to_u64().unwrap_or(0);
    let m65 = (n % MOD65).to_u64().unwrap_or(0);
    let m11 = (n % MOD11).to_u64().unwrap_or(0);
    if !maybe_square_residue(low, m63, m65, m11) {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Machine-word variant used by the exhaustive search.
#[inline]
pub fn square_root_u64(n: u64) -> Option<u64> {
    if !maybe_square_residue(n, n % MOD63, n % MOD65, n % MOD11) {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

#[inline]
pub fn square_root_u128(n: u128) -> Option<u128> {
    let m63 = (n % MOD63 as u128) as u64;
    let m65 = (n % MOD65 as u128) as u64;
    let m11 = (n % MOD11 as u128) as u64;
    if !maybe_square_residue(n as u64, m63, m65, m11) {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

pub fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse::<BigInt>().map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
}

/// Parses `p` or `p/q`. The result is reduced with a positive denominator.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(BigRat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRat::new(parse_int(p)?, q))
        }
    }
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rat(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `Some(n)` when `r` has denominator one.
pub fn rat_to_int(r: &BigRat) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&int(0)).unwrap(), int(0));
        assert_eq!(isqrt(&int(24)).unwrap(), int(4));
        assert_eq!(isqrt(&int(1577169)).unwrap(), int(1255));
        assert!(matches!(isqrt(&int(-1)), Err(Error::Domain(_))));
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(as_perfect_square(&int(25)), Some(int(5)));
        assert_eq!(as_perfect_square(&int(-1)), None);
        assert_eq!(as_perfect_square(&int(0)), Some(int(0)));
        // 2*1088^2 - 889^2 + 2
        let radicand = int(2) * int(1088) * int(1088) - int(889) * int(889) + int(2);
        assert_eq!(radicand, int(1577169));
        assert_eq!(as_perfect_square(&radicand), None);
    }

    #[test]
    fn residue_filter_never_rejects_squares() {
        for r in 0u64..5000 {
            assert_eq!(square_root_u64(r * r), Some(r));
            assert_eq!(square_root_u128((r as u128) * (r as u128)), Some(r as u128));
        }
    }

    #[test]
    fn rational_parse_format() {
        let r = parse_rat("6/-4").unwrap();
        assert_eq!(format_rat(&r), "-3/2");
        assert_eq!(format_rat(&parse_rat("10/5").unwrap()), "2");
        assert_eq!(parse_rat("1/0"), Err(Error::DivisionByZero));
        assert_eq!(parse_int("-0").unwrap().to_string(), "0");
        assert!(parse_int("12a").is_err());
    }

    fn big(digits: &str) -> BigInt {
        digits.parse().unwrap()
    }

    proptest! {
        #[test]
        fn isqrt_brackets(digits in "[1-9][0-9]{0,120}") {
            let n = big(&digits);
            let r = isqrt(&n).unwrap();
            let r1 = &r + 1;
            prop_assert!(&r * &r <= n);
            prop_assert!(n < &r1 * &r1);
        }

        #[test]
        fn squares_detected(digits in "[1-9][0-9]{0,80}") {
            let r = big(&digits);
            let sq = &r * &r;
            prop_assert_eq!(as_perfect_square(&sq), Some(r.clone()));
            prop_assert_eq!(as_perfect_square(&(sq + 1)), None);
        }

        #[test]
        fn decimal_round_trip(digits in "-?[0-9]{1,60}") {
            let n = big(&digits);
            prop_assert_eq!(parse_int(&n.to_string()).unwrap(), n);
        }

        #[test]
        fn rational_sum_is_exact(a in -10_000i64..10_000, b in 1i64..10_000,
                                 c in -10_000i64..10_000, d in 1i64..10_000) {
            let x = BigRat::new(int(a), int(b));
            let y = BigRat::new(int(c), int(d));
            let lhs = (x + y) * rat(b * d);
            prop_assert_eq!(lhs, rat(a * d + c * b));
        }
    }
}
