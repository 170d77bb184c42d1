//! Univariate polynomials over `BigRat`, reduced rational functions in one
//! variable, and the quadratic extension `u + v·α` with
//! `α² = (t+1)(t+2)(t+3)(t+4)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numkernel::{format_rat, BigInt, BigRat};
use crate::parse::parse_sparse;

/// Minimal commutative ring interface shared by every coefficient domain
/// that multivariate substitution or the recurrence solvers run over.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn from_int(n: &BigInt) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn is_zero_elem(&self) -> bool;

    fn negated(&self) -> Self {
        Self::zero_elem().minus(self)
    }

    fn power(&self, k: u32) -> Self {
        let mut acc = Self::one_elem();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.times(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn from_int(n: &BigInt) -> Self {
        n.clone()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Ring for BigRat {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn from_int(n: &BigInt) -> Self {
        BigRat::from_integer(n.clone())
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Horner evaluation of an integer coefficient list (lowest degree first).
pub fn horner(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    coeffs: Vec<BigRat>,
}

impl UPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(BigRat::from_integer).collect())
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_int_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// Parses expressions in `t` such as `2t^3 + 12t^2 + 19t + 6`.
    pub fn parse(text: &str) -> Result<Self> {
        let sparse = parse_sparse(text, &['t'])?;
        let deg = sparse.terms.keys().map(|e| e[0] as usize).max().unwrap_or(0);
        let mut coeffs = vec![BigRat::zero(); deg + 1];
        for (e, c) in sparse.terms {
            coeffs[e[0] as usize] = BigRat::from_integer(c);
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.numer().clone())).collect()
    }

    pub fn scale(&self, k: &BigRat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigRat {
        self.eval(&BigRat::from_integer(x.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigRat::from_integer(BigInt::from(i))).collect(),
        )
    }

    /// `self(inner(t))`.
    pub fn compose(&self, inner: &UPoly) -> Self {
        let mut acc = UPoly::zero_poly();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UPoly::constant(c.clone());
        }
        acc
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    fn zero_poly() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &UPoly) -> Result<(UPoly, UPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UPoly::zero_poly(), self.clone()));
        }
        let lead_inv = divisor.lead().recip();
        let mut quot = vec![BigRat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UPoly::from_coeffs(quot), UPoly::from_coeffs(rem)))
    }

    /// Returns `q` with `self = q·divisor`, or `NonExact`.
    pub fn exact_divide(&self, divisor: &UPoly) -> Result<UPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExact)
        }
    }

    /// Splits `self = content · primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn content_primitive(&self) -> (BigRat, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRat::zero(), Vec::new());
        }
        let den_lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * BigRat::from_integer(den_lcm.clone())).to_integer()).collect();
        let mut g = int_content(&ints);
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (BigRat::new(g, den_lcm), prim)
    }

    /// Monic greatest common divisor, computed with the subresultant
    /// remainder sequence on primitive integer representatives.
    pub fn gcd(&self, other: &UPoly) -> Result<UPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::Domain("gcd(0, 0) is undefined".into()));
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        let (_, a) = self.content_primitive();
        let (_, b) = other.content_primitive();
        Ok(UPoly::from_int_coeffs(subresultant_gcd(a, b)).monic())
    }

    /// Descending-power display in `t`, e.g. `4t^6 + 80t^5 - 455`.
    pub fn display(&self) -> String {
        self.to_string()
    }

    /// Lowest-degree-first decimal strings.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rat).collect()
    }
}

fn int_content(c: &[BigInt]) -> BigInt {
    c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = a.len() - db;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        trim(&mut r);
        steps -= 1;
    }
    // account for skipped steps so the multiplier is exactly lc(b)^(δ+1)
    if steps > 0 {
        let m = num_traits::pow(lb.clone(), steps);
        for c in r.iter_mut() {
            *c *= &m;
        }
    }
    r
}

fn subresultant_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let ca = int_content(&a);
    let cb = int_content(&b);
    let d = ca.gcd(&cb);
    a.iter_mut().for_each(|c| *c /= &ca);
    b.iter_mut().for_each(|c| *c /= &cb);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return vec![d];
        }
        let divisor = &g * num_traits::pow(h.clone(), delta as usize);
        a = std::mem::replace(&mut b, r.into_iter().map(|c| c / &divisor).collect());
        g = a.last().cloned().expect("nonzero");
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta as usize) / num_traits::pow(h.clone(), (delta - 1) as usize)
        };
    }
    let cb = int_content(&b);
    b.into_iter().map(|c| c / &cb * &d).collect()
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coef = if a.is_integer() { a.numer().to_string() } else { format!("({})", format_rat(&a)) };
            match i {
                0 => write!(f, "{coef}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{coef}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero_poly();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t {
                (&self).$m(&o)
            }
        }
    )*};
}
forward_owned!(UPoly, Add add, Sub sub, Mul mul);

impl Ring for UPoly {
    fn zero_elem() -> Self {
        UPoly::zero_poly()
    }
    fn one_elem() -> Self {
        UPoly::from_i64s(&[1])
    }
    fn from_int(n: &BigInt) -> Self {
        UPoly::constant(BigRat::from_integer(n.clone()))
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero_elem(&self) -> bool {
        UPoly::is_zero(self)
    }
}

/// Reduced quotient of polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::from_poly(UPoly::zero_poly()));
        }
        let g = num.gcd(&den)?;
        let mut num = num.exact_divide(&g)?;
        let mut den = den.exact_divide(&g)?;
        let l = den.lead();
        if !l.is_one() {
            let inv = l.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFunc { num: p, den: UPoly::from_i64s(&[1]) }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    /// The polynomial this function equals, if its denominator is 1.
    pub fn as_poly(&self) -> Option<&UPoly> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    pub fn eval(&self, x: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        if o.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&self.num * &o.den, &self.den * &o.num)
    }

    fn combine(&self, o: &RatFunc, sign: i32) -> RatFunc {
        if self.den == o.den {
            let n = if sign > 0 { &self.num + &o.num } else { &self.num - &o.num };
            return RatFunc::new(n, self.den.clone()).expect("nonzero denominator");
        }
        let a = &self.num * &o.den;
        let b = &o.num * &self.den;
        let n = if sign > 0 { &a + &b } else { &a - &b };
        RatFunc::new(n, &self.den * &o.den).expect("nonzero denominator")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({}) / ({})", self.num, self.den),
        }
    }
}

impl Ring for RatFunc {
    fn zero_elem() -> Self {
        RatFunc::from_poly(UPoly::zero_poly())
    }
    fn one_elem() -> Self {
        RatFunc::from_poly(UPoly::from_i64s(&[1]))
    }
    fn from_int(n: &BigInt) -> Self {
        RatFunc::from_poly(<UPoly as Ring>::from_int(n))
    }
    fn plus(&self, o: &Self) -> Self {
        self.combine(o, 1)
    }
    fn minus(&self, o: &Self) -> Self {
        self.combine(o, -1)
    }
    fn times(&self, o: &Self) -> Self {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominator")
    }
    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }
}

/// `g(t) = (t+1)(t+2)(t+3)(t+4)`, the square of `α`.
pub fn alpha_square() -> &'static UPoly {
    static G: OnceLock<UPoly> = OnceLock::new();
    G.get_or_init(|| UPoly::from_i64s(&[24, 50, 35, 10, 1]))
}

/// `u + v·α` with `α² = g(t)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExt {
    pub u: RatFunc,
    pub v: RatFunc,
}

impl QuadExt {
    pub fn new(u: RatFunc, v: RatFunc) -> Self {
        QuadExt { u, v }
    }

    pub fn from_polys(u: UPoly, v: UPoly) -> Self {
        QuadExt { u: RatFunc::from_poly(u), v: RatFunc::from_poly(v) }
    }

    pub fn alpha() -> Self {
        Self::from_polys(UPoly::zero_poly(), UPoly::from_i64s(&[1]))
    }

    /// `β = t² + 5t + 5 + α`.
    pub fn beta() -> Self {
        Self::from_polys(UPoly::from_i64s(&[5, 5, 1]), UPoly::from_i64s(&[1]))
    }

    /// `β̄ = t² + 5t + 5 − α`.
    pub fn beta_bar() -> Self {
        Self::beta().conj()
    }

    pub fn conj(&self) -> Self {
        QuadExt { u: self.u.clone(), v: self.v.negated() }
    }

    /// Multiplies by `1/α`: `(u + vα)/α = v + (u/g)α`.
    pub fn div_alpha(&self) -> Self {
        let g = RatFunc::from_poly(alpha_square().clone());
        QuadExt { u: self.v.clone(), v: self.u.div(&g).expect("g is nonzero") }
    }
}

impl Ring for QuadExt {
    fn zero_elem() -> Self {
        QuadExt { u: RatFunc::zero_elem(), v: RatFunc::zero_elem() }
    }
    fn one_elem() -> Self {
        QuadExt { u: RatFunc::one_elem(), v: RatFunc::zero_elem() }
    }
    fn from_int(n: &BigInt) -> Self {
        QuadExt { u: RatFunc::from_int(n), v: RatFunc::zero_elem() }
    }
    fn plus(&self, o: &Self) -> Self {
        QuadExt { u: self.u.plus(&o.u), v: self.v.plus(&o.v) }
    }
    fn minus(&self, o: &Self) -> Self {
        QuadExt { u: self.u.minus(&o.u), v: self.v.minus(&o.v) }
    }
    fn times(&self, o: &Self) -> Self {
        let g = RatFunc::from_poly(alpha_square().clone());
        QuadExt {
            u: self.u.times(&o.u).plus(&self.v.times(&o.v).times(&g)),
            v: self.u.times(&o.v).plus(&self.v.times(&o.u)),
        }
    }
    fn is_zero_elem(&self) -> bool {
        self.u.is_zero_elem() && self.v.is_zero_elem()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_i64s(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[3, 1]), p(&[3, 4, 1]));
        assert_eq!(&p(&[4, 5, 1]) * &p(&[6, 5, 1]), p(&[24, 50, 35, 10, 1]));
        let f = p(&[7, 0, -3]);
        assert_eq!(&f + &UPoly::zero_poly(), f);
        assert_eq!(&f - &f, UPoly::zero_poly());
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(p(&[-1, 0, 1]).exact_divide(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[1, 0, 1]).exact_divide(&p(&[-1, 1])), Err(Error::NonExact));
        assert_eq!(p(&[1, 0, 1]).exact_divide(&UPoly::zero_poly()), Err(Error::DivisionByZero));
        assert_eq!(alpha_square().exact_divide(&p(&[4, 1])).unwrap(), p(&[6, 11, 6, 1]));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
        let f = p(&[3, 0, 6]);
        assert_eq!(f.gcd(&UPoly::zero_poly()).unwrap(), f.monic());
        let g = alpha_square();
        assert_eq!(g.gcd(&g.derivative()).unwrap(), p(&[1]));
        assert!(UPoly::zero_poly().gcd(&UPoly::zero_poly()).is_err());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        // (t^2 + 1)(t - 3)^2 and (t^2 + 1)(2t + 5)
        let c = p(&[1, 0, 1]);
        let a = &(&c * &p(&[-3, 1])) * &p(&[-3, 1]);
        let b = &c * &p(&[5, 2]);
        assert_eq!(a.gcd(&b).unwrap(), c);
        // over Q, a non-monic rational factor
        let h = p(&[1, 3]).scale(&BigRat::new(1.into(), 7.into()));
        assert_eq!((&a * &h).gcd(&(&b * &h)).unwrap(), (&c * &p(&[1, 3])).monic());
    }

    #[test]
    fn eval_examples() {
        let xi11 = p(&[6, 19, 12, 2]);
        assert_eq!(xi11.eval(&rat(0)), rat(6));
        assert_eq!(xi11.eval(&rat(1)), rat(39));
        assert_eq!(UPoly::zero_poly().eval(&rat(17)), rat(0));
    }

    #[test]
    fn display_descending() {
        let f = p(&[-455, -970, -595, 0, 120, 40, 4]);
        assert_eq!(f.to_string(), "4t^6 + 40t^5 + 120t^4 - 595t^2 - 970t - 455");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(UPoly::parse(&f.to_string()).unwrap(), f);
        let q = UPoly::constant(BigRat::new(1.into(), 4.into()));
        assert_eq!((&q * &p(&[0, 0, 1])).to_string(), "(1/4)t^2");
    }

    #[test]
    fn quadext_examples() {
        let b = QuadExt::beta();
        let bb = QuadExt::beta_bar();
        assert_eq!(b.times(&bb), QuadExt::one_elem());
        let s = b.plus(&bb);
        assert_eq!(s, QuadExt::from_polys(p(&[10, 10, 2]), UPoly::zero_poly()));
        let a = QuadExt::alpha();
        assert_eq!(a.times(&a), QuadExt::from_polys(alpha_square().clone(), UPoly::zero_poly()));
    }

    #[test]
    fn beta_powers_are_units() {
        let b = QuadExt::beta();
        let bb = QuadExt::beta_bar();
        for n in 0..=12 {
            assert_eq!(b.power(n).times(&bb.power(n)), QuadExt::one_elem(), "n = {n}");
        }
    }

    #[test]
    fn ratfunc_canonical() {
        let num = &p(&[1, 1]) * &p(&[2, 3]);
        let den = (&p(&[1, 1]) * &p(&[0, 4])).scale(&rat(3));
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r.den(), &p(&[0, 1]));
        assert_eq!(r.num(), &p(&[2, 3]).scale(&BigRat::new(1.into(), 12.into())));
        assert_eq!(r.eval(&rat(0)), Err(Error::DenominatorVanishes));
        assert_eq!(RatFunc::new(p(&[1]), UPoly::zero_poly()), Err(Error::DivisionByZero));
    }

    fn small_poly() -> impl Strategy<Value = UPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| UPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn eval_is_a_ring_map(f in small_poly(), g in small_poly(), x in -30i64..30) {
            let x = rat(x);
            prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
            prop_assert_eq!((&f + &g).eval(&x), f.eval(&x) + g.eval(&x));
        }

        #[test]
        fn degree_of_product(f in small_poly(), g in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            prop_assert_eq!((&f * &g).degree(), Some(f.degree().unwrap() + g.degree().unwrap()));
        }

        #[test]
        fn ratfunc_multiplies_back(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assume!(!g.is_zero() && !h.is_zero());
            let num = &f * &h;
            let den = &g * &h;
            let r = RatFunc::new(num.clone(), den.clone()).unwrap();
            // num · r.den == den · r.num
            prop_assert_eq!(&num * r.den(), &den * r.num());
            prop_assert!(r.den().lead().is_one());
            let again = RatFunc::new(f.clone(), g.clone()).unwrap();
            prop_assert_eq!(r, again);
        }

        #[test]
        fn gcd_divides_both(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
            let a = &f * &h;
            let b = &g * &h;
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let d = a.gcd(&b).unwrap();
            prop_assert!(a.exact_divide(&d).is_ok());
            prop_assert!(b.exact_divide(&d).is_ok());
            prop_assert!(d.exact_divide(&h.monic()).is_ok());
        }
    }
}
