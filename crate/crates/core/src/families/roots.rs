//! Exact integer roots of integer polynomials.
//!
//! The real line is cut at integer breakpoints so that between consecutive
//! breakpoints the polynomial is either strictly monotone or the gap has no
//! interior integers; each monotone stretch is then bisected. Breakpoints come
//! from the sign changes of the derivative, found the same way recursively.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::numkernel::BigInt;
use crate::polyring::horner;

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

fn sign(p: &[BigInt], x: &BigInt) -> Ordering {
    horner(p, x).cmp(&BigInt::zero())
}

/// Sign of `p(x)` as `x → +∞` (`up`) or `x → −∞`.
fn sign_at_infinity(p: &[BigInt], up: bool) -> Ordering {
    let lead = p.last().expect("nonzero polynomial").cmp(&BigInt::zero());
    if up || (p.len() - 1).is_multiple_of(2) {
        lead
    } else {
        lead.reverse()
    }
}

/// Finds `m` in `[lo, hi)` with `sign(p(m)) ≠ sign(p(m+1))` or `p(m) = 0`,
/// assuming the signs at `lo` and `hi` differ and `p` is monotone on `[lo, hi]`.
fn bisect_change(p: &[BigInt], mut lo: BigInt, mut hi: BigInt) -> BigInt {
    let s_lo = sign(p, &lo);
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        let s = sign(p, &mid);
        if s == Ordering::Equal {
            return mid;
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Walks outward from `start` in steps that double until the sign of `p`
/// becomes `target` (or zero); returns the far end.
fn gallop(p: &[BigInt], start: &BigInt, up: bool, target: Ordering) -> BigInt {
    let mut step = BigInt::one();
    loop {
        let x = if up { start + &step } else { start - &step };
        let s = sign(p, &x);
        if s == target || s == Ordering::Equal {
            return x;
        }
        step <<= 1;
    }
}

/// Sorted integers cutting the line into pieces on which `p` is monotone or
/// which contain no interior integer.
fn breakpoints(p: &[BigInt]) -> Vec<BigInt> {
    if p.len() <= 2 {
        return Vec::new();
    }
    let dp = trim(derivative(p));
    let inner = breakpoints(&dp);
    let mut out = inner.clone();
    let push_change = |lo: BigInt, hi: BigInt, out: &mut Vec<BigInt>| {
        let m = bisect_change(&dp, lo, hi);
        out.push(m.clone());
        out.push(m + 1);
    };
    // stretches between the derivative's own breakpoints
    for w in inner.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let (sa, sb) = (sign(&dp, a), sign(&dp, b));
        if sa != sb && b - a > BigInt::one() {
            push_change(a.clone(), b.clone(), &mut out);
        }
    }
    // the two unbounded tails
    let anchor = inner.first().cloned().unwrap_or_else(BigInt::zero);
    let s_inf = sign_at_infinity(&dp, false);
    if sign(&dp, &anchor) != s_inf {
        let far = gallop(&dp, &anchor, false, s_inf);
        push_change(far, anchor.clone(), &mut out);
    }
    let anchor_hi = inner.last().cloned().unwrap_or_else(BigInt::zero);
    let s_inf = sign_at_infinity(&dp, true);
    if sign(&dp, &anchor_hi) != s_inf {
        let far = gallop(&dp, &anchor_hi, true, s_inf);
        push_change(anchor_hi.clone(), far, &mut out);
    }
    if inner.is_empty() {
        out.push(BigInt::zero());
    }
    out.sort();
    out.dedup();
    out
}

/// All integer roots of the polynomial with coefficients `p` (lowest degree
/// first), in increasing order. The zero polynomial has no reported roots.
pub fn integer_roots(p: &[BigInt]) -> Vec<BigInt> {
    let p = trim(p.to_vec());
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let check = |x: &BigInt, roots: &mut Vec<BigInt>| {
        if horner(&p, x).is_zero() {
            roots.push(x.clone());
        }
    };
    let cuts = breakpoints(&p);
    let cuts = if cuts.is_empty() { vec![BigInt::zero()] } else { cuts };
    for c in &cuts {
        check(c, &mut roots);
    }
    for w in cuts.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if b - a > BigInt::one() {
            let (sa, sb) = (sign(&p, a), sign(&p, b));
            if sa != sb && sa != Ordering::Equal && sb != Ordering::Equal {
                let m = bisect_change(&p, a.clone(), b.clone());
                check(&m, &mut roots);
                check(&(m + 1), &mut roots);
            }
        }
    }
    for up in [false, true] {
        let anchor = if up { cuts.last() } else { cuts.first() }.expect("nonempty");
        let s = sign(&p, anchor);
        let s_inf = sign_at_infinity(&p, up);
        if s != s_inf && s != Ordering::Equal {
            let far = gallop(&p, anchor, up, s_inf);
            let (lo, hi) = if up { (anchor.clone(), far) } else { (far, anchor.clone()) };
            let m = bisect_change(&p, lo, hi);
            check(&m, &mut roots);
            check(&(m + 1), &mut roots);
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Integer `t ≥ 0` with `p(t) = value`, for `p` with nonnegative coefficients
/// (hence nondecreasing on `t ≥ 0`).
pub fn increasing_preimage(p: &[BigInt], value: &BigInt) -> Option<BigInt> {
    debug_assert!(p.iter().all(|c| !c.is_negative()));
    let at = |t: &BigInt| horner(p, t);
    let mut lo = BigInt::zero();
    if &at(&lo) > value {
        return None;
    }
    let mut hi = BigInt::one();
    while &at(&hi) < value {
        lo = hi.clone();
        hi <<= 1;
    }
    while lo < hi {
        let mid: BigInt = (&lo + &hi) >> 1;
        if &at(&mid) < value {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    (&at(&lo) == value).then_some(lo)
}
