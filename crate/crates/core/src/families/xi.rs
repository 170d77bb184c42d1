//! The `ξ(n, t)` family: `ξ(0, t) = (t+1, …, t+4)`, the cubic `ξ(1, t)`,
//! and `ξ(n+2) = f(t)·ξ(n+1) − ξ(n)` with `f(t) = 2t² + 10t + 10`.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{is_trivial, BuchiSeq};
use crate::maps::{apply_zeta, Point4};
use crate::numkernel::{BigInt, BigRat};
use crate::polyring::{QuadExt, RatFunc, Ring, UPoly};

pub fn f_poly() -> UPoly {
    UPoly::from_i64s(&[10, 10, 2])
}

fn xi0() -> [UPoly; 4] {
    std::array::from_fn(|i| UPoly::from_i64s(&[i as i64 + 1, 1]))
}

fn xi1() -> [UPoly; 4] {
    [
        UPoly::from_i64s(&[6, 19, 12, 2]),
        UPoly::from_i64s(&[23, 31, 14, 2]),
        UPoly::from_i64s(&[32, 41, 16, 2]),
        UPoly::from_i64s(&[39, 49, 18, 2]),
    ]
}

/// Insert-only cache of the symbolic tuples `ξ(n, t)`.
pub struct XiTable {
    rows: RwLock<Vec<[UPoly; 4]>>,
}

impl Default for XiTable {
    fn default() -> Self {
        Self::new()
    }
}

impl XiTable {
    pub fn new() -> Self {
        XiTable { rows: RwLock::new(vec![xi0(), xi1()]) }
    }

    pub fn global() -> &'static XiTable {
        static T: OnceLock<XiTable> = OnceLock::new();
        T.get_or_init(XiTable::new)
    }

    pub fn get(&self, n: usize) -> [UPoly; 4] {
        if let Some(row) = self.rows.read().expect("xi cache poisoned").get(n) {
            return row.clone();
        }
        let mut rows = self.rows.write().expect("xi cache poisoned");
        let f = f_poly();
        while rows.len() <= n {
            let k = rows.len();
            let next = std::array::from_fn(|i| &(&f * &rows[k - 1][i]) - &rows[k - 2][i]);
            rows.push(next);
        }
        rows[n].clone()
    }
}

pub fn xi_poly(n: usize) -> [UPoly; 4] {
    XiTable::global().get(n)
}

/// Integer coefficient lists of `ξ(n, t)`.
pub fn xi_int_coeffs(n: usize) -> [Vec<BigInt>; 4] {
    xi_poly(n).map(|p| p.integer_coeffs().expect("xi has integer coefficients"))
}

/// `ξ(n, t)` at an integer `t`, by running the recurrence on values.
pub fn xi_eval(n: usize, t: &BigInt) -> BuchiSeq {
    let f = BigInt::from(2) * t * t + BigInt::from(10) * t + 10;
    let mut prev: Point4<BigInt> = std::array::from_fn(|i| t + (i as i64 + 1));
    if n == 0 {
        return BuchiSeq::new_unchecked(prev);
    }
    let mut cur: Point4<BigInt> = xi1().map(|p| p.eval_int(t).to_integer());
    for _ in 1..n {
        let next = std::array::from_fn(|i| &f * &cur[i] - &prev[i]);
        prev = std::mem::replace(&mut cur, next);
    }
    BuchiSeq::new_unchecked(cur)
}

/// `ξ(n, t)` from `((A + Bα)βⁿ − (A − Bα)β̄ⁿ)/(2α)` in the quadratic extension.
pub fn xi_closed_form(n: usize) -> Result<[UPoly; 4]> {
    let a_parts = [
        UPoly::from_i64s(&[1, 9, 6, 1]),
        UPoly::from_i64s(&[13, 16, 7, 1]),
        UPoly::from_i64s(&[17, 21, 8, 1]),
        UPoly::from_i64s(&[19, 24, 9, 1]),
    ];
    let beta_n = QuadExt::beta().power(n as u32);
    let beta_bar_n = QuadExt::beta_bar().power(n as u32);
    let half = BigRat::new(BigInt::one(), BigInt::from(2));
    let mut out: [Option<UPoly>; 4] = Default::default();
    for (i, a) in a_parts.into_iter().enumerate() {
        let b = UPoly::from_i64s(&[i as i64 + 1, 1]);
        let plus = QuadExt::from_polys(a.clone(), b.clone());
        let minus = QuadExt::from_polys(a, -&b);
        let diff = plus.times(&beta_n).minus(&minus.times(&beta_bar_n));
        let q = diff.div_alpha();
        if !q.v.is_zero_elem() {
            return Err(Error::Consistency(format!("alpha part survives in component {}", i + 1)));
        }
        let poly =
            q.u.as_poly().ok_or_else(|| Error::Consistency(format!("component {} is not a polynomial", i + 1)))?;
        out[i] = Some(poly.scale(&half));
    }
    Ok(out.map(|p| p.expect("filled")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// `u_{2n}`
    Even,
    /// `u_{2n−1}`
    Odd,
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Closed binomial sums for `u_{2n}` and `u_{2n−1}` when
/// `u_{k+2} = α·u_{k+1} − u_k`:
///
/// ```text
/// u_{2n}   = Σ_{k<n}   (−1)^{n+k+1} α^{2k} (C(n+k, n−k−1)·α·u₁ − C(n+k−1, n−k−1)·u₀)
/// u_{2n−1} = α^{2n−2}·u₁ + Σ_{k<n−1} (−1)^{n+k+1} α^{2k} (C(n+k−1, n−k−1)·u₁ + C(n+k−1, n−k−2)·α·u₀)
/// ```
///
/// `u2` is only checked against the recurrence.
pub fn binomial_sum_solve<R: Ring>(alpha: &R, u0: &R, u1: &R, u2: &R, n: usize, parity: Parity) -> Result<R> {
    if n == 0 {
        return Err(Error::Domain("index n must be at least 1".into()));
    }
    if alpha.times(u1).minus(u0) != *u2 {
        return Err(Error::Domain("u2 does not satisfy u2 = alpha*u1 - u0".into()));
    }
    let n = n as i64;
    let alpha_sq = alpha.times(alpha);
    let sign = |k: i64| if (n + k + 1) % 2 == 0 { R::one_elem() } else { R::one_elem().negated() };
    let c = |m: i64, k: i64| R::from_int(&binomial(m, k));
    let mut acc = R::zero_elem();
    let mut alpha_2k = R::one_elem();
    match parity {
        Parity::Even => {
            for k in 0..n {
                let inner = c(n + k, n - k - 1).times(alpha).times(u1).minus(&c(n + k - 1, n - k - 1).times(u0));
                acc = acc.plus(&sign(k).times(&alpha_2k).times(&inner));
                alpha_2k = alpha_2k.times(&alpha_sq);
            }
        }
        Parity::Odd => {
            for k in 0..n - 1 {
                let inner = c(n + k - 1, n - k - 1).times(u1).plus(&c(n + k - 1, n - k - 2).times(alpha).times(u0));
                acc = acc.plus(&sign(k).times(&alpha_2k).times(&inner));
                alpha_2k = alpha_2k.times(&alpha_sq);
            }
            // alpha_2k is now alpha^(2n-2)
            acc = acc.plus(&alpha_2k.times(u1));
        }
    }
    Ok(acc)
}

/// `ζ` applied to the symbolic point `ξ(n, t)` gives `ξ(n+1, t)` exactly.
pub fn zeta_step_check(n: usize) -> Result<bool> {
    let point = xi_poly(n).map(RatFunc::from_poly);
    let image = apply_zeta(&point)?;
    let next = xi_poly(n + 1).map(RatFunc::from_poly);
    Ok(image == next)
}

/// `ξ₄(n, t) = −ξ₁(n, −t−5)` and `ξ₃(n, t) = −ξ₂(n, −t−5)`.
pub fn symmetry_check(n: usize) -> bool {
    let xi = xi_poly(n);
    let reflect = UPoly::from_i64s(&[-5, -1]);
    let r1 = -&xi[0].compose(&reflect);
    let r2 = -&xi[1].compose(&reflect);
    xi[3] == r1 && xi[2] == r2
}

/// `ξ(n, t)` for `t = −1, −2, −3, −4`, each checked against its closed form
/// and for triviality.
pub fn negative_t_forms(n: usize) -> Result<[BuchiSeq; 4]> {
    let k = BigInt::from(n);
    let k3 = &k * BigInt::from(3);
    let one = BigInt::one();
    let s = if n.is_multiple_of(2) { one.clone() } else { -one.clone() };
    let c = |v: i64| BigInt::from(v);
    let expected: [Point4<BigInt>; 4] = [
        [-&k3, &k3 + c(1), &k3 + c(2), &k3 + c(3)],
        [&s * (&k - c(1)), &s * -&k, &s * (&k + c(1)), &s * (&k + c(2))],
        [&s * (-&k - c(2)), &s * (-&k - c(1)), &s * &k, &s * (c(1) - &k)],
        [-&k3 - c(3), -&k3 - c(2), -&k3 - c(1), k3.clone()],
    ];
    let mut out = Vec::with_capacity(4);
    for (j, exp) in expected.into_iter().enumerate() {
        let t = BigInt::from(-(j as i64) - 1);
        let got = xi_eval(n, &t);
        if got.coords() != &exp {
            return Err(Error::Consistency(format!("xi({n}, {t}) = {:?}, expected {exp:?}", got.coords())));
        }
        if is_trivial(got.coords()).is_none() {
            return Err(Error::Consistency(format!("xi({n}, {t}) is not trivial")));
        }
        out.push(got);
    }
    Ok(out.try_into().expect("four entries"))
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct GrowthReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl GrowthReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Ratio bound `ξ_i(n+1) > (2t² + 10t + 9)·ξ_i(n)` and gap bound
/// `ξ_{i+1}(n+1) − ξ_i(n+1) > (2t² + 10t + 9)(ξ_{i+1}(n) − ξ_i(n))` for
/// `1 ≤ n ≤ n_max`, `0 ≤ t ≤ t_max`, plus positivity and strict increase.
pub fn growth_check(n_max: usize, t_max: u64) -> GrowthReport {
    let mut report = GrowthReport::default();
    for t in 0..=t_max {
        let t = BigInt::from(t);
        let m = BigInt::from(2) * &t * &t + BigInt::from(10) * &t + 9;
        let mut cur = xi_eval(1, &t);
        for n in 1..=n_max {
            let next = xi_eval(n + 1, &t);
            let (a, b) = (cur.coords(), next.coords());
            for i in 0..4 {
                report.checked += 1;
                if b[i] <= &m * &a[i] {
                    report.failures.push(format!("ratio bound fails at n={n}, t={t}, i={}", i + 1));
                }
                if !a[i].is_positive() {
                    report.failures.push(format!("xi_{}({n}, {t}) is not positive", i + 1));
                }
            }
            for i in 0..3 {
                report.checked += 1;
                if &b[i + 1] - &b[i] <= &m * (&a[i + 1] - &a[i]) {
                    report.failures.push(format!("gap bound fails at n={n}, t={t}, i={}", i + 1));
                }
                if a[i + 1] <= a[i] {
                    report.failures.push(format!("xi({n}, {t}) not increasing at {}", i + 1));
                }
            }
            cur = next;
        }
    }
    report
}
