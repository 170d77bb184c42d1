//! Symmetries of the surface `X₄`.
//!
//! The sign changes `μ₁..μ₄` and the reversal `τ` generate the finite group
//! of trivial involutions. `φ` is the rational involution with numerators
//! `p₁..p₄` over `q = (b − c)²(a − 2b + c)`, read from `assets/phi.txt`, and
//! `ζ = φ ∘ τ ∘ μ₁₄` (`μ₁₄` applied first) is the infinite-order map that
//! drives the `ξ(n, t)` families.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numkernel::{format_rat, BigInt, BigRat};
use crate::polyring::{RatFunc, Ring};
use crate::quotient::{identity_holds, normal_form, MPoly4};

/// Four coordinates in some ring; not necessarily on the surface.
pub type Point4<T = BigRat> = [T; 4];

/// Rings where division by a nonzero element is available.
pub trait Field: Ring {
    fn divide(&self, o: &Self) -> Result<Self>;
}

impl Field for BigRat {
    fn divide(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / o)
    }
}

impl Field for RatFunc {
    fn divide(&self, o: &Self) -> Result<Self> {
        self.div(o)
    }
}

pub fn to_rat_point(x: &Point4<BigInt>) -> Point4<BigRat> {
    x.clone().map(BigRat::from_integer)
}

/// `Some` when every coordinate is an integer.
pub fn to_int_point(x: &Point4<BigRat>) -> Option<Point4<BigInt>> {
    if x.iter().all(|c| c.is_integer()) {
        Some(x.clone().map(|c| c.to_integer()))
    } else {
        None
    }
}

pub fn format_point(x: &Point4<BigRat>) -> String {
    let parts: Vec<String> = x.iter().map(format_rat).collect();
    format!("({})", parts.join(", "))
}

/// `x₁² − 2x₂² + x₃² = 2` and `x₂² − 2x₃² + x₄² = 2`.
pub fn on_surface<T: Ring>(x: &Point4<T>) -> bool {
    let two = T::from_int(&BigInt::from(2));
    let sq: Vec<T> = x.iter().map(|c| c.times(c)).collect();
    let first = sq[0].minus(&two.times(&sq[1])).plus(&sq[2]).minus(&two);
    let second = sq[1].minus(&two.times(&sq[2])).plus(&sq[3]).minus(&two);
    first.is_zero_elem() && second.is_zero_elem()
}

/// An element of the group generated by `μ₁..μ₄` and `τ`, acting as
/// `x ↦ (s₁·x_{π(1)}, …, s₄·x_{π(4)})` with `π` the identity or the reversal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TrivialInvolution {
    pub signs: [i8; 4],
    pub reversed: bool,
}

impl TrivialInvolution {
    pub const IDENTITY: TrivialInvolution = TrivialInvolution { signs: [1; 4], reversed: false };

    pub fn tau() -> Self {
        TrivialInvolution { signs: [1; 4], reversed: true }
    }

    /// `μ_i` for `i` in `1..=4`.
    pub fn mu(i: usize) -> Self {
        Self::mu_set(&[i])
    }

    /// `μ_{ij…}`: negate every listed (1-based) coordinate.
    pub fn mu_set(indices: &[usize]) -> Self {
        let mut signs = [1i8; 4];
        for &i in indices {
            assert!((1..=4).contains(&i), "coordinate index out of range");
            signs[i - 1] = -signs[i - 1];
        }
        TrivialInvolution { signs, reversed: false }
    }

    fn source(&self, i: usize) -> usize {
        if self.reversed {
            3 - i
        } else {
            i
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &TrivialInvolution) -> TrivialInvolution {
        let mut signs = [1i8; 4];
        for (i, s) in signs.iter_mut().enumerate() {
            *s = self.signs[i] * other.signs[self.source(i)];
        }
        TrivialInvolution { signs, reversed: self.reversed != other.reversed }
    }

    pub fn inverse(&self) -> TrivialInvolution {
        let mut g = *self;
        let mut prev = *self;
        while g != Self::IDENTITY {
            prev = g;
            g = g.compose(self);
        }
        prev
    }

    pub fn order(&self) -> u32 {
        let mut g = *self;
        let mut k = 1;
        while g != Self::IDENTITY {
            g = g.compose(self);
            k += 1;
        }
        k
    }

    pub fn apply<T: Ring>(&self, x: &Point4<T>) -> Point4<T> {
        std::array::from_fn(|i| {
            let v = x[self.source(i)].clone();
            if self.signs[i] < 0 {
                v.negated()
            } else {
                v
            }
        })
    }

    /// All 32 elements of the group.
    pub fn all() -> Vec<TrivialInvolution> {
        let mut out = Vec::with_capacity(32);
        for reversed in [false, true] {
            for mask in 0..16u8 {
                let signs = std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
                out.push(TrivialInvolution { signs, reversed });
            }
        }
        out
    }

    fn as_rational_map(&self) -> RationalMap {
        let vars: Point4<MPoly4> = std::array::from_fn(MPoly4::var);
        RationalMap { num: self.apply(&vars), den: MPoly4::one() }
    }
}

impl fmt::Debug for TrivialInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let neg: String = (0..4).filter(|&i| self.signs[i] < 0).map(|i| char::from(b'1' + i as u8)).collect();
        match (self.reversed, neg.is_empty()) {
            (false, true) => write!(f, "id"),
            (false, false) => write!(f, "μ{neg}"),
            (true, true) => write!(f, "τ"),
            (true, false) => write!(f, "μ{neg}τ"),
        }
    }
}

/// The numerators and common denominator of `φ`.
#[derive(Clone, Debug)]
pub struct PhiMap {
    pub p: [MPoly4; 4],
    pub q: MPoly4,
}

const PHI_ASSET: &str = include_str!("../assets/phi.txt");

impl PhiMap {
    pub fn parse(text: &str) -> Result<PhiMap> {
        let mut p: [Option<MPoly4>; 4] = Default::default();
        let mut q = None;
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, expr) =
                line.split_once('=').ok_or_else(|| Error::Parse(format!("expected `name = poly`: {line}")))?;
            let poly = MPoly4::parse(expr)?;
            match name.trim() {
                "q" => q = Some(poly),
                "p1" => p[0] = Some(poly),
                "p2" => p[1] = Some(poly),
                "p3" => p[2] = Some(poly),
                "p4" => p[3] = Some(poly),
                other => return Err(Error::Parse(format!("unknown entry {other}"))),
            }
        }
        let missing = |n: &str| Error::Parse(format!("missing {n}"));
        let [p1, p2, p3, p4] = p;
        Ok(PhiMap {
            p: [
                p1.ok_or_else(|| missing("p1"))?,
                p2.ok_or_else(|| missing("p2"))?,
                p3.ok_or_else(|| missing("p3"))?,
                p4.ok_or_else(|| missing("p4"))?,
            ],
            q: q.ok_or_else(|| missing("q"))?,
        })
    }

    pub fn bundled() -> &'static PhiMap {
        static PHI: OnceLock<PhiMap> = OnceLock::new();
        PHI.get_or_init(|| PhiMap::parse(PHI_ASSET).expect("bundled phi asset parses"))
    }

    fn as_rational_map(&self) -> RationalMap {
        RationalMap { num: self.p.clone(), den: self.q.clone() }
    }
}

pub fn apply_trivial<T: Ring>(g: &TrivialInvolution, x: &Point4<T>) -> Point4<T> {
    g.apply(x)
}

/// `φ(x) = (p₁/q, …, p₄/q)(x)`.
pub fn apply_phi<T: Field>(x: &Point4<T>) -> Result<Point4<T>> {
    let phi = PhiMap::bundled();
    let q = phi.q.eval(x);
    if q.is_zero_elem() {
        return Err(Error::DenominatorVanishes);
    }
    let mut out: [Option<T>; 4] = Default::default();
    for (slot, p) in out.iter_mut().zip(&phi.p) {
        *slot = Some(p.eval(x).divide(&q)?);
    }
    Ok(out.map(|c| c.expect("filled")))
}

/// `φ` on an integer point, evaluating the numerators over the integers.
pub fn apply_phi_int(x: &Point4<BigInt>) -> Result<Point4<BigRat>> {
    let phi = PhiMap::bundled();
    let q = phi.q.eval(x);
    if q.is_zero() {
        return Err(Error::DenominatorVanishes);
    }
    Ok(std::array::from_fn(|i| BigRat::new(phi.p[i].eval(x), q.clone())))
}

fn tau_mu14() -> TrivialInvolution {
    TrivialInvolution::tau().compose(&TrivialInvolution::mu_set(&[1, 4]))
}

/// `ζ = φ ∘ τ ∘ μ₁₄`.
pub fn apply_zeta<T: Field>(x: &Point4<T>) -> Result<Point4<T>> {
    apply_phi(&tau_mu14().apply(x))
}

/// `ζ⁻¹ = μ₁₄ ∘ τ ∘ φ`.
pub fn apply_zeta_inv<T: Field>(x: &Point4<T>) -> Result<Point4<T>> {
    Ok(tau_mu14().inverse().apply(&apply_phi(x)?))
}

pub fn apply_zeta_int(x: &Point4<BigInt>) -> Result<Point4<BigRat>> {
    apply_phi_int(&tau_mu14().apply(x))
}

pub fn apply_zeta_inv_int(x: &Point4<BigInt>) -> Result<Point4<BigRat>> {
    Ok(tau_mu14().inverse().apply(&apply_phi_int(x)?))
}

/// `[x, ζx, …, ζⁿx]`.
pub fn zeta_orbit<T: Field>(x: &Point4<T>, n: usize) -> Result<Vec<Point4<T>>> {
    let mut out = vec![x.clone()];
    for _ in 0..n {
        let next = apply_zeta(out.last().expect("nonempty"))?;
        out.push(next);
    }
    Ok(out)
}

/// `u₀ = 0, u₁ = 1, u_{n+2} = 10u_{n+1} − u_n`, memoized.
#[derive(Default)]
pub struct PellSeq {
    values: RwLock<Vec<BigInt>>,
}

impl PellSeq {
    pub fn new() -> Self {
        PellSeq { values: RwLock::new(vec![BigInt::from(0), BigInt::from(1)]) }
    }

    pub fn global() -> &'static PellSeq {
        static P: OnceLock<PellSeq> = OnceLock::new();
        P.get_or_init(PellSeq::new)
    }

    pub fn get(&self, n: usize) -> BigInt {
        if let Some(v) = self.values.read().expect("pell cache poisoned").get(n) {
            return v.clone();
        }
        let mut vals = self.values.write().expect("pell cache poisoned");
        while vals.len() <= n {
            let k = vals.len();
            let next = BigInt::from(10) * &vals[k - 1] - &vals[k - 2];
            vals.push(next);
        }
        vals[n].clone()
    }
}

/// `u_n·(6, 23, 32, 39) − u_{n−1}·(1, 2, 3, 4)` for `n ≥ 1`.
pub fn pell_orbit_point(n: usize) -> Point4<BigInt> {
    assert!(n >= 1);
    let u = PellSeq::global();
    let (un, um) = (u.get(n), u.get(n - 1));
    let hi = [6, 23, 32, 39];
    let lo = [1, 2, 3, 4];
    std::array::from_fn(|i| &un * hi[i] - &um * lo[i])
}

/// A rational self-map of affine 4-space with a common denominator.
#[derive(Clone, Debug)]
pub struct RationalMap {
    pub num: [MPoly4; 4],
    pub den: MPoly4,
}

impl RationalMap {
    pub fn identity() -> Self {
        TrivialInvolution::IDENTITY.as_rational_map()
    }

    pub fn trivial(g: &TrivialInvolution) -> Self {
        g.as_rational_map()
    }

    pub fn phi() -> Self {
        PhiMap::bundled().as_rational_map()
    }

    pub fn zeta() -> Self {
        RationalMap::phi().compose(&RationalMap::trivial(&tau_mu14()))
    }

    /// `self ∘ inner`, reduced modulo the surface relations.
    pub fn compose(&self, inner: &RationalMap) -> RationalMap {
        let degree = self.num.iter().chain(std::iter::once(&self.den)).map(MPoly4::total_degree).max().unwrap_or(0);
        let mut den_pows = vec![MPoly4::one()];
        for k in 1..=degree as usize {
            let next = normal_form(&den_pows[k - 1].mul(&inner.den)).into_inner();
            den_pows.push(next);
        }
        let mut var_pows: [Vec<MPoly4>; 4] = Default::default();
        for (i, pw) in var_pows.iter_mut().enumerate() {
            pw.push(MPoly4::one());
            for k in 1..=degree as usize {
                let next = normal_form(&pw[k - 1].mul(&inner.num[i])).into_inner();
                pw.push(next);
            }
        }
        let substitute = |p: &MPoly4| -> MPoly4 {
            let mut acc = MPoly4::zero();
            for (e, c) in p.terms() {
                let deg: u32 = e.iter().sum();
                let mut term = den_pows[(degree - deg) as usize].scale(c);
                for i in 0..4 {
                    if e[i] > 0 {
                        term = normal_form(&term.mul(&var_pows[i][e[i] as usize])).into_inner();
                    }
                }
                acc = acc.add(&term);
            }
            acc
        };
        RationalMap { num: std::array::from_fn(|i| substitute(&self.num[i])), den: substitute(&self.den) }
    }

    /// Equality as rational maps on the surface: `F_i·E − G_i·D ≡ 0`.
    pub fn agrees_with(&self, other: &RationalMap) -> bool {
        (0..4).all(|i| identity_holds(&self.num[i].mul(&other.den).sub(&other.num[i].mul(&self.den))))
    }

    /// Both surface equations hold for the image, cleared of denominators.
    pub fn preserves_surface(&self) -> bool {
        let sq: Vec<MPoly4> = self.num.iter().map(|p| normal_form(&p.mul(p)).into_inner()).collect();
        let d2 = normal_form(&self.den.mul(&self.den)).into_inner();
        let two = BigInt::from(2);
        let first = sq[0].sub(&sq[1].scale(&two)).add(&sq[2]).sub(&d2.scale(&two));
        let second = sq[1].sub(&sq[2].scale(&two)).add(&sq[3]).sub(&d2.scale(&two));
        identity_holds(&first) && identity_holds(&second)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
}

fn check(name: impl Into<String>, passed: bool) -> RelationCheck {
    RelationCheck { name: name.into(), passed }
}

/// Checks the relations among `μ_i`, `τ`, `φ` and `ζ`. Relations involving
/// `φ` are verified as exact normal-form-zero identities.
pub fn verify_group_relations() -> Vec<RelationCheck> {
    use TrivialInvolution as G;
    let mut out = Vec::new();
    let tau = G::tau();
    for i in 1..=4 {
        for j in i + 1..=4 {
            out.push(check(
                format!("mu{i} mu{j} = mu{j} mu{i}"),
                G::mu(i).compose(&G::mu(j)) == G::mu(j).compose(&G::mu(i)),
            ));
        }
    }
    for i in 1..=4 {
        let sigma = 5 - i;
        out.push(check(format!("tau mu{i} tau = mu{sigma}"), tau.compose(&G::mu(i)).compose(&tau) == G::mu(sigma)));
    }
    out.push(check("tau mu1 = mu4 tau", tau.compose(&G::mu(1)) == G::mu(4).compose(&tau)));
    out.push(check("tau mu2 = mu3 tau", tau.compose(&G::mu(2)) == G::mu(3).compose(&tau)));
    for set in [[1, 4], [2, 3]] {
        let m = G::mu_set(&set);
        out.push(check(
            format!("tau mu{}{} = mu{}{} tau", set[0], set[1], set[0], set[1]),
            tau.compose(&m) == m.compose(&tau),
        ));
    }
    for i in 1..=4 {
        out.push(check(format!("tau mu{i} has order 4"), tau.compose(&G::mu(i)).order() == 4));
    }
    let generators_preserve =
        (1..=4).map(G::mu).chain(std::iter::once(tau)).all(|g| RationalMap::trivial(&g).preserves_surface());
    out.push(check("mu_i and tau preserve the surface", generators_preserve));

    let phi = PhiMap::bundled();
    let q_expected = MPoly4::parse("(b - c)^2(a - 2b + c)").expect("static");
    out.push(check("q = (b - c)^2 (a - 2b + c)", phi.q == q_expected));
    out.push(check("phi is odd (p_i even, q odd)", phi.p.iter().all(MPoly4::is_even) && phi.q.is_odd()));

    let phi_map = RationalMap::phi();
    out.push(check("phi maps the surface to itself", phi_map.preserves_surface()));

    let two = BigInt::from(2);
    let lin1 = phi.p[0].sub(&phi.p[1].scale(&two)).add(&phi.p[2]);
    let rhs1 = MPoly4::parse("a - 2b + c").expect("static").mul(&phi.q);
    out.push(check("(phi1 - 2 phi2 + phi3) = a - 2b + c", identity_holds(&lin1.sub(&rhs1))));
    let lin2 = phi.p[1].sub(&phi.p[2].scale(&two)).add(&phi.p[3]);
    let rhs2 = MPoly4::parse("b - 2c + d").expect("static").mul(&phi.q);
    out.push(check("(phi2 - 2 phi3 + phi4) = b - 2c + d", identity_holds(&lin2.sub(&rhs2))));

    let phi_phi = phi_map.compose(&phi_map);
    out.push(check("phi^2 = id", phi_phi.agrees_with(&RationalMap::identity())));

    let tau_map = RationalMap::trivial(&tau);
    out.push(check("tau phi = phi tau", tau_map.compose(&phi_map).agrees_with(&phi_map.compose(&tau_map))));
    let zeta = RationalMap::zeta();
    out.push(check("tau zeta tau = zeta", tau_map.compose(&zeta).compose(&tau_map).agrees_with(&zeta)));
    out
}
