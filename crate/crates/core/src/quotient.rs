//! Integer polynomials in `a, b, c, d` and their normal forms modulo the
//! two surface relations
//!
//! ```text
//! a² = 2b² − c² + 2        d² = 2c² − b² + 2
//! ```
//!
//! The leading monomials `a²` and `d²` are coprime, so the two rules form a
//! Gröbner basis and the reduced representative (every monomial of degree at
//! most one in `a` and in `d`) is unique. Neither rule reintroduces `a` or
//! `d`, so a single sweep suffices.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::numkernel::BigInt;
use crate::parse::parse_sparse;
use crate::polyring::Ring;

pub type Exponents = [u32; 4];

pub const VARS: [char; 4] = ['a', 'b', 'c', 'd'];

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly4 {
    terms: BTreeMap<Exponents, BigInt>,
}

impl MPoly4 {
    pub fn zero() -> Self {
        MPoly4::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = MPoly4::default();
        p.add_term([0; 4], c);
        p
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The coordinate `a`, `b`, `c` or `d` for `i = 0..4`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        let mut p = MPoly4::default();
        p.add_term(e, BigInt::one());
        p
    }

    pub fn parse(text: &str) -> Result<Self> {
        let sparse = parse_sparse(text, &VARS)?;
        let mut p = MPoly4::default();
        for (e, c) in sparse.terms {
            p.add_term([e[0], e[1], e[2], e[3]], c);
        }
        Ok(p)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &MPoly4) -> MPoly4 {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &MPoly4) -> MPoly4 {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn neg(&self) -> MPoly4 {
        MPoly4 { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> MPoly4 {
        if k.is_zero() {
            return MPoly4::zero();
        }
        MPoly4 { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    pub fn mul(&self, o: &MPoly4) -> MPoly4 {
        let mut out: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                *out.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        MPoly4 { terms: out }
    }

    pub fn pow(&self, k: u32) -> MPoly4 {
        let mut acc = MPoly4::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates at a point whose coordinates live in any ring.
    pub fn eval<R: Ring>(&self, x: &[R; 4]) -> R {
        let mut powers: [Vec<R>; 4] = Default::default();
        for (i, pw) in powers.iter_mut().enumerate() {
            let max = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
            pw.push(R::one_elem());
            for k in 1..=max as usize {
                let next = pw[k - 1].times(&x[i]);
                pw.push(next);
            }
        }
        let mut acc = R::zero_elem();
        for (e, c) in &self.terms {
            let mut term = R::from_int(c);
            for i in 0..4 {
                if e[i] > 0 {
                    term = term.times(&powers[i][e[i] as usize]);
                }
            }
            acc = acc.plus(&term);
        }
        acc
    }

    /// Substitutes each variable by a polynomial, reducing modulo the
    /// relations after every product to keep intermediate sizes bounded.
    pub fn substitute_reduced(&self, x: &[MPoly4; 4]) -> NormalForm {
        let mut powers: [Vec<MPoly4>; 4] = Default::default();
        for (i, pw) in powers.iter_mut().enumerate() {
            let max = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
            pw.push(MPoly4::one());
            for k in 1..=max as usize {
                let next = normal_form(&pw[k - 1].mul(&x[i])).into_inner();
                pw.push(next);
            }
        }
        let mut acc = MPoly4::zero();
        for (e, c) in &self.terms {
            let mut term = MPoly4::constant(c.clone());
            for i in 0..4 {
                if e[i] > 0 {
                    term = normal_form(&term.mul(&powers[i][e[i] as usize])).into_inner();
                }
            }
            acc = acc.add(&term);
        }
        NormalForm(acc)
    }

    /// `p(x) = p(−x)` for every `x`.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() % 2 == 1)
    }
}

impl Ring for MPoly4 {
    fn zero_elem() -> Self {
        MPoly4::zero()
    }
    fn one_elem() -> Self {
        MPoly4::one()
    }
    fn from_int(n: &BigInt) -> Self {
        MPoly4::constant(n.clone())
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl fmt::Display for MPoly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // graded order, highest total degree first
        let mut keys: Vec<&Exponents> = self.terms.keys().collect();
        keys.sort_by(|x, y| {
            let dx: u32 = x.iter().sum();
            let dy: u32 = y.iter().sum();
            dy.cmp(&dx).then_with(|| y.cmp(x))
        });
        for (n, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let neg = c.is_negative();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let a = c.abs();
            let is_const = e.iter().all(|&x| x == 0);
            if !a.is_one() || is_const {
                write!(f, "{a}")?;
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "{}", VARS[i])?,
                    _ => write!(f, "{}^{k}", VARS[i])?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly4({self})")
    }
}

/// A polynomial with every monomial of degree at most one in `a` and `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm(MPoly4);

impl NormalForm {
    pub fn as_poly(&self) -> &MPoly4 {
        &self.0
    }

    pub fn into_inner(self) -> MPoly4 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// `2b² − c² + 2`, the value of `a²` on the surface.
pub fn a_square_rule() -> MPoly4 {
    MPoly4::parse("2b^2 - c^2 + 2").expect("static polynomial")
}

/// `2c² − b² + 2`, the value of `d²` on the surface.
pub fn d_square_rule() -> MPoly4 {
    MPoly4::parse("2c^2 - b^2 + 2").expect("static polynomial")
}

fn rule_powers(rule: &MPoly4, max: u32) -> Vec<MPoly4> {
    let mut out = vec![MPoly4::one()];
    for k in 1..=max as usize {
        let next = out[k - 1].mul(rule);
        out.push(next);
    }
    out
}

/// Canonical representative of `p` modulo the two surface relations.
pub fn normal_form(p: &MPoly4) -> NormalForm {
    let max_a = p.terms.keys().map(|e| e[0] / 2).max().unwrap_or(0);
    let max_d = p.terms.keys().map(|e| e[3] / 2).max().unwrap_or(0);
    if max_a == 0 && max_d == 0 {
        return NormalForm(p.clone());
    }
    let a_pows = rule_powers(&a_square_rule(), max_a);
    let d_pows = rule_powers(&d_square_rule(), max_d);
    // group by (a-rule power, d-rule power) so each product is formed once
    let mut groups: BTreeMap<(u32, u32), MPoly4> = BTreeMap::new();
    for (e, c) in &p.terms {
        let key = (e[0] / 2, e[3] / 2);
        let rest = [e[0] % 2, e[1], e[2], e[3] % 2];
        groups.entry(key).or_default().add_term(rest, c.clone());
    }
    let mut out = MPoly4::zero();
    for ((ka, kd), rest) in groups {
        let factor = a_pows[ka as usize].mul(&d_pows[kd as usize]);
        out = out.add(&rest.mul(&factor));
    }
    NormalForm(out)
}

/// True when `p` vanishes identically on the surface.
pub fn identity_holds(p: &MPoly4) -> bool {
    normal_form(p).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::int;
    use proptest::prelude::*;

    fn mp(s: &str) -> MPoly4 {
        MPoly4::parse(s).unwrap()
    }

    #[test]
    fn rewrite_examples() {
        assert_eq!(normal_form(&mp("a^2")).into_inner(), mp("2b^2 - c^2 + 2"));
        assert!(identity_holds(&mp("a^2 - 2b^2 + c^2 - 2")));
        assert_eq!(normal_form(&mp("a^2d^2")).into_inner(), mp("-2b^4 + 5b^2c^2 + 2b^2 - 2c^4 + 2c^2 + 4"));
        assert!(!identity_holds(&mp("a - b")));
        assert!(identity_holds(&mp("d^2 - (2c^2 - b^2 + 2)")));
    }

    #[test]
    fn normal_form_bounds_exponents() {
        let nf = normal_form(&mp("a^5 d^3 b + a^4 c^2 - 7d^6 + abcd"));
        for (e, _) in nf.as_poly().terms() {
            assert!(e[0] <= 1 && e[3] <= 1, "{e:?}");
        }
    }

    #[test]
    fn display_round_trip() {
        let p = mp("-2ab^3 + ab^2c + 5abcd - 2");
        assert_eq!(MPoly4::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn eval_on_integer_point() {
        let p = mp("a^2 - 2b^2 + c^2");
        assert_eq!(p.eval(&[int(59), int(630), int(889), int(1088)]), int(2));
    }

    fn small_mpoly() -> impl Strategy<Value = MPoly4> {
        prop::collection::vec(((0u32..4, 0u32..3, 0u32..3, 0u32..4), -9i64..9), 0..5).prop_map(|terms| {
            let mut p = MPoly4::zero();
            for ((a, b, c, d), k) in terms {
                p.add_term([a, b, c, d], int(k));
            }
            p
        })
    }

    // rows of the bundled table are points of the surface
    const POINTS: [[i64; 4]; 4] = [[59, 630, 889, 1088], [83, 516, 725, 886], [6, 23, 32, 39], [-4, 3, 2, -1]];

    proptest! {
        #[test]
        fn normal_form_is_idempotent(p in small_mpoly()) {
            let once = normal_form(&p).into_inner();
            prop_assert_eq!(normal_form(&once).into_inner(), once);
        }

        #[test]
        fn normal_form_is_a_ring_map(p in small_mpoly(), q in small_mpoly()) {
            let np = normal_form(&p).into_inner();
            let nq = normal_form(&q).into_inner();
            prop_assert_eq!(
                normal_form(&p.mul(&q)).into_inner(),
                normal_form(&np.mul(&nq)).into_inner()
            );
            prop_assert_eq!(
                normal_form(&p.add(&q)).into_inner(),
                normal_form(&np.add(&nq)).into_inner()
            );
        }

        #[test]
        fn normal_form_agrees_on_surface_points(p in small_mpoly(), i in 0usize..4) {
            let x = POINTS[i].map(int);
            prop_assert_eq!(p.eval(&x), normal_form(&p).as_poly().eval(&x));
        }
    }
}
