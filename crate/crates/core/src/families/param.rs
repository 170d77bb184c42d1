//! The quartic family `P` (with its integral reparametrizations `P(2t)` and
//! `P(4t+1)`), the non-integral 1/3-family, and the rational families
//! `R₁..R₁₅`, all read from `assets/families.txt`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::BuchiSeq;
use crate::maps::{on_surface, Point4};
use crate::numkernel::{BigInt, BigRat};
use crate::polyring::{horner, RatFunc, UPoly};

/// A common denominator and four numerators in `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamTuple {
    pub name: String,
    pub den: UPoly,
    pub num: [UPoly; 4],
}

impl ParamTuple {
    pub fn eval(&self, t: &BigRat) -> Result<Point4<BigRat>> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(std::array::from_fn(|i| self.num[i].eval(t) / &d))
    }

    pub fn ratfuncs(&self) -> Result<[RatFunc; 4]> {
        let mut out: [Option<RatFunc>; 4] = Default::default();
        for (slot, n) in out.iter_mut().zip(&self.num) {
            *slot = Some(RatFunc::new(n.clone(), self.den.clone())?);
        }
        Ok(out.map(|c| c.expect("filled")))
    }

    /// Both surface equations hold identically in `t`.
    pub fn on_surface_symbolic(&self) -> bool {
        self.ratfuncs().map(|r| on_surface(&r)).unwrap_or(false)
    }

    /// All four components reduce to the same denominator.
    pub fn shared_denominator(&self) -> bool {
        match self.ratfuncs() {
            Ok(r) => r.iter().all(|c| c.den() == r[0].den()),
            Err(_) => false,
        }
    }

    fn int_parts(&self) -> Option<(Vec<BigInt>, [Vec<BigInt>; 4])> {
        let den = self.den.integer_coeffs()?;
        let mut num: [Vec<BigInt>; 4] = Default::default();
        for (slot, n) in num.iter_mut().zip(&self.num) {
            *slot = n.integer_coeffs()?;
        }
        Some((den, num))
    }
}

fn parse_blocks(text: &str) -> Result<BTreeMap<String, ParamTuple>> {
    let mut out = BTreeMap::new();
    let mut current: Option<(String, BTreeMap<String, UPoly>)> = None;
    let finish = |name: String, fields: BTreeMap<String, UPoly>| -> Result<ParamTuple> {
        let get =
            |k: &str| fields.get(k).cloned().ok_or_else(|| Error::Parse(format!("block [{name}] is missing `{k} =`")));
        Ok(ParamTuple { den: get("den")?, num: [get("1")?, get("2")?, get("3")?, get("4")?], name: name.clone() })
    };
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            if let Some((n, f)) = current.take() {
                out.insert(n.clone(), finish(n, f)?);
            }
            current = Some((name.to_string(), BTreeMap::new()));
            continue;
        }
        let (key, value) =
            line.split_once('=').ok_or_else(|| Error::Parse(format!("expected `key = polynomial`, got {line:?}")))?;
        let (_, fields) = current.as_mut().ok_or_else(|| Error::Parse("entry before the first [block]".into()))?;
        fields.insert(key.trim().to_string(), UPoly::parse(value.trim())?);
    }
    if let Some((n, f)) = current.take() {
        out.insert(n.clone(), finish(n, f)?);
    }
    Ok(out)
}

/// Everything in the bundled asset.
pub struct FamilyTables {
    pub p: ParamTuple,
    pub p_even: ParamTuple,
    pub p_one_mod_four: ParamTuple,
    pub third: ParamTuple,
    pub r: Vec<ParamTuple>,
    r_int: Vec<(Vec<BigInt>, [Vec<BigInt>; 4])>,
}

impl FamilyTables {
    pub fn parse(text: &str) -> Result<Self> {
        let mut blocks = parse_blocks(text)?;
        let mut take = |k: &str| blocks.remove(k).ok_or_else(|| Error::Parse(format!("missing block [{k}]")));
        let p = take("P")?;
        let p_even = take("P(2t)")?;
        let p_one_mod_four = take("P(4t+1)")?;
        let third = take("third")?;
        let r = (1..=15).map(|i| take(&format!("R{i}"))).collect::<Result<Vec<_>>>()?;
        let r_int = r
            .iter()
            .map(|f| f.int_parts().ok_or_else(|| Error::Parse(format!("[{}] has non-integer coefficients", f.name))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilyTables { p, p_even, p_one_mod_four, third, r, r_int })
    }

    pub fn bundled() -> &'static FamilyTables {
        static T: OnceLock<FamilyTables> = OnceLock::new();
        T.get_or_init(|| {
            FamilyTables::parse(include_str!("../../assets/families.txt")).expect("bundled families asset parses")
        })
    }

    /// Every tuple, in asset order.
    pub fn all(&self) -> Vec<&ParamTuple> {
        let mut v = vec![&self.p, &self.p_even, &self.p_one_mod_four, &self.third];
        v.extend(self.r.iter());
        v
    }

    /// `R_i` for `i` in `1..=15`.
    pub fn r(&self, i: usize) -> Result<&ParamTuple> {
        if !(1..=15).contains(&i) {
            return Err(Error::Domain(format!("R index must be in 1..=15, got {i}")));
        }
        Ok(&self.r[i - 1])
    }

    /// `P(2t)` and `P(4t+1)` as printed agree with `P` composed with the
    /// substitution.
    pub fn p_reparametrizations_agree(&self) -> bool {
        let check = |sub: &ParamTuple, inner: UPoly| {
            let four = BigRat::from_integer(BigInt::from(4));
            (0..4).all(|i| {
                self.p.num[i].compose(&inner).scale(&four.recip()) == sub.num[i].scale(&sub.den.lead().recip())
            })
        };
        check(&self.p_even, UPoly::from_i64s(&[0, 2])) && check(&self.p_one_mod_four, UPoly::from_i64s(&[1, 4]))
    }

    /// Integer `t` with `R_i(t) = x`.
    pub fn r_preimages(&self, i: usize, x: &Point4<BigInt>) -> Vec<BigInt> {
        let (den, num) = &self.r_int[i - 1];
        // N₁(t) − x₁·D(t) = 0
        let len = num[0].len().max(den.len());
        let eq: Vec<BigInt> = (0..len)
            .map(|k| {
                let n = num[0].get(k).cloned().unwrap_or_default();
                let d = den.get(k).cloned().unwrap_or_default();
                n - &x[0] * d
            })
            .collect();
        super::roots::integer_roots(&eq)
            .into_iter()
            .filter(|t| {
                let d = horner(den, t);
                !d.is_zero() && (0..4).all(|j| horner(&num[j], t) == &x[j] * &d)
            })
            .collect()
    }

    /// `R_i(t)` at an integer `t`, if integral.
    pub fn r_eval_int(&self, i: usize, t: &BigInt) -> Result<Point4<BigInt>> {
        let (den, num) = &self.r_int[i - 1];
        let d = horner(den, t);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        let mut out: [BigInt; 4] = Default::default();
        for (slot, n) in out.iter_mut().zip(num) {
            let (q, r) = horner(n, t).div_rem(&d);
            if !r.is_zero() {
                return Err(Error::NonIntegral(format!("R{i}({t}) is not integral")));
            }
            *slot = q;
        }
        Ok(out)
    }
}

/// `(P₁(t), …, P₄(t))/4` for `t ≢ 3 (mod 4)`, cross-checked against the
/// printed `P(2t)` or `P(4t+1)` when `t` is even or `≡ 1 (mod 4)`.
pub fn p_eval(t: &BigInt) -> Result<BuchiSeq> {
    let tables = FamilyTables::bundled();
    let r = t.mod_floor(&BigInt::from(4));
    if r == BigInt::from(3) {
        return Err(Error::NonIntegral(format!("P({t}) is not integral for t ≡ 3 mod 4")));
    }
    let tr = BigRat::from_integer(t.clone());
    let pt = tables.p.eval(&tr)?;
    let mut out: [BigInt; 4] = Default::default();
    for (slot, v) in out.iter_mut().zip(&pt) {
        if !v.is_integer() {
            return Err(Error::NonIntegral(format!("P({t}) is not integral")));
        }
        *slot = v.to_integer();
    }
    let cross = if r.is_even() {
        Some((&tables.p_even, BigRat::from_integer(t / 2)))
    } else if r.is_one() {
        Some((&tables.p_one_mod_four, BigRat::from_integer((t - 1) / 4)))
    } else {
        None
    };
    if let Some((family, s)) = cross {
        if family.eval(&s)? != pt {
            return Err(Error::Consistency(format!("[{}] disagrees with P at t = {t}", family.name)));
        }
    }
    Ok(BuchiSeq::new_unchecked(out))
}

/// Integer `t` with `P(t) = x` (exactly, as a point).
pub fn p_preimages(x: &Point4<BigInt>) -> Vec<BigInt> {
    let tables = FamilyTables::bundled();
    let four = BigInt::from(4);
    let mut eq = tables.p.num[0].integer_coeffs().expect("P has integer numerators");
    eq[0] -= &four * &x[0];
    super::roots::integer_roots(&eq)
        .into_iter()
        .filter(|t| p_eval(t).map(|s| s.coords() == x).unwrap_or(false))
        .collect()
}

/// `R_i(t)` for `i` in `1..=15` at a rational `t`.
pub fn r_eval(i: usize, t: &BigRat) -> Result<Point4<BigRat>> {
    FamilyTables::bundled().r(i)?.eval(t)
}
