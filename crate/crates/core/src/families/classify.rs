//! Classification of integer points: trivial, a member of one of the base
//! families, a `ζ`-lift of one, or sporadic.
//!
//! Base families are inverted exactly (integer roots of `ξ₁(n, t) − s₁`,
//! `P₁(t) − 4s₁`, `N₁(t) − s₁·D(t)`). Otherwise the point is pushed down with
//! `normalize ∘ ζ⁻¹` while the height drops, re-testing at every level.

use std::fmt;

use num_traits::Signed;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::param::{p_eval, p_preimages, FamilyTables};
use crate::families::roots::increasing_preimage;
use crate::families::xi::{xi_eval, xi_int_coeffs};
use crate::families::{height, is_trivial, normalize, BuchiSeq};
use crate::maps::{apply_zeta_int, apply_zeta_inv_int, to_int_point, Point4, TrivialInvolution};
use crate::numkernel::BigInt;
use crate::polyring::horner;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Trivial {
        x: BigInt,
    },
    Xi {
        n: usize,
        t: BigInt,
    },
    P {
        t: BigInt,
    },
    R {
        i: usize,
        t: BigInt,
    },
    /// `ζ`-lift of `base` by `k` levels; `steps[j]` is the trivial
    /// involution that normalized level `j + 1` during descent.
    ZetaLift {
        base: Box<Classification>,
        k: usize,
        steps: Vec<TrivialInvolution>,
    },
    Sporadic,
}

impl Classification {
    pub fn is_sporadic(&self) -> bool {
        matches!(self, Classification::Sporadic)
    }

    /// The compact CSV form: `trivial`, `xi:n:t`, `p:t`, `r:i:t`,
    /// `zeta^k(base)`, `sporadic`.
    pub fn code(&self) -> String {
        match self {
            Classification::Trivial { .. } => "trivial".into(),
            Classification::Xi { n, t } => format!("xi:{n}:{t}"),
            Classification::P { t } => format!("p:{t}"),
            Classification::R { i, t } => format!("r:{i}:{t}"),
            Classification::ZetaLift { base, k, .. } => format!("zeta^{k}({})", base.code()),
            Classification::Sporadic => "sporadic".into(),
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            Classification::Trivial { .. } => "trivial",
            Classification::Xi { .. } => "xi",
            Classification::P { .. } => "p",
            Classification::R { .. } => "r",
            Classification::ZetaLift { base, .. } => base.family(),
            Classification::Sporadic => "sporadic",
        }
    }

    pub fn lift(&self) -> usize {
        match self {
            Classification::ZetaLift { k, .. } => *k,
            _ => 0,
        }
    }

    /// Recomputes the point this verdict describes. `Sporadic` has none;
    /// `Trivial` gives `(x+1, …, x+4)` up to signs, so it yields `None` too.
    pub fn evaluate(&self) -> Result<Option<Point4<BigInt>>> {
        Ok(Some(match self {
            Classification::Trivial { .. } | Classification::Sporadic => return Ok(None),
            Classification::Xi { n, t } => xi_eval(*n, t).into_coords(),
            Classification::P { t } => p_eval(t)?.into_coords(),
            Classification::R { i, t } => FamilyTables::bundled().r_eval_int(*i, t)?,
            Classification::ZetaLift { .. } => return Err(Error::Domain("lifts need a base point".into())),
        }))
    }

    /// Whether this verdict reproduces `s` by forward evaluation.
    pub fn verify(&self, s: &Point4<BigInt>) -> bool {
        match self {
            Classification::Sporadic => true,
            Classification::Trivial { x } => is_trivial(s).as_ref() == Some(x),
            Classification::ZetaLift { base, k, steps } => {
                if steps.len() != *k {
                    return false;
                }
                let mut y: Point4<BigInt> = match base.as_ref() {
                    Classification::Trivial { x } => std::array::from_fn(|i| x + BigInt::from(i + 1)),
                    b => match b.evaluate() {
                        Ok(Some(p)) => p,
                        _ => return false,
                    },
                };
                for g in steps.iter().rev() {
                    let Some(next) = apply_zeta_int(&g.inverse().apply(&y)).ok().and_then(|p| to_int_point(&p)) else {
                        return false;
                    };
                    y = next;
                }
                &y == s
            }
            other => matches!(other.evaluate(), Ok(Some(p)) if &p == s),
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Trivial { x } => write!(f, "Trivial(x={x})"),
            Classification::Xi { n, t } => write!(f, "Xi(n={n}, t={t})"),
            Classification::P { t } => write!(f, "P(t={t})"),
            Classification::R { i, t } => write!(f, "R(i={i}, t={t})"),
            Classification::ZetaLift { base, k, .. } => write!(f, "ZetaLift(k={k}, base={base})"),
            Classification::Sporadic => write!(f, "Sporadic"),
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let inner = match self {
            Classification::ZetaLift { base, .. } => base.as_ref(),
            other => other,
        };
        let params: Vec<(&str, String)> = match inner {
            Classification::Trivial { x } => vec![("x", x.to_string())],
            Classification::Xi { n, t } => vec![("n", n.to_string()), ("t", t.to_string())],
            Classification::P { t } => vec![("t", t.to_string())],
            Classification::R { i, t } => vec![("i", i.to_string()), ("t", t.to_string())],
            _ => vec![],
        };
        let params: std::collections::BTreeMap<&str, String> = params.into_iter().collect();
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("family", self.family())?;
        m.serialize_entry("params", &params)?;
        m.serialize_entry("lift", &self.lift())?;
        if let Classification::ZetaLift { steps, .. } = self {
            let names: Vec<String> = steps.iter().map(|g| format!("{g:?}")).collect();
            m.serialize_entry("steps", &names)?;
        }
        m.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentStep {
    /// The normalized point at this level.
    pub point: BuchiSeq,
    /// The trivial involution applied after `ζ⁻¹` to reach it.
    pub via: TrivialInvolution,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DescentEnd {
    /// A level matched a base family (or is trivial).
    Base(Classification),
    DenominatorVanishes,
    NonIntegral,
    NotNormalizable,
    NoHeightDecrease,
    StepLimit,
}

impl fmt::Display for DescentEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescentEnd::Base(c) => write!(f, "reached {c}"),
            DescentEnd::DenominatorVanishes => write!(f, "φ denominator vanishes"),
            DescentEnd::NonIntegral => write!(f, "ζ⁻¹ image is not integral"),
            DescentEnd::NotNormalizable => write!(f, "ζ⁻¹ image is not monotone up to signs"),
            DescentEnd::NoHeightDecrease => write!(f, "height does not decrease"),
            DescentEnd::StepLimit => write!(f, "step limit reached"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descent {
    pub start: BuchiSeq,
    pub steps: Vec<DescentStep>,
    pub end: DescentEnd,
}

/// The classifier. Stateless apart from limits; the symbolic tables it
/// consults are shared caches.
#[derive(Clone, Debug)]
pub struct Classifier {
    pub max_steps: usize,
}

impl Default for Classifier {
    fn default() -> Self {
        Classifier { max_steps: 256 }
    }
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Membership of `x` itself (no lifting) in a base family, trying
    /// trivial, `ξ(n, t ≥ 0)`, `P`, then `R₁..R₁₅`.
    pub fn base_family(&self, x: &Point4<BigInt>) -> Option<Classification> {
        if let Some(x0) = is_trivial(x) {
            return Some(Classification::Trivial { x: x0 });
        }
        if x[0].is_positive() {
            for n in 1.. {
                let coeffs = xi_int_coeffs(n);
                if coeffs[0][0] > x[0] {
                    break;
                }
                if let Some(t) = increasing_preimage(&coeffs[0], &x[0]) {
                    if (1..4).all(|i| horner(&coeffs[i], &t) == x[i]) {
                        return Some(Classification::Xi { n, t });
                    }
                }
            }
        }
        if let Some(t) = p_preimages(x).into_iter().next() {
            return Some(Classification::P { t });
        }
        let tables = FamilyTables::bundled();
        for i in 1..=15 {
            if let Some(t) = tables.r_preimages(i, x).into_iter().next() {
                return Some(Classification::R { i, t });
            }
        }
        None
    }

    /// Repeated `normalize ∘ ζ⁻¹` from `s`, stopping at the first level in a
    /// base family or when a step is impossible.
    pub fn descend(&self, s: &BuchiSeq) -> Descent {
        let mut steps: Vec<DescentStep> = Vec::new();
        let mut cur = s.coords().clone();
        let end = loop {
            if let Some(c) = self.base_family(&cur) {
                break DescentEnd::Base(c);
            }
            if steps.len() >= self.max_steps {
                break DescentEnd::StepLimit;
            }
            let down = match apply_zeta_inv_int(&cur) {
                Ok(p) => p,
                Err(_) => break DescentEnd::DenominatorVanishes,
            };
            let Some(down) = to_int_point(&down) else {
                break DescentEnd::NonIntegral;
            };
            let Some((g, next)) = normalize(&down) else {
                break DescentEnd::NotNormalizable;
            };
            if height(&next) >= height(&cur) {
                break DescentEnd::NoHeightDecrease;
            }
            steps.push(DescentStep { point: BuchiSeq::new_unchecked(next.clone()), via: g });
            cur = next;
        };
        Descent { start: s.clone(), steps, end }
    }

    /// Verdict for `s`, verified by forward evaluation before it is returned.
    pub fn classify(&self, s: &BuchiSeq) -> Classification {
        let d = self.descend(s);
        let verdict = match d.end {
            DescentEnd::Base(base) if d.steps.is_empty() => base,
            DescentEnd::Base(base) => Classification::ZetaLift {
                base: Box::new(base),
                k: d.steps.len(),
                steps: d.steps.iter().map(|st| st.via).collect(),
            },
            _ => Classification::Sporadic,
        };
        assert!(verdict.verify(s.coords()), "classification {verdict} of {s} failed forward verification");
        verdict
    }
}

/// [`Classifier::classify`] with default limits.
pub fn classify(s: &BuchiSeq) -> Classification {
    Classifier::default().classify(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::int;

    fn seq(x: [i64; 4]) -> BuchiSeq {
        BuchiSeq::from_i64s(x).unwrap()
    }

    #[test]
    fn known_examples() {
        assert_eq!(classify(&seq([6, 23, 32, 39])), Classification::Xi { n: 1, t: int(0) });
        assert_eq!(classify(&seq([51, 148, 203, 246])), Classification::P { t: int(0) });
        assert_eq!(classify(&seq([59, 630, 889, 1088])), Classification::Sporadic);
        assert_eq!(classify(&seq([1, 2, 3, 4])), Classification::Trivial { x: int(0) });
        assert_eq!(classify(&seq([1, 2, 3, 4])).to_string(), "Trivial(x=0)");
        assert_eq!(classify(&seq([6, 23, 32, 39])).to_string(), "Xi(n=1, t=0)");
    }

    #[test]
    fn other_families() {
        assert_eq!(classify(&seq([16, 87, 122, 149])), Classification::R { i: 4, t: int(6) });
        assert_eq!(classify(&seq([856, 1537, 1998, 2371])), Classification::Xi { n: 2, t: int(1) });
        assert_eq!(classify(&seq([5781, 22342, 31063, 37824])), Classification::Xi { n: 4, t: int(0) });
    }

    #[test]
    fn lifts_verify() {
        // one level of ζ above family points, after every trivial involution
        let bases = [[16, 87, 122, 149], [51, 148, 203, 246], [6, 23, 32, 39], [79, 242, 333, 404]];
        let mut lifted = 0;
        for base in bases {
            for g in TrivialInvolution::all() {
                let Ok(up) = apply_zeta_int(&g.apply(&base.map(int))) else { continue };
                let Some(up) = to_int_point(&up) else { continue };
                let Some((_, norm)) = normalize(&up) else { continue };
                let s = BuchiSeq::new(norm).unwrap();
                let c = classify(&s);
                assert!(!c.is_sporadic(), "{s} classified sporadic");
                assert!(c.verify(s.coords()));
                lifted += 1;
            }
        }
        assert!(lifted > 0);
    }

    #[test]
    fn serialization() {
        let c = Classification::Xi { n: 1, t: int(0) };
        assert_eq!(c.code(), "xi:1:0");
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"family":"xi","params":{"n":"1","t":"0"},"lift":0}"#);
        let lift = Classification::ZetaLift {
            base: Box::new(Classification::P { t: int(3) }),
            k: 2,
            steps: vec![TrivialInvolution::IDENTITY, TrivialInvolution::tau()],
        };
        assert_eq!(lift.code(), "zeta^2(p:3)");
        assert_eq!(Classification::Sporadic.code(), "sporadic");
    }

    #[test]
    fn descent_chain() {
        let d = Classifier::new().descend(&seq([59, 630, 889, 1088]));
        assert!(d.steps.is_empty());
        assert_eq!(d.end, DescentEnd::NonIntegral);
    }
}
