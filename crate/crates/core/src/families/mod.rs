//! Integer Büchi quadruples and the families that parametrize them.

mod classify;
mod param;
pub mod roots;
mod xi;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::maps::{on_surface, Point4, TrivialInvolution};
use crate::numkernel::{as_perfect_square, BigInt};

pub use classify::{classify, Classification, Classifier, Descent, DescentEnd, DescentStep};
pub use param::{p_eval, p_preimages, r_eval, FamilyTables, ParamTuple};
pub use xi::{
    binomial_sum_solve, f_poly, growth_check, negative_t_forms, symmetry_check, xi_closed_form, xi_eval, xi_int_coeffs,
    xi_poly, zeta_step_check, GrowthReport, Parity, XiTable,
};

/// An integer point on the surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BuchiSeq(Point4<BigInt>);

impl BuchiSeq {
    pub fn new(x: Point4<BigInt>) -> Result<Self> {
        if !on_surface(&x) {
            let s: Vec<String> = x.iter().map(|c| c.to_string()).collect();
            return Err(Error::Domain(format!("({}) is not a Büchi sequence", s.join(", "))));
        }
        Ok(BuchiSeq(x))
    }

    pub fn from_i64s(x: [i64; 4]) -> Result<Self> {
        Self::new(x.map(BigInt::from))
    }

    pub(crate) fn new_unchecked(x: Point4<BigInt>) -> Self {
        debug_assert!(on_surface(&x));
        BuchiSeq(x)
    }

    pub fn coords(&self) -> &Point4<BigInt> {
        &self.0
    }

    pub fn into_coords(self) -> Point4<BigInt> {
        self.0
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|c| c.is_positive())
    }

    /// Largest absolute coordinate.
    pub fn height(&self) -> BigInt {
        height(&self.0)
    }
}

impl fmt::Display for BuchiSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

impl Serialize for BuchiSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

pub(crate) fn height(x: &Point4<BigInt>) -> BigInt {
    x.iter().map(|c| c.abs()).max().expect("four coordinates")
}

/// `x` with `s_i² = (x + i)²` for `i = 1..4`, if any.
pub fn is_trivial(s: &Point4<BigInt>) -> Option<BigInt> {
    let first = s[0].abs();
    [&first - BigInt::one(), -&first - BigInt::one()]
        .into_iter()
        .find(|x| s.iter().enumerate().all(|(i, c)| c.abs() == (x + BigInt::from(i + 1)).abs()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" | "l" => Ok(Side::Left),
            "right" | "r" => Ok(Side::Right),
            _ => Err(Error::Parse(format!("side must be left or right, got {s:?}"))),
        }
    }
}

/// The nonnegative `x₅` (right) or `x₀` (left) that extends `s` to a
/// length-5 sequence: `x₅² = 2s₄² − s₃² + 2`, `x₀² = 2s₁² − s₂² + 2`.
pub fn extends(s: &Point4<BigInt>, side: Side) -> Option<BigInt> {
    let (outer, inner) = match side {
        Side::Right => (&s[3], &s[2]),
        Side::Left => (&s[0], &s[1]),
    };
    let radicand = BigInt::from(2) * outer * outer - inner * inner + 2;
    if radicand < BigInt::zero() {
        return None;
    }
    as_perfect_square(&radicand)
}

/// The trivial involution `g` making `g(x)` strictly increasing and
/// positive, with that image.
pub fn normalize(x: &Point4<BigInt>) -> Option<(TrivialInvolution, Point4<BigInt>)> {
    let negative: Vec<usize> = (0..4).filter(|&i| x[i].is_negative()).map(|i| i + 1).collect();
    let flip = TrivialInvolution::mu_set(&negative);
    let abs = flip.apply(x);
    if abs.windows(2).all(|w| w[0] < w[1]) && abs[0].is_positive() {
        Some((flip, abs))
    } else if abs.windows(2).all(|w| w[0] > w[1]) && abs[3].is_positive() {
        let g = TrivialInvolution::tau().compose(&flip);
        let y = g.apply(x);
        Some((g, y))
    } else {
        None
    }
}
