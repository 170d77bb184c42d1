//! The identity suites behind `buchi verify`: map relations, the `ξ` family
//! identities, the structural identities, and the family-table checksums.

use crate::curves::{curve_rhs, is_squarefree};
use crate::families::{
    growth_check, negative_t_forms, symmetry_check, xi_closed_form, xi_eval, xi_poly, zeta_step_check, FamilyTables,
    Side,
};
use crate::maps::{on_surface, pell_orbit_point, to_int_point, verify_group_relations, zeta_orbit, RelationCheck};
use crate::numkernel::BigInt;

fn check(name: impl Into<String>, passed: bool) -> RelationCheck {
    RelationCheck { name: name.into(), passed }
}

pub fn orbit_suite(n_max: usize) -> Vec<RelationCheck> {
    let start = [1, 2, 3, 4].map(BigInt::from);
    let orbit = zeta_orbit(&crate::maps::to_rat_point(&start), n_max);
    let mut out = Vec::new();
    match orbit {
        Ok(orbit) => {
            let ints: Vec<_> = orbit.iter().map(to_int_point).collect();
            out.push(check(
                "zeta(1,2,3,4) = (6,23,32,39)",
                ints.get(1).cloned().flatten() == Some([6, 23, 32, 39].map(BigInt::from)),
            ));
            out.push(check(
                "zeta^2(1,2,3,4) = (59,228,317,386)",
                ints.get(2).cloned().flatten() == Some([59, 228, 317, 386].map(BigInt::from)),
            ));
            let linear = (1..=n_max).all(|k| ints[k].as_ref() == Some(&pell_orbit_point(k)));
            out.push(check(format!("zeta^n(1,2,3,4) = u_n(6,23,32,39) - u_(n-1)(1,2,3,4), n <= {n_max}"), linear));
            let ten = BigInt::from(10);
            let rec = (2..=n_max).all(|k| match (&ints[k], &ints[k - 1], &ints[k - 2]) {
                (Some(a), Some(b), Some(c)) => (0..4).all(|i| a[i] == &ten * &b[i] - &c[i]),
                _ => false,
            });
            out.push(check(format!("zeta^n = 10 zeta^(n-1) - zeta^(n-2), n <= {n_max}"), rec));
        }
        Err(e) => out.push(check(format!("zeta orbit of (1,2,3,4): {e}"), false)),
    }
    out
}

pub fn xi_suite() -> Vec<RelationCheck> {
    let mut out = Vec::new();
    out.push(check(
        "deg xi(n) = 2n+1 and xi(n) on the surface, n <= 12",
        (0..=12).all(|n| {
            let xi = xi_poly(n);
            xi.iter().all(|p| p.degree() == Some(2 * n + 1)) && on_surface(&xi)
        }),
    ));
    out.push(check(
        "closed form = recurrence, n <= 6",
        (0..=6).all(|n| xi_closed_form(n).map(|c| c == xi_poly(n)).unwrap_or(false)),
    ));
    out.push(check(
        "zeta(xi(n, t)) = xi(n+1, t) symbolically, n <= 4",
        (0..=4).all(|n| zeta_step_check(n).unwrap_or(false)),
    ));
    out.push(check("xi_4(n,t) = -xi_1(n,-t-5), xi_3(n,t) = -xi_2(n,-t-5), n <= 6", (0..=6).all(symmetry_check)));
    out.push(check("xi(n, -1..-4) closed forms and trivial, n <= 10", (0..=10).all(|n| negative_t_forms(n).is_ok())));
    let g = growth_check(10, 10);
    out.push(check(format!("growth and gap bounds, n <= 10, t <= 10 ({} checks)", g.checked), g.passed()));
    out.push(check(
        "xi(n, t) values on the surface, n <= 10, |t| <= 10",
        (0..=10).all(|n| (-10..=10).all(|t| on_surface(xi_eval(n, &BigInt::from(t)).coords()))),
    ));
    out
}

pub fn family_suite() -> Vec<RelationCheck> {
    let tables = FamilyTables::bundled();
    let mut out: Vec<RelationCheck> = tables
        .all()
        .into_iter()
        .map(|f| {
            check(
                format!("[{}] satisfies both equations, shared denominator", f.name),
                f.on_surface_symbolic() && f.shared_denominator(),
            )
        })
        .collect();
    out.push(check("P(2t), P(4t+1) agree with P", tables.p_reparametrizations_agree()));
    out
}

pub fn curve_suite(n_max: usize) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    for side in [Side::Right, Side::Left] {
        let ok = (1..=n_max).all(|n| curve_rhs(n, side).map(|c| is_squarefree(&c)).unwrap_or(false));
        out.push(check(format!("{side} curves squarefree, n <= {n_max}"), ok));
    }
    out
}

/// Everything `buchi verify` runs.
pub fn full_suite() -> Vec<RelationCheck> {
    let mut out = verify_group_relations();
    out.extend(orbit_suite(20));
    out.extend(xi_suite());
    out.extend(family_suite());
    out.extend(curve_suite(18));
    out
}
