// One line per criterion. Criterion 8 cannot pass as stated: the printed
// list contains xi(4, 0) = (5781, 22342, 31063, 37824) at row 41, which the
// pipeline (correctly) classifies as a parametrized point. The harness
// reports that as FAIL and only exits nonzero if the discrepancy changes.

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use buchi_core::curves::{curve_rhs, is_squarefree, scan_integer_points};
use buchi_core::explorer::{compare_with_table, run_pipeline, BundledTable};
use buchi_core::families::{
    binomial_sum_solve, extends, growth_check, negative_t_forms, p_eval, symmetry_check, xi_closed_form, xi_poly,
    zeta_step_check, FamilyTables, Parity, Side,
};
use buchi_core::maps::verify_group_relations;
use buchi_core::numkernel::BigInt;
use buchi_core::polyring::UPoly;
use buchi_core::verify::orbit_suite;
use buchi_core::Error;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn c1() -> Outcome {
    let checks = verify_group_relations();
    let bad: Vec<_> = checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    outcome(bad.is_empty(), format!("{} relations, failing: {bad:?}", checks.len()))
}

fn c2() -> Outcome {
    let checks = orbit_suite(20);
    let bad: Vec<_> = checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    outcome(bad.is_empty(), format!("{} orbit checks, failing: {bad:?}", checks.len()))
}

const PRINTED_XI: [[&str; 4]; 3] = [
    ["2t^3 + 12t^2 + 19t + 6", "2t^3 + 14t^2 + 31t + 23", "2t^3 + 16t^2 + 41t + 32", "2t^3 + 18t^2 + 49t + 39"],
    [
        "4t^5 + 44t^4 + 178t^3 + 322t^2 + 249t + 59",
        "4t^5 + 48t^4 + 222t^3 + 496t^2 + 539t + 228",
        "4t^5 + 52t^4 + 262t^3 + 634t^2 + 729t + 317",
        "4t^5 + 56t^4 + 298t^3 + 748t^2 + 879t + 386",
    ],
    [
        "8t^7 + 128t^6 + 836t^5 + 2864t^4 + 5496t^3 + 5816t^2 + 3061t + 584",
        "8t^7 + 136t^6 + 964t^5 + 3692t^4 + 8256t^3 + 10792t^2 + 7639t + 2257",
        "8t^7 + 144t^6 + 1084t^5 + 4408t^4 + 10416t^3 + 14248t^2 + 10419t + 3138",
        "8t^7 + 152t^6 + 1196t^5 + 5036t^4 + 12216t^3 + 17024t^2 + 12601t + 3821",
    ],
];

fn c3() -> Outcome {
    let mut bad = Vec::new();
    for (k, printed) in PRINTED_XI.iter().enumerate() {
        let n = k + 1;
        let xi = xi_poly(n);
        for (i, s) in printed.iter().enumerate() {
            if xi[i] != UPoly::parse(s).expect("printed polynomial parses") {
                bad.push(format!("xi{}({n})", i + 1));
            }
        }
    }
    let degrees = (0..=12).all(|n| xi_poly(n).iter().all(|p| p.degree() == Some(2 * n + 1)));
    outcome(
        bad.is_empty() && degrees,
        format!("12 printed polynomials, mismatches {bad:?}; degrees 2n+1 for n <= 12: {degrees}"),
    )
}

fn c4() -> Outcome {
    let closed = (0..=6).all(|n| xi_closed_form(n).map(|c| c == xi_poly(n)).unwrap_or(false));
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut agree = 0;
    for _ in 0..100 {
        let alpha = BigInt::from(rng.gen_range(-50i64..=50));
        let u0 = BigInt::from(rng.gen_range(-1000i64..=1000));
        let u1 = BigInt::from(rng.gen_range(-1000i64..=1000));
        let n = rng.gen_range(1usize..=10);
        let parity = if rng.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
        let mut u = vec![u0.clone(), u1.clone()];
        while u.len() <= 2 * n {
            let k = u.len();
            u.push(&alpha * &u[k - 1] - &u[k - 2]);
        }
        let index = match parity {
            Parity::Even => 2 * n,
            Parity::Odd => 2 * n - 1,
        };
        if binomial_sum_solve(&alpha, &u0, &u1, &u[2], n, parity).ok().as_ref() == Some(&u[index]) {
            agree += 1;
        }
    }
    outcome(closed && agree == 100, format!("closed form n <= 6: {closed}; binomial sums {agree}/100"))
}

fn c5() -> Outcome {
    let bad: Vec<usize> = (0..=4).filter(|&n| !zeta_step_check(n).unwrap_or(false)).collect();
    outcome(bad.is_empty(), format!("zeta(xi(n)) = xi(n+1) for n <= 4, failing n: {bad:?}"))
}

fn c6() -> Outcome {
    let sym = (0..=6).all(symmetry_check);
    let neg = (0..=10).all(|n| negative_t_forms(n).is_ok());
    let g = growth_check(10, 10);
    outcome(
        sym && neg && g.passed(),
        format!("symmetry {sym}; t = -1..-4 forms {neg}; growth {} checks, {} failures", g.checked, g.failures.len()),
    )
}

fn c7() -> Outcome {
    let tables = FamilyTables::bundled();
    let all = tables.all();
    let bad: Vec<_> = all.iter().filter(|f| !f.on_surface_symbolic()).map(|f| f.name.clone()).collect();
    let non_integral = matches!(p_eval(&BigInt::from(3)), Err(Error::NonIntegral(_)));
    outcome(
        all.len() == 19 && bad.is_empty() && non_integral,
        format!("{} families, off-surface {bad:?}; p_eval(3) NonIntegral: {non_integral}", all.len()),
    )
}

fn c8() -> (Outcome, bool) {
    let bound = BigInt::from(30_000);
    let records = match run_pipeline(&bound) {
        Ok(r) => r,
        Err(e) => return (outcome(false, format!("pipeline error: {e}")), false),
    };
    let cmp = compare_with_table(&records, &bound);
    let extending = records
        .iter()
        .filter(|r| r.classification.is_sporadic() && (r.extends_left.is_some() || r.extends_right.is_some()))
        .count();
    let misses: Vec<String> = cmp
        .misses
        .iter()
        .map(|m| format!("rows {:?} {} -> {}", m.rows, m.seq, m.found_as.as_deref().unwrap_or("not enumerated")))
        .collect();
    let detail = format!(
        "{} records, {} matches, {} misses {misses:?}, {} extras, {extending} sporadic records extend",
        records.len(),
        cmp.matches.len(),
        cmp.misses.len(),
        cmp.extras.len()
    );
    let known = cmp.extras.is_empty()
        && extending == 0
        && cmp.matches.len() == 56
        && cmp.misses.len() == 1
        && cmp.misses[0].rows == [41]
        && cmp.misses[0].found_as.as_deref() == Some("Xi(n=4, t=0)");
    (outcome(cmp.passed() && extending == 0, detail), known)
}

fn c9() -> Outcome {
    let table = BundledTable::bundled();
    let extending: Vec<usize> = table
        .rows
        .iter()
        .filter(|(_, s)| extends(s.coords(), Side::Left).is_some() || extends(s.coords(), Side::Right).is_some())
        .map(|(i, _)| *i)
        .collect();
    let distinct = table.distinct_up_to(&table.rows.iter().map(|(_, s)| s.coords()[1].clone()).max().unwrap()).len();
    outcome(
        table.rows.len() == 121 && distinct == 120 && extending.is_empty(),
        format!("{} rows ({distinct} distinct), extending: {extending:?}", table.rows.len()),
    )
}

const PRINTED_CURVES: [&str; 3] = [
    "4t^6 + 80t^5 + 620t^4 + 2400t^3 + 4905t^2 + 5020t + 2020",
    "16t^10 + 480t^9 + 6240t^8 + 46400t^7 + 218812t^6 + 684120t^5 + 1436320t^4 + 1999600t^3 + 1766797t^2 + 894990t + 197505",
    "64t^14 + 2560t^13 + 46400t^12 + 505600t^11 + 3702416t^10 + 19280000t^9 + 73635280t^8 + 209537600t^7 + 446403560t^6 + 708503520t^5 + 824619920t^4 + 682516400t^3 + 379789209t^2 + 127204040t + 19353040",
];

fn c10() -> Outcome {
    let printed = PRINTED_CURVES
        .iter()
        .enumerate()
        .all(|(k, s)| curve_rhs(k + 1, Side::Right).unwrap().rhs == UPoly::parse(s).unwrap());
    let mut not_sf = Vec::new();
    for side in [Side::Right, Side::Left] {
        for n in 1..=18 {
            if !is_squarefree(&curve_rhs(n, side).unwrap()) {
                not_sf.push(format!("{side} n={n}"));
            }
        }
    }
    let mut hit_ts = Vec::new();
    for side in [Side::Right, Side::Left] {
        let hits = scan_integer_points(&curve_rhs(1, side).unwrap(), -10_000, 10_000).unwrap();
        hit_ts.push(hits.iter().map(|h| h.t.parse::<i64>().unwrap()).collect::<Vec<_>>());
    }
    let only_trivial = hit_ts.iter().all(|ts| ts.iter().all(|t| (-4..=-1).contains(t)));
    outcome(
        printed && not_sf.is_empty() && only_trivial,
        format!("printed curves {printed}; not squarefree {not_sf:?}; C1 right/left hits at t = {hit_ts:?}"),
    )
}

fn main() -> ExitCode {
    let simple: [(u32, fn() -> Outcome); 9] =
        [(1, c1), (2, c2), (3, c3), (4, c4), (5, c5), (6, c6), (7, c7), (9, c9), (10, c10)];
    let mut unexpected = 0;
    let report = |k: u32, o: &Outcome, secs: f64| {
        println!("criterion {k}: {} — {} ({secs:.1}s)", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    };
    for (k, f) in &simple[..7] {
        let start = Instant::now();
        let o = f();
        report(*k, &o, start.elapsed().as_secs_f64());
        unexpected += usize::from(!o.passed);
    }
    let start = Instant::now();
    let (o, known) = c8();
    report(8, &o, start.elapsed().as_secs_f64());
    if !o.passed {
        if known {
            println!("criterion 8: known discrepancy (row 41 is xi(4, 0)); not counted");
        } else {
            unexpected += 1;
        }
    }
    for (k, f) in &simple[7..] {
        let start = Instant::now();
        let o = f();
        report(*k, &o, start.elapsed().as_secs_f64());
        unexpected += usize::from(!o.passed);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
