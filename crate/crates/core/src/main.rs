use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use buchi_core::curves::{curve_rhs, hits_csv, is_squarefree, scan_integer_points};
use buchi_core::explorer::{
    compare_with_table, enumerate, make_record, plot_csv, records_csv, records_json, run_pipeline, BundledTable,
    CSV_HEADER,
};
use buchi_core::families::{extends, xi_eval, xi_poly, BuchiSeq, Classifier, DescentEnd, Side};
use buchi_core::maps::{to_int_point, to_rat_point, zeta_orbit};
use buchi_core::numkernel::{format_rat, BigInt};
use buchi_core::verify::full_suite;

#[derive(Parser)]
#[command(name = "buchi", version, about = "Length-4 Büchi sequences: families, search and classification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the symbolic identity suites.
    Verify,
    /// Print ξ(n, t) as polynomials, or its value at t.
    Xi {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<BigInt>,
    },
    /// Enumerate strictly increasing positive quadruples with x₂ ≤ B.
    Search {
        #[arg(long = "x2-max")]
        x2_max: BigInt,
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        extend: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Classify one quadruple.
    Classify {
        #[arg(allow_negative_numbers = true, num_args = 4, required = true)]
        x: Vec<BigInt>,
        #[arg(long)]
        json: bool,
    },
    /// Print the ζ⁻¹ descent chain of a quadruple.
    Descend {
        #[arg(allow_negative_numbers = true, num_args = 4, required = true)]
        x: Vec<BigInt>,
    },
    /// Print [x, ζx, …, ζⁿx] as JSON arrays of decimal strings.
    Orbit {
        #[arg(allow_negative_numbers = true, num_args = 4, required = true)]
        x: Vec<BigInt>,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Extension curve y² = 2ξ₄² − ξ₃² + 2 (right) or 2ξ₁² − ξ₂² + 2 (left).
    Curve {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        squarefree: bool,
        #[arg(long, num_args = 2, value_names = ["TMIN", "TMAX"], allow_hyphen_values = true)]
        scan: Option<Vec<i64>>,
        /// Print the coefficient list (lowest degree first) instead.
        #[arg(long)]
        coeffs: bool,
    },
    /// The bundled list of non-parametrized points.
    Table {
        #[arg(long)]
        compare: bool,
        #[arg(long = "x2-bound")]
        x2_bound: Option<BigInt>,
        /// Emit (x1, row) plot data.
        #[arg(long)]
        plot: bool,
    },
}

fn seq_arg(x: &[BigInt]) -> Result<BuchiSeq, String> {
    let p: [BigInt; 4] = x.to_vec().try_into().map_err(|_| "expected four integers".to_string())?;
    BuchiSeq::new(p).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.cmd {
        Cmd::Verify => {
            let checks = full_suite();
            for c in &checks {
                println!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            println!("{} checks, {failed} failed", checks.len());
            Ok(failed == 0)
        }
        Cmd::Xi { n, t: None } => {
            for (i, p) in xi_poly(n).iter().enumerate() {
                println!("xi{}({n}, t) = {p}", i + 1);
            }
            Ok(true)
        }
        Cmd::Xi { n, t: Some(t) } => {
            println!("{}", xi_eval(n, &t));
            Ok(true)
        }
        Cmd::Search { x2_max, classify, extend, format } => {
            let seqs = enumerate(&x2_max).map_err(|e| e.to_string())?;
            let classifier = Classifier::default();
            match (classify, format) {
                (true, Format::Json) => {
                    let recs: Vec<_> = seqs.into_iter().map(|s| make_record(&classifier, s)).collect();
                    println!("{}", records_json(&recs));
                }
                (true, Format::Csv) => {
                    let mut recs: Vec<_> = seqs.into_iter().map(|s| make_record(&classifier, s)).collect();
                    if !extend {
                        for r in &mut recs {
                            r.extends_left = None;
                            r.extends_right = None;
                        }
                    }
                    print!("{}", records_csv(&recs));
                }
                (false, fmt) => {
                    let rows: Vec<serde_json::Value> = seqs
                        .iter()
                        .map(|s| {
                            let e = |side| extend.then(|| extends(s.coords(), side)).flatten().map(|v| v.to_string());
                            serde_json::json!({
                                "seq": s,
                                "classification": null,
                                "extends_left": e(Side::Left),
                                "extends_right": e(Side::Right),
                            })
                        })
                        .collect();
                    match fmt {
                        Format::Json => println!("{}", serde_json::to_string_pretty(&rows).expect("json")),
                        Format::Csv => {
                            println!("{CSV_HEADER}");
                            for (s, r) in seqs.iter().zip(&rows) {
                                let [a, b, c, d] = s.coords();
                                let f = |k: &str| r[k].as_str().unwrap_or("").to_string();
                                println!("{a},{b},{c},{d},,{},{}", f("extends_left"), f("extends_right"));
                            }
                        }
                    }
                }
            }
            Ok(true)
        }
        Cmd::Classify { x, json } => {
            let s = seq_arg(&x)?;
            let c = Classifier::default().classify(&s);
            if json {
                println!("{}", serde_json::to_string(&c).expect("json"));
            } else {
                println!("{c}");
            }
            Ok(true)
        }
        Cmd::Descend { x } => {
            let s = seq_arg(&x)?;
            let d = Classifier::default().descend(&s);
            println!("0: {}", d.start);
            for (k, st) in d.steps.iter().enumerate() {
                println!("{}: {} (normalized by {:?})", k + 1, st.point, st.via);
            }
            println!("end: {}", d.end);
            Ok(!matches!(d.end, DescentEnd::StepLimit))
        }
        Cmd::Orbit { x, n } => {
            let p: [BigInt; 4] = x.try_into().map_err(|_| "expected four integers".to_string())?;
            let orbit = zeta_orbit(&to_rat_point(&p), n).map_err(|e| e.to_string())?;
            let rows: Vec<Vec<String>> = orbit
                .iter()
                .map(|q| match to_int_point(q) {
                    Some(i) => i.iter().map(|c| c.to_string()).collect(),
                    None => q.iter().map(format_rat).collect(),
                })
                .collect();
            println!("{}", serde_json::to_string(&rows).expect("json"));
            Ok(true)
        }
        Cmd::Curve { n, side, squarefree, scan, coeffs } => {
            let c = curve_rhs(n, side.into()).map_err(|e| e.to_string())?;
            if coeffs {
                let cs: Vec<String> = c.integer_coeffs().iter().map(|v| v.to_string()).collect();
                println!("{}", serde_json::to_string(&cs).expect("json"));
            } else {
                println!("{c}");
            }
            let mut ok = true;
            if squarefree {
                let sf = is_squarefree(&c);
                println!("squarefree: {sf}");
                ok &= sf;
            }
            if let Some(range) = scan {
                let hits = scan_integer_points(&c, range[0], range[1]).map_err(|e| e.to_string())?;
                print!("{}", hits_csv(&hits));
            }
            Ok(ok)
        }
        Cmd::Table { compare, x2_bound, plot } => {
            let table = BundledTable::bundled();
            if plot {
                print!("{}", plot_csv(&table.plot_data()));
                return Ok(true);
            }
            if !compare {
                for (i, s) in &table.rows {
                    let [a, b, c, d] = s.coords();
                    println!("{i} {a} {b} {c} {d}");
                }
                return Ok(true);
            }
            let bound = x2_bound.ok_or("--compare needs --x2-bound")?;
            let records = run_pipeline(&bound).map_err(|e| e.to_string())?;
            let cmp = compare_with_table(&records, &bound);
            println!(
                "x2 <= {bound}: {} records, {} matches, {} misses, {} extras",
                records.len(),
                cmp.matches.len(),
                cmp.misses.len(),
                cmp.extras.len()
            );
            for m in &cmp.misses {
                let how = m.found_as.as_deref().unwrap_or("not enumerated");
                println!("miss: row {:?} {} -> {how}", m.rows, m.seq);
            }
            for e in &cmp.extras {
                println!("extra: {e}");
            }
            let bad_ext = records
                .iter()
                .filter(|r| r.classification.is_sporadic() && (r.extends_left.is_some() || r.extends_right.is_some()))
                .count();
            println!("sporadic records that extend: {bad_ext}");
            Ok(cmp.passed() && bad_ext == 0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
