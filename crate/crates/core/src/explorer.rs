//! Exhaustive search for strictly increasing positive quadruples, the
//! classification pipeline, and comparison with the bundled list of
//! non-parametrized points.
//!
//! For fixed `x₂` the equations give `x₁² = 2x₂² − x₃² + 2` and
//! `x₄² = 2x₃² − x₂² + 2`; `x₁ < x₂ < x₃` forces `x₃ ≤ √(2x₂² + 1)`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use num_integer::Roots;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{extends, is_trivial, BuchiSeq, Classification, Classifier, Side};
use crate::maps::Point4;
use crate::numkernel::{as_perfect_square, square_root_u64, BigInt};

/// Largest `x₂` handled with machine words (`2x₃² ≤ 4x₂²` stays below `2⁶⁴`).
const WORD_LIMIT: u64 = 1 << 30;

fn search_row_u64(x2: u64, out: &mut Vec<[u64; 4]>) {
    let hi = (2 * x2 * x2 + 1).sqrt();
    let base1 = 2 * x2 * x2 + 2;
    for x3 in x2 + 1..=hi {
        let Some(x1) = square_root_u64(base1 - x3 * x3) else { continue };
        if x1 == 0 || x1 >= x2 {
            continue;
        }
        let Some(x4) = square_root_u64(2 * x3 * x3 + 2 - x2 * x2) else { continue };
        if x4 > x3 && !(x1 + 1 == x2 && x2 + 1 == x3) {
            out.push([x1, x2, x3, x4]);
        }
    }
}

fn search_row_big(x2: &BigInt, out: &mut Vec<Point4<BigInt>>) {
    let two = BigInt::from(2);
    let hi = (&two * x2 * x2 + 1u32).sqrt();
    let mut x3 = x2 + 1u32;
    while x3 <= hi {
        let r1 = &two * x2 * x2 - &x3 * &x3 + 2u32;
        if let Some(x1) = as_perfect_square(&r1) {
            let r4 = &two * &x3 * &x3 - x2 * x2 + 2u32;
            if let Some(x4) = as_perfect_square(&r4) {
                let p = [x1, x2.clone(), x3.clone(), x4];
                if p[0] > BigInt::from(0) && p[0] < p[1] && p[3] > p[2] && is_trivial(&p).is_none() {
                    out.push(p);
                }
            }
        }
        x3 += 1u32;
    }
}

/// Every non-trivial strictly increasing positive quadruple with
/// `x₂ ≤ x2_max`, sorted by `(x₁, x₂)`.
pub fn enumerate(x2_max: &BigInt) -> Result<Vec<BuchiSeq>> {
    if x2_max < &BigInt::from(2) {
        return Err(Error::Domain("x2_max must be at least 2".into()));
    }
    let word_max = x2_max.to_u64().map_or(WORD_LIMIT, |m| m.min(WORD_LIMIT));
    let mut found: Vec<Point4<BigInt>> = search_words(word_max).into_iter().map(|p| p.map(BigInt::from)).collect();
    let mut x2 = BigInt::from(word_max) + 1u32;
    while &x2 <= x2_max {
        search_row_big(&x2, &mut found);
        x2 += 1u32;
    }
    found.sort();
    found.dedup();
    Ok(found.into_iter().map(BuchiSeq::new_unchecked).collect())
}

#[cfg(feature = "parallel")]
fn search_words(x2_max: u64) -> Vec<[u64; 4]> {
    use rayon::prelude::*;
    // Row cost grows with x₂, so hand out small blocks.
    let blocks: Vec<(u64, u64)> = (2..=x2_max).step_by(256).map(|lo| (lo, (lo + 255).min(x2_max))).collect();
    blocks
        .into_par_iter()
        .flat_map_iter(|(lo, hi)| {
            let mut out = Vec::new();
            for x2 in lo..=hi {
                search_row_u64(x2, &mut out);
            }
            out
        })
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn search_words(x2_max: u64) -> Vec<[u64; 4]> {
    search_words_serial(x2_max)
}

/// Single-threaded search, for parallel-invariance checks.
pub fn search_words_serial(x2_max: u64) -> Vec<[u64; 4]> {
    let mut out = Vec::new();
    for x2 in 2..=x2_max {
        search_row_u64(x2, &mut out);
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchRecord {
    pub seq: BuchiSeq,
    pub classification: Classification,
    #[serde(serialize_with = "opt_string")]
    pub extends_left: Option<BigInt>,
    #[serde(serialize_with = "opt_string")]
    pub extends_right: Option<BigInt>,
}

fn opt_string<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_some(&x.to_string()),
        None => s.serialize_none(),
    }
}

pub fn make_record(classifier: &Classifier, seq: BuchiSeq) -> SearchRecord {
    let classification = classifier.classify(&seq);
    SearchRecord {
        extends_left: extends(seq.coords(), Side::Left),
        extends_right: extends(seq.coords(), Side::Right),
        classification,
        seq,
    }
}

/// [`enumerate`], then classification and both extension tests per record.
pub fn run_pipeline(x2_max: &BigInt) -> Result<Vec<SearchRecord>> {
    let seqs = enumerate(x2_max)?;
    let classifier = Classifier::default();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok(seqs.into_par_iter().map(|s| make_record(&classifier, s)).collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(seqs.into_iter().map(|s| make_record(&classifier, s)).collect())
    }
}

pub const CSV_HEADER: &str = "x1,x2,x3,x4,classification,extends_left,extends_right";

pub fn records_csv(records: &[SearchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    let opt = |v: &Option<BigInt>| v.as_ref().map(|x| x.to_string()).unwrap_or_default();
    for r in records {
        let [a, b, c, d] = r.seq.coords();
        out.push_str(&format!(
            "{a},{b},{c},{d},{},{},{}\n",
            r.classification.code(),
            opt(&r.extends_left),
            opt(&r.extends_right)
        ));
    }
    out
}

pub fn records_json(records: &[SearchRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

/// The printed list: row index and quadruple, duplicates kept.
#[derive(Clone, Debug)]
pub struct BundledTable {
    pub rows: Vec<(usize, BuchiSeq)>,
}

impl BundledTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 5 {
                return Err(Error::Parse(format!("table row needs 5 fields: {line:?}")));
            }
            let idx: usize = fields[0].parse().map_err(|_| Error::Parse(format!("bad row index in {line:?}")))?;
            let mut p: Point4<BigInt> = Default::default();
            for (slot, f) in p.iter_mut().zip(&fields[1..]) {
                *slot = crate::numkernel::parse_int(f)?;
            }
            rows.push((idx, BuchiSeq::new(p)?));
        }
        Ok(BundledTable { rows })
    }

    pub fn bundled() -> &'static BundledTable {
        static T: OnceLock<BundledTable> = OnceLock::new();
        T.get_or_init(|| BundledTable::parse(include_str!("../assets/table.txt")).expect("bundled table parses"))
    }

    /// Distinct quadruples with `x₂ ≤ bound`, each with the row indices
    /// where it is printed.
    pub fn distinct_up_to(&self, x2_bound: &BigInt) -> BTreeMap<BuchiSeq, Vec<usize>> {
        let mut out: BTreeMap<BuchiSeq, Vec<usize>> = BTreeMap::new();
        for (i, s) in &self.rows {
            if &s.coords()[1] <= x2_bound {
                out.entry(s.clone()).or_default().push(*i);
            }
        }
        out
    }

    /// `(x₁, row index)` pairs, the data behind the printed plot.
    pub fn plot_data(&self) -> Vec<(BigInt, usize)> {
        self.rows.iter().map(|(i, s)| (s.coords()[0].clone(), *i)).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableMatch {
    pub seq: BuchiSeq,
    pub rows: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableMiss {
    pub seq: BuchiSeq,
    pub rows: Vec<usize>,
    /// What the pipeline said about this point, if it was enumerated.
    pub found_as: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TableComparison {
    pub x2_bound: String,
    pub matches: Vec<TableMatch>,
    pub misses: Vec<TableMiss>,
    pub extras: Vec<BuchiSeq>,
}

impl TableComparison {
    pub fn passed(&self) -> bool {
        self.misses.is_empty() && self.extras.is_empty()
    }
}

/// Sporadic records with `x₂ ≤ x2_bound` against the (deduplicated) table
/// rows with `x₂ ≤ x2_bound`.
pub fn compare_with_table(records: &[SearchRecord], x2_bound: &BigInt) -> TableComparison {
    compare_with(BundledTable::bundled(), records, x2_bound)
}

pub fn compare_with(table: &BundledTable, records: &[SearchRecord], x2_bound: &BigInt) -> TableComparison {
    let expected = table.distinct_up_to(x2_bound);
    let by_seq: BTreeMap<&BuchiSeq, &SearchRecord> = records.iter().map(|r| (&r.seq, r)).collect();
    let sporadic: BTreeSet<&BuchiSeq> = records
        .iter()
        .filter(|r| r.classification.is_sporadic() && &r.seq.coords()[1] <= x2_bound)
        .map(|r| &r.seq)
        .collect();
    let mut cmp = TableComparison { x2_bound: x2_bound.to_string(), ..Default::default() };
    for (seq, rows) in &expected {
        if sporadic.contains(seq) {
            cmp.matches.push(TableMatch { seq: seq.clone(), rows: rows.clone() });
        } else {
            let found_as = by_seq.get(seq).map(|r| r.classification.to_string());
            cmp.misses.push(TableMiss { seq: seq.clone(), rows: rows.clone(), found_as });
        }
    }
    cmp.extras = sporadic.into_iter().filter(|s| !expected.contains_key(*s)).cloned().collect();
    cmp
}

/// `(x₁, index)` for the Sporadic records in `(x₁, x₂)` order, indices from 1.
pub fn sporadic_plot_data(records: &[SearchRecord]) -> Vec<(BigInt, usize)> {
    let mut s: Vec<&BuchiSeq> = records.iter().filter(|r| r.classification.is_sporadic()).map(|r| &r.seq).collect();
    s.sort();
    s.into_iter().enumerate().map(|(i, q)| (q.coords()[0].clone(), i + 1)).collect()
}

pub fn plot_csv(points: &[(BigInt, usize)]) -> String {
    let mut out = String::from("x1,row\n");
    for (x, i) in points {
        out.push_str(&format!("{x},{i}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::int;

    fn seq(x: [i64; 4]) -> BuchiSeq {
        BuchiSeq::from_i64s(x).unwrap()
    }

    #[test]
    fn enumerate_700() {
        let s = enumerate(&int(700)).unwrap();
        for p in [[6, 23, 32, 39], [39, 70, 91, 108], [51, 148, 203, 246]] {
            assert!(s.contains(&seq(p)));
        }
        assert!(!s.contains(&seq([1, 2, 3, 4])));
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        for q in &s {
            assert!(q.is_strictly_increasing() && q.is_positive());
            assert!(is_trivial(q.coords()).is_none());
        }
        assert!(enumerate(&int(1)).is_err());
    }

    #[test]
    fn big_path_agrees_with_words() {
        let mut small = Vec::new();
        for x2 in 2..=400u64 {
            search_row_u64(x2, &mut small);
        }
        let mut big = Vec::new();
        for x2 in 2..=400i64 {
            search_row_big(&int(x2), &mut big);
        }
        let small: Vec<Point4<BigInt>> = small.into_iter().map(|p| p.map(BigInt::from)).collect();
        assert_eq!(small, big);
    }

    #[test]
    fn pipeline_700() {
        let records = run_pipeline(&int(700)).unwrap();
        let sporadic: Vec<&BuchiSeq> =
            records.iter().filter(|r| r.classification.is_sporadic()).map(|r| &r.seq).collect();
        assert_eq!(sporadic, vec![&seq([59, 630, 889, 1088]), &seq([83, 516, 725, 886])]);
        let r = records.iter().find(|r| r.seq == seq([6, 23, 32, 39])).unwrap();
        assert_eq!(r.classification, Classification::Xi { n: 1, t: int(0) });
        assert_eq!((r.extends_left.clone(), r.extends_right.clone()), (None, None));

        let cmp = compare_with_table(&records, &int(700));
        assert_eq!((cmp.matches.len(), cmp.misses.len(), cmp.extras.len()), (2, 0, 0));
        let cmp = compare_with_table(&records, &int(0));
        assert!(cmp.passed() && cmp.matches.is_empty());

        let csv = records_csv(&records);
        assert!(csv.starts_with(CSV_HEADER));
        assert!(csv.contains("\n6,23,32,39,xi:1:0,,\n"));
        assert!(csv.contains("\n59,630,889,1088,sporadic,,\n"));
        let json: serde_json::Value = serde_json::from_str(&records_json(&records)).unwrap();
        assert_eq!(json.as_array().unwrap().len(), records.len());
    }

    #[test]
    fn bundled_table() {
        let t = BundledTable::bundled();
        assert_eq!(t.rows.len(), 121);
        assert_eq!(t.rows[0], (1, seq([59, 630, 889, 1088])));
        assert!(t.rows.windows(2).all(|w| w[0].1.coords()[0] <= w[1].1.coords()[0]));
        assert_eq!(t.distinct_up_to(&int(10_000_000)).len(), 120);
        assert_eq!(t.rows[103].1, t.rows[104].1);
        assert_eq!(t.plot_data()[0], (int(59), 1));
    }
}
