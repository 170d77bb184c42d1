//! wasm-bindgen surface for the static demo page in `www/`. Every function
//! takes decimal strings and returns a JSON string, so the page never has to
//! deal with big integers itself.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use buchi_core::curves::{curve_rhs, scan_integer_points};
use buchi_core::families::{extends, xi_eval, BuchiSeq, Classifier, Side};
use buchi_core::numkernel::{parse_int, BigInt};

fn seq(x: &[String]) -> Result<BuchiSeq, String> {
    if x.len() != 4 {
        return Err("expected four integers".into());
    }
    let mut p: [BigInt; 4] = Default::default();
    for (slot, s) in p.iter_mut().zip(x) {
        *slot = parse_int(s.trim()).map_err(|e| e.to_string())?;
    }
    BuchiSeq::new(p).map_err(|e| e.to_string())
}

fn ext(s: &BuchiSeq) -> Value {
    let e = |side| extends(s.coords(), side).map(|y| y.to_string());
    json!({ "left": e(Side::Left), "right": e(Side::Right) })
}

/// Classification plus the ζ⁻¹ descent chain.
pub fn classify_json(x: &[String]) -> Value {
    let s = match seq(x) {
        Ok(s) => s,
        Err(e) => return json!({ "error": e }),
    };
    let classifier = Classifier::default();
    let c = classifier.classify(&s);
    let d = classifier.descend(&s);
    let chain: Vec<Value> =
        d.steps.iter().map(|st| json!({ "point": st.point.to_string(), "via": format!("{:?}", st.via) })).collect();
    json!({
        "seq": s.to_string(),
        "label": c.to_string(),
        "classification": c,
        "descent": chain,
        "end": d.end.to_string(),
        "extends": ext(&s),
    })
}

pub fn xi_json(n: usize, t: &str) -> Value {
    match parse_int(t.trim()) {
        Ok(t) => {
            let s = xi_eval(n, &t);
            json!({ "seq": s, "text": s.to_string(), "extends": ext(&s) })
        }
        Err(e) => json!({ "error": e.to_string() }),
    }
}

/// At most this many parameters per scan, to keep the page responsive.
pub const MAX_SCAN: i64 = 200_000;

pub fn scan_json(n: usize, right: bool, t_min: i64, t_max: i64) -> Value {
    if t_max.saturating_sub(t_min) > MAX_SCAN {
        return json!({ "error": format!("range wider than {MAX_SCAN}") });
    }
    let side = if right { Side::Right } else { Side::Left };
    let res = curve_rhs(n, side).and_then(|c| Ok((c.to_string(), scan_integer_points(&c, t_min, t_max)?)));
    match res {
        Ok((rhs, hits)) => json!({ "rhs": rhs, "hits": hits }),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

#[wasm_bindgen]
pub fn classify(x1: &str, x2: &str, x3: &str, x4: &str) -> String {
    classify_json(&[x1, x2, x3, x4].map(String::from)).to_string()
}

#[wasm_bindgen]
pub fn xi(n: usize, t: &str) -> String {
    xi_json(n, t).to_string()
}

#[wasm_bindgen]
pub fn scan_curve(n: usize, right: bool, t_min: i32, t_max: i32) -> String {
    scan_json(n, right, t_min.into(), t_max.into()).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(x: [&str; 4]) -> Vec<String> {
        x.map(String::from).to_vec()
    }

    #[test]
    fn classify_examples() {
        let v = classify_json(&strs(["6", "23", "32", "39"]));
        assert_eq!(v["label"], "Xi(n=1, t=0)");
        let v = classify_json(&strs(["5781", "22342", "31063", "37824"]));
        assert_eq!(v["label"], "Xi(n=4, t=0)");
        assert!(classify_json(&strs(["1", "2", "3", "5"]))["error"].is_string());
        assert!(classify_json(&strs(["1", "2", "x", "4"]))["error"].is_string());
    }

    #[test]
    fn xi_and_scan() {
        let v = xi_json(1, "0");
        assert_eq!(v["text"], "(6, 23, 32, 39)");
        assert!(v["extends"]["left"].is_null());
        let v = scan_json(1, true, -4, -1);
        assert_eq!(v["hits"].as_array().unwrap().len(), 4);
        assert!(scan_json(1, true, 0, MAX_SCAN + 1)["error"].is_string());
        assert!(scan_json(0, true, 0, 1)["error"].is_string());
    }
}
