//! Browser bindings. Every export returns a JSON string; errors surface as
//! thrown strings on the JS side.

use nearrect::closedform::{FamilyKind, ProductFamily};
use nearrect::enumeration::{self, Method, SigmaMethod};
use nearrect::Partition;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn literal(p: &Partition) -> Value {
    json!(p.parts())
}

/// The closed-form product for one family member.
pub fn family_json(kind: &str, n: usize) -> Result<String, String> {
    let kind: FamilyKind = kind.parse().map_err(|e: nearrect::Error| e.to_string())?;
    let fam = ProductFamily::new(kind, n).map_err(|e| e.to_string())?;
    let (mu, nu) = fam.shapes();
    let expansion = fam.expand();
    let terms: Vec<Value> = expansion
        .terms()
        .map(|(p, c)| {
            json!({
                "partition": literal(p),
                "coeff": c.to_string(),
                "branch": fam.matched_branch(p),
            })
        })
        .collect();
    Ok(json!({
        "product": fam.to_string(),
        "mu": literal(&mu),
        "nu": literal(&nu),
        "degree": fam.degree(),
        "terms": terms,
    })
    .to_string())
}

/// Statistics, hook lengths and tableau count of a partition literal.
pub fn stats_json(text: &str) -> Result<String, String> {
    let p: Partition = text.parse().map_err(|e: nearrect::Error| e.to_string())?;
    let s = p.stats();
    Ok(json!({
        "partition": literal(&p),
        "size": p.size(),
        "distinct": s.distinct,
        "two_removable": s.two_removable,
        "repeated": s.repeated,
        "odd_parts": s.odd_parts,
        "even_parts": s.even_parts,
        "distinct_odd_parts": s.distinct_odd_parts,
        "distinct_even_parts": s.distinct_even_parts,
        "sigma": s.sigma_string(),
        "a1": s.a1,
        "a2": s.a2,
        "b1": s.b1,
        "b2": s.b2,
        "in_p": p.in_p(),
        "in_q": p.in_q(),
        "hooks": p.hook_grid().rows,
        "syt_count": p.syt_count().to_string(),
    })
    .to_string())
}

/// Tableau counts for sizes `0..=n_max`: brute sums next to every closed
/// form that applies for height `k`.
pub fn census_json(k: usize, n_max: usize) -> Result<String, String> {
    if n_max > 40 {
        return Err("n_max above 40 is too slow for the brute column".into());
    }
    let err = |e: nearrect::Error| e.to_string();
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let tau_closed = match enumeration::tau(k, n, Method::Closed) {
            Ok(v) => Some(v.to_string()),
            Err(nearrect::Error::ClosedFormUnavailable(_)) => None,
            Err(e) => return Err(e.to_string()),
        };
        let sigma_closed = (k == 4)
            .then(|| enumeration::sigma(k, n, SigmaMethod::Closed).map(|v| v.to_string()))
            .transpose()
            .map_err(err)?;
        rows.push(json!({
            "n": n,
            "tau": enumeration::tau(k, n, Method::Brute).map_err(err)?.to_string(),
            "tau_closed": tau_closed,
            "sigma": enumeration::sigma(k, n, SigmaMethod::Brute).map_err(err)?.to_string(),
            "sigma_closed": sigma_closed,
        }));
    }
    Ok(json!({ "k": k, "rows": rows }).to_string())
}

#[wasm_bindgen]
pub fn expand_family(kind: &str, n: u32) -> Result<String, JsValue> {
    family_json(kind, n as usize).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn partition_stats(text: &str) -> Result<String, JsValue> {
    stats_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn census_table(k: u32, n_max: u32) -> Result<String, JsValue> {
    census_json(k as usize, n_max as usize).map_err(|e| JsValue::from_str(&e))
}

/// Family slugs with their products, for populating a picker.
#[wasm_bindgen]
pub fn family_list() -> String {
    let list: Vec<Value> = FamilyKind::ALL
        .iter()
        .map(|k| json!({ "slug": k.slug(), "pattern": k.pattern(), "min_n": k.min_n() }))
        .collect();
    Value::Array(list).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn family_expansion() {
        let v = parse(&family_json("one-box-row", 4).unwrap());
        assert_eq!(v["degree"], 8);
        assert_eq!(v["terms"].as_array().unwrap().len(), 15);
        assert_eq!(v["product"], "s(4,3,1) * s(4,4)");
        assert!(family_json("two-box-row", 2).is_err());
        assert!(family_json("nope", 4).is_err());
    }

    #[test]
    fn stats() {
        let v = parse(&stats_json("8,6,2,1").unwrap());
        assert_eq!(v["sigma"], "22211");
        assert_eq!(v["hooks"][0][0], 11);
        assert!(stats_json("1,2").is_err());
    }

    #[test]
    fn census() {
        let v = parse(&census_json(4, 5).unwrap());
        let last = &v["rows"][5];
        assert_eq!(last["tau"], "25");
        assert_eq!(last["tau_closed"], "25");
        assert_eq!(last["sigma"], last["sigma_closed"]);
        let v = parse(&census_json(6, 3).unwrap());
        assert!(v["rows"][3]["tau_closed"].is_null());
        assert!(census_json(3, 41).is_err());
    }

    #[test]
    fn family_picker() {
        let v = parse(&family_list());
        assert_eq!(v.as_array().unwrap().len(), 8);
    }
}
