//! JSON rendering of series and enumeration listings.

use iboson_core::{MultiSeries, PlanePartition, StrictPartition};
use serde_json::{json, Value};

/// A series as sorted monomial terms. Coefficients are exact: `a` and `b`
/// are the rational components of `a + b*sqrt(2)` in lowest terms.
pub fn series_to_json(s: &MultiSeries) -> Value {
    let ctx = s.context();
    let terms: Vec<Value> = s
        .terms()
        .map(|(exps, c)| {
            let mut m = serde_json::Map::new();
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    m.insert(ctx.var_names()[i].clone(), json!(e));
                }
            }
            json!({
                "exps": Value::Object(m),
                "a": c.a.to_string(),
                "b": c.b.to_string(),
            })
        })
        .collect();
    json!({
        "vars": ctx.var_names().to_vec(),
        "terms": terms,
    })
}

pub fn plane_to_json(pi: &PlanePartition) -> Value {
    json!(pi.rows().to_vec())
}

pub fn plane_from_json(v: &Value) -> Result<PlanePartition, String> {
    let rows: Vec<Vec<u32>> =
        serde_json::from_value(v.clone()).map_err(|e| format!("bad matrix: {}", e))?;
    std::panic::catch_unwind(|| PlanePartition::new(rows))
        .map_err(|_| "not a plane partition".to_string())
}

pub fn partition_to_json(mu: &StrictPartition) -> Value {
    json!(mu.parts().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use iboson_core::{QSqrt2, SeriesContext};

    #[test]
    fn series_terms_are_sorted_and_exact() {
        let ctx = SeriesContext::uniform(&["x", "y"], 4);
        let mut s = MultiSeries::one(&ctx);
        s.add_term(vec![1, 2], QSqrt2::from_fraction(1, 2));
        let v = series_to_json(&s);
        assert_eq!(v["terms"][0]["a"], "1");
        assert_eq!(v["terms"][1]["a"], "1/2");
        assert_eq!(v["terms"][1]["exps"]["y"], 2);
    }

    #[test]
    fn plane_round_trip() {
        let pi = PlanePartition::new(vec![vec![3, 1], vec![1]]);
        let v = plane_to_json(&pi);
        assert_eq!(plane_from_json(&v).unwrap(), pi);
        assert!(plane_from_json(&json!([[1, 2]])).is_err());
    }
}
