//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function takes plain strings or numbers and returns a JSON
//! document. The `*_json` functions hold the logic and are callable natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use semigroup_forge::family::{verify_family, VerifyOptions};
use semigroup_forge::presentation::{mu_and_betti_degrees, toric_ideal_generators, CertifiedSet, ToricStrategy};
use semigroup_forge::{Budget, NumericalSemigroup};

/// Largest multiplicity accepted from the page; the Apéry table has this
/// many entries.
pub const MAX_MULTIPLICITY: i64 = 100_000;
/// Membership is listed for `0..=F + m` only while this stays small.
pub const MAX_STRIP: i64 = 5_000;
pub const MAX_FAMILY_I: i64 = 8;

/// Budget for in-browser computations, well below the library default.
fn web_budget() -> Budget {
    Budget {
        max_spairs: 50_000,
        max_factorization_nodes: 1_000_000,
    }
}

fn parse_gens(text: &str) -> Result<Vec<i64>, String> {
    let gens: Vec<i64> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| format!("not an integer: {t:?}")))
        .collect::<Result<_, _>>()?;
    if let Some(&m) = gens.iter().filter(|&&g| g > 0).min() {
        if m > MAX_MULTIPLICITY {
            return Err(format!(
                "smallest generator {m} exceeds the demo limit {MAX_MULTIPLICITY}"
            ));
        }
    }
    Ok(gens)
}

pub fn semigroup_json(gens: &str) -> Result<String, String> {
    let gens = parse_gens(gens)?;
    let s = NumericalSemigroup::new(&gens).map_err(|e| e.to_string())?;
    let inv = s.pseudo_frobenius();
    let m = s.multiplicity();
    let strip_end = inv.frobenius + m;
    let membership: Option<Vec<bool>> =
        (strip_end <= MAX_STRIP).then(|| (0..=strip_end).map(|x| s.contains(x)).collect());
    Ok(json!({
        "generators": s.generators(),
        "multiplicity": m,
        "embedding_dimension": s.embedding_dimension(),
        "frobenius": inv.frobenius,
        "genus": inv.genus,
        "pseudo_frobenius": inv.pseudo_frobenius,
        "type": inv.cm_type,
        "apery": s.apery_multiplicity().entries(),
        "maximal_apery": s.maximal_apery_elements(),
        "membership": membership,
    })
    .to_string())
}

pub fn ideal_json(gens: &str, strategy: &str) -> Result<String, String> {
    let gens = parse_gens(gens)?;
    let strategy = match strategy {
        "saturation" => ToricStrategy::Saturation,
        "elimination" => ToricStrategy::Elimination,
        other => return Err(format!("unknown strategy {other:?}")),
    };
    let s = NumericalSemigroup::new(&gens).map_err(|e| e.to_string())?;
    let budget = web_budget();
    let minimal = s.generators().to_vec();
    let set = toric_ideal_generators(&minimal, strategy, &budget).map_err(|e| e.to_string())?;
    let certified = CertifiedSet::certify(&minimal, set, &budget).map_err(|e| e.to_string())?;
    let p = mu_and_betti_degrees(&certified, &budget).map_err(|e| e.to_string())?;
    let betti: Vec<Value> = p
        .betti_degrees
        .iter()
        .map(|(d, c)| json!({ "degree": d, "count": c }))
        .collect();
    Ok(json!({
        "generators": minimal,
        "generating_set": p.generating_set,
        "betti_degrees": betti,
        "mu": p.mu,
    })
    .to_string())
}

pub fn family_sweep_json(e: usize, i_min: i64, i_max: i64) -> Result<String, String> {
    if i_min < 2 || i_max < i_min || i_max > MAX_FAMILY_I {
        return Err(format!("choose 2 <= i_min <= i_max <= {MAX_FAMILY_I}"));
    }
    let opts = VerifyOptions {
        budget: web_budget(),
        ..VerifyOptions::default()
    };
    let rows = (i_min..=i_max)
        .map(|i| {
            let r = verify_family(e, i, &opts).map_err(|err| err.to_string())?;
            Ok(json!({
                "i": i,
                "n": r.params.n,
                "generators": r.params.generators,
                "type": r.cm_type,
                "mu": r.mu,
                "expected_mu": r.expected_mu,
                "apery_match": r.apery_match,
                "pf_match": r.pf_match,
                "all_match": r.all_match(),
            }))
        })
        .collect::<Result<Vec<Value>, String>>()?;
    Ok(json!({ "e": e, "rows": rows }).to_string())
}

/// Apéry table, pseudo-Frobenius numbers and membership strip.
#[wasm_bindgen]
pub fn semigroup_report(gens: &str) -> Result<String, JsValue> {
    semigroup_json(gens).map_err(|e| JsValue::from_str(&e))
}

/// Minimal number of generators and Betti degrees of the defining ideal.
#[wasm_bindgen]
pub fn ideal_report(gens: &str, strategy: &str) -> Result<String, JsValue> {
    ideal_json(gens, strategy).map_err(|e| JsValue::from_str(&e))
}

/// Type and μ along the family S(n, e) for `i_min..=i_max`.
#[wasm_bindgen]
pub fn family_sweep(e: usize, i_min: i32, i_max: i32) -> Result<String, JsValue> {
    family_sweep_json(e, i_min.into(), i_max.into()).map_err(|e| JsValue::from_str(&e))
}
