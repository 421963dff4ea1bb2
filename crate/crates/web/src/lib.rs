//! WebAssembly bindings for the browser demo. Every entry point returns a JSON
//! string; failures come back as `{"error": "..."}` rather than exceptions.

use gorenstein_core::dataset;
use gorenstein_core::descent::descent_report;
use gorenstein_core::duality::cech_homotopy;
use gorenstein_core::graded_ring::{
    gorenstein_shift_formula, gorenstein_shift_stanley, hilbert_series, krull_dimension,
    regularity_warning, RingPresentation, DEFAULT_NONNEGATIVITY_DEGREE,
};
use gorenstein_core::invariants::{molien_series, Twist};
use gorenstein_core::BigRational;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest window the page may request, to keep expansions interactive.
pub const MAX_WINDOW: u32 = 400;

fn error(message: impl std::fmt::Display) -> String {
    json!({ "error": message.to_string() }).to_string()
}

fn parse_degrees(field: &str, text: &str) -> Result<Vec<u32>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u32>()
                .map_err(|_| format!("{field}: {s:?} is not a nonnegative integer"))
        })
        .collect()
}

fn strings(v: &[BigRational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn explore(generators: &str, relations: &str, window: u32) -> Result<Value, String> {
    let gens = parse_degrees("generators", generators)?;
    let rels = parse_degrees("relations", relations)?;
    let p = RingPresentation::from_degrees("r", &gens, &rels).map_err(|e| e.to_string())?;
    let w = i64::from(window.min(MAX_WINDOW));
    let dim = krull_dimension(&p);
    let series = hilbert_series(&p);
    let cech = cech_homotopy(&p);
    let stanley = gorenstein_shift_stanley(&series, dim);
    Ok(json!({
        "presentation": p.to_string(),
        "series": series.to_string(),
        "krull_dimension": dim,
        "shift_formula": gorenstein_shift_formula(&p),
        "shift_functional_equation": stanley.as_ref().ok(),
        "functional_equation_error": stanley.as_ref().err().map(ToString::to_string),
        "splitting": cech.splitting.name(),
        "dual_label": cech.dual_part.label,
        "warning": regularity_warning(&p, DEFAULT_NONNEGATIVITY_DEGREE),
        "from": -w,
        "ring_part": strings(&cech.ring_part.coefficients(-w, w)),
        "dual_part": strings(&cech.dual_part.coefficients(-w, w)),
    }))
}

/// Hilbert series, Gorenstein shift and the two Čech summands of
/// `K[x_i]/(f_j)` with the given comma-separated degrees, expanded on
/// `-window..=window`.
#[wasm_bindgen]
pub fn duality_explorer(generators: &str, relations: &str, window: u32) -> String {
    match explore(generators, relations, window) {
        Ok(v) => v.to_string(),
        Err(e) => error(e),
    }
}

/// Keys of the bundled group actions, as a JSON array.
#[wasm_bindgen]
pub fn bundled_groups() -> String {
    let keys: Vec<Value> = dataset::GROUPS
        .iter()
        .map(|(key, ring, _)| json!({ "key": key, "ring": ring }))
        .collect();
    Value::Array(keys).to_string()
}

fn molien(group_key: &str, twist: &str, max_degree: u32) -> Result<Value, String> {
    let (_, ring_key, _) = dataset::GROUPS
        .iter()
        .find(|(k, _, _)| *k == group_key)
        .ok_or_else(|| format!("no bundled group {group_key:?}"))?;
    let ring = dataset::ring(ring_key);
    let loaded = dataset::group(group_key);
    let twist = match twist {
        "trivial" => Twist::Trivial,
        "det" => Twist::Det,
        other => return Err(format!("unknown twist {other:?} (trivial or det)")),
    };
    let report = molien_series(&loaded.group, &twist).map_err(|e| e.to_string())?;
    let descent = descent_report(&ring, &loaded.group).ok().map(|r| {
        json!({
            "base_shift_a": r.base_shift_a,
            "invariant_degrees": r.invariant_degrees,
            "solomon_b": r.solomon_b,
            "descended_gorenstein_shift": r.descended_gorenstein_shift,
            "descended_anderson_shift": r.descended_anderson_shift,
        })
    });
    let top = i64::from(max_degree.min(MAX_WINDOW));
    Ok(json!({
        "group": loaded.group.name(),
        "ring": ring.to_string(),
        "order": loaded.group.order(),
        "pseudoreflections": report.pseudoreflection_count,
        "series": report.series.to_string(),
        "polynomial_degrees": report.polynomial_degrees,
        "coefficients": strings(&report.series.expand(0, top)),
        "descent": descent,
    }))
}

/// Molien series of a bundled action, with the descent prediction when the
/// base ring is polynomial.
#[wasm_bindgen]
pub fn molien_explorer(group_key: &str, twist: &str, max_degree: u32) -> String {
    match molien(group_key, twist, max_degree) {
        Ok(v) => v.to_string(),
        Err(e) => error(e),
    }
}

/// The bundled table of Gorenstein shifts, recomputed from its degree columns.
#[wasm_bindgen]
pub fn shift_table() -> String {
    let rows: Vec<Value> = dataset::GORENSTEIN_TABLE
        .iter()
        .map(|row| {
            let computed = row.presentation().map(|p| gorenstein_shift_formula(&p));
            json!({
                "name": row.name,
                "prime": row.prime_label,
                "group": row.group_label,
                "generator_degrees": row.generator_degrees,
                "relation_degree": row.relation_degree,
                "computed_shift_a": computed.as_ref().ok(),
                "expected_shift_a": row.expected_shift_a,
                "pass": computed.as_ref().ok() == Some(&row.expected_shift_a),
            })
        })
        .collect();
    Value::Array(rows).to_string()
}
