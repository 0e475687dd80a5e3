//! Machine-readable reports: the JSON wire formats emitted by the CLI.
//!
//! All counts are decimal strings. Field order is fixed (insertion order is
//! preserved), so identical inputs serialize to identical bytes; wall-clock
//! timings are deliberately excluded from the wire records.

use crate::census::{CensusRecord, InferenceRecord, VerifyRecord};
use crate::poset::{
    BuildResult, EulerMobiusViolation, GroupAction, IntervalCohomology, Orbit,
    SemimodularityFailure, StabilizationTable, StratumLabel, VanishingReport,
};
use crate::types::RamificationType;
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

pub fn type_value(ty: &RamificationType) -> Value {
    json!(ty.to_nested())
}

pub fn pcount_value(n: u64, count: &BigUint) -> Value {
    json!({ "n": n, "p": big_value(count) })
}

/// c(m) under both conventions; absent convention omitted.
pub fn cofm_value(m: u32, eq12: Option<&BigUint>, multiset: Option<&BigUint>) -> Value {
    let mut map = Map::new();
    map.insert("m".into(), json!(m));
    if let Some(v) = eq12 {
        map.insert("eq12".into(), big_value(v));
    }
    if let Some(v) = multiset {
        map.insert("multiset".into(), big_value(v));
    }
    Value::Object(map)
}

/// Counts that fit in u64 serialize as JSON numbers, larger ones as strings.
fn big_value(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

fn histogram_value(record: &CensusRecord) -> Value {
    let mut map = Map::new();
    for (length, count) in record.histogram.iter().enumerate() {
        map.insert(length.to_string(), json!(count.to_string()));
    }
    Value::Object(map)
}

/// CSV export of the histogram: `length,count` rows.
pub fn histogram_csv(record: &CensusRecord) -> String {
    let mut out = String::from("length,count\n");
    for (length, count) in record.histogram.iter().enumerate() {
        out.push_str(&format!("{length},{count}\n"));
    }
    out
}

pub fn census_value(record: &CensusRecord, include_histogram: bool) -> Value {
    let mut map = Map::new();
    map.insert("n".into(), json!(record.n));
    map.insert("m".into(), json!(record.m));
    map.insert("p".into(), json!(record.p));
    map.insert("d".into(), json!(record.d));
    map.insert("q".into(), json!(record.q));
    map.insert("count".into(), json!(record.count.to_string()));
    if include_histogram {
        map.insert("histogram".into(), histogram_value(record));
    }
    Value::Object(map)
}

pub fn verify_value(record: &VerifyRecord, include_histogram: bool) -> Value {
    let mut map = match census_value(&record.census, include_histogram) {
        Value::Object(map) => map,
        _ => unreachable!(),
    };
    map.insert(
        "predicted".into(),
        json!({
            "eq12": optional_big(&record.predicted_eq12),
            "multiset": optional_big(&record.predicted_multiset),
        }),
    );
    map.insert("verdict".into(), json!(record.verdict.as_str()));
    map.insert("flags".into(), json!(record.flags));
    Value::Object(map)
}

fn optional_big(v: &Option<BigUint>) -> Value {
    match v {
        Some(v) => json!(v.to_string()),
        None => Value::Null,
    }
}

pub fn adjudicate_value(
    inference: &InferenceRecord,
    c_eq12: &BigUint,
    c_multiset: &BigUint,
) -> Value {
    let fields: Vec<Value> = inference
        .per_field
        .iter()
        .map(|(record, c)| {
            json!({
                "p": record.p,
                "d": record.d,
                "q": record.q,
                "count": record.count.to_string(),
                "inferred_c": {
                    "numerator": c.numerator.to_string(),
                    "denominator": c.denominator.to_string(),
                },
                "integral": c.is_integral(),
            })
        })
        .collect();
    let verdict = match &inference.c {
        Some(c) if c == c_eq12 && c == c_multiset => "matches-both",
        Some(c) if c == c_eq12 => "matches-eq12",
        Some(c) if c == c_multiset => "matches-multiset",
        _ => "matches-neither",
    };
    json!({
        "n": inference.n,
        "m": inference.m,
        "fields": fields,
        "integral": inference.all_integral,
        "consistent": inference.consistent,
        "c": inference.c.as_ref().map(|c| c.to_string()),
        "conventions": {
            "eq12": c_eq12.to_string(),
            "multiset": c_multiset.to_string(),
        },
        "verdict": verdict,
        "flags": inference.flags,
    })
}

fn cohomology_value(coh: &IntervalCohomology) -> Value {
    let mut map = Map::new();
    for (deg, rank) in &coh.ranks {
        map.insert(deg.to_string(), json!(rank));
    }
    Value::Object(map)
}

fn label_value(label: &StratumLabel, length: u32) -> Value {
    json!({
        "rho1": label.rho1().blocks(),
        "rho2": label.rho2().blocks(),
        "l": length,
    })
}

pub fn orbit_value(orbit: &Orbit, ty: &RamificationType) -> Value {
    json!({
        "representative": orbit.representative,
        "size": orbit.members.len(),
        "length": orbit.length,
        "type": type_value(ty),
    })
}

/// The full poset dump plus per-check reports. `checks` holds one entry per
/// requested check name, already rendered.
pub fn poset_value(
    n: u32,
    m: u32,
    build: &BuildResult,
    checks: Map<String, Value>,
    notes: &[String],
) -> Value {
    let poset = &build.poset;
    let elements: Vec<Value> = (0..poset.len())
        .map(|i| label_value(poset.element(i), poset.rank(i)))
        .collect();
    let covers: Vec<Value> = poset
        .cover_pairs()
        .iter()
        .map(|&(a, b)| json!([a, b]))
        .collect();
    json!({
        "n": n,
        "m": m,
        "elements": elements,
        "covers": covers,
        "truncated_at": build.truncated_at,
        "blocked_sibling_states": build.blocked_sibling_states,
        "checks": checks,
        "notes": notes,
    })
}

pub fn graded_check_value<L: Clone + Eq + std::hash::Hash>(
    poset: &crate::poset::GradedPoset<L>,
) -> (bool, Value) {
    match poset.check_graded() {
        Ok(()) => (true, json!({ "status": "pass" })),
        Err((lo, hi)) => (
            false,
            json!({ "status": "fail", "cover": [lo, hi] }),
        ),
    }
}

pub fn semimodular_check_value(failure: &Option<SemimodularityFailure>) -> (bool, Value) {
    match failure {
        None => (true, json!({ "status": "pass" })),
        Some(f) => (
            false,
            json!({
                "status": "fail",
                "counterexample": { "x": f.x, "alpha": f.alpha, "beta": f.beta, "y": f.y },
            }),
        ),
    }
}

pub fn vanishing_check_value(report: &VanishingReport<StratumLabel>) -> (bool, Value) {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            json!({
                "element": row.element,
                "lm": row.quotient_length,
                "cohomology": cohomology_value(&row.cohomology),
                "ok": row.ok,
            })
        })
        .collect();
    (
        report.pass,
        json!({
            "status": if report.pass { "pass" } else { "fail" },
            "rows": rows,
            "notes": "degrees below l^m - 2 must vanish",
        }),
    )
}

pub fn euler_mobius_check_value(result: &Result<(), EulerMobiusViolation>) -> (bool, Value) {
    match result {
        Ok(()) => (true, json!({ "status": "pass" })),
        Err(v) => (
            false,
            json!({
                "status": "fail",
                "counterexample": {
                    "u": v.u, "v": v.v,
                    "euler": v.euler.to_string(),
                    "mobius": v.mobius.to_string(),
                },
            }),
        ),
    }
}

/// Orbit check: at every length, the orbit types must be exactly the
/// admissible types of that length.
pub fn orbits_check_value(
    decomposition: &[(Orbit, RamificationType)],
    n: u32,
    max_length: u32,
) -> (bool, Value) {
    let mut pass = true;
    let mut per_length = Vec::new();
    for length in 0..=max_length {
        let mut got: Vec<RamificationType> = decomposition
            .iter()
            .filter(|(o, _)| o.length == length)
            .map(|(_, t)| t.clone())
            .collect();
        got.sort();
        let mut expected: Vec<RamificationType> = crate::types::enumerate_types(length)
            .into_iter()
            .filter(|t| {
                let report = crate::types::admissibility(t, n);
                report.combinatorial && report.affine
            })
            .collect();
        expected.sort();
        let ok = got == expected;
        pass &= ok;
        per_length.push(json!({
            "length": length,
            "orbit_types": got.iter().map(type_value).collect::<Vec<_>>(),
            "admissible_types": expected.iter().map(type_value).collect::<Vec<_>>(),
            "ok": ok,
        }));
    }
    let orbits: Vec<Value> = decomposition
        .iter()
        .map(|(o, t)| orbit_value(o, t))
        .collect();
    (
        pass,
        json!({
            "status": if pass { "pass" } else { "fail" },
            "orbits": orbits,
            "per_length": per_length,
        }),
    )
}

/// Invariant-cohomology report: computed and *reported*, never pass/fail.
/// A nonzero invariant dimension in the top degree of an element with
/// quotient length >= 2 is flagged as a discrepancy against the
/// invariant-vanishing claim.
pub fn invariants_check_value(
    quotient: &crate::poset::GradedPoset<StratumLabel>,
    action: &GroupAction,
) -> Value {
    let mut rows = Vec::new();
    let mut flags = Vec::new();
    for lambda in 0..quotient.len() {
        if lambda == quotient.bottom() {
            continue;
        }
        let inv = crate::poset::invariant_cohomology(quotient, lambda, action);
        let lm = quotient.rank(lambda);
        let mut map = Map::new();
        for (deg, dim) in &inv {
            map.insert(deg.to_string(), json!(dim));
        }
        // Under the printed quotient length (bottom covers at 0), an element
        // of quotient length k has its top interval degree at k - 1; the
        // invariant-vanishing claim concerns exactly that degree, and asks
        // nothing of the bottom covers themselves.
        if lm >= 1 {
            let top_degree = lm as i32 - 1;
            if inv.get(&top_degree).copied().unwrap_or(0) > 0 {
                flags.push(format!(
                    "nonzero invariant class at element {lambda} (l^m = {lm}, degree {top_degree}): \
                     the model contradicts a literal reading of the invariant-vanishing claim"
                ));
            }
        }
        rows.push(json!({
            "element": lambda,
            "lm": lm,
            "invariant_dimensions": Value::Object(map),
        }));
    }
    json!({
        "status": "reported",
        "rows": rows,
        "flags": flags,
    })
}

pub fn stabilization_value(table: &StabilizationTable) -> Value {
    json!({
        "m": table.m,
        "rows": table.rows.iter().map(|r| json!({
            "n": r.n,
            "model_orbits": r.model_orbits,
            "combinatorially_admissible": r.combinatorially_admissible,
            "fully_admissible": r.fully_admissible,
        })).collect::<Vec<_>>(),
        "stabilized_at": table.stabilized_at,
    })
}
