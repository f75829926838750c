//! Canonical JSON documents. Object keys are sorted, rationals and weights
//! are strings, so re-parsing and re-serializing is byte-identical.

use serde_json::{json, Value};

use crate::classifier::{Classification, StratumReport, TripleKind};
use crate::error::Error;
use crate::metaplectic::{Certificate, ScanOutcome, Verdict};
use crate::nilpotent::SkewForm;
use crate::rational::{self, Rational};
use crate::weights::{weyl_dimension, Decomposition, HighestWeight};

pub fn weight(w: &HighestWeight) -> Value {
    Value::String(w.notation())
}

pub fn rational(q: &Rational) -> Value {
    Value::String(rational::format(q))
}

/// Terms in descending weight order, each with its multiplicity and
/// dimension.
pub fn decomposition(d: &Decomposition) -> Value {
    let terms: Vec<Value> = d
        .iter()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(w, m)| {
            json!({
                "weight": weight(w),
                "mult": m,
                "dim": weyl_dimension(w).ok(),
            })
        })
        .collect();
    json!({
        "algebra": d.algebra().to_string(),
        "terms": terms,
        "totalDim": d.total_dimension().ok(),
    })
}

pub fn certificate(c: &Certificate) -> Value {
    json!({
        "sigma": weight(&c.sigma),
        "occurrences": c.occurrences.iter().map(|o| json!({"j": o.j, "mult": o.mult})).collect::<Vec<_>>(),
    })
}

pub fn verdict(v: &Verdict) -> Value {
    let (kind, cert) = match &v.outcome {
        ScanOutcome::MultiplicityFree => ("MultiplicityFree", Value::Null),
        ScanOutcome::Duplicate(c) => ("Duplicate", certificate(c)),
    };
    json!({"kind": kind, "scannedJ": v.scanned_j, "certificate": cert})
}

fn stratum(s: &StratumReport) -> Value {
    json!({
        "center": s.center.to_string(),
        "squareIntegrable": s.square_integrable,
        "stabilizerDim": s.stabilizer_dim,
        "expectedStabilizerDim": s.expected_dim,
    })
}

pub fn classification(c: &Classification) -> Value {
    let (kind, cert) = match &c.kind {
        TripleKind::Commutative => ("Commutative", Value::Null),
        TripleKind::NonCommutative(cert) => ("NonCommutative", certificate(cert)),
    };
    json!({
        "kind": kind,
        "scannedJ": c.scanned_j,
        "certificate": cert,
        "restriction": decomposition(&c.restriction),
        "strata": c.strata.iter().map(stratum).collect::<Vec<_>>(),
        "flags": c.flags,
    })
}

pub fn matrix(rows: &[Vec<Rational>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(rational).collect()))
            .collect(),
    )
}

pub fn skew_form(m: &SkewForm) -> Value {
    matrix(m.rows())
}

pub fn error(e: &Error) -> Value {
    json!({"error": {"code": e.code(), "message": e.to_string()}})
}

/// Pretty-printed canonical text with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are always serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metaplectic::Occurrence;
    use crate::rational::ratio;

    #[test]
    fn verdict_schema() {
        let sigma = HighestWeight::from_integers("D3".parse().unwrap(), &[2, 1, 0]).unwrap();
        let v = Verdict {
            scanned_j: 2,
            outcome: ScanOutcome::Duplicate(Certificate {
                sigma,
                occurrences: vec![Occurrence { j: 0, mult: 1 }, Occurrence { j: 2, mult: 2 }],
            }),
        };
        let text = serde_json::to_string(&verdict(&v)).unwrap();
        assert_eq!(
            text,
            r#"{"certificate":{"occurrences":[{"j":0,"mult":1},{"j":2,"mult":2}],"sigma":"[2,1,0]"},"kind":"Duplicate","scannedJ":2}"#
        );
    }

    #[test]
    fn round_trip_is_identical() {
        let v = json!({"b": rational(&ratio(-6, 4)), "a": [1, 2]});
        let first = render(&v);
        let again = render(&serde_json::from_str(&first).unwrap());
        assert_eq!(first, again);
        assert!(first.find("\"a\"").unwrap() < first.find("\"b\"").unwrap());
        assert!(first.contains("\"-3/2\""));
    }
}
