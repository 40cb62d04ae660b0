//! JSON file formats: groups, cochains, cocycle bundles, and the report
//! payloads emitted by the command-line tool.
//!
//! Formats (stable, byte-deterministic given identical inputs):
//!
//! * group file — `{"name": string, "order": N, "table": [[int; N]; N]}`;
//! * cochain file — `{"group": name-or-#hash, "degree": n, "coeff": "f2"|"qz",
//!   "values": [...]}` with bits as 0/1 numbers and ℚ/ℤ entries as "p/q"
//!   strings, in lexicographic order of non-identity tuples;
//! * cocycle bundle — `{"group": preset-name-or-inline-group, "kappa": …,
//!   "alpha": …, "beta": …, "gamma"?: …}` with each layer a cochain payload.

use crate::cochain::{cochain_dim, Cochain, CochainError, Coefficients};
use crate::consistency::{ConsistencyReport, TheoremCrossCheck, Verdict};
use crate::f2linalg::F2Vector;
use crate::group::{FiniteGroup, GroupError};
use crate::premodular::{Condensation, PremodularCategory};
use crate::rational::{rational_to_string, QmodZVector, QZ};
use crate::supercoh::{ShiftOrbit, SupercohCocycle, ValidationReport};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid file: {0}")]
    Invalid(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cochain(#[from] CochainError),
}

/// `{"name", "order", "table"}`
#[derive(Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// Parse and fully validate a group file. Parse failures carry the line and
/// column from the JSON reader; table failures name the offending row.
pub fn group_from_json(text: &str) -> Result<FiniteGroup, IoError> {
    let file: GroupFile = serde_json::from_str(text)
        .map_err(|e| IoError::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    if file.table.len() != file.order {
        return Err(IoError::Invalid(format!(
            "declared order {} but table has {} rows",
            file.order,
            file.table.len()
        )));
    }
    Ok(FiniteGroup::from_table(file.name, file.table)?)
}

pub fn group_to_json(group: &FiniteGroup) -> Value {
    json!({
        "name": group.name,
        "order": group.order,
        "table": group.table,
    })
}

/// How a cochain file names its group: the preset name when there is one,
/// otherwise a fingerprint of the multiplication table.
pub fn group_ref(group: &FiniteGroup) -> String {
    if group.name.is_empty() {
        format!("#{}", group.fingerprint())
    } else {
        group.name.clone()
    }
}

#[derive(Serialize, Deserialize, Clone)]
#[serde(untagged)]
pub enum RawValue {
    Bit(u8),
    Frac(String),
}

/// `{"group", "degree", "coeff", "values"}`
#[derive(Serialize, Deserialize, Clone)]
pub struct CochainFile {
    pub group: String,
    pub degree: usize,
    pub coeff: String,
    pub values: Vec<RawValue>,
}

pub fn cochain_to_file(c: &Cochain) -> CochainFile {
    let (coeff, values) = match c.coefficients() {
        Coefficients::F2 => {
            let bits = c.f2_bits().unwrap();
            (
                "f2".to_string(),
                (0..bits.len())
                    .map(|i| RawValue::Bit(u8::from(bits.get(i))))
                    .collect(),
            )
        }
        Coefficients::QZ => (
            "qz".to_string(),
            c.qz_entries()
                .unwrap()
                .iter()
                .map(|q| RawValue::Frac(q.to_string()))
                .collect(),
        ),
    };
    CochainFile {
        group: group_ref(c.group()),
        degree: c.degree(),
        coeff,
        values,
    }
}

pub fn cochain_from_file(
    file: &CochainFile,
    group: &Arc<FiniteGroup>,
) -> Result<Cochain, IoError> {
    let expected_ref = group_ref(group);
    if file.group != expected_ref && file.group != format!("#{}", group.fingerprint()) {
        return Err(IoError::Invalid(format!(
            "cochain file is tagged for group `{}`, not `{expected_ref}`",
            file.group
        )));
    }
    let dim = cochain_dim(group.order, file.degree);
    if file.values.len() != dim {
        return Err(IoError::Invalid(format!(
            "degree-{} cochain needs {dim} values, file has {}",
            file.degree,
            file.values.len()
        )));
    }
    match file.coeff.as_str() {
        "f2" => {
            let mut bits = F2Vector::zeros(dim);
            for (i, v) in file.values.iter().enumerate() {
                match v {
                    RawValue::Bit(0) => {}
                    RawValue::Bit(1) => bits.set(i, true),
                    RawValue::Bit(b) => {
                        return Err(IoError::Invalid(format!(
                            "entry {i}: F2 value must be 0 or 1, found {b}"
                        )))
                    }
                    RawValue::Frac(s) => {
                        return Err(IoError::Invalid(format!(
                            "entry {i}: F2 cochain holds a string \"{s}\""
                        )))
                    }
                }
            }
            Ok(Cochain::from_f2_vector(group.clone(), file.degree, bits))
        }
        "qz" => {
            let mut entries = QmodZVector::zeros(dim);
            for (i, v) in file.values.iter().enumerate() {
                let q = match v {
                    RawValue::Bit(b) => QZ::new(i64::from(*b), 1),
                    RawValue::Frac(s) => s
                        .parse::<QZ>()
                        .map_err(|e| IoError::Invalid(format!("entry {i}: {e}")))?,
                };
                entries.set(i, q);
            }
            Ok(Cochain::from_qz_vector(group.clone(), file.degree, entries))
        }
        other => Err(IoError::Invalid(format!(
            "unknown coefficient tag `{other}` (expected \"f2\" or \"qz\")"
        ))),
    }
}

/// A cocycle bundle: the group plus the (κ; α, β, γ) layers.
#[derive(Serialize, Deserialize)]
pub struct BundleFile {
    pub group: GroupSpec,
    pub kappa: CochainFile,
    pub alpha: CochainFile,
    pub beta: CochainFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<CochainFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Preset(String),
    Inline(GroupFile),
}

pub fn bundle_from_json(text: &str) -> Result<(Arc<FiniteGroup>, SupercohCocycle), IoError> {
    let file: BundleFile = serde_json::from_str(text)
        .map_err(|e| IoError::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let group = match &file.group {
        GroupSpec::Preset(name) => crate::group::build_group(name)?,
        GroupSpec::Inline(g) => Arc::new(FiniteGroup::from_table(g.name.clone(), g.table.clone())?),
    };
    let kappa = cochain_from_file(&file.kappa, &group)?;
    let alpha = cochain_from_file(&file.alpha, &group)?;
    let beta = cochain_from_file(&file.beta, &group)?;
    let gamma = file
        .gamma
        .as_ref()
        .map(|g| cochain_from_file(g, &group))
        .transpose()?;
    let cocycle = SupercohCocycle::new(kappa, alpha, beta, gamma)
        .map_err(|e| IoError::Invalid(e.to_string()))?;
    Ok((group, cocycle))
}

pub fn bundle_to_json(group: &Arc<FiniteGroup>, c: &SupercohCocycle) -> Value {
    let mut obj = json!({
        "group": group_ref(group),
        "kappa": serde_json::to_value(cochain_to_file(c.kappa())).unwrap(),
        "alpha": serde_json::to_value(cochain_to_file(c.alpha())).unwrap(),
        "beta": serde_json::to_value(cochain_to_file(c.beta())).unwrap(),
    });
    if let Some(g) = c.gamma() {
        obj["gamma"] = serde_json::to_value(cochain_to_file(g)).unwrap();
    }
    obj
}

pub fn validation_to_json(report: &ValidationReport) -> Value {
    let status = |s: &crate::supercoh::LayerStatus| -> Value {
        use crate::supercoh::LayerStatus::*;
        match s {
            Holds => json!({"holds": true}),
            Fails(d) => json!({"holds": false, "detail": d}),
            Pending(d) => json!({"holds": Value::Null, "pending": d}),
            NotPresent => json!({"holds": Value::Null, "absent": true}),
        }
    };
    json!({
        "kappaClosed": status(&report.kappa_closed),
        "alphaClosed": status(&report.alpha_closed),
        "guWenLayer": status(&report.beta_layer),
        "dijkgraafWittenLayer": status(&report.gamma_layer),
    })
}

/// `{"period": p, "states": [...], "checks": {...}}`
pub fn orbit_to_json(group: &Arc<FiniteGroup>, orbit: &ShiftOrbit) -> Value {
    json!({
        "period": orbit.period,
        "states": orbit
            .states
            .iter()
            .map(|s| bundle_to_json(group, s))
            .collect::<Vec<_>>(),
        "checks": {
            "validityPreserved": orbit.checks.validity_preserved,
            "betaTwoStepIdentity": orbit.checks.beta_two_step_identity,
            "betaFourStepReturn": orbit.checks.beta_four_step_return,
        },
    })
}

/// `{"label", "rank", "twists", "fusion", "centralCharge", "dimSquares"}`
pub fn category_to_json(c: &PremodularCategory) -> Value {
    json!({
        "label": c.label,
        "rank": c.rank(),
        "simples": c.simples,
        "twists": c.twists.iter().map(rational_to_string).collect::<Vec<_>>(),
        "fusion": c.fusion,
        "centralCharge": format!("{} mod 8", rational_to_string(&c.central_charge)),
        "dimSquares": c.dim_squares.iter().map(rational_to_string).collect::<Vec<_>>(),
    })
}

pub fn condensation_to_json(label: &str, cond: &Condensation) -> Value {
    json!({
        "identified": label,
        "result": category_to_json(&cond.result),
        "modules": cond
            .modules
            .iter()
            .map(|m| serde_json::to_value(m).unwrap())
            .collect::<Vec<_>>(),
        "dimsBalanced": cond.dims_balanced,
    })
}

fn verdict_to_json(v: &Verdict) -> Value {
    let mut obj = json!({
        "n": v.n,
        "feasible": v.feasible,
    });
    if let Some(n1) = &v.n1 {
        obj["n1"] = serde_json::to_value(cochain_to_file(n1)).unwrap();
    }
    if let Some(n2) = &v.n2 {
        obj["n2"] = serde_json::to_value(cochain_to_file(n2)).unwrap();
    }
    if v.gauge_trivialized {
        obj["gaugeTrivialized"] = json!(true);
    }
    obj
}

/// The consistency report:
/// `{"group", "kappa", "verdicts", "subgroup", "theoremB"}`.
pub fn consistency_to_json(
    group: &Arc<FiniteGroup>,
    kappa_id: &str,
    report: &ConsistencyReport,
    crosscheck: &TheoremCrossCheck,
) -> Value {
    json!({
        "group": group_ref(group),
        "kappa": kappa_id,
        "verdicts": report.verdicts.iter().map(verdict_to_json).collect::<Vec<_>>(),
        "subgroup": {
            "generator": report.subgroup.generator,
            "order": report.subgroup.order,
            "elements": report.subgroup.elements,
        },
        "theoremB": {
            "pass": crosscheck.period_match,
            "predictedPeriod": crosscheck.predicted_period,
            "divisibilitySet": crosscheck.divisibility_set,
            "orbitPeriod": crosscheck.orbit_period,
            "orbitMatch": crosscheck.orbit_match,
            "slackWitnessN1": crosscheck
                .slack_witness_n1
                .as_ref()
                .map(|c| serde_json::to_value(cochain_to_file(c)).unwrap()),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{cup, BarComplex};
    use crate::group::build_group;

    #[test]
    fn group_file_round_trip() {
        let g = build_group("d8").unwrap();
        let text = serde_json::to_string(&group_to_json(&g)).unwrap();
        let back = group_from_json(&text).unwrap();
        assert_eq!(*g, back);
    }

    #[test]
    fn group_file_rejects_bad_tables() {
        let bad = r#"{"name": "x", "order": 2, "table": [[0,1],[1,1]]}"#;
        let err = group_from_json(bad).unwrap_err();
        assert!(err.to_string().contains("permutation"));

        let bad = r#"{"name": "x", "order": 3, "table": [[0,1],[1,0]]}"#;
        assert!(group_from_json(bad).is_err());

        let syntactically_bad = r#"{"name": "x", "order": }"#;
        let err = group_from_json(syntactically_bad).unwrap_err();
        assert!(err.to_string().contains("line 1"));
    }

    #[test]
    fn cochain_round_trip_f2_and_qz() {
        let g = build_group("z4").unwrap();
        let cx = BarComplex::new(g.clone());
        let x = cx.generator_x().unwrap();
        let xx = cup(&x, &x).unwrap();
        let file = cochain_to_file(&xx);
        let back = cochain_from_file(&file, &g).unwrap();
        assert_eq!(back, xx);

        let q = xx.include_into_qz().unwrap();
        let file = cochain_to_file(&q);
        let back = cochain_from_file(&file, &g).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn cochain_file_group_tag_enforced() {
        let g = build_group("z4").unwrap();
        let h = build_group("z8").unwrap();
        let c = Cochain::zero(g.clone(), 2, Coefficients::F2);
        let file = cochain_to_file(&c);
        assert!(cochain_from_file(&file, &h).is_err());
    }

    #[test]
    fn bundle_round_trip() {
        let g = build_group("z2").unwrap();
        let cx = BarComplex::new(g.clone());
        let x = cx.generator_x().unwrap();
        let k = cup(&x, &x).unwrap();
        let c = SupercohCocycle::new(
            k.clone(),
            k,
            cx.zero(3, Coefficients::F2),
            Some(cx.zero(4, Coefficients::QZ)),
        )
        .unwrap();
        let text = serde_json::to_string(&bundle_to_json(&g, &c)).unwrap();
        let (g2, c2) = bundle_from_json(&text).unwrap();
        assert_eq!(*g, *g2);
        assert_eq!(c2.kappa(), c.kappa());
        assert_eq!(c2.alpha(), c.alpha());
        assert_eq!(c2.beta(), c.beta());
        assert!(c2.gamma().is_some());
    }
}
