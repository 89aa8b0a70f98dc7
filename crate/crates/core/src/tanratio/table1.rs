//! The quadratic non-unit tangent ratios and the shipped reference list.
//!
//! Rows are compared on `(α, β, trace, norm, unit)` after Galois
//! normalization; the radical form of μ is carried for display only.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{enumerate_ratios, normalize_by_galois, RationalAngle, TangentRatio};
use crate::exactnum::Rational;
use crate::report::Report;
use crate::Result;

const GROUND_TRUTH: &str = include_str!("../../data/table1.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub alpha: RationalAngle,
    pub beta: RationalAngle,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    pub trace: Rational,
    pub norm: Rational,
    pub unit: bool,
}

impl Table1Row {
    pub fn from_ratio(t: &TangentRatio) -> Result<Self> {
        Ok(Table1Row {
            alpha: t.alpha().clone(),
            beta: t.beta().clone(),
            mu: t.quadratic()?.map(|q| q.to_string()),
            trace: t.trace(),
            norm: t.norm(),
            unit: t.is_unit(),
        })
    }

    fn key(&self) -> (&RationalAngle, &RationalAngle, &Rational, &Rational, bool) {
        (&self.alpha, &self.beta, &self.trace, &self.norm, self.unit)
    }
}

/// The nine reference rows shipped with the crate.
pub fn ground_truth() -> Vec<Table1Row> {
    Report::from_json(GROUND_TRUTH)
        .and_then(|r| r.records_as())
        .expect("bundled table is well-formed")
}

/// Reference rows from a report file in the same format as the bundled one.
pub fn load_ground_truth(path: &Path) -> Result<Vec<Table1Row>> {
    Report::from_json(&std::fs::read_to_string(path)?)?.records_as()
}

/// Degree-2 non-units up to `max_denominator`, normalized and deduplicated.
pub fn compute(max_denominator: u64) -> Result<Vec<Table1Row>> {
    let mut rows = enumerate_ratios(2, max_denominator)?
        .iter()
        .filter(|t| !t.is_unit())
        .map(|t| normalize_by_galois(t).and_then(|n| Table1Row::from_ratio(&n)))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.key().cmp(&b.key()));
    rows.dedup_by(|a, b| a.key() == b.key());
    Ok(rows)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Comparison {
    pub matched: Vec<Table1Row>,
    /// In the reference but not computed.
    pub missing: Vec<Table1Row>,
    /// Computed but not in the reference.
    pub unexpected: Vec<Table1Row>,
}

impl Comparison {
    pub fn is_exact(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

pub fn compare(computed: &[Table1Row], reference: &[Table1Row]) -> Comparison {
    let mut c = Comparison::default();
    for r in reference {
        if computed.iter().any(|x| x.key() == r.key()) {
            c.matched.push(r.clone());
        } else {
            c.missing.push(r.clone());
        }
    }
    for x in computed {
        if !reference.iter().any(|r| r.key() == x.key()) {
            c.unexpected.push(x.clone());
        }
    }
    c
}
