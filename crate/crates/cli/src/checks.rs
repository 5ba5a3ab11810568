//! Check results: one record per verified relation, serialized as JSON
//! lines or CSV rows with deterministic field and record order.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "le")]
    Le,
    #[serde(rename = "eq")]
    Eq,
    #[serde(rename = "iff")]
    Iff,
}

/// One verified relation between two exactly computed quantities.
///
/// `pass` always equals "the stated relation holds between lhs and rhs";
/// provenance notes (e.g. when lhs is only an upper bound) go in `witness`.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check_id: &'static str,
    /// Instance parameters; serde_json maps are BTree-backed, so keys
    /// serialize in sorted order.
    pub instance: Map<String, Value>,
    pub lhs: String,
    pub rhs: String,
    pub relation: Relation,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn le(
        check_id: &'static str,
        instance: Map<String, Value>,
        lhs: impl Into<BigInt>,
        rhs: impl Into<BigInt>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        CheckResult {
            check_id,
            instance,
            pass: lhs <= rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            relation: Relation::Le,
            witness: None,
        }
    }

    pub fn eq(
        check_id: &'static str,
        instance: Map<String, Value>,
        lhs: impl Into<BigInt>,
        rhs: impl Into<BigInt>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        CheckResult {
            check_id,
            instance,
            pass: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            relation: Relation::Eq,
            witness: None,
        }
    }

    pub fn iff(
        check_id: &'static str,
        instance: Map<String, Value>,
        left: bool,
        right: bool,
    ) -> Self {
        CheckResult {
            check_id,
            instance,
            pass: left == right,
            lhs: u8::from(left).to_string(),
            rhs: u8::from(right).to_string(),
            relation: Relation::Iff,
            witness: None,
        }
    }

    /// lhs < rhs over integers, encoded as lhs ≤ rhs − 1 so that `pass`
    /// still matches the stored relation; callers should say so in the
    /// witness.
    pub fn strict_lt(
        check_id: &'static str,
        instance: Map<String, Value>,
        lhs: impl Into<BigInt>,
        rhs: impl Into<BigInt>,
    ) -> Self {
        Self::le(check_id, instance, lhs, rhs.into() - 1)
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    /// CSV row matching [`csv_header`]; instance and witness are JSON
    /// strings with doubled quotes.
    pub fn to_csv_row(&self) -> String {
        let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
        let relation = match self.relation {
            Relation::Le => "le",
            Relation::Eq => "eq",
            Relation::Iff => "iff",
        };
        format!(
            "{},{},{},{},{},{},{}",
            self.check_id,
            quote(&Value::Object(self.instance.clone()).to_string()),
            self.lhs,
            self.rhs,
            relation,
            self.pass,
            quote(self.witness.as_deref().unwrap_or("")),
        )
    }
}

pub fn csv_header() -> &'static str {
    "check_id,instance,lhs,rhs,relation,pass,witness"
}

/// Builds an instance map from key/value pairs.
pub fn inst(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// Stable-sorts by check id, preserving each suite's natural instance
/// order, so reports are byte-identical across runs and worker counts.
pub fn sort_for_output(results: &mut [CheckResult]) {
    results.sort_by_key(|r| r.check_id);
}
