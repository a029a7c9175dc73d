//! JSON report schema for the verification suites.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Report {
    pub version: u32,
    pub suite: String,
    pub params: serde_json::Value,
    pub cases: Vec<Case>,
    pub pass: bool,
    /// graph6 strings reproducing each failure standalone via `solve`.
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Case {
    pub id: String,
    pub graph6: String,
    pub expected: serde_json::Value,
    pub observed: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<usize>>>,
    /// How each side of the value was certified (exact solve, bound, ...).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    pub runtime_ms: u128,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: &str, params: serde_json::Value, cases: Vec<Case>) -> Report {
        let counterexamples: Vec<String> = cases
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.graph6.clone())
            .collect();
        Report {
            version: SCHEMA_VERSION,
            suite: suite.to_string(),
            params,
            pass: counterexamples.is_empty(),
            counterexamples,
            cases,
        }
    }
}
