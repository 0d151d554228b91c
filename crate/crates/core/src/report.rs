//! JSON report shared by every CLI command and by batch experiments.
//! Vertex ids are 1-indexed, as in graph files; edge weights are exact
//! fraction strings such as `"1/2"`.

use serde::{Deserialize, Serialize};

use crate::deficiency::DeficiencyWitness;
use crate::factor::FractionalAssignment;
use crate::funcs::ScenarioParams;
use crate::graph::Graph;

/// JSON Schema for [`CommandReport`].
pub const SCHEMA: &str = include_str!("report.schema.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessReport {
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    #[serde(rename = "T")]
    pub t: Vec<usize>,
    #[serde(rename = "U")]
    pub u: Vec<usize>,
    #[serde(rename = "H")]
    pub h: Vec<[usize; 2]>,
    pub slack: i64,
}

impl From<&DeficiencyWitness> for WitnessReport {
    fn from(w: &DeficiencyWitness) -> Self {
        let one = |v: &[usize]| v.iter().map(|x| x + 1).collect();
        WitnessReport {
            s: one(&w.s),
            t: one(&w.t),
            u: one(&w.u),
            h: w.h.iter().map(|&(x, y)| [x + 1, y + 1]).collect(),
            slack: w.slack,
        }
    }
}

impl WitnessReport {
    pub fn to_witness(&self) -> DeficiencyWitness {
        let zero = |v: &[usize]| v.iter().map(|x| x.saturating_sub(1)).collect();
        DeficiencyWitness {
            s: zero(&self.s),
            t: zero(&self.t),
            u: zero(&self.u),
            h: self.h.iter().map(|&[x, y]| (x.saturating_sub(1), y.saturating_sub(1))).collect(),
            slack: self.slack,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssignmentEntry {
    pub edge: [usize; 2],
    pub value: String,
}

pub fn assignment_entries(g: &Graph, h: &FractionalAssignment) -> Vec<AssignmentEntry> {
    g.edges()
        .iter()
        .zip(h.values())
        .map(|(&(u, v), x)| AssignmentEntry { edge: [u + 1, v + 1], value: x.to_string() })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictLabel {
    Holds,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommandReport {
    pub command: String,
    pub params: ScenarioParams,
    pub verdict: VerdictLabel,
    pub witness: Option<WitnessReport>,
    pub assignment: Option<Vec<AssignmentEntry>>,
    /// Command-specific payload: counterexamples, clause breakdowns,
    /// experiment reports.
    pub details: serde_json::Value,
    pub timing: Timing,
}

impl CommandReport {
    /// The report without its timing, for byte-level comparisons.
    pub fn without_timing(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("timing");
        }
        v
    }
}
