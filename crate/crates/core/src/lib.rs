//! Exact decision procedures for fractional `(g,f)`-factors and their
//! deleted, critical-deleted and ID-deleted variants, together with the
//! degree-condition predicates and extremal constructions that exercise them.

pub mod deficiency;
pub mod error;
pub mod experiments;
pub mod extremal;
pub mod factor;
pub mod flow;
pub mod funcs;
pub mod graph;
pub mod io;
pub mod limits;
pub mod properties;
pub mod report;
pub mod sets;
pub mod theorems;

pub use deficiency::{check_lemma1, check_lemma4, inner_max, recompute_slack, slack, DeficiencyWitness, Verdict};
pub use error::{Error, Result};
pub use factor::{factor_defect_witness, has_fractional_factor, verify_assignment, FractionalAssignment, Half};
pub use funcs::{ScenarioParams, VertexFuncs};
pub use graph::{DegreeStats, Edge, Graph, Sigma2};
pub use limits::Limits;
