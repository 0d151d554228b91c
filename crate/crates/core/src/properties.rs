//! Definition-level checkers: delete the vertices and edges, then ask the
//! flow solver. Independent of the deficiency criterion and used as its oracle.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::deficiency::DeficiencyWitness;
use crate::error::{invalid, Result};
use crate::factor::{factor_defect_witness_with, has_fractional_factor};
use crate::funcs::VertexFuncs;
use crate::graph::{Edge, Graph};
use crate::limits::Limits;

/// A deletion after which no fractional factor remains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub removed_vertices: Vec<usize>,
    pub removed_edges: Vec<Edge>,
    /// Deficiency witness of the residual graph lifted back to the labels of
    /// the original graph, with `U` = the removed vertices and `H` = the
    /// removed edges. Absent when the residual graph exceeds the size cap.
    pub witness: Option<DeficiencyWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl PropertyOutcome {
    fn from_failure(failure: Option<Counterexample>) -> Self {
        PropertyOutcome { holds: failure.is_none(), counterexample: failure }
    }
}

fn feasible(g: &Graph, vf: &VertexFuncs) -> bool {
    has_fractional_factor(g, vf).expect("vertex functions match the graph").is_some()
}

/// First (lexicographic) set of `min(m, |E|)` edge indices whose deletion
/// destroys every fractional factor.
fn failing_edge_set(g: &Graph, vf: &VertexFuncs, m: usize) -> Option<Vec<usize>> {
    let k = m.min(g.size());
    if k == 0 {
        return (!feasible(g, vf)).then(Vec::new);
    }
    let subsets: Vec<Vec<usize>> = (0..g.size()).combinations(k).collect();
    subsets.into_par_iter().find_first(|idx| !feasible(&g.remove_edges(idx), vf))
}

fn counterexample(
    g: &Graph,
    vf: &VertexFuncs,
    removed_vertices: Vec<usize>,
    edge_idx_in_residual: &[usize],
    limits: &Limits,
) -> Counterexample {
    let (rest, kept) = g.remove_vertices(&removed_vertices);
    let rest_vf = vf.restrict(&kept);
    let removed_edges: Vec<Edge> = edge_idx_in_residual
        .iter()
        .map(|&i| {
            let (x, y) = rest.edges()[i];
            (kept[x], kept[y])
        })
        .collect();
    let residual = rest.remove_edges(edge_idx_in_residual);
    let witness = factor_defect_witness_with(&residual, &rest_vf, limits).ok().map(|w| {
        let mut s: Vec<usize> = w.s.iter().map(|&x| kept[x]).chain(removed_vertices.iter().copied()).collect();
        s.sort_unstable();
        DeficiencyWitness {
            s,
            t: w.t.iter().map(|&x| kept[x]).collect(),
            u: removed_vertices.clone(),
            h: removed_edges.clone(),
            slack: w.slack,
        }
    });
    Counterexample { removed_vertices, removed_edges, witness }
}

/// Fractional `(g,f,m)`-deleted: every deletion of `min(m, |E|)` edges leaves
/// a fractional factor.
pub fn is_deleted(g: &Graph, vf: &VertexFuncs, m: usize) -> Result<PropertyOutcome> {
    is_deleted_with(g, vf, m, &Limits::default())
}

pub fn is_deleted_with(g: &Graph, vf: &VertexFuncs, m: usize, limits: &Limits) -> Result<PropertyOutcome> {
    vf.ensure_order(g.order())?;
    let failure = failing_edge_set(g, vf, m).map(|idx| counterexample(g, vf, Vec::new(), &idx, limits));
    Ok(PropertyOutcome::from_failure(failure))
}

/// Fractional `(g,f,n',m)`-critical deleted: `G − W` is `(g,f,m)`-deleted
/// for every `n'`-subset `W`.
pub fn is_critical_deleted(g: &Graph, vf: &VertexFuncs, nprime: usize, m: usize) -> Result<PropertyOutcome> {
    is_critical_deleted_with(g, vf, nprime, m, &Limits::default())
}

pub fn is_critical_deleted_with(
    g: &Graph,
    vf: &VertexFuncs,
    nprime: usize,
    m: usize,
    limits: &Limits,
) -> Result<PropertyOutcome> {
    vf.ensure_order(g.order())?;
    if nprime > g.order() {
        return invalid(format!("n' = {nprime} exceeds the order {}", g.order()));
    }
    let choices: Vec<Vec<usize>> = (0..g.order()).combinations(nprime).collect();
    let failure = choices.into_par_iter().find_map_first(|w| {
        let (rest, kept) = g.remove_vertices(&w);
        let idx = failing_edge_set(&rest, &vf.restrict(&kept), m)?;
        Some(counterexample(g, vf, w, &idx, limits))
    });
    Ok(PropertyOutcome::from_failure(failure))
}

/// All independent sets, including the empty one, in lexicographic order.
pub fn independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, current: &mut Vec<usize>, blocked: &mut [u32], from: usize, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for v in from..g.order() {
            if blocked[v] > 0 {
                continue;
            }
            current.push(v);
            g.neighbors(v).iter().for_each(|&w| blocked[w] += 1);
            extend(g, current, blocked, v + 1, out);
            g.neighbors(v).iter().for_each(|&w| blocked[w] -= 1);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(g, &mut Vec::new(), &mut vec![0; g.order()], 0, &mut out);
    out
}

/// Fractional ID-`(g,f,m)`-deleted: `G − I` is `(g,f,m)`-deleted for every
/// independent set `I`, the empty set included.
pub fn is_id_deleted(g: &Graph, vf: &VertexFuncs, m: usize) -> Result<PropertyOutcome> {
    is_id_deleted_with(g, vf, m, &Limits::default())
}

pub fn is_id_deleted_with(g: &Graph, vf: &VertexFuncs, m: usize, limits: &Limits) -> Result<PropertyOutcome> {
    vf.ensure_order(g.order())?;
    let failure = independent_sets(g).into_par_iter().find_map_first(|i| {
        let (rest, kept) = g.remove_vertices(&i);
        let idx = failing_edge_set(&rest, &vf.restrict(&kept), m)?;
        Some(counterexample(g, vf, i, &idx, limits))
    });
    Ok(PropertyOutcome::from_failure(failure))
}
