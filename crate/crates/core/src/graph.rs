//! Simple undirected graphs with dense `0..n` vertex ids.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// An undirected edge stored with `u < v`.
pub type Edge = (usize, usize);

/// Immutable simple graph.
///
/// Edges are kept in canonical lexicographic order, so an edge index is a
/// stable handle for edge-indexed data such as fractional assignments.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    order: usize,
    edges: Vec<Edge>,
    neighbors: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    order: usize,
    edges: Vec<Edge>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = crate::Error;
    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::from_edges(raw.order, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { order: g.order, edges: g.edges }
    }
}

/// Minimum degree sum over nonadjacent pairs; `Infinite` when there is no such pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sigma2 {
    Finite(usize),
    Infinite,
}

impl Sigma2 {
    pub fn finite(self) -> Option<usize> {
        match self {
            Sigma2::Finite(v) => Some(v),
            Sigma2::Infinite => None,
        }
    }
}

impl fmt::Display for Sigma2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sigma2::Finite(v) => write!(f, "{v}"),
            Sigma2::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub sigma2: Sigma2,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range ids.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut neighbors = vec![Vec::new(); order];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= order || v >= order {
                return invalid(format!("edge ({u},{v}) out of range for order {order}"));
            }
            if u == v {
                return invalid(format!("self-loop at vertex {u}"));
            }
            list.push((u.min(v), u.max(v)));
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return invalid(format!("duplicate edge ({},{})", w[0].0, w[0].1));
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        Ok(Graph { order, edges: list, neighbors })
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return invalid("complete graph needs at least one vertex");
        }
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return invalid("empty graph needs at least one vertex");
        }
        Self::from_edges(n, std::iter::empty())
    }

    /// Joins the parts pairwise: disjoint union plus every edge between
    /// vertices of distinct parts. Part `k` is relabelled to a contiguous
    /// block following parts `0..k`.
    pub fn join(parts: &[Graph]) -> Result<Self> {
        if parts.is_empty() {
            return invalid("join of an empty list");
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut order = 0;
        for p in parts {
            offsets.push(order);
            order += p.order;
        }
        let mut edges = Vec::new();
        for (p, &off) in parts.iter().zip(&offsets) {
            edges.extend(p.edges.iter().map(|&(u, v)| (u + off, v + off)));
        }
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                for u in 0..parts[i].order {
                    for v in 0..parts[j].order {
                        edges.push((u + offsets[i], v + offsets[j]));
                    }
                }
            }
        }
        Self::from_edges(order, edges)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.order * self.order.saturating_sub(1) / 2
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees = self.degrees();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let sigma2 = self
            .nonadjacent_pairs()
            .map(|(u, v)| degrees[u] + degrees[v])
            .min()
            .map_or(Sigma2::Infinite, Sigma2::Finite);
        DegreeStats { min_degree, sigma2 }
    }

    /// Minimum over nonadjacent pairs of the larger endpoint degree, `None`
    /// for complete graphs.
    pub fn min_max_pair_degree(&self) -> Option<usize> {
        self.nonadjacent_pairs().map(|(u, v)| self.degree(u).max(self.degree(v))).min()
    }

    pub fn nonadjacent_pairs(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.order)
            .flat_map(move |u| (u + 1..self.order).map(move |v| (u, v)))
            .filter(move |&(u, v)| !self.has_edge(u, v))
    }

    pub fn is_independent_set(&self, set: &[usize]) -> Result<bool> {
        let mut member = vec![false; self.order];
        for &v in set {
            if v >= self.order {
                return invalid(format!("vertex {v} out of range for order {}", self.order));
            }
            member[v] = true;
        }
        Ok(set.iter().all(|&v| self.neighbors[v].iter().all(|&w| !member[w])))
    }

    /// Deletes a vertex set. Survivors keep their relative order; the second
    /// component maps new ids to old ids.
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.order];
        for &v in removed {
            gone[v] = true;
        }
        let kept: Vec<usize> = (0..self.order).filter(|&v| !gone[v]).collect();
        let mut new_id = vec![usize::MAX; self.order];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<Edge> =
            self.edges.iter().filter(|&&(u, v)| !gone[u] && !gone[v]).map(|&(u, v)| (new_id[u], new_id[v])).collect();
        let g = Graph::from_edges(kept.len(), edges).expect("induced subgraph is simple");
        (g, kept)
    }

    /// Deletes the edges at the given indices of [`Graph::edges`].
    pub fn remove_edges(&self, indices: &[usize]) -> Graph {
        let mut gone = vec![false; self.size()];
        for &i in indices {
            gone[i] = true;
        }
        let edges = self.edges.iter().zip(&gone).filter(|(_, &g)| !g).map(|(&e, _)| e);
        Graph::from_edges(self.order, edges).expect("subgraph is simple")
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::from_edges(self.order, self.edges.iter().copied().chain([(u, v)]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges)
    }
}
