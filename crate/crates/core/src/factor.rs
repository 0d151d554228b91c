//! Fractional (g,f)-factor existence via a doubled bipartite circulation.
//!
//! Every edge `uv` becomes the two unit arcs `u' → v''` and `v' → u''`. The
//! source feeds each left copy and each right copy drains into the sink, both
//! with bounds `[g(x), f(x)]`. An integral circulation exists iff a fractional
//! factor does, and halving the two arc flows of an edge gives `h(uv)`, so the
//! witness is automatically half-integral.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::deficiency::DeficiencyWitness;
use crate::error::{invalid, Error, Result};
use crate::flow::Circulation;
use crate::funcs::VertexFuncs;
use crate::graph::Graph;
use crate::limits::Limits;

/// A nonnegative multiple of one half, stored as its double.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Half(pub u32);

impl Half {
    pub const ZERO: Half = Half(0);
    pub const HALF: Half = Half(1);
    pub const ONE: Half = Half(2);

    pub fn doubled(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Edge weights aligned with [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalAssignment {
    values: Vec<Half>,
}

impl FractionalAssignment {
    pub fn new(values: Vec<Half>) -> Self {
        FractionalAssignment { values }
    }

    pub fn zero(edges: usize) -> Self {
        FractionalAssignment { values: vec![Half::ZERO; edges] }
    }

    pub fn values(&self) -> &[Half] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Twice the weighted degree `d^h(x)` of every vertex.
    pub fn doubled_degrees(&self, g: &Graph) -> Vec<u64> {
        let mut deg = vec![0u64; g.order()];
        for (&(u, v), h) in g.edges().iter().zip(&self.values) {
            deg[u] += u64::from(h.0);
            deg[v] += u64::from(h.0);
        }
        deg
    }

    pub fn is_half_integral_unit(&self) -> bool {
        self.values.iter().all(|h| h.0 <= 2)
    }
}

/// Decides whether `g` has a fractional `(g,f)`-factor and returns one if so.
pub fn has_fractional_factor(g: &Graph, vf: &VertexFuncs) -> Result<Option<FractionalAssignment>> {
    vf.ensure_order(g.order())?;
    let n = g.order();
    let (source, sink) = (2 * n, 2 * n + 1);
    let mut circ = Circulation::new(2 * n + 2);
    for x in 0..n {
        let (lo, hi) = (i64::from(vf.g(x)), i64::from(vf.f(x)));
        circ.add_arc(source, x, lo, hi);
        circ.add_arc(n + x, sink, lo, hi);
    }
    let pairs: Vec<(usize, usize)> =
        g.edges().iter().map(|&(u, v)| (circ.add_arc(u, n + v, 0, 1), circ.add_arc(v, n + u, 0, 1))).collect();
    let total: i64 = vf.f_values().iter().map(|&f| i64::from(f)).sum();
    circ.add_arc(sink, source, 0, total);

    let Some(flow) = circ.solve() else {
        return Ok(None);
    };
    let values = pairs.into_iter().map(|(x, y)| Half((flow[x] + flow[y]) as u32)).collect();
    Ok(Some(FractionalAssignment { values }))
}

/// Recomputes every edge bound `0 ≤ h(e) ≤ 1` and vertex bound
/// `g(x) ≤ d^h(x) ≤ f(x)`.
pub fn verify_assignment(g: &Graph, vf: &VertexFuncs, h: &FractionalAssignment) -> Result<bool> {
    vf.ensure_order(g.order())?;
    if h.len() != g.size() {
        return invalid(format!("assignment covers {} edges, graph has {}", h.len(), g.size()));
    }
    if !h.is_half_integral_unit() {
        return Ok(false);
    }
    let deg = h.doubled_degrees(g);
    Ok((0..g.order()).all(|x| {
        let d = deg[x];
        2 * u64::from(vf.g(x)) <= d && d <= 2 * u64::from(vf.f(x))
    }))
}

/// Minimum-deficiency pair `(S, T)` of the classical criterion
/// `f(S) + d_{G−S}(T) − g(T) ≥ 0` for an instance without a factor.
///
/// For a fixed `S` the best `T` is `{x ∉ S : d_{G−S}(x) < g(x)}`, so only the
/// `2^n` choices of `S` are scanned. Ties go to the smaller, then
/// lexicographically first, `S`.
pub fn factor_defect_witness(g: &Graph, vf: &VertexFuncs) -> Result<DeficiencyWitness> {
    factor_defect_witness_with(g, vf, &Limits::default())
}

pub fn factor_defect_witness_with(g: &Graph, vf: &VertexFuncs, limits: &Limits) -> Result<DeficiencyWitness> {
    vf.ensure_order(g.order())?;
    limits.check(g.order())?;
    if has_fractional_factor(g, vf)?.is_some() {
        return Err(Error::InvalidState("instance has a fractional factor".into()));
    }
    let n = g.order();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let mut best: Option<(i64, u32, u32)> = None;
    for s in crate::sets::masks_by_size(n) {
        let mut slack: i64 = (0..n).filter(|x| s >> x & 1 == 1).map(|x| i64::from(vf.f(x))).sum();
        let mut t = 0u32;
        for x in (0..n).filter(|x| s >> x & 1 == 0) {
            let d = i64::from((adj[x] & !s).count_ones());
            let gx = i64::from(vf.g(x));
            if d < gx {
                t |= 1 << x;
                slack += d - gx;
            }
        }
        if best.is_none_or(|(b, _, _)| slack < b) {
            best = Some((slack, s, t));
        }
    }
    let (slack, s, t) = best.expect("at least the empty set is scanned");
    debug_assert!(slack < 0);
    Ok(DeficiencyWitness {
        s: crate::sets::members(s),
        t: crate::sets::members(t),
        u: Vec::new(),
        h: Vec::new(),
        slack,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deficiency::recompute_slack;

    fn star() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn star_has_no_perfect_fractional_factor() {
        let vf = VertexFuncs::constant(4, 1, 1).unwrap();
        assert!(has_fractional_factor(&star(), &vf).unwrap().is_none());
        let w = factor_defect_witness(&star(), &vf).unwrap();
        assert_eq!((w.s.as_slice(), w.t.as_slice(), w.slack), (&[0][..], &[1, 2, 3][..], -2));
        assert_eq!(recompute_slack(&star(), &vf, &w).unwrap(), -2);
    }

    #[test]
    fn cycle_gets_all_halves() {
        let vf = VertexFuncs::constant(4, 1, 1).unwrap();
        let h = has_fractional_factor(&c4(), &vf).unwrap().unwrap();
        assert!(verify_assignment(&c4(), &vf, &h).unwrap());
        // d^h = 1 everywhere on C4 forces h(e) + h(e') = 1 around the cycle
        assert!(h.doubled_degrees(&c4()).iter().all(|&d| d == 2));
    }

    #[test]
    fn complete_graph_regular_factor() {
        let k4 = Graph::complete(4).unwrap();
        let vf = VertexFuncs::constant(4, 3, 3).unwrap();
        let h = has_fractional_factor(&k4, &vf).unwrap().unwrap();
        assert!(h.values().iter().all(|&v| v == Half::ONE));
    }

    #[test]
    fn zero_lower_bound_is_trivially_feasible() {
        let k2 = Graph::complete(2).unwrap();
        let vf = VertexFuncs::constant(2, 0, 1).unwrap();
        assert!(has_fractional_factor(&k2, &vf).unwrap().is_some());
    }

    #[test]
    fn verify_examples() {
        let vf = VertexFuncs::constant(4, 1, 1).unwrap();
        let halves = FractionalAssignment::new(vec![Half::HALF; 4]);
        let ones = FractionalAssignment::new(vec![Half::ONE; 4]);
        assert!(verify_assignment(&c4(), &vf, &halves).unwrap());
        assert!(!verify_assignment(&c4(), &vf, &ones).unwrap());
        let k2 = Graph::complete(2).unwrap();
        let vf2 = VertexFuncs::constant(2, 1, 1).unwrap();
        assert!(verify_assignment(&k2, &vf2, &FractionalAssignment::new(vec![Half::ONE])).unwrap());
        assert!(verify_assignment(&k2, &vf2, &FractionalAssignment::new(vec![])).is_err());
        assert!(!verify_assignment(&k2, &vf2, &FractionalAssignment::new(vec![Half(3)])).unwrap());
    }

    #[test]
    fn defect_witness_picks_minimum_slack() {
        let g = Graph::join(&[Graph::complete(2).unwrap(), Graph::empty(4).unwrap()]).unwrap();
        let vf = VertexFuncs::constant(6, 2, 3).unwrap();
        let w = factor_defect_witness(&g, &vf).unwrap();
        assert_eq!(w.s, vec![0, 1]);
        assert_eq!(w.t, vec![2, 3, 4, 5]);
        assert_eq!(w.slack, -2);
    }

    #[test]
    fn isolated_pair() {
        let g = Graph::empty(2).unwrap();
        let vf = VertexFuncs::constant(2, 1, 1).unwrap();
        let w = factor_defect_witness(&g, &vf).unwrap();
        assert_eq!((w.s.len(), w.t.clone(), w.slack), (0, vec![0, 1], -2));
    }

    #[test]
    fn defect_witness_on_feasible_instance_is_invalid_state() {
        let vf = VertexFuncs::constant(4, 1, 1).unwrap();
        assert!(matches!(factor_defect_witness(&c4(), &vf), Err(Error::InvalidState(_))));
    }

    #[test]
    fn domain_mismatch() {
        let vf = VertexFuncs::constant(3, 1, 1).unwrap();
        assert!(has_fractional_factor(&c4(), &vf).is_err());
    }

    #[test]
    fn half_display() {
        assert_eq!(Half::ZERO.to_string(), "0");
        assert_eq!(Half::HALF.to_string(), "1/2");
        assert_eq!(Half::ONE.to_string(), "1");
    }
}
