//! The deficiency criterion for critical-deleted graphs.
//!
//! A graph is fractional `(g,f,n',m)`-critical deleted iff every disjoint
//! pair `(S, T)` with `|S| ≥ n'` has nonnegative slack
//!
//! ```text
//! f(S) − g(T) + d_{G−S}(T) − max_{U ⊆ S, |U| = n', H ⊆ E(G−U), |H| = m} [ f(U) + Σ_{x∈T} d_H(x) − e_H(T,S) ]
//! ```
//!
//! With `n' = m = 0` this is the classical fractional factor criterion.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::funcs::VertexFuncs;
use crate::graph::{Edge, Graph};
use crate::limits::Limits;
use crate::sets::{k_subsets, lex_cmp, mask_of, members};

/// A pair `(S, T)` together with a maximizing `(U, H)` and the resulting slack.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyWitness {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub u: Vec<usize>,
    pub h: Vec<Edge>,
    pub slack: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Holds,
    Violated(DeficiencyWitness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&DeficiencyWitness> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }
}

/// Value of the inner maximum and one `(U, H)` attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerMax {
    pub value: i64,
    pub u: Vec<usize>,
    pub h: Vec<Edge>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    S,
    T,
    Rest,
}

fn sides(n: usize, s: &[usize], t: &[usize]) -> Result<Vec<Side>> {
    let mut side = vec![Side::Rest; n];
    for (set, tag) in [(s, Side::S), (t, Side::T)] {
        for &v in set {
            if v >= n {
                return invalid(format!("vertex {v} out of range for order {n}"));
            }
            if side[v] != Side::Rest {
                return invalid(format!("vertex {v} listed twice across S and T"));
            }
            side[v] = tag;
        }
    }
    Ok(side)
}

/// Contribution of a single edge of `H` to `Σ_{x∈T} d_H(x) − e_H(T,S)`.
fn edge_weight(side: &[Side], (u, v): Edge) -> i64 {
    match (side[u], side[v]) {
        (Side::T, Side::T) => 2,
        (Side::T, Side::Rest) | (Side::Rest, Side::T) => 1,
        _ => 0,
    }
}

/// Exact inner maximum for a fixed pair `(S, T)`.
///
/// Every `n'`-subset `U` of `S` is tried. For a fixed `U` the best `H` is the
/// `m` heaviest edges of `G − U`, where a `T–T` edge weighs 2, an edge from
/// `T` to a vertex outside `S ∪ T` weighs 1 and every other edge 0. Subsets
/// `U` leaving fewer than `m` edges admit no `H` and are skipped; if none
/// remains the call fails with [`Error::InsufficientEdges`].
pub fn inner_max(g: &Graph, vf: &VertexFuncs, s: &[usize], t: &[usize], nprime: usize, m: usize) -> Result<InnerMax> {
    vf.ensure_order(g.order())?;
    let side = sides(g.order(), s, t)?;
    if s.len() < nprime {
        return invalid(format!("|S| = {} is smaller than n' = {nprime}", s.len()));
    }
    let mut sorted_s = s.to_vec();
    sorted_s.sort_unstable();

    let mut best: Option<InnerMax> = None;
    let mut most_available = 0;
    let mut in_u = vec![false; g.order()];
    for u in itertools::Itertools::combinations(sorted_s.iter().copied(), nprime) {
        u.iter().for_each(|&x| in_u[x] = true);
        let mut available: Vec<(i64, Edge)> =
            g.edges().iter().filter(|&&(x, y)| !in_u[x] && !in_u[y]).map(|&e| (edge_weight(&side, e), e)).collect();
        u.iter().for_each(|&x| in_u[x] = false);
        most_available = most_available.max(available.len());
        if available.len() < m {
            continue;
        }
        // stable: equal weights keep canonical edge order
        available.sort_by_key(|&(w, _)| std::cmp::Reverse(w));
        let value = vf.f_sum(&u) + available[..m].iter().map(|(w, _)| w).sum::<i64>();
        if best.as_ref().is_none_or(|b| value > b.value) {
            let mut h: Vec<Edge> = available[..m].iter().map(|&(_, e)| e).collect();
            h.sort_unstable();
            best = Some(InnerMax { value, u, h });
        }
    }
    best.ok_or(Error::InsufficientEdges { needed: m, available: most_available })
}

/// `f(S) − g(T) + d_{G−S}(T)` minus the inner maximum.
pub fn slack(g: &Graph, vf: &VertexFuncs, s: &[usize], t: &[usize], nprime: usize, m: usize) -> Result<i64> {
    Ok(evaluate(g, vf, s, t, nprime, m)?.slack)
}

/// Like [`slack`] but returns the full witness.
pub fn evaluate(
    g: &Graph,
    vf: &VertexFuncs,
    s: &[usize],
    t: &[usize],
    nprime: usize,
    m: usize,
) -> Result<DeficiencyWitness> {
    let inner = inner_max(g, vf, s, t, nprime, m)?;
    let slack = outer_value(g, vf, s, t) - inner.value;
    let mut s = s.to_vec();
    let mut t = t.to_vec();
    s.sort_unstable();
    t.sort_unstable();
    Ok(DeficiencyWitness { s, t, u: inner.u, h: inner.h, slack })
}

fn outer_value(g: &Graph, vf: &VertexFuncs, s: &[usize], t: &[usize]) -> i64 {
    let mut in_s = vec![false; g.order()];
    s.iter().for_each(|&x| in_s[x] = true);
    let d: i64 = t.iter().map(|&x| g.neighbors(x).iter().filter(|&&y| !in_s[y]).count() as i64).sum();
    vf.f_sum(s) - vf.g_sum(t) + d
}

/// Recomputes the slack of a witness term by term from its components,
/// checking `S ∩ T = ∅`, `U ⊆ S` and `H ⊆ E(G − U)`.
pub fn recompute_slack(g: &Graph, vf: &VertexFuncs, w: &DeficiencyWitness) -> Result<i64> {
    vf.ensure_order(g.order())?;
    let side = sides(g.order(), &w.s, &w.t)?;
    let mut in_u = vec![false; g.order()];
    for &x in &w.u {
        if x >= g.order() || side[x] != Side::S || in_u[x] {
            return invalid(format!("U member {x} is not a distinct member of S"));
        }
        in_u[x] = true;
    }
    let mut seen = std::collections::BTreeSet::new();
    for &(x, y) in &w.h {
        if g.edge_index(x, y).is_none() || in_u[x] || in_u[y] || !seen.insert((x.min(y), x.max(y))) {
            return invalid(format!("H edge ({x},{y}) is not a distinct edge of G - U"));
        }
    }
    let d_h_t: i64 = w.h.iter().map(|&(x, y)| i64::from(side[x] == Side::T) + i64::from(side[y] == Side::T)).sum();
    let e_h_ts =
        w.h.iter().filter(|&&(x, y)| matches!((side[x], side[y]), (Side::T, Side::S) | (Side::S, Side::T))).count()
            as i64;
    Ok(outer_value(g, vf, &w.s, &w.t) - (vf.f_sum(&w.u) + d_h_t - e_h_ts))
}

/// Minimum of `|E(G − W)|` over all `n'`-subsets `W`.
fn min_edges_after_deletion(g: &Graph, nprime: usize) -> usize {
    let full = if g.order() == 32 { u32::MAX } else { (1u32 << g.order()) - 1 };
    k_subsets(full, nprime)
        .map(|w| g.edges().iter().filter(|&&(x, y)| w >> x & 1 == 0 && w >> y & 1 == 0).count())
        .min()
        .unwrap_or(0)
}

/// Below this order the search is cheaper than spawning parallel work.
const SERIAL_ORDER: usize = 9;

/// Searches every disjoint `(S, T)` with `|S| ≥ n'` for negative slack.
///
/// Returns the minimum-slack witness, ties broken by lexicographically
/// smallest `S` and then `T`; the result does not depend on the thread count.
/// Fails with [`Error::InsufficientEdges`] when deleting some `n'` vertices
/// leaves fewer than `m` edges, since the criterion then quantifies over an
/// empty family of `H`.
pub fn check_lemma1(g: &Graph, vf: &VertexFuncs, nprime: usize, m: usize) -> Result<Verdict> {
    check_lemma1_with(g, vf, nprime, m, &Limits::default())
}

pub fn check_lemma1_with(g: &Graph, vf: &VertexFuncs, nprime: usize, m: usize, limits: &Limits) -> Result<Verdict> {
    vf.ensure_order(g.order())?;
    limits.check(g.order())?;
    let n = g.order();
    if nprime > n {
        return invalid(format!("n' = {nprime} exceeds the order {n}"));
    }
    let available = min_edges_after_deletion(g, nprime);
    if available < m {
        return Err(Error::InsufficientEdges { needed: m, available });
    }

    let search = Search::new(g, vf, nprime, m);
    let candidate = |s: u32| {
        (s.count_ones() as usize >= nprime).then(|| search.best_t(s).map(|(slack, t)| (slack, s, t))).flatten()
    };
    let best = if n <= SERIAL_ORDER {
        (0..1u32 << n).filter_map(candidate).min_by(|a, b| cmp_candidates(*a, *b))
    } else {
        (0..1u32 << n).into_par_iter().filter_map(candidate).min_by(|a, b| cmp_candidates(*a, *b))
    };

    match best {
        Some((slack, s, t)) if slack < 0 => {
            let w = evaluate(g, vf, &members(s), &members(t), nprime, m)?;
            if w.slack != slack {
                return Err(Error::InvalidState(format!(
                    "fast slack {slack} disagrees with exact slack {} at S={:?}, T={:?}",
                    w.slack, w.s, w.t
                )));
            }
            Ok(Verdict::Violated(w))
        }
        _ => Ok(Verdict::Holds),
    }
}

/// [`check_lemma1`] with `g ≡ a` and `f ≡ b`.
///
/// The constant in the inner maximum is `f(U) = b·n'`, which coincides with
/// `(a + Δ)·n'` exactly when `b = a + Δ`.
pub fn check_lemma4(g: &Graph, a: u32, b: u32, nprime: usize, m: usize) -> Result<Verdict> {
    check_lemma4_with(g, a, b, nprime, m, &Limits::default())
}

pub fn check_lemma4_with(g: &Graph, a: u32, b: u32, nprime: usize, m: usize, limits: &Limits) -> Result<Verdict> {
    if b < a {
        return invalid(format!("b = {b} is smaller than a = {a}"));
    }
    let vf = VertexFuncs::constant(g.order(), a, b)?;
    check_lemma1_with(g, &vf, nprime, m, limits)
}

fn cmp_candidates(a: (i64, u32, u32), b: (i64, u32, u32)) -> Ordering {
    a.0.cmp(&b.0).then(lex_cmp(a.1, b.1)).then(lex_cmp(a.2, b.2))
}

/// Bitmask evaluation of the slack once every `n'`-deletion is known to leave
/// at least `m` edges. Edges at `U ⊆ S` all weigh 0, so the maximizing `H`
/// no longer depends on `U` and the best `U` is the `n'` largest `f` in `S`.
struct Search<'a> {
    n: usize,
    adj: Vec<u32>,
    vf: &'a VertexFuncs,
    nprime: usize,
    m: i64,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, vf: &'a VertexFuncs, nprime: usize, m: usize) -> Self {
        let adj = (0..g.order()).map(|v| mask_of(g.neighbors(v))).collect();
        Search { n: g.order(), adj, vf, nprime, m: m as i64 }
    }

    /// Minimum slack over `T` for a fixed `S`, with the lexicographically
    /// smallest `T` on ties.
    fn best_t(&self, s: u32) -> Option<(i64, u32)> {
        let full = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let comp = full & !s;

        let mut f_in_s = [0i64; 32];
        let mut k = 0;
        let mut bits = s;
        while bits != 0 {
            f_in_s[k] = i64::from(self.vf.f(bits.trailing_zeros() as usize));
            bits &= bits - 1;
            k += 1;
        }
        f_in_s[..k].sort_unstable_by(|a, b| b.cmp(a));
        let base: i64 = f_in_s[..k].iter().skip(self.nprime).sum();

        let mut contrib = [0i64; 32];
        let mut bits = comp;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            contrib[x] = i64::from((self.adj[x] & comp).count_ones()) - i64::from(self.vf.g(x));
        }

        let mut best: Option<(i64, u32)> = None;
        let mut t = comp;
        loop {
            let mut value = base;
            let mut inside = 0i64;
            let mut outward = 0i64;
            let rest = comp & !t;
            let mut bits = t;
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                value += contrib[x];
                if self.m > 0 {
                    inside += i64::from((self.adj[x] & t).count_ones());
                    outward += i64::from((self.adj[x] & rest).count_ones());
                }
            }
            if self.m > 0 {
                let heavy = (inside / 2).min(self.m);
                value -= 2 * heavy + outward.min(self.m - heavy);
            }
            let better = match best {
                None => true,
                Some((v, bt)) => value < v || (value == v && lex_cmp(t, bt) == Ordering::Less),
            };
            if better {
                best = Some((value, t));
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & comp;
        }
        best
    }
}
