#![allow(dead_code)]

use factorlab::{Graph, VertexFuncs};
use proptest::prelude::*;

/// Graph on `lo..=hi` vertices with a random density, so both sparse and
/// nearly complete graphs show up.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0u8..=10).prop_flat_map(|(n, density)| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        prop::collection::vec(0u8..10, pairs.len()).prop_map(move |coins| {
            let edges = pairs.iter().zip(coins).filter(|(_, c)| *c < density).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Graph with arbitrary `0 ≤ g ≤ f ≤ max`.
pub fn instance(lo: usize, hi: usize, max: u32) -> impl Strategy<Value = (Graph, VertexFuncs)> {
    graph(lo, hi).prop_flat_map(move |g| {
        let n = g.order();
        (Just(g), prop::collection::vec((0..=max, 0..=max), n)).prop_map(|(g, pairs)| {
            let (lo, hi): (Vec<u32>, Vec<u32>) = pairs.into_iter().map(|(x, y)| (x.min(y), x.max(y))).unzip();
            (g, VertexFuncs::new(lo, hi).unwrap())
        })
    })
}

/// Subsets of `0..n` as sorted vectors.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

/// `f(U) + Σ_{x∈T} d_H(x) − e_H(T, S)` straight from the definition.
pub fn inner_term(g: &Graph, vf: &VertexFuncs, s: &[usize], t: &[usize], u: &[usize], h: &[(usize, usize)]) -> i64 {
    let f_u: i64 = u.iter().map(|&x| i64::from(vf.f(x))).sum();
    let d_h: i64 = h.iter().map(|&(x, y)| i64::from(t.contains(&x)) + i64::from(t.contains(&y))).sum();
    let e_ts =
        h.iter().filter(|&&(x, y)| (t.contains(&x) && s.contains(&y)) || (t.contains(&y) && s.contains(&x))).count()
            as i64;
    let _ = g;
    f_u + d_h - e_ts
}

/// `f(S) − g(T) + d_{G−S}(T)`.
pub fn outer_term(g: &Graph, vf: &VertexFuncs, s: &[usize], t: &[usize]) -> i64 {
    let f_s: i64 = s.iter().map(|&x| i64::from(vf.f(x))).sum();
    let g_t: i64 = t.iter().map(|&x| i64::from(vf.g(x))).sum();
    let d: i64 = t.iter().map(|&x| g.neighbors(x).iter().filter(|y| !s.contains(y)).count() as i64).sum();
    f_s - g_t + d
}
