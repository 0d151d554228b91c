//! Degree bound functions `g`, `f` and the scenario parameters `(a, b, Δ, n', m)`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Parameters shared by every criterion, property and theorem predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ScenarioParams {
    pub a: u32,
    pub b: u32,
    pub delta: u32,
    pub nprime: u32,
    pub m: u32,
}

impl ScenarioParams {
    pub fn new(a: u32, b: u32, delta: u32, nprime: u32, m: u32) -> Self {
        ScenarioParams { a, b, delta, nprime, m }
    }

    /// The standing hypothesis of every theorem: `b − Δ ≥ a ≥ 2`.
    pub fn is_standing(&self) -> bool {
        self.a >= 2 && self.b >= self.a + self.delta
    }
}

/// Integer lower and upper degree bounds per vertex, with `g(x) ≤ f(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexFuncs {
    g: Vec<u32>,
    f: Vec<u32>,
}

impl VertexFuncs {
    pub fn new(g: Vec<u32>, f: Vec<u32>) -> Result<Self> {
        if g.len() != f.len() {
            return invalid(format!("g has {} values but f has {}", g.len(), f.len()));
        }
        if let Some(x) = (0..g.len()).find(|&x| g[x] > f[x]) {
            return invalid(format!("g({x}) = {} exceeds f({x}) = {}", g[x], f[x]));
        }
        Ok(VertexFuncs { g, f })
    }

    pub fn constant(n: usize, g: u32, f: u32) -> Result<Self> {
        Self::new(vec![g; n], vec![f; n])
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    pub fn g(&self, x: usize) -> u32 {
        self.g[x]
    }

    pub fn f(&self, x: usize) -> u32 {
        self.f[x]
    }

    pub fn g_values(&self) -> &[u32] {
        &self.g
    }

    pub fn f_values(&self) -> &[u32] {
        &self.f
    }

    /// `Some((g, f))` when both functions are constant.
    pub fn as_constant(&self) -> Option<(u32, u32)> {
        let (&g0, &f0) = (self.g.first()?, self.f.first()?);
        (self.g.iter().all(|&v| v == g0) && self.f.iter().all(|&v| v == f0)).then_some((g0, f0))
    }

    /// Checks `a ≤ g(x) ≤ f(x) − Δ ≤ b − Δ` at every vertex.
    pub fn check_band(&self, a: u32, b: u32, delta: u32) -> Result<()> {
        for x in 0..self.len() {
            let (g, f) = (self.g[x], self.f[x]);
            if g < a || g + delta > f || f > b {
                return invalid(format!(
                    "vertex {x}: (g, f) = ({g}, {f}) violates {a} <= g <= f - {delta} <= {b} - {delta}"
                ));
            }
        }
        Ok(())
    }

    pub fn in_band(&self, p: &ScenarioParams) -> bool {
        self.check_band(p.a, p.b, p.delta).is_ok()
    }

    pub(crate) fn ensure_order(&self, order: usize) -> Result<()> {
        if self.len() != order {
            return invalid(format!("vertex functions cover {} vertices, graph has {order}", self.len()));
        }
        Ok(())
    }

    /// Keeps the listed vertices, in the order given.
    pub fn restrict(&self, kept: &[usize]) -> VertexFuncs {
        VertexFuncs { g: kept.iter().map(|&v| self.g[v]).collect(), f: kept.iter().map(|&v| self.f[v]).collect() }
    }

    pub fn g_sum(&self, set: &[usize]) -> i64 {
        set.iter().map(|&v| i64::from(self.g[v])).sum()
    }

    pub fn f_sum(&self, set: &[usize]) -> i64 {
        set.iter().map(|&v| i64::from(self.f[v])).sum()
    }
}
