//! The two sharpness families: `K_{at+n'} ∨ (bt+1)K_1` for the
//! critical-deleted theorems and `(bt+1)K_1 ∨ K_{at} ∨ (bt+1)K_1` for the
//! ID-deleted ones, both with `b = a + Δ`, `g ≡ a`, `f ≡ b`.

use serde::{Deserialize, Serialize};

use crate::deficiency::DeficiencyWitness;
use crate::error::{invalid, Error, Result};
use crate::funcs::{ScenarioParams, VertexFuncs};
use crate::graph::{Edge, Graph, Sigma2};
use crate::theorems::{thresholds, Frac, TheoremId};

/// `threshold − 1 < value < threshold` (or `≤` on the left when
/// `lower_inclusive`), checked as exact rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub value: i128,
    pub threshold: Frac,
    pub lower_inclusive: bool,
    pub below: bool,
    pub within_one: bool,
}

impl Chain {
    fn new(value: i128, threshold: Frac, lower_inclusive: bool) -> Chain {
        let below = value * threshold.den < threshold.num;
        let gap = threshold.num - (value + 1) * threshold.den; // sign of (threshold − 1 − value)
        let within_one = if lower_inclusive { gap <= 0 } else { gap < 0 };
        Chain { value, threshold, lower_inclusive, below, within_one }
    }

    pub fn holds(&self) -> bool {
        self.below && self.within_one
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chains {
    pub min_degree: Chain,
    pub max_pair: Chain,
    pub sigma2: Chain,
}

impl Chains {
    pub fn all_hold(&self) -> bool {
        self.min_degree.holds() && self.max_pair.holds() && self.sigma2.holds()
    }
}

fn metrics(g: &Graph) -> Result<(i128, i128, i128)> {
    let stats = g.degree_stats();
    let (Some(pair), Sigma2::Finite(s2)) = (g.min_max_pair_degree(), stats.sigma2) else {
        return Err(Error::InvalidState("construction is unexpectedly complete".into()));
    };
    Ok((stats.min_degree as i128, pair as i128, s2 as i128))
}

fn leading_edges(g: &Graph, removed: &[usize], m: usize) -> Vec<Edge> {
    g.edges().iter().copied().filter(|(x, y)| !removed.contains(x) && !removed.contains(y)).take(m).collect()
}

fn validate(a: u32, t: u32) -> Result<()> {
    if a < 2 {
        return invalid(format!("a = {a} must be at least 2"));
    }
    if t == 0 {
        return invalid("t must be positive");
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CriticalSharpness {
    pub graph: Graph,
    pub funcs: VertexFuncs,
    pub params: ScenarioParams,
    pub t: u32,
    /// `S` = the complete part, `T` = the independent part, slack `−a`.
    pub expected: DeficiencyWitness,
}

impl CriticalSharpness {
    pub fn order(a: u32, delta: u32, nprime: u32, t: u32) -> usize {
        ((2 * a + delta) * t + 1 + nprime) as usize
    }

    /// Smallest `t` meeting the order bound and the auxiliary degree bound.
    pub fn min_t(a: u32, delta: u32, nprime: u32, m: u32) -> Result<u32> {
        validate(a, 1)?;
        (1..=u32::MAX)
            .find(|&t| Self::check_t(a, delta, nprime, m, t).is_ok())
            .ok_or_else(|| Error::InvalidArgument("no admissible t".into()))
    }

    fn check_t(a: u32, delta: u32, nprime: u32, m: u32, t: u32) -> Result<()> {
        let b = a + delta;
        let p = ScenarioParams::new(a, b, delta, nprime, m);
        let n = Self::order(a, delta, nprime, t);
        let th = thresholds(&TheoremId::T3.shape(), n, &p);
        let order = th.order.expect("a >= 2");
        if !order.lt_int(n as i128) {
            return invalid(format!("t = {t} gives n = {n}, which fails n > {order}"));
        }
        let aux = th.aux.expect("a >= 2");
        let min_degree = i128::from(nprime + a * t);
        if !aux.le_int(min_degree) {
            return invalid(format!("t = {t} gives delta(G) = {min_degree}, which fails delta(G) >= {aux}"));
        }
        Ok(())
    }

    pub fn build(a: u32, delta: u32, nprime: u32, m: u32, t: u32) -> Result<Self> {
        validate(a, t)?;
        Self::check_t(a, delta, nprime, m, t)?;
        let b = a + delta;
        let clique = (a * t + nprime) as usize;
        let graph = Graph::join(&[Graph::complete(clique)?, Graph::empty((b * t + 1) as usize)?])?;
        let n = graph.order();
        let funcs = VertexFuncs::constant(n, a, b)?;
        let u: Vec<usize> = (0..nprime as usize).collect();
        let expected = DeficiencyWitness {
            s: (0..clique).collect(),
            t: (clique..n).collect(),
            h: leading_edges(&graph, &u, m as usize),
            u,
            slack: -i64::from(a),
        };
        Ok(CriticalSharpness { graph, funcs, params: ScenarioParams::new(a, b, delta, nprime, m), t, expected })
    }

    /// The three displayed chains around `((b−Δ)n + (a+Δ)n') / (a+b)`; the
    /// `σ2` chain is non-strict on the left.
    pub fn chains(&self) -> Result<Chains> {
        let (d, pair, s2) = metrics(&self.graph)?;
        let th = thresholds(&TheoremId::T1.shape(), self.graph.order(), &self.params).degree.expect("a + b > 0");
        Ok(Chains {
            min_degree: Chain::new(d, th, false),
            max_pair: Chain::new(pair, th, false),
            sigma2: Chain::new(s2, th.scale(2), true),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdSharpness {
    pub graph: Graph,
    pub funcs: VertexFuncs,
    pub params: ScenarioParams,
    pub t: u32,
    /// The first independent side.
    pub expected_i: Vec<usize>,
    /// `G − I`, labelled with the clique first.
    pub residual: Graph,
    /// Witness in `residual`: `S` = the clique, `T` = the remaining side.
    pub expected: DeficiencyWitness,
}

impl IdSharpness {
    pub fn order(a: u32, delta: u32, t: u32) -> usize {
        ((3 * a + 2 * delta) * t + 2) as usize
    }

    /// Smallest `t` meeting the minimum-degree and degree-sum order bound.
    pub fn min_t(a: u32, delta: u32, m: u32) -> Result<u32> {
        validate(a, 1)?;
        (1..=u32::MAX)
            .find(|&t| Self::check_t(a, delta, m, t).is_ok())
            .ok_or_else(|| Error::InvalidArgument("no admissible t".into()))
    }

    fn check_t(a: u32, delta: u32, m: u32, t: u32) -> Result<()> {
        let p = ScenarioParams::new(a, a + delta, delta, 0, m);
        let n = Self::order(a, delta, t);
        let order = thresholds(&TheoremId::T4.shape(), n, &p).order.expect("a >= 2");
        if !order.lt_int(n as i128) {
            return invalid(format!("t = {t} gives n = {n}, which fails n > {order}"));
        }
        Ok(())
    }

    pub fn build(a: u32, delta: u32, m: u32, t: u32) -> Result<Self> {
        validate(a, t)?;
        Self::check_t(a, delta, m, t)?;
        let b = a + delta;
        let side = (b * t + 1) as usize;
        let clique = (a * t) as usize;
        let graph = Graph::join(&[Graph::empty(side)?, Graph::complete(clique)?, Graph::empty(side)?])?;
        let n = graph.order();
        let expected_i: Vec<usize> = (0..side).collect();
        if !graph.is_independent_set(&expected_i)? {
            return Err(Error::InvalidState("first side is not independent".into()));
        }
        let (residual, _) = graph.remove_vertices(&expected_i);
        let expected = DeficiencyWitness {
            s: (0..clique).collect(),
            t: (clique..residual.order()).collect(),
            u: Vec::new(),
            h: leading_edges(&residual, &[], m as usize),
            slack: -i64::from(a),
        };
        Ok(IdSharpness {
            funcs: VertexFuncs::constant(n, a, b)?,
            graph,
            params: ScenarioParams::new(a, b, delta, 0, m),
            t,
            expected_i,
            residual,
            expected,
        })
    }

    /// The three displayed chains around `(b+a)n / (b+Δ+2a)`, all strict.
    pub fn chains(&self) -> Result<Chains> {
        let (d, pair, s2) = metrics(&self.graph)?;
        let th = thresholds(&TheoremId::T4.shape(), self.graph.order(), &self.params).degree.expect("a + b > 0");
        Ok(Chains {
            min_degree: Chain::new(d, th, false),
            max_pair: Chain::new(pair, th, false),
            sigma2: Chain::new(s2, th.scale(2), false),
        })
    }
}
