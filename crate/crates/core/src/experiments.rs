//! Random instance generation and batch implication testing.

use std::collections::BTreeMap;
use std::time::Instant;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::deficiency::{check_lemma1_with, DeficiencyWitness};
use crate::error::{invalid, Result};
use crate::factor::has_fractional_factor;
use crate::funcs::{ScenarioParams, VertexFuncs};
use crate::graph::{Edge, Graph};
use crate::limits::Limits;
use crate::properties::is_critical_deleted_with;
use crate::theorems::{thresholds, verify_implication, Condition, Frac, TheoremId};

/// Identity of the pseudo-random generator, recorded in every report.
pub const GENERATOR: &str = "rand_chacha::ChaCha8Rng (seed_from_u64, one stream per trial)";

/// Independent generator for `(seed, stream)`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn ceil(frac: Frac) -> i128 {
    frac.num.div_euclid(frac.den) + i128::from(frac.num.rem_euclid(frac.den) != 0)
}

/// Random graph with edge probability 1/2, then augmented to `δ ≥ min_degree`.
pub fn random_graph(n: usize, min_degree: usize, seed: u64) -> Result<Graph> {
    random_graph_with(n, 0.5, min_degree, &mut rng_for(seed, 0))
}

/// Each pair becomes an edge with probability `density`; afterwards a random
/// edge is added at a random minimum-degree vertex until `δ ≥ min_degree`.
pub fn random_graph_with<R: Rng>(n: usize, density: f64, min_degree: usize, rng: &mut R) -> Result<Graph> {
    if min_degree >= n {
        return invalid(format!("minimum degree {min_degree} needs more than {n} vertices"));
    }
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))) {
        if rng.gen_bool(density.clamp(0.0, 1.0)) {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    let degree = |adj: &Vec<Vec<bool>>, v: usize| adj[v].iter().filter(|&&b| b).count();
    loop {
        let degrees: Vec<usize> = (0..n).map(|v| degree(&adj, v)).collect();
        let low = *degrees.iter().min().expect("n >= 1");
        if low >= min_degree {
            break;
        }
        let lows: Vec<usize> = (0..n).filter(|&v| degrees[v] == low).collect();
        let v = *lows.choose(rng).expect("nonempty");
        let options: Vec<usize> = (0..n).filter(|&w| w != v && !adj[v][w]).collect();
        let w = *options.choose(rng).expect("degree below n - 1");
        adj[v][w] = true;
        adj[w][v] = true;
    }
    Ok(to_graph(&adj))
}

fn to_graph(adj: &[Vec<bool>]) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]);
    Graph::from_edges(n, edges).expect("adjacency matrix is simple")
}

/// Adds random edges between nonadjacent pairs flagged by `violates` until no
/// such pair remains.
fn augment_pairs<R: Rng>(g: &Graph, rng: &mut R, violates: impl Fn(usize, usize) -> bool) -> Graph {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    loop {
        let deg: Vec<usize> = adj.iter().map(|row| row.iter().filter(|&&b| b).count()).collect();
        let bad: Vec<Edge> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !adj[u][v] && violates(deg[u], deg[v]))
            .collect();
        let Some(&(u, v)) = bad.choose(rng) else {
            return to_graph(&adj);
        };
        adj[u][v] = true;
        adj[v][u] = true;
    }
}

/// Samples `g(x) ∈ [a, b−Δ]` and `f(x) ∈ [g(x)+Δ, b]` independently per vertex.
pub fn random_vertex_funcs(g: &Graph, p: &ScenarioParams, seed: u64) -> Result<VertexFuncs> {
    random_vertex_funcs_with(g.order(), p, &mut rng_for(seed, 0))
}

pub fn random_vertex_funcs_with<R: Rng>(n: usize, p: &ScenarioParams, rng: &mut R) -> Result<VertexFuncs> {
    if p.b < p.a + p.delta {
        return invalid(format!("empty band: b - delta = {} < a = {}", i64::from(p.b) - i64::from(p.delta), p.a));
    }
    let g: Vec<u32> = (0..n).map(|_| rng.gen_range(p.a..=p.b - p.delta)).collect();
    let f: Vec<u32> = g.iter().map(|&x| rng.gen_range(x + p.delta..=p.b)).collect();
    let vf = VertexFuncs::new(g, f)?;
    vf.check_band(p.a, p.b, p.delta)?;
    Ok(vf)
}

/// Random graph on `n` vertices meeting every degree clause of `which`
/// lowered by `offset`. Order and parameter clauses are the caller's job.
pub fn forced_instance_graph<R: Rng>(
    which: TheoremId,
    n: usize,
    p: &ScenarioParams,
    offset: u32,
    rng: &mut R,
) -> Result<Graph> {
    let shape = which.shape();
    if shape.condition == Condition::Complete {
        return Graph::complete(n);
    }
    let th = thresholds(&shape, n, p);
    let offset = i128::from(offset);
    let mut need: i128 = 0;
    if shape.aux {
        need = need.max(th.aux.map_or(0, ceil) - offset);
    }
    let degree = th.degree.map_or(0, ceil);
    if shape.condition == Condition::MinDegree {
        need = need.max(degree - offset);
    }
    let need = need.clamp(0, n as i128 - 1) as usize;
    let density = rng.gen_range(0.1..0.9);
    let g = random_graph_with(n, density, need, rng)?;
    Ok(match shape.condition {
        Condition::MaxPair => {
            let req = (degree - offset).max(0) as usize;
            augment_pairs(&g, rng, |du, dv| du.max(dv) < req)
        }
        Condition::Sigma2 => {
            let req = th.degree.map_or(0, |t| ceil(t.scale(2))) - offset;
            let req = req.max(0) as usize;
            augment_pairs(&g, rng, |du, dv| du + dv < req)
        }
        _ => g,
    })
}

/// Minimum of `|E(G − W)|` over `k`-subsets `W`.
pub fn min_edges_after_deleting(g: &Graph, k: usize) -> usize {
    (0..g.order())
        .combinations(k)
        .map(|w| g.edges().iter().filter(|(x, y)| !w.contains(x) && !w.contains(y)).count())
        .min()
        .unwrap_or(0)
}

/// One random criterion-versus-definition instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Instance {
    pub graph: Graph,
    pub funcs: VertexFuncs,
    pub params: ScenarioParams,
}

/// Draws `n ∈ [min_n, max_n]`, `n', m ∈ {0,1,2}` and a band tuple, and
/// resamples the graph until every `n'`-deletion leaves at least `m` edges.
pub fn random_lemma1_instance<R: Rng>(
    rng: &mut R,
    min_n: usize,
    max_n: usize,
    bands: &[(u32, u32, u32)],
) -> Result<Lemma1Instance> {
    let usable: Vec<&(u32, u32, u32)> = bands.iter().filter(|(a, b, d)| b >= &(a + d)).collect();
    let &&(a, b, delta) = usable.choose(rng).ok_or_else(|| crate::Error::InvalidArgument("no usable band".into()))?;
    let n = rng.gen_range(min_n..=max_n);
    // Redraw (n', m) until even K_n minus n' vertices keeps m edges.
    let (nprime, m) = loop {
        let nprime = rng.gen_range(0..=2u32.min(n as u32));
        let m = rng.gen_range(0..=2u32);
        let rest = n - nprime as usize;
        if rest * rest.saturating_sub(1) / 2 >= m as usize {
            break (nprime, m);
        }
    };
    let p = ScenarioParams::new(a, b, delta, nprime, m);
    let funcs = random_vertex_funcs_with(n, &p, rng)?;
    for _ in 0..1000 {
        let density = rng.gen_range(0.3..1.0);
        let min_degree = rng.gen_range(0..n);
        let graph = random_graph_with(n, density, min_degree, rng)?;
        if min_edges_after_deleting(&graph, nprime as usize) >= m as usize {
            return Ok(Lemma1Instance { graph, funcs, params: p });
        }
    }
    invalid(format!("could not draw a graph on {n} vertices with enough edges"))
}

/// One graph per isomorphism class on `n` vertices, in order of their
/// canonical edge masks.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| pairs.iter().position(|&e| e == (u.min(v), u.max(v))).expect("pair");
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let images: Vec<Vec<usize>> =
        perms.iter().map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect()).collect();
    let mut canon = std::collections::BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let best = images
            .iter()
            .map(|img| {
                img.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0u64, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .expect("at least one permutation");
        canon.insert(best);
    }
    canon
        .into_iter()
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            Graph::from_edges(n, edges).expect("simple")
        })
        .collect()
}

/// Every `(g, f)` with `0 ≤ g(x) ≤ f(x) ≤ max` on `n` vertices.
pub fn all_vertex_funcs(n: usize, max: u32) -> impl Iterator<Item = VertexFuncs> {
    let pairs: Vec<(u32, u32)> = (0..=max).flat_map(|g| (g..=max).map(move |f| (g, f))).collect();
    (0..n)
        .map(|_| pairs.clone())
        .multi_cartesian_product()
        .map(|choice| {
            let (g, f) = choice.into_iter().unzip();
            VertexFuncs::new(g, f).expect("g <= f")
        })
        .chain((n == 0).then(|| VertexFuncs::new(vec![], vec![]).expect("empty")))
}

fn default_bands() -> Vec<(u32, u32, u32)> {
    vec![(2, 3, 1), (2, 4, 0), (2, 4, 2), (2, 5, 1)]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSweepConfig {
    /// Exhaustive factor-versus-criterion sweep over all graphs up to this order.
    pub exhaustive_max_n: usize,
    /// Largest function value in the exhaustive sweep.
    #[serde(default = "default_max_value")]
    pub max_value: u32,
    /// Random critical-deleted instances compared against the criterion.
    pub lemma1_instances: usize,
    pub lemma1_max_n: usize,
    #[serde(default = "default_bands")]
    pub bands: Vec<(u32, u32, u32)>,
}

fn default_max_value() -> u32 {
    3
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchConfig {
    pub seed: u64,
    /// Trials per theorem.
    pub trials: usize,
    pub theorems: Vec<TheoremId>,
    pub params: Vec<ScenarioParams>,
    pub n_min: usize,
    pub n_max: usize,
    #[serde(default = "default_cap")]
    pub size_cap: usize,
    /// Lowers every generated degree requirement, to probe near misses.
    #[serde(default)]
    pub degree_offset: u32,
    #[serde(default)]
    pub oracle_sweep: Option<OracleSweepConfig>,
}

fn default_cap() -> usize {
    crate::limits::DEFAULT_SIZE_CAP
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub trial: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTally {
    pub theorem: TheoremId,
    pub attempted: usize,
    pub hypotheses_held: usize,
    /// Conclusion true among hypothesis-holding trials.
    pub conclusion_true: usize,
    pub inconsistent: usize,
    pub skipped: Vec<Skip>,
}

/// An instance whose hypotheses fail and whose conclusion fails too.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearMiss {
    pub theorem: TheoremId,
    pub trial: usize,
    pub params: ScenarioParams,
    pub failing_clauses: Vec<String>,
    pub graph: Graph,
    pub witness: Option<DeficiencyWitness>,
}

/// Hypotheses hold but the conclusion fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub theorem: TheoremId,
    pub trial: usize,
    pub params: ScenarioParams,
    pub graph: Graph,
    pub funcs: VertexFuncs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub graph: Graph,
    pub funcs: VertexFuncs,
    pub params: ScenarioParams,
    pub definition: bool,
    pub criterion: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct SweepReport {
    pub factor_instances: u64,
    pub factor_feasible: u64,
    pub factor_disagreements: Vec<Disagreement>,
    pub lemma1_instances: usize,
    pub lemma1_holds: usize,
    pub lemma1_disagreements: Vec<Disagreement>,
    pub skipped: Vec<Skip>,
}

impl SweepReport {
    pub fn agreement(&self) -> bool {
        self.factor_disagreements.is_empty() && self.lemma1_disagreements.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub seed: u64,
    pub generator: String,
    pub trials: usize,
    pub theorems: Vec<TheoremTally>,
    pub inconsistent: usize,
    pub near_misses: Vec<NearMiss>,
    pub violations: Vec<Violation>,
    pub oracle_sweep: Option<SweepReport>,
    /// Wall time per phase in milliseconds.
    pub timing: BTreeMap<String, f64>,
}

impl ExperimentReport {
    pub fn without_timing(&self) -> ExperimentReport {
        ExperimentReport { timing: BTreeMap::new(), ..self.clone() }
    }
}

enum TrialOutcome {
    Skipped(String),
    Ran {
        hypotheses: bool,
        conclusion: Option<bool>,
        near_miss: Option<Box<NearMiss>>,
        violation: Option<Box<Violation>>,
    },
}

fn run_trial(config: &BatchConfig, limits: &Limits, which: TheoremId, stream: u64, trial: usize) -> TrialOutcome {
    let mut rng = rng_for(config.seed, stream);
    let shape = which.shape();
    let upper = config.n_max.min(limits.size_cap);
    // Only tuples that admit an order in range can have their hypotheses forced.
    let grid: Vec<(ScenarioParams, Vec<usize>)> = config
        .params
        .iter()
        .filter(|p| p.is_standing())
        .map(|&p| {
            let orders = (config.n_min.max(1)..=upper)
                .filter(|&n| thresholds(&shape, n, &p).order.is_some_and(|t| t.lt_int(n as i128)))
                .collect();
            (p, orders)
        })
        .filter(|(_, orders): &(ScenarioParams, Vec<usize>)| !orders.is_empty())
        .collect();
    let Some((p, orders)) = grid.choose(&mut rng) else {
        return TrialOutcome::Skipped(format!(
            "no parameter tuple with b - delta >= a >= 2 admits an order in [{}, {upper}]",
            config.n_min
        ));
    };
    let (p, n) = (*p, *orders.choose(&mut rng).expect("nonempty"));
    let generated = (|| {
        let funcs = if shape.constant {
            VertexFuncs::constant(n, p.a, p.b)?
        } else {
            random_vertex_funcs_with(n, &p, &mut rng)?
        };
        let graph = forced_instance_graph(which, n, &p, config.degree_offset, &mut rng)?;
        let verdict = verify_implication(&graph, &funcs, &p, which, limits)?;
        Ok::<_, crate::Error>((graph, funcs, verdict))
    })();
    let (graph, funcs, verdict) = match generated {
        Ok(x) => x,
        Err(e) => return TrialOutcome::Skipped(e.to_string()),
    };
    let near_miss = (!verdict.hypotheses_hold && verdict.conclusion_checked == Some(false)).then(|| {
        Box::new(NearMiss {
            theorem: which,
            trial,
            params: p,
            failing_clauses: verdict.failing_clauses().into_iter().map(String::from).collect(),
            graph: graph.clone(),
            witness: verdict
                .counterexample
                .as_ref()
                .and_then(|o| o.counterexample.as_ref())
                .and_then(|c| c.witness.clone()),
        })
    });
    let violation = (verdict.consistent == Some(false)).then_some(Box::new(Violation {
        theorem: which,
        trial,
        params: p,
        graph,
        funcs,
    }));
    TrialOutcome::Ran {
        hypotheses: verdict.hypotheses_hold,
        conclusion: verdict.conclusion_checked,
        near_miss,
        violation,
    }
}

fn factor_sweep(cfg: &OracleSweepConfig, limits: &Limits, report: &mut SweepReport) {
    let graphs: Vec<Graph> = (1..=cfg.exhaustive_max_n).flat_map(nonisomorphic_graphs).collect();
    let per_graph: Vec<(u64, u64, Vec<Disagreement>)> = graphs
        .par_iter()
        .map(|g| {
            let mut count = 0;
            let mut feasible = 0;
            let mut bad = Vec::new();
            for vf in all_vertex_funcs(g.order(), cfg.max_value) {
                count += 1;
                let flow = has_fractional_factor(g, &vf).expect("orders match").is_some();
                let criterion = check_lemma1_with(g, &vf, 0, 0, limits).expect("within cap").holds();
                feasible += u64::from(flow);
                if flow != criterion {
                    bad.push(Disagreement {
                        graph: g.clone(),
                        funcs: vf,
                        params: ScenarioParams::default(),
                        definition: flow,
                        criterion,
                    });
                }
            }
            (count, feasible, bad)
        })
        .collect();
    for (count, feasible, bad) in per_graph {
        report.factor_instances += count;
        report.factor_feasible += feasible;
        report.factor_disagreements.extend(bad);
    }
}

fn lemma1_sweep(seed: u64, cfg: &OracleSweepConfig, limits: &Limits, report: &mut SweepReport) {
    let outcomes: Vec<std::result::Result<(bool, Option<Disagreement>), String>> = (0..cfg.lemma1_instances)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, (u64::MAX >> 1) - i as u64);
            let inst = random_lemma1_instance(&mut rng, 3, cfg.lemma1_max_n, &cfg.bands).map_err(|e| e.to_string())?;
            let (np, m) = (inst.params.nprime as usize, inst.params.m as usize);
            let definition =
                is_critical_deleted_with(&inst.graph, &inst.funcs, np, m, limits).map_err(|e| e.to_string())?.holds;
            let criterion =
                check_lemma1_with(&inst.graph, &inst.funcs, np, m, limits).map_err(|e| e.to_string())?.holds();
            let bad = (definition != criterion).then_some(Disagreement {
                graph: inst.graph,
                funcs: inst.funcs,
                params: inst.params,
                definition,
                criterion,
            });
            Ok((definition, bad))
        })
        .collect();
    for (i, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok((holds, bad)) => {
                report.lemma1_instances += 1;
                report.lemma1_holds += usize::from(holds);
                report.lemma1_disagreements.extend(bad);
            }
            Err(reason) => report.skipped.push(Skip { trial: i, reason }),
        }
    }
}

/// Runs every configured theorem `trials` times, then the oracle sweep.
/// Identical configs give identical reports apart from `timing`, whatever
/// the thread count.
pub fn run_batch(config: &BatchConfig) -> Result<ExperimentReport> {
    let limits = Limits::new(config.size_cap)?;
    let mut timing = BTreeMap::new();
    let mut tallies = Vec::new();
    let mut near_misses = Vec::new();
    let mut violations = Vec::new();

    let started = Instant::now();
    for (index, &which) in config.theorems.iter().enumerate() {
        let outcomes: Vec<TrialOutcome> = (0..config.trials)
            .into_par_iter()
            .map(|trial| run_trial(config, &limits, which, ((index as u64) << 32) | trial as u64, trial))
            .collect();
        let mut tally = TheoremTally {
            theorem: which,
            attempted: config.trials,
            hypotheses_held: 0,
            conclusion_true: 0,
            inconsistent: 0,
            skipped: Vec::new(),
        };
        for (trial, outcome) in outcomes.into_iter().enumerate() {
            match outcome {
                TrialOutcome::Skipped(reason) => tally.skipped.push(Skip { trial, reason }),
                TrialOutcome::Ran { hypotheses, conclusion, near_miss, violation } => {
                    if hypotheses {
                        tally.hypotheses_held += 1;
                        tally.conclusion_true += usize::from(conclusion == Some(true));
                    }
                    tally.inconsistent += usize::from(violation.is_some());
                    near_misses.extend(near_miss.map(|b| *b));
                    violations.extend(violation.map(|b| *b));
                }
            }
        }
        tallies.push(tally);
    }
    timing.insert("theorems".to_string(), started.elapsed().as_secs_f64() * 1e3);

    let oracle_sweep = config.oracle_sweep.as_ref().map(|cfg| {
        let mut report = SweepReport::default();
        let started = Instant::now();
        factor_sweep(cfg, &limits, &mut report);
        timing.insert("factor_sweep".to_string(), started.elapsed().as_secs_f64() * 1e3);
        let started = Instant::now();
        lemma1_sweep(config.seed, cfg, &limits, &mut report);
        timing.insert("lemma1_sweep".to_string(), started.elapsed().as_secs_f64() * 1e3);
        report
    });

    let inconsistent = tallies.iter().map(|t| t.inconsistent).sum();
    Ok(ExperimentReport {
        seed: config.seed,
        generator: GENERATOR.to_string(),
        trials: config.trials,
        theorems: tallies,
        inconsistent,
        near_misses,
        violations,
        oracle_sweep,
        timing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graph_is_deterministic() {
        assert_eq!(random_graph(6, 0, 1).unwrap(), random_graph(6, 0, 1).unwrap());
    }

    #[test]
    fn forced_complete() {
        for seed in 0..5 {
            assert_eq!(random_graph(8, 7, seed).unwrap(), Graph::complete(8).unwrap());
        }
    }

    #[test]
    fn min_degree_is_met() {
        let g = random_graph(10, 4, 42).unwrap();
        assert!(g.degree_stats().min_degree >= 4);
        assert!(random_graph(5, 5, 0).is_err());
    }

    #[test]
    fn singleton_band() {
        let g = Graph::complete(6).unwrap();
        let vf = random_vertex_funcs(&g, &ScenarioParams::new(2, 3, 1, 0, 0), 9).unwrap();
        assert_eq!(vf.as_constant(), Some((2, 3)));
    }

    #[test]
    fn band_samples_stay_in_band() {
        let p = ScenarioParams::new(2, 5, 1, 0, 0);
        let mut rng = rng_for(3, 0);
        for _ in 0..1000 {
            let vf = random_vertex_funcs_with(4, &p, &mut rng).unwrap();
            for x in 0..4 {
                assert!((2..=4).contains(&vf.g(x)));
                assert!(vf.g(x) < vf.f(x) && vf.f(x) <= 5);
            }
        }
    }

    #[test]
    fn empty_band_is_rejected() {
        let g = Graph::complete(3).unwrap();
        assert!(random_vertex_funcs(&g, &ScenarioParams::new(3, 3, 1, 0, 0), 0).is_err());
    }

    #[test]
    fn isomorphism_class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn vertex_func_enumeration_size() {
        assert_eq!(all_vertex_funcs(2, 3).count(), 100);
    }

    #[test]
    fn empty_batch() {
        let config = BatchConfig {
            seed: 1,
            trials: 0,
            theorems: vec![TheoremId::T1],
            params: vec![ScenarioParams::new(2, 3, 1, 0, 0)],
            n_min: 6,
            n_max: 12,
            size_cap: 16,
            degree_offset: 0,
            oracle_sweep: None,
        };
        let report = run_batch(&config).unwrap();
        assert_eq!(report.inconsistent, 0);
        assert_eq!(report.theorems[0].hypotheses_held, 0);
    }

    #[test]
    fn forced_instances_meet_hypotheses() {
        let p = ScenarioParams::new(2, 3, 1, 0, 0);
        for which in [TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T6] {
            let shape = which.shape();
            let n = (6..=12).find(|&n| thresholds(&shape, n, &p).order.unwrap().lt_int(n as i128)).unwrap();
            let mut rng = rng_for(5, 0);
            let g = forced_instance_graph(which, n.max(11), &p, 0, &mut rng).unwrap();
            let vf = VertexFuncs::constant(g.order(), 2, 3).unwrap();
            let v = crate::theorems::check_hypotheses(&g, &vf, &p, which).unwrap();
            assert!(v.hypotheses_hold, "{which}: {:?}", v.failing_clauses());
        }
    }
}
