//! `factorlab` command-line front end.
//!
//! Exit status: 0 when the property (or theorem instance) holds, 1 when it
//! fails and a witness is printed, 2 on usage or input errors.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use factorlab::deficiency::check_lemma1_with;
use factorlab::experiments::{run_batch, BatchConfig, OracleSweepConfig};
use factorlab::extremal::{CriticalSharpness, IdSharpness};
use factorlab::factor::factor_defect_witness_with;
use factorlab::io::{parse_graph_file, write_graph_file};
use factorlab::properties::{is_critical_deleted_with, is_deleted_with, is_id_deleted_with, PropertyOutcome};
use factorlab::report::{assignment_entries, CommandReport, Timing, VerdictLabel, WitnessReport};
use factorlab::theorems::{check_hypotheses, verify_implication, TheoremId};
use factorlab::{
    has_fractional_factor, recompute_slack, DeficiencyWitness, Graph, Limits, ScenarioParams, VertexFuncs,
};
use serde_json::json;

const SIZE_CAP_VAR: &str = "FACTORLAB_SIZE_CAP";

/// Brute force is the default cross-check for critical-deleted up to this order.
const BRUTE_DEFAULT_MAX: usize = 10;

#[derive(Parser)]
#[command(name = "factorlab", version, about = "Fractional (g,f)-factor and deleted-graph checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Lower bound a; with a graph file, also sets g ≡ a.
    #[arg(long, visible_alias = "g")]
    a: Option<u32>,
    /// Upper bound b; with a graph file, also sets f ≡ b.
    #[arg(long, visible_alias = "f")]
    b: Option<u32>,
    #[arg(long, default_value_t = 0)]
    delta: u32,
    /// Number of vertices deleted (n').
    #[arg(long, default_value_t = 0)]
    np: u32,
    /// Number of edges deleted.
    #[arg(long, default_value_t = 0)]
    m: u32,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph has a fractional (g,f)-factor.
    Factor {
        #[command(flatten)]
        common: Common,
        file: PathBuf,
    },
    /// Fractional (g,f,m)-deleted, by brute force.
    Deleted {
        #[command(flatten)]
        common: Common,
        file: PathBuf,
    },
    /// Fractional (g,f,n',m)-critical deleted.
    CriticalDeleted {
        #[command(flatten)]
        common: Common,
        /// Default: both for graphs of order at most 10, otherwise criterion.
        #[arg(long, value_enum)]
        method: Option<Method>,
        file: PathBuf,
    },
    /// Fractional ID-(g,f,m)-deleted, by brute force over independent sets.
    IdDeleted {
        #[command(flatten)]
        common: Common,
        file: PathBuf,
    },
    /// Minimum-slack deficiency witness over all (S, T).
    Criterion {
        #[command(flatten)]
        common: Common,
        file: PathBuf,
    },
    /// Evaluate a theorem's hypotheses on an instance.
    Theorem {
        #[command(flatten)]
        common: Common,
        /// T1..T6, table2.1, table4.2, lemma2, cor4, ...
        #[arg(long)]
        which: TheoremId,
        /// Also check the conclusion by brute force.
        #[arg(long)]
        verify: bool,
        file: PathBuf,
    },
    /// Build a sharpness example.
    Extremal {
        #[command(flatten)]
        common: Common,
        #[arg(value_enum)]
        family: Family,
        /// Default: the smallest admissible t.
        #[arg(long)]
        t: Option<u32>,
        /// Write the graph here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include `v` lines with g ≡ a, f ≡ b in the written file.
        #[arg(long)]
        with_funcs: bool,
    },
    /// Random implication testing.
    Experiment {
        #[command(flatten)]
        common: Common,
        /// JSON batch configuration; other experiment flags are ignored.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Repeatable; default T1..T6.
        #[arg(long = "theorem")]
        theorems: Vec<TheoremId>,
        #[arg(long, default_value_t = 6)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        degree_offset: u32,
        /// Add the exhaustive factor sweep over all graphs up to this order.
        #[arg(long)]
        sweep_max_n: Option<usize>,
        /// Random criterion-versus-definition instances in the sweep.
        #[arg(long, default_value_t = 0)]
        sweep_instances: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Criterion,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Critical,
    Id,
}

struct Outcome {
    report: CommandReport,
    text: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((outcome, json)) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&outcome.report).expect("report serializes"));
            } else {
                print!("{}", outcome.text);
            }
            match outcome.report.verdict {
                VerdictLabel::Holds => ExitCode::SUCCESS,
                VerdictLabel::Fails => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<(Outcome, bool)> {
    let common = match &command {
        Command::Factor { common, .. }
        | Command::Deleted { common, .. }
        | Command::CriticalDeleted { common, .. }
        | Command::IdDeleted { common, .. }
        | Command::Criterion { common, .. }
        | Command::Theorem { common, .. }
        | Command::Extremal { common, .. }
        | Command::Experiment { common, .. } => common.clone(),
    };
    let limits = limits_from_env()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = common.threads {
        if n == 0 {
            bail!("--threads must be at least 1");
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build()?;
    let started = Instant::now();
    let mut outcome = pool.install(|| dispatch(command, &common, &limits))?;
    outcome.report.timing = Timing { elapsed_ms: started.elapsed().as_secs_f64() * 1e3 };
    Ok((outcome, common.json))
}

fn limits_from_env() -> anyhow::Result<Limits> {
    match std::env::var(SIZE_CAP_VAR) {
        Ok(v) => {
            let cap: usize = v.trim().parse().with_context(|| format!("{SIZE_CAP_VAR}={v:?} is not a number"))?;
            Ok(Limits::new(cap)?)
        }
        Err(std::env::VarError::NotPresent) => Ok(Limits::default()),
        Err(e) => Err(anyhow!("{SIZE_CAP_VAR}: {e}")),
    }
}

fn read_input(path: &Path) -> anyhow::Result<(Graph, Option<VertexFuncs>)> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(parse_graph_file(&text)?)
}

/// Graph, vertex functions and reported parameters. Functions come either
/// from `v` lines or from `--a/--b`, never both; with `v` lines the reported
/// `a` and `b` are the smallest `g` and largest `f`.
fn load(path: &Path, c: &Common) -> anyhow::Result<(Graph, VertexFuncs, ScenarioParams)> {
    let (graph, from_file) = read_input(path)?;
    let (funcs, a, b) = match (from_file, c.a, c.b) {
        (Some(_), Some(_), _) | (Some(_), _, Some(_)) => {
            bail!("vertex functions given both by v lines and by --a/--b")
        }
        (Some(vf), None, None) => {
            let a = vf.g_values().iter().copied().min().unwrap_or(0);
            let b = vf.f_values().iter().copied().max().unwrap_or(0);
            (vf, a, b)
        }
        (None, Some(a), Some(b)) => (VertexFuncs::constant(graph.order(), a, b)?, a, b),
        (None, _, _) => bail!("no vertex functions: give --a and --b or v lines in the file"),
    };
    Ok((graph, funcs, ScenarioParams::new(a, b, c.delta, c.np, c.m)))
}

fn report(command: &str, params: ScenarioParams, holds: bool) -> CommandReport {
    CommandReport {
        command: command.to_string(),
        params,
        verdict: if holds { VerdictLabel::Holds } else { VerdictLabel::Fails },
        witness: None,
        assignment: None,
        details: serde_json::Value::Null,
        timing: Timing::default(),
    }
}

fn set_text(s: &[usize]) -> String {
    format!("{{{}}}", s.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(", "))
}

fn witness_text(w: &DeficiencyWitness) -> String {
    let h: Vec<String> = w.h.iter().map(|(x, y)| format!("{}-{}", x + 1, y + 1)).collect();
    format!(
        "witness: S = {}, T = {}, U = {}, H = {{{}}}, slack = {}\n",
        set_text(&w.s),
        set_text(&w.t),
        set_text(&w.u),
        h.join(", "),
        w.slack
    )
}

fn verdict_line(holds: bool) -> &'static str {
    if holds {
        "holds\n"
    } else {
        "fails\n"
    }
}

fn property_outcome(command: &str, params: ScenarioParams, outcome: PropertyOutcome) -> Outcome {
    let mut text = verdict_line(outcome.holds).to_string();
    let mut r = report(command, params, outcome.holds);
    if let Some(c) = &outcome.counterexample {
        text += &format!(
            "removed vertices {}, removed edges {{{}}}\n",
            set_text(&c.removed_vertices),
            c.removed_edges.iter().map(|(x, y)| format!("{}-{}", x + 1, y + 1)).collect::<Vec<_>>().join(", ")
        );
        if let Some(w) = &c.witness {
            text += &witness_text(w);
            r.witness = Some(WitnessReport::from(w));
        }
    }
    r.details = json!({ "counterexample": outcome.counterexample.as_ref().map(|c| json!({
        "removed_vertices": c.removed_vertices.iter().map(|x| x + 1).collect::<Vec<_>>(),
        "removed_edges": c.removed_edges.iter().map(|&(x, y)| [x + 1, y + 1]).collect::<Vec<_>>(),
    })) });
    Outcome { report: r, text }
}

fn dispatch(command: Command, c: &Common, limits: &Limits) -> anyhow::Result<Outcome> {
    match command {
        Command::Factor { file, .. } => {
            let (g, vf, p) = load(&file, c)?;
            match has_fractional_factor(&g, &vf)? {
                Some(h) => {
                    let mut r = report("factor", p, true);
                    let entries = assignment_entries(&g, &h);
                    let mut text = verdict_line(true).to_string();
                    for e in &entries {
                        text += &format!("h({},{}) = {}\n", e.edge[0], e.edge[1], e.value);
                    }
                    r.assignment = Some(entries);
                    Ok(Outcome { report: r, text })
                }
                None => {
                    let w = factor_defect_witness_with(&g, &vf, limits)?;
                    let mut r = report("factor", p, false);
                    r.witness = Some(WitnessReport::from(&w));
                    Ok(Outcome { report: r, text: format!("{}{}", verdict_line(false), witness_text(&w)) })
                }
            }
        }
        Command::Deleted { file, .. } => {
            let (g, vf, p) = load(&file, c)?;
            limits.check(g.order())?;
            Ok(property_outcome("deleted", p, is_deleted_with(&g, &vf, c.m as usize, limits)?))
        }
        Command::IdDeleted { file, .. } => {
            let (g, vf, p) = load(&file, c)?;
            limits.check(g.order())?;
            Ok(property_outcome("id-deleted", p, is_id_deleted_with(&g, &vf, c.m as usize, limits)?))
        }
        Command::CriticalDeleted { file, method, .. } => {
            let (g, vf, p) = load(&file, c)?;
            let method =
                method.unwrap_or(if g.order() <= BRUTE_DEFAULT_MAX { Method::Both } else { Method::Criterion });
            critical_deleted(&g, &vf, p, method, limits)
        }
        Command::Criterion { file, .. } => {
            let (g, vf, p) = load(&file, c)?;
            let verdict = check_lemma1_with(&g, &vf, c.np as usize, c.m as usize, limits)?;
            let mut r = report("criterion", p, verdict.holds());
            let mut text = verdict_line(verdict.holds()).to_string();
            if let Some(w) = verdict.witness() {
                r.witness = Some(WitnessReport::from(w));
                text += &witness_text(w);
            }
            Ok(Outcome { report: r, text })
        }
        Command::Theorem { file, which, verify, .. } => theorem(&file, c, which, verify, limits),
        Command::Extremal { family, t, out, with_funcs, .. } => extremal(c, family, t, out, with_funcs),
        Command::Experiment {
            config,
            seed,
            trials,
            theorems,
            n_min,
            n_max,
            degree_offset,
            sweep_max_n,
            sweep_instances,
            ..
        } => {
            let config = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
                }
                None => BatchConfig {
                    seed,
                    trials,
                    theorems: if theorems.is_empty() {
                        vec![TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::T5, TheoremId::T6]
                    } else {
                        theorems
                    },
                    params: vec![ScenarioParams::new(c.a.unwrap_or(2), c.b.unwrap_or(3), c.delta, c.np, c.m)],
                    n_min,
                    n_max,
                    size_cap: limits.size_cap,
                    degree_offset,
                    oracle_sweep: (sweep_max_n.is_some() || sweep_instances > 0).then(|| OracleSweepConfig {
                        exhaustive_max_n: sweep_max_n.unwrap_or(0),
                        max_value: 3,
                        lemma1_instances: sweep_instances,
                        lemma1_max_n: 8,
                        bands: vec![(2, 3, 1), (2, 4, 0), (2, 4, 2), (2, 5, 1)],
                    }),
                },
            };
            experiment(&config)
        }
    }
}

fn critical_deleted(
    g: &Graph,
    vf: &VertexFuncs,
    p: ScenarioParams,
    method: Method,
    limits: &Limits,
) -> anyhow::Result<Outcome> {
    let (np, m) = (p.nprime as usize, p.m as usize);
    let brute = match method {
        Method::Brute | Method::Both => {
            limits.check(g.order())?;
            Some(is_critical_deleted_with(g, vf, np, m, limits)?)
        }
        Method::Criterion => None,
    };
    let criterion = match method {
        Method::Criterion | Method::Both => Some(check_lemma1_with(g, vf, np, m, limits)?),
        Method::Brute => None,
    };
    if let (Some(b), Some(c)) = (&brute, &criterion) {
        if b.holds != c.holds() {
            bail!("brute force ({}) and criterion ({}) disagree", b.holds, c.holds());
        }
    }
    let name = match method {
        Method::Brute => "brute",
        Method::Criterion => "criterion",
        Method::Both => "both",
    };
    let mut outcome = match (brute, &criterion) {
        (Some(b), _) => property_outcome("critical-deleted", p, b),
        (None, Some(c)) => {
            property_outcome("critical-deleted", p, PropertyOutcome { holds: c.holds(), counterexample: None })
        }
        (None, None) => unreachable!("some method runs"),
    };
    // Prefer the minimum-slack witness when the criterion ran.
    if let Some(w) = criterion.as_ref().and_then(|c| c.witness()) {
        let holds = outcome.report.verdict == VerdictLabel::Holds;
        outcome.report.witness = Some(WitnessReport::from(w));
        let counter = outcome.text.lines().find(|l| l.starts_with("removed")).map(|l| format!("{l}\n"));
        outcome.text = format!("{}{}{}", verdict_line(holds), counter.unwrap_or_default(), witness_text(w));
    }
    if let Some(obj) = outcome.report.details.as_object_mut() {
        obj.insert("method".into(), json!(name));
    }
    Ok(outcome)
}

fn theorem(path: &Path, c: &Common, which: TheoremId, verify: bool, limits: &Limits) -> anyhow::Result<Outcome> {
    let (graph, from_file) = read_input(path)?;
    let (Some(a), Some(b)) = (c.a, c.b) else {
        bail!("theorem needs the parameters --a and --b");
    };
    let p = ScenarioParams::new(a, b, c.delta, c.np, c.m);
    let vf = match from_file {
        Some(vf) => vf,
        None => VertexFuncs::constant(graph.order(), a, b)?,
    };
    let verdict = if verify {
        verify_implication(&graph, &vf, &p, which, limits)?
    } else {
        check_hypotheses(&graph, &vf, &p, which)?
    };
    let holds = verdict.hypotheses_hold && verdict.conclusion_checked != Some(false);
    let mut r = report("theorem", p, holds);
    let mut text = format!("{which}: hypotheses {}\n", if verdict.hypotheses_hold { "hold" } else { "fail" });
    for clause in &verdict.clauses {
        text += &format!("  {:<15} {}  {}\n", clause.name, if clause.holds { "ok  " } else { "FAIL" }, clause.detail);
    }
    if let Some(concl) = verdict.conclusion_checked {
        text += &format!("conclusion {:?}: {}\n", which.conclusion(), if concl { "true" } else { "false" });
    }
    if verdict.consistent == Some(false) {
        text += "INCONSISTENT: hypotheses hold but the conclusion fails\n";
    }
    if let Some(w) =
        verdict.counterexample.as_ref().and_then(|o| o.counterexample.as_ref()).and_then(|c| c.witness.as_ref())
    {
        text += &witness_text(w);
        r.witness = Some(WitnessReport::from(w));
    }
    r.details = serde_json::to_value(&verdict)?;
    Ok(Outcome { report: r, text })
}

fn extremal(
    c: &Common,
    family: Family,
    t: Option<u32>,
    out: Option<PathBuf>,
    with_funcs: bool,
) -> anyhow::Result<Outcome> {
    let Some(a) = c.a else {
        bail!("extremal needs --a");
    };
    if c.b.is_some_and(|b| b != a + c.delta) {
        bail!("the sharpness examples fix b = a + delta");
    }
    let (graph, funcs, params, expected, chains, expected_i, residual) = match family {
        Family::Critical => {
            let t = match t {
                Some(t) => t,
                None => CriticalSharpness::min_t(a, c.delta, c.np, c.m)?,
            };
            let s = CriticalSharpness::build(a, c.delta, c.np, c.m, t)?;
            let chains = s.chains()?;
            (s.graph, s.funcs, s.params, s.expected, chains, None, None)
        }
        Family::Id => {
            if c.np != 0 {
                bail!("the ID sharpness example has no n'");
            }
            let t = match t {
                Some(t) => t,
                None => IdSharpness::min_t(a, c.delta, c.m)?,
            };
            let s = IdSharpness::build(a, c.delta, c.m, t)?;
            let chains = s.chains()?;
            (s.graph, s.funcs, s.params, s.expected, chains, Some(s.expected_i), Some(s.residual))
        }
    };
    let witness_graph = residual.as_ref().unwrap_or(&graph);
    let witness_funcs = VertexFuncs::constant(witness_graph.order(), params.a, params.b)?;
    let slack = recompute_slack(witness_graph, &witness_funcs, &expected)?;
    let holds = chains.all_hold() && slack == -i64::from(params.a);
    if let Some(path) = &out {
        std::fs::write(path, write_graph_file(&graph, with_funcs.then_some(&funcs)))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let stats = graph.degree_stats();
    let mut r = report("extremal", params, holds);
    r.details = json!({
        "family": match family { Family::Critical => "critical", Family::Id => "id" },
        "order": graph.order(),
        "size": graph.size(),
        "min_degree": stats.min_degree,
        "sigma2": stats.sigma2.finite(),
        "max_pair": graph.min_max_pair_degree(),
        "chains": chains,
        "recomputed_slack": slack,
        "expected_i": expected_i.as_ref().map(|i| i.iter().map(|x| x + 1).collect::<Vec<_>>()),
        "residual_witness": residual.as_ref().map(|_| WitnessReport::from(&expected)),
    });
    let mut text = format!(
        "{}n = {}, |E| = {}, delta(G) = {}, sigma2 = {}\n",
        verdict_line(holds),
        graph.order(),
        graph.size(),
        stats.min_degree,
        stats.sigma2.finite().map_or("inf".to_string(), |s| s.to_string())
    );
    for (name, chain) in [("min-degree", chains.min_degree), ("max-pair", chains.max_pair), ("sigma2", chains.sigma2)] {
        text += &format!(
            "  {name:<10} {} vs {}: below {}, within one {}\n",
            chain.value, chain.threshold, chain.below, chain.within_one
        );
    }
    match &expected_i {
        None => {
            r.witness = Some(WitnessReport::from(&expected));
            text += &witness_text(&expected);
        }
        Some(i) => text += &format!("I = {}, in G - I: {}", set_text(i), witness_text(&expected)),
    }
    if let Some(path) = &out {
        text += &format!("wrote {}\n", path.display());
    }
    Ok(Outcome { report: r, text })
}

fn experiment(config: &BatchConfig) -> anyhow::Result<Outcome> {
    let result = run_batch(config)?;
    let sweep_ok = result.oracle_sweep.as_ref().is_none_or(|s| s.agreement());
    let holds = result.inconsistent == 0 && sweep_ok;
    let default_params = config.params.first().copied().unwrap_or_default();
    let mut r = report("experiment", default_params, holds);
    let mut text = format!("{}seed {}, {} trials per theorem\n", verdict_line(holds), result.seed, result.trials);
    for t in &result.theorems {
        text += &format!(
            "  {:<9} hypotheses held {:>4}, conclusion true {:>4}, inconsistent {}, skipped {}\n",
            t.theorem.to_string(),
            t.hypotheses_held,
            t.conclusion_true,
            t.inconsistent,
            t.skipped.len()
        );
    }
    text += &format!("near misses: {}\n", result.near_misses.len());
    if let Some(s) = &result.oracle_sweep {
        text += &format!(
            "oracle sweep: {} factor instances ({} disagreements), {} critical-deleted instances ({} disagreements)\n",
            s.factor_instances,
            s.factor_disagreements.len(),
            s.lemma1_instances,
            s.lemma1_disagreements.len()
        );
    }
    r.details = serde_json::to_value(result.without_timing())?;
    Ok(Outcome { report: r, text })
}
