//! Hypothesis predicates for the degree-condition theorems, evaluated in
//! exact integer arithmetic, and their pairing with the property checkers.
//!
//! Every threshold is a fraction `num / den` with `den > 0`; a comparison
//! `x ≥ num / den` is decided as `x · den ≥ num`, never in floating point.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::funcs::{ScenarioParams, VertexFuncs};
use crate::graph::{Graph, Sigma2};
use crate::limits::Limits;
use crate::properties::{is_critical_deleted_with, is_deleted_with, is_id_deleted_with, PropertyOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    Table2(u8),
    Table4(u8),
    Table5(u8),
    Table6(u8),
    Lemma2,
    Lemma3,
    Cor4,
    Cor5,
}

impl TheoremId {
    pub const ALL: [TheoremId; 22] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::Table2(1),
        TheoremId::Table2(2),
        TheoremId::Table2(3),
        TheoremId::Table4(1),
        TheoremId::Table4(2),
        TheoremId::Table4(3),
        TheoremId::Table5(1),
        TheoremId::Table5(2),
        TheoremId::Table5(3),
        TheoremId::Table6(1),
        TheoremId::Table6(2),
        TheoremId::Table6(3),
        TheoremId::Lemma2,
        TheoremId::Lemma3,
        TheoremId::Cor4,
        TheoremId::Cor5,
    ];

    pub fn conclusion(self) -> Conclusion {
        self.shape().conclusion
    }

    /// The structural description of the hypotheses.
    pub fn shape(self) -> Shape {
        use Condition::*;
        use TheoremId::*;
        let crit = |shift, condition, aux| Shape {
            conclusion: Conclusion::CriticalDeleted,
            family: Family::Critical,
            order_shift: shift,
            condition,
            aux,
            constant: false,
        };
        let id = |shift, condition, aux| Shape {
            conclusion: Conclusion::IdDeleted,
            family: Family::Id,
            order_shift: shift,
            condition,
            aux,
            constant: false,
        };
        let constant = |s: Shape| Shape { constant: true, ..s };
        let no_nprime = |s: Shape| Shape { conclusion: Conclusion::Deleted, ..s };
        match self {
            T1 => crit(-2, MinDegree, false),
            T2 => crit(-1, MaxPair, true),
            T3 => crit(-2, Sigma2, true),
            T4 => id(-2, MinDegree, false),
            T5 => id(-1, MaxPair, true),
            T6 => id(-2, Sigma2, true),
            Table2(r) => no_nprime(Self::row(r, [T1, T2, T3]).shape()),
            Table4(2) => constant(crit(-2, MaxPair, true)),
            Table4(r) => constant(Self::row(r, [T1, T2, T3]).shape()),
            Table5(r) => no_nprime(Table4(r).shape()),
            Table6(r) => constant(Self::row(r, [T4, T5, T6]).shape()),
            Lemma2 => crit(-2, Complete, false),
            Lemma3 => constant(Lemma2.shape()),
            Cor4 => no_nprime(Lemma2.shape()),
            Cor5 => no_nprime(Lemma3.shape()),
        }
    }

    fn row(r: u8, ids: [TheoremId; 3]) -> TheoremId {
        ids[usize::from(r.clamp(1, 3)) - 1]
    }

    fn is_valid(self) -> bool {
        match self {
            TheoremId::Table2(r) | TheoremId::Table4(r) | TheoremId::Table5(r) | TheoremId::Table6(r) => {
                (1..=3).contains(&r)
            }
            _ => true,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremId::T1 => f.write_str("T1"),
            TheoremId::T2 => f.write_str("T2"),
            TheoremId::T3 => f.write_str("T3"),
            TheoremId::T4 => f.write_str("T4"),
            TheoremId::T5 => f.write_str("T5"),
            TheoremId::T6 => f.write_str("T6"),
            TheoremId::Table2(r) => write!(f, "table2.{r}"),
            TheoremId::Table4(r) => write!(f, "table4.{r}"),
            TheoremId::Table5(r) => write!(f, "table5.{r}"),
            TheoremId::Table6(r) => write!(f, "table6.{r}"),
            TheoremId::Lemma2 => f.write_str("lemma2"),
            TheoremId::Lemma3 => f.write_str("lemma3"),
            TheoremId::Cor4 => f.write_str("cor4"),
            TheoremId::Cor5 => f.write_str("cor5"),
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let id = match lower.as_str() {
            "t1" => TheoremId::T1,
            "t2" => TheoremId::T2,
            "t3" => TheoremId::T3,
            "t4" => TheoremId::T4,
            "t5" => TheoremId::T5,
            "t6" => TheoremId::T6,
            "lemma2" => TheoremId::Lemma2,
            "lemma3" => TheoremId::Lemma3,
            "cor4" => TheoremId::Cor4,
            "cor5" => TheoremId::Cor5,
            other => {
                let parsed = other.strip_prefix("table").and_then(|rest| {
                    let (table, row) = rest.split_once('.')?;
                    let row: u8 = row.parse().ok()?;
                    match table {
                        "2" => Some(TheoremId::Table2(row)),
                        "4" => Some(TheoremId::Table4(row)),
                        "5" => Some(TheoremId::Table5(row)),
                        "6" => Some(TheoremId::Table6(row)),
                        _ => None,
                    }
                });
                match parsed {
                    Some(id) if id.is_valid() => id,
                    _ => return invalid(format!("unknown theorem id '{s}'")),
                }
            }
        };
        Ok(id)
    }
}

impl From<TheoremId> for String {
    fn from(id: TheoremId) -> String {
        id.to_string()
    }
}

impl TryFrom<String> for TheoremId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    CriticalDeleted,
    Deleted,
    IdDeleted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Thresholds built on `((b−Δ)n + (Δ+a)n') / (a+b)`.
    Critical,
    /// Thresholds built on `(b+a)n / (b+2a+Δ)`.
    Id,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    MinDegree,
    MaxPair,
    Sigma2,
    /// The graph itself must be complete.
    Complete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub conclusion: Conclusion,
    pub family: Family,
    /// `s` in the order bound factor `(b + a + 2m + s)`.
    pub order_shift: i64,
    pub condition: Condition,
    /// Whether an auxiliary minimum-degree clause is present.
    pub aux: bool,
    /// Whether `g ≡ a` and `f ≡ b` are required.
    pub constant: bool,
}

/// A rational threshold `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frac {
    pub num: i128,
    pub den: i128,
}

impl Frac {
    pub fn new(num: i128, den: i128) -> Option<Frac> {
        (den != 0).then(|| if den < 0 { Frac { num: -num, den: -den } } else { Frac { num, den } })
    }

    /// `x ≥ self`
    pub fn le_int(self, x: i128) -> bool {
        x * self.den >= self.num
    }

    /// `x > self`
    pub fn lt_int(self, x: i128) -> bool {
        x * self.den > self.num
    }

    pub fn scale(self, k: i128) -> Frac {
        Frac { num: self.num * k, den: self.den }
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The thresholds of a shape at concrete `(n, params)`.
#[derive(Debug, Clone, Copy)]
pub struct Thresholds {
    /// Exclusive lower bound on `n`.
    pub order: Option<Frac>,
    /// Lower bound for `δ` and the max-pair degree; `σ2` must reach twice this.
    pub degree: Option<Frac>,
    pub aux: Option<Frac>,
}

pub fn thresholds(shape: &Shape, n: usize, p: &ScenarioParams) -> Thresholds {
    let (a, b, d) = (i128::from(p.a), i128::from(p.b), i128::from(p.delta));
    let m = i128::from(p.m);
    let np = if shape.conclusion == Conclusion::CriticalDeleted { i128::from(p.nprime) } else { 0 };
    let n = n as i128;
    let shifted = b + a + 2 * m + i128::from(shape.order_shift);
    match shape.family {
        Family::Critical => Thresholds {
            order: Frac::new(shifted * (a + b) + np * (d + a), d + a),
            degree: Frac::new((b - d) * n + (d + a) * np, a + b),
            aux: Frac::new((m + np) * (d + a) + b * (b - d), d + a),
        },
        Family::Id => {
            let wide = b + 2 * a + d;
            Thresholds {
                order: Frac::new(shifted * wide, d + a),
                degree: Frac::new((b + a) * n, wide),
                aux: Frac::new((d + a) * (d + a) * n + b * (b - d) * wide + m * wide * (d + a), wide * (d + a)),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Clause {
    fn new(name: &str, holds: bool, detail: String) -> Clause {
        Clause { name: name.to_string(), holds, detail }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub params: ScenarioParams,
    pub clauses: Vec<Clause>,
    pub hypotheses_hold: bool,
    pub conclusion_checked: Option<bool>,
    /// `hypotheses ⇒ conclusion`; `Some(false)` contradicts the theorem.
    pub consistent: Option<bool>,
    pub counterexample: Option<PropertyOutcome>,
}

impl TheoremVerdict {
    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn failing_clauses(&self) -> Vec<&str> {
        self.clauses.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect()
    }
}

fn describe(value: impl fmt::Display, op: &str, bound: Option<Frac>) -> String {
    match bound {
        Some(b) => format!("{value} {op} {b}"),
        None => format!("{value} {op} undefined (zero denominator)"),
    }
}

/// Evaluates every hypothesis clause of `which` on a concrete instance.
pub fn check_hypotheses(g: &Graph, vf: &VertexFuncs, p: &ScenarioParams, which: TheoremId) -> Result<TheoremVerdict> {
    if !which.is_valid() {
        return invalid(format!("unknown theorem id '{which}'"));
    }
    vf.ensure_order(g.order())?;
    let shape = which.shape();
    let n = g.order();
    let th = thresholds(&shape, n, p);
    let stats = g.degree_stats();
    let delta_min = stats.min_degree as i128;
    let mut clauses = Vec::new();

    clauses.push(Clause::new(
        "standing",
        p.is_standing(),
        format!("b - delta = {} >= a = {} >= 2", i64::from(p.b) - i64::from(p.delta), p.a),
    ));
    clauses.push(Clause::new(
        "band",
        vf.in_band(p),
        format!("{} <= g(x) <= f(x) - {} <= {} - {}", p.a, p.delta, p.b, p.delta),
    ));
    if shape.constant {
        clauses.push(Clause::new(
            "constant",
            vf.as_constant() == Some((p.a, p.b)),
            format!("g = {}, f = {} at every vertex", p.a, p.b),
        ));
    }
    clauses.push(Clause::new("order", th.order.is_some_and(|t| t.lt_int(n as i128)), describe(n, ">", th.order)));
    if shape.aux {
        clauses.push(Clause::new(
            "aux-min-degree",
            th.aux.is_some_and(|t| t.le_int(delta_min)),
            describe(delta_min, ">=", th.aux),
        ));
    }
    let degree = th.degree;
    let clause = match shape.condition {
        Condition::MinDegree => {
            Clause::new("min-degree", degree.is_some_and(|t| t.le_int(delta_min)), describe(delta_min, ">=", degree))
        }
        Condition::MaxPair => match g.min_max_pair_degree() {
            None => Clause::new("max-pair", true, "no nonadjacent pair".into()),
            Some(v) => Clause::new("max-pair", degree.is_some_and(|t| t.le_int(v as i128)), describe(v, ">=", degree)),
        },
        Condition::Sigma2 => match stats.sigma2 {
            Sigma2::Infinite => Clause::new("sigma2", true, "no nonadjacent pair".into()),
            Sigma2::Finite(s) => {
                let twice = degree.map(|t| t.scale(2));
                Clause::new("sigma2", twice.is_some_and(|t| t.le_int(s as i128)), describe(s, ">=", twice))
            }
        },
        Condition::Complete => {
            Clause::new("complete", g.is_complete(), format!("{} of {} edges", g.size(), n * n.saturating_sub(1) / 2))
        }
    };
    clauses.push(clause);

    let hypotheses_hold = clauses.iter().all(|c| c.holds);
    Ok(TheoremVerdict {
        theorem: which,
        params: *p,
        clauses,
        hypotheses_hold,
        conclusion_checked: None,
        consistent: None,
        counterexample: None,
    })
}

/// Runs the conclusion's property checker on the instance.
pub fn check_conclusion(
    g: &Graph,
    vf: &VertexFuncs,
    p: &ScenarioParams,
    conclusion: Conclusion,
    limits: &Limits,
) -> Result<PropertyOutcome> {
    let m = p.m as usize;
    match conclusion {
        Conclusion::CriticalDeleted => is_critical_deleted_with(g, vf, p.nprime as usize, m, limits),
        Conclusion::Deleted => is_deleted_with(g, vf, m, limits),
        Conclusion::IdDeleted => is_id_deleted_with(g, vf, m, limits),
    }
}

/// Checks the hypotheses and, unless the standing hypothesis `b − Δ ≥ a ≥ 2`
/// fails, the conclusion by brute force.
pub fn verify_implication(
    g: &Graph,
    vf: &VertexFuncs,
    p: &ScenarioParams,
    which: TheoremId,
    limits: &Limits,
) -> Result<TheoremVerdict> {
    let mut verdict = check_hypotheses(g, vf, p, which)?;
    if !p.is_standing() {
        return Ok(verdict);
    }
    limits.check(g.order())?;
    let outcome = check_conclusion(g, vf, p, which.conclusion(), limits)?;
    verdict.conclusion_checked = Some(outcome.holds);
    verdict.consistent = Some(!verdict.hypotheses_hold || outcome.holds);
    if !outcome.holds {
        verdict.counterexample = Some(outcome);
    }
    Ok(verdict)
}
