//! Corpus ingestion, bound specifications, exhaustive verification against
//! the exact solver, caching, and report emission.
//!
//! A [`TheoremSpec`] is a freeness precondition (plus an optional diameter
//! constraint) and a cop-number cap; [`verify_theorem`] streams graphs,
//! filters by the precondition, computes exact cop numbers (cache
//! assisted), and collects violations, extremal witnesses, and strategy
//! divergences. Conjecture probes use the same machinery and never assert
//! truth: a violation is a first-class result, not a failure of the
//! harness.

pub mod cache;
pub mod corpus;
pub mod report;

use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{cop_number, SolveError};
use crate::graph::{Graph, GraphError};
use crate::graph6::emit_graph6;
use crate::pattern::{is_family_free, make_pattern, Pattern, PatternError, PatternKind};
use crate::strategy::{default_budget, run_match, GuardPrefix, MatchError, MatchOutcome, RobberPolicy, Strategy};

pub use cache::CopNumberCache;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("i/o error at line {line}: {source}")]
    Io { line: usize, source: std::io::Error },
    #[error("graph6 parse error at line {line}: {source}")]
    Parse { line: usize, source: GraphError },
    #[error("bad harness argument: {0}")]
    Argument(String),
    #[error("could not satisfy the request after {attempts} attempts: {detail}")]
    CannotSatisfy { attempts: usize, detail: String },
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Match(#[from] MatchError),
}

/// Bound specifications: the statements under test, keyed the way the
/// workbench names them everywhere (CLI, reports, tests).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecId {
    /// P_k-free implies at most k-2 cops.
    T1 { k: usize },
    /// {H1(l), H2(l)}-free implies at most l+1 cops.
    T2 { l: usize },
    /// {P_k, claw}-free implies at most k-3 cops.
    T3 { k: usize },
    /// {P_k, C_l}-free implies at most k-3 cops.
    C1 { k: usize, l: usize },
    /// Linear-forest-free implies at most (sum of parts) - 2 cops.
    T4 { parts: Vec<usize> },
    /// {2P2, house}-free implies at most 2 cops.
    T5,
    /// 2P2-free with diameter exactly 3 implies at most 2 cops.
    L1,
    /// (P1+Pk)-free implies at most k-1 cops.
    PR1 { k: usize },
    /// (P2+Pk)-free implies at most k cops.
    PR2 { k: usize },
    /// Probe: P5-free implies at most 2 cops.
    Conj1,
    /// Probe: 2P2-free implies at most 2 cops.
    Conj2,
}

impl SpecId {
    pub fn code(&self) -> &'static str {
        match self {
            SpecId::T1 { .. } => "T1",
            SpecId::T2 { .. } => "T2",
            SpecId::T3 { .. } => "T3",
            SpecId::C1 { .. } => "C1",
            SpecId::T4 { .. } => "T4",
            SpecId::T5 => "T5",
            SpecId::L1 => "L1",
            SpecId::PR1 { .. } => "PR1",
            SpecId::PR2 { .. } => "PR2",
            SpecId::Conj1 => "CONJ1",
            SpecId::Conj2 => "CONJ2",
        }
    }

    pub fn params(&self) -> String {
        match self {
            SpecId::T1 { k } | SpecId::T3 { k } | SpecId::PR1 { k } | SpecId::PR2 { k } => format!("k={k}"),
            SpecId::T2 { l } => format!("l={l}"),
            SpecId::C1 { k, l } => format!("k={k} l={l}"),
            SpecId::T4 { parts } => format!(
                "forest={}",
                parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+")
            ),
            SpecId::T5 | SpecId::L1 | SpecId::Conj1 | SpecId::Conj2 => String::new(),
        }
    }

    /// Builds a SpecId from the CLI pieces.
    pub fn from_cli(
        code: &str,
        k: Option<usize>,
        l: Option<usize>,
        forest: Option<&[usize]>,
    ) -> Result<SpecId, HarnessError> {
        let need_k = || k.ok_or_else(|| HarnessError::Argument(format!("spec {code} needs --k")));
        let need_l = || l.ok_or_else(|| HarnessError::Argument(format!("spec {code} needs --l")));
        Ok(match code {
            "T1" => SpecId::T1 { k: need_k()? },
            "T2" => SpecId::T2 { l: need_l()? },
            "T3" => SpecId::T3 { k: need_k()? },
            "C1" => SpecId::C1 { k: need_k()?, l: need_l()? },
            "T4" => SpecId::T4 {
                parts: forest
                    .ok_or_else(|| HarnessError::Argument("spec T4 needs --forest".into()))?
                    .to_vec(),
            },
            "T5" => SpecId::T5,
            "L1" => SpecId::L1,
            "PR1" => SpecId::PR1 { k: need_k()? },
            "PR2" => SpecId::PR2 { k: need_k()? },
            "CONJ1" => SpecId::Conj1,
            "CONJ2" => SpecId::Conj2,
            other => return Err(HarnessError::Argument(format!("unknown spec id {other:?}"))),
        })
    }
}

/// A freeness precondition, a bound, and (for the constructive results)
/// the extracted strategy.
#[derive(Debug)]
pub struct TheoremSpec {
    id: SpecId,
    patterns: Vec<Pattern>,
    diameter_exactly: Option<u32>,
    bound: usize,
    strategy: Option<Strategy>,
}

impl TheoremSpec {
    pub fn new(id: SpecId) -> Result<TheoremSpec, HarnessError> {
        let mk = |kind: PatternKind| make_pattern(kind).map_err(HarnessError::from);
        let bad = |msg: String| Err(HarnessError::Argument(msg));
        let (patterns, diameter_exactly, bound, strategy) = match &id {
            SpecId::T1 { k } => {
                if *k < 3 {
                    return bad(format!("T1 needs k >= 3, got {k}"));
                }
                (vec![mk(PatternKind::Path(*k))?], None, k - 2, Some(Strategy::path_push(*k).unwrap()))
            }
            SpecId::T2 { l } => {
                if *l < 1 {
                    return bad(format!("T2 needs l >= 1, got {l}"));
                }
                (
                    vec![mk(PatternKind::H1(*l))?, mk(PatternKind::H2(*l))?],
                    None,
                    l + 1,
                    Some(Strategy::cycle_trap(*l).unwrap()),
                )
            }
            SpecId::T3 { k } => {
                if *k < 5 {
                    return bad(format!("T3 needs k >= 5, got {k}"));
                }
                (
                    vec![mk(PatternKind::Path(*k))?, mk(PatternKind::Claw)?],
                    None,
                    k - 3,
                    Some(Strategy::claw_cycle(*k).unwrap()),
                )
            }
            SpecId::C1 { k, l } => {
                if *k < 5 || *l < 3 || *l > *k {
                    return bad(format!("C1 needs k >= 5 and 3 <= l <= k, got k={k} l={l}"));
                }
                (
                    vec![mk(PatternKind::Path(*k))?, mk(PatternKind::Cycle(*l))?],
                    None,
                    k - 3,
                    None,
                )
            }
            SpecId::T4 { parts } => {
                let total: usize = parts.iter().sum();
                if parts.len() < 2 || parts.iter().any(|&p| p < 1) || parts.iter().all(|&p| p < 3) {
                    return bad(format!(
                        "T4 needs at least two parts, each >= 1, one >= 3; got {parts:?}"
                    ));
                }
                (vec![mk(PatternKind::LinearForest(parts.clone()))?], None, total - 2, None)
            }
            SpecId::T5 => (
                vec![mk(PatternKind::LinearForest(vec![2, 2]))?, mk(PatternKind::CoP5)?],
                None,
                2,
                Some(Strategy::house_two_cop()),
            ),
            SpecId::L1 => (vec![mk(PatternKind::LinearForest(vec![2, 2]))?], Some(3), 2, None),
            SpecId::PR1 { k } => {
                if *k < 3 {
                    return bad(format!("PR1 needs k >= 3, got {k}"));
                }
                (
                    vec![mk(PatternKind::LinearForest(vec![1, *k]))?],
                    None,
                    k - 1,
                    Some(Strategy::guard_recurse(GuardPrefix::Vertex, *k).unwrap()),
                )
            }
            SpecId::PR2 { k } => {
                if *k < 3 {
                    return bad(format!("PR2 needs k >= 3, got {k}"));
                }
                (
                    vec![mk(PatternKind::LinearForest(vec![2, *k]))?],
                    None,
                    *k,
                    Some(Strategy::guard_recurse(GuardPrefix::Edge, *k).unwrap()),
                )
            }
            SpecId::Conj1 => (vec![mk(PatternKind::Path(5))?], None, 2, None),
            SpecId::Conj2 => (vec![mk(PatternKind::LinearForest(vec![2, 2]))?], None, 2, None),
        };
        Ok(TheoremSpec { id, patterns, diameter_exactly, bound, strategy })
    }

    pub fn id(&self) -> &SpecId {
        &self.id
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn strategy(&self) -> Option<&Strategy> {
        self.strategy.as_ref()
    }

    /// Precondition: family-freeness plus the optional diameter
    /// constraint. Disconnected graphs never match.
    pub fn matches(&self, g: &Graph) -> Result<bool, HarnessError> {
        if let Some(d) = self.diameter_exactly {
            match g.diameter() {
                Ok(got) if got == d => {}
                _ => return Ok(false),
            }
        }
        Ok(is_family_free(g, &self.patterns)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Violation {
    pub graph6: String,
    pub cop_number: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Divergence {
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub spec: String,
    pub params: String,
    pub bound: usize,
    pub graphs_seen: usize,
    pub disconnected_skipped: usize,
    pub matching: usize,
    pub verified: bool,
    pub violations: Vec<Violation>,
    pub divergences: Vec<Divergence>,
    pub extremal_witnesses: Vec<String>,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub with_strategy: bool,
}

/// Streams graphs through a spec: connected graphs matching the
/// precondition get an exact cop number (cache assisted) compared against
/// the bound; disconnected inputs are counted and skipped, never silently
/// dropped. With `with_strategy`, the linked strategy plays the optimal
/// robber on every matching host and anything short of capture is
/// recorded as a divergence.
pub fn verify_theorem<I>(
    spec: &TheoremSpec,
    graphs: I,
    cache: &mut CopNumberCache,
    opts: &VerifyOptions,
) -> Result<VerificationReport, HarnessError>
where
    I: IntoIterator<Item = Result<(usize, Graph), HarnessError>>,
{
    let started = Instant::now();
    let batch: Vec<(usize, Graph)> = graphs.into_iter().collect::<Result<_, _>>()?;
    let graphs_seen = batch.len();

    // precondition filtering fans out; the report accumulator is
    // order-insensitive because every list is sorted at the end
    type Screened = (Graph, String, bool, bool);
    let screened: Vec<Result<Screened, HarnessError>> = batch
        .into_par_iter()
        .map(|(_line, g)| {
            let connected = g.is_connected();
            let matching = connected && spec.matches(&g)?;
            let g6 = emit_graph6(&g);
            Ok((g, g6, connected, matching))
        })
        .collect();

    let mut disconnected_skipped = 0usize;
    let mut work = Vec::new();
    for item in screened {
        let (g, g6, connected, matching) = item?;
        if !connected {
            disconnected_skipped += 1;
            continue;
        }
        if matching {
            work.push((g, g6));
        }
    }
    let matching = work.len();

    let cache = Mutex::new(cache);
    type Outcome = (String, usize, Option<String>);
    let results: Vec<Result<Outcome, HarnessError>> = work
        .into_par_iter()
        .map(|(g, g6)| {
            let cached = cache.lock().unwrap().lookup(&g6);
            let c = match cached {
                Some(c) => c,
                None => {
                    let c = cop_number(&g)?;
                    cache.lock().unwrap().store(&g6, c)?;
                    c
                }
            };
            let divergence = if opts.with_strategy {
                spec.strategy().and_then(|s| play_out(&g, s))
            } else {
                None
            };
            Ok((g6, c, divergence))
        })
        .collect();

    let mut violations = Vec::new();
    let mut divergences = Vec::new();
    let mut extremal = Vec::new();
    for item in results {
        let (g6, c, divergence) = item?;
        if c > spec.bound() {
            violations.push(Violation { graph6: g6.clone(), cop_number: c, bound: spec.bound() });
        } else if c == spec.bound() {
            extremal.push(g6.clone());
        }
        if let Some(reason) = divergence {
            divergences.push(Divergence { graph6: g6, reason });
        }
    }
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    divergences.sort_by(|a, b| (&a.graph6, &a.reason).cmp(&(&b.graph6, &b.reason)));
    extremal.sort();

    Ok(VerificationReport {
        spec: spec.id().code().to_string(),
        params: spec.id().params(),
        bound: spec.bound(),
        graphs_seen,
        disconnected_skipped,
        matching,
        verified: violations.is_empty(),
        violations,
        divergences,
        extremal_witnesses: extremal,
        wall_ms: started.elapsed().as_millis() as u64,
    })
}

/// Plays a bound's linked strategy against the optimal robber; `None` means
/// clean capture, anything else is the divergence reason.
fn play_out(g: &Graph, s: &Strategy) -> Option<String> {
    let k = s.required_cops(g);
    let budget = default_budget(g, k);
    match run_match(g, s, &RobberPolicy::Optimal, budget) {
        Ok(r) => match r.outcome {
            MatchOutcome::Captured { .. } => None,
            MatchOutcome::BudgetExhausted => Some(format!("budget exhausted after {budget} rounds")),
        },
        Err(e) => Some(format!("{e}")),
    }
}
