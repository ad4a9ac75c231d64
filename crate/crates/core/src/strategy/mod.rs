//! Executable cop strategies extracted from constructive proofs, and a
//! match runner that plays them against adversarial robbers.
//!
//! A strategy is a value; per-match state lives in a [`Memory`] created by
//! `init` and threaded through `step`. Strategies emit per-cop positions
//! (identity-indexed), the runner canonicalizes to multisets for the
//! transcript and checks move legality every half-move.

mod guard;
mod house;
mod push;

pub use guard::GuardMemory;
pub use house::{HouseMemory, HousePartition};
pub use push::{PursuitMemory, PursuitPhase};

use thiserror::Error;

use crate::game::{multiset_count, solve, Configuration, Side, SolveError, SolveTable};
use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum MatchError {
    #[error("match graph must be connected")]
    NotConnected,
    #[error("bad match argument: {0}")]
    Argument(String),
    #[error("strategy fault at round {round}: {detail}")]
    StrategyFault { round: u32, detail: String },
    #[error("robber policy fault at round {round}: {detail}")]
    RobberFault { round: u32, detail: String },
    #[error("precondition violation at round {round}: {reason} (witness {witness:?})")]
    PreconditionViolation { round: u32, reason: String, witness: Vec<usize> },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Errors raised inside a strategy; the runner stamps the round on them.
#[derive(Debug, Error)]
pub enum StrategyError {
    #[error("bad strategy argument: {0}")]
    Argument(String),
    #[error("strategy internal fault: {0}")]
    Fault(String),
    #[error("host violates the strategy precondition: {reason} (witness {witness:?})")]
    PreconditionViolation { reason: String, witness: Vec<usize> },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuardPrefix {
    Vertex,
    Edge,
}

/// The cop strategies extracted from the constructive proofs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// Blob approach plus peel-and-push along an induced path; k-2 cops,
    /// intended for hosts with no induced path on k vertices.
    PathPush { k: usize },
    /// l pushers force a unique escape trail; an extra cop parks on the
    /// trail's cycle closure. l+1 cops.
    CycleTrap { l: usize },
    /// Push machinery on an induced path of k-1 vertices; on the forced
    /// cycle closure the rear cop returns to the path start. k-3 cops.
    ClawCycle { k: usize },
    /// Guards pinned on a vertex (or an edge) confine the robber to a
    /// component that is path-free; the rest push inside it.
    GuardRecurse { prefix: GuardPrefix, k: usize },
    /// Two cops on the internal vertices of an induced P4, then the
    /// private/common-neighborhood case analysis.
    HouseTwoCop,
}

/// Per-match strategy state.
#[derive(Debug)]
pub enum Memory {
    Pursuit(PursuitMemory),
    Guard(GuardMemory),
    House(HouseMemory),
}

impl Memory {
    fn drain_notes(&mut self) -> Vec<String> {
        match self {
            Memory::Pursuit(m) => std::mem::take(&mut m.notes),
            Memory::Guard(m) => std::mem::take(&mut m.notes),
            Memory::House(m) => std::mem::take(&mut m.notes),
        }
    }
}

impl Strategy {
    pub fn path_push(k: usize) -> Result<Strategy, StrategyError> {
        if k < 3 {
            return Err(StrategyError::Argument(format!("path push needs k >= 3, got {k}")));
        }
        Ok(Strategy::PathPush { k })
    }

    pub fn cycle_trap(l: usize) -> Result<Strategy, StrategyError> {
        if l < 1 {
            return Err(StrategyError::Argument(format!("cycle trap needs l >= 1, got {l}")));
        }
        Ok(Strategy::CycleTrap { l })
    }

    pub fn claw_cycle(k: usize) -> Result<Strategy, StrategyError> {
        if k < 5 {
            return Err(StrategyError::Argument(format!("claw cycle needs k >= 5, got {k}")));
        }
        Ok(Strategy::ClawCycle { k })
    }

    pub fn guard_recurse(prefix: GuardPrefix, k: usize) -> Result<Strategy, StrategyError> {
        if k < 3 {
            return Err(StrategyError::Argument(format!("guarded recursion needs k >= 3, got {k}")));
        }
        Ok(Strategy::GuardRecurse { prefix, k })
    }

    pub fn house_two_cop() -> Strategy {
        Strategy::HouseTwoCop
    }

    /// CLI-facing names: path_push(4), cycle_trap(1), claw_cycle(5),
    /// guard_vertex(4), guard_edge(3), house.
    pub fn parse_name(s: &str) -> Result<Strategy, StrategyError> {
        let s = s.trim();
        if s == "house" {
            return Ok(Strategy::HouseTwoCop);
        }
        for (prefix, build) in [
            ("path_push", 0usize),
            ("cycle_trap", 1),
            ("claw_cycle", 2),
            ("guard_vertex", 3),
            ("guard_edge", 4),
        ] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let arg = rest
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| StrategyError::Argument(format!("malformed strategy name {s:?}")))?;
                let v: usize = arg
                    .parse()
                    .map_err(|_| StrategyError::Argument(format!("malformed strategy parameter in {s:?}")))?;
                return match build {
                    0 => Strategy::path_push(v),
                    1 => Strategy::cycle_trap(v),
                    2 => Strategy::claw_cycle(v),
                    3 => Strategy::guard_recurse(GuardPrefix::Vertex, v),
                    _ => Strategy::guard_recurse(GuardPrefix::Edge, v),
                };
            }
        }
        Err(StrategyError::Argument(format!("unknown strategy name {s:?}")))
    }

    pub fn name(&self) -> String {
        match self {
            Strategy::PathPush { k } => format!("path_push({k})"),
            Strategy::CycleTrap { l } => format!("cycle_trap({l})"),
            Strategy::ClawCycle { k } => format!("claw_cycle({k})"),
            Strategy::GuardRecurse { prefix: GuardPrefix::Vertex, k } => format!("guard_vertex({k})"),
            Strategy::GuardRecurse { prefix: GuardPrefix::Edge, k } => format!("guard_edge({k})"),
            Strategy::HouseTwoCop => "house".to_string(),
        }
    }

    pub fn required_cops(&self, _g: &Graph) -> usize {
        match self {
            Strategy::PathPush { k } => k - 2,
            Strategy::CycleTrap { l } => l + 1,
            Strategy::ClawCycle { k } => k - 3,
            Strategy::GuardRecurse { prefix: GuardPrefix::Vertex, k } => k - 1,
            Strategy::GuardRecurse { prefix: GuardPrefix::Edge, k } => *k,
            Strategy::HouseTwoCop => 2,
        }
    }

    /// Opening per-cop positions plus fresh match memory.
    pub fn init(&self, g: &Graph) -> Result<(Vec<usize>, Memory), StrategyError> {
        match self {
            Strategy::PathPush { .. } => {
                let cops = self.required_cops(g);
                let (opening, mem) = push::init_push(g, cops, push::ClosurePolicy::Restart);
                Ok((opening, Memory::Pursuit(mem)))
            }
            Strategy::CycleTrap { l } => {
                let (opening, mem) = push::init_trap(g, *l);
                Ok((opening, Memory::Pursuit(mem)))
            }
            Strategy::ClawCycle { k } => {
                let (opening, mem) = push::init_push(g, k - 3, push::ClosurePolicy::PinToStart);
                Ok((opening, Memory::Pursuit(mem)))
            }
            Strategy::GuardRecurse { prefix, k } => {
                let (opening, mem) = guard::init(g, *prefix, *k)?;
                Ok((opening, Memory::Guard(mem)))
            }
            Strategy::HouseTwoCop => {
                let (opening, mem) = house::init(g)?;
                Ok((opening, Memory::House(mem)))
            }
        }
    }

    /// Computes the cop reply; `cops` holds per-cop positions and is
    /// updated in place.
    pub fn step(
        &self,
        g: &Graph,
        mem: &mut Memory,
        cops: &mut [usize],
        robber: usize,
    ) -> Result<(), StrategyError> {
        match (self, mem) {
            (Strategy::PathPush { .. } | Strategy::ClawCycle { .. }, Memory::Pursuit(m)) => {
                push::step(g, m, cops, robber);
                Ok(())
            }
            (Strategy::CycleTrap { .. }, Memory::Pursuit(m)) => {
                push::step_with_trap(g, m, cops, robber);
                Ok(())
            }
            (Strategy::GuardRecurse { .. }, Memory::Guard(m)) => guard::step(g, m, cops, robber),
            (Strategy::HouseTwoCop, Memory::House(m)) => house::step(g, m, cops, robber),
            _ => Err(StrategyError::Fault("memory kind does not match the strategy".into())),
        }
    }
}

/// Robber policies for the match runner. `Optimal` solves the game at the
/// strategy's cop count and plays the table; `GreedyDistance` maximizes
/// the minimum distance to any cop (least vertex on ties); `Scripted`
/// replays a fixed placement and move list, then stays.
#[derive(Debug, Clone)]
pub enum RobberPolicy {
    Optimal,
    GreedyDistance,
    Scripted { placement: usize, moves: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchOutcome {
    Captured { round: u32 },
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveSide {
    Place,
    Robber,
    Cop,
}

impl std::fmt::Display for MoveSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MoveSide::Place => "place",
            MoveSide::Robber => "robber",
            MoveSide::Cop => "cop",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptEntry {
    pub round: u32,
    pub side: MoveSide,
    /// Sorted cop multiset after the half-move.
    pub cops: Vec<usize>,
    pub robber: usize,
}

#[derive(Debug)]
pub struct MatchResult {
    pub strategy: String,
    pub cop_count: usize,
    pub outcome: MatchOutcome,
    pub transcript: Vec<TranscriptEntry>,
    pub notes: Vec<String>,
}

impl MatchResult {
    /// One line per half-move, "round;side;cops;robber".
    pub fn export_transcript(&self) -> String {
        format_transcript(&self.transcript)
    }
}

/// The transcript export format: one "round;side;cops;robber" line per
/// half-move.
pub fn format_transcript(entries: &[TranscriptEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        let cops = e.cops.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        out.push_str(&format!("{};{};{};{}\n", e.round, e.side, cops, e.robber));
    }
    out
}

/// Default play-out budget: twice the configuration count at cop count k.
pub fn default_budget(g: &Graph, k: usize) -> u64 {
    let states = multiset_count(g.vertex_count(), k)
        .saturating_mul(g.vertex_count() as u128 * 2)
        .min(u64::MAX as u128) as u64;
    states.saturating_mul(2).max(16)
}

/// Plays cop placement, adversarial robber placement, then alternating
/// rounds (robber first: the table quantifies robber-to-move entries)
/// until capture or the round budget runs out.
pub fn run_match(
    g: &Graph,
    strategy: &Strategy,
    robber: &RobberPolicy,
    budget: u64,
) -> Result<MatchResult, MatchError> {
    if !g.is_connected() {
        return Err(MatchError::NotConnected);
    }
    let k = strategy.required_cops(g);
    if k == 0 {
        return Err(MatchError::Argument(format!("strategy {} fields no cops", strategy.name())));
    }

    let (mut cops, mut mem) = strategy.init(g).map_err(|e| stamp(e, 0))?;
    if cops.len() != k || cops.iter().any(|&v| v >= g.vertex_count()) {
        return Err(MatchError::StrategyFault { round: 0, detail: "invalid opening positions".into() });
    }
    let mut notes = mem.drain_notes();

    let table: Option<SolveTable> = match robber {
        RobberPolicy::Optimal => Some(solve(g, k)?),
        _ => None,
    };

    let multiset = |cops: &[usize]| {
        let mut m = cops.to_vec();
        m.sort_unstable();
        m
    };

    let mut r = match robber {
        RobberPolicy::Optimal => table.as_ref().unwrap().adversarial_placement(&cops)?,
        RobberPolicy::GreedyDistance => greedy_placement(g, &cops),
        RobberPolicy::Scripted { placement, .. } => {
            if *placement >= g.vertex_count() {
                return Err(MatchError::RobberFault { round: 0, detail: "placement out of range".into() });
            }
            *placement
        }
    };
    let mut transcript = vec![TranscriptEntry { round: 0, side: MoveSide::Place, cops: multiset(&cops), robber: r }];
    if multiset(&cops).contains(&r) {
        return Ok(MatchResult {
            strategy: strategy.name(),
            cop_count: k,
            outcome: MatchOutcome::Captured { round: 0 },
            transcript,
            notes,
        });
    }

    let mut script_at = 0usize;
    for round in 1..=budget {
        let round = round.min(u32::MAX as u64) as u32;
        // robber half-move
        let r1 = match robber {
            RobberPolicy::Optimal => table
                .as_ref()
                .unwrap()
                .optimal_robber_move(&Configuration::new(cops.clone(), r, Side::Robber))?,
            RobberPolicy::GreedyDistance => greedy_move(g, &cops, r),
            RobberPolicy::Scripted { moves, .. } => {
                let mv = moves.get(script_at).copied().unwrap_or(r);
                script_at += 1;
                mv
            }
        };
        if r1 != r && !g.has_edge(r, r1) {
            return Err(MatchError::RobberFault {
                round,
                detail: format!("robber move {r} -> {r1} is not along an edge"),
            });
        }
        r = r1;
        transcript.push(TranscriptEntry { round, side: MoveSide::Robber, cops: multiset(&cops), robber: r });
        if cops.contains(&r) {
            return Ok(MatchResult {
                strategy: strategy.name(),
                cop_count: k,
                outcome: MatchOutcome::Captured { round },
                transcript,
                notes,
            });
        }

        // cop half-move
        let before = cops.clone();
        strategy.step(g, &mut mem, &mut cops, r).map_err(|e| stamp(e, round))?;
        notes.extend(mem.drain_notes());
        if cops.len() != before.len() {
            return Err(MatchError::StrategyFault { round, detail: "cop count changed".into() });
        }
        for (i, (&f, &t)) in before.iter().zip(cops.iter()).enumerate() {
            if t >= g.vertex_count() || (f != t && !g.has_edge(f, t)) {
                return Err(MatchError::StrategyFault {
                    round,
                    detail: format!("cop {i} move {f} -> {t} is not stay-or-step"),
                });
            }
        }
        transcript.push(TranscriptEntry { round, side: MoveSide::Cop, cops: multiset(&cops), robber: r });
        if cops.contains(&r) {
            return Ok(MatchResult {
                strategy: strategy.name(),
                cop_count: k,
                outcome: MatchOutcome::Captured { round },
                transcript,
                notes,
            });
        }
    }
    Ok(MatchResult {
        strategy: strategy.name(),
        cop_count: k,
        outcome: MatchOutcome::BudgetExhausted,
        transcript,
        notes,
    })
}

fn stamp(e: StrategyError, round: u32) -> MatchError {
    match e {
        StrategyError::PreconditionViolation { reason, witness } => {
            MatchError::PreconditionViolation { round, reason, witness }
        }
        StrategyError::Argument(a) => MatchError::Argument(a),
        StrategyError::Fault(d) => MatchError::StrategyFault { round, detail: d },
        StrategyError::Solve(s) => MatchError::Solve(s),
    }
}

fn greedy_placement(g: &Graph, cops: &[usize]) -> usize {
    let dist: Vec<Vec<u32>> = cops.iter().map(|&c| g.bfs_distances(c)).collect();
    (0..g.vertex_count())
        .max_by_key(|&r| (dist.iter().map(|d| d[r]).min().unwrap(), std::cmp::Reverse(r)))
        .expect("graph has vertices")
}

fn greedy_move(g: &Graph, cops: &[usize], r: usize) -> usize {
    let dist: Vec<Vec<u32>> = cops.iter().map(|&c| g.bfs_distances(c)).collect();
    let mut best = r;
    let mut best_d = dist.iter().map(|d| d[r]).min().unwrap();
    let mut bits = g.row(r);
    while bits != 0 {
        let w = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = dist.iter().map(|d| d[w]).min().unwrap();
        if d > best_d || (d == best_d && w < best) {
            best = w;
            best_d = d;
        }
    }
    // prefer staying when tied: re-check explicitly
    let stay_d = dist.iter().map(|d| d[r]).min().unwrap();
    if stay_d > best_d || (stay_d == best_d && r < best) {
        best = r;
    }
    best
}

/// Legality of a multiset team move: some matching of old pieces to new
/// positions with each piece staying or stepping along an edge.
pub fn multiset_move_legal(g: &Graph, from: &[usize], to: &[usize]) -> bool {
    if from.len() != to.len() {
        return false;
    }
    fn matching(g: &Graph, from: &[usize], to: &[usize], i: usize, used: &mut Vec<bool>) -> bool {
        if i == from.len() {
            return true;
        }
        for j in 0..to.len() {
            if !used[j] && (from[i] == to[j] || g.has_edge(from[i], to[j])) {
                used[j] = true;
                if matching(g, from, to, i + 1, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    let mut used = vec![false; to.len()];
    matching(g, from, to, 0, &mut used)
}

/// Replays a transcript through the legality checker: placement first,
/// alternating robber/cop half-moves, every move legal, and capture
/// exactly where the outcome says.
pub fn replay_transcript(g: &Graph, result: &MatchResult) -> Result<(), String> {
    let t = &result.transcript;
    if t.is_empty() || t[0].side != MoveSide::Place {
        return Err("transcript must start with a placement".into());
    }
    let mut cops = t[0].cops.clone();
    let mut robber = t[0].robber;
    let mut expect = MoveSide::Robber;
    for e in &t[1..] {
        if e.side != expect {
            return Err(format!("round {}: expected {} half-move", e.round, expect));
        }
        match e.side {
            MoveSide::Robber => {
                if e.robber != robber && !g.has_edge(robber, e.robber) {
                    return Err(format!("round {}: illegal robber move", e.round));
                }
                if e.cops != cops {
                    return Err(format!("round {}: cops changed on a robber half-move", e.round));
                }
                robber = e.robber;
                expect = MoveSide::Cop;
            }
            MoveSide::Cop => {
                if e.robber != robber {
                    return Err(format!("round {}: robber changed on a cop half-move", e.round));
                }
                if !multiset_move_legal(g, &cops, &e.cops) {
                    return Err(format!("round {}: illegal cop team move", e.round));
                }
                cops = e.cops.clone();
                expect = MoveSide::Robber;
            }
            MoveSide::Place => return Err("placement after round 0".into()),
        }
    }
    match result.outcome {
        MatchOutcome::Captured { round } => {
            let last = t.last().unwrap();
            if !last.cops.contains(&last.robber) {
                return Err("captured outcome but the final configuration is not a capture".into());
            }
            if last.round != round {
                return Err("captured round does not match the final transcript entry".into());
            }
        }
        MatchOutcome::BudgetExhausted => {
            if t.iter().any(|e| e.cops.contains(&e.robber)) {
                return Err("budget outcome but the transcript contains a capture".into());
            }
        }
    }
    Ok(())
}

/// Shared movement helper: the least-index next hop toward a target
/// (staying when already there).
pub(crate) fn step_toward(g: &Graph, from: usize, to: usize) -> usize {
    if from == to {
        return from;
    }
    g.shortest_path(from, to).map_or(from, |p| p[1])
}

/// If any cop stands adjacent to (or on) the robber, the least such cop
/// moves onto it and everyone else stays. The universal endgame move.
pub(crate) fn greedy_capture(g: &Graph, cops: &mut [usize], robber: usize) -> bool {
    match cops.iter().position(|&c| c == robber || g.has_edge(c, robber)) {
        Some(i) => {
            cops[i] = robber;
            true
        }
        None => false,
    }
}

/// Assigns identity moves realizing a target multiset, if legal.
pub(crate) fn assign_multiset_move(g: &Graph, current: &[usize], target: &[usize]) -> Option<Vec<usize>> {
    fn rec(g: &Graph, current: &[usize], target: &[usize], i: usize, used: &mut Vec<bool>, out: &mut Vec<usize>) -> bool {
        if i == current.len() {
            return true;
        }
        for j in 0..target.len() {
            if !used[j] && (current[i] == target[j] || g.has_edge(current[i], target[j])) {
                used[j] = true;
                out.push(target[j]);
                if rec(g, current, target, i + 1, used, out) {
                    return true;
                }
                out.pop();
                used[j] = false;
            }
        }
        false
    }
    let mut used = vec![false; target.len()];
    let mut out = Vec::with_capacity(current.len());
    if rec(g, current, target, 0, &mut used, &mut out) {
        Some(out)
    } else {
        None
    }
}
