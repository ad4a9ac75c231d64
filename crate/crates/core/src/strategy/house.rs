//! Two cops on {2P2, house}-free graphs.
//!
//! On diameter-2 hosts the cops sit on the internal vertices of an induced
//! P4 and play the private/common-neighborhood case analysis; every escape
//! the analysis forbids is reported as a precondition violation carrying
//! the induced 2P2 or house witness it would create. Hosts with no induced
//! P4 fall back to the push machinery (two cops suffice there). On
//! diameter-3 hosts the bound comes from an external argument, so the
//! strategy plays the solved two-cop table and flags the fallback.

use crate::game::{solve, Configuration, Side, SolveTable};
use crate::graph::{Graph, VertexSet};
use crate::pattern::{contains_induced, is_isomorphic, make_pattern, PatternKind};
use crate::strategy::push::{self, PursuitMemory};
use crate::strategy::{assign_multiset_move, greedy_capture, StrategyError};

/// The four-part split of the vertices away from the two cop seats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HousePartition {
    /// Adjacent to the first seat only.
    pub first_private: VertexSet,
    /// Adjacent to the second seat only.
    pub second_private: VertexSet,
    /// Adjacent to both seats.
    pub common: VertexSet,
    /// Adjacent to neither seat; independent when the host is 2P2-free.
    pub remote: VertexSet,
}

impl HousePartition {
    pub fn compute(g: &Graph, u0: usize, v0: usize) -> HousePartition {
        let nu = g.row(u0);
        let nv = g.row(v0);
        let seats = (1u64 << u0) | (1u64 << v0);
        let full = g.all_vertices().bits() & !seats;
        HousePartition {
            first_private: VertexSet::from_bits(nu & !nv & !(1u64 << v0) & full),
            second_private: VertexSet::from_bits(nv & !nu & !(1u64 << u0) & full),
            common: VertexSet::from_bits(nu & nv & full),
            remote: VertexSet::from_bits(full & !nu & !nv),
        }
    }

    /// The four parts plus the seats partition the vertices.
    pub fn is_partition(&self, g: &Graph, u0: usize, v0: usize) -> bool {
        let parts = [
            self.first_private.bits(),
            self.second_private.bits(),
            self.common.bits(),
            self.remote.bits(),
            (1u64 << u0) | (1u64 << v0),
        ];
        let mut seen = 0u64;
        for p in parts {
            if seen & p != 0 {
                return false;
            }
            seen |= p;
        }
        seen == g.all_vertices().bits()
    }

    /// An edge inside the remote part, if any (a 2P2 with the seat edge).
    fn remote_edge(&self, g: &Graph) -> Option<(usize, usize)> {
        for z in self.remote.iter() {
            let hit = g.row(z) & self.remote.bits();
            if hit != 0 {
                return Some((z, hit.trailing_zeros() as usize));
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CaseState {
    /// Cops on the seats, waiting for the robber to settle in the remote part.
    Home,
    /// Case 1: first cop struck out to a common neighbor of the seats.
    Struck { w0: usize, z0: usize },
    /// Case 2: cops on the robber's private-neighborhood contacts.
    Pincered { z0: usize, u1: usize, v1: usize },
    /// Case 2, robber fled into the first private part; first cop retreated.
    CorneredFirst { z0: usize, u1: usize, v1: usize, u2: usize },
    /// Case 2, robber fled into the second private part; second cop retreated.
    CorneredSecond { z0: usize, u1: usize, v1: usize, v2: usize },
    /// Both cops back on the seats after the first-part line.
    FinalFirst { z0: usize, u1: usize, v1: usize, u2: usize, v2: usize },
    /// Both cops back on the seats after the second-part line.
    FinalSecond { z0: usize, u1: usize, v1: usize, v2: usize, u2: usize },
}

#[derive(Debug)]
enum HouseMode {
    Cases { seats: (usize, usize), partition: HousePartition, state: CaseState },
    PushFallback(PursuitMemory),
    TableFallback(Box<SolveTable>),
}

#[derive(Debug)]
pub struct HouseMemory {
    mode: HouseMode,
    pub(crate) notes: Vec<String>,
}

impl HouseMemory {
    pub fn partition(&self) -> Option<&HousePartition> {
        match &self.mode {
            HouseMode::Cases { partition, .. } => Some(partition),
            _ => None,
        }
    }
}

pub(crate) fn init(g: &Graph) -> Result<(Vec<usize>, HouseMemory), StrategyError> {
    let diameter = g
        .diameter()
        .map_err(|_| StrategyError::Fault("house strategy needs a connected host".into()))?;
    if diameter >= 4 {
        let two_p2 = make_pattern(PatternKind::LinearForest(vec![2, 2])).unwrap();
        let witness = contains_induced(g, &two_p2)
            .map(|w| w.0)
            .unwrap_or_default();
        return Err(StrategyError::PreconditionViolation {
            reason: "diameter exceeds 3, which forces an induced 2P2".into(),
            witness,
        });
    }
    if diameter == 3 {
        // the diameter-3 bound rests on an external argument; play the
        // exact table and flag it
        let table = solve(g, 2)?;
        if !table.cop_win_overall() {
            return Err(StrategyError::PreconditionViolation {
                reason: "two cops do not win on this diameter-3 host".into(),
                witness: vec![],
            });
        }
        let opening = table.initial_cops().expect("cop-win table has an opening").to_vec();
        let mem = HouseMemory {
            mode: HouseMode::TableFallback(Box::new(table)),
            notes: vec!["fallback:solve-table(diameter=3)".into()],
        };
        return Ok((opening, mem));
    }

    let p4 = make_pattern(PatternKind::Path(4)).unwrap();
    match contains_induced(g, &p4) {
        None => {
            let (opening, pm) = push::init_push(g, 2, push::ClosurePolicy::Restart);
            Ok((opening, HouseMemory {
                mode: HouseMode::PushFallback(pm),
                notes: vec!["branch:p4-free".into()],
            }))
        }
        Some(w) => {
            // w maps the path 0-1-2-3; seats are the internal vertices
            let (u0, v0) = (w.0[1], w.0[2]);
            let partition = HousePartition::compute(g, u0, v0);
            if !partition.is_partition(g, u0, v0) {
                return Err(StrategyError::Fault("seat partition failed to cover the host".into()));
            }
            if let Some((z, z2)) = partition.remote_edge(g) {
                return Err(StrategyError::PreconditionViolation {
                    reason: "remote part is not independent: induced 2P2 with the seat edge".into(),
                    witness: vec![z, z2, u0, v0],
                });
            }
            Ok((vec![u0, v0], HouseMemory {
                mode: HouseMode::Cases { seats: (u0, v0), partition, state: CaseState::Home },
                notes: Vec::new(),
            }))
        }
    }
}

pub(crate) fn step(
    g: &Graph,
    mem: &mut HouseMemory,
    cops: &mut [usize],
    robber: usize,
) -> Result<(), StrategyError> {
    match &mut mem.mode {
        HouseMode::PushFallback(pm) => {
            push::step(g, pm, cops, robber);
            Ok(())
        }
        HouseMode::TableFallback(table) => {
            if greedy_capture(g, cops, robber) {
                return Ok(());
            }
            let c = Configuration::new(cops.to_vec(), robber, Side::Cop);
            if !table.win(&c)? {
                return Err(StrategyError::Fault("table fallback left the winning region".into()));
            }
            let succ = table.optimal_cop_move(&c)?;
            let assigned = assign_multiset_move(g, cops, &succ.cops)
                .ok_or_else(|| StrategyError::Fault("optimal multiset move has no identity assignment".into()))?;
            cops.copy_from_slice(&assigned);
            Ok(())
        }
        HouseMode::Cases { seats, partition, state } => {
            step_cases(g, *seats, partition, state, cops, robber)
        }
    }
}

fn step_cases(
    g: &Graph,
    (u0, v0): (usize, usize),
    part: &HousePartition,
    state: &mut CaseState,
    cops: &mut [usize],
    robber: usize,
) -> Result<(), StrategyError> {
    debug_assert!(part.is_partition(g, u0, v0));
    if greedy_capture(g, cops, robber) {
        return Ok(());
    }
    // from here on the robber is adjacent to neither cop
    match *state {
        CaseState::Home => {
            if cops[0] != u0 || cops[1] != v0 {
                return Err(StrategyError::Fault("home state expects cops on the seats".into()));
            }
            if !part.remote.contains(robber) {
                return Err(StrategyError::Fault("unguarded robber outside the remote part".into()));
            }
            let z0 = robber;
            let strike = part.common.intersect(VertexSet::from_bits(g.row(z0)));
            if let Some(w0) = strike.least() {
                // Case 1: cover the common neighbor; every reply is then
                // adjacent to a cop or creates an induced house
                cops[0] = w0;
                *state = CaseState::Struck { w0, z0 };
                return Ok(());
            }
            // Case 2: both private parts must reach the robber (diameter 2)
            let u1 = part.first_private.intersect(VertexSet::from_bits(g.row(z0))).least();
            let v1 = part.second_private.intersect(VertexSet::from_bits(g.row(z0))).least();
            let (Some(u1), Some(v1)) = (u1, v1) else {
                return Err(StrategyError::PreconditionViolation {
                    reason: "robber sits at distance over 2 from a seat".into(),
                    witness: vec![z0],
                });
            };
            cops[0] = u1;
            cops[1] = v1;
            *state = CaseState::Pincered { z0, u1, v1 };
            Ok(())
        }
        CaseState::Struck { w0, z0 } => {
            if part.first_private.contains(robber) && !g.has_edge(robber, w0) {
                return violation(g, "induced house", vec![v0, u0, w0, robber, z0], PatternKind::CoP5);
            }
            Err(StrategyError::Fault("robber escaped the strike without a house".into()))
        }
        CaseState::Pincered { z0, u1, v1 } => {
            if part.first_private.contains(robber) {
                // retreat the first cop to its seat
                cops[0] = u0;
                *state = CaseState::CorneredFirst { z0, u1, v1, u2: robber };
                Ok(())
            } else if part.second_private.contains(robber) {
                cops[1] = v0;
                *state = CaseState::CorneredSecond { z0, u1, v1, v2: robber };
                Ok(())
            } else {
                Err(StrategyError::Fault("robber escaped the pincer outside the private parts".into()))
            }
        }
        CaseState::CorneredFirst { z0, u1, v1, u2 } => {
            if part.remote.contains(robber) {
                return violation(
                    g,
                    "induced 2P2",
                    vec![robber, u2, v0, v1],
                    PatternKind::LinearForest(vec![2, 2]),
                );
            }
            if part.second_private.contains(robber) {
                cops[1] = v0;
                *state = CaseState::FinalFirst { z0, u1, v1, u2, v2: robber };
                return Ok(());
            }
            Err(StrategyError::Fault("robber escaped the first corner unexpectedly".into()))
        }
        CaseState::CorneredSecond { z0, u1, v1, v2 } => {
            if part.remote.contains(robber) {
                return violation(
                    g,
                    "induced 2P2",
                    vec![robber, v2, u0, u1],
                    PatternKind::LinearForest(vec![2, 2]),
                );
            }
            if part.first_private.contains(robber) {
                cops[0] = u0;
                *state = CaseState::FinalSecond { z0, u1, v1, v2, u2: robber };
                return Ok(());
            }
            Err(StrategyError::Fault("robber escaped the second corner unexpectedly".into()))
        }
        CaseState::FinalFirst { z0, u1: _, v1, u2, v2 } => {
            if !part.remote.contains(robber) {
                return Err(StrategyError::Fault("robber evaded both seats outside the remote part".into()));
            }
            let z2 = robber;
            if z2 == z0 || g.has_edge(v2, z0) {
                return violation(g, "induced house", vec![z0, u2, v2, u0, v0], PatternKind::CoP5);
            }
            if !g.has_edge(z2, v1) {
                return violation(g, "induced 2P2", vec![z0, v1, z2, v2], PatternKind::LinearForest(vec![2, 2]));
            }
            if !g.has_edge(z2, u2) {
                return violation(g, "induced 2P2", vec![z2, v1, u0, u2], PatternKind::LinearForest(vec![2, 2]));
            }
            violation(g, "induced house", vec![z2, u2, v2, u0, v0], PatternKind::CoP5)
        }
        CaseState::FinalSecond { z0, u1, v1: _, v2, u2 } => {
            if !part.remote.contains(robber) {
                return Err(StrategyError::Fault("robber evaded both seats outside the remote part".into()));
            }
            let z2 = robber;
            if z2 == z0 || g.has_edge(u2, z0) {
                return violation(g, "induced house", vec![z0, v2, u2, v0, u0], PatternKind::CoP5);
            }
            if !g.has_edge(z2, u1) {
                return violation(g, "induced 2P2", vec![z0, u1, z2, u2], PatternKind::LinearForest(vec![2, 2]));
            }
            if !g.has_edge(z2, v2) {
                return violation(g, "induced 2P2", vec![z2, u1, v0, v2], PatternKind::LinearForest(vec![2, 2]));
            }
            violation(g, "induced house", vec![z2, v2, u2, v0, u0], PatternKind::CoP5)
        }
    }
}

/// Emits a precondition violation after re-checking that the named
/// vertices really induce the claimed pattern; a mismatch is an internal
/// fault, so reports stay trustworthy.
fn violation(
    g: &Graph,
    reason: &str,
    witness: Vec<usize>,
    kind: PatternKind,
) -> Result<(), StrategyError> {
    let set: VertexSet = witness.iter().copied().collect();
    if set.len() != witness.len() {
        return Err(StrategyError::Fault(format!("{reason} witness repeats a vertex: {witness:?}")));
    }
    let (sub, _) = g.induced_subgraph(set).expect("witness vertices are in range");
    let expect = make_pattern(kind).expect("witness pattern is constructible");
    if !is_isomorphic(&sub, expect.graph()) {
        return Err(StrategyError::Fault(format!(
            "{reason} witness {witness:?} does not induce the claimed pattern"
        )));
    }
    Err(StrategyError::PreconditionViolation { reason: reason.into(), witness })
}
