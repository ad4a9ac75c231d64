//! The peel-and-push pursuit engine.
//!
//! Operationalized from the contradiction argument: the cops gather into a
//! blob, chase until the robber demonstrably holds a minimum distance,
//! then rebuild the shortest path to the robber as a tracked induced path,
//! peeling one cop onto each successive path vertex while the stack
//! advances. The robber's only non-losing replies extend the tracked path;
//! a reply adjacent to an earlier tracked vertex breaks the argument and
//! restarts the approach — except when it closes the trail into an induced
//! cycle, where the trap variants take over (an extra cop parks on the
//! cycle, or the rear cop returns to the path start).
//!
//! The engine is heuristic where the proofs are nonconstructive; restarts
//! are counted by the caller through match budgets, never hidden.

use crate::graph::Graph;
use crate::strategy::{greedy_capture, step_toward};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PursuitPhase {
    /// Cops walk to the leader's position.
    Gather,
    /// The blob steps along shortest paths until the distance stalls.
    Chase,
    /// Peel cops one per turn onto successive tracked-path vertices.
    Push,
    /// All cops peeled; the occupied window slides along the path.
    Drive,
    /// A trail cycle was detected; the extra cop parks on it while the
    /// pushers chase the robber around it.
    Trap,
    /// Cycle closed at the path start; the rear cop walks back to it.
    Pin,
}

impl PursuitPhase {
    pub fn label(self) -> &'static str {
        match self {
            PursuitPhase::Gather => "gather",
            PursuitPhase::Chase => "chase",
            PursuitPhase::Push => "push",
            PursuitPhase::Drive => "drive",
            PursuitPhase::Trap => "trap",
            PursuitPhase::Pin => "pin",
        }
    }
}

/// What to do when the robber closes the tracked trail into a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosurePolicy {
    Restart,
    Trap,
    PinToStart,
}

#[derive(Debug)]
pub struct PursuitMemory {
    pub phase: PursuitPhase,
    /// Induced path; during Push/Drive its tip is the robber's position.
    pub tracked_path: Vec<usize>,
    /// Minimal blob-robber distance seen in the current chase (the proofs' t).
    pub min_distance: u32,
    pub trap_cycle: Option<Vec<usize>>,
    pub(crate) closure: ClosurePolicy,
    /// Number of pushing cops (a trap cop, when present, comes after).
    pub(crate) pushers: usize,
    /// Path cells 0..anchored hold cops; the stack sits at anchored-1.
    anchored: usize,
    /// First occupied path index in Drive.
    window: usize,
    stall: u32,
    restarts: u32,
    pin_target: usize,
    trap_target: usize,
    pub(crate) notes: Vec<String>,
}

impl PursuitMemory {
    fn new(pushers: usize, closure: ClosurePolicy) -> Self {
        PursuitMemory {
            phase: PursuitPhase::Gather,
            tracked_path: Vec::new(),
            min_distance: u32::MAX,
            trap_cycle: None,
            closure,
            pushers,
            anchored: 0,
            window: 0,
            stall: 0,
            restarts: 0,
            pin_target: 0,
            trap_target: 0,
            notes: Vec::new(),
        }
    }

    pub fn restarts(&self) -> u32 {
        self.restarts
    }

    fn restart(&mut self) {
        self.phase = PursuitPhase::Gather;
        self.tracked_path.clear();
        self.min_distance = u32::MAX;
        self.trap_cycle = None;
        self.anchored = 0;
        self.window = 0;
        self.stall = 0;
        self.restarts += 1;
    }
}

/// Opening vertex: a least-index center.
pub(crate) fn opening_vertex(g: &Graph) -> usize {
    (0..g.vertex_count())
        .min_by_key(|&v| (g.eccentricity(v).unwrap_or(u32::MAX), v))
        .expect("graph has vertices")
}

pub(crate) fn init_push(g: &Graph, pushers: usize, closure: ClosurePolicy) -> (Vec<usize>, PursuitMemory) {
    let u = opening_vertex(g);
    (vec![u; pushers], PursuitMemory::new(pushers, closure))
}

pub(crate) fn init_trap(g: &Graph, pushers: usize) -> (Vec<usize>, PursuitMemory) {
    let u = opening_vertex(g);
    (vec![u; pushers + 1], PursuitMemory::new(pushers, ClosurePolicy::Trap))
}

pub(crate) fn fresh_memory(pushers: usize, closure: ClosurePolicy) -> PursuitMemory {
    PursuitMemory::new(pushers, closure)
}

/// One cop turn for the plain push variants (every cop is a pusher).
pub(crate) fn step(g: &Graph, mem: &mut PursuitMemory, cops: &mut [usize], robber: usize) {
    debug_assert_eq!(mem.pushers, cops.len());
    if greedy_capture(g, cops, robber) {
        return;
    }
    engine_move(g, mem, cops, robber);
}

/// One cop turn for the trap variant: the last cop is the waiter.
pub(crate) fn step_with_trap(g: &Graph, mem: &mut PursuitMemory, cops: &mut [usize], robber: usize) {
    debug_assert_eq!(mem.pushers + 1, cops.len());
    if greedy_capture(g, cops, robber) {
        return;
    }
    let (pushers, rest) = cops.split_at_mut(mem.pushers);
    let trap_cop = &mut rest[0];
    if mem.phase == PursuitPhase::Trap {
        // park on the cycle, pushers chase the robber around it
        if let Some(cycle) = &mem.trap_cycle {
            if !cycle.contains(&robber) {
                mem.restart();
                engine_move(g, mem, pushers, robber);
                *trap_cop = step_toward(g, *trap_cop, pushers[0]);
                return;
            }
        }
        *trap_cop = step_toward(g, *trap_cop, mem.trap_target);
        for c in pushers.iter_mut() {
            *c = step_toward(g, *c, robber);
        }
        return;
    }
    engine_move(g, mem, pushers, robber);
    if mem.phase == PursuitPhase::Trap {
        // closure fired this turn: choose the nearest cycle vertex to wait on
        let cycle = mem.trap_cycle.as_ref().expect("trap phase carries a cycle");
        let dist = g.bfs_distances(*trap_cop);
        mem.trap_target = cycle
            .iter()
            .copied()
            .min_by_key(|&v| (dist[v], v))
            .expect("cycle is nonempty");
        *trap_cop = step_toward(g, *trap_cop, mem.trap_target);
    } else {
        // tag along with the lead pusher until needed
        *trap_cop = step_toward(g, *trap_cop, pushers[0]);
    }
}

/// Phase dispatch; exactly one team move per call.
fn engine_move(g: &Graph, mem: &mut PursuitMemory, cops: &mut [usize], robber: usize) {
    loop {
        match mem.phase {
            PursuitPhase::Gather => {
                let leader = cops[0];
                if cops.iter().all(|&c| c == leader) {
                    mem.phase = PursuitPhase::Chase;
                    mem.min_distance = u32::MAX;
                    mem.stall = 0;
                    continue;
                }
                for c in cops.iter_mut().skip(1) {
                    *c = step_toward(g, *c, leader);
                }
                return;
            }
            PursuitPhase::Chase => {
                let blob = cops[0];
                let d = g.bfs_distances(blob)[robber];
                if d < mem.min_distance {
                    mem.min_distance = d;
                    mem.stall = 0;
                } else {
                    mem.stall += 1;
                }
                if mem.stall >= g.vertex_count() as u32 {
                    // the robber is provably holding distance t: rebuild the
                    // shortest path to it and start peeling
                    mem.tracked_path = g.shortest_path(blob, robber).expect("connected host");
                    mem.anchored = 1;
                    mem.phase = PursuitPhase::Push;
                    continue;
                }
                let next = step_toward(g, blob, robber);
                for c in cops.iter_mut() {
                    *c = next;
                }
                return;
            }
            PursuitPhase::Push | PursuitPhase::Drive => {
                if !update_trail(g, mem, robber) {
                    continue; // restarted or switched phase
                }
                debug_assert!(trail_is_induced(g, &mem.tracked_path));
                match mem.phase {
                    PursuitPhase::Push => {
                        if mem.anchored < mem.pushers && mem.anchored + 1 < mem.tracked_path.len() {
                            mem.anchored += 1;
                        } else {
                            mem.phase = PursuitPhase::Drive;
                            mem.window = 0;
                            continue;
                        }
                        for (i, c) in cops.iter_mut().enumerate() {
                            *c = mem.tracked_path[i.min(mem.anchored - 1)];
                        }
                    }
                    PursuitPhase::Drive => {
                        let m = mem.tracked_path.len() - 1;
                        if mem.window + mem.pushers < m {
                            mem.window += 1;
                        }
                        for (i, c) in cops.iter_mut().enumerate() {
                            *c = mem.tracked_path[(mem.window + i).min(m)];
                        }
                    }
                    _ => unreachable!(),
                }
                return;
            }
            PursuitPhase::Pin => {
                // rear cop returns to the path start; the rest close in
                cops[0] = step_toward(g, cops[0], mem.pin_target);
                for c in cops.iter_mut().skip(1) {
                    *c = step_toward(g, *c, robber);
                }
                return;
            }
            PursuitPhase::Trap => {
                // reachable only through step_with_trap
                for c in cops.iter_mut() {
                    *c = step_toward(g, *c, robber);
                }
                return;
            }
        }
    }
}

/// Reconciles the tracked path with the robber's reply. Returns false
/// when the phase changed (restart, trap, pin) and the dispatch loop must
/// re-enter.
fn update_trail(g: &Graph, mem: &mut PursuitMemory, robber: usize) -> bool {
    let path = &mut mem.tracked_path;
    let m = path.len() - 1;
    let tip = path[m];
    if robber == tip {
        return true;
    }
    if m >= 1 && robber == path[m - 1] {
        // the robber backed up one cell; shorten the trail
        path.pop();
        return true;
    }
    if !path.contains(&robber) && g.has_edge(tip, robber) {
        let earlier: Vec<usize> = (0..m).filter(|&i| g.has_edge(path[i], robber)).collect();
        if earlier.is_empty() {
            path.push(robber);
            return true;
        }
        if earlier.len() == 1 {
            // trail closes into an induced cycle
            let at = earlier[0];
            let mut cycle = path[at..].to_vec();
            cycle.push(robber);
            match mem.closure {
                ClosurePolicy::Trap => {
                    mem.trap_cycle = Some(cycle);
                    mem.phase = PursuitPhase::Trap;
                    mem.notes.push("closure:trap".into());
                    return false;
                }
                ClosurePolicy::PinToStart if at == 0 => {
                    mem.pin_target = path[0];
                    mem.trap_cycle = Some(cycle);
                    mem.phase = PursuitPhase::Pin;
                    mem.notes.push("closure:pin".into());
                    return false;
                }
                _ => {}
            }
        }
    }
    // the robber broke the forced-move pattern; restart the approach
    mem.restart();
    false
}

fn trail_is_induced(g: &Graph, path: &[usize]) -> bool {
    for i in 0..path.len() {
        for j in (i + 1)..path.len() {
            let want = j == i + 1;
            if g.has_edge(path[i], path[j]) != want {
                return false;
            }
        }
    }
    true
}
