//! Guard-and-recurse strategies.
//!
//! Guard cops sit on a fixed vertex (or adjacent pair) forever. The robber
//! is confined to one component of the graph minus the guards' closed
//! neighborhood: stepping into that neighborhood puts him next to a guard,
//! and the guard takes him. By the freeness hypothesis the component has
//! no long induced path, so the remaining cops walk in and run the push
//! machinery on its induced subgraph.

use std::collections::HashMap;

use crate::graph::{Graph, VertexSet};
use crate::strategy::push::{self, ClosurePolicy, PursuitMemory};
use crate::strategy::{greedy_capture, step_toward, GuardPrefix, StrategyError};

#[derive(Debug)]
enum GuardMode {
    /// Waiting for the robber's component to be known.
    Await,
    /// Mobile cops walking to the staging vertex inside the component.
    Deploy { component: VertexSet, target: usize },
    /// Push machinery running on the component's induced subgraph.
    Inner(Box<InnerState>),
}

#[derive(Debug)]
struct InnerState {
    component: VertexSet,
    sub: Graph,
    to_host: Vec<usize>,
    to_sub: HashMap<usize, usize>,
    pursuit: PursuitMemory,
}

#[derive(Debug)]
pub struct GuardMemory {
    seats: Vec<usize>,
    mode: GuardMode,
    pub(crate) notes: Vec<String>,
}

impl GuardMemory {
    pub fn seats(&self) -> &[usize] {
        &self.seats
    }
}

pub(crate) fn init(g: &Graph, prefix: GuardPrefix, k: usize) -> Result<(Vec<usize>, GuardMemory), StrategyError> {
    let (seats, total) = match prefix {
        GuardPrefix::Vertex => {
            // any fixed vertex works; a max-degree seat shrinks the remainder
            let v0 = (0..g.vertex_count())
                .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
                .expect("graph has vertices");
            (vec![v0], k - 1)
        }
        GuardPrefix::Edge => {
            let v0 = (0..g.vertex_count())
                .find(|&v| g.degree(v) > 0)
                .ok_or_else(|| StrategyError::Argument("host has no edge for the guard pair".into()))?;
            let v1 = g.neighbors(v0).least().expect("positive degree");
            (vec![v0, v1], k)
        }
    };
    let mut opening = seats.clone();
    opening.resize(total, seats[0]);
    Ok((opening, GuardMemory { seats, mode: GuardMode::Await, notes: Vec::new() }))
}

pub(crate) fn step(
    g: &Graph,
    mem: &mut GuardMemory,
    cops: &mut [usize],
    robber: usize,
) -> Result<(), StrategyError> {
    if greedy_capture(g, cops, robber) {
        return Ok(());
    }
    let guard_count = mem.seats.len();
    loop {
        match &mut mem.mode {
            GuardMode::Await => {
                // guards are adjacent to everything in their closed
                // neighborhood, so an uncaptured robber is outside it
                let seats: VertexSet = mem.seats.iter().copied().collect();
                let removed = g.closed_neighborhood(seats).expect("seats are nonempty");
                let component = g
                    .components_after_removal(removed)
                    .into_iter()
                    .find(|c| c.contains(robber))
                    .ok_or_else(|| StrategyError::Fault("robber neither guarded nor in a component".into()))?;
                let (sub, _) = g.induced_subgraph(component).expect("component is nonempty");
                let target_sub = push::opening_vertex(&sub);
                let target = component.iter().nth(target_sub).expect("opening vertex is in range");
                mem.mode = GuardMode::Deploy { component, target };
            }
            GuardMode::Deploy { component, target } => {
                let target = *target;
                if cops[guard_count..].iter().all(|&c| c == target) {
                    let (sub, to_host) = g.induced_subgraph(*component).expect("component is nonempty");
                    let to_sub: HashMap<usize, usize> =
                        to_host.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                    let pursuit = push::fresh_memory(cops.len() - guard_count, ClosurePolicy::Restart);
                    mem.mode = GuardMode::Inner(Box::new(InnerState {
                        component: *component,
                        sub,
                        to_host,
                        to_sub,
                        pursuit,
                    }));
                    continue;
                }
                for c in cops[guard_count..].iter_mut() {
                    *c = step_toward(g, *c, target);
                }
                return Ok(());
            }
            GuardMode::Inner(inner) => {
                if !inner.component.contains(robber) {
                    return Err(StrategyError::Fault("robber escaped the guarded component".into()));
                }
                let mut sub_cops: Vec<usize> = cops[guard_count..]
                    .iter()
                    .map(|c| *inner.to_sub.get(c).expect("mobile cops stay inside the component"))
                    .collect();
                let sub_robber = inner.to_sub[&robber];
                push::step(&inner.sub, &mut inner.pursuit, &mut sub_cops, sub_robber);
                for (c, s) in cops[guard_count..].iter_mut().zip(sub_cops) {
                    *c = inner.to_host[s];
                }
                return Ok(());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small::*;
    use crate::strategy::{run_match, MatchError, MatchOutcome, RobberPolicy, Strategy};

    #[test]
    fn vertex_guard_catches_on_c4() {
        // C4 is (P1+P4)-free outright (only 4 vertices); 3 cops
        let g = cycle(4);
        let s = Strategy::guard_recurse(GuardPrefix::Vertex, 4).unwrap();
        assert_eq!(s.required_cops(&g), 3);
        let r = run_match(&g, &s, &RobberPolicy::Optimal, 64).unwrap();
        assert!(matches!(r.outcome, MatchOutcome::Captured { .. }), "{:?}", r.outcome);
    }

    #[test]
    fn edge_guard_catches_on_small_hosts() {
        for g in [path(5), cycle(5), star(4), complete(5)] {
            let s = Strategy::guard_recurse(GuardPrefix::Edge, 3).unwrap();
            let r = run_match(&g, &s, &RobberPolicy::Optimal, 256).unwrap();
            assert!(
                matches!(r.outcome, MatchOutcome::Captured { .. }),
                "guard_edge(3) on {g}: {:?}",
                r.outcome
            );
        }
    }

    #[test]
    fn edgeless_host_is_too_small_for_the_edge_prefix() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let s = Strategy::guard_recurse(GuardPrefix::Edge, 3).unwrap();
        match run_match(&g, &s, &RobberPolicy::Optimal, 8) {
            Err(MatchError::Argument(_)) => {}
            other => panic!("expected an argument error, got {other:?}"),
        }
    }
}
