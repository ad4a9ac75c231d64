//! Exact solution of the k-cop pursuit game.
//!
//! A position is (cop multiset, robber vertex, side to move). Cops and the
//! robber move to a neighbor or stay; a position with the robber on a cop
//! vertex is absorbing (won, capture time 0). The win table is the least
//! fixed point of
//!
//!   cop-to-move won    iff SOME team move reaches a won position,
//!   robber-to-move won iff EVERY robber move (staying included) does,
//!
//! computed by reverse breadth-first propagation from capture states. The
//! propagation proceeds in nondecreasing capture time, so `steps` (cop
//! turns remaining under optimal play) falls out exactly: a cop move costs
//! one step, a robber move none.
//!
//! Placement is resolved outside the table: the game is cop-win at k iff
//! some opening multiset makes every robber placement a won robber-to-move
//! position (the robber places second, seeing the cops; the two placement
//! conventions agree on winnability because every vertex lies in its own
//! closed neighborhood).

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Default cap on table size, in configurations.
pub const DEFAULT_STATE_BUDGET: u64 = 5_000_000;

/// Cap on team-move enumeration work (sum over multisets of the move
/// product sizes). Exceeding it is a budget error, never a wrong answer.
const WORK_BUDGET: u128 = 200_000_000;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SolveError {
    #[error("game graph must be connected")]
    NotConnected,
    #[error("cop count {k} outside 1..={n}")]
    BadCopCount { k: usize, n: usize },
    #[error("state budget exceeded: {states} configurations over budget {budget}")]
    BudgetExceeded { states: u128, budget: u64 },
    #[error("solve-table contract violation: {0}")]
    Contract(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Side {
    Cop,
    Robber,
}

impl Side {
    fn bit(self) -> usize {
        match self {
            Side::Cop => 0,
            Side::Robber => 1,
        }
    }
}

/// One game position. `cops` is kept sorted: cop pieces are
/// interchangeable, so a multiset is the canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub to_move: Side,
}

impl Configuration {
    pub fn new(mut cops: Vec<usize>, robber: usize, to_move: Side) -> Self {
        cops.sort_unstable();
        Configuration { cops, robber, to_move }
    }

    pub fn is_capture(&self) -> bool {
        self.cops.contains(&self.robber)
    }
}

/// The fully solved game at a fixed cop count.
#[derive(Debug, Clone)]
pub struct SolveTable {
    g: Graph,
    k: usize,
    multisets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, u32>,
    /// Team moves of each multiset (indices into `multisets`, ascending).
    /// The per-cop move relation is symmetric, so this doubles as the
    /// predecessor relation.
    team_moves: Vec<Vec<u32>>,
    win: Vec<bool>,
    steps: Vec<u32>,
    cop_win_overall: bool,
    initial_cops: Option<Vec<usize>>,
}

/// Solves with the default state budget.
pub fn solve(g: &Graph, k: usize) -> Result<SolveTable, SolveError> {
    solve_with_budget(g, k, DEFAULT_STATE_BUDGET)
}

pub fn solve_with_budget(g: &Graph, k: usize, budget: u64) -> Result<SolveTable, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::NotConnected);
    }
    let n = g.vertex_count();
    // k may exceed n: cop pieces stack ("not necessarily distinct"), and
    // strategy play-outs on hosts smaller than their team need the table
    if k == 0 {
        return Err(SolveError::BadCopCount { k, n });
    }
    let state_count = multiset_count(n, k).saturating_mul(n as u128 * 2);
    if state_count > budget as u128 {
        return Err(SolveError::BudgetExceeded { states: state_count, budget });
    }

    let multisets = enumerate_multisets(n, k);
    let mut index = HashMap::with_capacity(multisets.len());
    for (i, m) in multisets.iter().enumerate() {
        index.insert(m.clone(), i as u32);
    }

    let work: u128 = multisets
        .iter()
        .map(|m| m.iter().map(|&v| g.degree(v) as u128 + 1).product::<u128>())
        .sum();
    if work > WORK_BUDGET {
        return Err(SolveError::BudgetExceeded { states: work, budget: WORK_BUDGET as u64 });
    }

    let team_moves: Vec<Vec<u32>> = multisets
        .iter()
        .map(|m| {
            let mut moves = Vec::new();
            let mut cur = vec![0usize; k];
            expand_team_moves(g, m, 0, &mut cur, &mut moves);
            moves.sort_unstable();
            moves.dedup();
            moves.iter().map(|ms| index[ms]).collect()
        })
        .collect();

    let states = multisets.len() * n * 2;
    let mut win = vec![false; states];
    let mut steps = vec![u32::MAX; states];
    // robber-to-move positions need all |N[r]| successors won
    let mut pending = vec![0u8; multisets.len() * n];

    let state_id = |m: usize, r: usize, side: Side| -> usize { (m * n + r) * 2 + side.bit() };

    let mut buckets: Vec<Vec<usize>> = vec![Vec::new()];
    for (mi, m) in multisets.iter().enumerate() {
        for r in 0..n {
            if m.binary_search(&r).is_ok() {
                for side in [Side::Cop, Side::Robber] {
                    let s = state_id(mi, r, side);
                    win[s] = true;
                    steps[s] = 0;
                    buckets[0].push(s);
                }
            } else {
                pending[mi * n + r] = g.degree(r) as u8 + 1;
            }
        }
    }

    let mut d = 0usize;
    while d < buckets.len() {
        let mut i = 0usize;
        while i < buckets[d].len() {
            let s = buckets[d][i];
            i += 1;
            let side = if s.is_multiple_of(2) { Side::Cop } else { Side::Robber };
            let mi = s / 2 / n;
            let r = s / 2 % n;
            match side {
                Side::Cop => {
                    // robber-to-move predecessors: robber was at r0 in N[r]
                    let mut bits = g.row(r) | (1u64 << r);
                    while bits != 0 {
                        let r0 = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        let p = state_id(mi, r0, Side::Robber);
                        if win[p] {
                            continue;
                        }
                        pending[mi * n + r0] -= 1;
                        if pending[mi * n + r0] == 0 {
                            win[p] = true;
                            // the last successor settled is the max
                            steps[p] = d as u32;
                            buckets[d].push(p);
                        }
                    }
                }
                Side::Robber => {
                    // cop-to-move predecessors: any multiset one team move away
                    for &m0 in &team_moves[mi] {
                        let p = state_id(m0 as usize, r, Side::Cop);
                        if !win[p] {
                            win[p] = true;
                            steps[p] = d as u32 + 1;
                            if buckets.len() <= d + 1 {
                                buckets.resize(d + 2, Vec::new());
                            }
                            buckets[d + 1].push(p);
                        }
                    }
                }
            }
        }
        d += 1;
    }

    // Opening quantification: exists a multiset making every robber
    // placement a won robber-to-move position. Among winning openings keep
    // the one minimizing worst-case capture time, lexicographically least
    // multiset on ties (multisets are already enumerated in lex order).
    let mut cop_win_overall = false;
    let mut initial_cops: Option<Vec<usize>> = None;
    let mut best_worst = u32::MAX;
    for (mi, m) in multisets.iter().enumerate() {
        let mut worst = 0u32;
        let mut all = true;
        for r in 0..n {
            let s = state_id(mi, r, Side::Robber);
            if !win[s] {
                all = false;
                break;
            }
            worst = worst.max(steps[s]);
        }
        if all {
            cop_win_overall = true;
            if worst < best_worst {
                best_worst = worst;
                initial_cops = Some(m.clone());
            }
        }
    }

    Ok(SolveTable {
        g: g.clone(),
        k,
        multisets,
        index,
        team_moves,
        win,
        steps,
        cop_win_overall,
        initial_cops,
    })
}

fn expand_team_moves(g: &Graph, m: &[usize], i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i == m.len() {
        let mut ms = cur.clone();
        ms.sort_unstable();
        out.push(ms);
        return;
    }
    let mut bits = g.row(m[i]) | (1u64 << m[i]);
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        cur[i] = v;
        expand_team_moves(g, m, i + 1, cur, out);
    }
}

/// Number of size-k multisets over n vertices: C(n+k-1, k).
pub fn multiset_count(n: usize, k: usize) -> u128 {
    let mut num = 1u128;
    for i in 0..k {
        num = num.saturating_mul((n + i) as u128);
        num /= (i + 1) as u128;
    }
    num
}

fn enumerate_multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v);
            rec(n, k, v, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

impl SolveTable {
    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn cop_count(&self) -> usize {
        self.k
    }

    pub fn cop_win_overall(&self) -> bool {
        self.cop_win_overall
    }

    /// An optimal opening multiset when the game is cop-win.
    pub fn initial_cops(&self) -> Option<&[usize]> {
        self.initial_cops.as_deref()
    }

    pub fn state_count(&self) -> usize {
        self.win.len()
    }

    fn locate(&self, c: &Configuration) -> Result<usize, SolveError> {
        if c.cops.len() != self.k {
            return Err(SolveError::Contract("configuration cop count differs from table"));
        }
        let mut sorted = c.cops.clone();
        sorted.sort_unstable();
        let n = self.g.vertex_count();
        if c.robber >= n || sorted.iter().any(|&v| v >= n) {
            return Err(SolveError::Contract("configuration vertex out of range"));
        }
        let mi = *self
            .index
            .get(&sorted)
            .ok_or(SolveError::Contract("unknown cop multiset"))? as usize;
        Ok((mi * n + c.robber) * 2 + c.to_move.bit())
    }

    /// Cop-win flag of a configuration; the cop multiset is canonicalized
    /// on entry, so any permutation of the cops queries the same state.
    pub fn win(&self, c: &Configuration) -> Result<bool, SolveError> {
        Ok(self.win[self.locate(c)?])
    }

    /// Optimal capture time in cop turns; `None` on losing configurations.
    pub fn steps(&self, c: &Configuration) -> Result<Option<u32>, SolveError> {
        let s = self.steps[self.locate(c)?];
        Ok(if s == u32::MAX { None } else { Some(s) })
    }

    /// Optimal team move from a winning cop-to-move configuration: the
    /// successor loses exactly one step; ties break to the
    /// lexicographically least multiset.
    pub fn optimal_cop_move(&self, c: &Configuration) -> Result<Configuration, SolveError> {
        if c.to_move != Side::Cop {
            return Err(SolveError::Contract("optimal_cop_move needs a cop-to-move configuration"));
        }
        let s = self.locate(c)?;
        if !self.win[s] {
            return Err(SolveError::Contract("optimal_cop_move called on a losing configuration"));
        }
        if c.is_capture() {
            return Err(SolveError::Contract("configuration already captured"));
        }
        let n = self.g.vertex_count();
        let mi = s / 2 / n;
        let want = self.steps[s] - 1;
        for &m1 in &self.team_moves[mi] {
            let t = (m1 as usize * n + c.robber) * 2 + Side::Robber.bit();
            if self.win[t] && self.steps[t] == want {
                return Ok(Configuration {
                    cops: self.multisets[m1 as usize].clone(),
                    robber: c.robber,
                    to_move: Side::Robber,
                });
            }
        }
        unreachable!("a winning cop-to-move configuration always has a step-decreasing move")
    }

    /// Robber reply from a robber-to-move configuration: the least escape
    /// vertex when one exists, otherwise the capture-delaying maximum
    /// (least vertex on ties). An already-captured robber stays put.
    pub fn optimal_robber_move(&self, c: &Configuration) -> Result<usize, SolveError> {
        if c.to_move != Side::Robber {
            return Err(SolveError::Contract("optimal_robber_move needs a robber-to-move configuration"));
        }
        let s = self.locate(c)?;
        if c.is_capture() {
            return Ok(c.robber);
        }
        let n = self.g.vertex_count();
        let mi = s / 2 / n;
        let mut best = None;
        let mut best_steps = 0u32;
        let mut bits = self.g.row(c.robber) | (1u64 << c.robber);
        while bits != 0 {
            let r1 = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let t = (mi * n + r1) * 2 + Side::Cop.bit();
            if !self.win[t] {
                return Ok(r1); // escape: ascending scan yields the least
            }
            if best.is_none() || self.steps[t] > best_steps {
                best = Some(r1);
                best_steps = self.steps[t];
            }
        }
        Ok(best.expect("closed neighborhood is nonempty"))
    }

    /// Adversarial placement against an opening: a losing (for the cops)
    /// robber vertex if one exists, else the capture-delaying maximum.
    pub fn adversarial_placement(&self, cops: &[usize]) -> Result<usize, SolveError> {
        let n = self.g.vertex_count();
        let mut best = 0usize;
        let mut best_steps = 0u32;
        let mut found = false;
        for r in 0..n {
            let c = Configuration::new(cops.to_vec(), r, Side::Robber);
            let s = self.locate(&c)?;
            if !self.win[s] {
                return Ok(r);
            }
            if !found || self.steps[s] > best_steps {
                best = r;
                best_steps = self.steps[s];
                found = true;
            }
        }
        Ok(best)
    }

    /// One line per configuration, "cops;robber;turn;win;steps", in
    /// canonical order (multiset lex, robber ascending, cop turn first).
    pub fn dump(&self) -> String {
        let n = self.g.vertex_count();
        let mut out = String::new();
        for (mi, m) in self.multisets.iter().enumerate() {
            let cops = m.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
            for r in 0..n {
                for side in [Side::Cop, Side::Robber] {
                    let s = (mi * n + r) * 2 + side.bit();
                    let turn = match side {
                        Side::Cop => "cop",
                        Side::Robber => "robber",
                    };
                    let steps = if self.steps[s] == u32::MAX {
                        "-".to_string()
                    } else {
                        self.steps[s].to_string()
                    };
                    out.push_str(&format!(
                        "{cops};{r};{turn};{};{steps}\n",
                        if self.win[s] { 1 } else { 0 }
                    ));
                }
            }
        }
        out
    }
}

/// Least k for which the game is cop-win. Iteration is bounded by a
/// greedy dominating set: cops opening there capture in one move.
pub fn cop_number(g: &Graph) -> Result<usize, SolveError> {
    Ok(cop_number_with_budget(g, DEFAULT_STATE_BUDGET, None)?
        .expect("uncapped search always terminates at a dominating set"))
}

/// `max_k` caps the search; `Ok(None)` means no win found up to the cap.
pub fn cop_number_with_budget(
    g: &Graph,
    budget: u64,
    max_k: Option<usize>,
) -> Result<Option<usize>, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::NotConnected);
    }
    let cap = g.greedy_dominating_set().len();
    let cap = max_k.map_or(cap, |m| m.min(cap));
    for k in 1..=cap {
        if solve_with_budget(g, k, budget)?.cop_win_overall {
            return Ok(Some(k));
        }
    }
    if max_k.is_some_and(|m| m < g.greedy_dominating_set().len()) {
        return Ok(None);
    }
    unreachable!("cops on a dominating set always win")
}

/// Corner-elimination oracle for cop number 1: repeatedly delete a vertex
/// whose closed neighborhood lies inside another's (least index each
/// round); dismantlable means the graph shrinks to a single vertex.
/// Independent of the game solver by construction.
pub fn is_dismantlable(g: &Graph) -> Result<bool, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::NotConnected);
    }
    let n = g.vertex_count();
    let mut alive = g.all_vertices().bits();
    while alive.count_ones() > 1 {
        let mut corner = None;
        'outer: for u in 0..n {
            if alive & (1u64 << u) == 0 {
                continue;
            }
            let nu = (g.row(u) | (1u64 << u)) & alive;
            let mut bits = alive & !(1u64 << u);
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let nv = (g.row(v) | (1u64 << v)) & alive;
                if nu & !nv == 0 {
                    corner = Some(u);
                    break 'outer;
                }
            }
        }
        match corner {
            Some(u) => alive &= !(1u64 << u),
            None => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small::*;

    type NaiveTable = HashMap<(Vec<usize>, usize, u8), (bool, u32)>;

    /// Independent oracle: naive fixed-point iteration straight from the
    /// win/steps definitions, no worklist. Used to cross-check the
    /// retrograde solver on small instances.
    fn naive_solve(g: &Graph, k: usize) -> (bool, NaiveTable) {
        let n = g.vertex_count();
        let multisets = enumerate_multisets(n, k);
        let mut val: NaiveTable = HashMap::new();
        for m in &multisets {
            for r in 0..n {
                for side in 0..2u8 {
                    let captured = m.contains(&r);
                    val.insert((m.clone(), r, side), (captured, if captured { 0 } else { u32::MAX }));
                }
            }
        }
        loop {
            let mut changed = false;
            for m in &multisets {
                let mut succ = Vec::new();
                let mut cur = vec![0usize; k];
                expand_team_moves(g, m, 0, &mut cur, &mut succ);
                succ.sort_unstable();
                succ.dedup();
                for r in 0..n {
                    if m.contains(&r) {
                        continue;
                    }
                    // cop to move: min over team moves
                    let mut best: Option<u32> = None;
                    for s in &succ {
                        let (w, st) = val[&(s.clone(), r, 1)];
                        if w {
                            best = Some(best.map_or(st + 1, |b: u32| b.min(st + 1)));
                        }
                    }
                    if let Some(b) = best {
                        let e = val.get_mut(&(m.clone(), r, 0)).unwrap();
                        if !e.0 || e.1 != b {
                            *e = (true, b);
                            changed = true;
                        }
                    }
                    // robber to move: max over robber moves, all must win
                    let mut all = true;
                    let mut worst = 0u32;
                    for r1 in 0..n {
                        if r1 != r && !g.has_edge(r, r1) {
                            continue;
                        }
                        let (w, st) = val[&(m.clone(), r1, 0)];
                        if !w {
                            all = false;
                            break;
                        }
                        worst = worst.max(st);
                    }
                    if all {
                        let e = val.get_mut(&(m.clone(), r, 1)).unwrap();
                        if !e.0 || e.1 != worst {
                            *e = (true, worst);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let overall = multisets.iter().any(|m| (0..n).all(|r| val[&(m.clone(), r, 1)].0));
        (overall, val)
    }

    fn assert_matches_naive(g: &Graph, k: usize) {
        let t = solve(g, k).unwrap();
        let (overall, val) = naive_solve(g, k);
        assert_eq!(t.cop_win_overall(), overall, "overall mismatch");
        for m in enumerate_multisets(g.vertex_count(), k) {
            for r in 0..g.vertex_count() {
                for (side, sbit) in [(Side::Cop, 0u8), (Side::Robber, 1u8)] {
                    let c = Configuration::new(m.clone(), r, side);
                    let (w, st) = val[&(m.clone(), r, sbit)];
                    assert_eq!(t.win(&c).unwrap(), w, "win mismatch at {c:?}");
                    if w {
                        assert_eq!(t.steps(&c).unwrap(), Some(st), "steps mismatch at {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn retrograde_agrees_with_naive_fixed_point() {
        for (g, k) in [
            (path(3), 1),
            (path(4), 1),
            (cycle(4), 1),
            (cycle(4), 2),
            (cycle(5), 1),
            (cycle(5), 2),
            (cycle(6), 2),
            (star(3), 1),
            (complete(4), 1),
            (path(5).complement(), 2),
        ] {
            assert_matches_naive(&g, k);
        }
    }

    #[test]
    fn p3_solved_exactly() {
        let t = solve(&path(3), 1).unwrap();
        assert!(t.cop_win_overall());
        assert_eq!(t.initial_cops(), Some(&[1usize][..]));
        // worst-case capture from the center opening: one cop turn
        let worst = (0..3)
            .map(|r| t.steps(&Configuration::new(vec![1], r, Side::Robber)).unwrap().unwrap())
            .max()
            .unwrap();
        assert_eq!(worst, 1);
    }

    #[test]
    fn cycle_anchors() {
        assert!(!solve(&cycle(4), 1).unwrap().cop_win_overall());
        assert!(solve(&cycle(4), 2).unwrap().cop_win_overall());
        assert_eq!(cop_number(&cycle(4)).unwrap(), 2);
        assert_eq!(cop_number(&cycle(5)).unwrap(), 2);
    }

    #[test]
    fn trees_are_one_cop() {
        for g in [path(2), path(7), star(5), Graph::from_edges(7, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap()] {
            assert_eq!(cop_number(&g).unwrap(), 1);
        }
    }

    #[test]
    fn petersen_needs_three() {
        assert_eq!(cop_number(&petersen()).unwrap(), 3);
    }

    #[test]
    fn k1_captures_at_placement() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let t = solve(&g, 1).unwrap();
        assert!(t.cop_win_overall());
        assert_eq!(t.steps(&Configuration::new(vec![0], 0, Side::Robber)).unwrap(), Some(0));
    }

    #[test]
    fn optimal_cop_move_contracts() {
        let t = solve(&path(3), 1).unwrap();
        let c = Configuration::new(vec![1], 0, Side::Cop);
        let succ = t.optimal_cop_move(&c).unwrap();
        assert_eq!(succ.cops, vec![0]); // immediate capture
        assert_eq!(succ.to_move, Side::Robber);

        let robber_turn = Configuration::new(vec![1], 0, Side::Robber);
        assert!(matches!(t.optimal_cop_move(&robber_turn), Err(SolveError::Contract(_))));

        let lost = solve(&cycle(4), 1).unwrap();
        let losing = Configuration::new(vec![0], 2, Side::Cop);
        assert!(!lost.win(&losing).unwrap());
        assert!(matches!(lost.optimal_cop_move(&losing), Err(SolveError::Contract(_))));
    }

    #[test]
    fn optimal_robber_escapes_on_c4() {
        let t = solve(&cycle(4), 1).unwrap();
        // cop adjacent to the robber: the robber restores the antipodal pair
        let c = Configuration::new(vec![1], 2, Side::Robber);
        let r1 = t.optimal_robber_move(&c).unwrap();
        assert_eq!(r1, 3);
        assert!(!t.win(&Configuration::new(vec![1], r1, Side::Cop)).unwrap());
        // absorbed state stays put
        let caught = Configuration::new(vec![2], 2, Side::Robber);
        assert_eq!(t.optimal_robber_move(&caught).unwrap(), 2);
    }

    #[test]
    fn capture_in_one_on_c4_with_two_cops() {
        let t = solve(&cycle(4), 2).unwrap();
        let c = Configuration::new(vec![0, 2], 1, Side::Cop);
        assert_eq!(t.steps(&c).unwrap(), Some(1));
        let succ = t.optimal_cop_move(&c).unwrap();
        assert!(succ.is_capture());
    }

    #[test]
    fn budget_and_argument_errors() {
        let g = cycle(6);
        assert!(matches!(
            solve_with_budget(&g, 2, 10),
            Err(SolveError::BudgetExceeded { .. })
        ));
        assert!(matches!(solve(&g, 0), Err(SolveError::BadCopCount { .. })));
        // cops may outnumber vertices (pieces stack)
        assert!(solve(&complete(2), 3).unwrap().cop_win_overall());
        let disc = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(solve(&disc, 1), Err(SolveError::NotConnected)));
        assert!(matches!(cop_number(&disc), Err(SolveError::NotConnected)));
        assert!(matches!(is_dismantlable(&disc), Err(SolveError::NotConnected)));
    }

    #[test]
    fn max_k_caps_the_search() {
        assert_eq!(cop_number_with_budget(&cycle(4), DEFAULT_STATE_BUDGET, Some(1)).unwrap(), None);
        assert_eq!(
            cop_number_with_budget(&cycle(4), DEFAULT_STATE_BUDGET, Some(2)).unwrap(),
            Some(2)
        );
    }

    #[test]
    fn dismantlable_cases() {
        assert!(is_dismantlable(&path(5)).unwrap());
        assert!(is_dismantlable(&star(4)).unwrap());
        assert!(is_dismantlable(&cycle(3)).unwrap());
        assert!(!is_dismantlable(&cycle(4)).unwrap());
        assert!(!is_dismantlable(&cycle(5)).unwrap());
        assert!(!is_dismantlable(&petersen()).unwrap());
    }

    #[test]
    fn table_dump_is_canonical() {
        let t = solve(&path(2), 1).unwrap();
        let dump = t.dump();
        let lines: Vec<&str> = dump.lines().collect();
        assert_eq!(lines.len(), 2 * 2 * 2);
        assert_eq!(lines[0], "0;0;cop;1;0");
        assert!(lines.iter().all(|l| l.split(';').count() == 5));
    }

    #[test]
    fn permuting_cop_multiset_is_structural() {
        let t = solve(&cycle(5), 2).unwrap();
        for (a, b) in [((0, 3), (3, 0)), ((1, 4), (4, 1))] {
            let c1 = Configuration::new(vec![a.0, a.1], 2, Side::Cop);
            let c2 = Configuration::new(vec![b.0, b.1], 2, Side::Cop);
            assert_eq!(t.win(&c1).unwrap(), t.win(&c2).unwrap());
            assert_eq!(t.steps(&c1).unwrap(), t.steps(&c2).unwrap());
        }
    }
}
