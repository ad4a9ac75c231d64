//! Interactive play mode: the human moves the robber, the program answers
//! with the chosen cop policy. Full state is printed every round; illegal
//! input re-prompts without consuming the round; end-of-input quits
//! cleanly. The final transcript is echoed in the match export format.

use std::io::{BufRead, Write};

use coprobber_core::game::{solve, Configuration, Side};
use coprobber_core::graph::Graph;
use coprobber_core::strategy::{format_transcript, Memory, MoveSide, TranscriptEntry};

use crate::parse_cop_policy;

pub fn run_play(g: &Graph, k: usize, cops_flag: &str) -> Result<u8, String> {
    if !g.is_connected() {
        return Err("play needs a connected graph".into());
    }
    let strategy = parse_cop_policy(cops_flag)?;
    if let Some(s) = &strategy {
        let need = s.required_cops(g);
        if need != k {
            return Err(format!("strategy {} fields {need} cops but --k is {k}", s.name()));
        }
    }
    if k == 0 {
        return Err("--k must be at least 1".into());
    }

    let stdin = std::io::stdin();
    let mut lines = stdin.lock().lines();
    let mut out = std::io::stdout();

    // table for the optimal policy (and for capture-time commentary)
    let table = match strategy {
        None => Some(solve(g, k).map_err(|e| e.to_string())?),
        Some(_) => None,
    };

    let mut strategy_mem: Option<(Vec<usize>, Memory)> = None;
    let mut cops: Vec<usize> = match (&strategy, &table) {
        (Some(s), _) => {
            let (opening, mem) = s.init(g).map_err(|e| e.to_string())?;
            let pos = opening.clone();
            strategy_mem = Some((opening, mem));
            pos
        }
        (None, Some(t)) => match t.initial_cops() {
            Some(m) => m.to_vec(),
            None => {
                // robber-win at this k: stack the cops on a center
                let c = (0..g.vertex_count())
                    .min_by_key(|&v| (g.eccentricity(v).unwrap_or(u32::MAX), v))
                    .unwrap();
                vec![c; k]
            }
        },
        _ => unreachable!(),
    };

    let multiset = |cops: &[usize]| {
        let mut m = cops.to_vec();
        m.sort_unstable();
        m
    };

    writeln!(out, "graph: {} vertices, edges {:?}", g.vertex_count(), g.edges()).ok();
    writeln!(out, "cops open at {:?}", multiset(&cops)).ok();
    let mut transcript: Vec<TranscriptEntry> = Vec::new();

    // robber placement
    let robber = loop {
        writeln!(out, "place the robber (0..={}, q quits):", g.vertex_count() - 1).ok();
        write!(out, "> ").ok();
        out.flush().ok();
        match lines.next() {
            None => {
                writeln!(out, "quit").ok();
                return Ok(0);
            }
            Some(line) => {
                let line = line.map_err(|e| e.to_string())?;
                let t = line.trim();
                if t == "q" {
                    writeln!(out, "quit").ok();
                    return Ok(0);
                }
                match t.parse::<usize>() {
                    Ok(v) if v < g.vertex_count() => break v,
                    _ => {
                        writeln!(out, "not a vertex; try again").ok();
                    }
                }
            }
        }
    };
    let mut robber = robber;
    transcript.push(TranscriptEntry {
        round: 0,
        side: MoveSide::Place,
        cops: multiset(&cops),
        robber,
    });
    if cops.contains(&robber) {
        writeln!(out, "captured at round 0 (placement on a cop)").ok();
        write!(out, "{}", format_transcript(&transcript)).ok();
        return Ok(0);
    }

    for round in 1u32.. {
        writeln!(out, "round {round}: cops at {:?}, robber at {robber}", multiset(&cops)).ok();
        let mut legal: Vec<usize> = g.neighbors(robber).iter().collect();
        legal.push(robber);
        legal.sort_unstable();
        writeln!(out, "your moves: {legal:?} (q quits)").ok();

        // robber half-move
        let choice = loop {
            write!(out, "> ").ok();
            out.flush().ok();
            match lines.next() {
                None => {
                    writeln!(out, "quit").ok();
                    write!(out, "{}", format_transcript(&transcript)).ok();
                    return Ok(0);
                }
                Some(line) => {
                    let line = line.map_err(|e| e.to_string())?;
                    let t = line.trim();
                    if t == "q" {
                        writeln!(out, "quit").ok();
                        write!(out, "{}", format_transcript(&transcript)).ok();
                        return Ok(0);
                    }
                    match t.parse::<usize>() {
                        Ok(v) if legal.contains(&v) => break v,
                        _ => {
                            writeln!(out, "illegal move; choose one of {legal:?}").ok();
                        }
                    }
                }
            }
        };
        robber = choice;
        transcript.push(TranscriptEntry {
            round,
            side: MoveSide::Robber,
            cops: multiset(&cops),
            robber,
        });
        if cops.contains(&robber) {
            writeln!(out, "captured at round {round} (you walked onto a cop)").ok();
            write!(out, "{}", format_transcript(&transcript)).ok();
            return Ok(0);
        }

        // cop half-move
        match (&strategy, &mut strategy_mem, &table) {
            (Some(s), Some((positions, mem)), _) => {
                s.step(g, mem, positions, robber).map_err(|e| e.to_string())?;
                cops = positions.clone();
            }
            (None, _, Some(t)) => {
                let c = Configuration::new(cops.clone(), robber, Side::Cop);
                if t.win(&c).map_err(|e| e.to_string())? {
                    cops = t.optimal_cop_move(&c).map_err(|e| e.to_string())?.cops;
                } else {
                    // robber-win region: chase to keep the pressure honest
                    for cop in cops.iter_mut() {
                        if let Some(p) = g.shortest_path(*cop, robber) {
                            if p.len() > 1 {
                                *cop = p[1];
                            }
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
        transcript.push(TranscriptEntry {
            round,
            side: MoveSide::Cop,
            cops: multiset(&cops),
            robber,
        });
        if cops.contains(&robber) {
            writeln!(out, "captured at round {round}").ok();
            write!(out, "{}", format_transcript(&transcript)).ok();
            return Ok(0);
        }
    }
    unreachable!()
}
