//! Corpus ingestion and generation: graph6 line streams, seeded random
//! connected graphs, and a built-in exhaustive enumerator of small graphs
//! up to isomorphism.

use std::collections::HashSet;
use std::io::BufRead;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::harness::HarnessError;

/// Lazily parses graph6 lines with 1-based line provenance. Blank lines
/// are skipped; a malformed line yields one error naming the line and the
/// stream stops there.
pub fn read_graph6_stream<R: BufRead>(
    reader: R,
) -> impl Iterator<Item = Result<(usize, Graph), HarnessError>> {
    let mut lines = reader.lines().enumerate();
    let mut dead = false;
    std::iter::from_fn(move || {
        if dead {
            return None;
        }
        loop {
            match lines.next() {
                None => return None,
                Some((i, Err(e))) => {
                    dead = true;
                    return Some(Err(HarnessError::Io { line: i + 1, source: e }));
                }
                Some((i, Ok(line))) => {
                    let trimmed = line.trim();
                    if trimmed.is_empty() {
                        continue;
                    }
                    match parse_graph6(trimmed) {
                        Ok(g) => return Some(Ok((i + 1, g))),
                        Err(e) => {
                            dead = true;
                            return Some(Err(HarnessError::Parse { line: i + 1, source: e }));
                        }
                    }
                }
            }
        }
    })
}

/// Attempts per requested graph before giving up on connectivity.
const GEN_ATTEMPT_BUDGET: usize = 100_000;

/// Deterministic Erdős–Rényi stream filtered to connected graphs.
///
/// The generator is pinned: ChaCha8 seeded with `seed`; for each attempt
/// the pairs (u,v), u < v, are visited in lexicographic order and the edge
/// is included iff the next f64 draw in [0,1) is below `p`. Identical
/// arguments reproduce the identical stream bit for bit.
pub fn gen_random_connected(
    n: usize,
    p: f64,
    seed: u64,
    count: usize,
) -> Result<Vec<Graph>, HarnessError> {
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(HarnessError::Argument(format!("n={n} outside 1..=62")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(HarnessError::Argument(format!("p={p} outside [0,1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut made = None;
        for _ in 0..GEN_ATTEMPT_BUDGET {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random::<f64>() < p {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).expect("generated edges are in range");
            if g.is_connected() {
                made = Some(g);
                break;
            }
        }
        match made {
            Some(g) => out.push(g),
            None => {
                return Err(HarnessError::CannotSatisfy {
                    attempts: GEN_ATTEMPT_BUDGET,
                    detail: format!("no connected sample at n={n}, p={p}"),
                })
            }
        }
    }
    Ok(out)
}

/// Isomorphism certificate: the maximum, over all vertex orderings, of the
/// adjacency bits accumulated column by column (new vertex against the
/// prefix, earliest prefix vertex most significant). Backtracking keeps
/// every prefix-maximal partial ordering, so equal certificates mean
/// isomorphic graphs. Fits in a u64 through n = 10.
pub fn canonical_certificate(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n * (n - 1) / 2 <= 64, "certificate overflows above n = 11");
    let mut frontier: Vec<(Vec<usize>, u64)> = (0..n).map(|v| (vec![v], 1u64 << v)).collect();
    let mut cert = 0u64;
    for depth in 1..n {
        let mut best = 0u64;
        let mut next: Vec<(Vec<usize>, u64)> = Vec::new();
        for (perm, used) in &frontier {
            let mut cand = !used & g.all_vertices().bits();
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let mut chunk = 0u64;
                for (pos, &u) in perm.iter().enumerate() {
                    if g.has_edge(u, v) {
                        chunk |= 1u64 << (depth - 1 - pos);
                    }
                }
                if chunk > best {
                    best = chunk;
                    next.clear();
                }
                if chunk == best {
                    let mut perm2 = perm.clone();
                    perm2.push(v);
                    next.push((perm2, used | (1u64 << v)));
                }
            }
        }
        cert = (cert << depth) | best;
        frontier = next;
    }
    cert
}

/// All graphs up to isomorphism, one list per order 1..=n, built by
/// extending the previous order's classes with every possible new
/// neighborhood and deduplicating by certificate. Each level is sorted by
/// certificate, so the corpus order is reproducible.
pub fn enumerate_levels(n: usize) -> Vec<Vec<Graph>> {
    use rayon::prelude::*;
    assert!((1..=10).contains(&n), "enumerator is desk-scale (n <= 10)");
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::from_edges(1, &[]).unwrap()]];
    for m in 2..=n {
        let certified: Vec<(u64, Graph)> = levels
            .last()
            .unwrap()
            .par_iter()
            .flat_map_iter(|parent| {
                (0u64..(1u64 << (m - 1))).map(move |nb| {
                    let mut rows: Vec<u64> = (0..m - 1)
                        .map(|v| parent.row(v) | (((nb >> v) & 1) << (m - 1)))
                        .collect();
                    rows.push(nb);
                    let cand = Graph::from_adj_rows(rows).expect("extension rows are valid");
                    (canonical_certificate(&cand), cand)
                })
            })
            .collect();
        let mut seen = HashSet::new();
        let mut next: Vec<(u64, Graph)> = Vec::new();
        for (cert, g) in certified {
            if seen.insert(cert) {
                next.push((cert, g));
            }
        }
        next.sort_by_key(|(cert, _)| *cert);
        levels.push(next.into_iter().map(|(_, g)| g).collect());
    }
    levels
}

/// All graphs on exactly `n` vertices, one per isomorphism class.
pub fn enumerate_graphs(n: usize) -> Vec<Graph> {
    enumerate_levels(n).pop().unwrap()
}

/// Connected classes on exactly `n` vertices.
pub fn enumerate_connected(n: usize) -> Vec<Graph> {
    enumerate_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Connected classes on 1..=n vertices, smallest order first.
pub fn enumerate_connected_up_to(n: usize) -> Vec<Graph> {
    enumerate_levels(n)
        .into_iter()
        .flatten()
        .filter(Graph::is_connected)
        .collect()
}
