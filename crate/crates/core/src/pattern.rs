//! Named forbidden structures and exhaustive induced-subgraph detection.
//!
//! A [`Pattern`] is a small graph (at most 10 vertices) with a canonical
//! name. [`contains_induced`] searches a host for an injective embedding
//! that preserves both edges and non-edges; the search is a plain
//! backtracking sweep with degree and partial-map pruning, so a negative
//! answer is a proof of absence.

use thiserror::Error;

use crate::graph::{small, Graph, VertexSet};

/// Cap on pattern size; the structures in play are all desk-scale.
pub const MAX_PATTERN_VERTICES: usize = 10;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PatternError {
    #[error("invalid pattern parameter: {0}")]
    Argument(String),
    #[error("unknown pattern name {0:?}")]
    UnknownName(String),
    #[error("pattern family must not be empty")]
    EmptyFamily,
}

/// Constructible pattern kinds. `H1(l)` is a path on `l+1` vertices whose
/// head carries two extra non-adjacent vertices; `H2(l)` is the same with
/// those two joined by an edge. At `l = 1` they are the claw and the paw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternKind {
    Path(usize),
    Cycle(usize),
    Claw,
    Paw,
    CoP5,
    LinearForest(Vec<usize>),
    H1(usize),
    H2(usize),
    Custom(String, Graph),
}

/// A named pattern graph used as a forbidden induced structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    graph: Graph,
}

impl Pattern {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

/// An injective embedding of a pattern into a host, preserving edges and
/// non-edges: entry `i` is the host vertex carrying pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness(pub Vec<usize>);

impl Witness {
    /// Re-checks the embedding by direct edge / non-edge comparison.
    pub fn verify(&self, host: &Graph, pattern: &Pattern) -> bool {
        let p = pattern.graph();
        let map = &self.0;
        if map.len() != p.vertex_count() {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        for &h in map {
            if h >= host.vertex_count() || seen.contains(h) {
                return false;
            }
            seen.insert(h);
        }
        for i in 0..map.len() {
            for j in (i + 1)..map.len() {
                if p.has_edge(i, j) != host.has_edge(map[i], map[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Builds the pattern graph for `kind`, with its canonical name.
pub fn make_pattern(kind: PatternKind) -> Result<Pattern, PatternError> {
    let (name, graph) = match kind {
        PatternKind::Path(k) => {
            check_size("path", k, 1)?;
            (format!("P{k}"), small::path(k))
        }
        PatternKind::Cycle(l) => {
            check_size("cycle", l, 3)?;
            (format!("C{l}"), small::cycle(l))
        }
        PatternKind::Claw => ("claw".to_string(), small::star(3)),
        PatternKind::Paw => (
            "paw".to_string(),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap(),
        ),
        PatternKind::CoP5 => ("coP5".to_string(), small::path(5).complement()),
        PatternKind::LinearForest(parts) => {
            if parts.is_empty() {
                return Err(PatternError::Argument("linear forest needs at least one part".into()));
            }
            if parts.contains(&0) {
                return Err(PatternError::Argument("linear forest parts must be >= 1".into()));
            }
            let total: usize = parts.iter().sum();
            if total > MAX_PATTERN_VERTICES {
                return Err(PatternError::Argument(format!(
                    "linear forest on {total} vertices exceeds the {MAX_PATTERN_VERTICES}-vertex cap"
                )));
            }
            let mut edges = Vec::new();
            let mut base = 0usize;
            for &p in &parts {
                for i in 0..p - 1 {
                    edges.push((base + i, base + i + 1));
                }
                base += p;
            }
            let name = parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+");
            (name, Graph::from_edges(total, &edges).unwrap())
        }
        PatternKind::H1(l) => {
            check_size("H1", l + 3, 4)?;
            (format!("H1({l})"), hook_path(l, false))
        }
        PatternKind::H2(l) => {
            check_size("H2", l + 3, 4)?;
            (format!("H2({l})"), hook_path(l, true))
        }
        PatternKind::Custom(name, graph) => {
            if graph.vertex_count() > MAX_PATTERN_VERTICES {
                return Err(PatternError::Argument(format!(
                    "custom pattern on {} vertices exceeds the {MAX_PATTERN_VERTICES}-vertex cap",
                    graph.vertex_count()
                )));
            }
            (name, graph)
        }
    };
    Ok(Pattern { name, graph })
}

/// Two head vertices (0, 1) hang off vertex 2, which starts a path on
/// `l+1` vertices 2..=l+2. `joined` adds the 0-1 edge.
fn hook_path(l: usize, joined: bool) -> Graph {
    if l == 0 {
        // unreachable through make_pattern; kept total for safety
        return small::star(2);
    }
    let n = l + 3;
    let mut edges = vec![(0, 2), (1, 2)];
    for i in 2..n - 1 {
        edges.push((i, i + 1));
    }
    if joined {
        edges.push((0, 1));
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn check_size(what: &str, k: usize, min: usize) -> Result<(), PatternError> {
    if k < min {
        return Err(PatternError::Argument(format!("{what} parameter must be >= {min}, got {k}")));
    }
    if k > MAX_PATTERN_VERTICES {
        return Err(PatternError::Argument(format!(
            "{what} on {k} vertices exceeds the {MAX_PATTERN_VERTICES}-vertex cap"
        )));
    }
    Ok(())
}

/// Parses the CLI-facing pattern names: "P5", "C4", "claw", "paw",
/// "coP5", "H1(2)", "H2(2)", linear forests "2+2" / "1+4", and the
/// multiplicity shorthand "2P2" for "2+2".
pub fn parse_pattern_name(name: &str) -> Result<PatternKind, PatternError> {
    let s = name.trim();
    match s {
        "claw" => return Ok(PatternKind::Claw),
        "paw" => return Ok(PatternKind::Paw),
        "coP5" => return Ok(PatternKind::CoP5),
        _ => {}
    }
    if s.contains('+') {
        let parts = s
            .split('+')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PatternError::UnknownName(name.to_string()))?;
        return Ok(PatternKind::LinearForest(parts));
    }
    for (prefix, wrap) in [("H1(", true), ("H2(", false)] {
        if let Some(rest) = s.strip_prefix(prefix) {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| PatternError::UnknownName(name.to_string()))?;
            let l: usize = inner.parse().map_err(|_| PatternError::UnknownName(name.to_string()))?;
            return Ok(if wrap { PatternKind::H1(l) } else { PatternKind::H2(l) });
        }
    }
    if let Some(rest) = s.strip_prefix('P') {
        if let Ok(k) = rest.parse::<usize>() {
            return Ok(PatternKind::Path(k));
        }
    }
    if let Some(rest) = s.strip_prefix('C') {
        if let Ok(l) = rest.parse::<usize>() {
            return Ok(PatternKind::Cycle(l));
        }
    }
    // "<m>P<k>": m disjoint copies of P_k
    if let Some((m, k)) = s.split_once('P') {
        if let (Ok(m), Ok(k)) = (m.parse::<usize>(), k.parse::<usize>()) {
            if m >= 1 {
                return Ok(PatternKind::LinearForest(vec![k; m]));
            }
        }
    }
    Err(PatternError::UnknownName(name.to_string()))
}

/// Searches for an induced embedding of `pattern` in `host`. Pattern
/// vertices are assigned in index order and host candidates scanned
/// ascending, so the first embedding found is the lexicographically least
/// mapping.
pub fn contains_induced(host: &Graph, pattern: &Pattern) -> Option<Witness> {
    let p = pattern.graph();
    let pn = p.vertex_count();
    let hn = host.vertex_count();
    if pn > hn {
        return None;
    }
    let host_full = host.all_vertices().bits();
    let pat_deg: Vec<usize> = (0..pn).map(|v| p.degree(v)).collect();
    let deg_ok: Vec<u64> = {
        // candidates by degree for each pattern vertex
        let mut rows = vec![0u64; pn];
        for (i, row) in rows.iter_mut().enumerate() {
            for h in 0..hn {
                if host.degree(h) >= pat_deg[i] {
                    *row |= 1u64 << h;
                }
            }
        }
        rows
    };

    let mut map = vec![0usize; pn];
    if assign(host, p, &deg_ok, host_full, &mut map, 0, 0) {
        let w = Witness(map);
        debug_assert!(w.verify(host, pattern));
        return Some(w);
    }
    None
}

fn assign(
    host: &Graph,
    p: &Graph,
    deg_ok: &[u64],
    host_full: u64,
    map: &mut Vec<usize>,
    depth: usize,
    used: u64,
) -> bool {
    if depth == p.vertex_count() {
        return true;
    }
    let mut cand = deg_ok[depth] & !used & host_full;
    for (j, &mj) in map.iter().enumerate().take(depth) {
        // edges must map to edges and non-edges to non-edges
        if p.has_edge(depth, j) {
            cand &= host.row(mj);
        } else {
            cand &= !host.row(mj);
        }
    }
    let mut bits = cand;
    while bits != 0 {
        let h = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        map[depth] = h;
        if assign(host, p, deg_ok, host_full, map, depth + 1, used | (1u64 << h)) {
            return true;
        }
    }
    false
}

/// Specialized induced-path detector: a depth-first extension keeping
/// every new vertex adjacent to its predecessor only. Agrees with
/// `contains_induced(g, path(k))` but skips the generic machinery.
pub fn has_induced_path(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.vertex_count();
    if k > n {
        return false;
    }
    if k == 1 {
        return true;
    }
    for start in 0..n {
        // blocked: vertices adjacent to some path vertex other than the tip
        if extend_path(g, start, 1u64 << start, 0, k - 1) {
            return true;
        }
    }
    false
}

fn extend_path(g: &Graph, tip: usize, on_path: u64, blocked: u64, left: usize) -> bool {
    if left == 0 {
        return true;
    }
    let mut cand = g.row(tip) & !on_path & !blocked;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        // once we move on, everything adjacent to the old tip is off limits
        if extend_path(g, w, on_path | (1u64 << w), blocked | g.row(tip), left - 1) {
            return true;
        }
    }
    false
}

/// True iff no family member occurs as an induced subgraph.
pub fn is_family_free(g: &Graph, family: &[Pattern]) -> Result<bool, PatternError> {
    if family.is_empty() {
        return Err(PatternError::EmptyFamily);
    }
    Ok(family.iter().all(|p| contains_induced(g, p).is_none()))
}

/// Isomorphism check via the induced matcher: with equal vertex counts,
/// an induced embedding is exactly an isomorphism.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && contains_induced(
            a,
            &Pattern { name: "iso-probe".into(), graph: b.clone() },
        )
        .is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::small::*;

    fn pat(kind: PatternKind) -> Pattern {
        make_pattern(kind).unwrap()
    }

    #[test]
    fn make_pattern_shapes() {
        assert_eq!(pat(PatternKind::Path(3)).graph().vertex_count(), 3);
        assert_eq!(pat(PatternKind::Path(3)).graph().edge_count(), 2);
        assert_eq!(pat(PatternKind::CoP5).graph().edge_count(), 6);
        assert_eq!(pat(PatternKind::H1(2)).graph().vertex_count(), 5);
        assert_eq!(pat(PatternKind::H2(2)).graph().edge_count(), 5);
        let f = pat(PatternKind::LinearForest(vec![2, 2]));
        assert_eq!(f.name(), "2+2");
        assert_eq!(f.graph().vertex_count(), 4);
        assert_eq!(f.graph().edge_count(), 2);
    }

    #[test]
    fn h1_is_claw_and_h2_is_paw_at_l1() {
        assert!(is_isomorphic(pat(PatternKind::H1(1)).graph(), pat(PatternKind::Claw).graph()));
        assert!(is_isomorphic(pat(PatternKind::H2(1)).graph(), pat(PatternKind::Paw).graph()));
        assert!(!is_isomorphic(pat(PatternKind::H1(1)).graph(), pat(PatternKind::Paw).graph()));
    }

    #[test]
    fn make_pattern_rejects_bad_parameters() {
        assert!(make_pattern(PatternKind::Path(0)).is_err());
        assert!(make_pattern(PatternKind::Cycle(2)).is_err());
        assert!(make_pattern(PatternKind::Path(11)).is_err());
        assert!(make_pattern(PatternKind::LinearForest(vec![])).is_err());
        assert!(make_pattern(PatternKind::LinearForest(vec![2, 0])).is_err());
        assert!(make_pattern(PatternKind::H1(8)).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse_pattern_name("P5").unwrap(), PatternKind::Path(5));
        assert_eq!(parse_pattern_name("C4").unwrap(), PatternKind::Cycle(4));
        assert_eq!(parse_pattern_name("claw").unwrap(), PatternKind::Claw);
        assert_eq!(parse_pattern_name("paw").unwrap(), PatternKind::Paw);
        assert_eq!(parse_pattern_name("coP5").unwrap(), PatternKind::CoP5);
        assert_eq!(parse_pattern_name("H1(2)").unwrap(), PatternKind::H1(2));
        assert_eq!(parse_pattern_name("H2(1)").unwrap(), PatternKind::H2(1));
        assert_eq!(parse_pattern_name("2+2").unwrap(), PatternKind::LinearForest(vec![2, 2]));
        assert_eq!(parse_pattern_name("1+4").unwrap(), PatternKind::LinearForest(vec![1, 4]));
        assert_eq!(parse_pattern_name("2P2").unwrap(), PatternKind::LinearForest(vec![2, 2]));
        assert!(parse_pattern_name("Q7").is_err());
        assert!(parse_pattern_name("H1(x)").is_err());
    }

    #[test]
    fn matcher_basics() {
        // pattern equals host: identity witness
        let claw = pat(PatternKind::Claw);
        let w = contains_induced(&star(3), &claw).unwrap();
        assert_eq!(w.0, vec![0, 1, 2, 3]);
        assert!(w.verify(&star(3), &claw));

        // host max degree 2 < 3
        assert!(contains_induced(&cycle(5), &claw).is_none());

        // house has no induced 2P2 (checked exhaustively by the matcher)
        let house = pat(PatternKind::CoP5);
        let two_p2 = pat(PatternKind::LinearForest(vec![2, 2]));
        assert!(contains_induced(house.graph(), &two_p2).is_none());

        // pattern bigger than host
        assert!(contains_induced(&path(3), &pat(PatternKind::Path(4))).is_none());
    }

    #[test]
    fn induced_paths() {
        assert!(has_induced_path(&cycle(6), 5));
        assert!(!has_induced_path(&cycle(6), 6));
        assert!(!has_induced_path(&complete(5), 3));
        assert!(has_induced_path(&path(5), 5));
        assert!(has_induced_path(&path(5), 1));
        assert!(!has_induced_path(&path(5), 6));
    }

    #[test]
    fn family_freeness() {
        let fam = vec![pat(PatternKind::Path(5)), pat(PatternKind::Claw)];
        assert!(is_family_free(&cycle(5), &fam).unwrap());
        let fam2 = vec![pat(PatternKind::LinearForest(vec![2, 2])), pat(PatternKind::CoP5)];
        assert!(is_family_free(&cycle(5), &fam2).unwrap());
        assert!(!is_family_free(&path(5), &[pat(PatternKind::Path(5))]).unwrap());
        assert_eq!(is_family_free(&path(5), &[]).unwrap_err(), PatternError::EmptyFamily);
    }
}
