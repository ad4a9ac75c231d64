//! Python bindings: graphs, exact solving, pattern checks, corpora, and
//! bound verification, driven in-process from Python.
//!
//! Usage from Python:
//!
//! ```text
//! import coprobber_py as cr
//! g = cr.Graph.from_graph6("Cl")
//! assert g.cop_number() == 2
//! table = cr.solve(g, 2)
//! assert table.cop_win_overall
//! ```

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use coprobber_core::game;
use coprobber_core::graph;
use coprobber_core::graph6;
use coprobber_core::harness::{self, corpus, report, CopNumberCache, SpecId, TheoremSpec, VerifyOptions};
use coprobber_core::pattern;
use coprobber_core::strategy;

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An immutable simple undirected graph on at most 62 vertices.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: graph::Graph,
}

#[pymethods]
impl Graph {
    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Graph> {
        Ok(Graph { inner: graph6::parse_graph6(line).map_err(value_err)? })
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Graph> {
        Ok(Graph { inner: graph::Graph::from_edges(n, &edges).map_err(value_err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn to_graph6(&self) -> String {
        graph6::emit_graph6(&self.inner)
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn diameter(&self) -> PyResult<u32> {
        self.inner.diameter().map_err(value_err)
    }

    fn distance(&self, u: usize, v: usize) -> PyResult<Option<u32>> {
        self.inner.distance(u, v).map_err(value_err)
    }

    fn complement(&self) -> Graph {
        Graph { inner: self.inner.complement() }
    }

    fn cop_number(&self) -> PyResult<usize> {
        game::cop_number(&self.inner).map_err(value_err)
    }

    fn is_dismantlable(&self) -> PyResult<bool> {
        game::is_dismantlable(&self.inner).map_err(value_err)
    }

    /// Witness vertices of an induced occurrence of the named pattern, or
    /// None when the graph is free of it.
    fn find_induced(&self, pattern_name: &str) -> PyResult<Option<Vec<usize>>> {
        let kind = pattern::parse_pattern_name(pattern_name).map_err(value_err)?;
        let p = pattern::make_pattern(kind).map_err(value_err)?;
        Ok(pattern::contains_induced(&self.inner, &p).map(|w| w.0))
    }

    fn is_family_free(&self, pattern_names: Vec<String>) -> PyResult<bool> {
        let family = pattern_names
            .iter()
            .map(|n| {
                pattern::parse_pattern_name(n)
                    .and_then(pattern::make_pattern)
                    .map_err(value_err)
            })
            .collect::<PyResult<Vec<_>>>()?;
        pattern::is_family_free(&self.inner, &family).map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, graph6={:?})", self.inner.vertex_count(), self.to_graph6())
    }
}

/// The fully solved game at a fixed cop count.
#[pyclass(frozen)]
struct SolveTable {
    inner: game::SolveTable,
}

fn side_of(s: &str) -> PyResult<game::Side> {
    match s {
        "cop" => Ok(game::Side::Cop),
        "robber" => Ok(game::Side::Robber),
        other => Err(PyValueError::new_err(format!("side must be 'cop' or 'robber', got {other:?}"))),
    }
}

#[pymethods]
impl SolveTable {
    #[getter]
    fn cop_win_overall(&self) -> bool {
        self.inner.cop_win_overall()
    }

    #[getter]
    fn initial_cops(&self) -> Option<Vec<usize>> {
        self.inner.initial_cops().map(|m| m.to_vec())
    }

    #[getter]
    fn cop_count(&self) -> usize {
        self.inner.cop_count()
    }

    fn win(&self, cops: Vec<usize>, robber: usize, side: &str) -> PyResult<bool> {
        let c = game::Configuration::new(cops, robber, side_of(side)?);
        self.inner.win(&c).map_err(value_err)
    }

    fn steps(&self, cops: Vec<usize>, robber: usize, side: &str) -> PyResult<Option<u32>> {
        let c = game::Configuration::new(cops, robber, side_of(side)?);
        self.inner.steps(&c).map_err(value_err)
    }

    fn optimal_cop_move(&self, cops: Vec<usize>, robber: usize) -> PyResult<Vec<usize>> {
        let c = game::Configuration::new(cops, robber, game::Side::Cop);
        Ok(self.inner.optimal_cop_move(&c).map_err(value_err)?.cops)
    }

    fn optimal_robber_move(&self, cops: Vec<usize>, robber: usize) -> PyResult<usize> {
        let c = game::Configuration::new(cops, robber, game::Side::Robber);
        self.inner.optimal_robber_move(&c).map_err(value_err)
    }

    /// One line per configuration, "cops;robber;turn;win;steps".
    fn dump(&self) -> String {
        self.inner.dump()
    }
}

#[pyfunction]
fn solve(g: &Graph, k: usize) -> PyResult<SolveTable> {
    Ok(SolveTable { inner: game::solve(&g.inner, k).map_err(value_err)? })
}

/// All connected graphs on exactly n vertices, one per isomorphism class.
#[pyfunction]
fn enumerate_connected(n: usize) -> PyResult<Vec<Graph>> {
    if !(1..=10).contains(&n) {
        return Err(PyValueError::new_err("enumeration supports 1..=10 vertices"));
    }
    Ok(corpus::enumerate_connected(n).into_iter().map(|inner| Graph { inner }).collect())
}

/// Reproducible random connected graphs.
#[pyfunction]
fn gen_random_connected(n: usize, p: f64, seed: u64, count: usize) -> PyResult<Vec<Graph>> {
    Ok(corpus::gen_random_connected(n, p, seed, count)
        .map_err(value_err)?
        .into_iter()
        .map(|inner| Graph { inner })
        .collect())
}

/// Plays a named strategy against the optimal robber; returns
/// (captured, round_or_None, transcript).
#[pyfunction]
#[pyo3(signature = (g, strategy_name, budget=None))]
fn play_strategy(g: &Graph, strategy_name: &str, budget: Option<u64>) -> PyResult<(bool, Option<u32>, String)> {
    let s = strategy::Strategy::parse_name(strategy_name).map_err(value_err)?;
    let k = s.required_cops(&g.inner);
    let budget = budget.unwrap_or_else(|| strategy::default_budget(&g.inner, k));
    let r = strategy::run_match(&g.inner, &s, &strategy::RobberPolicy::Optimal, budget).map_err(value_err)?;
    let (captured, round) = match r.outcome {
        strategy::MatchOutcome::Captured { round } => (true, Some(round)),
        strategy::MatchOutcome::BudgetExhausted => (false, None),
    };
    Ok((captured, round, r.export_transcript()))
}

/// Verifies a bound specification over graphs; returns the report as a
/// JSON string.
#[pyfunction]
#[pyo3(signature = (spec, graphs, k=None, l=None, forest=None, with_strategy=false))]
fn verify_spec(
    spec: &str,
    graphs: Vec<PyRef<Graph>>,
    k: Option<usize>,
    l: Option<usize>,
    forest: Option<Vec<usize>>,
    with_strategy: bool,
) -> PyResult<String> {
    let id = SpecId::from_cli(spec, k, l, forest.as_deref()).map_err(value_err)?;
    let theorem = TheoremSpec::new(id).map_err(value_err)?;
    let mut cache = CopNumberCache::in_memory();
    let stream = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| Ok((i + 1, g.inner.clone())))
        .collect::<Vec<Result<_, harness::HarnessError>>>();
    let rep = harness::verify_theorem(&theorem, stream, &mut cache, &VerifyOptions { with_strategy })
        .map_err(value_err)?;
    Ok(report::emit_json(&rep))
}

#[pymodule]
fn coprobber_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<SolveTable>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_connected, m)?)?;
    m.add_function(wrap_pyfunction!(gen_random_connected, m)?)?;
    m.add_function(wrap_pyfunction!(play_strategy, m)?)?;
    m.add_function(wrap_pyfunction!(verify_spec, m)?)?;
    Ok(())
}
