//! Python bindings for `lionsweep-core`.
//!
//! Moves cross the boundary as lists of per-lion actions: `-1` for a lion
//! that stays, otherwise the vertex it moves to.

use lionsweep_core::cheeger::{self, Rational};
use lionsweep_core::dynamics::{self, Action, MotionModel, MoveStep};
use lionsweep_core::graph::{self as core_graph};
use lionsweep_core::isoperimetry::{self, FallDirection, PackingKind};
use lionsweep_core::search::{self, MinLions, SearchLimits, SearchVerdict, StartPolicy};
use lionsweep_core::strategies::{self, SweepPlan};
use lionsweep_core::{io, Error, Trace, VertexSet};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(lionsweep, ResourceLimitError, PyRuntimeError);
create_exception!(lionsweep, InfeasibleWalkError, PyValueError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit(_) => ResourceLimitError::new_err(e.to_string()),
        Error::InfeasibleParity { .. } | Error::InfeasibleTooShort { .. } => {
            InfeasibleWalkError::new_err(e.to_string())
        }
        Error::Io(_) => pyo3::exceptions::PyOSError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn model(name: &str) -> PyResult<MotionModel> {
    name.parse().map_err(to_py)
}

fn encode_moves(moves: &[MoveStep]) -> Vec<Vec<i64>> {
    moves
        .iter()
        .map(|m| m.0.iter().map(|a| a.encode()).collect())
        .collect()
}

fn decode_moves(raw: Vec<Vec<i64>>) -> PyResult<Vec<MoveStep>> {
    raw.into_iter()
        .map(|step| {
            step.into_iter()
                .map(Action::decode)
                .collect::<lionsweep_core::Result<Vec<_>>>()
                .map(MoveStep)
                .map_err(to_py)
        })
        .collect()
}

/// An undirected simple graph.
#[pyclass(name = "Graph", module = "lionsweep", frozen)]
struct PyGraph {
    inner: core_graph::Graph,
}

impl PyGraph {
    fn set(&self, vertices: Vec<usize>) -> PyResult<VertexSet> {
        self.inner.vertex_set(vertices).map_err(to_py)
    }
}

fn wrap(g: lionsweep_core::Result<core_graph::Graph>) -> PyResult<PyGraph> {
    g.map(|inner| PyGraph { inner }).map_err(to_py)
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        wrap(core_graph::Graph::from_edges(vertex_count, &edges))
    }

    #[staticmethod]
    fn square_grid(n: usize) -> PyResult<Self> {
        wrap(core_graph::build_square_grid(n))
    }

    #[staticmethod]
    #[pyo3(signature = (n, l=None))]
    fn tri_lattice(n: usize, l: Option<usize>) -> PyResult<Self> {
        wrap(core_graph::build_tri_lattice(n, l.unwrap_or(n)))
    }

    #[staticmethod]
    fn triangle(n: usize) -> PyResult<Self> {
        wrap(core_graph::build_triangle(n))
    }

    #[staticmethod]
    fn circulant(n: usize, k: usize) -> PyResult<Self> {
        wrap(core_graph::build_circulant(n, k))
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        wrap(core_graph::build_complete(n))
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        wrap(core_graph::build_path(n))
    }

    /// Parses the `vertices N` / `u v` edge-list format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        wrap(io::parse_graph(text))
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        wrap(io::load_graph(path))
    }

    fn to_text(&self) -> String {
        io::format_graph(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    /// `(row, col)` of a grid vertex, or None for graphs without coordinates.
    fn coord(&self, v: usize) -> Option<(usize, usize)> {
        self.inner.coord(v).map(|c| (c.row, c.col))
    }

    fn vertex_at(&self, row: usize, col: usize) -> Option<usize> {
        self.inner.vertex_at(row, col)
    }

    /// Vertices of the set with a neighbour outside it.
    fn boundary(&self, vertices: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(self
            .inner
            .boundary(&self.set(vertices)?)
            .map_err(to_py)?
            .to_vec())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn has_odd_cycle(&self) -> bool {
        self.inner.has_odd_cycle()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

fn trace_dict<'py>(py: Python<'py>, trace: &Trace) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("swept_at", trace.is_swept())?;
    d.set_item(
        "lions",
        trace
            .states
            .iter()
            .map(|s| s.lions.clone())
            .collect::<Vec<_>>(),
    )?;
    d.set_item(
        "cleared",
        trace
            .states
            .iter()
            .map(|s| s.cleared.to_vec())
            .collect::<Vec<_>>(),
    )?;
    d.set_item("moves", encode_moves(&trace.moves))?;
    d.set_item("recontaminations", trace.recontaminations())?;
    Ok(d)
}

/// Runs a move list from the given start and returns the whole trace.
#[pyfunction]
#[pyo3(signature = (graph, lions, moves, model="free"))]
fn simulate<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    lions: Vec<usize>,
    moves: Vec<Vec<i64>>,
    model: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let trace = dynamics::run(
        &graph.inner,
        self::model(model)?,
        &lions,
        &decode_moves(moves)?,
        false,
    )
    .map_err(to_py)?;
    trace_dict(py, &trace)
}

fn plan_tuple(plan: lionsweep_core::Result<SweepPlan>) -> PyResult<(Vec<usize>, Vec<Vec<i64>>)> {
    let plan = plan.map_err(to_py)?;
    Ok((plan.starts, encode_moves(&plan.moves)))
}

/// `(starts, moves)` for the row-by-row sweep of the n×l strip with n lions.
#[pyfunction]
#[pyo3(signature = (n, l, starts=None))]
fn row_sweep(
    n: usize,
    l: usize,
    starts: Option<Vec<usize>>,
) -> PyResult<(Vec<usize>, Vec<Vec<i64>>)> {
    let starts = match starts {
        Some(s) => s,
        None => {
            strategies::leftmost_column(&core_graph::build_tri_lattice(n, l).map_err(to_py)?, n)
        }
    };
    plan_tuple(strategies::row_sweep_moves(n, l, &starts))
}

/// `(starts, moves)` for the caffeinated wall sweep with 3n/2 lions.
#[pyfunction]
#[pyo3(signature = (n, l, starts=None))]
fn wall_sweep(
    n: usize,
    l: usize,
    starts: Option<Vec<usize>>,
) -> PyResult<(Vec<usize>, Vec<Vec<i64>>)> {
    let starts = match starts {
        Some(s) => s,
        None => strategies::wall_formation(n, l, 1).map_err(to_py)?,
    };
    plan_tuple(strategies::caffeinated_wall_moves(n, l, &starts))
}

#[pyfunction]
fn naive_column_sweep(n: usize, l: usize, steps: usize) -> PyResult<(Vec<usize>, Vec<Vec<i64>>)> {
    plan_tuple(strategies::naive_caffeinated_column_moves(n, l, steps))
}

/// A walk from `u` to `v` with exactly `m` steps.
#[pyfunction]
fn exact_length_walk(graph: &PyGraph, u: usize, v: usize, m: usize) -> PyResult<Vec<usize>> {
    Ok(strategies::exact_length_walk(&graph.inner, u, v, m)
        .map_err(to_py)?
        .0)
}

/// `(numerator, denominator, witness)` of the vertex Cheeger constant.
#[pyfunction]
fn cheeger_constant(graph: &PyGraph) -> PyResult<(i64, i64, Vec<usize>)> {
    let r = cheeger::cheeger_constant(&graph.inner).map_err(to_py)?;
    Ok((*r.g.numer(), *r.g.denom(), r.witness.to_vec()))
}

fn ratio(num: i64, den: i64) -> PyResult<Rational> {
    if den <= 0 || num < 0 {
        return Err(PyValueError::new_err(
            "expected a nonnegative fraction with positive denominator",
        ));
    }
    Ok(Rational::new(num, den))
}

#[pyfunction]
fn lion_bound(num: i64, den: i64, vertex_count: usize) -> PyResult<usize> {
    Ok(cheeger::lion_bound(ratio(num, den)?, vertex_count))
}

#[pyfunction]
fn polite_lion_bound(num: i64, den: i64, vertex_count: usize) -> PyResult<usize> {
    Ok(cheeger::polite_lion_bound(ratio(num, den)?, vertex_count))
}

fn limits(max_states: u64, max_depth: usize, dominance: bool) -> SearchLimits {
    SearchLimits {
        max_states,
        max_depth,
        dominance_pruning: dominance,
    }
}

/// Exhaustive search. Returns a dict with `verdict` ("cleared", "impossible"
/// or "unknown"), `explored`, `peak_frontier`, and `trace` when cleared.
#[pyfunction]
#[pyo3(signature = (graph, k, model="free", starts=None, max_states=search::DEFAULT_MAX_STATES, max_depth=search::DEFAULT_MAX_DEPTH, dominance=false))]
#[allow(clippy::too_many_arguments)]
fn can_clear<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    k: usize,
    model: &str,
    starts: Option<Vec<Vec<usize>>>,
    max_states: u64,
    max_depth: usize,
    dominance: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let policy = starts.map_or(StartPolicy::Auto, StartPolicy::Explicit);
    let m = self::model(model)?;
    let lim = limits(max_states, max_depth, dominance);
    let g = &graph.inner;
    let out = py
        .detach(|| search::can_clear(g, k, m, &policy, &lim))
        .map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("verdict", out.verdict.label())?;
    d.set_item("explored", out.explored)?;
    d.set_item("peak_frontier", out.peak_frontier)?;
    match &out.verdict {
        SearchVerdict::Cleared(t) => d.set_item("trace", trace_dict(py, t)?)?,
        SearchVerdict::Unknown(reason) => d.set_item("reason", reason)?,
        SearchVerdict::Impossible => {}
    }
    Ok(d)
}

/// Smallest sweeping team size up to `k_max`, or None if every size is
/// impossible. Raises ResourceLimitError when the search gives up.
#[pyfunction]
#[pyo3(signature = (graph, k_max, model="free", max_states=search::DEFAULT_MAX_STATES, max_depth=search::DEFAULT_MAX_DEPTH, dominance=false))]
fn min_lions(
    py: Python<'_>,
    graph: &PyGraph,
    k_max: usize,
    model: &str,
    max_states: u64,
    max_depth: usize,
    dominance: bool,
) -> PyResult<Option<usize>> {
    let m = self::model(model)?;
    let lim = limits(max_states, max_depth, dominance);
    let g = &graph.inner;
    match py
        .detach(|| search::min_lions(g, m, k_max, &lim))
        .map_err(to_py)?
    {
        MinLions::Found { k, .. } => Ok(Some(k)),
        MinLions::Exhausted { .. } => Ok(None),
        MinLions::Unknown { k, reason } => Err(ResourceLimitError::new_err(format!(
            "unknown at k = {k}: {reason}"
        ))),
    }
}

/// `[(size, min_boundary, witness), ...]` over the inclusive size range.
#[pyfunction]
fn iso_profile(
    graph: &PyGraph,
    size_lo: usize,
    size_hi: usize,
) -> PyResult<Vec<(usize, usize, Vec<usize>)>> {
    let p = isoperimetry::iso_profile(&graph.inner, size_lo, size_hi).map_err(to_py)?;
    Ok(p.entries
        .into_iter()
        .map(|e| (e.size, e.min_boundary, e.witness.to_vec()))
        .collect())
}

fn direction(name: &str) -> PyResult<FallDirection> {
    match name {
        "down-left" | "down_left" => Ok(FallDirection::DownLeft),
        "down-right" | "down_right" => Ok(FallDirection::DownRight),
        _ => Err(PyValueError::new_err(format!("unknown direction `{name}`"))),
    }
}

/// Fall-down image of a vertex set of the n×n grid (row 1 at the bottom).
#[pyfunction]
#[pyo3(signature = (n, vertices, direction="down-left"))]
fn fall_down(n: usize, vertices: Vec<usize>, direction: &str) -> PyResult<Vec<usize>> {
    let s = VertexSet::from_vertices(n * n, vertices).map_err(to_py)?;
    Ok(
        isoperimetry::fall_down_in(n, &s, self::direction(direction)?)
            .map_err(to_py)?
            .to_vec(),
    )
}

/// Counts of fall-down lemma violations over every subset of the n×n grid.
#[pyfunction]
#[pyo3(signature = (n, direction="down-left"))]
fn falldown_check<'py>(py: Python<'py>, n: usize, direction: &str) -> PyResult<Bound<'py, PyDict>> {
    let dir = self::direction(direction)?;
    let r = py
        .detach(|| {
            isoperimetry::falldown_check(
                n,
                dir,
                lionsweep_core::subsets::DEFAULT_SUBSET_LIMIT,
                true,
            )
        })
        .map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("subsets", r.subsets)?;
    d.set_item("violations", r.violations())?;
    d.set_item("square_increase", r.square_increase)?;
    d.set_item("lattice_increase", r.lattice_increase)?;
    d.set_item("boundary_mismatch", r.boundary_mismatch)?;
    Ok(d)
}

#[pyfunction]
fn packing(n: usize, kind: &str, count: usize) -> PyResult<Vec<usize>> {
    let kind: PackingKind = kind.parse().map_err(to_py)?;
    Ok(isoperimetry::packing(n, kind, count)
        .map_err(to_py)?
        .to_vec())
}

#[pyfunction]
fn triangular(n: usize) -> usize {
    isoperimetry::triangular(n)
}

/// CSV comparing exhaustive minimum boundaries with the two packings.
#[pyfunction]
fn conjecture_report(py: Python<'_>, n: usize) -> PyResult<String> {
    Ok(py
        .detach(|| isoperimetry::conjecture_report(n))
        .map_err(to_py)?
        .to_csv())
}

#[pymodule]
fn lionsweep(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add(
        "ResourceLimitError",
        m.py().get_type::<ResourceLimitError>(),
    )?;
    m.add(
        "InfeasibleWalkError",
        m.py().get_type::<InfeasibleWalkError>(),
    )?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(row_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(wall_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(naive_column_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(exact_length_walk, m)?)?;
    m.add_function(wrap_pyfunction!(cheeger_constant, m)?)?;
    m.add_function(wrap_pyfunction!(lion_bound, m)?)?;
    m.add_function(wrap_pyfunction!(polite_lion_bound, m)?)?;
    m.add_function(wrap_pyfunction!(can_clear, m)?)?;
    m.add_function(wrap_pyfunction!(min_lions, m)?)?;
    m.add_function(wrap_pyfunction!(iso_profile, m)?)?;
    m.add_function(wrap_pyfunction!(fall_down, m)?)?;
    m.add_function(wrap_pyfunction!(falldown_check, m)?)?;
    m.add_function(wrap_pyfunction!(packing, m)?)?;
    m.add_function(wrap_pyfunction!(triangular, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_report, m)?)?;
    Ok(())
}
