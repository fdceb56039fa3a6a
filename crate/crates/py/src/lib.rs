//! Python bindings: `mono2t.Polygon`, `mono2t.Transmitter`, `mono2t.Solution`.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use mono2t_core as core;
use mono2t_core::exact::ExactMode;
use mono2t_core::{Error, Point, Power};

create_exception!(mono2t, BudgetExhausted, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::NoSolutionWithinBudget(_) => BudgetExhausted::new_err(e.to_string()),
        Error::Polygon(_)
        | Error::UnknownFixture(_)
        | Error::Solution(_)
        | Error::InvalidPower(_) => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn power(k: u32) -> PyResult<Power> {
    Power::try_from(k).map_err(to_py)
}

/// Axis-parallel segment: `orientation` is "v" or "h", `anchor` the fixed
/// coordinate and `span` the closed range of the other one.
#[pyclass(frozen, eq, hash, from_py_object, module = "mono2t")]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Transmitter(core::Transmitter);

#[pymethods]
impl Transmitter {
    #[new]
    fn new(orientation: &str, anchor: i64, span: (i64, i64)) -> PyResult<Self> {
        let t = match orientation {
            "v" => core::Transmitter::vertical(anchor, span.0, span.1),
            "h" => core::Transmitter::horizontal(anchor, span.0, span.1),
            other => {
                return Err(PyValueError::new_err(format!(
                    "orientation must be 'v' or 'h', got {other:?}"
                )))
            }
        };
        Ok(Self(t))
    }

    #[getter]
    fn orientation(&self) -> &'static str {
        self.0.orientation.code()
    }

    #[getter]
    fn anchor(&self) -> i64 {
        self.0.anchor
    }

    #[getter]
    fn span(&self) -> (i64, i64) {
        (self.0.span.lo, self.0.span.hi)
    }

    fn __repr__(&self) -> String {
        format!(
            "Transmitter({:?}, {}, ({}, {}))",
            self.0.orientation.code(),
            self.0.anchor,
            self.0.span.lo,
            self.0.span.hi
        )
    }
}

#[pyclass(frozen, module = "mono2t")]
pub struct Solution(core::Solution);

#[pymethods]
impl Solution {
    #[getter]
    fn transmitters(&self) -> Vec<Transmitter> {
        self.0
            .transmitters
            .iter()
            .copied()
            .map(Transmitter)
            .collect()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k.crossings()
    }

    #[getter]
    fn count(&self) -> usize {
        self.0.count()
    }

    #[getter]
    fn iterations(&self) -> usize {
        self.0.iterations
    }

    #[getter]
    fn coverage_complete(&self) -> bool {
        self.0.coverage_complete
    }

    #[getter]
    fn solver(&self) -> &'static str {
        self.0.solver.name()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __len__(&self) -> usize {
        self.0.count()
    }

    fn __repr__(&self) -> String {
        format!(
            "Solution(solver={:?}, k={}, count={}, coverage_complete={})",
            self.0.solver.name(),
            self.k(),
            self.0.count(),
            self.0.coverage_complete
        )
    }
}

/// Validated x-monotone orthogonal polygon.
#[pyclass(frozen, eq, module = "mono2t")]
#[derive(PartialEq)]
pub struct Polygon(core::OrthoPolygon);

#[pymethods]
impl Polygon {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        core::parse_polygon(text)
            .map(Self)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[staticmethod]
    fn from_vertices(vertices: Vec<(i64, i64)>) -> PyResult<Self> {
        let ring: Vec<Point> = vertices.into_iter().map(Point::from).collect();
        core::validate(&ring)
            .map(Self)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// One of RECT, VALLEY, STAIR3, STAIR6, GAP7.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        let f = name.parse::<core::Fixture>().map_err(to_py)?;
        Ok(Self(core::fixture(f)))
    }

    #[staticmethod]
    #[pyo3(signature = (slabs, seed, max_height = 8, max_width = 4))]
    fn random(slabs: usize, seed: u64, max_height: i64, max_width: i64) -> PyResult<Self> {
        if slabs == 0 || max_height < 2 || max_width < 1 {
            return Err(PyValueError::new_err(
                "need slabs >= 1, max_height >= 2 and max_width >= 1",
            ));
        }
        Ok(Self(core::random_monotone(
            slabs, max_height, max_width, seed,
        )))
    }

    #[getter]
    fn vertices(&self) -> Vec<(i64, i64)> {
        self.0.vertices().iter().map(|p| (p.x, p.y)).collect()
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    /// Slabs as `(x0, x1, bottom, top)`.
    #[getter]
    fn slabs(&self) -> Vec<(i64, i64, i64, i64)> {
        let prof = self.0.profile();
        prof.xs()
            .windows(2)
            .zip(prof.spans())
            .map(|(w, s)| (w[0], w[1], s.lo, s.hi))
            .collect()
    }

    #[getter]
    fn area(&self) -> i64 {
        self.0.profile().area()
    }

    fn reflex_vertices(&self) -> Vec<(i64, i64)> {
        core::candidates::reflex_vertices(&self.0)
            .into_iter()
            .map(|p| (p.x, p.y))
            .collect()
    }

    #[pyo3(signature = (pruned = false))]
    fn candidates(&self, pruned: bool) -> PyResult<Vec<Transmitter>> {
        let mut set = core::standard_candidates(&self.0);
        if pruned {
            set = core::prune_dominated(&set, &self.0, Power::Two).map_err(to_py)?;
        }
        Ok(set.into_vec().into_iter().map(Transmitter).collect())
    }

    fn approximate(&self, py: Python<'_>) -> PyResult<Solution> {
        py.detach(|| core::approximate_2transmitters(&self.0))
            .map(Solution)
            .map_err(to_py)
    }

    /// Minimum-size cover; `budget` defaults to the slab count.
    #[pyo3(signature = (k = 2, mode = "standard", budget = None))]
    fn exact(
        &self,
        py: Python<'_>,
        k: u32,
        mode: &str,
        budget: Option<usize>,
    ) -> PyResult<Solution> {
        let k = power(k)?;
        let mode: ExactMode = mode.parse().map_err(to_py)?;
        let budget = budget.unwrap_or_else(|| self.0.profile().slab_count());
        py.detach(|| core::exact_min_transmitters(&self.0, k, mode, budget))
            .map(Solution)
            .map_err(to_py)
    }

    /// Whether the given segments jointly guard the polygon with power `k`.
    #[pyo3(signature = (transmitters, k = 2))]
    fn covers(&self, transmitters: Vec<Transmitter>, k: u32) -> PyResult<bool> {
        let ts: Vec<core::Transmitter> = transmitters.into_iter().map(|t| t.0).collect();
        if let Some(bad) = ts.iter().find(|t| !self.0.profile().contains_segment(t)) {
            return Err(PyValueError::new_err(format!(
                "{bad} is not inside the polygon"
            )));
        }
        core::solution::covers(&self.0, &ts, power(k)?).map_err(to_py)
    }

    fn solution_from_json(&self, text: &str) -> PyResult<Solution> {
        core::Solution::from_json(text, &self.0)
            .map(Solution)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __len__(&self) -> usize {
        self.0.vertices().len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Polygon({} vertices, {} slabs)",
            self.0.vertices().len(),
            self.0.profile().slab_count()
        )
    }
}

#[pymodule]
fn mono2t(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polygon>()?;
    m.add_class::<Transmitter>()?;
    m.add_class::<Solution>()?;
    m.add("BudgetExhausted", m.py().get_type::<BudgetExhausted>())?;
    Ok(())
}
