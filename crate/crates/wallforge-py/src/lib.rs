use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::Value;

use wallforge::abacus::{self, BeadConfig, Sector, TupleImage};
use wallforge::qseries::{string_function, StringCase};
use wallforge::{crystal, Family, Orient, Partition, Wall};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

// Values cross the boundary as JSON; cheap at these sizes and keeps the
// conversions in one place.
fn to_value(obj: &Bound<'_, PyAny>) -> PyResult<Value> {
    let text: String = obj.py().import("json")?.call_method1("dumps", (obj,))?.extract()?;
    serde_json::from_str(&text).map_err(err)
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn wall_in(obj: &Bound<'_, PyAny>) -> PyResult<Wall> {
    Wall::from_json(&to_value(obj)?).map_err(err)
}

/// Compact form: plain heights, with `"5ul"`/`"5lr"` for split tops.
fn wall_value(w: &Wall) -> Value {
    Value::Array(
        w.columns
            .iter()
            .map(|c| match c.orient {
                None => Value::from(c.b),
                Some(Orient::LR) => Value::from(format!("{}lr", c.b)),
                Some(Orient::UL) => Value::from(format!("{}ul", c.b)),
            })
            .collect(),
    )
}

fn sector(cross: bool) -> Sector {
    if cross { Sector::Cross } else { Sector::Diagonal }
}

#[pyclass(name = "Model", frozen)]
struct PyModel {
    inner: wallforge::Model,
}

#[pymethods]
impl PyModel {
    #[new]
    #[pyo3(signature = (family, n, lam = 0))]
    fn new(family: &str, n: u32, lam: u32) -> PyResult<Self> {
        let family: Family = family.parse().map_err(err)?;
        Ok(PyModel { inner: wallforge::Model::new(family, n, lam).map_err(err)? })
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.inner.family().name()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn lam(&self) -> u32 {
        self.inner.lambda()
    }

    fn __repr__(&self) -> String {
        format!("Model({}, n={}, lam={})", self.inner.family(), self.inner.n(), self.inner.lambda())
    }

    fn is_valid(&self, wall: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(self.inner.is_valid(&wall_in(wall)?))
    }

    fn content(&self, wall: &Bound<'_, PyAny>) -> PyResult<Vec<u64>> {
        Ok(self.inner.content(&wall_in(wall)?).0)
    }

    /// `m` when the content is `mδ`, else None.
    fn delta_multiple(&self, wall: &Bound<'_, PyAny>) -> PyResult<Option<u64>> {
        let c = self.inner.content(&wall_in(wall)?);
        Ok(self.inner.data().is_delta_multiple(&c))
    }

    fn to_beads<'py>(&self, py: Python<'py>, wall: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        let cfg = abacus::to_beads(&self.inner, &wall_in(wall)?).map_err(err)?;
        to_py(py, &cfg.to_json(&self.inner))
    }

    fn from_beads<'py>(&self, py: Python<'py>, beads: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        let cfg = BeadConfig::from_json(&to_value(beads)?).map_err(err)?;
        to_py(py, &wall_value(&abacus::from_beads(&self.inner, &cfg).map_err(err)?))
    }

    /// `(reduced wall, moves per label)`.
    fn reduce<'py>(&self, py: Python<'py>, wall: &Bound<'py, PyAny>) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
        let (w, red) = abacus::reduce_wall(&self.inner, &wall_in(wall)?).map_err(err)?;
        Ok((to_py(py, &wall_value(&w))?, to_py(py, &serde_json::to_value(&red.moves).map_err(err)?)?))
    }

    /// `(m, tuple)`; the tuple is a dict tagged by `kind`.
    fn pi<'py>(&self, py: Python<'py>, wall: &Bound<'py, PyAny>) -> PyResult<(u64, Bound<'py, PyAny>)> {
        let (m, t) = abacus::pi_forward(&self.inner, &wall_in(wall)?).map_err(err)?;
        Ok((m, to_py(py, &serde_json::to_value(&t).map_err(err)?)?))
    }

    fn pi_inverse<'py>(&self, py: Python<'py>, tuple: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        let t: TupleImage = serde_json::from_value(to_value(tuple)?).map_err(err)?;
        to_py(py, &wall_value(&abacus::pi_inverse(&self.inner, &t).map_err(err)?))
    }

    #[pyo3(signature = (m, cross = false))]
    fn walls<'py>(&self, py: Python<'py>, m: u64, cross: bool) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let d = self.inner.data();
        let content = if cross {
            let g = d.gamma.clone().ok_or_else(|| err("no cross string for this family"))?;
            wallforge::Content(g).add(&d.delta_content(m))
        } else {
            d.delta_content(m)
        };
        let walls = self.inner.enumerate_content(&content).map_err(err)?;
        walls.iter().map(|w| to_py(py, &wall_value(w))).collect()
    }

    #[pyo3(signature = (m, cross = false))]
    fn targets<'py>(&self, py: Python<'py>, m: u64, cross: bool) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let ts = abacus::enumerate_targets(&self.inner, sector(cross), m).map_err(err)?;
        ts.iter().map(|t| to_py(py, &serde_json::to_value(t).map_err(err)?)).collect()
    }

    /// Coefficient of `q^m` in the matching string function.
    #[pyo3(signature = (m, cross = false))]
    fn series_coeff(&self, m: usize, cross: bool) -> PyResult<String> {
        let (f, n) = (self.inner.family(), self.inner.n());
        let case = StringCase::for_weight(f, n, self.inner.lambda(), cross).map_err(err)?;
        let s = string_function(f, n, case).and_then(|x| x.expand_q(m)).map_err(err)?;
        Ok(s.coeff(m).map_err(err)?.to_string())
    }

    fn e<'py>(&self, py: Python<'py>, wall: &Bound<'py, PyAny>, i: u32) -> PyResult<Option<Bound<'py, PyAny>>> {
        crystal::e_op(&self.inner, &wall_in(wall)?, i).map(|w| to_py(py, &wall_value(&w))).transpose()
    }

    fn f<'py>(&self, py: Python<'py>, wall: &Bound<'py, PyAny>, i: u32) -> PyResult<Option<Bound<'py, PyAny>>> {
        crystal::f_op(&self.inner, &wall_in(wall)?, i).map(|w| to_py(py, &wall_value(&w))).transpose()
    }

    /// DOT text of the crystal graph grown `depth` steps from the ground state.
    fn crystal_dot(&self, depth: usize) -> String {
        crystal::crystal_graph(&self.inner, depth).to_dot()
    }
}

/// Series coefficients `c_0..c_order` as Python ints.
#[pyfunction]
fn string_coefficients(py: Python<'_>, case: &str, n: u32, order: usize) -> PyResult<Vec<Py<PyAny>>> {
    let case = StringCase::parse(case).map_err(err)?;
    let s = string_function(case.family(), n, case).and_then(|f| f.expand_q(order)).map_err(err)?;
    let int = py.import("builtins")?.getattr("int")?;
    s.coeffs().iter().map(|c| Ok(int.call1((c.to_string(),))?.unbind())).collect()
}

#[pyfunction]
fn core_quotient(parts: Vec<u32>, n: u32) -> PyResult<(Vec<u32>, Vec<Vec<u32>>)> {
    let p = Partition::from_unsorted(parts);
    let (core, quot) = p.core_quotient(n).map_err(err)?;
    Ok((core.parts().to_vec(), quot.iter().map(|q| q.parts().to_vec()).collect()))
}

#[pyfunction]
fn frobenius(parts: Vec<u32>) -> (Vec<u32>, Vec<u32>) {
    let f = Partition::from_unsorted(parts).to_frobenius();
    (f.arms, f.legs)
}

/// `(name, ok, actual)` for each worked example.
#[pyfunction]
fn examples() -> PyResult<Vec<(String, bool, String)>> {
    let checks = wallforge::examples::run_all().map_err(err)?;
    Ok(checks.into_iter().map(|c| (c.name.clone(), c.ok(), c.actual)).collect())
}

#[pymodule]
fn wallforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyModel>()?;
    m.add_function(wrap_pyfunction!(string_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(core_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius, m)?)?;
    m.add_function(wrap_pyfunction!(examples, m)?)?;
    Ok(())
}
