//! Python bindings: permutations, gates, circuits, libraries, synthesis,
//! optimization and simulation.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use revlib::group::{analyze_sublibraries_with, closure, SubLibraryOptions};
use revlib::netlist::{self, Netlist};
use revlib::qopt::{optimize_elementary, optimize_with, OptimizeOptions, DEFAULT_PASS_LIMIT};
use revlib::report::TableKind;
use revlib::synth::{min_cost_table, min_length_table};
use revlib::{BitVector, Circuit, Error, GateInstance, GateKind, Library, Permutation};

/// Usage errors become `ValueError`, everything else `RuntimeError`.
fn py_err(e: Error) -> PyErr {
    if e.is_input_error() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

trait OrPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for revlib::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

#[pyclass(name = "Permutation", module = "revlib_py", frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPermutation(pub Permutation);

#[pymethods]
impl PyPermutation {
    /// From the 1-based image list `[s(1), .., s(2^n)]`.
    #[new]
    fn new(images: Vec<u32>) -> PyResult<Self> {
        if !images.len().is_power_of_two() || images.len() < 2 {
            return Err(PyValueError::new_err(format!(
                "image list length {} is not 2^n for n >= 1",
                images.len()
            )));
        }
        let wires = images.len().trailing_zeros() as u8;
        Permutation::from_images(wires, &images).py().map(Self)
    }

    #[staticmethod]
    fn identity(wires: u8) -> PyResult<Self> {
        Permutation::identity(wires).py().map(Self)
    }

    #[staticmethod]
    fn from_cycles(text: &str, wires: u8) -> PyResult<Self> {
        Permutation::from_cycles(text, wires).py().map(Self)
    }

    #[getter]
    fn wires(&self) -> u8 {
        self.0.wires()
    }

    fn images(&self) -> Vec<u32> {
        self.0.images()
    }

    fn cycles(&self) -> String {
        self.0.to_cycles()
    }

    /// `self` first, then `then`.
    fn compose(&self, then: &Self) -> PyResult<Self> {
        self.0.compose(&then.0).py().map(Self)
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// Image of a 1-based state.
    fn apply(&self, state: u32) -> PyResult<u32> {
        let s = revlib::StateIndex::new(state, self.0.wires()).py()?;
        Ok(self.0.apply(s).py()?.value())
    }

    /// Image of an input bit string, most significant wire first.
    fn apply_bits(&self, bits: &str) -> PyResult<String> {
        let bits: BitVector = bits.parse().py()?;
        Ok(self.0.apply_bits(&bits).py()?.to_string())
    }

    fn __str__(&self) -> String {
        self.0.to_cycles()
    }

    fn __repr__(&self) -> String {
        format!("Permutation.from_cycles('{}', {})", self.0.to_cycles(), self.0.wires())
    }
}

#[pyclass(name = "Gate", module = "revlib_py", frozen, eq)]
#[derive(Clone, PartialEq, Eq)]
pub struct PyGate(pub GateInstance);

#[pymethods]
impl PyGate {
    /// Parses gate text such as `"T3 1 2 3"`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().py().map(Self)
    }

    #[getter]
    fn kind(&self) -> String {
        self.0.kind().to_string()
    }

    #[getter]
    fn wires(&self) -> Vec<u32> {
        self.0.wires().iter().map(|&w| w.into()).collect()
    }

    #[pyo3(signature = (n = None))]
    fn semantics(&self, n: Option<u8>) -> PyResult<PyPermutation> {
        let n = n.unwrap_or_else(|| self.0.max_wire());
        self.0.semantics(n).py().map(PyPermutation)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Gate('{}')", self.0)
    }
}

#[pyclass(name = "Circuit", module = "revlib_py", frozen)]
#[derive(Clone)]
pub struct PyCircuit(pub Circuit);

#[pymethods]
impl PyCircuit {
    /// Parses a netlist of reversible gates.
    #[new]
    fn new(netlist: &str) -> PyResult<Self> {
        netlist::parse_circuit(netlist).py().map(Self)
    }

    #[getter]
    fn wires(&self) -> u8 {
        self.0.wires()
    }

    fn gates(&self) -> Vec<PyGate> {
        self.0.gates().iter().cloned().map(PyGate).collect()
    }

    fn permutation(&self) -> PyResult<PyPermutation> {
        self.0.permutation().py().map(PyPermutation)
    }

    /// Quantum cost under the default cost model.
    fn cost(&self) -> PyResult<u32> {
        self.0.cost(&Default::default()).py()
    }

    fn simulate(&self, bits: &str) -> PyResult<String> {
        let bits: BitVector = bits.parse().py()?;
        Ok(self.0.permutation().py()?.apply_bits(&bits).py()?.to_string())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "Library", module = "revlib_py", frozen)]
#[derive(Clone)]
pub struct PyLibrary(pub Library);

#[pymethods]
impl PyLibrary {
    /// A standard library by name, or a custom one from a gate list.
    #[new]
    #[pyo3(signature = (name, gates = None, wires = 3))]
    fn new(name: &str, gates: Option<&str>, wires: u8) -> PyResult<Self> {
        match gates {
            Some(list) => {
                let gates = netlist::parse_gate_list(list).py()?;
                Library::new(name, wires, gates).py().map(Self)
            }
            None => Library::named(name).py().map(Self),
        }
    }

    #[getter]
    fn name(&self) -> &str {
        self.0.name()
    }

    fn gates(&self) -> Vec<PyGate> {
        self.0.gates().iter().cloned().map(PyGate).collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn closure_size(&self) -> PyResult<u64> {
        Ok(closure(&self.0.permutations().py()?).py()?.size)
    }

    fn is_universal(&self) -> PyResult<bool> {
        Ok(closure(&self.0.permutations().py()?).py()?.universal)
    }

    #[pyo3(signature = (list_minimal = false))]
    fn sublibraries<'py>(&self, py: Python<'py>, list_minimal: bool) -> PyResult<Bound<'py, PyDict>> {
        let opts = SubLibraryOptions { list_minimal, ..Default::default() };
        let r = analyze_sublibraries_with(&self.0, opts).py()?;
        let d = PyDict::new(py);
        d.set_item("library", &r.library)?;
        d.set_item("library_size", r.library_size)?;
        d.set_item("total_subsets", r.total_subsets)?;
        d.set_item("universal_subsets", r.universal_subsets)?;
        d.set_item("utilization_percent", r.utilization_percent)?;
        d.set_item("min_universal_size", r.min_universal_size)?;
        d.set_item("subsets_at_min_size", r.subsets_at_min_size)?;
        d.set_item("universal_at_min_size", r.universal_at_min_size)?;
        d.set_item("min_utilization_percent", r.min_utilization_percent)?;
        if let Some(m) = r.minimal_subsets {
            d.set_item("minimal_subsets", m)?;
        }
        Ok(d)
    }

    /// Minimum-length (or minimum-cost) circuit for `target`.
    #[pyo3(signature = (target, metric = "length"))]
    fn synth(&self, target: &PyPermutation, metric: &str) -> PyResult<PyCircuit> {
        let table = match metric {
            "length" => min_length_table(&self.0),
            "cost" => min_cost_table(&self.0, self.0.cost_model()),
            other => return Err(PyValueError::new_err(format!("unknown metric {other:?}"))),
        }
        .py()?;
        table.reconstruct(&target.0).py().map(PyCircuit)
    }

    /// Histogram of minimum lengths (or costs) over all functions.
    #[pyo3(signature = (metric = "length"))]
    fn histogram(&self, metric: &str) -> PyResult<Vec<u64>> {
        let table = match metric {
            "length" => min_length_table(&self.0),
            "cost" => min_cost_table(&self.0, self.0.cost_model()),
            other => return Err(PyValueError::new_err(format!("unknown metric {other:?}"))),
        }
        .py()?;
        Ok(table.histogram())
    }
}

#[pyfunction]
#[pyo3(signature = (kind, n = 3))]
fn enumerate_gates(kind: &str, n: u8) -> PyResult<Vec<PyGate>> {
    let kind: GateKind = kind.parse().py()?;
    Ok(revlib::gate::enumerate_gates(kind, n).py()?.into_iter().map(PyGate).collect())
}

#[pyfunction]
fn closure_size(generators: Vec<PyPermutation>) -> PyResult<u64> {
    let gens: Vec<Permutation> = generators.into_iter().map(|p| p.0).collect();
    Ok(closure(&gens).py()?.size)
}

/// Optimizes a netlist. Returns the elementary netlist and the
/// `{before, after, passes}` cost report.
#[pyfunction]
#[pyo3(signature = (netlist, pass_limit = DEFAULT_PASS_LIMIT, variants = true))]
fn optimize<'py>(
    py: Python<'py>,
    netlist: &str,
    pass_limit: u32,
    variants: bool,
) -> PyResult<(String, Bound<'py, PyDict>)> {
    let result = match netlist::parse(netlist).py()? {
        Netlist::Classical(c) => optimize_with(&c, OptimizeOptions { pass_limit, variants }),
        Netlist::Elementary(e) => optimize_elementary(&e, pass_limit),
    }
    .py()?;
    let d = PyDict::new(py);
    d.set_item("before", result.report.before)?;
    d.set_item("after", result.report.after)?;
    d.set_item("passes", result.report.passes)?;
    Ok((result.circuit.to_string(), d))
}

/// Output bits of a reversible netlist for one input.
#[pyfunction]
fn simulate(netlist: &str, bits: &str) -> PyResult<String> {
    let bits: BitVector = bits.parse().py()?;
    let c = netlist::parse(netlist).py()?.into_classical().py()?;
    Ok(c.permutation().py()?.apply_bits(&bits).py()?.to_string())
}

/// One reproduction table (`"1"` .. `"5"`) as CSV or JSON text.
#[pyfunction]
#[pyo3(signature = (which, format = "csv"))]
fn table(which: &str, format: &str) -> PyResult<String> {
    let kind: TableKind = which.parse().py()?;
    let report = revlib::report::table_report(kind).py()?;
    match format {
        "csv" => report.table.to_csv().py(),
        "json" => Ok(report.table.to_json().to_string()),
        other => Err(PyValueError::new_err(format!("unknown format {other:?}"))),
    }
}

#[pymodule]
pub fn revlib_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyGate>()?;
    m.add_class::<PyCircuit>()?;
    m.add_class::<PyLibrary>()?;
    m.add_function(wrap_pyfunction!(enumerate_gates, m)?)?;
    m.add_function(wrap_pyfunction!(closure_size, m)?)?;
    m.add_function(wrap_pyfunction!(optimize, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    Ok(())
}
