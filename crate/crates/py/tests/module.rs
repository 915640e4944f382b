use pyo3::ffi::c_str;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module(code: &std::ffi::CStr) -> PyResult<()> {
    Python::with_gil(|py| {
        let m = pyo3::wrap_pymodule!(revlib_py::revlib_py)(py);
        let globals = PyDict::new(py);
        globals.set_item("r", m)?;
        py.run(code, Some(&globals), None)
    })
}

#[test]
fn permutations_and_gates() {
    with_module(c_str!(
        r#"
t = r.Gate("T3 1 2 3")
assert t.kind == "T3" and t.wires == [1, 2, 3]
p = t.semantics(3)
assert p.cycles() == "(7,8)"
assert p.apply_bits("110") == "111"
assert p.compose(p).is_identity()
assert p == r.Permutation.from_cycles("(7,8)", 3)
assert [str(g) for g in r.enumerate_gates("N", 1)] == ["N 1"]
assert r.closure_size([g.semantics(3) for g in r.enumerate_gates("C")]) == 168
"#
    ))
    .unwrap();
}

#[test]
fn library_synthesis_and_optimization() {
    with_module(c_str!(
        r#"
nct = r.Library("NCT")
assert len(nct) == 12 and nct.is_universal()
c = nct.synth(r.Permutation.from_cycles("(7,8)", 3))
assert [str(g) for g in c.gates()] == ["T3 1 2 3"]
assert c.simulate("110") == "111"
net, rep = r.optimize(".n 3\nR3 1 2 3\n")
assert (rep["before"], rep["after"]) == (4, 4)
assert list(rep) == ["before", "after", "passes"]
assert r.simulate(".n 3\nT3 1 2 3", "000") == "000"
custom = r.Library("cs", "C 1 2; C 2 1")
assert not custom.is_universal()
try:
    custom.synth(r.Permutation.from_cycles("(7,8)", 3))
    raise AssertionError("unreachable target accepted")
except RuntimeError as e:
    assert "not reachable" in str(e)
try:
    r.Gate("C 1 1")
    raise AssertionError("bad gate accepted")
except ValueError:
    pass
"#
    ))
    .unwrap();
}
