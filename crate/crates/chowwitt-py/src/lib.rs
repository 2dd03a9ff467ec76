//! Python module `chowwitt_py`. Every calculation returns the report as a JSON
//! string, the same document `cwcalc --format json` prints.

use chowwitt::graded::Twist;
use chowwitt::report::{self, Report, Theory};
use chowwitt::scalar::FieldModel;
use chowwitt::spaces::parse_space as parse;
use chowwitt::{CwError, CwResult};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: CwError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json(r: CwResult<Report>) -> PyResult<String> {
    r.map(|r| r.to_json()).map_err(py_err)
}

/// Canonical spelling of a space expression.
#[pyfunction]
fn parse_space(text: &str) -> PyResult<String> {
    parse(text).map(|e| e.to_string()).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (space, field="C", bound=6, theory="chw", twist=None))]
fn compute(space: &str, field: &str, bound: u32, theory: &str, twist: Option<&str>) -> PyResult<String> {
    to_json((|| {
        let twist = twist.map(Twist::parse_bits).transpose()?;
        report::compute(&parse(space)?, &FieldModel::parse(field)?, bound, Theory::parse(theory)?, twist.as_ref())
    })())
}

#[pyfunction]
#[pyo3(signature = (space, field="C", bound=6))]
fn compare(space: &str, field: &str, bound: u32) -> PyResult<String> {
    to_json((|| report::compare_space(&parse(space)?, &FieldModel::parse(field)?, bound))())
}

#[pyfunction]
#[pyo3(signature = (space=None, field="C", bound=6))]
fn kunneth(space: Option<&str>, field: &str, bound: u32) -> PyResult<String> {
    to_json((|| {
        let expr = space.map(parse).transpose()?;
        report::kunneth(expr.as_ref(), &FieldModel::parse(field)?, bound)
    })())
}

#[pyfunction]
#[pyo3(signature = (space, field="R", bound=4))]
fn oracle(space: &str, field: &str, bound: u32) -> PyResult<String> {
    to_json((|| report::oracle(&parse(space)?, &FieldModel::parse(field)?, bound))())
}

#[pymodule]
fn chowwitt_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(parse_space, m)?)?;
    m.add_function(wrap_pyfunction!(compute, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(kunneth, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    Ok(())
}
