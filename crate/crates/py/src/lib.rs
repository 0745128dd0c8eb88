//! Python bindings: the main operations of the exact-geometry library
//! exposed as plain functions returning dictionaries and strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use lineal_core::config::{catalog, euler_characteristic as chi, rigidity_report};
use lineal_core::delpezzo::{
    dp4_presentation_symbolic, dp5_presentation, dp5_symmetric_equations, dp5_ten_equations,
    sigma_binomial_equations, Dp5Variant,
};
use lineal_core::hk::{
    epsilon_constraint_check, hk_five_factor_equations, hk_presentation,
    pullback_factorization, smoothness_sample,
};
use lineal_core::kummer::{certify_triviality, cover_from_configuration, DEFAULT_MAX_UNKNOWNS};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Incidence summary and rigidity flags of a named configuration.
#[pyfunction]
fn catalog_summary<'py>(py: Python<'py>, name: &str) -> PyResult<Bound<'py, PyDict>> {
    let cfg = catalog(name).map_err(err)?;
    let rep = rigidity_report(&cfg);
    let d = PyDict::new(py);
    d.set_item("lines", cfg.line_count())?;
    d.set_item("m", rep.m)?;
    d.set_item("n_i", rep.n_i.clone())?;
    d.set_item("chi", rep.chi)?;
    d.set_item("singularly_saturated", rep.singularly_saturated)?;
    d.set_item("inductive_chain_found", rep.inductive_chain_found)?;
    d.set_item("has_projective_basis", rep.has_projective_basis)?;
    Ok(d)
}

/// The Euler characteristic value of a named configuration.
#[pyfunction]
fn euler_characteristic(name: &str) -> PyResult<i64> {
    let cfg = catalog(name).map_err(err)?;
    chi(&cfg).map_err(err)
}

/// The covering equations of a named configuration, as strings.
#[pyfunction]
fn cover_equations<'py>(py: Python<'py>, name: &str, n: u32) -> PyResult<Bound<'py, PyList>> {
    let cfg = catalog(name).map_err(err)?;
    let cover = cover_from_configuration(&cfg, n).map_err(err)?;
    let reprs: Vec<String> = cover.equations().iter().map(|f| f.to_string()).collect();
    PyList::new(py, reprs)
}

/// The equisingular-triviality certificate for a named configuration.
#[pyfunction]
#[pyo3(signature = (name, n, max_unknowns = DEFAULT_MAX_UNKNOWNS))]
fn certify<'py>(
    py: Python<'py>,
    name: &str,
    n: u32,
    max_unknowns: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let cfg = catalog(name).map_err(err)?;
    let cover = cover_from_configuration(&cfg, n).map_err(err)?;
    let rep = certify_triviality(&cover, max_unknowns).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("n", rep.n)?;
    d.set_item("ambient", rep.ambient_dim)?;
    d.set_item("T", rep.dim_t)?;
    d.set_item("E", rep.dim_e)?;
    d.set_item("E_plus_T", rep.dim_e_plus_t)?;
    d.set_item("contained", rep.contained)?;
    d.set_item("relations", rep.relation_count)?;
    d.set_item("note", rep.soundness_note)?;
    Ok(d)
}

/// Exact identity checks for the Del Pezzo presentation of a given degree.
#[pyfunction]
fn delpezzo_checks<'py>(py: Python<'py>, degree: u32) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    match degree {
        5 => {
            for (tag, variant) in [
                ("stacked", Dp5Variant::Stacked),
                ("symmetric", Dp5Variant::Symmetric),
            ] {
                let pres = dp5_presentation(variant).map_err(err)?;
                d.set_item(format!("{tag}_complex"), pres.checks.complex)?;
                d.set_item(format!("{tag}_syzygy"), pres.checks.syzygy)?;
                d.set_item(
                    format!("{tag}_vanishing"),
                    pres.checks.parametrization_vanishing,
                )?;
            }
            d.set_item("symmetric_equations", dp5_symmetric_equations().len())?;
            d.set_item("ten_equations", dp5_ten_equations().map_err(err)?.len())?;
        }
        4 => {
            let pres = dp4_presentation_symbolic().map_err(err)?;
            d.set_item("minors", pres.equations.len())?;
            d.set_item("vanishing", pres.checks.parametrization_vanishing)?;
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "checks are exposed for degrees 5 and 4, got {other}"
            )))
        }
    }
    Ok(d)
}

/// Identity checks for the Fermat-curve presentation at a given exponent.
#[pyfunction]
fn hk_checks<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyDict>> {
    let pres = hk_presentation(n).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("minors", pres.minors.len())?;
    d.set_item(
        "first_minor_is_unit_branch",
        pres.minors[0] == pres.surface_equations[0],
    )?;
    let mut pullback_ok = true;
    for g in sigma_binomial_equations() {
        match pullback_factorization(&g, n) {
            Ok(f) => pullback_ok &= f.factors.len() == n as usize,
            Err(_) => pullback_ok = false,
        }
    }
    d.set_item("pullback_splits", pullback_ok)?;
    let eps = epsilon_constraint_check(n).map_err(err)?;
    d.set_item("epsilon_identity", eps.identity_holds)?;
    d.set_item("component_count", eps.component_count)?;
    d.set_item(
        "five_block_equations",
        hk_five_factor_equations(n).map_err(err)?.len(),
    )?;
    Ok(d)
}

/// Unit-tuple count for the component constraint.
#[pyfunction]
fn epsilon_component_count(n: u32) -> PyResult<u64> {
    Ok(epsilon_constraint_check(n).map_err(err)?.component_count)
}

/// Finite-field Jacobian-rank sampling report.
#[pyfunction]
#[pyo3(signature = (n, p, trials, seed, threads = 1))]
fn smoothness<'py>(
    py: Python<'py>,
    n: u32,
    p: u64,
    trials: u64,
    seed: u64,
    threads: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let rep = smoothness_sample(n, p, trials, seed, threads).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("n", rep.n)?;
    d.set_item("p", rep.p)?;
    d.set_item("trials", rep.trials)?;
    d.set_item("seed", rep.seed)?;
    d.set_item("samples", rep.samples)?;
    d.set_item("skipped", rep.skipped)?;
    let hist = PyDict::new(py);
    for (rank, count) in &rep.rank_histogram {
        hist.set_item(rank, count)?;
    }
    d.set_item("rank_histogram", hist)?;
    d.set_item("note", rep.note)?;
    Ok(d)
}

#[pymodule]
fn lineal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(catalog_summary, m)?)?;
    m.add_function(wrap_pyfunction!(euler_characteristic, m)?)?;
    m.add_function(wrap_pyfunction!(cover_equations, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(delpezzo_checks, m)?)?;
    m.add_function(wrap_pyfunction!(hk_checks, m)?)?;
    m.add_function(wrap_pyfunction!(epsilon_component_count, m)?)?;
    m.add_function(wrap_pyfunction!(smoothness, m)?)?;
    Ok(())
}
