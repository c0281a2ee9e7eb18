//! Python bindings for the Steiner design engine.
//!
//! Exposes the admissibility checks, the 3-homogeneous group catalog, the
//! elimination handlers with their certificates (as plain dicts of Python
//! ints), the boolean quadruple systems, and the desk-scale permutation
//! machinery.

// pyo3 macro expansion trips clippy::useless_conversion on every signature
#![allow(clippy::useless_conversion)]

use std::collections::BTreeMap;

use num_bigint::BigUint;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use steiner7_core::admissibility::{self, DesignParams};
use steiner7_core::catalog::{self, Family, GroupSpec};
use steiner7_core::designs;
use steiner7_core::elimination::{self, json, Certificate, DegreeOutcome, KScope};
use steiner7_core::error::Error;
use steiner7_core::permgroup::{self, generators};

fn pyerr(e: Error) -> PyErr {
    match e {
        Error::InvalidInput(_) | Error::Parse(_) | Error::UnsupportedFamily(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn family_of(name: &str) -> PyResult<Family> {
    Family::parse_display(name).map_err(pyerr)
}

fn cert_to_dict<'py>(py: Python<'py>, c: &Certificate) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new_bound(py);
    d.set_item("family", c.family.tag())?;
    d.set_item("params", c.family.params())?;
    d.set_item("v", c.v)?;
    match c.k {
        KScope::Single(k) => d.set_item("k", k)?,
        KScope::Range { lo, hi } => d.set_item("k", (lo, hi))?,
    }
    d.set_item("reason", c.reason.code())?;
    let wits: BTreeMap<&str, BigUint> = c
        .witnesses
        .iter()
        .map(|(n, v)| (n.as_str(), v.clone()))
        .collect();
    d.set_item("witnesses", wits)?;
    Ok(d)
}

fn outcome_to_dict<'py>(py: Python<'py>, o: &DegreeOutcome) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new_bound(py);
    d.set_item("v", o.v)?;
    let certs = PyList::empty_bound(py);
    for c in &o.certificates {
        certs.append(cert_to_dict(py, c)?)?;
    }
    d.set_item("certificates", certs)?;
    let external = PyList::empty_bound(py);
    for e in &o.external {
        let ed = PyDict::new_bound(py);
        ed.set_item("family", e.family.tag())?;
        ed.set_item("params", e.family.params())?;
        ed.set_item("v", e.v)?;
        ed.set_item("citation", e.citation)?;
        external.append(ed)?;
    }
    d.set_item("external", external)?;
    let survivors = PyList::empty_bound(py);
    for s in &o.survivors {
        survivors.append((s.family.tag(), s.v, s.k))?;
    }
    d.set_item("survivors", survivors)?;
    Ok(d)
}

/// Parameter tuple t-(v,k,lambda) with exact admissibility checks.
#[pyclass(name = "DesignParams")]
struct PyDesignParams {
    inner: DesignParams,
}

#[pymethods]
impl PyDesignParams {
    #[new]
    #[pyo3(signature = (t, v, k, lam=1))]
    fn new(t: u64, v: u64, k: u64, lam: u64) -> PyResult<Self> {
        Ok(PyDesignParams {
            inner: DesignParams::new(t, v, k, lam).map_err(pyerr)?,
        })
    }

    #[getter]
    fn t(&self) -> u64 {
        self.inner.t
    }

    #[getter]
    fn v(&self) -> u64 {
        self.inner.v
    }

    #[getter]
    fn k(&self) -> u64 {
        self.inner.k
    }

    fn non_trivial(&self) -> bool {
        self.inner.non_trivial()
    }

    /// lambda_s as an exact (numerator, denominator) pair before reduction.
    fn lambda_raw(&self, s: u64) -> PyResult<(BigUint, BigUint)> {
        admissibility::lambda_raw(&self.inner, s).map_err(pyerr)
    }

    /// Every s in 0..=t whose integrality condition fails.
    fn failed_divisibility(&self) -> Vec<u64> {
        admissibility::divisibility_check(&self.inner)
    }

    /// Full report as a dict.
    fn report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let rep = admissibility::admissible_report(&self.inner);
        let d = PyDict::new_bound(py);
        d.set_item("admissible", rep.admissible)?;
        d.set_item("failed_divisibility", rep.failed_divisibility)?;
        d.set_item("tits_ok", rep.tits_ok)?;
        d.set_item(
            "cameron",
            match rep.cameron_verdict {
                admissibility::CameronVerdict::Ok => "ok",
                admissibility::CameronVerdict::EqualityListed => "equality_listed",
                admissibility::CameronVerdict::EqualityUnlisted => "equality_unlisted",
                admissibility::CameronVerdict::Violated => "violated",
            },
        )?;
        d.set_item("rw_ok", rep.rw_ok)?;
        let (bn, bd) = admissibility::lambda_raw(&self.inner, 0).map_err(pyerr)?;
        d.set_item("b_num", bn)?;
        d.set_item("b_den", bd)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!(
            "DesignParams({}-({},{},{}))",
            self.inner.t, self.inner.v, self.inner.k, self.inner.lambda
        )
    }
}

/// Largest admissible block size of a non-trivial Steiner 7-design on v
/// points: floor(sqrt(v) + 11/2), exactly.
#[pyfunction]
fn kmax7(v: u64) -> PyResult<u64> {
    admissibility::kmax7(v).map_err(pyerr)
}

/// True iff PSL(2,q) itself is 3-homogeneous (q even or q = 3 mod 4).
#[pyfunction]
fn psl2_is_3homog(q: u64) -> PyResult<bool> {
    catalog::psl2_is_3homog(q).map_err(pyerr)
}

/// Catalog entries at degree v: list of dicts.
#[pyfunction]
fn candidates_for_degree(py: Python<'_>, v: u64) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let mut out = Vec::new();
    for g in catalog::candidates_for_degree(v).map_err(pyerr)? {
        let d = PyDict::new_bound(py);
        d.set_item("family", g.family.tag())?;
        d.set_item("params", g.family.params())?;
        d.set_item("degree", g.degree)?;
        d.set_item("order", g.order())?;
        d.set_item("socle_order", g.socle_order())?;
        out.push(d);
    }
    Ok(out)
}

/// Order of a family instance given in display form, e.g. "PSL2(8)".
#[pyfunction]
fn group_order(family: &str) -> PyResult<BigUint> {
    Ok(GroupSpec::new(family_of(family)?).order())
}

/// Eliminate every k for PSL(2,q); list of certificate dicts.
#[pyfunction]
fn eliminate_psl2(py: Python<'_>, q: u64) -> PyResult<Vec<Bound<'_, PyDict>>> {
    elimination::eliminate_psl2(q)
        .map_err(pyerr)?
        .iter()
        .map(|c| cert_to_dict(py, c))
        .collect()
}

/// Eliminate one degree; dict with certificates, external, survivors.
#[pyfunction]
#[pyo3(signature = (v, t=7))]
fn eliminate_degree(py: Python<'_>, v: u64, t: u64) -> PyResult<Bound<'_, PyDict>> {
    let outcome = elimination::eliminate_degree(v, t).map_err(pyerr)?;
    outcome_to_dict(py, &outcome)
}

/// Sweep summary up to v_max: counts only.
#[pyfunction]
#[pyo3(signature = (v_max, t=7, jobs=1))]
fn sweep(py: Python<'_>, v_max: u64, t: u64, jobs: u64) -> PyResult<Bound<'_, PyDict>> {
    let stats = elimination::sweep_streaming(t, v_max, jobs, |_| Ok(())).map_err(pyerr)?;
    let d = PyDict::new_bound(py);
    d.set_item("degrees", stats.degrees)?;
    d.set_item("certificates", stats.certificates)?;
    d.set_item("survivors", stats.survivors)?;
    d.set_item("external", stats.external)?;
    let reasons: BTreeMap<&str, u64> = stats.reasons.into_iter().collect();
    d.set_item("reasons", reasons)?;
    Ok(d)
}

/// Sweep and write the canonical certificate file.
#[pyfunction]
#[pyo3(signature = (path, v_max, t=7, jobs=1))]
fn scan_to_file(path: &str, v_max: u64, t: u64, jobs: u64) -> PyResult<u64> {
    let file = std::io::BufWriter::new(
        std::fs::File::create(path)
            .map_err(Error::Io)
            .map_err(pyerr)?,
    );
    let mut writer = json::SweepJsonWriter::new(file, t, v_max).map_err(pyerr)?;
    let stats =
        elimination::sweep_streaming(t, v_max, jobs, |o| writer.write_outcome(o)).map_err(pyerr)?;
    use std::io::Write;
    writer
        .finish()
        .and_then(|mut w| w.flush().map_err(Error::Io))
        .map_err(pyerr)?;
    Ok(stats.certificates)
}

/// Independently recheck a certificate file; returns the certificate count.
#[pyfunction]
fn replay_file(path: &str) -> PyResult<u64> {
    let reader = std::io::BufReader::new(
        std::fs::File::open(path)
            .map_err(Error::Io)
            .map_err(pyerr)?,
    );
    let summary = json::replay_stream(reader).map_err(pyerr)?;
    Ok(summary.certificates)
}

/// Blocks of the boolean Steiner quadruple system on 2^n points.
#[pyfunction]
fn boolean_sqs(n: u32) -> PyResult<Vec<Vec<u32>>> {
    Ok(designs::boolean_sqs(n).map_err(pyerr)?.blocks().to_vec())
}

/// Some(lambda) iff every t-subset of 0..v lies in exactly lambda blocks.
#[pyfunction]
fn verify_design(v: u64, blocks: Vec<Vec<u32>>, t: u64) -> PyResult<Option<u64>> {
    let k = blocks.first().map(|b| b.len() as u64).unwrap_or(0);
    let s = designs::IncidenceStructure::new(v, k, blocks).map_err(pyerr)?;
    designs::verify_design(&s, t).map_err(pyerr)
}

/// Orbits of a catalog family on s-subsets in its natural action.
#[pyfunction]
fn homogeneity_orbits(family: &str, s: u64) -> PyResult<u64> {
    let gs =
        generators::standard_generators(&GroupSpec::new(family_of(family)?)).map_err(pyerr)?;
    permgroup::homogeneity_orbits(&gs, s).map_err(pyerr)
}

/// Exact order of a supported family by breadth-first enumeration.
#[pyfunction]
fn enumerated_order(family: &str) -> PyResult<u64> {
    let gs =
        generators::standard_generators(&GroupSpec::new(family_of(family)?)).map_err(pyerr)?;
    permgroup::enumerated_order(&gs).map_err(pyerr)
}

#[pymodule]
fn steiner7py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDesignParams>()?;
    m.add_function(wrap_pyfunction!(kmax7, m)?)?;
    m.add_function(wrap_pyfunction!(psl2_is_3homog, m)?)?;
    m.add_function(wrap_pyfunction!(candidates_for_degree, m)?)?;
    m.add_function(wrap_pyfunction!(group_order, m)?)?;
    m.add_function(wrap_pyfunction!(eliminate_psl2, m)?)?;
    m.add_function(wrap_pyfunction!(eliminate_degree, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(scan_to_file, m)?)?;
    m.add_function(wrap_pyfunction!(replay_file, m)?)?;
    m.add_function(wrap_pyfunction!(boolean_sqs, m)?)?;
    m.add_function(wrap_pyfunction!(verify_design, m)?)?;
    m.add_function(wrap_pyfunction!(homogeneity_orbits, m)?)?;
    m.add_function(wrap_pyfunction!(enumerated_order, m)?)?;
    Ok(())
}
