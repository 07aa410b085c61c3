//! Python bindings: the main types and operations of kostka-core exposed
//! in-process. Polynomials cross the boundary as lists of [exponent,
//! coefficient] pairs with exact integer coefficients.

use kostka_core::affine_weyl::{maximal_coset_element, omega_elements};
use kostka_core::hecke::{center_check, coset_expansion_check, satake_check};
use kostka_core::kostka::{
    all_agree, kostka_gl_all, kostka_via_base_change, kostka_via_inner_product,
    kostka_via_kl, kostka_via_partition_function, Method,
};
use kostka_core::polyring::GroupAlgebraElement;
use kostka_core::root_data::{RootSystem, Weight};
use kostka_core::symfunc::{self, Basis};
use kostka_core::tableaux::{charge, enumerate_tableaux, Partition, Tableau};
use kostka_core::ZPoly;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn poly_to_py<'py>(py: Python<'py>, p: &ZPoly) -> PyResult<Bound<'py, PyList>> {
    let out = PyList::empty(py);
    for (e, c) in p.iter() {
        let pair = PyList::empty(py);
        pair.append(*e)?;
        pair.append(c.clone())?;
        out.append(pair)?;
    }
    Ok(out)
}

/// A root system handle exposing pairings, orbits and dominance order.
#[pyclass(name = "RootSystem")]
struct PyRootSystem {
    rs: RootSystem,
}

#[pymethods]
impl PyRootSystem {
    /// Build from a name like "A2", "C3", "G2" or "GL4".
    #[new]
    fn new(name: &str) -> PyResult<Self> {
        Ok(PyRootSystem { rs: RootSystem::parse_name(name).map_err(err)? })
    }

    fn name(&self) -> String {
        self.rs.name()
    }

    fn rank(&self) -> usize {
        self.rs.rank
    }

    fn weyl_order(&self) -> u64 {
        self.rs.weyl_order()
    }

    /// Positive roots in simple-root coordinates.
    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.rs.positive_roots.iter().map(|r| r.simple_coords.clone()).collect()
    }

    /// `<lambda, alpha^vee>` against the i-th positive root.
    fn pairing(&self, lambda: Vec<i64>, root_index: usize) -> PyResult<i64> {
        if root_index >= self.rs.num_positive_roots() {
            return Err(PyValueError::new_err("root index out of range"));
        }
        Ok(self.rs.pairing(&self.weight(lambda)?, root_index))
    }

    fn is_dominant(&self, lambda: Vec<i64>) -> PyResult<bool> {
        Ok(self.rs.is_dominant(&self.weight(lambda)?))
    }

    fn dominance_leq(&self, mu: Vec<i64>, lambda: Vec<i64>) -> PyResult<bool> {
        Ok(self.rs.dominance_leq(&self.weight(mu)?, &self.weight(lambda)?))
    }

    fn orbit(&self, mu: Vec<i64>) -> PyResult<Vec<Vec<i64>>> {
        Ok(self.rs.orbit(&self.weight(mu)?).into_iter().map(|w| w.0).collect())
    }

    fn omega_order(&self) -> PyResult<usize> {
        omega_elements(&self.rs).map(|v| v.len()).map_err(err)
    }

    /// Length of the translation t_lambda in the extended affine group.
    fn translation_length(&self, lambda: Vec<i64>) -> PyResult<i64> {
        let w = self.weight(lambda)?;
        Ok(kostka_core::affine_weyl::AffineElement::translation(&self.rs, w).length(&self.rs))
    }
}

impl PyRootSystem {
    fn weight(&self, mut coords: Vec<i64>) -> PyResult<Weight> {
        if coords.len() > self.rs.dim {
            return Err(PyValueError::new_err(format!(
                "expected at most {} coordinates",
                self.rs.dim
            )));
        }
        coords.resize(self.rs.dim, 0);
        Ok(Weight(coords))
    }
}

/// Kostka-Foulkes polynomials for GL(n) partitions by the requested
/// methods; returns {"methods": {tag: [[exp, coeff], ...]}, "agree": bool}.
#[pyfunction]
#[pyo3(signature = (n, lambda_, mu, methods=None, height_bound=16))]
fn kostka_gl<'py>(
    py: Python<'py>,
    n: usize,
    lambda_: Vec<i64>,
    mu: Vec<i64>,
    methods: Option<Vec<String>>,
    height_bound: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let lam = Partition::new(lambda_).map_err(err)?;
    let mup = Partition::new(mu).map_err(err)?;
    let method_list: Vec<Method> = match methods {
        None => vec![
            Method::Charge,
            Method::BaseChange,
            Method::PartitionFunction,
            Method::RaisingOperator,
        ],
        Some(tags) => tags
            .iter()
            .map(|t| Method::parse(t).map_err(err))
            .collect::<PyResult<Vec<_>>>()?,
    };
    let results = kostka_gl_all(n, &lam, &mup, &method_list, height_bound).map_err(err)?;
    let dict = PyDict::new(py);
    let mdict = PyDict::new(py);
    for r in &results {
        mdict.set_item(r.method.tag(), poly_to_py(py, &r.polynomial)?)?;
    }
    dict.set_item("methods", mdict)?;
    dict.set_item("agree", all_agree(&results))?;
    Ok(dict)
}

/// K_{lambda mu}(t) for a semisimple root system ("A2", "C2", ...) in
/// fundamental-weight coordinates, by the named method (bc, pf, ip, kl).
#[pyfunction]
#[pyo3(signature = (system, lambda_, mu, method="bc", height_bound=16, cutoff=14))]
fn kostka<'py>(
    py: Python<'py>,
    system: &str,
    lambda_: Vec<i64>,
    mu: Vec<i64>,
    method: &str,
    height_bound: usize,
    cutoff: usize,
) -> PyResult<Bound<'py, PyList>> {
    let rs = RootSystem::parse_name(system).map_err(err)?;
    let mut lam = lambda_;
    lam.resize(rs.dim, 0);
    let mut muv = mu;
    muv.resize(rs.dim, 0);
    let lam = Weight(lam);
    let muw = Weight(muv);
    let m = Method::parse(method).map_err(err)?;
    let p = match m {
        Method::BaseChange => kostka_via_base_change(&rs, &lam, &muw).map_err(err)?,
        Method::PartitionFunction => {
            kostka_via_partition_function(&rs, &lam, &muw).map_err(err)?
        }
        Method::InnerProduct => {
            kostka_via_inner_product(&rs, &lam, &muw, height_bound).map_err(err)?
        }
        Method::KazhdanLusztig => kostka_via_kl(&rs, &lam, &muw, cutoff).map_err(err)?,
        _ => return Err(PyValueError::new_err("use kostka_gl for tableau-based methods")),
    };
    poly_to_py(py, &p)
}

/// Hall-Littlewood polynomial P_lambda(x;t) expanded in a basis:
/// list of (weight, [[exp, coeff], ...]).
#[pyfunction]
#[pyo3(signature = (system, lambda_, basis="schur"))]
fn hl_expand<'py>(
    py: Python<'py>,
    system: &str,
    lambda_: Vec<i64>,
    basis: &str,
) -> PyResult<Bound<'py, PyList>> {
    let rs = RootSystem::parse_name(system).map_err(err)?;
    let mut lam = lambda_;
    lam.resize(rs.dim, 0);
    let lam = Weight(lam);
    let b = match basis {
        "monomial" => Basis::Monomial,
        "schur" => Basis::Schur,
        "hall-littlewood" => Basis::HallLittlewood,
        other => return Err(PyValueError::new_err(format!("unknown basis '{}'", other))),
    };
    let p = symfunc::hall_littlewood(&rs, &lam).map_err(err)?;
    let exp = symfunc::expand_in(&rs, b, &p).map_err(err)?;
    let out = PyList::empty(py);
    for (w, c) in &exp.terms {
        out.append((w.0.clone(), poly_to_py(py, c)?))?;
    }
    Ok(out)
}

/// Column-strict tableaux of the given shape and weight, with charges:
/// list of {"rows": [...], "charge": int | None}.
#[pyfunction]
fn tableaux<'py>(
    py: Python<'py>,
    shape: Vec<i64>,
    weight: Vec<i64>,
) -> PyResult<Bound<'py, PyList>> {
    let shape = Partition::new(shape).map_err(err)?;
    let out = PyList::empty(py);
    for t in enumerate_tableaux(&shape, &weight) {
        let d = PyDict::new(py);
        d.set_item("rows", t.rows().to_vec())?;
        match charge(&t) {
            Ok(c) => d.set_item("charge", c)?,
            Err(_) => d.set_item("charge", py.None())?,
        }
        out.append(d)?;
    }
    Ok(out)
}

/// Charge of a column-strict tableau given as rows.
#[pyfunction]
fn charge_of(rows: Vec<Vec<u8>>) -> PyResult<i64> {
    let t = Tableau::new(rows).map_err(err)?;
    charge(&t).map_err(err)
}

/// Run the Hecke-algebra identity checks for a dominant weight; returns
/// {"satake": bool, "coset_expansion": bool, "center": bool}.
#[pyfunction]
#[pyo3(signature = (system, lambda_, cutoff=14))]
fn hecke_verify<'py>(
    py: Python<'py>,
    system: &str,
    lambda_: Vec<i64>,
    cutoff: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let rs = RootSystem::parse_name(system).map_err(err)?;
    let mut lam = lambda_;
    lam.resize(rs.dim, 0);
    let lam = Weight(lam);
    let n_len = maximal_coset_element(&rs, &lam).map_err(err)?.length(&rs);
    if n_len as usize > cutoff {
        return Err(PyValueError::new_err(format!(
            "length {} exceeds cutoff {}",
            n_len, cutoff
        )));
    }
    let d = PyDict::new(py);
    d.set_item("satake", satake_check(&rs, &lam).map_err(err)?)?;
    d.set_item("coset_expansion", coset_expansion_check(&rs, &lam).map_err(err)?)?;
    let m: GroupAlgebraElement = symfunc::monomial(&rs, &lam);
    d.set_item("center", center_check(&rs, &m, None))?;
    Ok(d)
}

#[pymodule]
fn kostka_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_function(wrap_pyfunction!(kostka_gl, m)?)?;
    m.add_function(wrap_pyfunction!(kostka, m)?)?;
    m.add_function(wrap_pyfunction!(hl_expand, m)?)?;
    m.add_function(wrap_pyfunction!(tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(charge_of, m)?)?;
    m.add_function(wrap_pyfunction!(hecke_verify, m)?)?;
    Ok(())
}
