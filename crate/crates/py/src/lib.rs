//! Python bindings for the exact fermionic-symmetry toolkit.
//!
//! Exposes the main types and operations: groups, bar-complex cochains with
//! cup/cup-i products and Steenrod squares, supercohomology cocycles with
//! their shift orbits, the Spin(n)₁/SO(n)₁ condensation calculator, and the
//! consistency solver. Report-shaped results come back as plain dicts with
//! the same keys as the CLI's JSON output.
//!
//! ```python
//! import spinstack_py as sp
//! g  = sp.Group("z2")
//! cx = sp.Complex(g)
//! assert cx.cohomology_dim(3) == 1
//! k  = cx.named_class("x^2")
//! assert sp.Cocycle(k, cx.zero_cochain(2), cx.zero_cochain(3)).orbit()["period"] == 2
//! ```

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde_json::Value;
use std::sync::Arc;

use spinstack_core::cochain as core_cochain;
use spinstack_core::cochain::{BarComplex, Coefficients, CohomologyClass};
use spinstack_core::consistency as core_consistency;
use spinstack_core::group as core_group;
use spinstack_core::io as core_io;
use spinstack_core::premodular as core_premodular;
use spinstack_core::supercoh as core_supercoh;
use spinstack_core::verify as core_verify;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    match v {
        Value::Null => Ok(py.None()),
        Value::Bool(b) => b.into_py_any(py),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_py_any(py)
            } else if let Some(u) = n.as_u64() {
                u.into_py_any(py)
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_py_any(py)
            }
        }
        Value::String(s) => s.into_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py_any(py)
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, val) in map {
                dict.set_item(k, json_to_py(py, val)?)?;
            }
            dict.into_py_any(py)
        }
    }
}

/// A finite group given by a validated multiplication table.
#[pyclass(frozen)]
struct Group {
    inner: Arc<core_group::FiniteGroup>,
}

#[pymethods]
impl Group {
    /// Build a preset: z2, z4, zN (N ≤ 64), z2xz2, s3, s4, d8, q8.
    #[new]
    fn new(preset: &str) -> PyResult<Self> {
        Ok(Group {
            inner: core_group::build_group(preset).map_err(err)?,
        })
    }

    /// Build from a raw multiplication table (identity must be index 0).
    #[staticmethod]
    fn from_table(name: &str, table: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(Group {
            inner: Arc::new(core_group::FiniteGroup::from_table(name, table).map_err(err)?),
        })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order
    }

    fn multiply(&self, a: usize, b: usize) -> PyResult<usize> {
        if a >= self.inner.order || b >= self.inner.order {
            return Err(PyValueError::new_err("element index out of range"));
        }
        Ok(self.inner.mul(a, b))
    }

    fn element_order(&self, i: usize) -> PyResult<usize> {
        self.inner.element_order(i).map_err(err)
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.table.clone()
    }

    fn __repr__(&self) -> String {
        format!("Group({}, order {})", self.inner.name, self.inner.order)
    }
}

/// A normalized bar-complex cochain with F₂ or ℚ/ℤ coefficients.
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Cochain {
    inner: core_cochain::Cochain,
}

#[pymethods]
impl Cochain {
    /// An F₂ cochain from its dense bit list (lexicographic tuple order).
    #[staticmethod]
    fn f2(group: &Group, degree: usize, bits: Vec<u8>) -> PyResult<Self> {
        let dim = core_cochain::cochain_dim(group.inner.order, degree);
        if bits.len() != dim {
            return Err(PyValueError::new_err(format!(
                "degree-{degree} cochain needs {dim} bits, got {}",
                bits.len()
            )));
        }
        Ok(Cochain {
            inner: core_cochain::Cochain::from_f2_vector(
                group.inner.clone(),
                degree,
                spinstack_core::f2linalg::F2Vector::from_bits(&bits),
            ),
        })
    }

    /// A ℚ/ℤ cochain from "p/q" strings.
    #[staticmethod]
    fn qz(group: &Group, degree: usize, values: Vec<String>) -> PyResult<Self> {
        let dim = core_cochain::cochain_dim(group.inner.order, degree);
        if values.len() != dim {
            return Err(PyValueError::new_err(format!(
                "degree-{degree} cochain needs {dim} entries, got {}",
                values.len()
            )));
        }
        let mut v = spinstack_core::rational::QmodZVector::zeros(dim);
        for (i, s) in values.iter().enumerate() {
            v.set(i, s.parse().map_err(err)?);
        }
        Ok(Cochain {
            inner: core_cochain::Cochain::from_qz_vector(group.inner.clone(), degree, v),
        })
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn coeff(&self) -> &'static str {
        match self.inner.coefficients() {
            Coefficients::F2 => "f2",
            Coefficients::QZ => "qz",
        }
    }

    /// Dense values: ints for F₂, "p/q" strings for ℚ/ℤ.
    fn values(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let file = core_io::cochain_to_file(&self.inner);
        json_to_py(py, &serde_json::to_value(file.values).map_err(err)?)
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_closed(&self) -> bool {
        self.inner.is_closed()
    }

    fn differential(&self) -> Cochain {
        Cochain {
            inner: self.inner.differential(),
        }
    }

    fn add(&self, other: &Cochain) -> PyResult<Cochain> {
        Ok(Cochain {
            inner: self.inner.add(&other.inner).map_err(err)?,
        })
    }

    fn cup(&self, other: &Cochain) -> PyResult<Cochain> {
        Ok(Cochain {
            inner: core_cochain::cup(&self.inner, &other.inner).map_err(err)?,
        })
    }

    fn cup_i(&self, other: &Cochain, i: usize) -> PyResult<Cochain> {
        Ok(Cochain {
            inner: core_cochain::cup_i(&self.inner, &other.inner, i).map_err(err)?,
        })
    }

    fn __eq__(&self, other: &Cochain) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Cochain(degree {}, {}, on {})",
            self.inner.degree(),
            self.coeff(),
            self.inner.group().name
        )
    }
}

/// Per-group workspace: cohomology dimensions, coboundary membership,
/// named classes.
#[pyclass(frozen)]
struct Complex {
    cx: BarComplex,
}

#[pymethods]
impl Complex {
    #[new]
    #[pyo3(signature = (group, row_cap=None))]
    fn new(group: &Group, row_cap: Option<usize>) -> Self {
        let cx = match row_cap {
            Some(cap) => BarComplex::with_row_cap(group.inner.clone(), cap),
            None => BarComplex::new(group.inner.clone()),
        };
        Complex { cx }
    }

    fn cohomology_dim(&self, degree: usize) -> PyResult<usize> {
        self.cx.cohomology_dim(degree).map_err(err)
    }

    /// The zero F₂ cochain of the given degree.
    fn zero_cochain(&self, degree: usize) -> Cochain {
        Cochain {
            inner: self.cx.zero(degree, Coefficients::F2),
        }
    }

    /// Witness X with dX = z, or None.
    fn is_coboundary(&self, z: &Cochain) -> PyResult<Option<Cochain>> {
        Ok(self
            .cx
            .is_coboundary(&z.inner)
            .map_err(err)?
            .map(|inner| Cochain { inner }))
    }

    fn cohomologous(&self, a: &Cochain, b: &Cochain) -> PyResult<bool> {
        self.cx.cohomologous(&a.inner, &b.inner).map_err(err)
    }

    /// Resolve 0, x^2, y, sums, or b2:<k> to a closed degree-2 cochain.
    fn named_class(&self, name: &str) -> PyResult<Cochain> {
        Ok(Cochain {
            inner: self.cx.named_class(name).map_err(err)?.into_representative(),
        })
    }

    fn generator_x(&self) -> PyResult<Cochain> {
        Ok(Cochain {
            inner: self.cx.generator_x().map_err(err)?,
        })
    }

    fn generator_y(&self) -> PyResult<Cochain> {
        Ok(Cochain {
            inner: self.cx.generator_y().map_err(err)?,
        })
    }

    /// Canonical representatives of every H² class (zero class first).
    fn h2_class_reps(&self) -> PyResult<Vec<Cochain>> {
        Ok(self
            .cx
            .h2_class_reps()
            .map_err(err)?
            .iter()
            .map(|inner| Cochain {
                inner: inner.clone(),
            })
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("Complex(B{})", self.cx.group().name)
    }
}

/// Sqᵏ of a closed F₂ cochain, as a closed cochain.
#[pyfunction]
fn steenrod_sq(k: usize, z: &Cochain) -> PyResult<Cochain> {
    let class = CohomologyClass::new(z.inner.clone()).map_err(err)?;
    Ok(Cochain {
        inner: core_cochain::steenrod_sq(k, &class)
            .map_err(err)?
            .into_representative(),
    })
}

/// Sq¹ through the ℤ/4 Bockstein lift (independent of the cup-i route).
#[pyfunction]
fn bockstein(z: &Cochain) -> PyResult<Cochain> {
    let class = CohomologyClass::new(z.inner.clone()).map_err(err)?;
    Ok(Cochain {
        inner: core_cochain::bockstein(&class)
            .map_err(err)?
            .into_representative(),
    })
}

/// A supercohomology cocycle (κ; α, β, γ).
#[pyclass(frozen)]
struct Cocycle {
    inner: core_supercoh::SupercohCocycle,
}

#[pymethods]
impl Cocycle {
    #[new]
    #[pyo3(signature = (kappa, alpha, beta, gamma=None))]
    fn new(
        kappa: &Cochain,
        alpha: &Cochain,
        beta: &Cochain,
        gamma: Option<&Cochain>,
    ) -> PyResult<Self> {
        Ok(Cocycle {
            inner: core_supercoh::SupercohCocycle::new(
                kappa.inner.clone(),
                alpha.inner.clone(),
                beta.inner.clone(),
                gamma.map(|g| g.inner.clone()),
            )
            .map_err(err)?,
        })
    }

    #[getter]
    fn kappa(&self) -> Cochain {
        Cochain {
            inner: self.inner.kappa().clone(),
        }
    }

    #[getter]
    fn alpha(&self) -> Cochain {
        Cochain {
            inner: self.inner.alpha().clone(),
        }
    }

    #[getter]
    fn beta(&self) -> Cochain {
        Cochain {
            inner: self.inner.beta().clone(),
        }
    }

    /// Layer-by-layer validation verdicts.
    fn validate(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let report = core_supercoh::validate_cocycle(&self.inner, None).map_err(err)?;
        json_to_py(py, &core_io::validation_to_json(&report))
    }

    /// One stack-and-condense round: (α, β) ↦ (α+κ, β+κ∪₁α).
    fn shift_once(&self) -> PyResult<Cocycle> {
        Ok(Cocycle {
            inner: core_supercoh::shift_once(&self.inner).map_err(err)?,
        })
    }

    /// Orbit summary: {"period", "states", "checks"}.
    fn orbit(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let orbit = core_supercoh::orbit_period(&self.inner).map_err(err)?;
        let group = self.inner.kappa().group().clone();
        json_to_py(py, &core_io::orbit_to_json(&group, &orbit))
    }
}

/// The trichotomy period from the class of κ: 1, 2 or 4.
#[pyfunction]
fn predicted_period(cx: &Complex, kappa: &Cochain) -> PyResult<usize> {
    let class = CohomologyClass::new(kappa.inner.clone()).map_err(err)?;
    core_supercoh::predicted_period(&cx.cx, &class).map_err(err)
}

/// The spanning test family of cocycles over a fixed κ.
#[pyfunction]
fn spanning_family(cx: &Complex, kappa: &Cochain) -> PyResult<Vec<Cocycle>> {
    Ok(core_supercoh::spanning_family(&cx.cx, &kappa.inner)
        .map_err(err)?
        .into_iter()
        .map(|inner| Cocycle { inner })
        .collect())
}

/// The Spin(n)₁ table data as a dict.
#[pyfunction]
fn spin_category(py: Python<'_>, n: i64) -> PyResult<Py<PyAny>> {
    json_to_py(
        py,
        &core_io::category_to_json(&core_premodular::spin_category(n)),
    )
}

/// The SO(n)₁ table data as a dict.
#[pyfunction]
fn so_category(py: Python<'_>, n: i64) -> PyResult<Py<PyAny>> {
    json_to_py(
        py,
        &core_io::category_to_json(&core_premodular::so_category(n)),
    )
}

/// Condense 1 ⊕ ψ⊠f in SO(n)₁ ⊠ Spin(m)₁: the module table plus the
/// identified result ("SO(n+m)_1").
#[pyfunction]
fn condense_stack(py: Python<'_>, n: i64, m: i64) -> PyResult<Py<PyAny>> {
    let cond = core_premodular::condense_stack(n, m).map_err(err)?;
    let label = core_premodular::identify(&cond.result);
    json_to_py(py, &core_io::condensation_to_json(&label, &cond))
}

/// Full consistency report for (G, κ): verdicts for every n mod 16, the
/// ℤ/16 subgroup, and the equivalence cross-check.
#[pyfunction]
#[pyo3(signature = (cx, kappa, kappa_label="custom", run_orbits=None))]
fn consistency_report(
    py: Python<'_>,
    cx: &Complex,
    kappa: &Cochain,
    kappa_label: &str,
    run_orbits: Option<bool>,
) -> PyResult<Py<PyAny>> {
    let class = CohomologyClass::new(kappa.inner.clone()).map_err(err)?;
    let report = core_consistency::consistent_set(&cx.cx, &class).map_err(err)?;
    let run = run_orbits.unwrap_or(cx.cx.group().order <= 8);
    let crosscheck =
        core_consistency::crosscheck_equivalence(&cx.cx, &class, run).map_err(err)?;
    let group = cx.cx.group().clone();
    json_to_py(
        py,
        &core_io::consistency_to_json(&group, kappa_label, &report, &crosscheck),
    )
}

/// Run the randomized property checks; returns [{name, passed, detail}].
#[pyfunction]
#[pyo3(signature = (seed=42))]
fn verify_properties(py: Python<'_>, seed: u64) -> PyResult<Py<PyAny>> {
    let checks = core_verify::property_suite(seed);
    let list = PyList::empty(py);
    for c in checks {
        let d = PyDict::new(py);
        d.set_item("name", c.name)?;
        d.set_item("passed", c.passed)?;
        d.set_item("detail", c.detail)?;
        list.append(d)?;
    }
    list.into_py_any(py)
}

#[pymodule]
fn spinstack_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<Cochain>()?;
    m.add_class::<Complex>()?;
    m.add_class::<Cocycle>()?;
    m.add_function(wrap_pyfunction!(steenrod_sq, m)?)?;
    m.add_function(wrap_pyfunction!(bockstein, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_period, m)?)?;
    m.add_function(wrap_pyfunction!(spanning_family, m)?)?;
    m.add_function(wrap_pyfunction!(spin_category, m)?)?;
    m.add_function(wrap_pyfunction!(so_category, m)?)?;
    m.add_function(wrap_pyfunction!(condense_stack, m)?)?;
    m.add_function(wrap_pyfunction!(consistency_report, m)?)?;
    m.add_function(wrap_pyfunction!(verify_properties, m)?)?;
    Ok(())
}
