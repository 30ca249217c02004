//! Python bindings: the catalog, exact number theory helpers, codegrees of
//! permutation groups and per-instance certificates.

use codegree::catalog::{self, CatalogError, LieFamily};
use codegree::chartab::{self, Caps, ChartabError, GroupInput};
use codegree::exactnum::{self, NumberError};
use codegree::verifier::{self, RunOptions, VerifyError};
use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(pycodegree, CapError, PyException, "A desk-scale cap was exceeded.");

fn verify_err(e: VerifyError) -> PyErr {
    if e.is_cap() {
        CapError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn catalog_err(e: CatalogError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn number_err(e: NumberError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn chartab_err(e: ChartabError) -> PyErr {
    verify_err(e.into())
}

/// A finite simple group of Lie type, e.g. LieGroup("G2", 3) or
/// LieGroup("PSL", 5, n=5).
#[pyclass(frozen, module = "pycodegree")]
struct LieGroup {
    inner: catalog::LieGroup,
}

#[pymethods]
impl LieGroup {
    #[new]
    #[pyo3(signature = (family, q, n=None))]
    fn new(family: &str, q: u64, n: Option<u32>) -> PyResult<Self> {
        let fam = LieFamily::parse(family, n).map_err(catalog_err)?;
        let inner = catalog::LieGroup::from_u64(fam, q).map_err(catalog_err)?;
        Ok(LieGroup { inner })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name()
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.inner.family.id()
    }

    #[getter]
    fn q(&self) -> BigUint {
        self.inner.q().clone()
    }

    #[getter]
    fn p(&self) -> BigUint {
        self.inner.p().clone()
    }

    #[getter]
    fn f(&self) -> u32 {
        self.inner.f()
    }

    fn order(&self) -> BigUint {
        catalog::order(&self.inner)
    }

    /// [(prime, exponent), ...] in increasing order of the prime.
    fn factorization(&self) -> PyResult<Vec<(BigUint, u32)>> {
        let f = catalog::order_factorization(&self.inner).map_err(catalog_err)?;
        Ok(f.iter().map(|(p, e)| (p.clone(), *e)).collect())
    }

    /// (|H|_r, log_r |H|_r, formula trace)
    fn sylow(&self, r: u64) -> PyResult<(BigUint, u32, String)> {
        let s = catalog::sylow_profile(&self.inner, &BigUint::from(r)).map_err(catalog_err)?;
        Ok((s.value, s.exponent, s.trace))
    }

    /// The cross-characteristic degree bound e(H) used at the prime r.
    fn degree_bound(&self, r: u64) -> BigUint {
        let k = catalog::kappa(&self.inner, &BigUint::from(r));
        catalog::lsz_bound(&self.inner, k)
    }

    fn min_module_dim(&self) -> u32 {
        catalog::min_module_dim(self.inner.family, self.inner.p())
    }

    #[pyo3(signature = (symbolic=true, cap_order=None, cap_classes=None))]
    fn verify(&self, symbolic: bool, cap_order: Option<u64>, cap_classes: Option<usize>) -> PyResult<Certificate> {
        let d = Caps::default();
        let opts = RunOptions {
            caps: Caps { max_order: cap_order.unwrap_or(d.max_order), max_classes: cap_classes.unwrap_or(d.max_classes) },
            symbolic,
            ..RunOptions::default()
        };
        let inner = verifier::run_certificate(&self.inner, &opts).map_err(verify_err)?;
        Ok(Certificate { inner })
    }

    fn __repr__(&self) -> String {
        format!("LieGroup({})", self.inner.name())
    }
}

/// A verification certificate; `json()` gives the canonical form.
#[pyclass(frozen, module = "pycodegree")]
struct Certificate {
    inner: verifier::Certificate,
}

#[pymethods]
impl Certificate {
    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    /// "PASS", "GATE-FAIL" or "PARTIAL-PER-PAPER".
    #[getter]
    fn verdict(&self) -> String {
        serde_json::to_value(self.inner.verdict)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default()
    }

    /// Primes r != p covered by Step 2, with their verdicts.
    fn step2(&self) -> Vec<(BigUint, String)> {
        self.inner
            .step2
            .iter()
            .map(|s| {
                let v = serde_json::to_value(s.verdict).ok().and_then(|v| v.as_str().map(str::to_string));
                (s.r.clone(), v.unwrap_or_default())
            })
            .collect()
    }

    /// Keys of the facts the certificate takes from the literature.
    fn cited_keys(&self) -> Vec<String> {
        self.inner.cited_facts.iter().map(|f| f.key.clone()).collect()
    }

    fn json(&self) -> String {
        verifier::canonical_json(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Certificate({}, {})", self.inner.name, self.verdict())
    }
}

#[pyfunction]
fn factorize(n: BigUint) -> Vec<(BigUint, u32)> {
    exactnum::factorize(&n).iter().map(|(p, e)| (p.clone(), *e)).collect()
}

#[pyfunction]
fn is_prime(n: BigUint) -> bool {
    exactnum::is_prime(&n)
}

/// A primitive prime divisor of q^n - 1, or None in the exception cases.
#[pyfunction]
fn zsigmondy(q: BigUint, n: u64) -> PyResult<Option<BigUint>> {
    exactnum::zsigmondy(&q, n).map_err(number_err)
}

/// Multiplicative order of q modulo the prime r.
#[pyfunction]
fn mult_order(q: BigUint, r: BigUint) -> PyResult<u64> {
    exactnum::mult_order(&q, &r).map_err(number_err)
}

/// The set of codegrees of a permutation group given in group-file text.
#[pyfunction]
#[pyo3(signature = (text, cap_order=None))]
fn codegrees(text: &str, cap_order: Option<u64>) -> PyResult<Vec<u64>> {
    let input = GroupInput::parse(text).map_err(chartab_err)?;
    let caps = Caps { max_order: cap_order.unwrap_or(Caps::default().max_order), ..Caps::default() };
    let (_, t) = chartab::cached_character_table(&input, &caps, None).map_err(chartab_err)?;
    Ok(chartab::codegrees(&t).map_err(chartab_err)?.values)
}

/// All ids accepted as the family argument.
#[pyfunction]
fn families() -> Vec<&'static str> {
    let mut v: Vec<&'static str> = LieFamily::exceptional().iter().map(|f| f.id()).collect();
    v.extend(["PSL", "PSp"]);
    v
}

#[pymodule]
fn pycodegree(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<LieGroup>()?;
    m.add_class::<Certificate>()?;
    m.add("CapError", m.py().get_type::<CapError>())?;
    m.add("__version__", verifier::VERSION)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(zsigmondy, m)?)?;
    m.add_function(wrap_pyfunction!(mult_order, m)?)?;
    m.add_function(wrap_pyfunction!(codegrees, m)?)?;
    m.add_function(wrap_pyfunction!(families, m)?)?;
    Ok(())
}
