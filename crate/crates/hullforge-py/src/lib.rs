//! Python bindings: finite-field arithmetic plus the construct / verify /
//! sweep pipelines. Report-producing functions return the same JSON the CLI
//! emits ([`construct`] a single report object; [`verify_tables`] and
//! [`sweep`] an array of per-field reports), ready for `json.loads`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hullforge::code::{InnerProduct, DEFAULT_ENUM_CAP};
use hullforge::constructions::{
    construct as construct_record, euclidean_field, hermitian_field, TheoremId,
};
use hullforge::gf::{FieldCtx, FieldElem};
use hullforge::report::{evaluate_record, RunReport};
use hullforge::tables::{sweep_theorem, verify_table, Scope};

fn err(e: hullforge::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field_for(theorem: TheoremId, q: u32) -> Result<FieldCtx, hullforge::Error> {
    match theorem.inner_product() {
        InnerProduct::Hermitian => hermitian_field(q),
        InnerProduct::Euclidean => euclidean_field(q),
    }
}

fn to_json_array(reports: &[RunReport]) -> PyResult<String> {
    let mut s =
        serde_json::to_string_pretty(reports).map_err(|e| PyValueError::new_err(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// A finite field GF(p^e). Elements are passed and returned as integer
/// codes in [0, order); code 0 is the zero element.
#[pyclass]
struct Field {
    ctx: FieldCtx,
}

impl Field {
    fn get(&self, code: u32) -> PyResult<FieldElem> {
        self.ctx.elem(code).map_err(err)
    }
}

#[pymethods]
impl Field {
    #[new]
    fn new(p: u32, e: u32) -> PyResult<Self> {
        Ok(Field {
            ctx: FieldCtx::field_create(p, e).map_err(err)?,
        })
    }

    #[getter]
    fn p(&self) -> u32 {
        self.ctx.p()
    }

    #[getter]
    fn e(&self) -> u32 {
        self.ctx.e()
    }

    #[getter]
    fn order(&self) -> u32 {
        self.ctx.order()
    }

    /// Code of the fixed primitive element.
    #[getter]
    fn omega(&self) -> u32 {
        self.ctx.omega().code()
    }

    /// Modulus polynomial coefficients, ascending degree.
    #[getter]
    fn modulus(&self) -> Vec<u32> {
        self.ctx.modulus().to_vec()
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self
            .ctx
            .add(self.get(a)?, self.get(b)?)
            .map_err(err)?
            .code())
    }

    fn sub(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self
            .ctx
            .sub(self.get(a)?, self.get(b)?)
            .map_err(err)?
            .code())
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self
            .ctx
            .mul(self.get(a)?, self.get(b)?)
            .map_err(err)?
            .code())
    }

    fn neg(&self, a: u32) -> PyResult<u32> {
        Ok(self.ctx.neg(self.get(a)?).map_err(err)?.code())
    }

    fn inv(&self, a: u32) -> PyResult<u32> {
        Ok(self.ctx.inv(self.get(a)?).map_err(err)?.code())
    }

    fn pow(&self, a: u32, t: u64) -> PyResult<u32> {
        Ok(self.ctx.pow(self.get(a)?, t).map_err(err)?.code())
    }

    /// Discrete log base omega of a nonzero element.
    fn dlog(&self, a: u32) -> PyResult<u32> {
        self.ctx.dlog(self.get(a)?).map_err(err)
    }

    /// x ↦ x^q, for fields presented as a quadratic extension GF(q²).
    fn frobenius(&self, a: u32) -> PyResult<u32> {
        Ok(self.ctx.frobenius_q(self.get(a)?).map_err(err)?.code())
    }

    /// Does the element lie in the index-2 subfield GF(q) of GF(q²)?
    fn subfield_test(&self, a: u32) -> PyResult<bool> {
        self.ctx.subfield_test(self.get(a)?).map_err(err)
    }

    /// Human-readable form: "0" or "w^t" in terms of omega (1 is "w^0").
    fn elem_str(&self, a: u32) -> PyResult<String> {
        Ok(self.ctx.elem_to_string(self.get(a)?))
    }

    fn __repr__(&self) -> String {
        format!(
            "Field(p={}, e={}, order={})",
            self.ctx.p(),
            self.ctx.e(),
            self.ctx.order()
        )
    }
}

/// Construct one code instance, verify it, and return the report as a JSON
/// object string.
#[pyfunction]
#[pyo3(signature = (theorem, q, m=None, n=None, k=None, l=None, cap=DEFAULT_ENUM_CAP))]
#[allow(clippy::too_many_arguments)]
fn construct(
    theorem: &str,
    q: u32,
    m: Option<u32>,
    n: Option<usize>,
    k: Option<usize>,
    l: Option<usize>,
    cap: u64,
) -> PyResult<String> {
    let theorem: TheoremId = theorem.parse().map_err(err)?;
    let ctx = field_for(theorem, q).map_err(err)?;
    let record = construct_record(&ctx, theorem, q, m, n, k, l).map_err(err)?;
    let item = evaluate_record(&ctx, &record, cap).map_err(err)?;
    Ok(RunReport::new(&ctx, vec![item]).to_json())
}

/// Re-derive result table 2, 3, or 4 and return a JSON array of per-field
/// reports. `scope` is "fast" (q ≤ 9) or "full".
#[pyfunction]
#[pyo3(signature = (table, scope="fast", cap=DEFAULT_ENUM_CAP))]
fn verify_tables(table: u8, scope: &str, cap: u64) -> PyResult<String> {
    let scope: Scope = scope.parse().map_err(err)?;
    let reports = verify_table(table, scope, cap).map_err(err)?;
    to_json_array(&reports)
}

/// Verify the full legal parameter grid of a construction for each q and
/// return a JSON array of per-field reports.
#[pyfunction]
#[pyo3(signature = (theorem, qs, cap=DEFAULT_ENUM_CAP))]
fn sweep(theorem: &str, qs: Vec<u32>, cap: u64) -> PyResult<String> {
    let theorem: TheoremId = theorem.parse().map_err(err)?;
    let mut qs = qs;
    qs.sort_unstable();
    qs.dedup();
    let mut reports = Vec::with_capacity(qs.len());
    for q in qs {
        reports.push(sweep_theorem(theorem, q, cap).map_err(err)?);
    }
    to_json_array(&reports)
}

#[pymodule]
fn hullforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Field>()?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(verify_tables, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add("DEFAULT_ENUM_CAP", DEFAULT_ENUM_CAP)?;
    Ok(())
}
