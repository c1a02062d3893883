//! Python bindings for the core engine.
//!
//! The module mirrors the Rust API at the granularity a notebook wants:
//! exact typed matrices ([`PyMor`]), tensor words ([`PyWord`]), finite
//! monoids ([`PyFinMonoid`]) and bundle documents ([`PyBundle`]) with all
//! law checkers reachable through [`PyBundle::check`]. Scalars cross the
//! boundary as canonical strings (`"-3/4"`) or Python ints; reports come
//! back as plain dicts so they can be asserted on or dumped as JSON.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use std::path::PathBuf;
use std::sync::Arc;

use wreathkit::coaction::{
    check_eckmann_hilton, check_monoidal_twisted_coaction, check_opmonoidal,
    check_twisted_coaction, generated_opwreath_unchecked, OpmonoidalStructure,
};
use wreathkit::extension::{
    enumerate_cocycles, reconstruct, verify_extension_data, DEFAULT_MAX_CANDIDATES,
};
use wreathkit::bundle::Bundle;
use wreathkit::mixed::{check_opwreath, convolve, heisenberg_product};
use wreathkit::structures::{check_bimonoid, check_comonoid, check_monoid, FinMonoid};
use wreathkit::wreath::{check_wreath, wreath_product};
use wreathkit::{AxiomReport, FieldDescriptor, Generator, Mor, ObjWord};

fn err(e: wreathkit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn report_to_py<'py>(py: Python<'py>, report: &AxiomReport) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("passed", report.passed())?;
    let entries = PyList::empty(py);
    for e in &report.entries {
        let item = PyDict::new(py);
        item.set_item("id", &e.id)?;
        item.set_item("desc", &e.desc)?;
        item.set_item("pass", e.pass)?;
        match &e.witness {
            None => item.set_item("witness", py.None())?,
            Some(w) => {
                let witness = PyDict::new(py);
                witness.set_item("at", w.at.clone())?;
                witness.set_item("lhs", &w.lhs)?;
                witness.set_item("rhs", &w.rhs)?;
                item.set_item("witness", witness)?;
            }
        }
        entries.append(item)?;
    }
    out.set_item("entries", entries)?;
    Ok(out)
}

// ----------------------------------------------------------------- scalars

/// A coefficient field: exact rationals or a prime field `F_p`.
#[pyclass(name = "Field", frozen, eq, skip_from_py_object)]
#[derive(Clone, Copy, PartialEq)]
struct PyField(FieldDescriptor);

#[pymethods]
impl PyField {
    /// The field of exact rational numbers.
    #[staticmethod]
    fn rational() -> Self {
        PyField(FieldDescriptor::Rational)
    }

    /// The prime field of integers modulo `p` (p must be prime and < 2³¹).
    #[staticmethod]
    fn prime(p: u64) -> PyResult<Self> {
        FieldDescriptor::prime(p).map(PyField).map_err(err)
    }

    fn __repr__(&self) -> String {
        match self.0 {
            FieldDescriptor::Rational => "Field.rational()".to_string(),
            FieldDescriptor::Prime { p } => format!("Field.prime({p})"),
        }
    }
}

// ------------------------------------------------------------------- words

/// A tensor word of named generating objects; the empty word is the unit.
#[pyclass(name = "Word", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyWord(ObjWord);

#[pymethods]
impl PyWord {
    /// Build a word from `(name, dimension)` pairs, leftmost factor first.
    #[new]
    fn new(factors: Vec<(String, usize)>) -> PyResult<Self> {
        if factors.iter().any(|(_, dim)| *dim == 0) {
            return Err(PyValueError::new_err("generator dimensions must be ≥ 1"));
        }
        Ok(PyWord(ObjWord::from_factors(
            factors
                .into_iter()
                .map(|(name, dim)| Generator::new(name, dim))
                .collect(),
        )))
    }

    /// The empty word `I`.
    #[staticmethod]
    fn unit() -> Self {
        PyWord(ObjWord::unit())
    }

    /// Total dimension: the product of the factor dimensions.
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn factors(&self) -> Vec<(String, usize)> {
        self.0
            .factors()
            .iter()
            .map(|g| (g.name.clone(), g.dim))
            .collect()
    }

    fn tensor(&self, other: &PyWord) -> PyWord {
        PyWord(self.0.tensor(&other.0))
    }

    fn __repr__(&self) -> String {
        format!("Word({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

// --------------------------------------------------------------- morphisms

/// A matrix entry as Python hands it over: an int, or canonical text.
#[derive(FromPyObject)]
enum ScalarArg {
    Int(i64),
    Text(String),
}

/// An exact matrix `dom → cod`, stored dense over the ambient field.
#[pyclass(name = "Mor", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMor(Mor);

impl PyMor {
    fn same_field(&self, other: &PyMor, what: &str) -> PyResult<()> {
        if self.0.field() != other.0.field() {
            return Err(PyValueError::new_err(format!(
                "{what} over mixed fields: {} vs {}",
                self.0.field(),
                other.0.field()
            )));
        }
        Ok(())
    }
}

#[pymethods]
impl PyMor {
    /// The identity matrix on a word.
    #[staticmethod]
    fn identity(field: &PyField, w: &PyWord) -> Self {
        PyMor(Mor::identity(field.0, &w.0))
    }

    /// The symmetry `x⊗y → y⊗x` that swaps the two blocks of legs.
    #[staticmethod]
    fn braid(field: &PyField, x: &PyWord, y: &PyWord) -> Self {
        PyMor(Mor::braid(field.0, &x.0, &y.0))
    }

    /// The elementary matrix with a single 1 at `(row, col)`.
    #[staticmethod]
    fn matrix_unit(
        field: &PyField,
        dom: &PyWord,
        cod: &PyWord,
        row: usize,
        col: usize,
    ) -> PyResult<Self> {
        if row >= cod.dim() || col >= dom.dim() {
            return Err(PyValueError::new_err(format!(
                "entry ({row}, {col}) outside a {}×{} matrix",
                cod.dim(),
                dom.dim()
            )));
        }
        Ok(PyMor(Mor::matrix_unit(
            field.0,
            dom.0.clone(),
            cod.0.clone(),
            row,
            col,
        )))
    }

    /// Build from rows of scalars: ints, or strings like `"-3/4"`.
    #[staticmethod]
    fn from_rows(
        field: &PyField,
        dom: &PyWord,
        cod: &PyWord,
        rows: Vec<Vec<ScalarArg>>,
    ) -> PyResult<Self> {
        let mut parsed = Vec::with_capacity(rows.len());
        for row in rows {
            let mut out = Vec::with_capacity(row.len());
            for cell in row {
                out.push(match cell {
                    ScalarArg::Int(n) => field.0.from_i64(n),
                    ScalarArg::Text(s) => field.0.parse_scalar(&s).map_err(err)?,
                });
            }
            parsed.push(out);
        }
        Mor::from_rows(field.0, dom.0.clone(), cod.0.clone(), parsed)
            .map(PyMor)
            .map_err(err)
    }

    fn field(&self) -> PyField {
        PyField(self.0.field())
    }

    fn dom(&self) -> PyWord {
        PyWord(self.0.dom().clone())
    }

    fn cod(&self) -> PyWord {
        PyWord(self.0.cod().clone())
    }

    fn rows(&self) -> usize {
        self.0.rows()
    }

    fn cols(&self) -> usize {
        self.0.cols()
    }

    /// One entry, rendered canonically (`"2/3"`, `"-1"`, `"4"`).
    fn entry(&self, row: usize, col: usize) -> PyResult<String> {
        if row >= self.0.rows() || col >= self.0.cols() {
            return Err(PyValueError::new_err(format!(
                "entry ({row}, {col}) outside a {}×{} matrix",
                self.0.rows(),
                self.0.cols()
            )));
        }
        Ok(self.0.entry(row, col).to_string())
    }

    /// All entries as canonical strings, row by row.
    fn entries(&self) -> Vec<Vec<String>> {
        (0..self.0.rows())
            .map(|r| {
                (0..self.0.cols())
                    .map(|c| self.0.entry(r, c).to_string())
                    .collect()
            })
            .collect()
    }

    /// `self ∘ other` (apply `other` first).
    fn compose(&self, other: &PyMor) -> PyResult<PyMor> {
        self.0.compose(&other.0).map(PyMor).map_err(err)
    }

    fn tensor(&self, other: &PyMor) -> PyResult<PyMor> {
        self.same_field(other, "tensor")?;
        Ok(PyMor(self.0.tensor(&other.0)))
    }

    fn add(&self, other: &PyMor) -> PyResult<PyMor> {
        self.same_field(other, "sum")?;
        self.0.add(&other.0).map(PyMor).map_err(err)
    }

    fn sub(&self, other: &PyMor) -> PyResult<PyMor> {
        self.same_field(other, "difference")?;
        self.0.sub(&other.0).map(PyMor).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Mor({} → {} over {}, {}×{})",
            self.0.dom(),
            self.0.cod(),
            self.0.field(),
            self.0.rows(),
            self.0.cols()
        )
    }
}

// ---------------------------------------------------------- finite monoids

/// A finite monoid given by its multiplication table.
#[pyclass(name = "FinMonoid", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyFinMonoid(FinMonoid);

#[pymethods]
impl PyFinMonoid {
    #[new]
    fn new(elements: Vec<String>, table: Vec<Vec<usize>>, unit: usize) -> PyResult<Self> {
        let fm = FinMonoid {
            elements,
            table,
            unit,
        };
        fm.validate().map_err(err)?;
        Ok(PyFinMonoid(fm))
    }

    /// The cyclic group of order `n`, elements `"0"…"n-1"`.
    #[staticmethod]
    fn cyclic(n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("order must be ≥ 1"));
        }
        Ok(PyFinMonoid(FinMonoid::cyclic(n)))
    }

    /// The one-element monoid.
    #[staticmethod]
    fn trivial() -> Self {
        PyFinMonoid(FinMonoid::trivial())
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn unit(&self) -> usize {
        self.0.unit
    }

    fn elements(&self) -> Vec<String> {
        self.0.elements.clone()
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.0.table.clone()
    }

    fn mul(&self, i: usize, j: usize) -> PyResult<usize> {
        let n = self.0.size();
        if i >= n || j >= n {
            return Err(PyValueError::new_err(format!(
                "element index out of range for a monoid of size {n}"
            )));
        }
        Ok(self.0.mul(i, j))
    }

    fn direct_product(&self, other: &PyFinMonoid) -> PyFinMonoid {
        PyFinMonoid(self.0.direct_product(&other.0))
    }

    /// Does `map` (a bijection on indices) carry this monoid onto `other`?
    fn is_isomorphic_under(&self, other: &PyFinMonoid, map: Vec<usize>) -> bool {
        self.0.is_isomorphic_under(&other.0, &map)
    }

    fn __repr__(&self) -> String {
        format!("FinMonoid(size={})", self.0.size())
    }
}

// ----------------------------------------------------------------- bundles

/// What classifies an extension: the fiber, the action table `α`, and the
/// factor set `ρ`.
type ClassifyingData = (PyFinMonoid, Vec<Vec<usize>>, Vec<Vec<usize>>);

/// A named collection of objects, morphisms, tables and structures sharing
/// one field, loaded from the JSON interchange format.
#[pyclass(name = "Bundle", frozen)]
struct PyBundle(Bundle);

#[pymethods]
impl PyBundle {
    /// Parse a bundle from JSON text.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Bundle::from_json(text).map(PyBundle).map_err(err)
    }

    /// Read and parse a bundle file.
    #[staticmethod]
    fn from_path(path: PathBuf) -> PyResult<Self> {
        Bundle::from_path(&path).map(PyBundle).map_err(err)
    }

    /// Re-serialize in canonical form (sorted keys, trailing newline).
    fn to_canonical_json(&self) -> String {
        self.0.to_canonical_json()
    }

    fn field(&self) -> PyField {
        PyField(self.0.field())
    }

    fn morphism(&self, name: &str) -> PyResult<PyMor> {
        self.0.morphism(name).map(|m| PyMor(m.clone())).map_err(err)
    }

    fn finmonoid(&self, name: &str) -> PyResult<PyFinMonoid> {
        self.0
            .finmonoid(name)
            .map(|fm| PyFinMonoid(fm.clone()))
            .map_err(err)
    }

    /// Check the laws of a named structure. `kind` is one of `"monoid"`,
    /// `"comonoid"`, `"bimonoid"`, `"wreath"`, `"opwreath"`, `"coaction"`,
    /// `"monoidal-coaction"`, `"opmonoidal"` or `"extension"`; the result is
    /// a dict with `passed` and per-axiom `entries`.
    fn check<'py>(&self, py: Python<'py>, kind: &str, name: &str) -> PyResult<Bound<'py, PyDict>> {
        let report = match kind {
            "monoid" => check_monoid(&self.0.monoid(name).map_err(err)?),
            "comonoid" => check_comonoid(&self.0.comonoid(name).map_err(err)?),
            "bimonoid" => check_bimonoid(&self.0.bimonoid(name).map_err(err)?),
            "wreath" => check_wreath(&self.0.wreath(name).map_err(err)?),
            "opwreath" => check_opwreath(&self.0.opwreath(name).map_err(err)?),
            "coaction" => check_twisted_coaction(&self.0.coaction(name).map_err(err)?),
            "monoidal-coaction" => {
                check_monoidal_twisted_coaction(&self.0.monoidal_coaction(name).map_err(err)?)
            }
            "opmonoidal" => {
                let mc = self.0.monoidal_coaction(name).map_err(err)?;
                let context = generated_opwreath_unchecked(&mc.base).map_err(err)?;
                check_opmonoidal(&context, &mc.dd, &self.default_gens())
            }
            "extension" => {
                verify_extension_data(&self.0.extension(name).map_err(err)?)
            }
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown structure kind '{other}'"
                )))
            }
        }
        .map_err(err)?;
        report_to_py(py, &report)
    }

    /// Convolution along the commutation cell of a named opwreath.
    fn convolve(&self, structure: &str, u: &PyMor, v: &PyMor) -> PyResult<PyMor> {
        let ow = self.0.opwreath(structure).map_err(err)?;
        convolve(&u.0, &v.0, &ow).map(PyMor).map_err(err)
    }

    /// Convolution of two endomorphisms of a named bimonoid through the
    /// twisted (Heisenberg) crossing.
    fn heisenberg(&self, structure: &str, u: &PyMor, v: &PyMor) -> PyResult<PyMor> {
        let b = self.0.bimonoid(structure).map_err(err)?;
        heisenberg_product(&u.0, &v.0, &b).map(PyMor).map_err(err)
    }

    /// Multiply out a named wreath into `(carrier, mul, unit)` of the
    /// product monoid on `S⊗A`, validating the laws first.
    fn wreath_product(&self, structure: &str) -> PyResult<(PyWord, PyMor, PyMor)> {
        let w = self.0.wreath(structure).map_err(err)?;
        let product = wreath_product(&w).map_err(err)?;
        Ok((
            PyWord(product.carrier),
            PyMor(product.mul),
            PyMor(product.unit),
        ))
    }

    /// Extract `(fiber, action, factor_set)` classifying data from a named
    /// fibration, as `(FinMonoid, list, list)`.
    fn analyze(&self, structure: &str) -> PyResult<ClassifyingData> {
        let fib = self.0.fibration(structure).map_err(err)?;
        let ext = fib.analyze().map_err(err)?;
        Ok((PyFinMonoid(ext.a), ext.alpha, ext.rho))
    }

    /// Rebuild the total monoid of a named extension.
    fn reconstruct(&self, structure: &str) -> PyResult<PyFinMonoid> {
        let ext = self.0.extension(structure).map_err(err)?;
        reconstruct(&ext).map(PyFinMonoid).map_err(err)
    }

    /// List every factor set compatible with the action of a named
    /// extension, in lexicographic order.
    #[pyo3(signature = (structure, max_candidates = None))]
    fn enumerate_cocycles(
        &self,
        structure: &str,
        max_candidates: Option<u128>,
    ) -> PyResult<Vec<Vec<Vec<usize>>>> {
        let (m, a, alpha) = self.0.extension_action(structure).map_err(err)?;
        enumerate_cocycles(&m, &a, &alpha, max_candidates.unwrap_or(DEFAULT_MAX_CANDIDATES))
            .map_err(err)
    }

    /// Check that convolution on maps `B → A` of a named monoidal coaction
    /// commutes and agrees with composition in both orders.
    fn eckmann_hilton<'py>(&self, py: Python<'py>, structure: &str) -> PyResult<Bound<'py, PyDict>> {
        let mc = self.0.monoidal_coaction(structure).map_err(err)?;
        let context = Arc::new(generated_opwreath_unchecked(&mc.base).map_err(err)?);
        let os = OpmonoidalStructure::new(context, mc.dd.clone(), &self.default_gens())
            .map_err(err)?;
        let report = check_eckmann_hilton(&os).map_err(err)?;
        report_to_py(py, &report)
    }

    fn __repr__(&self) -> String {
        format!("Bundle(field={})", self.0.field())
    }
}

impl PyBundle {
    /// The unit object plus every object the bundle declares, used to
    /// quantify object-indexed laws.
    fn default_gens(&self) -> Vec<ObjWord> {
        let mut gens = vec![ObjWord::unit()];
        gens.extend(self.0.generators().iter().map(ObjWord::gen));
        gens
    }
}

#[pymodule]
fn wreathkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyWord>()?;
    m.add_class::<PyMor>()?;
    m.add_class::<PyFinMonoid>()?;
    m.add_class::<PyBundle>()?;
    m.add("DEFAULT_MAX_CANDIDATES", DEFAULT_MAX_CANDIDATES)?;
    Ok(())
}
