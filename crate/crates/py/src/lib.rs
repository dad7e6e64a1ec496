//! Python bindings for `genera-core`.
//!
//! The module mirrors the Rust API surface with Python-friendly types:
//! arbitrary-precision integers map to `int`, exact rationals to
//! `fractions.Fraction`, partitions to lists of positive integers (any
//! order; they are sorted on the way in).  All domain violations raise
//! `ValueError` carrying the underlying message.

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use genera_core as gc;

fn err(e: gc::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition_from(parts: Vec<u32>) -> PyResult<gc::symmetric::Partition> {
    gc::symmetric::Partition::try_new(parts).map_err(err)
}

// ---------------------------------------------------------------------------
// graded polynomials

/// A graded polynomial in the Pontrjagin generators `p1, p2, ...` with
/// exact rational coefficients.
#[pyclass(name = "GradedPoly")]
struct PyGradedPoly {
    inner: gc::symmetric::GradedPoly,
}

#[pymethods]
impl PyGradedPoly {
    /// Coefficient of the monomial indexed by `parts` (a partition).
    fn coeff(&self, parts: Vec<u32>) -> PyResult<BigRational> {
        Ok(self.inner.coeff(&partition_from(parts)?))
    }

    /// All terms in canonical order as `(partition, coefficient)` pairs.
    fn terms(&self) -> Vec<(Vec<u32>, BigRational)> {
        self.inner
            .terms()
            .map(|(la, c)| (la.parts().to_vec(), c.clone()))
            .collect()
    }

    /// Total weight of the highest-weight term, `None` for the zero
    /// polynomial.
    fn max_weight(&self) -> Option<u32> {
        self.inner.max_weight()
    }

    /// Canonical JSON encoding.
    fn to_json(&self) -> String {
        gc::json::graded_poly_to_json(&self.inner).to_string()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GradedPoly({})", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

// ---------------------------------------------------------------------------
// plumbing graphs

/// A plumbing graph of `S^{2m}`-bundles over `S^{2m}` together with its
/// intersection form.
#[pyclass(name = "PlumbingGraph")]
struct PyPlumbingGraph {
    inner: gc::plumbing::PlumbingGraph,
}

#[pymethods]
impl PyPlumbingGraph {
    /// The standard `E8` graph with fibre half-dimension `m`.
    #[staticmethod]
    #[pyo3(signature = (m = 2))]
    fn e8(m: u32) -> PyResult<Self> {
        Ok(Self {
            inner: gc::plumbing::e8_graph(m).map_err(err)?,
        })
    }

    /// Decode a graph record from its JSON encoding.
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(Self {
            inner: gc::json::graph_from_str(s).map_err(err)?,
        })
    }

    /// Canonical JSON encoding.
    fn to_json(&self) -> String {
        gc::json::graph_to_string(&self.inner)
    }

    /// Half the fibre dimension `m`.
    #[getter]
    fn fiber_half_dim(&self) -> u32 {
        self.inner.fiber_half_dim()
    }

    /// Dimension `4m` of the plumbed manifold.
    #[getter]
    fn total_space_dim(&self) -> u32 {
        self.inner.total_space_dim()
    }

    /// The symmetric intersection matrix as a list of rows.
    fn intersection_matrix(&self) -> Vec<Vec<BigInt>> {
        let m = self.inner.intersection_matrix();
        (0..m.n()).map(|i| m.row(i).to_vec()).collect()
    }

    fn determinant(&self) -> BigInt {
        gc::plumbing::determinant(&self.inner.intersection_matrix())
    }

    fn signature(&self) -> PyResult<i64> {
        gc::plumbing::signature(&self.inner.intersection_matrix()).map_err(err)
    }

    /// Whether the boundary is a homotopy sphere, as `(holds, code)`.
    fn bounds_homotopy_sphere(&self) -> (bool, String) {
        let verdict = gc::plumbing::bounds_homotopy_sphere(&self.inner);
        (verdict.holds(), verdict.code().to_string())
    }

    fn __repr__(&self) -> String {
        format!(
            "PlumbingGraph(m={}, vertices={}, edges={})",
            self.inner.fiber_half_dim(),
            self.inner.vertices().len(),
            self.inner.edges().len()
        )
    }
}

// ---------------------------------------------------------------------------
// manifold records

/// An invariant record of a closed oriented manifold (or a formal
/// stand-in built from surgery data).
#[pyclass(name = "VirtualManifold")]
struct PyVirtualManifold {
    inner: gc::surgery::VirtualManifold,
}

#[pymethods]
impl PyVirtualManifold {
    /// The sphere `S^n` with all characteristic numbers zero.
    #[staticmethod]
    fn sphere(n: u32) -> Self {
        Self {
            inner: gc::surgery::sphere(n),
        }
    }

    /// The product `S^p x S^q`.
    #[staticmethod]
    fn product_of_spheres(p: u32, q: u32) -> PyResult<Self> {
        Ok(Self {
            inner: gc::surgery::product_of_spheres(p, q).map_err(err)?,
        })
    }

    /// The quaternionic projective plane.
    #[staticmethod]
    fn hp2() -> Self {
        Self {
            inner: gc::surgery::quaternionic_projective_plane(),
        }
    }

    /// Decode a manifold record from its JSON encoding.
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(Self {
            inner: gc::json::manifold_from_str(s).map_err(err)?,
        })
    }

    /// Canonical JSON encoding.
    fn to_json(&self) -> String {
        gc::json::manifold_to_string(&self.inner)
    }

    #[getter]
    fn dim(&self) -> u32 {
        self.inner.dim
    }

    #[getter]
    fn chi(&self) -> BigInt {
        self.inner.chi.clone()
    }

    #[getter]
    fn sigma(&self) -> BigInt {
        self.inner.sigma.clone()
    }

    #[getter]
    fn spin(&self) -> bool {
        self.inner.spin
    }

    #[getter]
    fn almost_parallelisable(&self) -> bool {
        self.inner.almost_parallelisable
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    /// The recorded Pontrjagin numbers as `(partition, value)` pairs, or
    /// `None` when the dimension is not a multiple of 4.
    fn pontrjagin(&self) -> Option<Vec<(Vec<u32>, BigInt)>> {
        self.inner.pontrjagin.as_ref().map(|pn| {
            pn.iter()
                .map(|(la, v)| (la.parts().to_vec(), v.clone()))
                .collect()
        })
    }

    /// The single Pontrjagin number indexed by `parts` (zero if absent).
    fn pontrjagin_number(&self, parts: Vec<u32>) -> PyResult<BigInt> {
        Ok(self.inner.pontrjagin_number(&partition_from(parts)?))
    }

    /// Connected sum with another record of the same dimension.
    fn connected_sum(&self, other: &Self) -> PyResult<Self> {
        Ok(Self {
            inner: gc::surgery::connected_sum(&self.inner, &other.inner).map_err(err)?,
        })
    }

    /// `self # n * summand` in closed form (`n` may be astronomically
    /// large).
    fn connected_sum_many(&self, summand: &Self, n: BigInt) -> PyResult<Self> {
        Ok(Self {
            inner: gc::surgery::connected_sum_many(&self.inner, &summand.inner, &n)
                .map_err(err)?,
        })
    }

    /// The orientation-reversed record.
    fn reverse_orientation(&self) -> Self {
        Self {
            inner: gc::surgery::reverse_orientation(&self.inner),
        }
    }

    /// The exact pairing `<ph . Ahat, [M]>` as a Fraction.
    fn genus_ph_ahat(&self) -> PyResult<BigRational> {
        gc::genera::genus_ph_ahat(&self.inner).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "VirtualManifold(name={:?}, dim={}, chi={}, sigma={})",
            self.inner.name, self.inner.dim, self.inner.chi, self.inner.sigma
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

// ---------------------------------------------------------------------------
// surgery reports and obstruction classes

/// Everything assembled while building `M0^{4m}`.
#[pyclass(name = "M0Report")]
struct PyM0Report {
    inner: gc::surgery::M0Report,
}

#[pymethods]
impl PyM0Report {
    #[getter]
    fn m(&self) -> u32 {
        self.inner.m
    }

    /// Integer obstruction of the starting record `W0^{4m}`.
    #[getter]
    fn q(&self) -> BigInt {
        self.inner.q.clone()
    }

    /// Copies of the sphere-product summand used.
    #[getter]
    fn copies(&self) -> BigInt {
        self.inner.copies.clone()
    }

    #[getter]
    fn base(&self) -> PyVirtualManifold {
        PyVirtualManifold {
            inner: self.inner.base.clone(),
        }
    }

    #[getter]
    fn summand(&self) -> PyVirtualManifold {
        PyVirtualManifold {
            inner: self.inner.summand.clone(),
        }
    }

    #[getter]
    fn result(&self) -> PyVirtualManifold {
        PyVirtualManifold {
            inner: self.inner.result.clone(),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "M0Report(m={}, q={}, copies={}, result={:?})",
            self.inner.m, self.inner.q, self.inner.copies, self.inner.result.name
        )
    }
}

/// The top obstruction `(o0, o2)` to an almost-complex structure on a
/// `4m`-manifold; `o2` exists exactly for even `m`.
#[pyclass(name = "ObstructionClass")]
struct PyObstructionClass {
    inner: gc::obstruction::ObstructionClass,
}

#[pymethods]
impl PyObstructionClass {
    #[new]
    #[pyo3(signature = (m, o0, o2 = None))]
    fn new(m: u32, o0: BigInt, o2: Option<u8>) -> PyResult<Self> {
        Ok(Self {
            inner: gc::obstruction::ObstructionClass::from_parts(m, o0, o2).map_err(err)?,
        })
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m()
    }

    #[getter]
    fn o0(&self) -> BigInt {
        self.inner.o0().clone()
    }

    #[getter]
    fn o2(&self) -> Option<u8> {
        self.inner.o2()
    }

    fn __repr__(&self) -> String {
        match self.inner.o2() {
            Some(bit) => format!("ObstructionClass(m={}, o0={}, o2={bit})", self.inner.m(), self.inner.o0()),
            None => format!("ObstructionClass(m={}, o0={})", self.inner.m(), self.inner.o0()),
        }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

// ---------------------------------------------------------------------------
// free functions

/// Bernoulli number `B_m` in the unsigned convention (`B_1 = 1/6`).
#[pyfunction]
fn bernoulli(m: u32) -> PyResult<BigRational> {
    gc::numbers::bernoulli(m).map_err(err)
}

/// The von Staudt-Clausen denominator: the product of all primes `p` with
/// `p - 1` dividing `2m`.
#[pyfunction]
fn vsc_denominator(m: u32) -> PyResult<BigInt> {
    gc::numbers::vsc_denominator(m).map_err(err)
}

/// Coefficient of `p_m` in the L-polynomial `L_m`, in closed form.
#[pyfunction]
fn d_coeff(m: u32) -> BigRational {
    gc::genera::d_coeff(m)
}

/// Coefficient of `p_m` in the Ahat-polynomial, in closed form.
#[pyfunction]
fn ahat_top_coeff(m: u32) -> BigRational {
    gc::genera::ahat_top_coeff(m)
}

/// The L-polynomial `L_m` as a graded polynomial in `p1, ..., pm`.
#[pyfunction]
fn l_poly(m: u32) -> PyResult<PyGradedPoly> {
    if m == 0 {
        return Err(PyValueError::new_err("m must be at least 1"));
    }
    Ok(PyGradedPoly {
        inner: gc::genera::l_poly(m),
    })
}

/// The Ahat-polynomial of weight `m`.
#[pyfunction]
fn ahat_poly(m: u32) -> PyResult<PyGradedPoly> {
    if m == 0 {
        return Err(PyValueError::new_err("m must be at least 1"));
    }
    Ok(PyGradedPoly {
        inner: gc::genera::ahat_poly(m),
    })
}

/// Order of the group `bP_{4m}` of homotopy spheres bounding
/// parallelisable manifolds (`m >= 2`).
#[pyfunction]
fn bp_order(m: u32) -> PyResult<BigInt> {
    gc::surgery::bp_order(m).map_err(err)
}

/// The same order through the alternative closed form.
#[pyfunction]
fn bp_order_alt(m: u32) -> PyResult<BigInt> {
    gc::surgery::bp_order_alt(m).map_err(err)
}

/// The Pontrjagin number `p_m[W0^{4m}]` in closed form.
#[pyfunction]
fn lemma1_pm(m: u32) -> PyResult<BigInt> {
    gc::surgery::lemma1_pm(m).map_err(err)
}

/// Minimal `|chi|` among the almost-complex candidates in dimension `4m`.
#[pyfunction]
fn min_euler_char(m: u32) -> PyResult<BigInt> {
    gc::surgery::min_euler_char(m).map_err(err)
}

/// The parallelisable-boundary record `W0^{4m}` closed up along its
/// boundary homotopy sphere.
#[pyfunction]
fn build_w0(m: u32) -> PyResult<PyVirtualManifold> {
    Ok(PyVirtualManifold {
        inner: gc::surgery::build_w0(m).map_err(err)?,
    })
}

/// The minimal-Euler-characteristic record `M0^{4m}` with vanishing
/// integer obstruction, together with the construction data.
#[pyfunction]
fn build_m0(m: u32) -> PyResult<PyM0Report> {
    Ok(PyM0Report {
        inner: gc::surgery::build_m0(m).map_err(err)?,
    })
}

/// The obstruction class of the standard sphere `S^{4m}`.
#[pyfunction]
fn o_sphere(m: u32) -> PyResult<PyObstructionClass> {
    Ok(PyObstructionClass {
        inner: gc::obstruction::o_sphere(m).map_err(err)?,
    })
}

/// Obstruction class of a connected sum from the classes of the summands.
#[pyfunction]
fn o_connected_sum(
    a: &PyObstructionClass,
    b: &PyObstructionClass,
) -> PyResult<PyObstructionClass> {
    Ok(PyObstructionClass {
        inner: gc::obstruction::o_connected_sum(&a.inner, &b.inner).map_err(err)?,
    })
}

/// Obstruction class of the orientation reversal of `manifold`, given the
/// class of the original.
#[pyfunction]
fn o_reverse(
    manifold: &PyVirtualManifold,
    o: &PyObstructionClass,
) -> PyResult<PyObstructionClass> {
    Ok(PyObstructionClass {
        inner: gc::obstruction::o_reverse(&manifold.inner, &o.inner).map_err(err)?,
    })
}

/// Integer part of the top obstruction from Euler characteristic,
/// Pontrjagin, and decomposable Chern numbers.
#[pyfunction]
fn o0_formula(manifold: &PyVirtualManifold) -> PyResult<BigInt> {
    gc::obstruction::o0_formula(&manifold.inner).map_err(err)
}

/// The stable shortcut `(chi - c_2m)/2`.
#[pyfunction]
fn o0_stable_formula(manifold: &PyVirtualManifold) -> PyResult<BigInt> {
    gc::obstruction::o0_stable_formula(&manifold.inner).map_err(err)
}

/// Copies `(a, b)` of a reference manifold and its reversal realizing the
/// prescribed integer obstruction `target`.
#[pyfunction]
fn realize_o0(chi: BigInt, target: BigInt) -> PyResult<(BigInt, BigInt)> {
    gc::obstruction::realize_o0(&chi, &target).map_err(err)
}

/// Parity of `<ph . Ahat, [M]>` as `(value, even)`; under the `Sq^2`
/// hypothesis (asserted by the caller) `even` decides the mod-2 part.
#[pyfunction]
fn o2_vanishes(manifold: &PyVirtualManifold, sq2_hypothesis: bool) -> PyResult<(BigInt, bool)> {
    let parity = gc::obstruction::o2_vanishes(&manifold.inner, sq2_hypothesis).map_err(err)?;
    Ok((parity.genus, parity.even))
}

#[pymodule]
fn genera(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGradedPoly>()?;
    m.add_class::<PyPlumbingGraph>()?;
    m.add_class::<PyVirtualManifold>()?;
    m.add_class::<PyM0Report>()?;
    m.add_class::<PyObstructionClass>()?;
    m.add_function(wrap_pyfunction!(bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(vsc_denominator, m)?)?;
    m.add_function(wrap_pyfunction!(d_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(ahat_top_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(l_poly, m)?)?;
    m.add_function(wrap_pyfunction!(ahat_poly, m)?)?;
    m.add_function(wrap_pyfunction!(bp_order, m)?)?;
    m.add_function(wrap_pyfunction!(bp_order_alt, m)?)?;
    m.add_function(wrap_pyfunction!(lemma1_pm, m)?)?;
    m.add_function(wrap_pyfunction!(min_euler_char, m)?)?;
    m.add_function(wrap_pyfunction!(build_w0, m)?)?;
    m.add_function(wrap_pyfunction!(build_m0, m)?)?;
    m.add_function(wrap_pyfunction!(o_sphere, m)?)?;
    m.add_function(wrap_pyfunction!(o_connected_sum, m)?)?;
    m.add_function(wrap_pyfunction!(o_reverse, m)?)?;
    m.add_function(wrap_pyfunction!(o0_formula, m)?)?;
    m.add_function(wrap_pyfunction!(o0_stable_formula, m)?)?;
    m.add_function(wrap_pyfunction!(realize_o0, m)?)?;
    m.add_function(wrap_pyfunction!(o2_vanishes, m)?)?;
    Ok(())
}
