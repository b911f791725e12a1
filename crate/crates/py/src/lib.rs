//! Python bindings. Library errors surface as `ValueError`.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sigma2_core as core;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A tuple `(1, …, 1, tail)` stored as the count of ones and the sorted tail.
#[pyclass(name = "CompactSolution", module = "sigma2", frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyCompactSolution {
    inner: core::CompactSolution,
}

impl From<core::CompactSolution> for PyCompactSolution {
    fn from(inner: core::CompactSolution) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyCompactSolution {
    #[new]
    fn new(ones: u64, tail: Vec<u64>) -> PyResult<Self> {
        Ok(core::CompactSolution::new(ones, tail).map_err(err)?.into())
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    #[getter]
    fn ones(&self) -> u64 {
        self.inner.ones()
    }

    #[getter]
    fn tail(&self) -> Vec<u64> {
        self.inner.tail().to_vec()
    }

    /// Common value of σ₂ and the product, or None before verification.
    #[getter]
    fn m(&self) -> Option<BigUint> {
        self.inner.m().cloned()
    }

    #[getter]
    fn i(&self) -> usize {
        self.inner.i()
    }

    #[getter]
    fn distinct(&self) -> usize {
        core::distinct_count(&self.inner)
    }

    fn entries(&self) -> Vec<u64> {
        self.inner.entries().collect()
    }

    /// A verified copy; raises ValueError if this is not a solution.
    fn verify(&self) -> PyResult<Self> {
        self.inner
            .clone()
            .verify()
            .map(Into::into)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn egyptian_view(&self) -> PyResult<Vec<BigUint>> {
        core::egyptian_view(&self.inner).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.inner.n() as usize
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CompactSolution(ones={}, tail={:?})", self.inner.ones(), self.inner.tail())
    }
}

#[pyclass(name = "BoundsReport", module = "sigma2", frozen, get_all)]
#[derive(Clone)]
pub struct PyBoundsReport {
    n: u64,
    prefix_product_max: u64,
    i_max: u32,
    xn_max: u64,
    m_max: u128,
    xn2_max: u64,
}

#[pymethods]
impl PyBoundsReport {
    fn __repr__(&self) -> String {
        format!(
            "BoundsReport(n={}, prefix_product_max={}, i_max={}, xn_max={}, m_max={}, xn2_max={})",
            self.n, self.prefix_product_max, self.i_max, self.xn_max, self.m_max, self.xn2_max
        )
    }
}

/// `(1, …, 1, x, y, z)` with the divisor pair that produced it.
#[pyclass(name = "S3Solution", module = "sigma2", frozen, get_all, eq)]
#[derive(Clone, PartialEq)]
pub struct PyS3Solution {
    n: u64,
    x: u64,
    y: u64,
    z: u64,
    d1: u64,
    d2: u64,
}

impl From<core::S3Solution> for PyS3Solution {
    fn from(s: core::S3Solution) -> Self {
        Self { n: s.n, x: s.x, y: s.y, z: s.z, d1: s.d1, d2: s.d2 }
    }
}

#[pymethods]
impl PyS3Solution {
    fn compact(&self) -> PyResult<PyCompactSolution> {
        let c = core::CompactSolution::new(self.n - 3, vec![self.x, self.y, self.z]).map_err(err)?;
        c.verify().map(Into::into).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("S3Solution(n={}, x={}, y={}, z={}, d1={}, d2={})", self.n, self.x, self.y, self.z, self.d1, self.d2)
    }
}

/// `(σ₁, σ₂, product)`.
#[pyfunction]
pub fn eval_sigmas(xs: Vec<u64>) -> PyResult<(BigUint, BigUint, BigUint)> {
    let s = core::eval_sigmas(&xs).map_err(err)?;
    Ok((s.s1, s.s2, s.prod))
}

/// The verified solution, or None.
#[pyfunction]
pub fn is_solution(xs: Vec<u64>) -> PyResult<Option<PyCompactSolution>> {
    let t = core::SolutionTuple::new(xs).map_err(err)?;
    Ok(core::is_solution(&t).ok().map(Into::into))
}

#[pyfunction]
#[pyo3(signature = (n, jobs = 1))]
pub fn enumerate(py: Python<'_>, n: u64, jobs: usize) -> PyResult<Vec<PyCompactSolution>> {
    let sols = py.allow_threads(|| core::enumerate_with_jobs(n, jobs)).map_err(err)?;
    Ok(sols.into_iter().map(Into::into).collect())
}

#[pyfunction]
pub fn enumerate_brute(py: Python<'_>, n: u64, cap: u64) -> PyResult<Vec<PyCompactSolution>> {
    let sols = py.allow_threads(|| core::enumerate_brute(n, cap)).map_err(err)?;
    Ok(sols.into_iter().map(Into::into).collect())
}

#[pyfunction]
pub fn bounds_for(n: u64) -> PyResult<PyBoundsReport> {
    let b = core::bounds_for(n).map_err(err)?;
    Ok(PyBoundsReport {
        n: b.n,
        prefix_product_max: b.prefix_product_max,
        i_max: b.i_max,
        xn_max: b.xn_max,
        m_max: b.m_max,
        xn2_max: b.xn2_max,
    })
}

#[pyfunction]
pub fn forced_ones(n: u64) -> PyResult<u64> {
    core::forced_ones(n).map_err(err)
}

#[pyfunction]
pub fn f3(n: u64, x: u64) -> PyResult<u64> {
    core::f3(n, x).map_err(err)
}

#[pyfunction]
pub fn s3_enumerate(n: u64) -> PyResult<Vec<PyS3Solution>> {
    Ok(core::s3_enumerate(n).map_err(err)?.into_iter().map(Into::into).collect())
}

#[pyfunction]
pub fn s3_lower_bound(n: u64) -> PyResult<u64> {
    core::s3_lower_bound(n).map_err(err)
}

#[pyfunction]
pub fn canonical_families(n: u64) -> PyResult<Vec<PyS3Solution>> {
    Ok(core::canonical_families(n).map_err(err)?.into_iter().map(Into::into).collect())
}

/// `(n, x, d, m)` for member `j` of the `(1, …, 1, 2, x, x)` family.
#[pyfunction]
pub fn equal_pair_family(j: u64) -> PyResult<(BigUint, BigUint, BigUint, BigUint)> {
    let s = core::equal_pair_family(j).map_err(err)?;
    Ok((s.n, s.x, s.d, s.m))
}

/// `(u, t)` pairs solving `u² − 24ab·t² = 25` with `u ≡ 5 (mod 6)`, `t > 0`.
#[pyfunction]
pub fn pell_solve(a: u64, b: u64, count: usize) -> PyResult<Vec<(BigUint, BigUint)>> {
    Ok(core::pell_solve(a, b, count).map_err(err)?.into_iter().map(|s| (s.u, s.t)).collect())
}

#[pyfunction]
pub fn ratio_limit(a: u64, b: u64) -> f64 {
    core::ratio_limit(a, b)
}

/// `(n, y, z, z/y)` rows; the ratio is a float.
#[pyfunction]
pub fn ratio_solutions(a: u64, b: u64, count: usize) -> PyResult<Vec<(BigUint, BigUint, BigUint, f64)>> {
    Ok(core::ratio_solutions(a, b, count)
        .map_err(err)?
        .into_iter()
        .map(|p| (p.n, p.y, p.z, p.ratio_f64))
        .collect())
}

#[pyfunction]
pub fn min_distinct(n: u64) -> PyResult<usize> {
    core::min_distinct(n).map_err(err)
}

/// `(k, n, x, y)` for each block solution with `k_lo <= k <= k_hi`, `x <= x_max`.
#[pyfunction]
pub fn search_equal_blocks(
    py: Python<'_>,
    k_lo: u32,
    k_hi: u32,
    x_max: u64,
) -> PyResult<Vec<(u32, u64, u64, BigUint)>> {
    let hits = py.allow_threads(|| core::search_equal_blocks(k_lo..=k_hi, x_max)).map_err(err)?;
    Ok(hits.into_iter().map(|h| (h.k, h.n, h.x, h.y)).collect())
}

#[pyfunction]
pub fn construct_max_distinct(tail: Vec<u64>) -> PyResult<PyCompactSolution> {
    Ok(core::construct_max_distinct(&tail).map_err(err)?.into())
}

#[pyfunction]
pub fn max_distinct_witness(m: u64) -> PyResult<PyCompactSolution> {
    Ok(core::max_distinct_witness(m).map_err(err)?.into())
}

#[pymodule]
pub fn sigma2(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCompactSolution>()?;
    m.add_class::<PyBoundsReport>()?;
    m.add_class::<PyS3Solution>()?;
    m.add_function(wrap_pyfunction!(eval_sigmas, m)?)?;
    m.add_function(wrap_pyfunction!(is_solution, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_brute, m)?)?;
    m.add_function(wrap_pyfunction!(bounds_for, m)?)?;
    m.add_function(wrap_pyfunction!(forced_ones, m)?)?;
    m.add_function(wrap_pyfunction!(f3, m)?)?;
    m.add_function(wrap_pyfunction!(s3_enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(s3_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_families, m)?)?;
    m.add_function(wrap_pyfunction!(equal_pair_family, m)?)?;
    m.add_function(wrap_pyfunction!(pell_solve, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_limit, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_solutions, m)?)?;
    m.add_function(wrap_pyfunction!(min_distinct, m)?)?;
    m.add_function(wrap_pyfunction!(search_equal_blocks, m)?)?;
    m.add_function(wrap_pyfunction!(construct_max_distinct, m)?)?;
    m.add_function(wrap_pyfunction!(max_distinct_witness, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrappers_match_core() {
        let c = PyCompactSolution::new(8, vec![7, 7, 7]).unwrap().verify().unwrap();
        assert_eq!((c.n(), c.i(), c.distinct()), (11, 3, 2));
        assert_eq!(c.m(), Some(BigUint::from(343u32)));
        assert_eq!(c.__str__(), "(1^8,7,7,7)");
        assert!(PyCompactSolution::new(0, vec![2, 3, 7]).unwrap().verify().is_err());
        assert_eq!(f3(11, 2).unwrap(), 144);
        assert_eq!(bounds_for(16).unwrap().xn_max, 344);
        assert_eq!(s3_enumerate(299).unwrap().len(), 213);
        assert_eq!(construct_max_distinct(vec![2, 4]).unwrap().tail(), vec![2, 4, 14]);
        assert_eq!(equal_pair_family(0).unwrap().0, BigUint::from(42u32));
    }
}
