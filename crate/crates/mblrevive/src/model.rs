use ndarray::Array2;
use ndarray_linalg::Eigh;

/// Smoke test: Hermitian eigensolve through LAPACK.
pub fn probe_eigh(n: usize) -> f64 {
    let a = Array2::<f64>::from_shape_fn((n, n), |(i, j)| {
        ((i * 31 + j * 17) % 97) as f64 / 97.0
    });
    let sym = &a + &a.t();
    let (vals, _vecs) = sym.eigh(ndarray_linalg::UPLO::Lower).unwrap();
    vals[0]
}
