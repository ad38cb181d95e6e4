use num_complex::Complex;

use crate::error::{Error, Result};
use crate::group::Mat2;
use crate::scalar::Real;

/// Largest condition number accepted by [`iwasawa`].
pub const MAX_CONDITION: f64 = 1e12;

/// Tolerance on `|det g − 1|` for inputs to [`iwasawa`]; raised to
/// `1000ε` for scalars coarser than `f64`.
pub const UNIMODULAR_TOL: f64 = 1e-10;

/// Unique split `g = u·b` with `u ∈ SU(2)` and `b` upper triangular with
/// positive real diagonal.
///
/// `b` is the Cholesky factor of `g†g`; `u = g b⁻¹`.
pub fn iwasawa<T: Real>(g: &Mat2<T>) -> Result<(Mat2<T>, Mat2<T>)> {
    if !g.is_finite() {
        return Err(Error::InvalidInput("non-finite matrix entries".into()));
    }
    let det_err = (g.det() - Complex::new(T::one(), T::zero())).norm();
    if det_err > T::lit(UNIMODULAR_TOL).max(T::epsilon() * T::lit(1e3)) {
        return Err(Error::NotUnimodular(det_err.as_f64()));
    }
    let cond = g.condition();
    if cond > T::lit(MAX_CONDITION) {
        return Err(Error::IllConditioned(cond.as_f64()));
    }
    Ok(iwasawa_unchecked(g))
}

fn iwasawa_unchecked<T: Real>(g: &Mat2<T>) -> (Mat2<T>, Mat2<T>) {
    let [[g00, g01], [g10, g11]] = g.m;
    // First column norm and its projection onto the second column.
    let b11 = (g00.norm_sqr() + g10.norm_sqr()).sqrt();
    let b12 = (g00.conj() * g01 + g10.conj() * g11).unscale(b11);
    let z = Complex::new(T::zero(), T::zero());
    let u0 = [g00.unscale(b11), g10.unscale(b11)];
    // SU(2) fixes the second column from the first.
    let u = Mat2::new(u0[0], -u0[1].conj(), u0[1], u0[0].conj());
    let b = Mat2::new(Complex::new(b11, T::zero()), b12, z, Complex::new(b11.recip(), T::zero()));
    (u, b)
}
