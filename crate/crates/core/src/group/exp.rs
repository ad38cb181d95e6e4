use num_complex::Complex;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::group::Mat2;
use crate::scalar::Real;
use crate::sl2c;

/// Term cap for truncated exponential series.
pub const MAX_SERIES_TERMS: usize = 60;

/// Matrix exponential by scaling and squaring around a Taylor series.
pub fn exp_matrix<T: Real>(m: &Mat2<T>) -> Result<Mat2<T>> {
    if !m.is_finite() {
        return Err(Error::InvalidInput("non-finite matrix entries".into()));
    }
    let norm = m.frobenius();
    let mut squarings = 0;
    let mut scaled_norm = norm;
    while scaled_norm > T::lit(0.5) {
        scaled_norm *= T::lit(0.5);
        squarings += 1;
    }
    let a = m.scale_re(T::lit(0.5).powi(squarings));
    let mut sum = Mat2::identity();
    let mut term = Mat2::identity();
    let mut converged = false;
    for n in 1..=MAX_SERIES_TERMS {
        term = (term * a).scale_re(T::lit(n as f64).recip());
        sum = sum + term;
        if term.frobenius() <= T::epsilon() * sum.frobenius() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence(MAX_SERIES_TERMS));
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    Ok(sum)
}

/// `exp(i(t/2)X)` for `X ∈ su(2)`, using `cosh(s/2)I + i X̂ sinh(s/2)` with
/// `X̂ = X/‖X‖` and `s = ‖X‖t`, where `‖X‖² = det X`.
pub fn exp_su2<T: Real>(x: &AlgebraElement<T>, t: T) -> Result<Mat2<T>> {
    x.check_dim(sl2c::DIM)?;
    let off = x.0[3..].iter().fold(T::zero(), |m, &v| m.max(v.abs()));
    if off > T::lit(1e-12) {
        return Err(Error::NotSu2(off.as_f64()));
    }
    let norm = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    if norm == T::zero() {
        return Ok(Mat2::identity());
    }
    let half = norm * t * T::lit(0.5);
    let i = Complex::new(T::zero(), T::one());
    let unit = sl2c::realize(&x.scale(norm.recip()));
    Ok(Mat2::identity().scale_re(half.cosh()) + unit.scale(i * half.sinh()))
}
