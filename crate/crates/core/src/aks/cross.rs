//! Powers of `ad_X` on `su(2)` through iterated cross products.

use crate::algebra::AlgebraElement;
use crate::brackets::cross;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::sl2c;

fn dot<T: Real>(x: &[T; 3], y: &[T; 3]) -> T {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

/// `x × (x × ⋯ (x × y))` with `n` factors, by direct iteration.
pub fn iterated_cross<T: Real>(x: &[T; 3], y: &[T; 3], n: usize) -> [T; 3] {
    (0..n).fold(*y, |acc, _| cross(x, &acc))
}

/// Closed form of [`iterated_cross`]: even `n ≥ 2` gives
/// `(−1)^{n/2+1}‖x‖^{n−2}[(x·y)x − ‖x‖²y]`, odd `n` gives
/// `(−1)^{(n−1)/2}‖x‖^{n−1} x × y`.
pub fn iterated_cross_closed<T: Real>(x: &[T; 3], y: &[T; 3], n: usize) -> [T; 3] {
    if n == 0 {
        return *y;
    }
    let nx2 = dot(x, x);
    let sign = |k: usize| if k.is_multiple_of(2) { T::one() } else { -T::one() };
    if n.is_multiple_of(2) {
        let f = sign(n / 2 + 1) * nx2.powi((n as i32 - 2) / 2);
        let xy = dot(x, y);
        std::array::from_fn(|i| f * (xy * x[i] - nx2 * y[i]))
    } else {
        let f = sign((n - 1) / 2) * nx2.powi((n as i32 - 1) / 2);
        cross(x, y).map(|v| f * v)
    }
}

/// `ad_Xⁿ Y` by repeated brackets in `sl(2,C)`.
pub fn ad_power<T: Real>(x: &AlgebraElement<T>, y: &AlgebraElement<T>, n: usize) -> AlgebraElement<T> {
    let alg = sl2c::algebra::<T>();
    alg.ad_power(x, y, n)
}

/// Closed form of `ad_Xⁿ Y` for `X, Y ∈ su(2)`, `‖X‖ = 1`: even `n ≥ 2` gives
/// `(−1)^{n/2+1}2ⁿ[(x·y)X − Y]`, odd `n` gives `(−1)^{(n−1)/2}2^{n−1}[X, Y]`.
pub fn ad_power_closed<T: Real>(x: &AlgebraElement<T>, y: &AlgebraElement<T>, n: usize) -> Result<AlgebraElement<T>> {
    x.check_dim(sl2c::DIM)?;
    y.check_dim(sl2c::DIM)?;
    let off = sl2c::BOREL.iter().fold(T::zero(), |m, &i| m.max(x[i].abs()).max(y[i].abs()));
    if off > T::lit(super::closed_form::UNIT_TOL) {
        return Err(Error::NotSu2(off.as_f64()));
    }
    let xv = sl2c::su2_vector(x);
    let norm = dot(&xv, &xv).sqrt();
    if (norm - T::one()).abs() > T::lit(super::closed_form::UNIT_TOL) {
        return Err(Error::InvalidInput(format!("X must have unit norm, got {norm}")));
    }
    if n == 0 {
        return Ok(y.clone());
    }
    let sign = |k: usize| if k.is_multiple_of(2) { T::one() } else { -T::one() };
    let two_n = T::lit(2.0).powi(n as i32);
    if n.is_multiple_of(2) {
        let xy = dot(&xv, &sl2c::su2_vector(y));
        Ok((&x.scale(xy) - y).scale(sign(n / 2 + 1) * two_n))
    } else {
        let alg = sl2c::algebra::<T>();
        Ok(alg.br(x, y).scale(sign((n - 1) / 2) * two_n * T::lit(0.5)))
    }
}
