//! Explicit factorization of `Exp(t(i/2)(X₀, Y₀))` on `SL(2,C) ⋉ sl(2,C)`
//! for `X₀, Y₀ ∈ su(2)` with `‖X₀‖ = 1`.

use num_complex::Complex;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::group::{GroupElement, Mat2};
use crate::scalar::Real;
use crate::sl2c;

/// Tolerance on `‖X₀‖ = 1` and on the `𝔟` components of `X₀`, `Y₀`.
pub const UNIT_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForm<T> {
    pub h0_plus: Mat2<T>,
    pub k0_minus: Mat2<T>,
    pub x1_plus: AlgebraElement<T>,
    pub x1_minus: AlgebraElement<T>,
}

impl<T: Real> ClosedForm<T> {
    /// `(h₀⁺, X₁⁺)`.
    pub fn plus(&self) -> GroupElement<T> {
        GroupElement::pair(GroupElement::Matrix(self.h0_plus), self.x1_plus.clone())
    }

    /// `(k₀⁻, X₁⁻)`.
    pub fn minus(&self) -> GroupElement<T> {
        GroupElement::pair(GroupElement::Matrix(self.k0_minus), self.x1_minus.clone())
    }
}

fn check_su2<T: Real>(x: &AlgebraElement<T>) -> Result<[T; 3]> {
    x.check_dim(sl2c::DIM)?;
    let off = sl2c::BOREL.iter().fold(T::zero(), |m, &i| m.max(x[i].abs()));
    if off > T::lit(UNIT_TOL) {
        return Err(Error::NotSu2(off.as_f64()));
    }
    Ok(sl2c::su2_vector(x))
}

fn check_unit<T: Real>(x: &AlgebraElement<T>) -> Result<[T; 3]> {
    let a = check_su2(x)?;
    let n = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
    if (n - T::one()).abs() > T::lit(UNIT_TOL) {
        return Err(Error::InvalidInput(format!("X0_plus must have unit norm, got {n}")));
    }
    Ok(a)
}

/// The generator `(i/2)(X₀, Y₀)` of the exponential curve.
pub fn generator<T: Real>(x0: &AlgebraElement<T>, y0: &AlgebraElement<T>) -> AlgebraElement<T> {
    let j = sl2c::j_matrix::<T>();
    let half = T::lit(0.5);
    let ix = AlgebraElement(j.mul_vec(&x0.0)).scale(half);
    let iy = AlgebraElement(j.mul_vec(&y0.0)).scale(half);
    AlgebraElement::concat(&ix, &iy)
}

/// Fiber slot of `Exp(t(i/2)(X₀, Y₀))`:
/// `(i/2)(t − sinh t)(x·y)X₀ + (i/2) sinh t Y₀ + ¼(cosh t − 1)[X₀, Y₀]`.
pub fn summed_series<T: Real>(x0: &AlgebraElement<T>, y0: &AlgebraElement<T>, t: T) -> Result<AlgebraElement<T>> {
    let x = check_unit(x0)?;
    let y = check_su2(y0)?;
    let dot = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    let j = sl2c::j_matrix::<T>();
    let ij = |v: &AlgebraElement<T>| AlgebraElement(j.mul_vec(&v.0));
    let half = T::lit(0.5);
    let comm = sl2c::coefficients_unchecked(&sl2c::realize(x0).commutator(&sl2c::realize(y0)));
    Ok(&(&ij(x0).scale(half * (t - t.sinh()) * dot) + &ij(y0).scale(half * t.sinh()))
        + &comm.scale(T::lit(0.25) * (t.cosh() - T::one())))
}

fn adjoint<T: Real>(g: &Mat2<T>, x: &AlgebraElement<T>) -> AlgebraElement<T> {
    let inv = g.inverse().expect("unimodular");
    sl2c::coefficients_unchecked(&(*g * sl2c::realize(x) * inv))
}

fn project<T: Real>(x: &AlgebraElement<T>, idx: &[usize]) -> AlgebraElement<T> {
    let mut out = AlgebraElement::zeros(sl2c::DIM);
    for &i in idx {
        out[i] = x[i];
    }
    out
}

/// Both factors of `Exp(t(i/2)(X₀, Y₀)) = (h₀⁺, X₁⁺)•(k₀⁻, X₁⁻)` from the
/// explicit cosh/sinh formulas.
pub fn sl2c_closed_form<T: Real>(x0: &AlgebraElement<T>, y0: &AlgebraElement<T>, t: T) -> Result<ClosedForm<T>> {
    let [a1, a2, a3] = check_unit(x0)?;
    check_su2(y0)?;
    let (c, s) = ((t * T::lit(0.5)).cosh(), (t * T::lit(0.5)).sinh());
    let n2 = t.cosh() - a3 * t.sinh();
    let n = n2.sqrt();
    let re = |v: T| Complex::new(v, T::zero());
    let w = Complex::new(a1, -a2);
    let h0_plus = Mat2::new(re((c - a3 * s) / n), w * (s / n), -w.conj() * (s / n), re((c - a3 * s) / n));
    let k0_minus = Mat2::new(re(n), -w * (t.sinh() / n), re(T::zero()), re(n.recip()));
    let series = summed_series(x0, y0, t)?;
    let moved = adjoint(&k0_minus, &series);
    let x1_plus = project(&moved, &sl2c::SU2);
    let inv = k0_minus.inverse()?;
    let x1_minus = adjoint(&inv, &project(&moved, &sl2c::BOREL));
    Ok(ClosedForm { h0_plus, k0_minus, x1_plus, x1_minus })
}
