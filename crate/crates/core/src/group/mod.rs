//! SL(2,C), its Iwasawa factorization, exponentials and the recursive
//! semidirect group elements.

mod element;
mod exp;
mod iwasawa;
mod mat2;

pub use element::{GroupElement, GroupRepr};
pub use exp::{exp_matrix, exp_su2, MAX_SERIES_TERMS};
pub use iwasawa::{iwasawa, MAX_CONDITION, UNIMODULAR_TOL};
pub use mat2::Mat2;

use num_complex::Complex;

use crate::scalar::Real;

/// Nearest element of SU(2): polar factor `h(h†h)^{-1/2}` with the
/// determinant phase removed.
pub fn reproject_su2<T: Real>(h: &Mat2<T>) -> Mat2<T> {
    let p = h.dagger() * *h;
    // For a 2×2 positive matrix, √P = (P + √det P·I)/√(tr P + 2√det P).
    let sd = p.det().re.max(T::zero()).sqrt();
    let denom = (p.trace().re + sd + sd).sqrt();
    let root = (p + Mat2::identity().scale_re(sd)).scale_re(denom.recip());
    let u = match root.inverse() {
        Ok(inv) => *h * inv,
        Err(_) => return *h,
    };
    let phase = u.det().sqrt();
    u.scale(phase.inv())
}

/// Upper-triangular projection with positive real diagonal and unit determinant.
pub fn reproject_borel<T: Real>(b: &Mat2<T>) -> Mat2<T> {
    let a = b.m[0][0].norm();
    let z = Complex::new(T::zero(), T::zero());
    Mat2::new(Complex::new(a, T::zero()), b.m[0][1], z, Complex::new(a.recip(), T::zero()))
}
