use crate::group::Mat2;
use crate::scalar::Real;

/// Magnetic term of the SL(2,C) Dirac bracket over `h₋ = [[a, b+ic],[0,1/a]]`:
/// `ℬ = (b/a) z₃ X₁ − (c/a) z₃ X₂ + ((b/a) z₁ − (c/a) z₂ + ρ z₃) X₃`.
pub fn magnetic_field<T: Real>(a: T, b: T, c: T, z: &[T; 3]) -> [T; 3] {
    let (ba, ca) = (b / a, c / a);
    [ba * z[2], -ca * z[2], ba * z[0] - ca * z[1] + monopole_density(a, b, c) * z[2]]
}

/// `ρ = −(b²/a² + c²/a² + 1/a⁴ − 1)`, the divergence of `ℬ`.
pub fn monopole_density<T: Real>(a: T, b: T, c: T) -> T {
    let a2 = a * a;
    -((b * b + c * c) / a2 + (a2 * a2).recip() - T::one())
}

/// `(1/a²) tr(h₋ H h₋†)`, an independent expression of the density.
pub fn monopole_density_trace<T: Real>(h_minus: &Mat2<T>) -> T {
    let h = crate::sl2c::basis_matrices::<T>()[5];
    let a = h_minus.m[0][0].re;
    (*h_minus * h * h_minus.dagger()).trace().re / (a * a)
}
