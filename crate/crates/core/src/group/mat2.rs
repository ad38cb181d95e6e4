use std::ops::{Add, Mul, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// 2×2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2<T> {
    pub m: [[Complex<T>; 2]; 2],
}

impl<T: Real> Mat2<T> {
    pub fn new(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Self {
        Self { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        let (o, z) = (Complex::new(T::one(), T::zero()), Complex::new(T::zero(), T::zero()));
        Self::new(o, z, z, o)
    }

    pub fn zero() -> Self {
        let z = Complex::new(T::zero(), T::zero());
        Self::new(z, z, z, z)
    }

    pub fn diag(a: Complex<T>, d: Complex<T>) -> Self {
        let z = Complex::new(T::zero(), T::zero());
        Self::new(a, z, z, d)
    }

    /// Entries as `[re00, im00, re01, im01, re10, im10, re11, im11]`.
    pub fn to_reals(&self) -> [T; 8] {
        let [[a, b], [c, d]] = self.m;
        [a.re, a.im, b.re, b.im, c.re, c.im, d.re, d.im]
    }

    pub fn from_reals(r: &[T]) -> Self {
        Self::new(
            Complex::new(r[0], r[1]),
            Complex::new(r[2], r[3]),
            Complex::new(r[4], r[5]),
            Complex::new(r[6], r[7]),
        )
    }

    pub fn det(&self) -> Complex<T> {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> Complex<T> {
        self.m[0][0] + self.m[1][1]
    }

    pub fn dagger(&self) -> Self {
        let [[a, b], [c, d]] = self.m;
        Self::new(a.conj(), c.conj(), b.conj(), d.conj())
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        let [[a, b], [c, d]] = self.m;
        Self::new(a * s, b * s, c * s, d * s)
    }

    pub fn scale_re(&self, s: T) -> Self {
        self.scale(Complex::new(s, T::zero()))
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.norm() <= T::min_positive_value() {
            return Err(Error::Singular);
        }
        let [[a, b], [c, d]] = self.m;
        Ok(Self::new(d, -b, -c, a).scale(det.inv()))
    }

    pub fn frobenius(&self) -> T {
        self.m.iter().flatten().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.to_reals().iter().zip(other.to_reals().iter()).fold(T::zero(), |acc, (&x, &y)| acc.max((x - y).abs()))
    }

    /// Frobenius condition number `‖g‖‖g⁻¹‖`.
    pub fn condition(&self) -> T {
        match self.inverse() {
            Ok(inv) => self.frobenius() * inv.frobenius(),
            Err(_) => T::infinity(),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn is_finite(&self) -> bool {
        self.to_reals().iter().all(|x| x.is_finite())
    }

    /// `‖g†g − I‖` plus `|det g − 1|`.
    pub fn unitarity_defect(&self) -> T {
        (self.dagger() * *self).max_abs_diff(&Self::identity())
            + (self.det() - Complex::new(T::one(), T::zero())).norm()
    }

    /// Distance from upper-triangular with positive real diagonal and unit determinant.
    pub fn borel_defect(&self) -> T {
        let [[a, _], [c, d]] = self.m;
        c.norm() + a.im.abs() + d.im.abs() + (a.re * d.re - T::one()).abs() + (-a.re).max(T::zero())
    }
}

impl<T: Real> Mul for Mat2<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let [[a, b], [c, d]] = self.m;
        let [[e, f], [g, h]] = o.m;
        Self::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }
}

impl<T: Real> Add for Mat2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let [[a, b], [c, d]] = self.m;
        let [[e, f], [g, h]] = o.m;
        Self::new(a + e, b + f, c + g, d + h)
    }
}

impl<T: Real> Sub for Mat2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let [[a, b], [c, d]] = self.m;
        let [[e, f], [g, h]] = o.m;
        Self::new(a - e, b - f, c - g, d - h)
    }
}
