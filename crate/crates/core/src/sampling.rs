//! Seeded random elements for tests, verification suites and scenarios.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, CoalgebraElement, Half};
use crate::group::{GroupElement, Mat2};
use crate::scalar::Real;
use crate::tower::Tower;

pub const DEFAULT_SEED: u64 = 0x5eed_a4c5;

#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn uniform<T: Real>(&mut self, lo: f64, hi: f64) -> T {
        T::lit(self.rng.gen_range(lo..hi))
    }

    fn complex<T: Real>(&mut self, r: f64) -> Complex<T> {
        Complex::new(self.uniform(-r, r), self.uniform(-r, r))
    }

    /// Coefficients uniform in `[−1, 1]`.
    pub fn algebra<T: Real>(&mut self, dim: usize) -> AlgebraElement<T> {
        AlgebraElement((0..dim).map(|_| self.uniform(-1.0, 1.0)).collect())
    }

    pub fn coalgebra<T: Real>(&mut self, dim: usize) -> CoalgebraElement<T> {
        CoalgebraElement(self.algebra(dim).0)
    }

    /// Random element of `𝔥±` at the given level.
    pub fn half_algebra<T: Real>(&mut self, tower: &Tower<T>, depth: usize, half: Half) -> AlgebraElement<T> {
        let l = tower.level(depth);
        l.project(&self.algebra(l.dim()), half)
    }

    /// Unit vector, uniform on the sphere.
    pub fn unit3<T: Real>(&mut self) -> [T; 3] {
        loop {
            let v: [f64; 3] = std::array::from_fn(|_| self.rng.gen_range(-1.0..1.0));
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            if n > 1e-3 && n <= 1.0 {
                return v.map(|c| T::lit(c / n));
            }
        }
    }

    pub fn su2<T: Real>(&mut self) -> Mat2<T> {
        let q: [f64; 4] = loop {
            let q: [f64; 4] = std::array::from_fn(|_| self.rng.gen_range(-1.0..1.0));
            let n = q.iter().map(|v| v * v).sum::<f64>().sqrt();
            if n > 1e-3 {
                break q.map(|v| v / n);
            }
        };
        let [a, b, c, d] = q.map(T::lit);
        Mat2::new(Complex::new(a, b), Complex::new(c, d), Complex::new(-c, d), Complex::new(a, -b))
    }

    /// `[[a, b+ic], [0, 1/a]]` with `ln a ∈ [−1, 1]` and `b, c ∈ [−1, 1]`.
    pub fn borel<T: Real>(&mut self) -> Mat2<T> {
        let a: T = self.uniform::<T>(-1.0, 1.0).exp();
        let z = Complex::new(T::zero(), T::zero());
        let off = self.complex(1.0);
        Mat2::new(Complex::new(a, T::zero()), off, z, Complex::new(a.recip(), T::zero()))
    }

    /// Entries uniform in `[−2, 2]²`, rescaled to unit determinant.
    pub fn sl2c<T: Real>(&mut self) -> Mat2<T> {
        loop {
            let m = Mat2::new(self.complex(2.0), self.complex(2.0), self.complex(2.0), self.complex(2.0));
            let det = m.det();
            if det.norm() > T::lit(0.1) {
                return m.scale(det.sqrt().inv());
            }
        }
    }

    /// Random element of `H_depth`.
    pub fn group<T: Real>(&mut self, tower: &Tower<T>, depth: usize) -> GroupElement<T> {
        match depth {
            0 => GroupElement::Matrix(self.sl2c()),
            d => {
                let base = self.group(tower, d - 1);
                let fiber = self.algebra(tower.level(d - 1).dim());
                GroupElement::pair(base, fiber)
            }
        }
    }

    /// Random element of `H₊` or `H₋` at the given depth.
    pub fn subgroup<T: Real>(&mut self, tower: &Tower<T>, depth: usize, half: Half) -> GroupElement<T> {
        match depth {
            0 => GroupElement::Matrix(match half {
                Half::Plus => self.su2(),
                Half::Minus => self.borel(),
            }),
            d => {
                let base = self.subgroup(tower, d - 1, half);
                let fiber = self.half_algebra(tower, d - 1, half);
                GroupElement::pair(base, fiber)
            }
        }
    }
}

impl Default for Sampler {
    fn default() -> Self {
        Self::new(DEFAULT_SEED)
    }
}
