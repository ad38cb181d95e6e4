use crate::algebra::{AlgebraElement, BilinearForm, CoalgebraElement};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::tower::Level;

/// Ad-invariant function `𝗁` on `𝔥*` with its Legendre map `ℒ`, defined by
/// `k(ℒ(η), X) = d/dt 𝗁(η + tγX)`.
pub trait CollectiveHamiltonian<T: Real>: Send + Sync {
    fn name(&self) -> &str;
    fn value(&self, eta: &CoalgebraElement<T>) -> T;
    fn legendre(&self, eta: &CoalgebraElement<T>) -> AlgebraElement<T>;
}

/// `𝗁(η) = ½ k(γ⁻¹η, γ⁻¹η)`, so `ℒ = γ⁻¹`.
#[derive(Clone, Debug)]
pub struct QuadraticKm<T> {
    form: BilinearForm<T>,
}

impl<T: Real> QuadraticKm<T> {
    pub fn new(level: &Level<T>) -> Self {
        Self { form: level.form.clone() }
    }
}

impl<T: Real> CollectiveHamiltonian<T> for QuadraticKm<T> {
    fn name(&self) -> &str {
        "quadratic_km"
    }

    fn value(&self, eta: &CoalgebraElement<T>) -> T {
        T::lit(0.5) * eta.pair(&self.form.gamma_inv(eta))
    }

    fn legendre(&self, eta: &CoalgebraElement<T>) -> AlgebraElement<T> {
        self.form.gamma_inv(eta)
    }
}

/// `𝗁(η) = −(1/16) Re κ(X₀, Y₀)` with `(X₀, Y₀) = γ⁻¹η` on the level-1
/// algebra `sl(2,C) ⋉ sl(2,C)`; `ℒ(η) = (i/2)γ⁻¹η`.
#[derive(Clone, Debug)]
pub struct ComplexKilling<T> {
    level: Level<T>,
}

impl<T: Real> ComplexKilling<T> {
    pub fn new(level: &Level<T>) -> Result<Self> {
        if level.dim() != crate::tower::algebra_dim(1) {
            return Err(Error::LevelMismatch { expected: 1, found: level.algebra.level() });
        }
        Ok(Self { level: level.clone() })
    }
}

impl<T: Real> CollectiveHamiltonian<T> for ComplexKilling<T> {
    fn name(&self) -> &str {
        "sl2c_h2"
    }

    fn value(&self, eta: &CoalgebraElement<T>) -> T {
        let (x, y) = self.level.gamma_inv(eta).halves();
        -crate::sl2c::killing(&x, &y).re / T::lit(16.0)
    }

    fn legendre(&self, eta: &CoalgebraElement<T>) -> AlgebraElement<T> {
        self.level.j(&self.level.gamma_inv(eta)).scale(T::lit(0.5))
    }
}

type ValueFn<T> = Box<dyn Fn(&CoalgebraElement<T>) -> T + Send + Sync>;
type LegendreFn<T> = Box<dyn Fn(&CoalgebraElement<T>) -> AlgebraElement<T> + Send + Sync>;

/// User-supplied collective hamiltonian.
pub struct FnHamiltonian<T> {
    name: String,
    value: ValueFn<T>,
    legendre: LegendreFn<T>,
}

impl<T: Real> FnHamiltonian<T> {
    pub fn new(
        name: impl Into<String>,
        value: impl Fn(&CoalgebraElement<T>) -> T + Send + Sync + 'static,
        legendre: impl Fn(&CoalgebraElement<T>) -> AlgebraElement<T> + Send + Sync + 'static,
    ) -> Self {
        Self { name: name.into(), value: Box::new(value), legendre: Box::new(legendre) }
    }
}

impl<T: Real> CollectiveHamiltonian<T> for FnHamiltonian<T> {
    fn name(&self) -> &str {
        &self.name
    }

    fn value(&self, eta: &CoalgebraElement<T>) -> T {
        (self.value)(eta)
    }

    fn legendre(&self, eta: &CoalgebraElement<T>) -> AlgebraElement<T> {
        (self.legendre)(eta)
    }
}

/// Largest deviation of `k(ℒ(η), e_i)` from a central difference of `𝗁`
/// along `γ(e_i)`.
pub fn legendre_residual<T: Real>(
    ham: &dyn CollectiveHamiltonian<T>,
    level: &Level<T>,
    eta: &CoalgebraElement<T>,
    step: T,
) -> T {
    let l = ham.legendre(eta);
    let n = level.dim();
    (0..n)
        .map(|i| {
            let e = AlgebraElement::basis(n, i);
            let d = level.gamma(&e).scale(step);
            let fd = (ham.value(&(eta + &d)) - ham.value(&(eta - &d))) / (step + step);
            (level.pair(&l, &e) - fd).abs()
        })
        .fold(T::zero(), T::max)
}
