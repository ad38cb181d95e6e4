use crate::algebra::{AlgebraElement, CoalgebraElement, Half};
use crate::brackets::observable::{Differential, Observable};
use crate::error::Result;
use crate::phase::{Fiber, PhasePoint, PhaseSpace};
use crate::scalar::Real;

impl<T: Real> PhaseSpace<T> {
    /// Momentum map of the left action, `Φ(h, Z) = γ(Ad_h γ⁻¹σZ)`.
    pub fn momentum_map(&self, p: &PhasePoint<T>) -> Result<CoalgebraElement<T>> {
        self.check_point(p)?;
        Ok(self.level().gamma(&self.tower().adjoint(&p.h, &self.gamma_sigma(&p.z))))
    }

    /// `φ_X(h, Z) = (Z, Ad_{h⁻¹}X)_σ` with its exact differential
    /// `(γ[γ⁻¹σZ, Ad_{h⁻¹}X], σ(Ad_{h⁻¹}X))`.
    pub fn momentum_function(&self, x: AlgebraElement<T>) -> Observable<'static, T> {
        let value_space = self.clone();
        let diff_space = self.clone();
        let xv = x.clone();
        Observable::new(move |p: &PhasePoint<T>| {
            let l = value_space.level();
            l.sigma_pair(&p.z, &value_space.tower().adjoint_inv(&p.h, &xv))
        })
        .with_differential(move |p: &PhasePoint<T>| {
            let l = diff_space.level();
            let moved = diff_space.tower().adjoint_inv(&p.h, &x);
            Differential { group: l.gamma(&l.br(&diff_space.gamma_sigma(&p.z), &moved)), fiber: l.sigma(&moved) }
        })
    }

    /// Dressing momentum on `H₊ ⋉ 𝔥₊`, `Θ(h₊, Z₊) = γ(Π₊Ad_{h₊⁻¹}γ⁻¹σZ₊)`.
    pub fn theta_momentum(&self, p: &PhasePoint<T>) -> Result<CoalgebraElement<T>> {
        self.check_point(p)?;
        let l = self.level();
        let moved = self.tower().adjoint_inv(&p.h, &self.gamma_sigma(&p.z));
        Ok(l.gamma(&l.project(&moved, Half::Plus)))
    }

    /// Predicted `{φ_X, φ_Y} − φ_{[X,Y]}` on a fiber:
    /// `−(Z, [Ad_{h₋⁻¹}Π₋Ad_{h₊⁻¹}X, Ad_{h₋⁻¹}Π₋Ad_{h₊⁻¹}Y])_σ`.
    pub fn momentum_bracket_defect(
        &self,
        fiber: &Fiber<T>,
        p: &PhasePoint<T>,
        x: &AlgebraElement<T>,
        y: &AlgebraElement<T>,
    ) -> Result<T> {
        let (hp, _, _) = self.decompose(p)?;
        let l = self.level();
        let tower = self.tower();
        let lift = |a: &AlgebraElement<T>| {
            tower.adjoint_inv(&fiber.h_minus, &l.project(&tower.adjoint_inv(&hp, a), Half::Minus))
        };
        Ok(-l.sigma_pair(&p.z, &l.br(&lift(x), &lift(y))))
    }
}
