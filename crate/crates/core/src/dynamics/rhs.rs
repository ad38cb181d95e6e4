use crate::algebra::{AlgebraElement, Half};
use crate::dynamics::hamiltonian::CollectiveHamiltonian;
use crate::dynamics::state::{GammaForm, OmegaGamma, PhaseState, StateRate};
use crate::error::Result;
use crate::phase::{Fiber, PhaseSpace};
use crate::scalar::Real;

/// Collective dynamics of `𝗁 ∘ Φ` restricted to one Dirac fiber.
#[derive(Clone, Copy)]
pub struct CollectiveSystem<'a, T: Real> {
    pub space: &'a PhaseSpace<T>,
    pub fiber: &'a Fiber<T>,
    pub ham: &'a dyn CollectiveHamiltonian<T>,
}

impl<'a, T: Real> CollectiveSystem<'a, T> {
    pub fn new(space: &'a PhaseSpace<T>, fiber: &'a Fiber<T>, ham: &'a dyn CollectiveHamiltonian<T>) -> Self {
        Self { space, fiber, ham }
    }

    /// `ℒ(σZ)`.
    pub fn legendre_of(&self, z: &AlgebraElement<T>) -> AlgebraElement<T> {
        self.ham.legendre(&self.space.level().sigma(z))
    }

    /// `𝗁(σZ)`, the value of the collective hamiltonian.
    pub fn energy(&self, z: &AlgebraElement<T>) -> T {
        self.ham.value(&self.space.level().sigma(z))
    }

    /// `h⁻¹ḣ = 𝔸₊ℒ(σZ)`, `Ż = σ⁻¹γ(𝔸₋[γ⁻¹σZ, 𝔸₊ℒ(σZ)])`, split into
    /// `h₊⁻¹ḣ₊ = Π₊Ω` and `g₋⁻¹ġ₋ = Ad_{g₋⁻¹}Π₋Ω`.
    pub fn collective_rhs(&self, s: &PhaseState<T>) -> StateRate<T> {
        let tower = self.space.tower();
        let l = self.space.level();
        let hm = &self.fiber.h_minus;
        let lz = self.legendre_of(&s.z);
        let omega = tower.adjoint(hm, &lz);
        let body = tower.projector(hm, &lz, Half::Plus);
        let inner = l.br(&self.space.gamma_sigma(&s.z), &body);
        let z = self.space.sigma_gamma(&tower.projector(hm, &inner, Half::Minus));
        StateRate {
            h_plus_body: l.project(&omega, Half::Plus),
            z,
            g_minus_body: tower.adjoint_inv(&s.g_minus, &l.project(&omega, Half::Minus)),
        }
    }

    /// Full body velocity `h⁻¹ḣ = 𝔸₊(h₋)ℒ(σZ)` of `h = h₊h₋`.
    pub fn full_body_velocity(&self, z: &AlgebraElement<T>) -> AlgebraElement<T> {
        self.space.tower().projector(&self.fiber.h_minus, &self.legendre_of(z), Half::Plus)
    }

    pub fn to_omega_gamma(&self, s: &PhaseState<T>) -> OmegaGamma<T> {
        let tower = self.space.tower();
        let hm = &self.fiber.h_minus;
        OmegaGamma {
            t: s.t,
            h_plus: s.h_plus.clone(),
            omega: tower.adjoint(hm, &self.legendre_of(&s.z)),
            gamma: tower.adjoint(hm, &self.space.gamma_sigma(&s.z)),
        }
    }

    /// `Z = σ⁻¹γ(Ad_{h₋⁻¹}Γ)`; `g₋` is reset to the identity.
    pub fn from_omega_gamma(&self, og: &OmegaGamma<T>) -> PhaseState<T> {
        let z = self.space.sigma_gamma(&self.space.tower().adjoint_inv(&self.fiber.h_minus, &og.gamma));
        PhaseState { t: og.t, h_plus: og.h_plus.clone(), z, g_minus: self.space.identity() }
    }

    /// `Ω = ℒ(γΓ)`.
    pub fn omega_of(&self, gamma: &AlgebraElement<T>) -> AlgebraElement<T> {
        self.ham.legendre(&self.space.level().gamma(gamma))
    }

    /// `(h₊⁻¹ḣ₊, Γ̇) = (Ω₊, ·)` in the chosen form.
    pub fn omega_gamma_rhs(&self, og: &OmegaGamma<T>, form: GammaForm) -> (AlgebraElement<T>, AlgebraElement<T>) {
        let l = self.space.level();
        let omega = self.omega_of(&og.gamma);
        let plus = l.project(&omega, Half::Plus);
        let minus = l.project(&omega, Half::Minus);
        let rate = match form {
            GammaForm::Projected => l.project(&l.br(&og.gamma, &plus), Half::Minus),
            GammaForm::ProjectedMinus => -l.project(&l.br(&og.gamma, &minus), Half::Minus),
            GammaForm::Lax => -l.br(&og.gamma, &minus),
        };
        (plus, rate)
    }

    /// `‖[Γ, Ω]‖` and `‖Π₊[Γ, Ω₋]‖`; both vanish under the character condition.
    pub fn commutator_norms(&self, gamma: &AlgebraElement<T>) -> (T, T) {
        let l = self.space.level();
        let omega = self.omega_of(gamma);
        let full = l.br(gamma, &omega).norm_inf();
        let mixed = l.project(&l.br(gamma, &l.project(&omega, Half::Minus)), Half::Plus).norm_inf();
        (full, mixed)
    }

    /// Checks the initial data: `Z₋` matches the fiber and `σ(Z₋)` is a
    /// character of `𝔥₋` (returned as a defect, not an error).
    pub fn validate_state(&self, s: &PhaseState<T>) -> Result<T> {
        let tol = T::lit(crate::phase::MEMBERSHIP_TOL);
        let l = self.space.level();
        s.h_plus.check_depth(self.space.depth())?;
        s.z.check_dim(l.dim())?;
        self.space.tower().check_subgroup(&s.h_plus, Half::Plus, tol)?;
        let dz = l.project(&s.z, Half::Minus).max_diff(&self.fiber.z_minus);
        if dz > tol {
            return Err(crate::Error::OffFiber(dz.as_f64()));
        }
        Ok(self.space.character_defect(&self.fiber.z_minus))
    }
}
