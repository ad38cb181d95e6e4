use crate::algebra::{AlgebraElement, CoalgebraElement, Half};
use crate::brackets::observable::{Differential, Observable};
use crate::error::Result;
use crate::group::Mat2;
use crate::phase::{Fiber, PhasePoint, PhaseSpace, Tangent, MEMBERSHIP_TOL};
use crate::scalar::Real;
use crate::sl2c;

/// Tolerance for accepting a point as lying on a fiber.
pub const FIBER_TOL: f64 = 1e-8;

impl<T: Real> PhaseSpace<T> {
    /// Canonical bracket on `H × 𝔥`:
    /// `⟨dF, σ⁻¹δG⟩ − ⟨dG, σ⁻¹δF⟩ − ⟨σZ, [σ⁻¹δF, σ⁻¹δG]⟩`.
    pub fn canonical_bracket(&self, f: &Observable<'_, T>, g: &Observable<'_, T>, p: &PhasePoint<T>) -> Result<T> {
        self.check_point(p)?;
        let (df, dg) = (self.differential(f, p)?, self.differential(g, p)?);
        Ok(self.canonical_from_differentials(&df, &dg, &p.z))
    }

    pub fn canonical_from_differentials(&self, df: &Differential<T>, dg: &Differential<T>, z: &AlgebraElement<T>) -> T {
        let l = self.level();
        let (uf, ug) = (l.sigma_inv(&df.fiber), l.sigma_inv(&dg.fiber));
        df.group.pair(&ug) - dg.group.pair(&uf) - l.sigma(z).pair(&l.br(&uf, &ug))
    }

    /// Dirac bracket on the fiber over `(h₋, Z₋)`: the canonical bracket
    /// with `𝔸₊(h₋)` applied to each `σ⁻¹δ·`.
    pub fn dirac_bracket(
        &self,
        fiber: &Fiber<T>,
        f: &Observable<'_, T>,
        g: &Observable<'_, T>,
        p: &PhasePoint<T>,
    ) -> Result<T> {
        self.check_on_fiber(fiber, p, T::lit(FIBER_TOL))?;
        let (df, dg) = (self.differential(f, p)?, self.differential(g, p)?);
        Ok(self.dirac_from_differentials(fiber, &df, &dg, &p.z))
    }

    pub fn dirac_from_differentials(
        &self,
        fiber: &Fiber<T>,
        df: &Differential<T>,
        dg: &Differential<T>,
        z: &AlgebraElement<T>,
    ) -> T {
        let l = self.level();
        let tower = self.tower();
        let uf = tower.projector(&fiber.h_minus, &l.sigma_inv(&df.fiber), Half::Plus);
        let ug = tower.projector(&fiber.h_minus, &l.sigma_inv(&dg.fiber), Half::Plus);
        df.group.pair(&ug) - dg.group.pair(&uf) - l.sigma(z).pair(&l.br(&uf, &ug))
    }

    /// Dirac bracket of the linear observables `⟨a, Z⟩` and `⟨b, Z⟩`, which is
    /// again linear: `⟨−σ[𝔸₊σ⁻¹a, 𝔸₊σ⁻¹b], Z⟩`.
    pub fn dirac_linear_bracket(
        &self,
        fiber: &Fiber<T>,
        a: &CoalgebraElement<T>,
        b: &CoalgebraElement<T>,
    ) -> CoalgebraElement<T> {
        let l = self.level();
        let tower = self.tower();
        let ua = tower.projector(&fiber.h_minus, &l.sigma_inv(a), Half::Plus);
        let ub = tower.projector(&fiber.h_minus, &l.sigma_inv(b), Half::Plus);
        CoalgebraElement(l.sigma(&l.br(&ua, &ub)).scale(-T::one()).0)
    }

    /// Hamiltonian field of the canonical bracket:
    /// `(σ⁻¹δH, σ⁻¹(ad*_{σ⁻¹δH} σZ − dH))`.
    pub fn canonical_vector_field(&self, h: &Observable<'_, T>, p: &PhasePoint<T>) -> Result<Tangent<T>> {
        self.check_point(p)?;
        let d = self.differential(h, p)?;
        let l = self.level();
        let u = l.sigma_inv(&d.fiber);
        let co = &l.algebra.ad_star(&u, &l.sigma(&p.z))? - &d.group;
        Ok(Tangent { body: u, fiber: l.sigma_inv(&co) })
    }

    /// Hamiltonian field of the Dirac bracket:
    /// body `𝔸₊σ⁻¹δH`, rate `σ⁻¹γ(𝔸₋([γ⁻¹σZ, 𝔸₊σ⁻¹δH] − γ⁻¹dH))`.
    pub fn hamiltonian_vector_field(
        &self,
        fiber: &Fiber<T>,
        h: &Observable<'_, T>,
        p: &PhasePoint<T>,
    ) -> Result<Tangent<T>> {
        self.check_on_fiber(fiber, p, T::lit(FIBER_TOL))?;
        let d = self.differential(h, p)?;
        Ok(self.dirac_field_from_differential(fiber, &d, &p.z))
    }

    pub fn dirac_field_from_differential(
        &self,
        fiber: &Fiber<T>,
        d: &Differential<T>,
        z: &AlgebraElement<T>,
    ) -> Tangent<T> {
        let l = self.level();
        let tower = self.tower();
        let body = tower.projector(&fiber.h_minus, &l.sigma_inv(&d.fiber), Half::Plus);
        let inner = &l.br(&self.gamma_sigma(z), &body) - &l.gamma_inv(&d.group);
        let rate = self.sigma_gamma(&tower.projector(&fiber.h_minus, &inner, Half::Minus));
        Tangent { body, fiber: rate }
    }

    /// Fast path for observables depending on `Z` only:
    /// body `𝔸₊σ⁻¹δH`, rate `σ⁻¹γ(𝔸₋[γ⁻¹σZ, 𝔸₊σ⁻¹δH])`.
    pub fn left_invariant_vector_field(
        &self,
        fiber: &Fiber<T>,
        delta: &CoalgebraElement<T>,
        z: &AlgebraElement<T>,
    ) -> Tangent<T> {
        let l = self.level();
        let tower = self.tower();
        let body = tower.projector(&fiber.h_minus, &l.sigma_inv(delta), Half::Plus);
        let rate = self.sigma_gamma(&tower.projector(&fiber.h_minus, &l.br(&self.gamma_sigma(z), &body), Half::Minus));
        Tangent { body, fiber: rate }
    }
}

/// Dirac bracket of two left-invariant observables on the SL(2,C) fiber
/// over `(h₋, 0)`: `−16 (δF × δG)·(z − ℬ(z))`, with `δF, δG` the su(2)*
/// components and `z` the su(2) part of `Z`.
pub fn dirac_bracket_sl2c<T: Real>(h_minus: &Mat2<T>, z: &[T; 3], df: &[T; 3], dg: &[T; 3]) -> T {
    let (a, b, c) = sl2c::borel_params(h_minus);
    let field = crate::brackets::magnetic_field(a, b, c, z);
    let cross = cross(df, dg);
    let shifted = [z[0] - field[0], z[1] - field[1], z[2] - field[2]];
    T::lit(-16.0) * (cross[0] * shifted[0] + cross[1] * shifted[1] + cross[2] * shifted[2])
}

pub(crate) fn cross<T: Real>(x: &[T; 3], y: &[T; 3]) -> [T; 3] {
    [x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]]
}

/// Checks `h₋` for the SL(2,C) fast path.
pub fn check_borel<T: Real>(h_minus: &Mat2<T>) -> Result<()> {
    let d = h_minus.borel_defect();
    if d > T::lit(MEMBERSHIP_TOL) {
        return Err(crate::Error::NotInSubalgebra { side: "minus", norm: d.as_f64() });
    }
    Ok(())
}
