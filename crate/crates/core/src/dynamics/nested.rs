//! Equations one level down: for depth `d ≥ 1` the state on the level-`d`
//! fiber is rewritten in terms of level-`(d−1)` quantities
//! `(h₀⁺, Z₀⁺, Γ̃, M)` with `Γ = (Γ̃, [R, Γ̃] + M)` and `R = Ad_{h₀⁻}Z₀⁻`.

use crate::algebra::{AlgebraElement, Half};
use crate::dynamics::rhs::CollectiveSystem;
use crate::dynamics::state::PhaseState;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct NestedState<T> {
    pub h_plus: GroupElement<T>,
    pub z_plus: AlgebraElement<T>,
    pub gamma: AlgebraElement<T>,
    pub m: AlgebraElement<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NestedRate<T> {
    pub h_plus_body: AlgebraElement<T>,
    pub z_plus: AlgebraElement<T>,
    pub gamma: AlgebraElement<T>,
    pub m: AlgebraElement<T>,
}

impl<'a, T: Real> CollectiveSystem<'a, T> {
    fn lower_fiber(&self) -> Result<(&GroupElement<T>, &AlgebraElement<T>)> {
        if self.space.depth() == 0 {
            return Err(Error::LevelMismatch { expected: 1, found: 0 });
        }
        self.fiber.h_minus.as_pair()
    }

    /// `R = Ad_{h₀⁻}Z₀⁻` where `h₋ = (h₀⁻, Z₀⁻)`.
    pub fn shift(&self) -> Result<AlgebraElement<T>> {
        let (h0, z0) = self.lower_fiber()?;
        Ok(self.space.tower().adjoint(h0, z0))
    }

    pub fn to_nested(&self, s: &PhaseState<T>) -> Result<NestedState<T>> {
        let r = self.shift()?;
        let lower = self.space.tower().level(self.space.depth() - 1);
        let (h, zp) = s.h_plus.as_pair()?;
        let og = self.to_omega_gamma(s);
        let (g0, g1) = og.gamma.halves();
        let m = &g1 - &lower.br(&r, &g0);
        Ok(NestedState { h_plus: h.clone(), z_plus: zp.clone(), gamma: g0, m })
    }

    /// Inverse of [`to_nested`](Self::to_nested), with `g₋ = e`.
    pub fn from_nested(&self, t: T, n: &NestedState<T>) -> Result<PhaseState<T>> {
        let r = self.shift()?;
        let lower = self.space.tower().level(self.space.depth() - 1);
        let gamma = AlgebraElement::concat(&n.gamma, &(&lower.br(&r, &n.gamma) + &n.m));
        let og = crate::dynamics::state::OmegaGamma {
            t,
            h_plus: GroupElement::pair(n.h_plus.clone(), n.z_plus.clone()),
            omega: self.omega_of(&gamma),
            gamma,
        };
        Ok(self.from_omega_gamma(&og))
    }

    /// Right-hand side of the nested equations.
    pub fn nested_rhs(&self, n: &NestedState<T>) -> Result<NestedRate<T>> {
        let r = self.shift()?;
        self.nested_rhs_with_shift(n, &r)
    }

    /// Nested equations with `R = 0`, valid when `Z₀⁻ = 0`.
    pub fn nested_rhs_unshifted(&self, n: &NestedState<T>) -> Result<NestedRate<T>> {
        self.lower_fiber()?;
        let dim = self.space.tower().level(self.space.depth() - 1).dim();
        self.nested_rhs_with_shift(n, &AlgebraElement::zeros(dim))
    }

    fn nested_rhs_with_shift(&self, n: &NestedState<T>, r: &AlgebraElement<T>) -> Result<NestedRate<T>> {
        let lower = self.space.tower().level(self.space.depth() - 1);
        let p = |x: &AlgebraElement<T>| lower.project(x, Half::Plus);
        let q = |x: &AlgebraElement<T>| lower.project(x, Half::Minus);
        let full = AlgebraElement::concat(&n.gamma, &(&lower.br(r, &n.gamma) + &n.m));
        let (om0, om1) = self.omega_of(&full).halves();
        let n_slot = &om1 - &lower.br(r, &om0);
        let om0_plus = p(&om0);
        let r_om = lower.br(r, &om0);
        let gamma_rate = q(&lower.br(&n.gamma, &om0_plus));
        let m_rate = &(&(&(&q(&lower.br(&n.gamma, &p(&n_slot))) + &q(&lower.br(&n.m, &om0_plus)))
            + &lower.br(&gamma_rate, r))
            + &q(&lower.br(&n.gamma, &p(&r_om))))
            + &q(&lower.br(&lower.br(r, &n.gamma), &om0_plus));
        Ok(NestedRate {
            z_plus: &(-lower.br(&om0_plus, &n.z_plus)) + &p(&(&r_om + &n_slot)),
            h_plus_body: om0_plus,
            gamma: gamma_rate,
            m: m_rate,
        })
    }
}
