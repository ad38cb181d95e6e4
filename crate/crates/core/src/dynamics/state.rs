use crate::algebra::AlgebraElement;
use crate::group::GroupElement;
use crate::phase::{Fiber, PhasePoint, PhaseSpace};
use crate::scalar::Real;

/// Point on a Dirac fiber in `(h₊, Z)` coordinates, with the auxiliary
/// curve `g₋` of the factorization `k = h₊ g₋`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseState<T> {
    pub t: T,
    pub h_plus: GroupElement<T>,
    pub z: AlgebraElement<T>,
    pub g_minus: GroupElement<T>,
}

impl<T: Real> PhaseState<T> {
    /// State at `t = 0` with `g₋ = e`.
    pub fn new(h_plus: GroupElement<T>, z: AlgebraElement<T>) -> Self {
        let depth = h_plus.depth();
        Self { t: T::zero(), h_plus, z, g_minus: GroupElement::identity(depth) }
    }

    pub fn point(&self, space: &PhaseSpace<T>, fiber: &Fiber<T>) -> PhasePoint<T> {
        PhasePoint { h: space.tower().mul(&self.h_plus, &fiber.h_minus), z: self.z.clone() }
    }
}

/// The same state in `(Ω, Γ)` coordinates:
/// `Ω = Ad_{h₋}ℒ(σZ)`, `Γ = Ad_{h₋}γ⁻¹σZ`.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaGamma<T> {
    pub t: T,
    pub h_plus: GroupElement<T>,
    pub omega: AlgebraElement<T>,
    pub gamma: AlgebraElement<T>,
}

/// Time derivative of a [`PhaseState`].
#[derive(Clone, Debug, PartialEq)]
pub struct StateRate<T> {
    pub h_plus_body: AlgebraElement<T>,
    pub z: AlgebraElement<T>,
    pub g_minus_body: AlgebraElement<T>,
}

/// Which of the three equivalent forms of the `Γ` equation to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaForm {
    /// `Γ̇ = Π₋[Γ, Ω₊]`.
    Projected,
    /// `Γ̇ = −Π₋[Γ, Ω₋]`.
    ProjectedMinus,
    /// `Γ̇ = −[Γ, Ω₋]`.
    Lax,
}
