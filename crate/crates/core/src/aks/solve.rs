use crate::algebra::{AlgebraElement, Half};
use crate::dynamics::{CollectiveSystem, PhaseState};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::phase::Fiber;
use crate::scalar::Real;

/// Initial data of the factorization solution: the conserved generator
/// `Θ∘` and the momentum `Γ∘`, both at `t = 0` with `g₋(0) = e`.
#[derive(Clone, Debug, PartialEq)]
pub struct AksInitialData<T> {
    pub fiber: Fiber<T>,
    pub h_plus0: GroupElement<T>,
    pub gamma0: AlgebraElement<T>,
    pub theta0: AlgebraElement<T>,
}

/// One sample of the factorization solution.
#[derive(Clone, Debug, PartialEq)]
pub struct AksSample<T> {
    pub t: T,
    /// `k(t) = Exp(tΘ∘) = h₊ᶠ(t) g₋(t)`.
    pub k: GroupElement<T>,
    pub h_plus_factor: GroupElement<T>,
    pub g_minus: GroupElement<T>,
    pub gamma: AlgebraElement<T>,
    pub omega: AlgebraElement<T>,
    /// State on the fiber, `h₊ = h₊(0)·h₊ᶠ(t)`.
    pub state: PhaseState<T>,
}

/// `ℒ(γ(Ad_{g₋⁻¹}Γ))` where `k = h₊g₋`.
pub fn theta_map<T: Real>(
    sys: &CollectiveSystem<'_, T>,
    k: &GroupElement<T>,
    gamma: &AlgebraElement<T>,
) -> Result<AlgebraElement<T>> {
    let tower = sys.space.tower();
    let (_, g) = tower.factorize(k).map_err(|e| Error::FactorizationFailure(err_norm(&e)))?;
    Ok(sys.omega_of(&tower.adjoint_inv(&g, gamma)))
}

fn err_norm(e: &Error) -> f64 {
    match e {
        Error::IllConditioned(c) => *c,
        Error::NotUnimodular(d) => *d,
        _ => f64::NAN,
    }
}

impl<T: Real> AksInitialData<T> {
    /// Data for the solution through `(h₊, Z)`; the auxiliary `g₋` of the
    /// state is ignored and taken as `e`.
    pub fn from_state(sys: &CollectiveSystem<'_, T>, s: &PhaseState<T>) -> Result<Self> {
        sys.validate_state(s)?;
        let og = sys.to_omega_gamma(s);
        Ok(Self { fiber: sys.fiber.clone(), h_plus0: s.h_plus.clone(), gamma0: og.gamma, theta0: og.omega })
    }

    /// `‖Θ∘ − ℒ(γΓ∘)‖∞`.
    pub fn consistency_defect(&self, sys: &CollectiveSystem<'_, T>) -> T {
        self.theta0.max_diff(&sys.omega_of(&self.gamma0))
    }
}

/// Sample of the solution at time `t`.
pub fn solve_at<T: Real>(sys: &CollectiveSystem<'_, T>, data: &AksInitialData<T>, t: T) -> Result<AksSample<T>> {
    let tower = sys.space.tower();
    let k = tower.exp(&data.theta0.scale(t))?;
    let (hf, g) = tower
        .factorize(&k)
        .map_err(|e| Error::NumericalBreakdown { t: t.as_f64(), reason: format!("factorization failed: {e}") })?;
    let gamma = tower.adjoint(&g, &data.gamma0);
    let omega = sys.omega_of(&gamma);
    let z = sys.space.sigma_gamma(&tower.adjoint_inv(&data.fiber.h_minus, &gamma));
    let state = PhaseState { t, h_plus: tower.mul(&data.h_plus0, &hf), z, g_minus: g.clone() };
    Ok(AksSample { t, k, h_plus_factor: hf, g_minus: g, gamma, omega, state })
}

/// Factorization solution sampled at `times`.
pub fn solve_by_factorization<T: Real>(
    sys: &CollectiveSystem<'_, T>,
    data: &AksInitialData<T>,
    times: &[T],
) -> Result<Vec<AksSample<T>>> {
    times.iter().map(|&t| solve_at(sys, data, t)).collect()
}

/// Largest of `‖h₊⁻¹ḣ₊ − Ω₊‖` and `‖ġ₋g₋⁻¹ − Ω₋‖` at `t`, with the
/// derivatives taken by central differences of spacing `step`.
pub fn velocity_residual<T: Real>(sys: &CollectiveSystem<'_, T>, data: &AksInitialData<T>, t: T, step: T) -> Result<T> {
    let tower = sys.space.tower();
    let l = sys.space.level();
    let mid = solve_at(sys, data, t)?;
    let up = solve_at(sys, data, t + step)?;
    let down = solve_at(sys, data, t - step)?;
    let rate = |a: &GroupElement<T>, b: &GroupElement<T>| -> Vec<T> {
        a.flatten().iter().zip(b.flatten()).map(|(&u, v)| (u - v) / (step + step)).collect()
    };
    let hp = tower.body_velocity(&mid.state.h_plus, &rate(&up.state.h_plus, &down.state.h_plus));
    let gm_body = tower.body_velocity(&mid.g_minus, &rate(&up.g_minus, &down.g_minus));
    let gm = tower.adjoint(&mid.g_minus, &gm_body);
    let plus = hp.max_diff(&l.project(&mid.omega, Half::Plus));
    let minus = gm.max_diff(&l.project(&mid.omega, Half::Minus));
    Ok(plus.max(minus))
}
