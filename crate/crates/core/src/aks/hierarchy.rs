use crate::aks::solve::{solve_by_factorization, AksInitialData, AksSample};
use crate::algebra::AlgebraElement;
use crate::dynamics::{CollectiveSystem, NestedState, PhaseState, QuadraticKm};
use crate::error::{Error, Result};
use crate::phase::{Fiber, PhaseSpace};
use crate::scalar::Real;

/// Deepest configuration level accepted by [`tower_solve`].
pub const MAX_TOWER_DEPTH: usize = 3;

/// Lower-level variables rebuilt from the factors of one sample.
#[derive(Clone, Debug, PartialEq)]
pub struct NestedSample<T> {
    pub t: T,
    pub state: NestedState<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TowerSample<T> {
    pub solution: AksSample<T>,
    pub nested: Option<NestedSample<T>>,
}

/// Solves the quadratic collective flow on the depth-`d` fiber by
/// factorization and, for `d ≥ 1`, rebuilds `(h₀⁺, Z₀⁺, Γ̃, M)` from the
/// factors: `Γ̃ = Ad_{g₀⁻}Γ′∘`, `M = [Ad_{g₀⁻}W − R, Ad_{g₀⁻}Γ′∘] + Ad_{g₀⁻}Γ″∘`
/// where `g₋ = (g₀⁻, W)` and `Γ∘ = (Γ′∘, Γ″∘)`.
pub fn tower_solve<T: Real>(
    space: &PhaseSpace<T>,
    fiber: &Fiber<T>,
    initial: &PhaseState<T>,
    times: &[T],
) -> Result<Vec<TowerSample<T>>> {
    let depth = space.depth();
    if depth > MAX_TOWER_DEPTH {
        return Err(Error::InvalidInput(format!(
            "tower depth {depth} is above the supported maximum {MAX_TOWER_DEPTH}"
        )));
    }
    let ham = QuadraticKm::new(space.level());
    let sys = CollectiveSystem::new(space, fiber, &ham);
    let data = AksInitialData::from_state(&sys, initial)?;
    let samples = solve_by_factorization(&sys, &data, times)?;
    if depth == 0 {
        return Ok(samples.into_iter().map(|solution| TowerSample { solution, nested: None }).collect());
    }
    let tower = space.tower();
    let lower = tower.level(depth - 1);
    let r = sys.shift()?;
    let (g1, g2) = data.gamma0.halves();
    samples
        .into_iter()
        .map(|solution| {
            let (g0, w) = solution.g_minus.as_pair()?;
            let (h0, z0) = solution.state.h_plus.as_pair()?;
            let moved = tower.adjoint(g0, &g1);
            let shift: AlgebraElement<T> = &tower.adjoint(g0, w) - &r;
            let m = &lower.br(&shift, &moved) + &tower.adjoint(g0, &g2);
            let state = NestedState { h_plus: h0.clone(), z_plus: z0.clone(), gamma: moved, m };
            Ok(TowerSample { nested: Some(NestedSample { t: solution.t, state }), solution })
        })
        .collect()
}
