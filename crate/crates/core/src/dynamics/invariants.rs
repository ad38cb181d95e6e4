use crate::algebra::AlgebraElement;
use crate::dynamics::rhs::CollectiveSystem;
use crate::dynamics::state::PhaseState;
use crate::scalar::Real;

/// Conserved quantities along one sample of a trajectory.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSample<T> {
    pub t: T,
    pub energy: T,
    /// `k(Γ, Γ)`.
    pub casimir: T,
    /// `k(Γ, JΓ)`.
    pub casimir_j: T,
    /// `Θ = Ad_{g₋⁻¹}Ω`, constant along the flow.
    pub theta: AlgebraElement<T>,
    pub commutator: T,
    pub mixed_commutator: T,
}

/// Largest deviations from the first sample.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantDrift<T> {
    pub energy: T,
    pub casimir: T,
    pub casimir_j: T,
    pub theta: T,
    pub commutator: T,
    pub mixed_commutator: T,
}

impl<'a, T: Real> CollectiveSystem<'a, T> {
    /// `Θ = Ad_{g₋⁻¹}Ω` for a state.
    pub fn theta(&self, s: &PhaseState<T>) -> AlgebraElement<T> {
        let og = self.to_omega_gamma(s);
        self.space.tower().adjoint_inv(&s.g_minus, &og.omega)
    }

    pub fn invariants(&self, s: &PhaseState<T>) -> InvariantSample<T> {
        let l = self.space.level();
        let og = self.to_omega_gamma(s);
        let (commutator, mixed_commutator) = self.commutator_norms(&og.gamma);
        InvariantSample {
            t: s.t,
            energy: self.energy(&s.z),
            casimir: l.pair(&og.gamma, &og.gamma),
            casimir_j: l.pair(&og.gamma, &l.j(&og.gamma)),
            theta: self.space.tower().adjoint_inv(&s.g_minus, &og.omega),
            commutator,
            mixed_commutator,
        }
    }

    pub fn invariant_drift(&self, traj: &[PhaseState<T>]) -> Option<InvariantDrift<T>> {
        let samples: Vec<_> = traj.iter().map(|s| self.invariants(s)).collect();
        let first = samples.first()?;
        let mut d = InvariantDrift {
            energy: T::zero(),
            casimir: T::zero(),
            casimir_j: T::zero(),
            theta: T::zero(),
            commutator: T::zero(),
            mixed_commutator: T::zero(),
        };
        for s in &samples {
            d.energy = d.energy.max((s.energy - first.energy).abs());
            d.casimir = d.casimir.max((s.casimir - first.casimir).abs());
            d.casimir_j = d.casimir_j.max((s.casimir_j - first.casimir_j).abs());
            d.theta = d.theta.max(s.theta.max_diff(&first.theta));
            d.commutator = d.commutator.max(s.commutator);
            d.mixed_commutator = d.mixed_commutator.max(s.mixed_commutator);
        }
        Some(d)
    }
}
