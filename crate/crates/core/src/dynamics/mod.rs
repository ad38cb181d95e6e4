//! Collective hamiltonian flows on Dirac fibers.

mod hamiltonian;
mod integrate;
mod invariants;
mod nested;
mod rhs;
mod state;

pub use hamiltonian::{legendre_residual, CollectiveHamiltonian, ComplexKilling, FnHamiltonian, QuadraticKm};
pub use integrate::{integrate_flat, rk4_step, sample_times, OdeSystem, MAX_GROUP_CONDITION};
pub use invariants::{InvariantDrift, InvariantSample};
pub use nested::{NestedRate, NestedState};
pub use rhs::CollectiveSystem;
pub use state::{GammaForm, OmegaGamma, PhaseState, StateRate};
