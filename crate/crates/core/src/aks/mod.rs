//! Exact solutions by factorization of `Exp(tΘ∘)`.

mod closed_form;
mod cross;
mod hierarchy;
mod scenario;
mod solve;

pub use closed_form::{generator, sl2c_closed_form, summed_series, ClosedForm, UNIT_TOL};
pub use cross::{ad_power, ad_power_closed, iterated_cross, iterated_cross_closed};
pub use hierarchy::{tower_solve, NestedSample, TowerSample, MAX_TOWER_DEPTH};
pub use scenario::Sl2cScenario;
pub use solve::{solve_at, solve_by_factorization, theta_map, velocity_residual, AksInitialData, AksSample};
