//! Canonical and Dirac brackets, hamiltonian vector fields, the
//! Poisson-Lie structure of `H₊`, dressing actions and momentum maps.

mod dressing;
mod magnetic;
mod momentum;
mod observable;
mod poisson;
mod poisson_lie;
mod symplectic;

pub use dressing::{field_bracket, pair_tangent, tangent_flat};
pub use magnetic::{magnetic_field, monopole_density, monopole_density_trace};
pub use observable::{Differential, Observable, DIFFERENTIAL_TOL, FD_STEP};
pub(crate) use poisson::cross;
pub use poisson::{check_borel, dirac_bracket_sl2c, FIBER_TOL};
