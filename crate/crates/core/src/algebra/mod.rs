//! Finite-dimensional Lie algebras, invariant forms, splittings and the
//! semidirect doubling used to climb the hierarchy.

mod character;
mod descriptor;
mod element;
mod form;
pub mod io;
mod semidirect;
mod splitting;

pub use character::character_space;
pub use descriptor::{JacobiViolation, LieAlgebra};
pub use element::{AlgebraElement, CoalgebraElement};
pub use form::BilinearForm;
pub use semidirect::{semidirect_sum, SemidirectSum};
pub use splitting::{dressing_component, Half, Splitting};
