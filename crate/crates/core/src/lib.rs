//! Poisson and Dirac structures on iterated semidirect products
//! `H_{m+1} = H_m ⋉ 𝔥_m` built over `SL(2,C)`, collective dynamics on the
//! Dirac fibers, and their solution by group factorization.
//!
//! The numerical core is generic over [`Real`]; the aliases below fix `f64`.

pub mod aks;
pub mod algebra;
pub mod brackets;
pub mod dynamics;
mod error;
pub mod group;
pub mod linalg;
pub mod phase;
pub mod sampling;
pub mod scalar;
pub mod sl2c;
pub mod tower;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Algebra = algebra::LieAlgebra<f64>;
pub type Element = algebra::AlgebraElement<f64>;
pub type CoElement = algebra::CoalgebraElement<f64>;
pub type Form = algebra::BilinearForm<f64>;
pub type Group = group::GroupElement<f64>;
pub type Matrix2 = group::Mat2<f64>;
pub type Hierarchy = tower::Tower<f64>;
pub type Space = phase::PhaseSpace<f64>;
