use crate::algebra::AlgebraElement;
use crate::dynamics::{CollectiveSystem, ComplexKilling, PhaseState};
use crate::error::Result;
use crate::group::GroupElement;
use crate::phase::{Fiber, PhaseSpace};
use crate::sampling::Sampler;
use crate::scalar::Real;
use crate::sl2c;

/// Collective flow of `−(1/16)Re κ` on `SL(2,C) ⋉ sl(2,C)` over the base
/// `(e, 0)`, started at `h₊ = e`, `Z = (X₀⁺, Y₀⁺)`.
#[derive(Clone, Debug)]
pub struct Sl2cScenario<T: Real> {
    pub space: PhaseSpace<T>,
    pub fiber: Fiber<T>,
    pub ham: ComplexKilling<T>,
    pub initial: PhaseState<T>,
    pub x0: AlgebraElement<T>,
    pub y0: AlgebraElement<T>,
}

impl<T: Real> Sl2cScenario<T> {
    pub fn new(x0: [T; 3], y0: [T; 3]) -> Result<Self> {
        let space = PhaseSpace::sl2c(1);
        let fiber = space.fiber(space.identity(), AlgebraElement::zeros(space.dim()))?;
        let ham = ComplexKilling::new(space.level())?;
        let (x0, y0) = (sl2c::from_su2(x0), sl2c::from_su2(y0));
        let z = AlgebraElement::concat(&x0, &y0);
        let initial = PhaseState::new(GroupElement::identity(1), z);
        Ok(Self { space, fiber, ham, initial, x0, y0 })
    }

    /// Unit `X₀⁺` and `Y₀⁺` with coefficients in `[−1, 1]`.
    pub fn random(sampler: &mut Sampler) -> Result<Self> {
        let x = sampler.unit3();
        let y = std::array::from_fn(|_| sampler.uniform(-1.0, 1.0));
        Self::new(x, y)
    }

    pub fn system(&self) -> CollectiveSystem<'_, T> {
        CollectiveSystem::new(&self.space, &self.fiber, &self.ham)
    }
}
