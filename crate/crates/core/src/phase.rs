//! Phase space `H_d × 𝔥_d` of the configuration group `H_d`, with the
//! Dirac fibers `{(h₊h₋, Z₊ + Z₋)}` over a fixed base `(h₋, Z₋)`.

use std::sync::Arc;

use crate::algebra::{AlgebraElement, CoalgebraElement, Half};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::scalar::Real;
use crate::tower::{Level, Tower};

/// Tolerance used when validating membership in subgroups and subalgebras.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// A point `(h, Z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhasePoint<T> {
    pub h: GroupElement<T>,
    pub z: AlgebraElement<T>,
}

/// Tangent vector at `(h, Z)` as body velocity `h⁻¹ḣ` and fiber rate `Ż`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tangent<T> {
    pub body: AlgebraElement<T>,
    pub fiber: AlgebraElement<T>,
}

impl<T: Real> Tangent<T> {
    pub fn max_diff(&self, other: &Self) -> T {
        self.body.max_diff(&other.body).max(self.fiber.max_diff(&other.fiber))
    }

    pub fn norm_inf(&self) -> T {
        self.body.norm_inf().max(self.fiber.norm_inf())
    }
}

/// Fixed base data `(h₋, Z₋)` of a Dirac fiber.
#[derive(Clone, Debug, PartialEq)]
pub struct Fiber<T> {
    pub h_minus: GroupElement<T>,
    pub z_minus: AlgebraElement<T>,
}

/// Configuration group `H_d` and the algebra data of level `d`.
#[derive(Clone, Debug)]
pub struct PhaseSpace<T> {
    tower: Arc<Tower<T>>,
    depth: usize,
}

impl<T: Real> PhaseSpace<T> {
    pub fn new(tower: Arc<Tower<T>>, depth: usize) -> Result<Self> {
        tower.try_level(depth)?;
        Ok(Self { tower, depth })
    }

    /// SL(2,C) hierarchy truncated at `depth`.
    pub fn sl2c(depth: usize) -> Self {
        Self { tower: Arc::new(Tower::sl2c(depth)), depth }
    }

    pub fn tower(&self) -> &Tower<T> {
        &self.tower
    }

    pub fn shared_tower(&self) -> Arc<Tower<T>> {
        Arc::clone(&self.tower)
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn level(&self) -> &Level<T> {
        self.tower.level(self.depth)
    }

    pub fn dim(&self) -> usize {
        self.level().dim()
    }

    /// The space one level down, when `depth ≥ 1`.
    pub fn lower(&self) -> Result<Self> {
        if self.depth == 0 {
            return Err(Error::LevelMismatch { expected: 1, found: 0 });
        }
        Ok(Self { tower: Arc::clone(&self.tower), depth: self.depth - 1 })
    }

    /// The space one level up, if the tower is tall enough.
    pub fn upper(&self) -> Result<Self> {
        Self::new(Arc::clone(&self.tower), self.depth + 1)
    }

    pub fn check_point(&self, p: &PhasePoint<T>) -> Result<()> {
        p.h.check_depth(self.depth)?;
        p.z.check_dim(self.dim())
    }

    pub fn identity(&self) -> GroupElement<T> {
        GroupElement::identity(self.depth)
    }

    /// `γ⁻¹σZ`.
    pub fn gamma_sigma(&self, z: &AlgebraElement<T>) -> AlgebraElement<T> {
        let l = self.level();
        l.gamma_inv(&l.sigma(z))
    }

    /// `σ⁻¹γΓ`, inverse of [`gamma_sigma`](Self::gamma_sigma).
    pub fn sigma_gamma(&self, g: &AlgebraElement<T>) -> AlgebraElement<T> {
        let l = self.level();
        l.sigma_inv(&l.gamma(g))
    }

    /// Builds a validated fiber.
    pub fn fiber(&self, h_minus: GroupElement<T>, z_minus: AlgebraElement<T>) -> Result<Fiber<T>> {
        h_minus.check_depth(self.depth)?;
        z_minus.check_dim(self.dim())?;
        let tol = T::lit(MEMBERSHIP_TOL);
        self.tower.check_subgroup(&h_minus, Half::Minus, tol)?;
        self.level().splitting.check_in(&z_minus, Half::Minus, tol)?;
        Ok(Fiber { h_minus, z_minus })
    }

    /// Largest `|⟨σZ₋, [e_i, e_j]⟩|` over pairs of 𝔥₋ basis vectors; zero
    /// exactly when `σ(Z₋)` is a character of `𝔥₋`.
    pub fn character_defect(&self, z_minus: &AlgebraElement<T>) -> T {
        let l = self.level();
        let s = l.sigma(z_minus);
        let idx = l.splitting.indices(Half::Minus);
        let mut worst = T::zero();
        for &i in idx {
            for &j in idx {
                let b = l.br(&l.algebra.basis(i), &l.algebra.basis(j));
                worst = worst.max(s.pair(&b).abs());
            }
        }
        worst
    }

    /// `(h₊h₋, Z₊ + Z₋)`.
    pub fn point_on_fiber(
        &self,
        fiber: &Fiber<T>,
        h_plus: &GroupElement<T>,
        z_plus: &AlgebraElement<T>,
    ) -> Result<PhasePoint<T>> {
        h_plus.check_depth(self.depth)?;
        z_plus.check_dim(self.dim())?;
        let tol = T::lit(MEMBERSHIP_TOL);
        self.tower.check_subgroup(h_plus, Half::Plus, tol)?;
        self.level().splitting.check_in(z_plus, Half::Plus, tol)?;
        Ok(PhasePoint { h: self.tower.mul(h_plus, &fiber.h_minus), z: z_plus + &fiber.z_minus })
    }

    /// Splits a point into `(h₊, Z₊)` relative to its own factorization.
    pub fn decompose(&self, p: &PhasePoint<T>) -> Result<(GroupElement<T>, GroupElement<T>, AlgebraElement<T>)> {
        let (hp, hm) = self.tower.factorize(&p.h)?;
        Ok((hp, hm, self.level().project(&p.z, Half::Plus)))
    }

    /// Distance of `p` from the fiber over `(h₋, Z₋)`.
    pub fn fiber_distance(&self, fiber: &Fiber<T>, p: &PhasePoint<T>) -> Result<T> {
        self.check_point(p)?;
        let (_, hm) = self.tower.factorize(&p.h)?;
        let dz = self.level().project(&p.z, Half::Minus).max_diff(&fiber.z_minus);
        Ok(hm.max_abs_diff(&fiber.h_minus).max(dz))
    }

    pub fn check_on_fiber(&self, fiber: &Fiber<T>, p: &PhasePoint<T>, tol: T) -> Result<()> {
        let d = self.fiber_distance(fiber, p)?;
        if d > tol {
            Err(Error::OffFiber(d.as_f64()))
        } else {
            Ok(())
        }
    }

    /// Moves `p` along a tangent for time `s`: `(h·exp(s·body), Z + s·fiber)`.
    pub fn flow_step(&self, p: &PhasePoint<T>, v: &Tangent<T>, s: T) -> Result<PhasePoint<T>> {
        let step = self.tower.exp(&v.body.scale(s))?;
        Ok(PhasePoint { h: self.tower.mul(&p.h, &step), z: &p.z + &v.fiber.scale(s) })
    }

    pub fn zero_coalgebra(&self) -> CoalgebraElement<T> {
        CoalgebraElement::zeros(self.dim())
    }
}
