use crate::algebra::{AlgebraElement, CoalgebraElement, Half};
use crate::error::Result;
use crate::group::GroupElement;
use crate::phase::{PhaseSpace, MEMBERSHIP_TOL};
use crate::scalar::Real;

impl<T: Real> PhaseSpace<T> {
    fn covector_to_minus(&self, xi: &CoalgebraElement<T>) -> Result<AlgebraElement<T>> {
        xi.check_dim(self.dim())?;
        let x = self.level().gamma_inv(xi);
        self.level().splitting.check_in(&x, Half::Minus, T::lit(MEMBERSHIP_TOL))?;
        Ok(x)
    }

    /// Right-trivialized Poisson-Lie bivector of `H₊` at `g`:
    /// `π(g)(γX, γY) = k(Π₋Ad_{g⁻¹}X, Π₊Ad_{g⁻¹}Y)` for `X, Y ∈ 𝔥₋`.
    pub fn pl_bivector(&self, g: &GroupElement<T>, xi: &CoalgebraElement<T>, eta: &CoalgebraElement<T>) -> Result<T> {
        g.check_depth(self.depth())?;
        self.tower().check_subgroup(g, Half::Plus, T::lit(MEMBERSHIP_TOL))?;
        let (x, y) = (self.covector_to_minus(xi)?, self.covector_to_minus(eta)?);
        let l = self.level();
        let tower = self.tower();
        let ax = l.project(&tower.adjoint_inv(g, &x), Half::Minus);
        let ay = l.project(&tower.adjoint_inv(g, &y), Half::Plus);
        Ok(l.pair(&ax, &ay))
    }

    /// Same bivector at `g = (h, Z)` assembled from the level below through
    /// dressing vectors `d(A) = Ad_h Π₊ Ad_{h⁻¹} A`:
    /// `κ[k(X,d(W)) + k(V,d(Y)) + k(Y,[d(X),Ad_hZ]) − k(X,[d(Y),Ad_hZ]) + k([X,Y],Ad_hZ)]`.
    pub fn pl_bivector_block(
        &self,
        g: &GroupElement<T>,
        xi: &CoalgebraElement<T>,
        eta: &CoalgebraElement<T>,
    ) -> Result<T> {
        g.check_depth(self.depth())?;
        self.tower().check_subgroup(g, Half::Plus, T::lit(MEMBERSHIP_TOL))?;
        let (h, z) = g.as_pair()?;
        let (x, v) = self.covector_to_minus(xi)?.halves();
        let (y, w) = self.covector_to_minus(eta)?.halves();
        let tower = self.tower();
        let lower = tower.level(self.depth() - 1);
        let dress = |a: &AlgebraElement<T>| tower.adjoint(h, &lower.project(&tower.adjoint_inv(h, a), Half::Plus));
        let az = tower.adjoint(h, z);
        let (dx, dy, dw) = (dress(&x), dress(&y), dress(&w));
        let sum = lower.pair(&x, &dw) + lower.pair(&v, &dy) + lower.pair(&y, &lower.br(&dx, &az))
            - lower.pair(&x, &lower.br(&dy, &az))
            + lower.pair(&lower.br(&x, &y), &az);
        Ok(tower.fiber_scale() * sum)
    }
}
