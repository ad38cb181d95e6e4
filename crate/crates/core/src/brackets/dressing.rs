use crate::algebra::{AlgebraElement, Half};
use crate::error::Result;
use crate::group::GroupElement;
use crate::phase::{PhaseSpace, Tangent, MEMBERSHIP_TOL};
use crate::scalar::Real;
use crate::tower::{flat_len, Tower};

impl<T: Real> PhaseSpace<T> {
    /// Infinitesimal left dressing of `H₋` on `H₊` at `g = (h, Z) ∈ H₊`
    /// by `(Y, W) ∈ 𝔥₋`: body `Π₊Ad_{h⁻¹}Y`, rate
    /// `Π₊(Ad_{h⁻¹}W + [Π₋Ad_{h⁻¹}Y, Z])`.
    pub fn dressing_vector(&self, g: &GroupElement<T>, xi: &AlgebraElement<T>) -> Result<Tangent<T>> {
        self.check_dressing_args(g, xi, Half::Plus)?;
        Ok(self.dressing_vector_unchecked(g, xi))
    }

    pub(crate) fn dressing_vector_unchecked(&self, g: &GroupElement<T>, xi: &AlgebraElement<T>) -> Tangent<T> {
        let (h, z) = g.as_pair().expect("depth checked");
        let tower = self.tower();
        let lower = tower.level(h.depth());
        let (y, w) = xi.halves();
        let moved = tower.adjoint_inv(h, &y);
        let body = lower.project(&moved, Half::Plus);
        let inner = &tower.adjoint_inv(h, &w) + &lower.br(&lower.project(&moved, Half::Minus), z);
        Tangent { body, fiber: lower.project(&inner, Half::Plus) }
    }

    /// Infinitesimal right dressing of `H₊` on `H₋` at `g = (h₋, Z₋)` by
    /// `(X, Y) ∈ 𝔥₊`: body `𝔸₋(h₋)X`, rate `𝔸₋(h₋)(Y − [X, Z₋])`.
    pub fn reciprocal_dressing_vector(&self, g: &GroupElement<T>, xi: &AlgebraElement<T>) -> Result<Tangent<T>> {
        self.check_dressing_args(g, xi, Half::Minus)?;
        Ok(self.reciprocal_dressing_vector_unchecked(g, xi))
    }

    pub(crate) fn reciprocal_dressing_vector_unchecked(
        &self,
        g: &GroupElement<T>,
        xi: &AlgebraElement<T>,
    ) -> Tangent<T> {
        let (h, z) = g.as_pair().expect("depth checked");
        let tower = self.tower();
        let lower = tower.level(h.depth());
        let (x, y) = xi.halves();
        let body = tower.projector(h, &x, Half::Minus);
        let fiber = tower.projector(h, &(&y - &lower.br(&x, z)), Half::Minus);
        Tangent { body, fiber }
    }

    fn check_dressing_args(&self, g: &GroupElement<T>, xi: &AlgebraElement<T>, side: Half) -> Result<()> {
        g.check_depth(self.depth())?;
        g.as_pair()?;
        xi.check_dim(self.dim())?;
        let tol = T::lit(MEMBERSHIP_TOL);
        self.tower().check_subgroup(g, side, tol)?;
        self.level().splitting.check_in(xi, side.opposite(), tol)
    }

    /// Left dressing vector from the factorization of `Exp(tξ)•g`,
    /// differentiated by central differences.
    pub fn dressing_vector_by_factorization(
        &self,
        g: &GroupElement<T>,
        xi: &AlgebraElement<T>,
        step: T,
    ) -> Result<Tangent<T>> {
        self.check_dressing_args(g, xi, Half::Plus)?;
        let tower = self.tower();
        let curve = |t: T| -> Result<Vec<T>> {
            let moved = tower.mul(&tower.exp(&xi.scale(t))?, g);
            Ok(tower.factorize(&moved)?.0.flatten())
        };
        let rate = central(curve(step)?, curve(-step)?, step);
        Ok(pair_tangent(tower, g, &rate))
    }

    /// Right dressing vector from the factorization of `g•Exp(tξ)`.
    pub fn reciprocal_by_factorization(
        &self,
        g: &GroupElement<T>,
        xi: &AlgebraElement<T>,
        step: T,
    ) -> Result<Tangent<T>> {
        self.check_dressing_args(g, xi, Half::Minus)?;
        let tower = self.tower();
        let curve = |t: T| -> Result<Vec<T>> {
            let moved = tower.mul(g, &tower.exp(&xi.scale(t))?);
            Ok(tower.factorize(&moved)?.1.flatten())
        };
        let rate = central(curve(step)?, curve(-step)?, step);
        Ok(pair_tangent(tower, g, &rate))
    }
}

fn central<T: Real>(up: Vec<T>, down: Vec<T>, step: T) -> Vec<T> {
    up.iter().zip(&down).map(|(&a, &b)| (a - b) / (step + step)).collect()
}

/// Splits a flat derivative of `(h, Z)` into `(h⁻¹ḣ, Ż)`.
pub fn pair_tangent<T: Real>(tower: &Tower<T>, g: &GroupElement<T>, rate: &[T]) -> Tangent<T> {
    let (h, _) = g.as_pair().expect("semidirect element");
    let split = flat_len(h.depth());
    Tangent { body: tower.body_velocity(h, &rate[..split]), fiber: AlgebraElement(rate[split..].to_vec()) }
}

/// Flat coordinate form of a `(h⁻¹ḣ, Ż)` tangent at `g = (h, Z)`.
pub fn tangent_flat<T: Real>(tower: &Tower<T>, g: &GroupElement<T>, v: &Tangent<T>) -> Vec<T> {
    let (h, _) = g.as_pair().expect("semidirect element");
    let mut out = tower.coord_velocity(h, &v.body);
    out.extend_from_slice(&v.fiber.0);
    out
}

/// Lie bracket `[V, W] = DW·V − DV·W` of two vector fields given in flat
/// coordinates, by central differences in the ambient space.
pub fn field_bracket<T: Real>(
    depth: usize,
    g: &GroupElement<T>,
    v: &dyn Fn(&GroupElement<T>) -> Vec<T>,
    w: &dyn Fn(&GroupElement<T>) -> Vec<T>,
    step: T,
) -> Result<Vec<T>> {
    let base = g.flatten();
    let shift = |dir: &[T], s: T| -> Result<GroupElement<T>> {
        let moved: Vec<T> = base.iter().zip(dir).map(|(&x, &d)| x + s * d).collect();
        GroupElement::unflatten(depth, &moved)
    };
    let (vg, wg) = (v(g), w(g));
    let dw_v = central(w(&shift(&vg, step)?), w(&shift(&vg, -step)?), step);
    let dv_w = central(v(&shift(&wg, step)?), v(&shift(&wg, -step)?), step);
    debug_assert_eq!(dw_v.len(), flat_len(depth));
    Ok(dw_v.iter().zip(&dv_w).map(|(&a, &b)| a - b).collect())
}
