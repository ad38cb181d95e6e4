//! The hierarchy `H₀ = SL(2,C)`, `H_{m+1} = H_m ⋉ 𝔥_m` with its algebras,
//! forms, splittings and fiber inner products, plus the recursive group
//! operations that act on [`GroupElement`]s.

use crate::algebra::{semidirect_sum, AlgebraElement, BilinearForm, CoalgebraElement, Half, LieAlgebra, Splitting};
use crate::error::{Error, Result};
use crate::group::{exp_matrix, iwasawa, reproject_borel, reproject_su2, GroupElement, Mat2, MAX_SERIES_TERMS};
use crate::linalg::Matrix;
use crate::scalar::Real;
use crate::sl2c;

/// Dimension of the algebra at level `m`.
pub fn algebra_dim(level: usize) -> usize {
    sl2c::DIM << level
}

/// Number of flat real coordinates of a group element at `depth`.
pub fn flat_len(depth: usize) -> usize {
    8 + (0..depth).map(algebra_dim).sum::<usize>()
}

/// Algebra data attached to one level of the hierarchy.
#[derive(Clone, Debug)]
pub struct Level<T> {
    pub algebra: LieAlgebra<T>,
    pub form: BilinearForm<T>,
    pub splitting: Splitting,
    /// Diagonal of the fiber inner product `σ`.
    pub sigma: Vec<T>,
    /// Multiplication by `i`, applied slot-wise above level 0.
    pub j: Matrix<T>,
}

impl<T: Real> Level<T> {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn br(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> AlgebraElement<T> {
        self.algebra.br(x, y)
    }

    pub fn project(&self, x: &AlgebraElement<T>, half: Half) -> AlgebraElement<T> {
        self.splitting.project(x, half)
    }

    pub fn pair(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> T {
        self.form.pair(x, y)
    }

    pub fn gamma(&self, x: &AlgebraElement<T>) -> CoalgebraElement<T> {
        self.form.gamma(x)
    }

    pub fn gamma_inv(&self, xi: &CoalgebraElement<T>) -> AlgebraElement<T> {
        self.form.gamma_inv(xi)
    }

    pub fn sigma(&self, z: &AlgebraElement<T>) -> CoalgebraElement<T> {
        CoalgebraElement(z.0.iter().zip(&self.sigma).map(|(&a, &s)| a * s).collect())
    }

    pub fn sigma_inv(&self, xi: &CoalgebraElement<T>) -> AlgebraElement<T> {
        AlgebraElement(xi.0.iter().zip(&self.sigma).map(|(&a, &s)| a / s).collect())
    }

    /// `σ`-inner product `(x, y)_σ`.
    pub fn sigma_pair(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> T {
        self.sigma(x).pair(y)
    }

    pub fn j(&self, x: &AlgebraElement<T>) -> AlgebraElement<T> {
        AlgebraElement(self.j.mul_vec(&x.0))
    }
}

/// Hierarchy of levels `0..=top`.
#[derive(Clone, Debug)]
pub struct Tower<T> {
    levels: Vec<Level<T>>,
    fiber_scale: T,
}

impl<T: Real> Tower<T> {
    /// SL(2,C) tower up to `top` with the doubled form scaled by 1/2.
    pub fn sl2c(top: usize) -> Self {
        Self::with_scale(top, T::lit(0.5)).expect("sl(2,C) tower is valid")
    }

    /// SL(2,C) tower with the doubled form scaled by `fiber_scale`.
    pub fn with_scale(top: usize, fiber_scale: T) -> Result<Self> {
        if fiber_scale == T::zero() {
            return Err(Error::InvalidForm("fiber scale must be nonzero".into()));
        }
        let algebra = sl2c::algebra();
        let form = sl2c::k0_form();
        let splitting = sl2c::splitting(&algebra);
        let mut levels = vec![Level { algebra, form, splitting, sigma: sl2c::sigma(), j: sl2c::j_matrix() }];
        for _ in 0..top {
            let prev = levels.last().unwrap();
            let sum = semidirect_sum(&prev.algebra, &prev.form, &prev.splitting, fiber_scale)?;
            let sigma = [prev.sigma.clone(), prev.sigma.clone()].concat();
            let n = prev.dim();
            let j = Matrix::from_fn(2 * n, 2 * n, |r, c| match (r < n, c < n) {
                (true, true) => prev.j[(r, c)],
                (false, false) => prev.j[(r - n, c - n)],
                _ => T::zero(),
            });
            levels.push(Level { algebra: sum.algebra, form: sum.form, splitting: sum.splitting, sigma, j });
        }
        Ok(Self { levels, fiber_scale })
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn fiber_scale(&self) -> T {
        self.fiber_scale
    }

    pub fn level(&self, m: usize) -> &Level<T> {
        &self.levels[m]
    }

    pub fn try_level(&self, m: usize) -> Result<&Level<T>> {
        self.levels.get(m).ok_or(Error::LevelMismatch { expected: self.top(), found: m })
    }

    /// Level whose algebra has dimension `dim`.
    pub fn level_of_dim(&self, dim: usize) -> Result<usize> {
        (0..=self.top())
            .find(|&m| algebra_dim(m) == dim)
            .ok_or(Error::DimensionMismatch { expected: algebra_dim(self.top()), found: dim })
    }

    fn check_group(&self, g: &GroupElement<T>) -> Result<usize> {
        let d = g.depth();
        if d > self.top() {
            return Err(Error::LevelMismatch { expected: self.top(), found: d });
        }
        Ok(d)
    }

    // ---- group law ------------------------------------------------------

    /// `(a,X)•(b,Y) = (ab, Ad_{b⁻¹}X + Y)`.
    pub fn mul(&self, g: &GroupElement<T>, h: &GroupElement<T>) -> GroupElement<T> {
        match (g, h) {
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => GroupElement::Matrix(*a * *b),
            (GroupElement::Pair(a, x), GroupElement::Pair(b, y)) => {
                let base = self.mul(a, b);
                let fiber = &self.adjoint_inv(b, x) + y;
                GroupElement::pair(base, fiber)
            }
            _ => panic!("group elements of different depth"),
        }
    }

    /// `(a,X)⁻¹ = (a⁻¹, −Ad_a X)`.
    pub fn inv(&self, g: &GroupElement<T>) -> GroupElement<T> {
        match g {
            GroupElement::Matrix(a) => GroupElement::Matrix(a.inverse().expect("group elements are invertible")),
            GroupElement::Pair(a, x) => GroupElement::pair(self.inv(a), -self.adjoint(a, x)),
        }
    }

    /// `Ad_g x`; at depth `d ≥ 1`, `Ad_{(b,Z)}(X,Y) = (Ad_b X, Ad_b([Z,X] + Y))`.
    pub fn adjoint(&self, g: &GroupElement<T>, x: &AlgebraElement<T>) -> AlgebraElement<T> {
        match g {
            GroupElement::Matrix(a) => {
                let inv = a.inverse().expect("group elements are invertible");
                sl2c::coefficients_unchecked(&(*a * sl2c::realize(x) * inv))
            }
            GroupElement::Pair(b, z) => {
                let lower = self.level(b.depth());
                let (x0, x1) = x.halves();
                let first = self.adjoint(b, &x0);
                let second = self.adjoint(b, &(&lower.br(z, &x0) + &x1));
                AlgebraElement::concat(&first, &second)
            }
        }
    }

    /// `Ad_{g⁻¹} x`.
    pub fn adjoint_inv(&self, g: &GroupElement<T>, x: &AlgebraElement<T>) -> AlgebraElement<T> {
        match g {
            GroupElement::Matrix(a) => {
                let inv = a.inverse().expect("group elements are invertible");
                sl2c::coefficients_unchecked(&(inv * sl2c::realize(x) * *a))
            }
            GroupElement::Pair(b, z) => {
                let lower = self.level(b.depth());
                let (x0, x1) = x.halves();
                let first = self.adjoint_inv(b, &x0);
                // Ad_{b⁻¹}([−Ad_b Z, X] + Y) = Ad_{b⁻¹}Y − [Z, Ad_{b⁻¹}X]
                let second = &self.adjoint_inv(b, &x1) - &lower.br(z, &first);
                AlgebraElement::concat(&first, &second)
            }
        }
    }

    /// Checked `Ad_g x`.
    pub fn try_adjoint(&self, g: &GroupElement<T>, x: &AlgebraElement<T>) -> Result<AlgebraElement<T>> {
        let d = self.check_group(g)?;
        x.check_dim(algebra_dim(d))?;
        Ok(self.adjoint(g, x))
    }

    /// Matrix of `Ad_g` on coefficient columns.
    pub fn adjoint_matrix(&self, g: &GroupElement<T>) -> Matrix<T> {
        let n = algebra_dim(g.depth());
        let cols: Vec<Vec<T>> = (0..n).map(|i| self.adjoint(g, &AlgebraElement::basis(n, i)).0).collect();
        Matrix::from_columns(&cols)
    }

    /// `𝔸_±(h)x = Ad_{h⁻¹} Π_± Ad_h x`.
    pub fn projector(&self, h: &GroupElement<T>, x: &AlgebraElement<T>, half: Half) -> AlgebraElement<T> {
        let lvl = self.level(h.depth());
        self.adjoint_inv(h, &lvl.project(&self.adjoint(h, x), half))
    }

    // ---- exponential ----------------------------------------------------

    /// Group exponential of an element of `𝔥_d`; the fiber uses
    /// `−Σ_{n≥1} (−1)ⁿ/n! ad_Xⁿ⁻¹ Y` after scaling so that `‖ad_X‖ ≤ 1`.
    pub fn exp(&self, x: &AlgebraElement<T>) -> Result<GroupElement<T>> {
        let d = self.level_of_dim(x.dim())?;
        if !x.is_finite() {
            return Err(Error::InvalidInput("non-finite algebra element".into()));
        }
        self.exp_at(d, x)
    }

    fn exp_at(&self, d: usize, x: &AlgebraElement<T>) -> Result<GroupElement<T>> {
        if d == 0 {
            return Ok(GroupElement::Matrix(exp_matrix(&sl2c::realize(x))?));
        }
        let lower = self.level(d - 1);
        let (x0, _) = x.halves();
        let ad_norm = lower.algebra.ad_matrix(&x0).max_abs() * T::lit(lower.dim() as f64);
        let mut squarings = 0;
        let mut scaled = ad_norm;
        while scaled > T::one() {
            scaled *= T::lit(0.5);
            squarings += 1;
        }
        let y = x.scale(T::lit(0.5).powi(squarings));
        let (y0, y1) = y.halves();
        let base = self.exp_at(d - 1, &y0)?;
        let mut sum = lower.algebra.zero();
        let mut term = y1.clone();
        let mut converged = false;
        for n in 1..=MAX_SERIES_TERMS {
            // term = ad_{y0}^{n-1} y1 / n!
            if n > 1 {
                term = lower.br(&y0, &term).scale(T::lit(n as f64).recip());
            }
            let signed = if n % 2 == 1 { term.clone() } else { -&term };
            sum += &signed;
            if term.norm_inf() <= T::epsilon() * T::lit(1e-2) * (T::one() + sum.norm_inf()) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence(MAX_SERIES_TERMS));
        }
        let mut g = GroupElement::pair(base, sum);
        for _ in 0..squarings {
            g = self.mul(&g, &g);
        }
        Ok(g)
    }

    // ---- factorization --------------------------------------------------

    /// `g = g₊ g₋` with `g₊ ∈ H₊`, `g₋ ∈ H₋`; Iwasawa at depth 0 and
    /// `(h,Y) = (h₊, Π₊Ad_{h₋}Y)•(h₋, Ad_{h₋⁻¹}Π₋Ad_{h₋}Y)` above.
    pub fn factorize(&self, g: &GroupElement<T>) -> Result<(GroupElement<T>, GroupElement<T>)> {
        self.check_group(g)?;
        match g {
            GroupElement::Matrix(m) => {
                let (u, b) = iwasawa(m)?;
                Ok((GroupElement::Matrix(u), GroupElement::Matrix(b)))
            }
            GroupElement::Pair(h, y) => {
                let (hp, hm) = self.factorize(h)?;
                let lvl = self.level(h.depth());
                let moved = self.adjoint(&hm, y);
                let plus_fiber = lvl.project(&moved, Half::Plus);
                let minus_fiber = self.adjoint_inv(&hm, &lvl.project(&moved, Half::Minus));
                Ok((GroupElement::pair(hp, plus_fiber), GroupElement::pair(hm, minus_fiber)))
            }
        }
    }

    /// Distance of `g` from `H₊` (half = Plus) or `H₋`.
    pub fn subgroup_defect(&self, g: &GroupElement<T>, half: Half) -> T {
        match g {
            GroupElement::Matrix(m) => match half {
                Half::Plus => m.unitarity_defect(),
                Half::Minus => m.borel_defect(),
            },
            GroupElement::Pair(b, z) => {
                let lvl = self.level(b.depth());
                self.subgroup_defect(b, half) + lvl.splitting.distance_from(z, half)
            }
        }
    }

    pub fn check_subgroup(&self, g: &GroupElement<T>, half: Half, tol: T) -> Result<()> {
        let d = self.subgroup_defect(g, half);
        if d > tol {
            Err(Error::NotInSubalgebra { side: half.name(), norm: d.as_f64() })
        } else {
            Ok(())
        }
    }

    /// Snaps `g` back onto `H₊` or `H₋` after an integration step.
    pub fn reproject(&self, g: &GroupElement<T>, half: Half) -> GroupElement<T> {
        match g {
            GroupElement::Matrix(m) => GroupElement::Matrix(match half {
                Half::Plus => reproject_su2(m),
                Half::Minus => reproject_borel(m),
            }),
            GroupElement::Pair(b, z) => {
                let lvl = self.level(b.depth());
                GroupElement::pair(self.reproject(b, half), lvl.project(z, half))
            }
        }
    }

    // ---- tangent vectors in flat coordinates ------------------------------

    /// Flat time derivative of `g` given the body velocity `g⁻¹ġ = ξ`.
    /// At depth `d ≥ 1`, `(h,Z)⁻¹(ḣ,Ż) = (h⁻¹ḣ, [h⁻¹ḣ, Z] + Ż)`.
    pub fn coord_velocity(&self, g: &GroupElement<T>, body: &AlgebraElement<T>) -> Vec<T> {
        let mut out = Vec::with_capacity(flat_len(g.depth()));
        self.coord_velocity_into(g, body, &mut out);
        out
    }

    fn coord_velocity_into(&self, g: &GroupElement<T>, body: &AlgebraElement<T>, out: &mut Vec<T>) {
        match g {
            GroupElement::Matrix(m) => out.extend_from_slice(&(*m * sl2c::realize(body)).to_reals()),
            GroupElement::Pair(b, z) => {
                let lvl = self.level(b.depth());
                let (v0, v1) = body.halves();
                self.coord_velocity_into(b, &v0, out);
                out.extend_from_slice(&(&v1 - &lvl.br(&v0, z)).0);
            }
        }
    }

    /// Body velocity from a flat derivative; inverse of [`coord_velocity`](Self::coord_velocity).
    pub fn body_velocity(&self, g: &GroupElement<T>, flat: &[T]) -> AlgebraElement<T> {
        match g {
            GroupElement::Matrix(m) => {
                let inv = m.inverse().expect("group elements are invertible");
                sl2c::coefficients_unchecked(&(inv * Mat2::from_reals(flat)))
            }
            GroupElement::Pair(b, z) => {
                let lvl = self.level(b.depth());
                let split = flat_len(b.depth());
                let v0 = self.body_velocity(b, &flat[..split]);
                let zdot = AlgebraElement(flat[split..].to_vec());
                let v1 = &lvl.br(&v0, z) + &zdot;
                AlgebraElement::concat(&v0, &v1)
            }
        }
    }
}
