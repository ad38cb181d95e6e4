use crate::algebra::{AlgebraElement, Half};
use crate::error::Result;
use crate::phase::{PhasePoint, PhaseSpace, Tangent};
use crate::scalar::Real;

impl<T: Real> PhaseSpace<T> {
    /// Canonical two-form on `H₊ ⋉ 𝔥₊` at `(h, Z)`:
    /// `ω((v,X),(w,Y)) = −(X, h⁻¹w)_σ + (Y, h⁻¹v)_σ + (Z, [h⁻¹v, h⁻¹w])_σ`.
    pub fn omega_plus(&self, p: &PhasePoint<T>, u: &Tangent<T>, v: &Tangent<T>) -> T {
        let l = self.level();
        -l.sigma_pair(&u.fiber, &v.body) + l.sigma_pair(&v.fiber, &u.body) + l.sigma_pair(&p.z, &l.br(&u.body, &v.body))
    }

    /// Largest `|dα(U, V)|` for `α = ι_field ω`, over left-invariant group
    /// directions and constant fiber directions in `𝔥₊`. Zero when the
    /// field preserves `ω`.
    pub fn lie_derivative_defect(
        &self,
        p: &PhasePoint<T>,
        field: &dyn Fn(&PhasePoint<T>) -> Tangent<T>,
        step: T,
    ) -> Result<T> {
        let n = self.dim();
        let l = self.level();
        let plus = l.splitting.indices(Half::Plus).to_vec();
        let zero = AlgebraElement::zeros(n);
        // Directions: (true, i) left-invariant group field, (false, i) fiber field.
        let dirs: Vec<(bool, usize)> =
            plus.iter().map(|&i| (true, i)).chain(plus.iter().map(|&i| (false, i))).collect();
        let tangent = |&(grp, i): &(bool, usize)| {
            let e = AlgebraElement::basis(n, i);
            if grp {
                Tangent { body: e, fiber: zero.clone() }
            } else {
                Tangent { body: zero.clone(), fiber: e }
            }
        };
        let alpha = |q: &PhasePoint<T>, u: &Tangent<T>| self.omega_plus(q, &field(q), u);
        let derivative = |dir: &Tangent<T>, u: &Tangent<T>| -> Result<T> {
            let up = self.flow_step(p, dir, step)?;
            let dn = self.flow_step(p, dir, -step)?;
            Ok((alpha(&up, u) - alpha(&dn, u)) / (step + step))
        };
        let mut worst = T::zero();
        for (a, da) in dirs.iter().enumerate() {
            for db in &dirs[a + 1..] {
                let (u, v) = (tangent(da), tangent(db));
                let bracket = if da.0 && db.0 {
                    Tangent { body: l.br(&u.body, &v.body), fiber: zero.clone() }
                } else {
                    Tangent { body: zero.clone(), fiber: zero.clone() }
                };
                let d = derivative(&u, &v)? - derivative(&v, &u)? - alpha(p, &bracket);
                worst = worst.max(d.abs());
            }
        }
        Ok(worst)
    }
}
