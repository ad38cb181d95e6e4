use crate::algebra::descriptor::LieAlgebra;
use crate::algebra::form::BilinearForm;
use crate::algebra::splitting::Splitting;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::Real;

/// Result of doubling an algebra with its invariant form.
#[derive(Clone, Debug)]
pub struct SemidirectSum<T> {
    pub algebra: LieAlgebra<T>,
    pub form: BilinearForm<T>,
    pub splitting: Splitting,
}

/// Builds `𝔤 ⋉_ad 𝔤` with bracket `[(Y,V),(X,Z)] = ([Y,X], [Y,Z] + [V,X])`,
/// form `scale·(k(X,V) + k(Y,U))` and the slot-wise induced splitting.
pub fn semidirect_sum<T: Real>(
    alg: &LieAlgebra<T>,
    form: &BilinearForm<T>,
    split: &Splitting,
    scale: T,
) -> Result<SemidirectSum<T>> {
    let n = alg.dim();
    let m = 2 * n;
    let mut c = vec![T::zero(); m * m * m];
    let idx = |i: usize, j: usize, k: usize| (i * m + j) * m + k;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = alg.constant(i, j, k);
                if v == T::zero() {
                    continue;
                }
                c[idx(i, j, k)] = v;
                c[idx(i, n + j, n + k)] = v;
                c[idx(n + i, j, n + k)] = v;
            }
        }
    }
    let labels = alg
        .labels()
        .iter()
        .map(|l| format!("({l},0)"))
        .chain(alg.labels().iter().map(|l| format!("(0,{l})")))
        .collect();
    let algebra = LieAlgebra::new_unchecked(labels, c, alg.level() + 1);

    let k = form.matrix();
    let fm = Matrix::from_fn(m, m, |r, col| match (r < n, col < n) {
        (true, false) => scale * k[(r, col - n)],
        (false, true) => scale * k[(r - n, col)],
        _ => T::zero(),
    });
    let tol = T::lit(1e-12) * (T::one() + k.max_abs());
    let form = BilinearForm::invariant(&algebra, fm, tol)?;
    Ok(SemidirectSum { algebra, form, splitting: split.doubled() })
}
