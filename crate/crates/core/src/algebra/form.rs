use crate::algebra::descriptor::LieAlgebra;
use crate::algebra::element::{AlgebraElement, CoalgebraElement};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;

/// Symmetric nondegenerate bilinear form together with the induced
/// bijection `γ: 𝔤 → 𝔤*`.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<T> {
    matrix: Matrix<T>,
    inverse: Matrix<T>,
}

impl<T: Real> BilinearForm<T> {
    /// Validates symmetry and nondegeneracy.
    pub fn new(matrix: Matrix<T>, tol: T) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidForm("form matrix is not square".into()));
        }
        let asym = matrix.sub(&matrix.transpose()).max_abs();
        if asym > tol {
            return Err(Error::InvalidForm(format!("form is not symmetric (defect {:e})", asym.as_f64())));
        }
        let inverse = matrix.inverse().map_err(|_| Error::InvalidForm("form is degenerate".into()))?;
        Ok(Self { matrix, inverse })
    }

    /// Like [`new`](Self::new) but also requires ad-invariance on `alg`.
    pub fn invariant(alg: &LieAlgebra<T>, matrix: Matrix<T>, tol: T) -> Result<Self> {
        let form = Self::new(matrix, tol)?;
        if form.dim() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), found: form.dim() });
        }
        let defect = form.invariance_defect(alg);
        if defect > tol {
            return Err(Error::InvalidForm(format!("form is not ad-invariant (defect {:e})", defect.as_f64())));
        }
        Ok(form)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn pair(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> T {
        crate::linalg::dot(&self.matrix.vec_mul(&x.0), &y.0)
    }

    /// `γ(x) = k(x, ·)`.
    pub fn gamma(&self, x: &AlgebraElement<T>) -> CoalgebraElement<T> {
        CoalgebraElement(self.matrix.vec_mul(&x.0))
    }

    pub fn gamma_inv(&self, xi: &CoalgebraElement<T>) -> AlgebraElement<T> {
        AlgebraElement(self.inverse.vec_mul(&xi.0))
    }

    /// Largest `|k([e_i,e_j],e_l) + k(e_j,[e_i,e_l])|` over basis triples.
    pub fn invariance_defect(&self, alg: &LieAlgebra<T>) -> T {
        let n = alg.dim();
        let mut worst = T::zero();
        for i in 0..n {
            let ad = alg.ad_matrix(&alg.basis(i));
            // K·ad_x + ad_xᵀ·K must vanish.
            let lhs = self.matrix.matmul(&ad);
            let rhs = ad.transpose().matmul(&self.matrix);
            for j in 0..n {
                for l in 0..n {
                    worst = worst.max((lhs[(j, l)] + rhs[(j, l)]).abs());
                }
            }
        }
        worst
    }
}
