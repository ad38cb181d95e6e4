use crate::algebra::element::{AlgebraElement, CoalgebraElement};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;

/// A finite-dimensional real Lie algebra given by structure constants
/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<T> {
    labels: Vec<String>,
    constants: Vec<T>,
    nonzero: Vec<(usize, usize, usize, T)>,
    // Entries with i < j when the constants are exactly antisymmetric; lets
    // `br` round identically under argument swap.
    pairs: Option<Vec<(usize, usize, usize, T)>>,
    level: usize,
}

/// Location and size of the worst Jacobi violation.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: f64,
}

impl<T: Real> LieAlgebra<T> {
    /// Builds a descriptor, rejecting constants that are not antisymmetric
    /// or violate Jacobi beyond `tol`.
    pub fn new(labels: Vec<String>, constants: Vec<T>, level: usize, tol: T) -> Result<Self> {
        let dim = labels.len();
        if constants.len() != dim * dim * dim {
            return Err(Error::InvalidDescriptor(format!(
                "expected {} structure constants for dimension {dim}, found {}",
                dim * dim * dim,
                constants.len()
            )));
        }
        let alg = Self::new_unchecked(labels, constants, level);
        let anti = alg.antisymmetry_defect();
        if anti > tol {
            return Err(Error::InvalidDescriptor(format!(
                "structure constants are not antisymmetric (defect {:e})",
                anti.as_f64()
            )));
        }
        if let Some(v) = alg.jacobi_violation(tol) {
            let (i, j, k) = v.triple;
            return Err(Error::InvalidDescriptor(format!(
                "Jacobi identity fails on ({}, {}, {}) with residual {:e}",
                alg.labels[i], alg.labels[j], alg.labels[k], v.residual
            )));
        }
        Ok(alg)
    }

    /// Builds a descriptor without validation; used by the verification suite
    /// to inspect corrupted inputs.
    pub fn new_unchecked(labels: Vec<String>, constants: Vec<T>, level: usize) -> Self {
        let dim = labels.len();
        let mut nonzero = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let c = constants[(i * dim + j) * dim + k];
                    if c != T::zero() {
                        nonzero.push((i, j, k, c));
                    }
                }
            }
        }
        let exact = nonzero.iter().all(|&(i, j, k, c)| constants[(j * dim + i) * dim + k] == -c);
        let pairs = exact.then(|| nonzero.iter().copied().filter(|&(i, j, _, _)| i < j).collect());
        Self { labels, constants, nonzero, pairs, level }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> T {
        let n = self.dim();
        self.constants[(i * n + j) * n + k]
    }

    pub fn constants(&self) -> &[T] {
        &self.constants
    }

    pub fn zero(&self) -> AlgebraElement<T> {
        AlgebraElement::zeros(self.dim())
    }

    pub fn basis(&self, i: usize) -> AlgebraElement<T> {
        AlgebraElement::basis(self.dim(), i)
    }

    /// Lie bracket, checking that both arguments belong to this algebra.
    pub fn bracket(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> Result<AlgebraElement<T>> {
        x.check_dim(self.dim())?;
        y.check_dim(self.dim())?;
        Ok(self.br(x, y))
    }

    /// Lie bracket without dimension checks.
    pub fn br(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> AlgebraElement<T> {
        debug_assert_eq!(x.dim(), self.dim());
        debug_assert_eq!(y.dim(), self.dim());
        let mut out = vec![T::zero(); self.dim()];
        if let Some(pairs) = &self.pairs {
            for &(i, j, k, c) in pairs {
                out[k] += c * (x.0[i] * y.0[j] - x.0[j] * y.0[i]);
            }
            return AlgebraElement(out);
        }
        for &(i, j, k, c) in &self.nonzero {
            let (xi, yj) = (x.0[i], y.0[j]);
            if xi != T::zero() && yj != T::zero() {
                out[k] += c * xi * yj;
            }
        }
        AlgebraElement(out)
    }

    /// Coadjoint-type action with `<ad*_x ξ, y> = <ξ, [x, y]>`.
    pub fn ad_star(&self, x: &AlgebraElement<T>, xi: &CoalgebraElement<T>) -> Result<CoalgebraElement<T>> {
        x.check_dim(self.dim())?;
        xi.check_dim(self.dim())?;
        let mut out = vec![T::zero(); self.dim()];
        for &(i, j, k, c) in &self.nonzero {
            out[j] += x.0[i] * c * xi.0[k];
        }
        Ok(CoalgebraElement(out))
    }

    /// Matrix of `ad_x` acting on coefficient columns.
    pub fn ad_matrix(&self, x: &AlgebraElement<T>) -> Matrix<T> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for &(i, j, k, c) in &self.nonzero {
            m[(k, j)] += x.0[i] * c;
        }
        m
    }

    /// `ad_x^n y`.
    pub fn ad_power(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>, n: usize) -> AlgebraElement<T> {
        (0..n).fold(y.clone(), |acc, _| self.br(x, &acc))
    }

    pub fn antisymmetry_defect(&self) -> T {
        let n = self.dim();
        let mut worst = T::zero();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    worst = worst.max((self.constant(i, j, k) + self.constant(j, i, k)).abs());
                }
            }
        }
        worst
    }

    /// Largest Jacobi residual over basis triples.
    pub fn jacobi_defect(&self) -> JacobiViolation {
        let n = self.dim();
        let mut worst = JacobiViolation { triple: (0, 0, 0), residual: 0.0 };
        let basis: Vec<_> = (0..n).map(|i| self.basis(i)).collect();
        for i in 0..n {
            for j in i..n {
                let ij = self.br(&basis[i], &basis[j]);
                for k in j..n {
                    let jk = self.br(&basis[j], &basis[k]);
                    let ki = self.br(&basis[k], &basis[i]);
                    let sum = &(&self.br(&ij, &basis[k]) + &self.br(&jk, &basis[i])) + &self.br(&ki, &basis[j]);
                    let r = sum.norm_inf().as_f64();
                    if r > worst.residual {
                        worst = JacobiViolation { triple: (i, j, k), residual: r };
                    }
                }
            }
        }
        worst
    }

    pub fn jacobi_violation(&self, tol: T) -> Option<JacobiViolation> {
        let worst = self.jacobi_defect();
        (worst.residual > tol.as_f64()).then_some(worst)
    }
}
