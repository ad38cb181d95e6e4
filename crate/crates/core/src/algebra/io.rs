//! JSON form of an algebra descriptor.

use serde::{Deserialize, Serialize};

use crate::algebra::{BilinearForm, LieAlgebra, Splitting};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;

/// On-disk descriptor: structure constants `c[i][j][k]`, form matrix and
/// the basis indices of each half.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DescriptorFile {
    pub level: usize,
    pub dim: usize,
    pub labels: Vec<String>,
    pub c: Vec<Vec<Vec<f64>>>,
    pub form: Vec<Vec<f64>>,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

impl DescriptorFile {
    pub fn from_parts<T: Real>(alg: &LieAlgebra<T>, form: &BilinearForm<T>, split: &Splitting) -> Self {
        let n = alg.dim();
        let c = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| alg.constant(i, j, k).as_f64()).collect()).collect())
            .collect();
        let form = form.matrix().to_rows().into_iter().map(|r| r.into_iter().map(Real::as_f64).collect()).collect();
        Self {
            level: alg.level(),
            dim: n,
            labels: alg.labels().to_vec(),
            c,
            form,
            plus: split.indices(crate::algebra::Half::Plus).to_vec(),
            minus: split.indices(crate::algebra::Half::Minus).to_vec(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: Self =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("descriptor JSON: {e}")))?;
        file.check_shape()?;
        Ok(file)
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.dim;
        let cube_ok = self.c.len() == n && self.c.iter().all(|p| p.len() == n && p.iter().all(|r| r.len() == n));
        let form_ok = self.form.len() == n && self.form.iter().all(|r| r.len() == n);
        if self.labels.len() != n || !cube_ok || !form_ok {
            return Err(Error::InvalidDescriptor(format!("arrays do not match dimension {n}")));
        }
        Ok(())
    }

    /// Algebra without validation, for diagnosing corrupted files.
    pub fn algebra_unchecked<T: Real>(&self) -> LieAlgebra<T> {
        let flat = self.c.iter().flatten().flatten().map(|&x| T::lit(x)).collect();
        LieAlgebra::new_unchecked(self.labels.clone(), flat, self.level)
    }

    /// Fully validated parts.
    pub fn into_parts<T: Real>(&self, tol: T) -> Result<(LieAlgebra<T>, BilinearForm<T>, Splitting)> {
        let flat = self.c.iter().flatten().flatten().map(|&x| T::lit(x)).collect();
        let alg = LieAlgebra::new(self.labels.clone(), flat, self.level, tol)?;
        let rows: Vec<Vec<T>> = self.form.iter().map(|r| r.iter().map(|&x| T::lit(x)).collect()).collect();
        let form = BilinearForm::invariant(&alg, Matrix::from_rows(&rows)?, tol)?;
        let split = Splitting::new(&alg, self.plus.clone(), self.minus.clone(), tol)?;
        Ok((alg, form, split))
    }
}
