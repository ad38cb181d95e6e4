use crate::algebra::descriptor::LieAlgebra;
use crate::algebra::element::CoalgebraElement;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;

/// Basis of the characters of the subalgebra spanned by the basis vectors
/// `indices`: dual elements supported there that kill every bracket
/// `[e_i, e_j]`. Returned as elements of the full dual.
pub fn character_space<T: Real>(alg: &LieAlgebra<T>, indices: &[usize]) -> Result<Vec<CoalgebraElement<T>>> {
    if let Some(&bad) = indices.iter().find(|&&i| i >= alg.dim()) {
        return Err(Error::InvalidInput(format!("basis index {bad} out of range")));
    }
    let mut rows = Vec::new();
    for (a, &i) in indices.iter().enumerate() {
        for &j in &indices[a + 1..] {
            let b = alg.br(&alg.basis(i), &alg.basis(j));
            rows.push(indices.iter().map(|&k| b[k]).collect::<Vec<_>>());
        }
    }
    let null = if rows.is_empty() {
        Matrix::<T>::identity(indices.len()).to_rows()
    } else {
        Matrix::from_rows(&rows)?.null_space(T::lit(1e-10))
    };
    Ok(null
        .into_iter()
        .map(|v| {
            let mut full = CoalgebraElement::zeros(alg.dim());
            for (&k, &c) in indices.iter().zip(&v) {
                full[k] = c;
            }
            full
        })
        .collect())
}
