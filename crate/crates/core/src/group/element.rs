use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::group::Mat2;
use crate::scalar::Real;

/// Element of `SL(2,C)` (depth 0) or of an iterated semidirect product
/// `H_{d} = H_{d-1} ⋉ 𝔥_{d-1}` (depth `d`), stored as `(base, fiber)`.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupElement<T> {
    Matrix(Mat2<T>),
    Pair(Box<GroupElement<T>>, AlgebraElement<T>),
}

impl<T: Real> GroupElement<T> {
    pub fn pair(base: GroupElement<T>, fiber: AlgebraElement<T>) -> Self {
        Self::Pair(Box::new(base), fiber)
    }

    pub fn depth(&self) -> usize {
        match self {
            Self::Matrix(_) => 0,
            Self::Pair(base, _) => 1 + base.depth(),
        }
    }

    pub fn identity(depth: usize) -> Self {
        if depth == 0 {
            Self::Matrix(Mat2::identity())
        } else {
            Self::pair(Self::identity(depth - 1), AlgebraElement::zeros(crate::tower::algebra_dim(depth - 1)))
        }
    }

    /// The SL(2,C) matrix at the bottom of the recursion.
    pub fn root_matrix(&self) -> &Mat2<T> {
        match self {
            Self::Matrix(m) => m,
            Self::Pair(base, _) => base.root_matrix(),
        }
    }

    pub fn as_matrix(&self) -> Result<&Mat2<T>> {
        match self {
            Self::Matrix(m) => Ok(m),
            Self::Pair(..) => Err(Error::LevelMismatch { expected: 0, found: self.depth() }),
        }
    }

    pub fn as_pair(&self) -> Result<(&GroupElement<T>, &AlgebraElement<T>)> {
        match self {
            Self::Pair(base, fiber) => Ok((base, fiber)),
            Self::Matrix(_) => Err(Error::LevelMismatch { expected: 1, found: 0 }),
        }
    }

    pub fn check_depth(&self, depth: usize) -> Result<()> {
        let d = self.depth();
        if d == depth {
            Ok(())
        } else {
            Err(Error::LevelMismatch { expected: depth, found: d })
        }
    }

    /// Flat real coordinates: 8 matrix reals followed by fiber coefficients.
    pub fn flatten(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(crate::tower::flat_len(self.depth()));
        self.flatten_into(&mut out);
        out
    }

    fn flatten_into(&self, out: &mut Vec<T>) {
        match self {
            Self::Matrix(m) => out.extend_from_slice(&m.to_reals()),
            Self::Pair(base, fiber) => {
                base.flatten_into(out);
                out.extend_from_slice(&fiber.0);
            }
        }
    }

    pub fn unflatten(depth: usize, flat: &[T]) -> Result<Self> {
        let need = crate::tower::flat_len(depth);
        if flat.len() != need {
            return Err(Error::DimensionMismatch { expected: need, found: flat.len() });
        }
        Ok(Self::unflatten_unchecked(depth, flat))
    }

    fn unflatten_unchecked(depth: usize, flat: &[T]) -> Self {
        if depth == 0 {
            return Self::Matrix(Mat2::from_reals(flat));
        }
        let split = crate::tower::flat_len(depth - 1);
        Self::pair(Self::unflatten_unchecked(depth - 1, &flat[..split]), AlgebraElement(flat[split..].to_vec()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        crate::linalg::max_abs_diff(&self.flatten(), &other.flatten())
    }

    pub fn is_finite(&self) -> bool {
        self.flatten().iter().all(|x| x.is_finite())
    }

    pub fn to_repr(&self) -> GroupRepr {
        match self {
            Self::Matrix(m) => GroupRepr::Matrix(m.to_reals().map(Real::as_f64)),
            Self::Pair(base, fiber) => GroupRepr::Pair(Box::new(base.to_repr()), fiber.to_f64()),
        }
    }

    pub fn from_repr(repr: &GroupRepr) -> Self {
        match repr {
            GroupRepr::Matrix(r) => Self::Matrix(Mat2::from_reals(&r.map(T::lit))),
            GroupRepr::Pair(base, fiber) => {
                Self::pair(Self::from_repr(base), AlgebraElement(fiber.iter().map(|&x| T::lit(x)).collect()))
            }
        }
    }
}

/// Serialized group element: 8 reals at depth 0, `[base, fiber]` above.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRepr {
    Matrix([f64; 8]),
    Pair(Box<GroupRepr>, Vec<f64>),
}
