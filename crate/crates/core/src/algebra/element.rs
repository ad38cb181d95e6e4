use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Real;

macro_rules! coefficient_vector {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name<T>(pub Vec<T>);

        impl<T: Real> $name<T> {
            pub fn zeros(dim: usize) -> Self {
                Self(vec![T::zero(); dim])
            }

            pub fn basis(dim: usize, i: usize) -> Self {
                let mut v = Self::zeros(dim);
                v.0[i] = T::one();
                v
            }

            pub fn from_slice(c: &[T]) -> Self {
                Self(c.to_vec())
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn coeffs(&self) -> &[T] {
                &self.0
            }

            pub fn scale(&self, s: T) -> Self {
                Self(self.0.iter().map(|&x| x * s).collect())
            }

            /// Largest absolute coefficient.
            pub fn norm_inf(&self) -> T {
                linalg::max_abs(&self.0)
            }

            pub fn norm2(&self) -> T {
                linalg::dot(&self.0, &self.0).sqrt()
            }

            pub fn max_diff(&self, other: &Self) -> T {
                linalg::max_abs_diff(&self.0, &other.0)
            }

            pub fn is_finite(&self) -> bool {
                self.0.iter().all(|x| x.is_finite())
            }

            /// Concatenates two halves into an element of the doubled space.
            pub fn concat(first: &Self, second: &Self) -> Self {
                let mut v = first.0.clone();
                v.extend_from_slice(&second.0);
                Self(v)
            }

            /// Splits an element of a doubled space into its two slots.
            pub fn halves(&self) -> (Self, Self) {
                let n = self.0.len() / 2;
                (Self(self.0[..n].to_vec()), Self(self.0[n..].to_vec()))
            }

            pub fn check_dim(&self, dim: usize) -> Result<()> {
                if self.0.len() == dim {
                    Ok(())
                } else {
                    Err(Error::DimensionMismatch { expected: dim, found: self.0.len() })
                }
            }

            pub fn to_f64(&self) -> Vec<f64> {
                self.0.iter().map(|x| x.as_f64()).collect()
            }
        }

        impl<T> Index<usize> for $name<T> {
            type Output = T;
            fn index(&self, i: usize) -> &T {
                &self.0[i]
            }
        }

        impl<T> IndexMut<usize> for $name<T> {
            fn index_mut(&mut self, i: usize) -> &mut T {
                &mut self.0[i]
            }
        }

        impl<T: Real> Add for &$name<T> {
            type Output = $name<T>;
            fn add(self, rhs: Self) -> $name<T> {
                assert_eq!(self.0.len(), rhs.0.len(), "dimension mismatch");
                $name(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
            }
        }

        impl<T: Real> Add for $name<T> {
            type Output = $name<T>;
            fn add(self, rhs: Self) -> $name<T> {
                &self + &rhs
            }
        }

        impl<T: Real> Sub for &$name<T> {
            type Output = $name<T>;
            fn sub(self, rhs: Self) -> $name<T> {
                assert_eq!(self.0.len(), rhs.0.len(), "dimension mismatch");
                $name(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a - b).collect())
            }
        }

        impl<T: Real> Sub for $name<T> {
            type Output = $name<T>;
            fn sub(self, rhs: Self) -> $name<T> {
                &self - &rhs
            }
        }

        impl<T: Real> Neg for &$name<T> {
            type Output = $name<T>;
            fn neg(self) -> $name<T> {
                $name(self.0.iter().map(|&a| -a).collect())
            }
        }

        impl<T: Real> Neg for $name<T> {
            type Output = $name<T>;
            fn neg(self) -> $name<T> {
                -&self
            }
        }

        impl<T: Real> Mul<T> for &$name<T> {
            type Output = $name<T>;
            fn mul(self, s: T) -> $name<T> {
                self.scale(s)
            }
        }

        impl<T: Real> Mul<T> for $name<T> {
            type Output = $name<T>;
            fn mul(self, s: T) -> $name<T> {
                self.scale(s)
            }
        }

        impl<T: Real> AddAssign<&$name<T>> for $name<T> {
            fn add_assign(&mut self, rhs: &$name<T>) {
                assert_eq!(self.0.len(), rhs.0.len(), "dimension mismatch");
                for (a, &b) in self.0.iter_mut().zip(&rhs.0) {
                    *a += b;
                }
            }
        }

        impl<T: Real> SubAssign<&$name<T>> for $name<T> {
            fn sub_assign(&mut self, rhs: &$name<T>) {
                assert_eq!(self.0.len(), rhs.0.len(), "dimension mismatch");
                for (a, &b) in self.0.iter_mut().zip(&rhs.0) {
                    *a -= b;
                }
            }
        }
    };
}

coefficient_vector!(AlgebraElement, "Coefficients of a Lie algebra element in a fixed basis.");
coefficient_vector!(CoalgebraElement, "Coefficients of a dual element in the dual basis.");

impl<T: Real> CoalgebraElement<T> {
    /// Natural pairing with an algebra element.
    pub fn pair(&self, x: &AlgebraElement<T>) -> T {
        assert_eq!(self.0.len(), x.0.len(), "pairing dimension mismatch");
        linalg::dot(&self.0, &x.0)
    }
}
