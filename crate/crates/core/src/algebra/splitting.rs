use crate::algebra::descriptor::LieAlgebra;
use crate::algebra::element::AlgebraElement;
use crate::algebra::form::BilinearForm;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// One side of a direct-sum splitting `𝔤 = 𝔤₊ ⊕ 𝔤₋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Half {
    Plus,
    Minus,
}

impl Half {
    pub fn opposite(self) -> Self {
        match self {
            Half::Plus => Half::Minus,
            Half::Minus => Half::Plus,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Half::Plus => "plus",
            Half::Minus => "minus",
        }
    }
}

/// Basis-aligned splitting into two complementary subalgebras.
#[derive(Clone, Debug, PartialEq)]
pub struct Splitting {
    plus: Vec<usize>,
    minus: Vec<usize>,
    side_of: Vec<Half>,
}

impl Splitting {
    /// Checks that the index sets partition the basis and span subalgebras.
    pub fn new<T: Real>(alg: &LieAlgebra<T>, plus: Vec<usize>, minus: Vec<usize>, tol: T) -> Result<Self> {
        let split = Self::from_indices(alg.dim(), plus, minus)?;
        for half in [Half::Plus, Half::Minus] {
            let idx = split.indices(half);
            for &i in idx {
                for &j in idx {
                    let b = alg.br(&alg.basis(i), &alg.basis(j));
                    let off = split.project(&b, half.opposite()).norm_inf();
                    if off > tol {
                        return Err(Error::InvalidSplitting(format!(
                            "{} half is not closed: [{}, {}] leaves it",
                            half.name(),
                            alg.labels()[i],
                            alg.labels()[j]
                        )));
                    }
                }
            }
        }
        Ok(split)
    }

    /// Partition check only.
    pub fn from_indices(dim: usize, plus: Vec<usize>, minus: Vec<usize>) -> Result<Self> {
        let mut side: Vec<Option<Half>> = vec![None; dim];
        for (idx, half) in [(&plus, Half::Plus), (&minus, Half::Minus)] {
            for &i in idx {
                if i >= dim || side[i].is_some() {
                    return Err(Error::InvalidSplitting(format!("index {i} is out of range or repeated")));
                }
                side[i] = Some(half);
            }
        }
        let side_of = side
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidSplitting("halves do not cover the basis".into()))?;
        Ok(Self { plus, minus, side_of })
    }

    pub fn dim(&self) -> usize {
        self.side_of.len()
    }

    pub fn indices(&self, half: Half) -> &[usize] {
        match half {
            Half::Plus => &self.plus,
            Half::Minus => &self.minus,
        }
    }

    pub fn side_of(&self, i: usize) -> Half {
        self.side_of[i]
    }

    /// `Π_half x`.
    pub fn project<T: Real>(&self, x: &AlgebraElement<T>, half: Half) -> AlgebraElement<T> {
        AlgebraElement(x.0.iter().zip(&self.side_of).map(|(&c, &s)| if s == half { c } else { T::zero() }).collect())
    }

    /// Norm of the component outside `half`.
    pub fn distance_from<T: Real>(&self, x: &AlgebraElement<T>, half: Half) -> T {
        self.project(x, half.opposite()).norm_inf()
    }

    pub fn check_in<T: Real>(&self, x: &AlgebraElement<T>, half: Half, tol: T) -> Result<()> {
        let d = self.distance_from(x, half);
        if d > tol {
            Err(Error::NotInSubalgebra { side: half.name(), norm: d.as_f64() })
        } else {
            Ok(())
        }
    }

    /// Largest `|k(e_i, e_j)|` within either half.
    pub fn isotropy_defect<T: Real>(&self, form: &BilinearForm<T>) -> T {
        let m = form.matrix();
        let mut worst = T::zero();
        for half in [Half::Plus, Half::Minus] {
            for &i in self.indices(half) {
                for &j in self.indices(half) {
                    worst = worst.max(m[(i, j)].abs());
                }
            }
        }
        worst
    }

    /// Splitting of `𝔤 ⋉ 𝔤` with both slots split like `self`.
    pub fn doubled(&self) -> Self {
        let n = self.dim();
        let plus = self.plus.iter().copied().chain(self.plus.iter().map(|&i| i + n)).collect();
        let minus = self.minus.iter().copied().chain(self.minus.iter().map(|&i| i + n)).collect();
        Self::from_indices(2 * n, plus, minus).expect("doubling preserves the partition")
    }
}

/// Infinitesimal dressing `(x)^{by} = Π_side [x, by]` for `x` in `side`
/// and `by` in the opposite half.
pub fn dressing_component<T: Real>(
    alg: &LieAlgebra<T>,
    split: &Splitting,
    x: &AlgebraElement<T>,
    by: &AlgebraElement<T>,
    side: Half,
    tol: T,
) -> Result<AlgebraElement<T>> {
    split.check_in(x, side, tol)?;
    split.check_in(by, side.opposite(), tol)?;
    Ok(split.project(&alg.bracket(x, by)?, side))
}
