use crate::algebra::{AlgebraElement, CoalgebraElement};
use crate::error::{Error, Result};
use crate::phase::{PhasePoint, PhaseSpace};
use crate::scalar::Real;

/// Step used for finite-difference differentials.
pub const FD_STEP: f64 = 1e-6;

/// Tolerance when checking a supplied differential against finite differences.
pub const DIFFERENTIAL_TOL: f64 = 1e-5;

/// Differential of an observable at `(h, Z)`.
///
/// `group` is left-trivialized, `⟨group, X⟩ = d/ds F(h·exp(sX), Z)`;
/// `fiber` is the ordinary derivative in `Z`.
#[derive(Clone, Debug, PartialEq)]
pub struct Differential<T> {
    pub group: CoalgebraElement<T>,
    pub fiber: CoalgebraElement<T>,
}

type ValueFn<'a, T> = Box<dyn Fn(&PhasePoint<T>) -> T + 'a>;
type DiffFn<'a, T> = Box<dyn Fn(&PhasePoint<T>) -> Differential<T> + 'a>;

/// Smooth function on the phase space, optionally with an exact differential.
pub struct Observable<'a, T> {
    value: ValueFn<'a, T>,
    differential: Option<DiffFn<'a, T>>,
    left_invariant: bool,
}

impl<'a, T: Real> Observable<'a, T> {
    pub fn new(value: impl Fn(&PhasePoint<T>) -> T + 'a) -> Self {
        Self { value: Box::new(value), differential: None, left_invariant: false }
    }

    pub fn with_differential(mut self, d: impl Fn(&PhasePoint<T>) -> Differential<T> + 'a) -> Self {
        self.differential = Some(Box::new(d));
        self
    }

    /// Marks the observable as depending on `Z` only.
    pub fn left_invariant(mut self) -> Self {
        self.left_invariant = true;
        self
    }

    pub fn is_left_invariant(&self) -> bool {
        self.left_invariant
    }

    pub fn has_differential(&self) -> bool {
        self.differential.is_some()
    }

    pub fn value(&self, p: &PhasePoint<T>) -> T {
        (self.value)(p)
    }

    /// `F(h, Z) = ⟨ξ, Z⟩`.
    pub fn linear(xi: CoalgebraElement<T>) -> Self {
        let d = xi.clone();
        Self::new(move |p| xi.pair(&p.z))
            .with_differential(move |p| Differential { group: CoalgebraElement::zeros(p.z.dim()), fiber: d.clone() })
            .left_invariant()
    }
}

impl<T: Real> PhaseSpace<T> {
    /// Exact differential if supplied, otherwise central differences.
    pub fn differential(&self, f: &Observable<'_, T>, p: &PhasePoint<T>) -> Result<Differential<T>> {
        match &f.differential {
            Some(d) => Ok(d(p)),
            None => self.differential_fd(f, p, T::lit(FD_STEP)),
        }
    }

    /// Central-difference differential along `h·exp(±εe_i)` and `Z ± εe_i`.
    pub fn differential_fd(&self, f: &Observable<'_, T>, p: &PhasePoint<T>, step: T) -> Result<Differential<T>> {
        let n = self.dim();
        let two = step + step;
        let mut fiber = CoalgebraElement::zeros(n);
        for i in 0..n {
            let dz = AlgebraElement::<T>::basis(n, i).scale(step);
            let up = PhasePoint { h: p.h.clone(), z: &p.z + &dz };
            let dn = PhasePoint { h: p.h.clone(), z: &p.z - &dz };
            fiber[i] = (f.value(&up) - f.value(&dn)) / two;
        }
        let mut group = CoalgebraElement::zeros(n);
        if !f.left_invariant {
            let tower = self.tower();
            for i in 0..n {
                let e = AlgebraElement::<T>::basis(n, i);
                let up = PhasePoint { h: tower.mul(&p.h, &tower.exp(&e.scale(step))?), z: p.z.clone() };
                let dn = PhasePoint { h: tower.mul(&p.h, &tower.exp(&e.scale(-step))?), z: p.z.clone() };
                group[i] = (f.value(&up) - f.value(&dn)) / two;
            }
        }
        Ok(Differential { group, fiber })
    }

    /// Checks a supplied differential against finite differences at `points`.
    pub fn validate_differential(&self, f: &Observable<'_, T>, points: &[PhasePoint<T>]) -> Result<()> {
        if f.differential.is_none() {
            return Ok(());
        }
        for p in points {
            let exact = self.differential(f, p)?;
            let fd = self.differential_fd(f, p, T::lit(FD_STEP))?;
            let scale = T::one() + exact.group.norm_inf().max(exact.fiber.norm_inf());
            let r = exact.group.max_diff(&fd.group).max(exact.fiber.max_diff(&fd.fiber)) / scale;
            if r > T::lit(DIFFERENTIAL_TOL) {
                return Err(Error::DifferentialMismatch(r.as_f64()));
            }
        }
        Ok(())
    }
}
