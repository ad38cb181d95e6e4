use crate::algebra::{AlgebraElement, Half};
use crate::dynamics::rhs::CollectiveSystem;
use crate::dynamics::state::PhaseState;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::scalar::Real;
use crate::tower::flat_len;

/// Largest condition number of the SL(2,C) part of `h₊` or `g₋` tolerated
/// before an integration is declared broken down.
pub const MAX_GROUP_CONDITION: f64 = 1e10;

/// Autonomous ODE on a flat vector with an optional projection applied after
/// every step.
pub trait OdeSystem<T: Real> {
    fn rhs(&self, t: T, y: &[T]) -> Result<Vec<T>>;

    fn project(&self, _y: &mut [T]) -> Result<()> {
        Ok(())
    }
}

fn axpy<T: Real>(y: &[T], a: T, k: &[T]) -> Vec<T> {
    y.iter().zip(k).map(|(&u, &v)| u + a * v).collect()
}

/// One classical Runge-Kutta step.
pub fn rk4_step<T: Real, S: OdeSystem<T> + ?Sized>(sys: &S, t: T, y: &[T], h: T) -> Result<Vec<T>> {
    let half = h * T::lit(0.5);
    let k1 = sys.rhs(t, y)?;
    let k2 = sys.rhs(t + half, &axpy(y, half, &k1))?;
    let k3 = sys.rhs(t + half, &axpy(y, half, &k2))?;
    let k4 = sys.rhs(t + h, &axpy(y, h, &k3))?;
    let sixth = h / T::lit(6.0);
    Ok(y.iter().enumerate().map(|(i, &v)| v + sixth * (k1[i] + T::lit(2.0) * (k2[i] + k3[i]) + k4[i])).collect())
}

/// Integrates from `t0` and records the state at each of `times`, which must
/// be non-decreasing and start at or after `t0`. Each interval is covered by
/// equal substeps no longer than `dt`.
pub fn integrate_flat<T: Real, S: OdeSystem<T> + ?Sized>(
    sys: &S,
    y0: &[T],
    t0: T,
    times: &[T],
    dt: T,
) -> Result<Vec<Vec<T>>> {
    if !dt.is_finite() || dt <= T::zero() {
        return Err(Error::InvalidInput(format!("time step must be positive, got {dt}")));
    }
    let mut y = y0.to_vec();
    let mut t = t0;
    let mut out = Vec::with_capacity(times.len());
    for &target in times {
        if target < t {
            return Err(Error::InvalidInput("sample times must be non-decreasing".into()));
        }
        let span = target - t;
        let steps = (span / dt).ceil().to_usize().unwrap_or(0);
        if steps > 0 {
            let h = span / T::lit(steps as f64);
            for _ in 0..steps {
                y = rk4_step(sys, t, &y, h)?;
                t += h;
                if y.iter().any(|v| !v.is_finite()) {
                    return Err(Error::NumericalBreakdown { t: t.as_f64(), reason: "non-finite state".into() });
                }
                sys.project(&mut y)?;
            }
        }
        t = target;
        out.push(y.clone());
    }
    Ok(out)
}

/// Evenly spaced sample times `0, t_end/(n−1), …, t_end`.
pub fn sample_times<T: Real>(t_end: T, samples: usize) -> Vec<T> {
    match samples {
        0 => Vec::new(),
        1 => vec![T::zero()],
        n => (0..n).map(|k| t_end * T::lit(k as f64) / T::lit((n - 1) as f64)).collect(),
    }
}

impl<'a, T: Real> CollectiveSystem<'a, T> {
    fn layout(&self) -> (usize, usize) {
        let g = flat_len(self.space.depth());
        (g, self.space.dim())
    }

    pub fn pack(&self, s: &PhaseState<T>) -> Vec<T> {
        let mut y = s.h_plus.flatten();
        y.extend_from_slice(&s.z.0);
        y.extend(s.g_minus.flatten());
        y
    }

    pub fn unpack(&self, t: T, y: &[T]) -> Result<PhaseState<T>> {
        let (g, n) = self.layout();
        let d = self.space.depth();
        Ok(PhaseState {
            t,
            h_plus: GroupElement::unflatten(d, &y[..g])?,
            z: AlgebraElement::from_slice(&y[g..g + n]),
            g_minus: GroupElement::unflatten(d, &y[g + n..])?,
        })
    }

    fn check_conditioning(&self, t: T, s: &PhaseState<T>) -> Result<()> {
        for g in [&s.h_plus, &s.g_minus] {
            let c = g.root_matrix().condition();
            if c.is_nan() || c > T::lit(MAX_GROUP_CONDITION) {
                return Err(Error::NumericalBreakdown {
                    t: t.as_f64(),
                    reason: format!("group element condition number {:.3e}", c.as_f64()),
                });
            }
        }
        Ok(())
    }

    /// Integrates the collective equations with RK4 and records the state at
    /// each of `times`.
    pub fn integrate(&self, initial: &PhaseState<T>, times: &[T], dt: T) -> Result<Vec<PhaseState<T>>> {
        self.validate_state(initial)?;
        let flat = integrate_flat(self, &self.pack(initial), initial.t, times, dt)?;
        flat.iter().zip(times).map(|(y, &t)| self.unpack(t, y)).collect()
    }
}

impl<'a, T: Real> OdeSystem<T> for CollectiveSystem<'a, T> {
    fn rhs(&self, t: T, y: &[T]) -> Result<Vec<T>> {
        let s = self.unpack(t, y)?;
        self.check_conditioning(t, &s)?;
        let rate = self.collective_rhs(&s);
        let tower = self.space.tower();
        let mut out = tower.coord_velocity(&s.h_plus, &rate.h_plus_body);
        out.extend_from_slice(&rate.z.0);
        out.extend(tower.coord_velocity(&s.g_minus, &rate.g_minus_body));
        Ok(out)
    }

    fn project(&self, y: &mut [T]) -> Result<()> {
        let (g, n) = self.layout();
        let tower = self.space.tower();
        let l = self.space.level();
        let s = self.unpack(T::zero(), y)?;
        let hp = tower.reproject(&s.h_plus, Half::Plus).flatten();
        let z = &l.project(&s.z, Half::Plus) + &self.fiber.z_minus;
        let gm = tower.reproject(&s.g_minus, Half::Minus).flatten();
        y[..g].copy_from_slice(&hp);
        y[g..g + n].copy_from_slice(&z.0);
        y[g + n..].copy_from_slice(&gm);
        Ok(())
    }
}
