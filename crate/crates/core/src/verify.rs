//! Property suites run by the `verify` command.

use std::fmt;
use std::str::FromStr;

use crate::aks::{self, AksInitialData, Sl2cScenario};
use crate::algebra::io::DescriptorFile;
use crate::algebra::{character_space, AlgebraElement, CoalgebraElement, Half};
use crate::brackets::{dirac_bracket_sl2c, monopole_density, monopole_density_trace, Differential};
use crate::dynamics::{legendre_residual, rk4_step, sample_times, GammaForm, OdeSystem};
use crate::error::{Error, Result};
use crate::group::{exp_matrix, exp_su2, iwasawa, GroupElement, Mat2};
use crate::phase::PhaseSpace;
use crate::sampling::Sampler;
use crate::sl2c;
use crate::tower::Tower;

/// One measured property.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub detail: Option<String>,
}

impl Check {
    fn new(suite: &'static str, name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self { suite, name: name.into(), residual, tolerance, detail: None }
    }

    fn from_result(suite: &'static str, name: impl Into<String>, r: Result<f64>, tolerance: f64) -> Self {
        match r {
            Ok(v) => Self::new(suite, name, v, tolerance),
            Err(e) => Self { detail: Some(e.to_string()), ..Self::new(suite, name, f64::INFINITY, tolerance) },
        }
    }

    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {:<9} {:<48} residual {:.3e} (tol {:.0e})",
            self.suite, self.name, self.residual, self.tolerance
        )?;
        if let Some(d) = &self.detail {
            write!(f, " {d}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    Groups,
    Brackets,
    Dynamics,
    Aks,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "algebra" => Self::Algebra,
            "groups" => Self::Groups,
            "brackets" => Self::Brackets,
            "dynamics" => Self::Dynamics,
            "aks" => Self::Aks,
            "all" => Self::All,
            other => return Err(Error::InvalidInput(format!("unknown suite '{other}'"))),
        })
    }
}

pub fn run(suite: Suite, seed: u64) -> Vec<Check> {
    let mut s = Sampler::new(seed);
    match suite {
        Suite::Algebra => algebra(&mut s),
        Suite::Groups => groups(&mut s),
        Suite::Brackets => brackets(&mut s),
        Suite::Dynamics => dynamics(&mut s),
        Suite::Aks => aks_suite(&mut s),
        Suite::All => {
            let mut out = algebra(&mut s);
            out.extend(groups(&mut s));
            out.extend(brackets(&mut s));
            out.extend(dynamics(&mut s));
            out.extend(aks_suite(&mut s));
            out
        }
    }
}

/// Antisymmetry, Jacobi (with the worst triple named), form invariance and
/// isotropy for a descriptor read from disk.
pub fn verify_descriptor(file: &DescriptorFile) -> Vec<Check> {
    const S: &str = "algebra";
    let alg = file.algebra_unchecked::<f64>();
    let mut out = vec![Check::new(S, "descriptor antisymmetry", alg.antisymmetry_defect(), 1e-12)];
    let v = alg.jacobi_defect();
    let (i, j, k) = v.triple;
    let labels = alg.labels();
    let mut jacobi = Check::new(S, "descriptor Jacobi identity", v.residual, 1e-12);
    if !jacobi.passed() {
        jacobi.detail = Some(format!("worst triple ({}, {}, {})", labels[i], labels[j], labels[k]));
    }
    out.push(jacobi);
    match file.into_parts::<f64>(f64::INFINITY) {
        Ok((alg, form, split)) => {
            out.push(Check::new(S, "descriptor form ad-invariance", form.invariance_defect(&alg), 1e-12));
            out.push(Check::new(S, "descriptor isotropy of both halves", split.isotropy_defect(&form), 1e-12));
        }
        Err(e) => out.push(Check::from_result(S, "descriptor form and splitting", Err(e), 0.0)),
    }
    out
}

fn algebra(s: &mut Sampler) -> Vec<Check> {
    const S: &str = "algebra";
    let tower = Tower::<f64>::sl2c(2);
    let mut out = Vec::new();
    for m in 0..=2 {
        let l = tower.level(m);
        out.push(Check::new(S, format!("antisymmetry level {m}"), l.algebra.antisymmetry_defect(), 0.0));
        out.push(Check::new(S, format!("Jacobi identity level {m}"), l.algebra.jacobi_defect().residual, 0.0));
        out.push(Check::new(
            S,
            format!("isotropy of both halves level {m}"),
            l.splitting.isotropy_defect(&l.form),
            0.0,
        ));
        out.push(Check::new(S, format!("form ad-invariance level {m}"), l.form.invariance_defect(&l.algebra), 1e-12));
    }
    let l0 = tower.level(0);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let g = GroupElement::Matrix(s.sl2c());
        let (x, y) = (s.algebra(6), s.algebra(6));
        let moved = l0.pair(&tower.adjoint(&g, &x), &tower.adjoint(&g, &y));
        worst = worst.max((moved - l0.pair(&x, &y)).abs());
    }
    out.push(Check::new(S, "Ad-invariance of k0 (100 samples)", worst, 1e-10));
    let ch = character_space(&l0.algebra, &sl2c::BOREL).map(|basis| {
        let dim_err = (basis.len() as f64 - 1.0).abs();
        let off_h = basis
            .iter()
            .map(|v| (0..5).map(|i| v[i].abs()).fold(0.0, f64::max) / v.norm_inf().max(f64::MIN_POSITIVE))
            .fold(0.0, f64::max);
        dim_err + off_h
    });
    out.push(Check::from_result(S, "characters of b are span{h}", ch, 1e-12));
    out
}

fn groups(s: &mut Sampler) -> Vec<Check> {
    const S: &str = "groups";
    let tower = Tower::<f64>::sl2c(2);
    let mut out = Vec::new();
    let mut worst = 0.0f64;
    let iw: Result<f64> = (0..1000).try_fold(0.0f64, |acc, _| {
        let g: Mat2<f64> = s.sl2c();
        let (u, b) = iwasawa(&g)?;
        Ok(acc.max((u * b).max_abs_diff(&g)).max(u.unitarity_defect()).max(b.borel_defect()))
    });
    out.push(Check::from_result(S, "Iwasawa round trip (1000 samples)", iw, 1e-12));
    for _ in 0..50 {
        let v = s.unit3::<f64>();
        let t = s.uniform::<f64>(-2.0, 2.0);
        let x = sl2c::from_su2(v);
        let r = exp_su2(&x, t).and_then(|a| {
            let ix = AlgebraElement(sl2c::j_matrix::<f64>().mul_vec(&x.0)).scale(0.5 * t);
            Ok(a.max_abs_diff(&exp_matrix(&sl2c::realize(&ix))?))
        });
        worst = worst.max(r.unwrap_or(f64::INFINITY));
    }
    out.push(Check::new(S, "exp_su2 vs series exponential", worst, 1e-12));
    for d in 1..=2 {
        let mut assoc = 0.0f64;
        let mut round = 0.0f64;
        let mut flow = 0.0f64;
        for _ in 0..20 {
            let (a, b, c) = (s.group(&tower, d), s.group(&tower, d), s.group(&tower, d));
            let left = tower.mul(&tower.mul(&a, &b), &c);
            let right = tower.mul(&a, &tower.mul(&b, &c));
            assoc = assoc
                .max(left.max_abs_diff(&right) / (1.0 + left.flatten().iter().fold(0.0f64, |m, v| m.max(v.abs()))));
            let r = tower.factorize(&a).map(|(p, m)| {
                tower.mul(&p, &m).max_abs_diff(&a)
                    + tower.subgroup_defect(&p, Half::Plus)
                    + tower.subgroup_defect(&m, Half::Minus)
            });
            round = round.max(r.unwrap_or(f64::INFINITY));
            let x = s.algebra(tower.level(d).dim()).scale(0.5);
            let (t1, t2) = (s.uniform::<f64>(-1.0, 1.0), s.uniform::<f64>(-1.0, 1.0));
            let r = (|| -> Result<f64> {
                let lhs = tower.mul(&tower.exp(&x.scale(t1))?, &tower.exp(&x.scale(t2))?);
                Ok(lhs.max_abs_diff(&tower.exp(&x.scale(t1 + t2))?))
            })();
            flow = flow.max(r.unwrap_or(f64::INFINITY));
        }
        out.push(Check::new(S, format!("associativity depth {d}"), assoc, 1e-12));
        out.push(Check::new(S, format!("factorization round trip depth {d}"), round, 1e-10));
        out.push(Check::new(S, format!("one-parameter subgroup depth {d}"), flow, 1e-10));
    }
    let mut proj = 0.0f64;
    for _ in 0..100 {
        let b: Mat2<f64> = s.borel();
        let x = s.algebra(6);
        let g = GroupElement::Matrix(b);
        for half in [Half::Plus, Half::Minus] {
            let closed = sl2c::projector_borel(&b, &x, half).map(|c| c.max_diff(&tower.projector(&g, &x, half)));
            proj = proj.max(closed.unwrap_or(f64::INFINITY));
        }
    }
    out.push(Check::new(S, "projectors vs closed forms (100 samples)", proj, 1e-12));
    out
}

fn brackets(s: &mut Sampler) -> Vec<Check> {
    const S: &str = "brackets";
    let mut out = Vec::new();
    let space = PhaseSpace::<f64>::sl2c(0);
    let l = space.level();
    let (mut anti, mut fast) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let b = s.borel::<f64>();
        let fiber = match space.fiber(GroupElement::Matrix(b), AlgebraElement::zeros(6)) {
            Ok(f) => f,
            Err(e) => {
                out.push(Check::from_result(S, "fiber construction", Err(e), 0.0));
                return out;
            }
        };
        let z = l.project(&s.algebra(6), Half::Plus);
        let diff = |s: &mut Sampler| Differential { group: CoalgebraElement::zeros(6), fiber: s.coalgebra(6) };
        let (df, dg) = (diff(s), diff(s));
        let ab =
            space.dirac_from_differentials(&fiber, &df, &dg, &z) + space.dirac_from_differentials(&fiber, &dg, &df, &z);
        anti = anti.max(ab.abs());
        let (f3, g3) = (sl2c::coalgebra_su2(&df.fiber), sl2c::coalgebra_su2(&dg.fiber));
        let su = |d: &Differential<f64>| Differential {
            group: CoalgebraElement::zeros(6),
            fiber: CoalgebraElement(sl2c::from_su2(sl2c::coalgebra_su2(&d.fiber)).0),
        };
        let generic = space.dirac_from_differentials(&fiber, &su(&df), &su(&dg), &z);
        fast = fast.max((generic - dirac_bracket_sl2c(&b, &sl2c::su2_vector(&z), &f3, &g3)).abs());
    }
    out.push(Check::new(S, "Dirac bracket antisymmetry", anti, 1e-12));
    out.push(Check::new(S, "SL(2,C) fast path vs generic bracket", fast, 1e-8));
    let mut rho = 0.0f64;
    for _ in 0..20 {
        let b = s.borel::<f64>();
        let (a, bb, c) = sl2c::borel_params(&b);
        rho = rho.max((monopole_density(a, bb, c) - monopole_density_trace(&b)).abs());
    }
    rho = rho.max((monopole_density(2.0f64, 0.0, 0.0) - 15.0 / 16.0).abs());
    rho = rho.max((monopole_density(1.0f64, 1.0, 0.0) + 1.0).abs());
    out.push(Check::new(S, "monopole density formula vs trace", rho, 1e-12));
    let space1 = PhaseSpace::<f64>::sl2c(1);
    let tower = space1.tower();
    let (mut pl, mut dress) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let g = s.subgroup(tower, 1, Half::Plus);
        let xi = space1.level().gamma(&s.half_algebra(tower, 1, Half::Minus));
        let eta = space1.level().gamma(&s.half_algebra(tower, 1, Half::Minus));
        let r =
            space1.pl_bivector(&g, &xi, &eta).and_then(|a| Ok((a - space1.pl_bivector_block(&g, &xi, &eta)?).abs()));
        pl = pl.max(r.unwrap_or(f64::INFINITY));
        let y = s.half_algebra(tower, 1, Half::Minus);
        let r = space1
            .dressing_vector(&g, &y)
            .and_then(|v| Ok(v.max_diff(&space1.dressing_vector_by_factorization(&g, &y, 1e-6)?)));
        dress = dress.max(r.unwrap_or(f64::INFINITY));
    }
    out.push(Check::new(S, "Poisson-Lie bivector block form", pl, 1e-10));
    out.push(Check::new(S, "dressing vector vs factorization derivative", dress, 1e-5));
    out
}

struct Linear {
    a: [[f64; 2]; 2],
}

impl OdeSystem<f64> for Linear {
    fn rhs(&self, _t: f64, y: &[f64]) -> Result<Vec<f64>> {
        Ok(vec![self.a[0][0] * y[0] + self.a[0][1] * y[1], self.a[1][0] * y[0] + self.a[1][1] * y[1]])
    }
}

/// Observed RK4 order on `ẋ = Ax` with `A = [[−½, 1], [−1, −½]]` over `[0, 1]`.
pub fn rk4_order() -> Result<f64> {
    let sys = Linear { a: [[-0.5, 1.0], [-1.0, -0.5]] };
    let exact = |t: f64| {
        let d = (-0.5 * t).exp();
        [d * t.cos(), -d * t.sin()]
    };
    let err = |dt: f64| -> Result<f64> {
        let n = (1.0 / dt).round() as usize;
        let mut y = vec![1.0, 0.0];
        for k in 0..n {
            y = rk4_step(&sys, k as f64 * dt, &y, dt)?;
        }
        let e = exact(n as f64 * dt);
        Ok((y[0] - e[0]).abs().max((y[1] - e[1]).abs()))
    };
    let errs = [err(1e-2)?, err(5e-3)?, err(2.5e-3)?];
    Ok(errs.windows(2).map(|w| (w[0] / w[1]).log2()).fold(f64::INFINITY, f64::min))
}

fn dynamics(s: &mut Sampler) -> Vec<Check> {
    const S: &str = "dynamics";
    let mut out = Vec::new();
    out.push(Check::from_result(S, "RK4 convergence order deficit (3.9 - order)", rk4_order().map(|o| 3.9 - o), 0.0));
    let mut forms = 0.0f64;
    let mut legendre = 0.0f64;
    for _ in 0..10 {
        let sc = match Sl2cScenario::<f64>::random(s) {
            Ok(sc) => sc,
            Err(e) => {
                out.push(Check::from_result(S, "scenario construction", Err(e), 0.0));
                return out;
            }
        };
        let sys = sc.system();
        let og = sys.to_omega_gamma(&sc.initial);
        let rates =
            [GammaForm::Projected, GammaForm::ProjectedMinus, GammaForm::Lax].map(|f| sys.omega_gamma_rhs(&og, f).1);
        forms = forms.max(rates[0].max_diff(&rates[1])).max(rates[0].max_diff(&rates[2]));
        let eta = sc.space.level().sigma(&sc.initial.z);
        legendre = legendre.max(legendre_residual(&sc.ham, sc.space.level(), &eta, 1e-5));
    }
    out.push(Check::new(S, "three Gamma equations agree", forms, 1e-10));
    out.push(Check::new(S, "Legendre transform of -Re kappa/16", legendre, 1e-8));
    out
}

fn aks_suite(s: &mut Sampler) -> Vec<Check> {
    const S: &str = "aks";
    let mut out = Vec::new();
    let tower = Tower::<f64>::sl2c(1);
    let mut closed = 0.0f64;
    for _ in 0..50 {
        let x = sl2c::from_su2(s.unit3::<f64>());
        let y = sl2c::from_su2([s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0)]);
        let t = s.uniform::<f64>(-2.0, 2.0);
        let r = (|| -> Result<f64> {
            let cf = aks::sl2c_closed_form(&x, &y, t)?;
            let (p, m) = tower.factorize(&tower.exp(&aks::generator(&x, &y).scale(t))?)?;
            Ok(p.max_abs_diff(&cf.plus()).max(m.max_abs_diff(&cf.minus())))
        })();
        closed = closed.max(r.unwrap_or(f64::INFINITY));
    }
    out.push(Check::new(S, "closed form vs exp + factorize (50 samples)", closed, 1e-10));
    let mut adp = 0.0f64;
    for _ in 0..20 {
        let x = sl2c::from_su2(s.unit3::<f64>());
        let y = sl2c::from_su2([s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0)]);
        for n in 0..=8 {
            let r =
                aks::ad_power_closed(&x, &y, n).map(|c| c.max_diff(&aks::ad_power(&x, &y, n)) / 2f64.powi(n as i32));
            adp = adp.max(r.unwrap_or(f64::INFINITY));
        }
    }
    out.push(Check::new(S, "ad-power closed form vs iteration (n <= 8)", adp, 1e-14));
    let (mut theta, mut vel) = (0.0f64, 0.0f64);
    for _ in 0..3 {
        let r = (|| -> Result<(f64, f64)> {
            let sc = Sl2cScenario::<f64>::random(s)?;
            let sys = sc.system();
            let data = AksInitialData::from_state(&sys, &sc.initial)?;
            let samples = aks::solve_by_factorization(&sys, &data, &sample_times(2.0, 21))?;
            let mut th = 0.0f64;
            for smp in &samples {
                th = th.max(aks::theta_map(&sys, &smp.k, &smp.gamma)?.max_diff(&data.theta0));
            }
            Ok((th, aks::velocity_residual(&sys, &data, 1.0, 1e-3)?))
        })();
        let (a, b) = r.unwrap_or((f64::INFINITY, f64::INFINITY));
        theta = theta.max(a);
        vel = vel.max(b);
    }
    out.push(Check::new(S, "Theta constant along exact solution", theta, 1e-12));
    out.push(Check::new(S, "factor velocities match Omega", vel, 1e-6));
    out
}
