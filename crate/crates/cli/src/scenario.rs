//! Scenario files.
//!
//! Algebra coefficients are in descriptor order: `X1 X2 X3 E iE H` at level 1,
//! and the base block followed by the fiber block at level 2. Group elements
//! are given as their flattened reals: the 2×2 matrix row-major with re/im
//! interleaved, then (level 2) the six fiber coefficients.

use std::path::{Path, PathBuf};

use aks_core::aks::Sl2cScenario;
use aks_core::algebra::AlgebraElement;
use aks_core::dynamics::{sample_times, CollectiveHamiltonian, ComplexKilling, FnHamiltonian, PhaseState, QuadraticKm};
use aks_core::group::{GroupElement, Mat2};
use aks_core::phase::{Fiber, PhaseSpace};
use aks_core::sampling::Sampler;
use aks_core::sl2c;
use serde::Deserialize;

use crate::exit::{config_error, CliResult};

pub const DEFAULT_DT: f64 = 1e-3;
pub const DEFAULT_SAMPLES: usize = 21;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub level: usize,
    pub base_point: BasePoint,
    pub initial: Initial,
    pub hamiltonian: HamiltonianKind,
    pub t_span: [f64; 2],
    #[serde(default)]
    pub dt: Option<f64>,
    #[serde(default)]
    pub samples: Option<usize>,
    #[serde(default)]
    pub outputs: Outputs,
}

/// `h₋ = [[a, b + ic], [0, 1/a]]`, with the level-2 fiber slot `w` in `𝔟`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasePoint {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    #[serde(default)]
    pub w: Option<Vec<f64>>,
    pub z_minus: Vec<f64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Initial {
    /// `(h₊, Z)` directly.
    State { h_plus: Vec<f64>, z: Vec<f64> },
    /// `h₊` and `Γ∘`; `Z = σ⁻¹γ Ad_{h₋⁻¹}Γ∘`.
    Gamma { h_plus: Vec<f64>, gamma0: Vec<f64> },
    /// `h₊ = e`, `Z = (X₀⁺, Y₀⁺)` with both in `su(2)`; level 2 only.
    Sl2c { x0_plus: [f64; 3], y0_plus: [f64; 3] },
    /// Unit `X₀⁺` and `Y₀⁺ ∈ [−1, 1]³` drawn from `--seed`; level 2 only.
    RandomSl2c,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HamiltonianKind {
    QuadraticKm,
    Sl2cH2,
    Zero,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Outputs {
    pub trajectory: Option<PathBuf>,
    pub invariants: Option<PathBuf>,
    pub aks: Option<PathBuf>,
}

/// Command-line overrides of the numerical settings.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub dt: Option<f64>,
    pub t_end: Option<f64>,
    pub samples: Option<usize>,
    pub seed: u64,
}

/// A validated scenario with its phase space, fiber and initial state built.
pub struct Prepared {
    pub scenario: Scenario,
    pub space: PhaseSpace<f64>,
    pub fiber: Fiber<f64>,
    pub ham: Box<dyn CollectiveHamiltonian<f64>>,
    pub initial: PhaseState<f64>,
    /// `(X₀⁺, Y₀⁺)` when the initial data came in that form.
    pub su2_data: Option<(AlgebraElement<f64>, AlgebraElement<f64>)>,
    pub times: Vec<f64>,
    pub dt: f64,
    pub character_defect: f64,
}

fn field<T>(name: &str, ok: bool, value: T, why: &str) -> CliResult<T> {
    if ok {
        Ok(value)
    } else {
        Err(config_error(format!("field `{name}`: {why}")))
    }
}

fn coefficients(name: &str, v: &[f64], dim: usize) -> CliResult<AlgebraElement<f64>> {
    field(name, v.len() == dim, (), &format!("expected {dim} coefficients, found {}", v.len()))?;
    field(name, v.iter().all(|x| x.is_finite()), AlgebraElement(v.to_vec()), "non-finite entry")
}

impl Scenario {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| config_error(format!("cannot read scenario {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| config_error(format!("scenario {}: {e}", path.display())))
    }

    fn depth(&self) -> CliResult<usize> {
        match self.level {
            1 | 2 => Ok(self.level - 1),
            _ => Err(config_error("field `level`: must be 1 or 2")),
        }
    }

    pub fn prepare(self, overrides: &Overrides) -> CliResult<Prepared> {
        let depth = self.depth()?;
        let [t0, scenario_end] = self.t_span;
        let t1 = overrides.t_end.unwrap_or(scenario_end);
        field("t_span", t0.is_finite() && t1.is_finite() && t1 > t0, (), "need finite t0 < t1")?;
        field("t_span", t0 == 0.0, (), "trajectories start at t0 = 0")?;
        let dt = overrides.dt.or(self.dt).unwrap_or(DEFAULT_DT);
        field("dt", dt.is_finite() && dt > 0.0, (), "must be positive")?;
        let samples = overrides.samples.or(self.samples).unwrap_or(DEFAULT_SAMPLES);
        field("samples", samples >= 2, (), "need at least 2")?;

        let space = PhaseSpace::<f64>::sl2c(depth);
        let dim = space.dim();
        let bp = &self.base_point;
        field("base_point.a", bp.a.is_finite() && bp.a > 0.0, (), "must be positive")?;
        let root = Mat2::new(re(bp.a), num_complex::Complex::new(bp.b, bp.c), re(0.0), re(1.0 / bp.a));
        let h_minus = match (depth, &bp.w) {
            (0, None) => GroupElement::Matrix(root),
            (0, Some(_)) => return Err(config_error("field `base_point.w`: only allowed at level 2")),
            (_, Some(w)) => {
                let w = coefficients("base_point.w", w, sl2c::DIM)?;
                let off = sl2c::SU2.iter().fold(0.0f64, |m, &i| m.max(w[i].abs()));
                field("base_point.w", off == 0.0, (), "must lie in b (X1, X2, X3 slots zero)")?;
                GroupElement::pair(GroupElement::Matrix(root), w)
            }
            (_, None) => return Err(config_error("field `base_point.w`: required at level 2")),
        };
        let z_minus = coefficients("base_point.z_minus", &bp.z_minus, dim)?;
        let fiber = space.fiber(h_minus, z_minus).map_err(|e| config_error(format!("field `base_point`: {e}")))?;
        let character_defect = space.character_defect(&fiber.z_minus);

        let ham: Box<dyn CollectiveHamiltonian<f64>> = match self.hamiltonian {
            HamiltonianKind::QuadraticKm => Box::new(QuadraticKm::new(space.level())),
            HamiltonianKind::Sl2cH2 => Box::new(
                ComplexKilling::new(space.level()).map_err(|e| config_error(format!("field `hamiltonian`: {e}")))?,
            ),
            HamiltonianKind::Zero => Box::new(FnHamiltonian::new(
                "zero",
                |_: &aks_core::algebra::CoalgebraElement<f64>| 0.0,
                |eta: &aks_core::algebra::CoalgebraElement<f64>| AlgebraElement::zeros(eta.dim()),
            )),
        };

        let group = |name: &str, v: &[f64]| -> CliResult<GroupElement<f64>> {
            GroupElement::unflatten(depth, v).map_err(|e| config_error(format!("field `{name}`: {e}")))
        };
        let (h_plus, z, su2_data) = match &self.initial {
            Initial::State { h_plus, z } => {
                (group("initial.h_plus", h_plus)?, coefficients("initial.z", z, dim)?, None)
            }
            Initial::Gamma { h_plus, gamma0 } => {
                let gamma0 = coefficients("initial.gamma0", gamma0, dim)?;
                let z = space.sigma_gamma(&space.tower().adjoint_inv(&fiber.h_minus, &gamma0));
                (group("initial.h_plus", h_plus)?, z, None)
            }
            Initial::Sl2c { x0_plus, y0_plus } => {
                field("initial", depth == 1, (), "kind `sl2c` needs level 2")?;
                let (x, y) = (sl2c::from_su2(*x0_plus), sl2c::from_su2(*y0_plus));
                (space.identity(), &AlgebraElement::concat(&x, &y) + &fiber.z_minus, Some((x, y)))
            }
            Initial::RandomSl2c => {
                field("initial", depth == 1, (), "kind `random_sl2c` needs level 2")?;
                let drawn = Sl2cScenario::<f64>::random(&mut Sampler::new(overrides.seed))
                    .map_err(|e| config_error(format!("field `initial`: {e}")))?;
                let z = &drawn.initial.z + &fiber.z_minus;
                (space.identity(), z, Some((drawn.x0, drawn.y0)))
            }
        };
        let initial = PhaseState::new(h_plus, z);
        {
            let sys = aks_core::dynamics::CollectiveSystem::new(&space, &fiber, ham.as_ref());
            sys.validate_state(&initial).map_err(|e| config_error(format!("field `initial`: {e}")))?;
        }
        let times = sample_times(t1, samples);
        Ok(Prepared { scenario: self, space, fiber, ham, initial, su2_data, times, dt, character_defect })
    }
}

fn re(v: f64) -> num_complex::Complex<f64> {
    num_complex::Complex::new(v, 0.0)
}

impl Prepared {
    pub fn system(&self) -> aks_core::dynamics::CollectiveSystem<'_, f64> {
        aks_core::dynamics::CollectiveSystem::new(&self.space, &self.fiber, self.ham.as_ref())
    }

    pub fn output(&self, dir: &Path, chosen: &Option<PathBuf>, suffix: &str) -> PathBuf {
        let name = chosen.clone().unwrap_or_else(|| PathBuf::from(format!("{}-{suffix}.csv", self.scenario.name)));
        dir.join(name)
    }
}
