use aks_core::algebra::{dressing_component, AlgebraElement, CoalgebraElement, Half};
use aks_core::brackets::{Differential, Observable};
use aks_core::dynamics::{
    integrate_flat, legendre_residual, sample_times, CollectiveHamiltonian, CollectiveSystem, ComplexKilling,
    FnHamiltonian, GammaForm, NestedState, OdeSystem, PhaseState, QuadraticKm,
};
use aks_core::group::GroupElement;
use aks_core::phase::{Fiber, PhaseSpace};
use aks_core::sampling::Sampler;
use aks_core::Result;

/// Fiber satisfying the character condition: `Z₋ ∈ span{H}` at depth 0 and
/// `Z₋ = 0` above.
fn admissible_fiber(s: &mut Sampler, space: &PhaseSpace<f64>) -> Fiber<f64> {
    let mut z_minus = AlgebraElement::zeros(space.dim());
    if space.depth() == 0 {
        z_minus[5] = s.uniform(-1.0, 1.0);
    }
    let fiber = space.fiber(s.subgroup(space.tower(), space.depth(), Half::Minus), z_minus).unwrap();
    assert_eq!(space.character_defect(&fiber.z_minus), 0.0);
    fiber
}

fn random_state(s: &mut Sampler, space: &PhaseSpace<f64>, fiber: &Fiber<f64>) -> PhaseState<f64> {
    let (tower, d) = (space.tower(), space.depth());
    let z = &s.half_algebra(tower, d, Half::Plus) + &fiber.z_minus;
    PhaseState::new(s.subgroup(tower, d, Half::Plus), z)
}

fn energy_observable<'a>(sys: CollectiveSystem<'a, f64>) -> Observable<'a, f64> {
    // 𝗁(σZ) is Ad-invariant, so it depends on Z alone; δH = σℒ(σZ).
    Observable::new(move |p| sys.energy(&p.z))
        .with_differential(move |p| Differential {
            group: CoalgebraElement::zeros(p.z.dim()),
            fiber: sys.space.level().sigma(&sys.legendre_of(&p.z)),
        })
        .left_invariant()
}

#[test]
fn collective_rhs_is_the_dirac_hamiltonian_field() {
    let mut s = Sampler::new(1);
    for depth in 0..=1 {
        let space = PhaseSpace::<f64>::sl2c(depth);
        let ham = QuadraticKm::new(space.level());
        let tower = space.tower();
        for _ in 0..5 {
            let fiber = admissible_fiber(&mut s, &space);
            let sys = CollectiveSystem::new(&space, &fiber, &ham);
            let state = random_state(&mut s, &space, &fiber);
            let p = state.point(&space, &fiber);
            let h = energy_observable(sys);
            space.validate_differential(&h, std::slice::from_ref(&p)).unwrap();
            let field = space.hamiltonian_vector_field(&fiber, &h, &p).unwrap();
            let rate = sys.collective_rhs(&state);
            // The point is h₊h₋ with h₋ fixed, so h⁻¹ḣ = Ad_{h₋⁻¹}(h₊⁻¹ḣ₊).
            assert!(tower.adjoint(&fiber.h_minus, &field.body).max_diff(&rate.h_plus_body) < 1e-10);
            assert!(field.fiber.max_diff(&rate.z) < 1e-10);
            let fast =
                space.left_invariant_vector_field(&fiber, &sys.space.level().sigma(&sys.legendre_of(&p.z)), &p.z);
            assert!(fast.max_diff(&field) < 1e-12);
        }
    }
}

#[test]
fn constant_hamiltonian_gives_a_constant_trajectory() {
    let space = PhaseSpace::<f64>::sl2c(1);
    let zero = FnHamiltonian::new(
        "zero",
        |_: &CoalgebraElement<f64>| 0.0,
        |eta: &CoalgebraElement<f64>| AlgebraElement::zeros(eta.dim()),
    );
    let mut s = Sampler::new(2);
    let fiber = admissible_fiber(&mut s, &space);
    let sys = CollectiveSystem::new(&space, &fiber, &zero);
    let state = random_state(&mut s, &space, &fiber);
    let rate = sys.collective_rhs(&state);
    assert_eq!(rate.h_plus_body.norm_inf() + rate.z.norm_inf() + rate.g_minus_body.norm_inf(), 0.0);
    let traj = sys.integrate(&state, &sample_times(1.0, 5), 1e-2).unwrap();
    for st in &traj {
        assert!(st.h_plus.max_abs_diff(&state.h_plus) < 1e-14);
        assert!(st.z.max_diff(&state.z) < 1e-15);
    }
}

#[test]
fn identity_base_reduces_to_the_plus_projection() {
    let space = PhaseSpace::<f64>::sl2c(1);
    let ham = ComplexKilling::new(space.level()).unwrap();
    let fiber = space.fiber(space.identity(), AlgebraElement::zeros(12)).unwrap();
    let sys = CollectiveSystem::new(&space, &fiber, &ham);
    let l = space.level();
    let mut s = Sampler::new(3);
    for _ in 0..5 {
        let state = random_state(&mut s, &space, &fiber);
        let rate = sys.collective_rhs(&state);
        let expected = l.project(&sys.legendre_of(&state.z), Half::Plus);
        assert!(rate.h_plus_body.max_diff(&expected) < 1e-15);
        assert!(l.project(&rate.z, Half::Minus).norm_inf() < 1e-12);
    }

    // ℒ(σZ) ∈ 𝔥₋ freezes the group slot: pick Z = σ⁻¹γ(Y) with Y ∈ 𝔥₋.
    let quad = QuadraticKm::new(l);
    let sys = CollectiveSystem::new(&space, &fiber, &quad);
    let y = s.half_algebra(space.tower(), 1, Half::Minus);
    let state = PhaseState::new(space.identity(), space.sigma_gamma(&y));
    assert_eq!(sys.collective_rhs(&state).h_plus_body.norm_inf(), 0.0);
}

#[test]
fn omega_gamma_coordinates() {
    let mut s = Sampler::new(4);
    let space = PhaseSpace::<f64>::sl2c(1);
    let ham = ComplexKilling::new(space.level()).unwrap();
    let base = space.fiber(space.identity(), AlgebraElement::zeros(12)).unwrap();
    let sys = CollectiveSystem::new(&space, &base, &ham);
    let state = random_state(&mut s, &space, &base);
    let og = sys.to_omega_gamma(&state);
    assert!(og.omega.max_diff(&sys.legendre_of(&state.z)) < 1e-15);
    assert!(og.gamma.max_diff(&space.gamma_sigma(&state.z)) < 1e-15);

    for _ in 0..5 {
        let fiber = admissible_fiber(&mut s, &space);
        let sys = CollectiveSystem::new(&space, &fiber, &ham);
        let state = random_state(&mut s, &space, &fiber);
        let og = sys.to_omega_gamma(&state);
        let back = sys.from_omega_gamma(&og);
        assert!(back.z.max_diff(&state.z) < 1e-12);
        assert!(back.h_plus.max_abs_diff(&state.h_plus) == 0.0);
        assert!(sys.omega_of(&og.gamma).max_diff(&og.omega) < 1e-12);
    }
}

#[test]
fn omega_gamma_forms() {
    let mut s = Sampler::new(5);
    let space = PhaseSpace::<f64>::sl2c(1);
    let l = space.level();
    let quad = QuadraticKm::new(l);
    let fiber = admissible_fiber(&mut s, &space);
    let sys = CollectiveSystem::new(&space, &fiber, &quad);

    // Ω entirely in 𝔥₋: nothing moves.
    let og = sys.to_omega_gamma(&PhaseState::new(
        space.identity(),
        space.sigma_gamma(&s.half_algebra(space.tower(), 1, Half::Minus)),
    ));
    let (plus, rate) = sys.omega_gamma_rhs(&og, GammaForm::Projected);
    assert_eq!(plus.norm_inf() + rate.norm_inf(), 0.0);

    // Quadratic: Ω = Γ and Π₋[Γ, Γ₊] = Π₋[Γ₋, Γ₊].
    let g = s.algebra::<f64>(12);
    let og = aks_core::dynamics::OmegaGamma { t: 0.0, h_plus: space.identity(), omega: g.clone(), gamma: g.clone() };
    let (_, rate) = sys.omega_gamma_rhs(&og, GammaForm::Projected);
    let gm = l.project(&g, Half::Minus);
    let gp = l.project(&g, Half::Plus);
    assert!(rate.max_diff(&l.project(&l.br(&gm, &gp), Half::Minus)) < 1e-15);
    let (_, other) = sys.omega_gamma_rhs(&og, GammaForm::ProjectedMinus);
    assert!(rate.max_diff(&other) < 1e-14);

    let killing = ComplexKilling::new(l).unwrap();
    for _ in 0..10 {
        let fiber = admissible_fiber(&mut s, &space);
        let sys = CollectiveSystem::new(&space, &fiber, &killing);
        let og = sys.to_omega_gamma(&random_state(&mut s, &space, &fiber));
        let forms: Vec<_> = [GammaForm::Projected, GammaForm::ProjectedMinus, GammaForm::Lax]
            .into_iter()
            .map(|f| sys.omega_gamma_rhs(&og, f).1)
            .collect();
        assert!(forms[0].max_diff(&forms[1]) < 1e-10);
        assert!(forms[0].max_diff(&forms[2]) < 1e-10);
        let (full, mixed) = sys.commutator_norms(&og.gamma);
        assert!(full < 1e-10 && mixed < 1e-10);
    }
}

#[test]
fn nested_equations() {
    let mut s = Sampler::new(6);
    let space = PhaseSpace::<f64>::sl2c(1);
    let tower = space.tower();
    let quad = QuadraticKm::new(space.level());
    let base = space.fiber(space.identity(), AlgebraElement::zeros(12)).unwrap();
    let sys = CollectiveSystem::new(&space, &base, &quad);

    // R = 0, N = 0 and Ω̃⁺ = 0 (Γ̃ ∈ 𝔥₋, M = 0) is an equilibrium.
    let rest = NestedState {
        h_plus: s.subgroup(tower, 0, Half::Plus),
        z_plus: s.half_algebra(tower, 0, Half::Plus),
        gamma: s.half_algebra(tower, 0, Half::Minus),
        m: AlgebraElement::zeros(6),
    };
    let rate = sys.nested_rhs(&rest).unwrap();
    let total = rate.h_plus_body.norm_inf() + rate.z_plus.norm_inf() + rate.gamma.norm_inf() + rate.m.norm_inf();
    assert_eq!(total, 0.0);

    // With Z₀⁻ = 0 the shifted and unshifted systems coincide.
    let lower = tower.level(0);
    for _ in 0..5 {
        let h0 = s.subgroup(tower, 0, Half::Minus);
        let fiber = space.fiber(GroupElement::pair(h0, AlgebraElement::zeros(6)), AlgebraElement::zeros(12)).unwrap();
        let sys = CollectiveSystem::new(&space, &fiber, &quad);
        let n = sys.to_nested(&random_state(&mut s, &space, &fiber)).unwrap();
        assert_eq!(sys.nested_rhs(&n).unwrap(), sys.nested_rhs_unshifted(&n).unwrap());
        // Γ̃̇ is the dressing of Γ̃ ∈ 𝔥₋ by Ω̃⁺.
        let omega = sys.omega_of(&AlgebraElement::concat(&n.gamma, &n.m)).halves().0;
        let plus = lower.project(&omega, Half::Plus);
        let dressed =
            dressing_component(&lower.algebra, &lower.splitting, &n.gamma, &plus, Half::Minus, 1e-10).unwrap();
        assert!(dressed.max_diff(&sys.nested_rhs(&n).unwrap().gamma) < 1e-12);
    }

    let flat = PhaseSpace::<f64>::sl2c(0);
    let fiber0 = flat.fiber(flat.identity(), AlgebraElement::zeros(6)).unwrap();
    let quad0 = QuadraticKm::new(flat.level());
    let sys0 = CollectiveSystem::new(&flat, &fiber0, &quad0);
    assert!(sys0.shift().is_err());
}

#[test]
fn nested_round_trip() {
    let mut s = Sampler::new(7);
    let space = PhaseSpace::<f64>::sl2c(1);
    let quad = QuadraticKm::new(space.level());
    let tower = space.tower();
    let h0 = s.subgroup(tower, 0, Half::Minus);
    let fiber =
        space.fiber(GroupElement::pair(h0, s.half_algebra(tower, 0, Half::Minus)), AlgebraElement::zeros(12)).unwrap();
    let sys = CollectiveSystem::new(&space, &fiber, &quad);
    let state = random_state(&mut s, &space, &fiber);
    let back = sys.from_nested(0.0, &sys.to_nested(&state).unwrap()).unwrap();
    assert!(back.z.max_diff(&state.z) < 1e-12);
    assert!(back.h_plus.max_abs_diff(&state.h_plus) < 1e-15);
}

struct Decay;

impl OdeSystem<f64> for Decay {
    fn rhs(&self, _t: f64, y: &[f64]) -> Result<Vec<f64>> {
        Ok(y.iter().map(|v| -v).collect())
    }
}

struct Frozen;

impl OdeSystem<f64> for Frozen {
    fn rhs(&self, _t: f64, y: &[f64]) -> Result<Vec<f64>> {
        Ok(vec![0.0; y.len()])
    }
}

struct Blowup;

impl OdeSystem<f64> for Blowup {
    fn rhs(&self, _t: f64, y: &[f64]) -> Result<Vec<f64>> {
        Ok(y.iter().map(|v| v * v).collect())
    }
}

#[test]
fn integrator_basics() {
    let times = sample_times(2.0, 5);
    assert_eq!(times, vec![0.0, 0.5, 1.0, 1.5, 2.0]);
    let y0 = vec![1.0, -2.0];
    let frozen = integrate_flat(&Frozen, &y0, 0.0, &times, 1e-2).unwrap();
    assert!(frozen.iter().all(|y| *y == y0));
    let decay = integrate_flat(&Decay, &y0, 0.0, &times, 1e-3).unwrap();
    for (t, y) in times.iter().zip(&decay) {
        assert!((y[0] - (-t).exp()).abs() < 1e-12);
    }
    let err = integrate_flat(&Blowup, &[1.0], 0.0, &[0.0, 2.0], 1e-2).unwrap_err();
    assert!(matches!(err, aks_core::Error::NumericalBreakdown { .. }), "{err}");
}

#[test]
fn rk4_trajectories_conserve_the_invariants() {
    let mut s = Sampler::new(8);
    let space = PhaseSpace::<f64>::sl2c(1);
    let ham = ComplexKilling::new(space.level()).unwrap();
    let fiber = admissible_fiber(&mut s, &space);
    let sys = CollectiveSystem::new(&space, &fiber, &ham);
    let state = random_state(&mut s, &space, &fiber);
    let traj = sys.integrate(&state, &sample_times(2.0, 11), 1e-3).unwrap();
    let drift = sys.invariant_drift(&traj).unwrap();
    assert!(drift.theta < 1e-7, "{:e}", drift.theta);
    assert!(drift.energy < 1e-6);
    assert!(drift.casimir < 1e-8 && drift.casimir_j < 1e-8);
    assert!(drift.commutator < 1e-10 && drift.mixed_commutator < 1e-10);
    for st in &traj {
        let p = st.point(&space, &fiber);
        assert!(space.fiber_distance(&fiber, &p).unwrap() <= 1e-9 * (1.0 + st.t));
    }
}

#[test]
fn theta_is_annihilated_by_the_flow() {
    let mut s = Sampler::new(9);
    let space = PhaseSpace::<f64>::sl2c(1);
    let tower = space.tower();
    let ham = ComplexKilling::new(space.level()).unwrap();
    let step = 1e-4;
    for _ in 0..20 {
        let fiber = admissible_fiber(&mut s, &space);
        let sys = CollectiveSystem::new(&space, &fiber, &ham);
        let mut state = random_state(&mut s, &space, &fiber);
        state.g_minus = s.subgroup(tower, 1, Half::Minus);
        let rate = sys.collective_rhs(&state);
        let moved = |eps: f64| PhaseState {
            t: eps,
            h_plus: tower.mul(&state.h_plus, &tower.exp(&rate.h_plus_body.scale(eps)).unwrap()),
            z: &state.z + &rate.z.scale(eps),
            g_minus: tower.mul(&state.g_minus, &tower.exp(&rate.g_minus_body.scale(eps)).unwrap()),
        };
        let derivative = (&sys.theta(&moved(step)) - &sys.theta(&moved(-step))).scale(0.5 / step);
        assert!(derivative.norm_inf() < 1e-8, "{:e}", derivative.norm_inf());
    }
}

#[test]
fn legendre_maps_match_finite_differences() {
    let space = PhaseSpace::<f64>::sl2c(1);
    let l = space.level();
    let mut s = Sampler::new(10);
    let hams: [Box<dyn CollectiveHamiltonian<f64>>; 2] =
        [Box::new(QuadraticKm::new(l)), Box::new(ComplexKilling::new(l).unwrap())];
    for ham in &hams {
        let eta = s.coalgebra(12);
        assert!(legendre_residual(ham.as_ref(), l, &eta, 1e-4) < 1e-8, "{}", ham.name());
    }
    assert!(ComplexKilling::new(PhaseSpace::<f64>::sl2c(0).level()).is_err());
}

#[test]
fn off_fiber_states_are_rejected() {
    let mut s = Sampler::new(11);
    let space = PhaseSpace::<f64>::sl2c(0);
    let quad = QuadraticKm::new(space.level());
    let fiber = admissible_fiber(&mut s, &space);
    let sys = CollectiveSystem::new(&space, &fiber, &quad);
    let mut state = random_state(&mut s, &space, &fiber);
    state.z[3] += 0.5;
    assert!(sys.validate_state(&state).is_err());
    assert!(sys.integrate(&state, &[0.0, 1.0], 1e-2).is_err());
}
