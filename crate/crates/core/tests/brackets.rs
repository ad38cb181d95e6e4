use aks_core::algebra::{AlgebraElement, CoalgebraElement, Half};
use aks_core::brackets::{
    dirac_bracket_sl2c, magnetic_field, monopole_density, monopole_density_trace, Differential, Observable,
};
use aks_core::group::{GroupElement, Mat2};
use aks_core::phase::{Fiber, PhasePoint, PhaseSpace};
use aks_core::sampling::Sampler;
use aks_core::sl2c;

fn random_point(s: &mut Sampler, space: &PhaseSpace<f64>) -> PhasePoint<f64> {
    PhasePoint { h: s.group(space.tower(), space.depth()), z: s.algebra(space.dim()) }
}

/// Random fiber over `(h₋, 0)` and a point on it.
fn random_fiber(s: &mut Sampler, space: &PhaseSpace<f64>) -> (Fiber<f64>, PhasePoint<f64>) {
    let (tower, d) = (space.tower(), space.depth());
    let fiber = space.fiber(s.subgroup(tower, d, Half::Minus), AlgebraElement::zeros(space.dim())).unwrap();
    let p = space.point_on_fiber(&fiber, &s.subgroup(tower, d, Half::Plus), &s.half_algebra(tower, d, Half::Plus));
    (fiber, p.unwrap())
}

fn group_only<'a>(space: &'a PhaseSpace<f64>, x: AlgebraElement<f64>) -> Observable<'a, f64> {
    // F(h) = k(Ad_h x, x): depends on h only.
    Observable::new(move |p: &PhasePoint<f64>| {
        let l = space.level();
        l.pair(&space.tower().adjoint(&p.h, &x), &x)
    })
}

#[test]
fn canonical_bracket_basics() {
    let space = PhaseSpace::<f64>::sl2c(0);
    let mut s = Sampler::new(1);
    for _ in 0..5 {
        let p = random_point(&mut s, &space);
        let f = Observable::linear(s.coalgebra(6));
        assert_eq!(space.canonical_bracket(&f, &f, &p).unwrap(), 0.0);
        let (a, b) = (group_only(&space, s.algebra(6)), group_only(&space, s.algebra(6)));
        assert_eq!(space.canonical_bracket(&a, &b, &p).unwrap(), 0.0);
    }
}

#[test]
fn canonical_bracket_of_linear_observables_matches_matrix_commutators() {
    let space = PhaseSpace::<f64>::sl2c(0);
    let l = space.level();
    let mut s = Sampler::new(2);
    for _ in 0..3 {
        let p = random_point(&mut s, &space);
        let (a, b) = (s.algebra::<f64>(6), s.algebra::<f64>(6));
        // F = (Z, a)_σ so σ⁻¹δF = a.
        let f = Observable::linear(l.sigma(&a));
        let g = Observable::linear(l.sigma(&b));
        let commutator = sl2c::to_coefficients(&sl2c::realize(&a).commutator(&sl2c::realize(&b))).unwrap();
        let expected = -l.sigma(&p.z).pair(&commutator);
        let got = space.canonical_bracket(&f, &g, &p).unwrap();
        assert!((got - expected).abs() < 1e-12 * (1.0 + expected.abs()), "{got} vs {expected}");
    }
}

#[test]
fn dirac_bracket_basics() {
    let mut s = Sampler::new(3);
    for depth in 0..=1 {
        let space = PhaseSpace::<f64>::sl2c(depth);
        let n = space.dim();
        for _ in 0..5 {
            let (fiber, p) = random_fiber(&mut s, &space);
            let f = Observable::linear(s.coalgebra(n));
            assert_eq!(space.dirac_bracket(&fiber, &f, &f, &p).unwrap(), 0.0);
            let g = Observable::linear(s.coalgebra(n));
            let fg = space.dirac_bracket(&fiber, &f, &g, &p).unwrap();
            assert_eq!(fg, -space.dirac_bracket(&fiber, &g, &f, &p).unwrap());
        }
        let (fiber, _) = random_fiber(&mut s, &space);
        let off = PhasePoint { h: s.group(space.tower(), depth), z: s.algebra(n) };
        let f = Observable::linear(s.coalgebra(n));
        assert!(space.dirac_bracket(&fiber, &f, &f, &off).is_err());
    }
}

#[test]
fn dirac_bracket_at_the_identity_base_is_lie_poisson() {
    let space = PhaseSpace::<f64>::sl2c(1);
    let l = space.level();
    let base = space.fiber(space.identity(), AlgebraElement::zeros(12)).unwrap();
    let mut s = Sampler::new(4);
    for _ in 0..5 {
        let p = space
            .point_on_fiber(
                &base,
                &s.subgroup(space.tower(), 1, Half::Plus),
                &s.half_algebra(space.tower(), 1, Half::Plus),
            )
            .unwrap();
        let (a, b) = (s.coalgebra::<f64>(12), s.coalgebra::<f64>(12));
        let u = l.project(&l.sigma_inv(&a), Half::Plus);
        let v = l.project(&l.sigma_inv(&b), Half::Plus);
        let expected = -l.sigma_pair(&p.z, &l.br(&u, &v));
        let got = space.dirac_bracket(&base, &Observable::linear(a), &Observable::linear(b), &p).unwrap();
        assert!((got - expected).abs() < 1e-10);
    }
}

#[test]
fn sl2c_fast_path_at_the_identity_base() {
    let mut s = Sampler::new(5);
    let space = PhaseSpace::<f64>::sl2c(0);
    let fiber = space.fiber(space.identity(), AlgebraElement::zeros(6)).unwrap();
    for _ in 0..10 {
        let z: [f64; 3] = std::array::from_fn(|_| s.uniform(-1.0, 1.0));
        let f: [f64; 3] = std::array::from_fn(|_| s.uniform(-1.0, 1.0));
        let g: [f64; 3] = std::array::from_fn(|_| s.uniform(-1.0, 1.0));
        let cross = [f[1] * g[2] - f[2] * g[1], f[2] * g[0] - f[0] * g[2], f[0] * g[1] - f[1] * g[0]];
        let expected = -16.0 * (cross[0] * z[0] + cross[1] * z[1] + cross[2] * z[2]);
        let fast = dirac_bracket_sl2c(&Mat2::identity(), &z, &f, &g);
        assert!((fast - expected).abs() < 1e-13);
        let lift = |v: [f64; 3]| Differential {
            group: CoalgebraElement::zeros(6),
            fiber: CoalgebraElement(sl2c::from_su2(v).0),
        };
        let generic = space.dirac_from_differentials(&fiber, &lift(f), &lift(g), &sl2c::from_su2(z));
        assert!((generic - expected).abs() < 1e-12);
    }
}

#[test]
fn magnetic_field_spot_values() {
    let z = [0.3, -0.7, 1.1];
    assert_eq!(magnetic_field(1.0, 0.0, 0.0, &z), [0.0, 0.0, 0.0]);
    assert_eq!(monopole_density(1.0, 0.0, 0.0), 0.0);
    assert_eq!(magnetic_field(1.0, 1.0, 0.0, &[0.0, 0.0, 1.0]), [1.0, 0.0, -1.0]);
    assert_eq!(monopole_density(1.0, 1.0, 0.0), -1.0);
    assert_eq!(monopole_density(2.0, 0.0, 0.0), 15.0 / 16.0);
    let h = sl2c::borel_element(2.0f64, 0.0, 0.0).unwrap();
    assert!((monopole_density_trace(&h) - 15.0 / 16.0).abs() < 1e-15);
}

#[test]
fn poisson_lie_bivector() {
    let space = PhaseSpace::<f64>::sl2c(1);
    let l = space.level();
    let mut s = Sampler::new(6);
    let minus_covector = |s: &mut Sampler| l.gamma(&s.half_algebra(space.tower(), 1, Half::Minus));
    for _ in 0..10 {
        let (xi, eta) = (minus_covector(&mut s), minus_covector(&mut s));
        assert_eq!(space.pl_bivector(&space.identity(), &xi, &eta).unwrap(), 0.0);
        let g = s.subgroup(space.tower(), 1, Half::Plus);
        let v = space.pl_bivector(&g, &xi, &eta).unwrap();
        let w = space.pl_bivector(&g, &eta, &xi).unwrap();
        assert!((v + w).abs() < 1e-12);
        assert!((v - space.pl_bivector_block(&g, &xi, &eta).unwrap()).abs() < 1e-10);
    }
    let g = s.group(space.tower(), 1);
    let xi = minus_covector(&mut s);
    assert!(space.pl_bivector(&g, &xi, &xi).is_err());
}

#[test]
fn dressing_vector_examples() {
    let space = PhaseSpace::<f64>::sl2c(1);
    let tower = space.tower();
    let lower = tower.level(0);
    let mut s = Sampler::new(7);
    let g = s.subgroup(tower, 1, Half::Plus);
    let v = space.dressing_vector(&g, &AlgebraElement::zeros(12)).unwrap();
    assert_eq!(v.norm_inf(), 0.0);

    // At (e, Z): body Π₊Y = 0 and rate Π₊[Y, Z].
    let z = s.half_algebra(tower, 0, Half::Plus);
    let at = GroupElement::pair(GroupElement::identity(0), z.clone());
    let xi = s.half_algebra(tower, 1, Half::Minus);
    let (y, _) = xi.halves();
    let v = space.dressing_vector(&at, &xi).unwrap();
    assert_eq!(v.body.norm_inf(), 0.0);
    let w = xi.halves().1;
    let expected = lower.project(&(&w + &lower.br(&y, &z)), Half::Plus);
    assert!(v.fiber.max_diff(&expected) < 1e-15);

    for _ in 0..5 {
        let g = s.subgroup(tower, 1, Half::Plus);
        let xi = s.half_algebra(tower, 1, Half::Minus);
        let formula = space.dressing_vector(&g, &xi).unwrap();
        let fd = space.dressing_vector_by_factorization(&g, &xi, 1e-5).unwrap();
        assert!(formula.max_diff(&fd) < 1e-5);
        let g = s.subgroup(tower, 1, Half::Minus);
        let xi = s.half_algebra(tower, 1, Half::Plus);
        let formula = space.reciprocal_dressing_vector(&g, &xi).unwrap();
        let fd = space.reciprocal_by_factorization(&g, &xi, 1e-5).unwrap();
        assert!(formula.max_diff(&fd) < 1e-5);
    }
}

#[test]
fn momentum_maps() {
    let space = PhaseSpace::<f64>::sl2c(1);
    let tower = space.tower();
    let l = space.level();
    let mut s = Sampler::new(8);
    let z = s.algebra::<f64>(12);
    let at_e = PhasePoint { h: space.identity(), z: z.clone() };
    assert!(space.momentum_map(&at_e).unwrap().max_diff(&l.sigma(&z)) < 1e-12);
    let x = s.algebra::<f64>(12);
    let phi = space.momentum_function(x.clone());
    assert!((phi.value(&at_e) - l.sigma_pair(&z, &x)).abs() < 1e-12);

    for _ in 0..5 {
        let p = random_point(&mut s, &space);
        let g = s.group(tower, 1);
        let moved = PhasePoint { h: tower.mul(&g, &p.h), z: p.z.clone() };
        // Ad*_{g⁻¹}ξ = ξ ∘ Ad_{g⁻¹}, evaluated through the matrix of Ad_{g⁻¹}.
        let xi = space.momentum_map(&p).unwrap();
        let expected = CoalgebraElement(tower.adjoint_matrix(&tower.inv(&g)).vec_mul(&xi.0));
        assert!(space.momentum_map(&moved).unwrap().max_diff(&expected) < 1e-8);
        space.validate_differential(&space.momentum_function(s.algebra(12)), &[p]).unwrap();
    }
}

#[test]
fn momentum_function_bracket_defect() {
    let space = PhaseSpace::<f64>::sl2c(1);
    let l = space.level();
    let mut s = Sampler::new(9);
    for _ in 0..5 {
        let (fiber, p) = random_fiber(&mut s, &space);
        let (x, y) = (s.algebra::<f64>(12), s.algebra::<f64>(12));
        let bracket = space
            .dirac_bracket(&fiber, &space.momentum_function(x.clone()), &space.momentum_function(y.clone()), &p)
            .unwrap();
        let defect = bracket - space.momentum_function(l.br(&x, &y)).value(&p);
        let predicted = space.momentum_bracket_defect(&fiber, &p, &x, &y).unwrap();
        assert!((defect - predicted).abs() < 1e-8, "{defect} vs {predicted}");
    }
}

#[test]
fn fiber_flows_of_the_plus_dressing_are_not_symplectic() {
    let plus = PhaseSpace::<f64>::sl2c(1);
    let dressing = PhaseSpace::<f64>::sl2c(2);
    let tower = dressing.tower();
    let mut s = Sampler::new(10);
    let h = s.subgroup(plus.tower(), 1, Half::Plus);
    let p = PhasePoint { h, z: s.half_algebra(plus.tower(), 1, Half::Plus) };
    let w = s.half_algebra(tower, 1, Half::Minus);
    let xi = AlgebraElement::concat(&AlgebraElement::zeros(12), &w);
    let field =
        |q: &PhasePoint<f64>| dressing.dressing_vector(&GroupElement::pair(q.h.clone(), q.z.clone()), &xi).unwrap();
    let defect = plus.lie_derivative_defect(&p, &field, 1e-4).unwrap();
    assert!(defect.is_finite() && defect > 1e-6, "{defect:e}");
}
