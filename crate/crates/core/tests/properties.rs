use aks_core::algebra::{AlgebraElement, Half};
use aks_core::group::GroupElement;
use aks_core::sampling::Sampler;
use aks_core::sl2c;
use aks_core::tower::Tower;
use proptest::prelude::*;

fn vec6() -> impl Strategy<Value = [f64; 6]> {
    prop::array::uniform6(-2.0f64..2.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn realize_is_a_lie_homomorphism(x in vec6(), y in vec6()) {
        let (x, y) = (AlgebraElement(x.to_vec()), AlgebraElement(y.to_vec()));
        let alg = sl2c::algebra::<f64>();
        let lhs = sl2c::realize(&alg.br(&x, &y));
        let rhs = sl2c::realize(&x).commutator(&sl2c::realize(&y));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn form_is_invariant(x in vec6(), y in vec6(), w in vec6()) {
        let (x, y, w) = (AlgebraElement(x.to_vec()), AlgebraElement(y.to_vec()), AlgebraElement(w.to_vec()));
        let alg = sl2c::algebra::<f64>();
        let form = sl2c::k0_form::<f64>();
        let d = form.pair(&alg.br(&x, &y), &w) - form.pair(&x, &alg.br(&y, &w));
        prop_assert!(d.abs() < 1e-12);
    }

    #[test]
    fn factorization_round_trips(seed in 0u64..10_000, depth in 0usize..=2) {
        let tower = Tower::<f64>::sl2c(depth);
        let mut s = Sampler::new(seed);
        let g: GroupElement<f64> = s.group(&tower, depth);
        let (hp, hm) = tower.factorize(&g).unwrap();
        prop_assert!(tower.mul(&hp, &hm).max_abs_diff(&g) < 1e-10);
        let x = s.algebra::<f64>(tower.level(depth).dim());
        let l = tower.level(depth);
        // Projectors along Ad are complementary idempotents.
        let p = tower.projector(&hm, &x, Half::Plus);
        let q = tower.projector(&hm, &x, Half::Minus);
        prop_assert!((&p + &q).max_diff(&x) < 1e-10);
        prop_assert!(tower.projector(&hm, &p, Half::Plus).max_diff(&p) < 1e-10);
        prop_assert!(l.project(&tower.adjoint(&hm, &q), Half::Plus).norm_inf() < 1e-10);
    }

    #[test]
    fn exp_is_a_one_parameter_subgroup(x in vec6(), s in -1.0f64..1.0, t in -1.0f64..1.0) {
        let tower = Tower::<f64>::sl2c(1);
        let mut v = x.to_vec();
        v.extend(x.iter().rev());
        let x = AlgebraElement(v);
        let a = tower.exp(&x.scale(s)).unwrap();
        let b = tower.exp(&x.scale(t)).unwrap();
        let ab = tower.exp(&x.scale(s + t)).unwrap();
        prop_assert!(tower.mul(&a, &b).max_abs_diff(&ab) < 1e-9 * (1.0 + ab.flatten().iter().fold(0.0f64, |m, v| m.max(v.abs()))));
    }
}

#[test]
fn f32_smoke() {
    let tower = Tower::<f32>::sl2c(1);
    let l = tower.level(1);
    assert!(l.algebra.jacobi_defect().residual < 1e-4);
    let mut s = Sampler::new(1);
    let g: GroupElement<f32> = s.group(&tower, 1);
    let (hp, hm) = tower.factorize(&g).unwrap();
    assert!(tower.mul(&hp, &hm).max_abs_diff(&g) < 1e-3);
    let x: AlgebraElement<f32> = s.algebra(6);
    let m = sl2c::realize(&x);
    assert!(sl2c::to_coefficients(&m).unwrap().max_diff(&x) < 1e-5);
}
