use proptest::prelude::*;

use yangian_core::battery::param_battery;
use yangian_core::linalg::{dagger, max_abs_distance, Complex};
use yangian_core::reduction::{a_matrix, reduce_su2, reduce_su3, tau, ReductionError};
use yangian_core::yangian::{
    adjoint_covariance_residual, barred_cross_check, barred_hermiticity_residual,
    barred_table_residuals, build_su2, build_su3_fundamental, char_poly_at, closure_defect_su2,
    lie_part_residual, YangianParams,
};

fn away_from(x: f64, bad: f64) -> bool {
    (x - bad).abs() > 0.1
}

prop_compose! {
    fn generic()(mu in -2.0f64..2.0, nu in -2.0f64..2.0, lambda in -2.0f64..2.0) -> YangianParams {
        YangianParams::new(mu, nu, lambda).unwrap()
    }
}

prop_compose! {
    fn constrained()(nu in -2.0f64..2.0, lambda in -2.0f64..2.0)
        (p in Just(YangianParams::constrained_from(nu, lambda))) -> Option<YangianParams> {
        p.ok()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn covariance_holds_everywhere(p in generic()) {
        let rep = build_su3_fundamental(p).unwrap();
        prop_assert!(adjoint_covariance_residual(&rep).unwrap() <= 1e-10);
        prop_assert!(lie_part_residual(&rep).unwrap() <= 1e-10);
    }

    #[test]
    fn barred_forms_agree_everywhere(p in generic()) {
        let rep = build_su3_fundamental(p).unwrap();
        for (l, r) in barred_cross_check(&rep).unwrap() {
            prop_assert!(r <= 1e-10, "{l:?}: {r}");
        }
    }

    #[test]
    fn constraint_is_sufficient(p in constrained()) {
        prop_assume!(p.is_some());
        let p = p.unwrap();
        prop_assume!(away_from(p.mu + p.nu, 0.0));
        let scale = p.mu_plus_nu().abs().max(1.0);
        let su2 = build_su2(p).unwrap();
        prop_assert!(closure_defect_su2(&su2).unwrap() <= 1e-10 * scale);
        let su3 = build_su3_fundamental(p).unwrap();
        for c in barred_table_residuals(&su3, 1e-10 * scale * scale).unwrap() {
            prop_assert!(c.pass, "{} {}", c.relation, c.residual);
        }
    }

    #[test]
    fn conjugation_is_a_homomorphism(nu in -2.0f64..2.0, lambda in -2.0f64..2.0, seed in any::<u64>()) {
        prop_assume!(away_from(nu, lambda / 2.0) && away_from(nu, -lambda / 2.0));
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        for (t, n) in [(tau(nu, lambda).unwrap(), 4), (a_matrix(nu, lambda).unwrap(), 9)] {
            let a = yangian_core::battery::draw_matrix(&mut rng, n);
            let b = yangian_core::battery::draw_matrix(&mut rng, n);
            let lhs = t.conjugate(&(&a * &b));
            let rhs = &t.conjugate(&a) * &t.conjugate(&b);
            let scale = t.inverse.max_abs() * t.matrix.max_abs();
            prop_assert!(max_abs_distance(&lhs, &rhs).unwrap() <= 1e-10 * scale * scale);
        }
    }

    #[test]
    fn conjugation_preserves_spectrum(p in generic(), x in -1.5f64..1.5, y in -1.5f64..1.5) {
        prop_assume!(away_from(p.nu, p.lambda / 2.0) && away_from(p.nu, -p.lambda / 2.0));
        let z = Complex::new(x, y);
        let su2 = build_su2(YangianParams::new(p.mu, p.nu, p.lambda).unwrap());
        let t = tau(p.nu, p.lambda).unwrap();
        if let Ok(rep) = su2 {
            for j in &rep.j_ops {
                let a = char_poly_at(j, z).unwrap();
                let b = char_poly_at(&t.conjugate(j), z).unwrap();
                prop_assert!((a - b).norm() <= 1e-9 * a.norm().max(1.0));
            }
        }
        let rep = build_su3_fundamental(p).unwrap();
        let t = a_matrix(p.nu, p.lambda).unwrap();
        for j in rep.j_ops.iter().take(8) {
            let a = char_poly_at(j, z).unwrap();
            let b = char_poly_at(&t.conjugate(j), z).unwrap();
            prop_assert!((a - b).norm() <= 1e-9 * a.norm().max(1.0), "{a} vs {b}");
        }
    }
}

#[test]
fn constraint_is_necessary() {
    for p in param_battery(42, 100, false) {
        if p.constraint_defect() < 1e-3 {
            continue;
        }
        let rep = build_su3_fundamental(p).unwrap();
        let worst = barred_table_residuals(&rep, 1e-10)
            .unwrap()
            .into_iter()
            .map(|c| c.residual)
            .fold(0.0, f64::max);
        assert!(
            worst > 1e-6,
            "{p:?} satisfies the table without the constraint: {worst}"
        );
    }
}

#[test]
fn singular_locus_is_rejected() {
    for (nu, lambda) in [(1.0, 2.0), (-1.0, 2.0), (0.5, -1.0)] {
        assert!(matches!(
            tau(nu, lambda),
            Err(ReductionError::SingularLocus { .. })
        ));
        let err = a_matrix(nu, lambda).unwrap_err();
        assert!(err.to_string().contains("nu = ±lambda/2"), "{err}");
    }
}

#[test]
fn reduction_blocks_on_the_constrained_battery() {
    for p in param_battery(42, 20, true) {
        let su2 = reduce_su2(&p, &tau(p.nu, p.lambda).unwrap()).unwrap();
        assert!(
            su2.max_off_block <= 1e-10 && su2.max_block_match <= 1e-10,
            "{p:?}"
        );
        let rep = build_su3_fundamental(p).unwrap();
        let su3 = reduce_su3(&rep, &a_matrix(p.nu, p.lambda).unwrap()).unwrap();
        let scale = p.alpha().abs().max(1.0 / p.alpha().abs());
        assert!(
            su3.max_off_block <= 1e-10 * scale,
            "{p:?}: {}",
            su3.max_off_block
        );
        assert!(
            su3.max_block_match <= 1e-10 * scale,
            "{p:?}: {}",
            su3.max_block_match
        );
    }
}

#[test]
fn adjoint_of_generators_flips_lambda() {
    for p in param_battery(42, 10, false) {
        let flipped = YangianParams::new(p.mu, p.nu, -p.lambda).unwrap();
        let a = build_su3_fundamental(p).unwrap();
        let b = build_su3_fundamental(flipped).unwrap();
        for (x, y) in a.j_ops.iter().zip(&b.j_ops) {
            assert!(max_abs_distance(&dagger(x), y).unwrap() <= 1e-12);
        }
    }
}

// J³, J⁸ Hermitian and Ī⁻ = (Ī⁺)† for every real parameter triple.
// The λ-term is anti-Hermitian, so this only holds at λ = 0.
#[test]
fn barred_operators_hermitian_for_real_parameters() {
    let mut worst: f64 = 0.0;
    for p in param_battery(42, 20, false) {
        let rep = build_su3_fundamental(p).unwrap();
        worst = worst.max(barred_hermiticity_residual(&rep).unwrap());
    }
    assert!(
        worst <= 1e-12,
        "largest hermiticity residual over the battery: {worst:.3e}"
    );
}
