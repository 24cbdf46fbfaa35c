use yangian_core::battery::{
    draw_angle_pair, draw_state, draw_unitary, param_battery, rng, Stream,
};
use yangian_core::entanglement::{
    apply_su2_transition, apply_su3_transition, concurrence, flavor, initial_meson, initial_su2,
    schmidt_entropy_base3, su2_normalizing_amplitude, su3_transition_operator, EntanglementError,
    TransitionKind, TransitionSpec, D, S, U,
};
use yangian_core::linalg::kron;
use yangian_core::YangianParams;

#[test]
fn measures_are_bounded() {
    let mut r = rng(42, Stream::States);
    for _ in 0..10_000 {
        let c = concurrence(&draw_state(&mut r, (2, 2))).unwrap();
        assert!((-1e-12..=1.0 + 1e-12).contains(&c), "{c}");
        let e = schmidt_entropy_base3(&draw_state(&mut r, (3, 3))).unwrap();
        assert!((-1e-12..=1.0 + 1e-12).contains(&e), "{e}");
    }
}

#[test]
fn measures_are_local_unitary_invariant() {
    let mut r = rng(42, Stream::Unitaries);
    for _ in 0..500 {
        let s = draw_state(&mut r, (2, 2));
        let u = kron(&draw_unitary(&mut r, 2), &draw_unitary(&mut r, 2));
        let d = concurrence(&s.apply(&u).unwrap()).unwrap() - concurrence(&s).unwrap();
        assert!(d.abs() <= 1e-10, "{d}");

        let s = draw_state(&mut r, (3, 3));
        let u = kron(&draw_unitary(&mut r, 3), &draw_unitary(&mut r, 3));
        let d = schmidt_entropy_base3(&s.apply(&u).unwrap()).unwrap()
            - schmidt_entropy_base3(&s).unwrap();
        assert!(d.abs() <= 1e-10, "{d}");
    }
}

#[test]
fn su2_closed_forms_match_brute_force() {
    let mut r = rng(42, Stream::States);
    for constrained in [false, true] {
        for p in param_battery(42, 100, constrained) {
            let (alpha, beta) = draw_angle_pair(&mut r);
            let a = su2_normalizing_amplitude(&p, alpha, beta).unwrap();
            let spec = TransitionSpec {
                kind: TransitionKind::Su2P { a },
                params: p,
            };
            let rep = apply_su2_transition(&initial_su2(alpha, beta).unwrap(), &spec).unwrap();
            assert_eq!(rep.checks.len(), 3);
            for c in &rep.checks {
                assert!(
                    c.pass,
                    "{p:?} ({alpha}, {beta}): {} {:.3e}",
                    c.relation, c.residual
                );
            }
            assert!((rep.norm_factor - 1.0).abs() <= 1e-10);
        }
    }
}

#[test]
fn su2_generic_points_stay_entangled() {
    for p in param_battery(42, 100, false) {
        let a = su2_normalizing_amplitude(&p, 0.6, 0.8).unwrap();
        let spec = TransitionSpec {
            kind: TransitionKind::Su2P { a },
            params: p,
        };
        let rep = apply_su2_transition(&initial_su2(0.6, 0.8).unwrap(), &spec).unwrap();
        assert!(rep.final_measure > 1e-3, "{p:?}: {}", rep.final_measure);
    }
}

// Independent expansion of (η₁V̄⁺ + η₂V̄⁻)(α₁|us̄⟩ + α₂|sū⟩) on the diagonal flavor states.
fn meson_oracle(p: &YangianParams, e1: f64, e2: f64, a1: f64, a2: f64) -> [f64; 3] {
    let h = p.lambda / 2.0;
    [
        -(e1 * a1 * (h + p.nu) + e2 * a2 * (h - p.mu)),
        -h * (e1 * a1 + e2 * a2),
        -(e1 * a1 * (h - p.mu) + e2 * a2 * (h + p.nu)),
    ]
}

#[test]
fn su3_transition_matches_direct_expansion() {
    let mut r = rng(42, Stream::States);
    for p in param_battery(42, 100, false) {
        let (a1, a2) = draw_angle_pair(&mut r);
        let (e1, e2) = draw_angle_pair(&mut r);
        let op = su3_transition_operator(p, e1, e2).unwrap();
        let out = initial_meson(a1, a2).unwrap().apply(&op).unwrap();
        let want = meson_oracle(&p, e1, e2, a1, a2);
        for (q, w) in [U, D, S].into_iter().zip(want) {
            let got = flavor(q, q).inner(&out);
            assert!(
                (got.re - w).abs() <= 1e-12 && got.im.abs() <= 1e-12,
                "{p:?} q={q}: {got} vs {w}"
            );
        }
        let diag: f64 = want.iter().map(|w| w * w).sum();
        assert!((out.norm_sq() - diag).abs() <= 1e-12);
    }
}

#[test]
fn su3_reduced_point_disentangles() {
    let mut r = rng(42, Stream::States);
    for lambda in [0.3, 1.0, -1.7, 2.0] {
        let p = YangianParams::new(lambda / 2.0, -lambda / 2.0, lambda).unwrap();
        for _ in 0..50 {
            let (a1, a2) = draw_angle_pair(&mut r);
            let (e1, e2) = draw_angle_pair(&mut r);
            let spec = TransitionSpec {
                kind: TransitionKind::Su3P { eta1: e1, eta2: e2 },
                params: p,
            };
            match apply_su3_transition(&initial_meson(a1, a2).unwrap(), &spec) {
                Ok(rep) => {
                    assert!(rep.final_measure <= 1e-10, "{}", rep.final_measure);
                    let dd = flavor(D, D).inner(&rep.final_state).norm();
                    assert!((dd - 1.0).abs() <= 1e-10);
                }
                Err(EntanglementError::ZeroState { .. }) => {
                    assert!((e1 * a1 + e2 * a2).abs() < 1e-6);
                }
                Err(e) => panic!("{e}"),
            }
        }
    }
}
