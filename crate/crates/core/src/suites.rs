//! Report builders behind the `verify`, `reduce` and `entangle` commands.

use std::time::Instant;

use serde::Serialize;

use crate::battery::param_battery;
use crate::config::Scenario;
use crate::entanglement::{
    apply_su2_transition, apply_su3_transition, EntanglementError, EntanglementReport,
};
use crate::lie::{
    casimir_c1, casimir_c2, casimir_identity_residual, gellmann_basis, lie_closure_residual,
    shift_ops, trace_orthogonality_residual, v_spin_charge_commutator_norm, verify_fd_identity,
    verify_jacobi, verify_su3_table, SU3_F_REFERENCE,
};
use crate::linalg::{max_abs_distance, ComplexMatrix};
use crate::reduction::{
    a_matrix, reduce_su2, reduce_su3, tau, BlockReport, ReductionError, SimilarityTransform,
};
use crate::report::{worst, RelationCheck, SuiteReport};
use crate::yangian::{
    adjoint_covariance_residual, barred_cross_check, barred_ladder_square_residual,
    barred_table_residuals, build_su2, build_su3_fundamental, closure_defect_su2, j_square_sum,
    j_square_third_residual, lie_part_residual, normalize, spectrum_check_i3, su2_square_residual,
    verify_tilde_table, y_square_third_residual, YangianError, YangianParams,
};

/// Tolerances per kind of identity. Only `algebra` follows `--tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Products of small-integer matrices.
    pub exact: f64,
    /// Two-site tables, cross-checks, block residuals.
    pub algebra: f64,
    /// Characteristic polynomial at closed-form roots.
    pub spectrum: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            exact: 1e-12,
            algebra: 1e-10,
            spectrum: 1e-9,
        }
    }
}

impl Tolerances {
    pub fn with_algebra(tol: f64) -> Self {
        Self {
            algebra: tol,
            ..Self::default()
        }
    }
}

/// Draw counts for the randomized parts of `verify`.
pub const BATTERY_DRAWS: usize = 100;
pub const SPECTRUM_DRAWS: usize = 20;

fn timed(name: &str, f: impl FnOnce(&mut SuiteReport)) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new(name);
    f(&mut r);
    r.wall_time = start.elapsed();
    r
}

/// Structure constants, Jacobi and f–d identities, Casimirs and the ladder table.
pub fn lie_suite(tol: &Tolerances) -> SuiteReport {
    timed("su3-single-site", |r| {
        let b = gellmann_basis();
        let mut listed = vec![false; 8 * 8 * 8];
        for &((i, j, k), v) in &SU3_F_REFERENCE {
            r.push(RelationCheck::new(
                format!("Eq18:f{i}{j}{k}"),
                (b.f.at(i, j, k) - v).abs(),
                tol.exact,
            ));
            listed[((i - 1) * 8 + (j - 1)) * 8 + (k - 1)] = true;
        }
        let mut others = 0.0_f64;
        let mut antisym = 0.0_f64;
        for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    let v = b.f.get(i, j, k);
                    antisym = antisym
                        .max((v + b.f.get(j, i, k)).abs())
                        .max((v + b.f.get(i, k, j)).abs());
                    if i < j && j < k && !listed[(i * 8 + j) * 8 + k] {
                        others = others.max(v.abs());
                    }
                }
            }
        }
        r.push(RelationCheck::new("Eq18:unlisted-zero", others, tol.exact));
        r.push(RelationCheck::new("Eq18:antisymmetry", antisym, tol.exact));
        r.push(RelationCheck::new(
            "Eq17:closure",
            lie_closure_residual(&b),
            tol.exact,
        ));
        r.push(RelationCheck::new(
            "Eq22:trace",
            trace_orthogonality_residual(&b),
            tol.exact,
        ));
        r.push(RelationCheck::new(
            "Eq23:jacobi",
            verify_jacobi(&b.f),
            tol.exact,
        ));
        r.push(RelationCheck::new(
            "Eq24:f-d",
            verify_fd_identity(&b.f, &b.d),
            tol.exact,
        ));
        match casimir_c1(&b) {
            Ok(c1) => {
                let want = ComplexMatrix::identity(3).scale_real(4.0 / 3.0);
                r.push(RelationCheck::new(
                    "Eq25:C1=4/3",
                    max_abs_distance(&c1, &want).expect("3x3"),
                    tol.exact,
                ));
            }
            Err(e) => r.push(RelationCheck::new(
                format!("Eq25:C1 ({e})"),
                f64::INFINITY,
                tol.exact,
            )),
        }
        let c2 = casimir_c2(&b);
        let want = ComplexMatrix::identity(3).scale_real(10.0 / 9.0);
        r.push(RelationCheck::new(
            "Eq26:C2=10/9",
            max_abs_distance(&c2, &want).expect("3x3"),
            tol.exact,
        ));
        let ident = casimir_identity_residual(&b).unwrap_or(f64::INFINITY);
        r.push(RelationCheck::new(
            "Eq26:C2=C1(2C1-11/6)",
            ident,
            tol.algebra,
        ));
        let ops = shift_ops(&b).expect("su3 basis");
        r.extend(verify_su3_table(&ops, tol.exact));
        r.push(RelationCheck::exceeds(
            "Eq32:[V+,Q]!=0",
            v_spin_charge_commutator_norm(&ops),
            1e-3,
        ));
    })
}

fn skip_or<T>(
    r: &mut SuiteReport,
    label: &str,
    res: Result<T, YangianError>,
    f: impl FnOnce(&mut SuiteReport, T),
) {
    match res {
        Ok(v) => f(r, v),
        Err(e @ YangianError::Normalization { .. }) => r.skip(label, e.to_string()),
        Err(e) => r.push(RelationCheck::new(
            format!("{label} ({e})"),
            f64::INFINITY,
            0.0,
        )),
    }
}

pub fn su2_suite(params: YangianParams, tol: &Tolerances) -> SuiteReport {
    timed("su2-yangian", |r| {
        skip_or(r, "Eq2:build", build_su2(params), |r, rep| {
            r.push(RelationCheck::new(
                "Eq3:J^2",
                su2_square_residual(&rep).unwrap_or(f64::NAN),
                tol.exact,
            ));
            r.push(RelationCheck::new(
                "Eq4:closure",
                closure_defect_su2(&rep).unwrap_or(f64::NAN),
                tol.exact,
            ));
            r.push(RelationCheck::new(
                "Eq1:[I,J]=iepsJ",
                adjoint_covariance_residual(&rep).unwrap_or(f64::NAN),
                tol.exact,
            ));
            if params.is_constrained() {
                let j2 = j_square_sum(&rep);
                let want = ComplexMatrix::identity(4).scale_real(0.75);
                r.push(RelationCheck::new(
                    "Eq3:J^2=3/4",
                    max_abs_distance(&j2, &want).expect("4x4"),
                    tol.exact,
                ));
                let eps = eps_closure_residual(&rep.j_ops);
                r.push(RelationCheck::new("Eq4:[Ja,Jb]=iepsJc", eps, tol.exact));
            }
        });
    })
}

fn eps_closure_residual(j: &[ComplexMatrix]) -> f64 {
    let mut worst_r = 0.0_f64;
    for (a, b, c, s) in [(0, 1, 2, 1.0), (1, 2, 0, 1.0), (2, 0, 1, 1.0)] {
        let lhs = crate::linalg::commutator(&j[a], &j[b]).expect("same shape");
        let rhs = j[c].scale(crate::linalg::im(s));
        worst_r = worst_r.max(max_abs_distance(&lhs, &rhs).expect("same shape"));
    }
    worst_r
}

pub fn su3_suite(params: YangianParams, tol: &Tolerances) -> SuiteReport {
    timed("su3-yangian", |r| {
        let rep = match build_su3_fundamental(params) {
            Ok(rep) => rep,
            Err(e) => {
                r.push(RelationCheck::new(
                    format!("Eq33:build ({e})"),
                    f64::INFINITY,
                    0.0,
                ));
                return;
            }
        };
        r.push(RelationCheck::new(
            "Eq33:[I,I]=ifI",
            lie_part_residual(&rep).unwrap_or(f64::NAN),
            tol.exact,
        ));
        r.push(RelationCheck::new(
            "Eq33:[I,J]=ifJ",
            adjoint_covariance_residual(&rep).unwrap_or(f64::NAN),
            tol.exact,
        ));
        match barred_cross_check(&rep) {
            Ok(rows) => {
                for (l, res) in rows {
                    r.push(RelationCheck::new(
                        format!("Eq36-37:{}", l.symbol()),
                        res,
                        tol.algebra,
                    ));
                }
            }
            Err(e) => r.push(RelationCheck::new(
                format!("Eq36-37 ({e})"),
                f64::INFINITY,
                0.0,
            )),
        }
        let table = barred_table_residuals(&rep, tol.algebra).unwrap_or_default();
        if params.is_constrained() {
            r.extend(table);
            r.push(RelationCheck::new(
                "Eq40:sum(J^a)^2",
                j_square_third_residual(&rep),
                tol.algebra,
            ));
            r.push(RelationCheck::new(
                "Eq40:shift-form",
                barred_ladder_square_residual(&rep).unwrap_or(f64::NAN),
                tol.algebra,
            ));
        } else {
            for c in table {
                if c.relation == "Eq38:[I3,I8]" {
                    r.push(c);
                } else {
                    r.flag(c.relation, c.residual, "constraint-required");
                }
            }
            r.skip("Eq40", "constraint-required");
        }
        skip_or(r, "Eq41:normalize", normalize(&rep), |r, norm| {
            if params.is_constrained() {
                r.push(RelationCheck::new(
                    "Eq43:sum(Y^a)^2",
                    y_square_third_residual(&norm),
                    tol.algebra,
                ));
                r.extend(verify_tilde_table(&rep, &norm, tol.algebra).unwrap_or_default());
            } else {
                r.skip("Eq43-44", "constraint-required");
            }
        });
        skip_or(r, "Eq48:spectrum", spectrum_check_i3(&rep), |r, s| {
            let label = if params.is_constrained() {
                "Eq48-49:det(x-I3)"
            } else {
                "Eq48:det(x-I3)"
            };
            r.push(RelationCheck::new(label, s.max_residual, tol.spectrum));
        });
    })
}

/// Worst-case residuals over the seeded parameter battery.
pub fn battery_suite(seed: u64, tol: &Tolerances) -> SuiteReport {
    timed("battery", |r| {
        let generic = param_battery(seed, BATTERY_DRAWS, false);
        let constrained = param_battery(seed, BATTERY_DRAWS, true);

        let mut eq3 = Vec::new();
        let mut eq4 = Vec::new();
        let mut cross = Vec::new();
        let mut cov = Vec::new();
        for p in &generic {
            let rep = build_su2(*p).expect("battery avoids mu+nu=0");
            eq3.push(su2_square_residual(&rep).unwrap_or(f64::NAN));
            eq4.push(closure_defect_su2(&rep).unwrap_or(f64::NAN));
            let rep3 = build_su3_fundamental(*p).expect("finite params");
            cross.push(worst(
                barred_cross_check(&rep3)
                    .map(|v| v.into_iter().map(|x| x.1).collect::<Vec<_>>())
                    .unwrap_or(vec![f64::NAN]),
            ));
            cov.push(adjoint_covariance_residual(&rep3).unwrap_or(f64::NAN));
        }
        r.push(RelationCheck::new("battery:Eq3:J^2", worst(eq3), tol.exact));
        r.push(RelationCheck::new(
            "battery:Eq4:closure",
            worst(eq4),
            tol.exact,
        ));
        r.push(RelationCheck::new(
            "battery:Eq36-37",
            worst(cross),
            tol.algebra,
        ));
        r.push(RelationCheck::new(
            "battery:Eq33:[I,J]=ifJ",
            worst(cov),
            tol.exact,
        ));

        let mut j2 = Vec::new();
        let mut eps = Vec::new();
        let mut t38 = Vec::new();
        let mut t44 = Vec::new();
        let mut s40 = Vec::new();
        let mut s43 = Vec::new();
        for p in &constrained {
            let rep = build_su2(*p).expect("battery avoids mu+nu=0");
            let want = ComplexMatrix::identity(4).scale_real(0.75);
            j2.push(max_abs_distance(&j_square_sum(&rep), &want).expect("4x4"));
            eps.push(eps_closure_residual(&rep.j_ops));
            let rep3 = build_su3_fundamental(*p).expect("finite params");
            t38.push(worst(
                barred_table_residuals(&rep3, tol.algebra)
                    .map(|v| v.into_iter().map(|c| c.residual).collect::<Vec<_>>())
                    .unwrap_or(vec![f64::NAN]),
            ));
            s40.push(j_square_third_residual(&rep3));
            match normalize(&rep3) {
                Ok(n) => {
                    t44.push(worst(
                        verify_tilde_table(&rep3, &n, tol.algebra)
                            .map(|v| v.into_iter().map(|c| c.residual).collect::<Vec<_>>())
                            .unwrap_or(vec![f64::NAN]),
                    ));
                    s43.push(y_square_third_residual(&n));
                }
                Err(_) => t44.push(f64::NAN),
            }
        }
        r.push(RelationCheck::new(
            "battery:Eq3:J^2=3/4",
            worst(j2),
            tol.exact,
        ));
        r.push(RelationCheck::new(
            "battery:Eq4:[Ja,Jb]=iepsJc",
            worst(eps),
            tol.exact,
        ));
        r.push(RelationCheck::new("battery:Eq38", worst(t38), tol.algebra));
        r.push(RelationCheck::new("battery:Eq44", worst(t44), tol.algebra));
        r.push(RelationCheck::new(
            "battery:Eq40:sum(J^a)^2",
            worst(s40),
            tol.algebra,
        ));
        r.push(RelationCheck::new(
            "battery:Eq43:sum(Y^a)^2",
            worst(s43),
            tol.algebra,
        ));

        let spec_generic: Vec<f64> = generic
            .iter()
            .take(SPECTRUM_DRAWS)
            .map(|p| spectrum_of(*p))
            .collect();
        let spec_constrained: Vec<f64> = constrained
            .iter()
            .take(SPECTRUM_DRAWS)
            .map(|p| spectrum_of(*p))
            .collect();
        r.push(RelationCheck::new(
            "battery:Eq48:det(x-I3)",
            worst(spec_generic),
            tol.spectrum,
        ));
        r.push(RelationCheck::new(
            "battery:Eq49:det(x-I3)",
            worst(spec_constrained),
            tol.spectrum,
        ));

        let necessity = generic
            .iter()
            .filter(|p| {
                let rep = build_su3_fundamental(**p).expect("finite");
                let rows = barred_table_residuals(&rep, tol.algebra).unwrap_or_default();
                rows.iter().any(|c| c.residual > 1e-6)
            })
            .count();
        r.push(RelationCheck::new(
            "battery:Eq38:constraint-necessity",
            (generic.len() - necessity) as f64,
            0.0,
        ));
    })
}

fn spectrum_of(p: YangianParams) -> f64 {
    build_su3_fundamental(p)
        .and_then(|rep| spectrum_check_i3(&rep))
        .map(|s| s.max_residual)
        .unwrap_or(f64::NAN)
}

/// Everything `verify` runs for one parameter point plus the seeded battery.
pub fn verify(params: YangianParams, seed: u64, tol: &Tolerances) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("verify");
    r.absorb("lie", lie_suite(tol));
    r.absorb("su2", su2_suite(params, tol));
    r.absorb("su3", su3_suite(params, tol));
    r.absorb("", battery_suite(seed, tol));
    r.wall_time = start.elapsed();
    r
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionOutput {
    pub report: SuiteReport,
    pub transform: SimilarityTransform,
    pub blocks: BlockReport,
}

/// τ reduction of the su(2) generators.
pub fn reduce_su2_run(
    params: YangianParams,
    tol: &Tolerances,
) -> Result<ReductionOutput, ReductionError> {
    let start = Instant::now();
    let t = tau(params.nu, params.lambda)?;
    let blocks = reduce_su2(&params, &t)?;
    let mut report = SuiteReport::new("reduce-su2");
    report.extend(blocks.checks("Eq6", tol.algebra));
    report.wall_time = start.elapsed();
    Ok(ReductionOutput {
        report,
        transform: t,
        blocks,
    })
}

/// A reduction of the su(3) tilde operators.
pub fn reduce_su3_run(
    params: YangianParams,
    tol: &Tolerances,
) -> Result<ReductionOutput, ReductionError> {
    let start = Instant::now();
    let t = a_matrix(params.nu, params.lambda)?;
    let rep = build_su3_fundamental(params)?;
    let blocks = reduce_su3(&rep, &t)?;
    let mut report = SuiteReport::new("reduce-su3");
    report.extend(blocks.checks("Eq51", tol.algebra));
    if let Some(m) = &blocks.i8_middle_block {
        report.flag(
            "Eq51:I8:middle-block-vs-I3",
            m.residual_vs_i3,
            format!("middle block matches {}", m.adopted),
        );
    }
    report.wall_time = start.elapsed();
    Ok(ReductionOutput {
        report,
        transform: t,
        blocks,
    })
}

pub fn entangle(scenario: &Scenario) -> Result<EntanglementReport, EntanglementError> {
    let (state, spec) = scenario
        .resolve()
        .map_err(|e| EntanglementError::Config(e.to_string()))?;
    match spec.kind {
        crate::entanglement::TransitionKind::Su2P { .. } => apply_su2_transition(&state, &spec),
        crate::entanglement::TransitionKind::Su3P { .. } => apply_su3_transition(&state, &spec),
    }
}

/// Checks carried by an entanglement report, as a suite.
pub fn entangle_suite(report: &EntanglementReport) -> SuiteReport {
    let mut r = SuiteReport::new(format!("entangle-{}", report.system));
    r.extend(report.checks.iter().cloned());
    r
}

/// Default point used when no parameters are supplied.
pub fn default_params() -> YangianParams {
    YangianParams::new(1.0, -0.25, 1.0).expect("finite")
}

/// τ and A reductions over constrained battery draws.
pub fn reduction_battery(seed: u64, draws: usize, tol: &Tolerances) -> SuiteReport {
    timed("reduction-battery", |r| {
        let mut su2 = Vec::new();
        let mut su3 = Vec::new();
        for p in param_battery(seed, draws, true) {
            su2.push(
                reduce_su2_run(p, tol)
                    .map(|o| o.blocks.max_off_block.max(o.blocks.max_block_match))
                    .unwrap_or(f64::NAN),
            );
            su3.push(
                reduce_su3_run(p, tol)
                    .map(|o| o.blocks.max_off_block.max(o.blocks.max_block_match))
                    .unwrap_or(f64::NAN),
            );
        }
        r.push(RelationCheck::new(
            "battery:Eq6:blocks",
            worst(su2),
            tol.algebra,
        ));
        r.push(RelationCheck::new(
            "battery:Eq51:blocks",
            worst(su3),
            tol.algebra,
        ));
    })
}
