//! Two-site Yangian generators.
//!
//! For sites with generators `F₁^a`, `F₂^a` the Lie part is `I^a = F₁^a + F₂^a` and the
//! second set is
//!
//! ```text
//! J^a = μ F₁^a + ν F₂^a + iλ f_abc F₁^b F₂^c
//! ```
//!
//! su(2) carries an overall `1/(μ+ν)`; su(3) is stored unnormalized and
//! [`normalize`] divides it out. The antisymmetrized two-site sum is taken with
//! `ω₁₂ = +1`, which is the orientation under which the reduced blocks come out
//! diagonal.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lie::{
    gellmann_basis, ladder_adjoint_residual, ladder_relations, pauli_basis, AlgebraName, Ladder,
    LadderSet, LieBasis, LieError, StructureTable,
};
use crate::linalg::{
    commutator, det, im, kron, max_abs_distance, re, Complex, ComplexMatrix, LinalgError,
};
use crate::report::RelationCheck;

/// `|μν + λ²/4|` at or below this counts as constrained.
pub const CONSTRAINT_TOL: f64 = 1e-12;

/// Agreement required between the two barred-operator constructions.
pub const CROSS_CHECK_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum YangianError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("normalization undefined: mu + nu = {mu_plus_nu:e}")]
    Normalization { mu_plus_nu: f64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("barred operator {op} constructions disagree: residual {residual:e}")]
    CrossCheck { op: &'static str, residual: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Object form only: serde's derived struct decoding would also take `[mu, nu, lambda]`.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(try_from = "BTreeMap<String, f64>")]
struct ParamsInput {
    mu: f64,
    nu: f64,
    lambda: f64,
}

impl TryFrom<BTreeMap<String, f64>> for ParamsInput {
    type Error = String;

    fn try_from(mut m: BTreeMap<String, f64>) -> Result<Self, String> {
        let mut take = |k: &str| m.remove(k).ok_or_else(|| format!("missing field `{k}`"));
        let p = ParamsInput {
            mu: take("mu")?,
            nu: take("nu")?,
            lambda: take("lambda")?,
        };
        match m.keys().next() {
            Some(k) => Err(format!(
                "unknown field `{k}`, expected `mu`, `nu` or `lambda`"
            )),
            None => Ok(p),
        }
    }
}

/// `(μ, ν, λ)` plus whether `μν = −λ²/4` holds. The flag is always recomputed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ParamsInput")]
pub struct YangianParams {
    pub mu: f64,
    pub nu: f64,
    pub lambda: f64,
    #[serde(skip_serializing)]
    constrained: bool,
}

impl TryFrom<ParamsInput> for YangianParams {
    type Error = YangianError;

    fn try_from(p: ParamsInput) -> Result<Self, Self::Error> {
        Self::new(p.mu, p.nu, p.lambda)
    }
}

impl YangianParams {
    pub fn new(mu: f64, nu: f64, lambda: f64) -> Result<Self, YangianError> {
        if !(mu.is_finite() && nu.is_finite() && lambda.is_finite()) {
            return Err(YangianError::InvalidParams(format!(
                "non-finite component in (mu, nu, lambda) = ({mu}, {nu}, {lambda})"
            )));
        }
        Ok(Self {
            mu,
            nu,
            lambda,
            constrained: (mu * nu + lambda * lambda / 4.0).abs() <= CONSTRAINT_TOL,
        })
    }

    /// Solves the constraint for `μ = −λ²/(4ν)`.
    pub fn constrained_from(nu: f64, lambda: f64) -> Result<Self, YangianError> {
        if nu == 0.0 {
            return Err(YangianError::InvalidParams(
                "cannot solve mu = -lambda^2/(4 nu) at nu = 0".into(),
            ));
        }
        Self::new(-lambda * lambda / (4.0 * nu), nu, lambda)
    }

    #[inline]
    pub fn is_constrained(&self) -> bool {
        self.constrained
    }

    /// `μν + λ²/4`, zero on the constraint surface.
    pub fn constraint_defect(&self) -> f64 {
        self.mu * self.nu + self.lambda * self.lambda / 4.0
    }

    #[inline]
    pub fn mu_plus_nu(&self) -> f64 {
        self.mu + self.nu
    }

    /// `μ + ν`, or an error where dividing by it is meaningless.
    pub fn normalizer(&self) -> Result<f64, YangianError> {
        let s = self.mu_plus_nu();
        if s.abs() < 1e-12 {
            Err(YangianError::Normalization { mu_plus_nu: s })
        } else {
            Ok(s)
        }
    }

    /// `ν − λ/2`: ξ in the su(2) reduction and α in the su(3) one.
    pub fn alpha(&self) -> f64 {
        self.nu - self.lambda / 2.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SiteKind {
    Fundamental,
    /// `F̄^a = −(F^a)*`.
    Conjugate,
}

#[derive(Debug, Clone)]
pub struct SiteRep {
    pub basis: LieBasis,
    pub kind: SiteKind,
}

impl SiteRep {
    pub fn fundamental(basis: LieBasis) -> Self {
        Self {
            basis,
            kind: SiteKind::Fundamental,
        }
    }

    pub fn conjugate(basis: LieBasis) -> Self {
        Self {
            basis,
            kind: SiteKind::Conjugate,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rep_dim
    }

    pub fn generators(&self) -> Vec<ComplexMatrix> {
        match self.kind {
            SiteKind::Fundamental => self.basis.generators.clone(),
            SiteKind::Conjugate => self.basis.generators.iter().map(|g| -&g.conj()).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TwoSiteRep {
    pub site1: SiteRep,
    pub site2: SiteRep,
    pub params: YangianParams,
    /// `F₁^a ⊗ 1` for each generator index.
    pub site1_ops: Vec<ComplexMatrix>,
    /// `1 ⊗ F₂^a`.
    pub site2_ops: Vec<ComplexMatrix>,
    pub i_ops: Vec<ComplexMatrix>,
    pub j_ops: Vec<ComplexMatrix>,
}

impl TwoSiteRep {
    pub fn algebra(&self) -> AlgebraName {
        self.site1.basis.name
    }

    pub fn dim(&self) -> usize {
        self.site1.dim() * self.site2.dim()
    }

    pub fn f(&self) -> &StructureTable {
        &self.site1.basis.f
    }

    fn require(&self, name: AlgebraName, what: &str) -> Result<(), YangianError> {
        if self.algebra() == name {
            Ok(())
        } else {
            Err(YangianError::Precondition(format!(
                "{what} needs a {name:?} representation"
            )))
        }
    }
}

/// `op ⊗ 1_{d₂}` for site 1, `1_{d₁} ⊗ op` for site 2.
pub fn embed(
    op: &ComplexMatrix,
    site: u8,
    d1: usize,
    d2: usize,
) -> Result<ComplexMatrix, LinalgError> {
    let (expect, out) = match site {
        1 => (d1, kron(op, &ComplexMatrix::identity(d2))),
        2 => (d2, kron(&ComplexMatrix::identity(d1), op)),
        _ => {
            return Err(LinalgError::Invalid(format!(
                "site must be 1 or 2, got {site}"
            )))
        }
    };
    if op.shape() != (expect, expect) {
        return Err(LinalgError::DimensionMismatch {
            op: "embed",
            left_rows: op.rows(),
            left_cols: op.cols(),
            right_rows: expect,
            right_cols: expect,
        });
    }
    Ok(out)
}

fn assemble(
    params: YangianParams,
    site1: SiteRep,
    site2: SiteRep,
    overall: f64,
) -> Result<TwoSiteRep, YangianError> {
    let (d1, d2) = (site1.dim(), site2.dim());
    let a1 = site1
        .generators()
        .iter()
        .map(|g| embed(g, 1, d1, d2))
        .collect::<Result<Vec<_>, _>>()?;
    let a2 = site2
        .generators()
        .iter()
        .map(|g| embed(g, 2, d1, d2))
        .collect::<Result<Vec<_>, _>>()?;
    let f = &site1.basis.f;
    let n = a1.len();
    let YangianParams { mu, nu, lambda, .. } = params;

    let mut j_ops = Vec::with_capacity(n);
    for a in 0..n {
        let mut j = &a1[a].scale_real(mu) + &a2[a].scale_real(nu);
        for b in 0..n {
            for c in 0..n {
                let fabc = f.get(a, b, c);
                if fabc != 0.0 {
                    j += &(&a1[b] * &a2[c]).scale(im(lambda * fabc));
                }
            }
        }
        j_ops.push(j.scale_real(overall));
    }
    let i_ops = a1.iter().zip(&a2).map(|(x, y)| x + y).collect();
    Ok(TwoSiteRep {
        site1,
        site2,
        params,
        site1_ops: a1,
        site2_ops: a2,
        i_ops,
        j_ops,
    })
}

/// `I = S₁ + S₂`, `J = (μS₁ + νS₂ + iλ S₁×S₂)/(μ+ν)` on ℂ²⊗ℂ².
pub fn build_su2(params: YangianParams) -> Result<TwoSiteRep, YangianError> {
    let s = params.normalizer()?;
    let b = pauli_basis();
    assemble(
        params,
        SiteRep::fundamental(b.clone()),
        SiteRep::fundamental(b),
        1.0 / s,
    )
}

/// Unnormalized su(3) `J^a` on the product of two su(3) sites.
pub fn build_su3(
    params: YangianParams,
    site1: SiteRep,
    site2: SiteRep,
) -> Result<TwoSiteRep, YangianError> {
    for s in [&site1, &site2] {
        if s.basis.name != AlgebraName::Su3 {
            return Err(LieError::NotSu3("build_su3").into());
        }
    }
    assemble(params, site1, site2, 1.0)
}

/// Fundamental ⊗ fundamental, the case used for all the reduction results.
pub fn build_su3_fundamental(params: YangianParams) -> Result<TwoSiteRep, YangianError> {
    let b = gellmann_basis();
    build_su3(
        params,
        SiteRep::fundamental(b.clone()),
        SiteRep::fundamental(b),
    )
}

/// Max over `(a, b)` of `[J_a, J_b] − iε_abc (−(μν + λ²/4) I_c + (μ+ν)² J_c)/(μ+ν)²`.
pub fn closure_defect_su2(rep: &TwoSiteRep) -> Result<f64, YangianError> {
    rep.require(AlgebraName::Su2, "closure_defect_su2")?;
    let s = rep.params.normalizer()?;
    let k = rep.params.constraint_defect();
    let f = rep.f();
    let mut worst = 0.0_f64;
    for a in 0..3 {
        for b in 0..3 {
            let lhs = commutator(&rep.j_ops[a], &rep.j_ops[b])?;
            let mut rhs = ComplexMatrix::zeros(4, 4);
            for c in 0..3 {
                let e = f.get(a, b, c);
                if e != 0.0 {
                    let term = &rep.i_ops[c].scale_real(-k / (s * s)) + &rep.j_ops[c];
                    rhs += &term.scale(im(e));
                }
            }
            worst = worst.max(max_abs_distance(&lhs, &rhs)?);
        }
    }
    Ok(worst)
}

/// Residual of the su(2) `J² = [(3/4)(μ² + ν² − λ²/2) + (2μν + λ²/2) S₁·S₂]/(μ+ν)²`.
pub fn su2_square_residual(rep: &TwoSiteRep) -> Result<f64, YangianError> {
    rep.require(AlgebraName::Su2, "su2_square_residual")?;
    let s = rep.params.normalizer()?;
    let YangianParams { mu, nu, lambda, .. } = rep.params;
    let mut s1s2 = ComplexMatrix::zeros(4, 4);
    for (x, y) in rep.site1_ops.iter().zip(&rep.site2_ops) {
        s1s2 += &(x * y);
    }
    let rhs = &ComplexMatrix::identity(4)
        .scale_real(0.75 * (mu * mu + nu * nu - lambda * lambda / 2.0))
        + &s1s2.scale_real(2.0 * mu * nu + lambda * lambda / 2.0);
    let rhs = rhs.scale_real(1.0 / (s * s));
    Ok(max_abs_distance(&j_square_sum(rep), &rhs)?)
}

/// `Σ_a (J^a)²`.
pub fn j_square_sum(rep: &TwoSiteRep) -> ComplexMatrix {
    let n = rep.dim();
    let mut acc = ComplexMatrix::zeros(n, n);
    for j in &rep.j_ops {
        acc += &(j * j);
    }
    acc
}

/// Max over pairs of `[I^a, J^b] − i f_abc J^c`.
pub fn adjoint_covariance_residual(rep: &TwoSiteRep) -> Result<f64, YangianError> {
    pair_residual(rep, &rep.i_ops, &rep.j_ops)
}

/// Max over pairs of `[I^a, I^b] − i f_abc I^c`.
pub fn lie_part_residual(rep: &TwoSiteRep) -> Result<f64, YangianError> {
    pair_residual(rep, &rep.i_ops, &rep.i_ops)
}

fn pair_residual(
    rep: &TwoSiteRep,
    x: &[ComplexMatrix],
    y: &[ComplexMatrix],
) -> Result<f64, YangianError> {
    let f = rep.f();
    let n = x.len();
    let mut worst = 0.0_f64;
    for a in 0..n {
        for b in 0..n {
            let lhs = commutator(&x[a], &y[b])?;
            let mut rhs = ComplexMatrix::zeros(rep.dim(), rep.dim());
            for (c, yc) in y.iter().enumerate() {
                let v = f.get(a, b, c);
                if v != 0.0 {
                    rhs += &yc.scale(im(v));
                }
            }
            worst = worst.max(max_abs_distance(&lhs, &rhs)?);
        }
    }
    Ok(worst)
}

/// Barred operators as combinations of `J^a`:
/// `Ī± = J¹ ± iJ²`, `Ū± = J⁶ ± iJ⁷`, `V̄± = J⁴ ∓ iJ⁵`, `Ī³ = J³`, `Ī⁸ = (2/√3)J⁸`.
pub fn barred_from_j(rep: &TwoSiteRep) -> Result<LadderSet, YangianError> {
    rep.require(AlgebraName::Su3, "barred_from_j")?;
    Ok(LadderSet::from_generators(&rep.j_ops))
}

/// Barred operators written directly in single-site shift operators.
pub fn barred_direct(rep: &TwoSiteRep) -> Result<LadderSet, YangianError> {
    use Ladder::*;
    rep.require(AlgebraName::Su3, "barred_direct")?;
    let o1 = LadderSet::from_generators(&rep.site1_ops);
    let o2 = LadderSet::from_generators(&rep.site2_ops);
    let YangianParams { mu, nu, lambda, .. } = rep.params;
    // g(site1, site2) − g(site2, site1)
    let w = |g: &dyn Fn(&LadderSet, &LadderSet) -> ComplexMatrix| &g(&o1, &o2) - &g(&o2, &o1);
    let lin = |l: Ladder| &o1.get(l).scale_real(mu) + &o2.get(l).scale_real(nu);
    let mm = |a: &ComplexMatrix, b: &ComplexMatrix| a * b;

    let ip =
        w(
            &|a, b| {
                &mm(a.get(IPlus), b.get(I3)) + &mm(a.get(UMinus), b.get(VMinus)).scale_real(0.5)
            },
        );
    let imn =
        w(&|a, b| &mm(a.get(IMinus), b.get(I3)) + &mm(a.get(UPlus), b.get(VPlus)).scale_real(0.5));
    let u_shift = |b: &LadderSet| b.get(I3) - &b.get(I8).scale_real(1.5);
    let v_shift = |b: &LadderSet| b.get(I3) + &b.get(I8).scale_real(1.5);
    let up = w(&|a, b| &mm(a.get(UPlus), &u_shift(b)) + &mm(a.get(IMinus), b.get(VMinus)));
    let um = w(&|a, b| &mm(a.get(UMinus), &u_shift(b)) + &mm(a.get(IPlus), b.get(VPlus)));
    let vp = w(&|a, b| &mm(a.get(VPlus), &v_shift(b)) + &mm(a.get(UMinus), b.get(IMinus)));
    let vm = w(&|a, b| &mm(a.get(VMinus), &v_shift(b)) + &mm(a.get(UPlus), b.get(IPlus)));
    let i3 = w(&|a, b| {
        &mm(a.get(IPlus), b.get(IMinus))
            - &(&mm(a.get(UPlus), b.get(UMinus)) + &mm(a.get(VPlus), b.get(VMinus))).scale_real(0.5)
    });
    let i8 = w(&|a, b| &mm(a.get(UPlus), b.get(UMinus)) - &mm(a.get(VPlus), b.get(VMinus)));

    let half = lambda / 2.0;
    Ok(LadderSet::from_fn(|l| {
        let (corr, c) = match l {
            IPlus => (&ip, lambda),
            IMinus => (&imn, -lambda),
            UPlus => (&up, -half),
            UMinus => (&um, half),
            VPlus => (&vp, -half),
            VMinus => (&vm, half),
            I3 => (&i3, -half),
            I8 => (&i8, -half),
        };
        &lin(l) + &corr.scale_real(c)
    }))
}

/// Per-operator distance between [`barred_from_j`] and [`barred_direct`].
pub fn barred_cross_check(rep: &TwoSiteRep) -> Result<Vec<(Ladder, f64)>, YangianError> {
    let a = barred_from_j(rep)?;
    let b = barred_direct(rep)?;
    Ladder::ALL
        .iter()
        .map(|&l| Ok((l, max_abs_distance(a.get(l), b.get(l))?)))
        .collect()
}

/// Barred operators, returned only when both constructions agree to [`CROSS_CHECK_TOL`].
pub fn barred_ops(rep: &TwoSiteRep) -> Result<LadderSet, YangianError> {
    for (l, r) in barred_cross_check(rep)? {
        if !(r <= CROSS_CHECK_TOL) {
            return Err(YangianError::CrossCheck {
                op: l.symbol(),
                residual: r,
            });
        }
    }
    barred_from_j(rep)
}

/// Barred commutation table with structure coefficients scaled by `μ+ν`,
/// evaluated at any parameters.
pub fn barred_table_residuals(
    rep: &TwoSiteRep,
    tol: f64,
) -> Result<Vec<RelationCheck>, YangianError> {
    let bar = barred_ops(rep)?;
    Ok(ladder_relations(
        &bar,
        rep.params.mu_plus_nu(),
        "Eq38",
        "Eq39",
        tol,
    ))
}

/// Barred table on the constraint surface; errors off it.
pub fn verify_barred_table(rep: &TwoSiteRep, tol: f64) -> Result<Vec<RelationCheck>, YangianError> {
    if !rep.params.is_constrained() {
        return Err(YangianError::Precondition(format!(
            "barred table requires mu*nu = -lambda^2/4 (defect {:e})",
            rep.params.constraint_defect()
        )));
    }
    barred_table_residuals(rep, tol)
}

/// `Y^a = J^a/(μ+ν)` and the matching tilde shift operators.
#[derive(Debug, Clone)]
pub struct Normalized {
    pub y: Vec<ComplexMatrix>,
    pub tilde: LadderSet,
}

pub fn normalize(rep: &TwoSiteRep) -> Result<Normalized, YangianError> {
    rep.require(AlgebraName::Su3, "normalize")?;
    let s = rep.params.normalizer()?;
    let y: Vec<_> = rep.j_ops.iter().map(|j| j.scale_real(1.0 / s)).collect();
    let tilde = barred_ops(rep)?.map(|_, m| m.scale_real(1.0 / s));
    Ok(Normalized { y, tilde })
}

pub fn verify_tilde_table(
    rep: &TwoSiteRep,
    norm: &Normalized,
    tol: f64,
) -> Result<Vec<RelationCheck>, YangianError> {
    if !rep.params.is_constrained() {
        return Err(YangianError::Precondition(
            "tilde table requires mu*nu = -lambda^2/4".into(),
        ));
    }
    Ok(ladder_relations(&norm.tilde, 1.0, "Eq44", "Eq44", tol))
}

/// Distance of `Σ_a (J^a)²` from `(1/3)(μ+ν)² 1`.
pub fn j_square_third_residual(rep: &TwoSiteRep) -> f64 {
    let s = rep.params.mu_plus_nu();
    let want = ComplexMatrix::identity(rep.dim()).scale_real(s * s / 3.0);
    max_abs_distance(&j_square_sum(rep), &want).expect("same shape")
}

/// Distance of the shift-operator quadratic sum of the barred set from `(1/3)(μ+ν)² 1`.
pub fn barred_ladder_square_residual(rep: &TwoSiteRep) -> Result<f64, YangianError> {
    let s = rep.params.mu_plus_nu();
    let want = ComplexMatrix::identity(rep.dim()).scale_real(s * s / 3.0);
    Ok(max_abs_distance(
        &barred_ops(rep)?.ladder_square_sum(),
        &want,
    )?)
}

/// Distance of `Σ_a (Y^a)²` from `(1/3) 1`.
pub fn y_square_third_residual(norm: &Normalized) -> f64 {
    let n = norm.y[0].rows();
    let mut acc = ComplexMatrix::zeros(n, n);
    for y in &norm.y {
        acc += &(y * y);
    }
    max_abs_distance(&acc, &ComplexMatrix::identity(n).scale_real(1.0 / 3.0)).expect("same shape")
}

/// Closed-form eigenvalues of `Ĩ³`:
/// `0, ±1/2, ±q/2, 1/4 ± q/4, −1/4 ± q/4` with `q = √(μ² − 2μν + ν² − λ²)/(μ+ν)`.
pub fn i3_roots(params: &YangianParams) -> Result<[Complex; 9], YangianError> {
    let s = params.normalizer()?;
    let YangianParams { mu, nu, lambda, .. } = *params;
    let q = re(mu * mu - 2.0 * mu * nu + nu * nu - lambda * lambda).sqrt() / s;
    let h = re(0.5);
    let qq = q * 0.5;
    let quarter = re(0.25);
    let q4 = q * 0.25;
    Ok([
        re(0.0),
        h,
        -h,
        qq,
        -qq,
        quarter + q4,
        quarter - q4,
        -quarter + q4,
        -quarter - q4,
    ])
}

/// The constrained-surface spectrum `{0, 0, 0, ½, ½, ½, −½, −½, −½}`.
pub const I3_CONSTRAINED_ROOTS: [f64; 9] = [0.0, 0.0, 0.0, 0.5, 0.5, 0.5, -0.5, -0.5, -0.5];

/// `det(x·1 − M)`.
pub fn char_poly_at(m: &ComplexMatrix, x: Complex) -> Result<Complex, LinalgError> {
    let n = m.rows();
    det(&(&ComplexMatrix::identity(n).scale(x) - m))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub roots: Vec<[f64; 2]>,
    pub residuals: Vec<f64>,
    pub max_residual: f64,
}

/// `|det(x_k 1 − Ĩ³)|` at each closed-form root, plus the constrained set when it applies.
pub fn spectrum_check_i3(rep: &TwoSiteRep) -> Result<SpectrumReport, YangianError> {
    let norm = normalize(rep)?;
    let i3 = norm.tilde.get(Ladder::I3);
    let mut roots: Vec<Complex> = i3_roots(&rep.params)?.to_vec();
    if rep.params.is_constrained() {
        roots.extend(I3_CONSTRAINED_ROOTS.iter().map(|&x| re(x)));
    }
    spectrum_at(i3, &roots)
}

pub fn spectrum_at(m: &ComplexMatrix, roots: &[Complex]) -> Result<SpectrumReport, YangianError> {
    let residuals = roots
        .iter()
        .map(|&x| Ok(char_poly_at(m, x)?.norm()))
        .collect::<Result<Vec<_>, YangianError>>()?;
    Ok(SpectrumReport {
        roots: roots.iter().map(|z| [z.re, z.im]).collect(),
        max_residual: crate::report::worst(residuals.iter().copied()),
        residuals,
    })
}

/// `Ī⁻ = (Ī⁺)†` etc. together with Hermiticity of `J³` and `J⁸`.
pub fn barred_hermiticity_residual(rep: &TwoSiteRep) -> Result<f64, YangianError> {
    let bar = barred_ops(rep)?;
    let mut worst = ladder_adjoint_residual(&bar);
    for idx in [2, 7] {
        let j = &rep.j_ops[idx];
        worst = worst.max(max_abs_distance(j, &crate::linalg::dagger(j))?);
    }
    Ok(worst)
}
