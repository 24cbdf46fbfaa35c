//! Pure bipartite states, entanglement measures, and the Yangian transition operators
//! `P = a(J³ + 2s₁³s₂³)` (two qubits) and `P = η₁V̄⁺ + η₂V̄⁻` (quark ⊗ antiquark).
//!
//! Qubit labels: `|1⟩` is spin up (matrix index 0) and `|0⟩` spin down, so `|11⟩` is
//! basis index 0. Flavor labels: `u, d, s = 0, 1, 2` on both sites and the product
//! index is `3·quark + antiquark`.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::lie::{gellmann_basis, Ladder};
use crate::linalg::{hermitian_eigenvalues, re, Complex, ComplexMatrix, LinalgError};
use crate::report::RelationCheck;
use crate::yangian::{barred_ops, build_su2, build_su3, SiteRep, YangianError, YangianParams};

/// Unit norm tolerance on `Σ|amp|²`.
pub const NORM_TOL: f64 = 1e-12;

/// Final measures at or below this count as disentangled.
pub const DISENTANGLED_TOL: f64 = 1e-10;

/// `‖P|φ⟩‖` below this is a zero state.
pub const ZERO_STATE_TOL: f64 = 1e-14;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EntanglementError {
    #[error("expected a {expected:?} state, got {got:?}")]
    WrongDims {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("state is not normalized: sum |amp|^2 = {norm_sq}")]
    NotNormalized { norm_sq: f64 },
    #[error("amplitudes violate a^2 + b^2 = 1 (got {sum_sq})")]
    AmplitudeNormalization { sum_sq: f64 },
    #[error("transition operator annihilates the state (|P phi| = {norm:e})")]
    ZeroState { norm: f64 },
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Yangian(#[from] YangianError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub dims: (usize, usize),
    pub amplitudes: Vec<Complex>,
}

impl StateVector {
    pub fn new(dims: (usize, usize), amplitudes: Vec<Complex>) -> Result<Self, EntanglementError> {
        if dims.0 == 0 || dims.1 == 0 || amplitudes.len() != dims.0 * dims.1 {
            return Err(EntanglementError::Config(format!(
                "{} amplitudes do not fit dims {:?}",
                amplitudes.len(),
                dims
            )));
        }
        Ok(Self { dims, amplitudes })
    }

    pub fn basis(dims: (usize, usize), i: usize, j: usize) -> Self {
        let mut amplitudes = vec![re(0.0); dims.0 * dims.1];
        amplitudes[i * dims.1 + j] = re(1.0);
        Self { dims, amplitudes }
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn is_unit(&self) -> bool {
        (self.norm_sq() - 1.0).abs() <= NORM_TOL
    }

    fn require_unit(&self) -> Result<(), EntanglementError> {
        if self.is_unit() {
            Ok(())
        } else {
            Err(EntanglementError::NotNormalized {
                norm_sq: self.norm_sq(),
            })
        }
    }

    fn require_dims(&self, expected: (usize, usize)) -> Result<(), EntanglementError> {
        if self.dims == expected {
            Ok(())
        } else {
            Err(EntanglementError::WrongDims {
                expected,
                got: self.dims,
            })
        }
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self {
            dims: self.dims,
            amplitudes: self.amplitudes.iter().map(|a| a * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dims, other.dims);
        Self {
            dims: self.dims,
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `(|ψ⟩/‖ψ‖, ‖ψ‖)`.
    pub fn normalized(&self) -> Result<(Self, f64), EntanglementError> {
        let n = self.norm();
        if !(n > ZERO_STATE_TOL) {
            return Err(EntanglementError::ZeroState { norm: n });
        }
        Ok((self.scale(re(1.0 / n)), n))
    }

    /// Amplitudes as a `d₁ × d₂` matrix.
    pub fn coefficient_matrix(&self) -> ComplexMatrix {
        let (_, d2) = self.dims;
        ComplexMatrix::from_fn(self.dims.0, d2, |i, j| self.amplitudes[i * d2 + j])
    }

    pub fn apply(&self, op: &ComplexMatrix) -> Result<Self, EntanglementError> {
        Ok(Self {
            dims: self.dims,
            amplitudes: op.apply(&self.amplitudes)?,
        })
    }

    pub fn max_abs_distance(&self, other: &Self) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Distance after removing the global phase that best aligns `other` with `self`.
    pub fn distance_up_to_phase(&self, other: &Self) -> f64 {
        let ov = other.inner(self);
        let phase = if ov.norm() > 0.0 {
            ov / ov.norm()
        } else {
            re(1.0)
        };
        self.max_abs_distance(&other.scale(phase))
    }
}

impl Serialize for StateVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let col = ComplexMatrix::from_fn(self.amplitudes.len(), 1, |i, _| self.amplitudes[i]);
        let mut st = s.serialize_struct("StateVector", 2)?;
        st.serialize_field("dims", &[self.dims.0, self.dims.1])?;
        st.serialize_field("amplitudes", &col)?;
        st.end()
    }
}

/// `2|αδ − βγ|` for amplitudes `(α, β, γ, δ)` in Kronecker order.
pub fn concurrence(state: &StateVector) -> Result<f64, EntanglementError> {
    state.require_dims((2, 2))?;
    state.require_unit()?;
    let a = &state.amplitudes;
    Ok(2.0 * (a[0] * a[3] - a[1] * a[2]).norm())
}

/// Squared Schmidt coefficients: eigenvalues of `M M†`, descending.
pub fn schmidt_probabilities(state: &StateVector) -> Result<Vec<f64>, EntanglementError> {
    let m = state.coefficient_matrix();
    let rho = &m * &crate::linalg::dagger(&m);
    let mut p = hermitian_eigenvalues(&rho)?;
    p.reverse();
    Ok(p)
}

/// `−Σ p_k log_base p_k` over the squared Schmidt coefficients.
pub fn entanglement_entropy(state: &StateVector, base: f64) -> Result<f64, EntanglementError> {
    state.require_unit()?;
    let ln_b = base.ln();
    Ok(schmidt_probabilities(state)?
        .into_iter()
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.ln() / ln_b)
        .sum::<f64>()
        .max(0.0))
}

pub fn schmidt_entropy_base3(state: &StateVector) -> Result<f64, EntanglementError> {
    state.require_dims((3, 3))?;
    entanglement_entropy(state, 3.0)
}

fn check_pair(a: f64, b: f64) -> Result<(), EntanglementError> {
    let sum_sq = a * a + b * b;
    if !a.is_finite() || !b.is_finite() || (sum_sq - 1.0).abs() > NORM_TOL {
        return Err(EntanglementError::AmplitudeNormalization { sum_sq });
    }
    Ok(())
}

/// `(1/√2)[α(|00⟩ + |11⟩) + β(|01⟩ + |10⟩)]`.
pub fn initial_su2(alpha: f64, beta: f64) -> Result<StateVector, EntanglementError> {
    check_pair(alpha, beta)?;
    let s = FRAC_1_SQRT_2;
    StateVector::new(
        (2, 2),
        vec![re(alpha * s), re(beta * s), re(beta * s), re(alpha * s)],
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TransitionKind {
    Su2P { a: f64 },
    Su3P { eta1: f64, eta2: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransitionSpec {
    pub kind: TransitionKind,
    pub params: YangianParams,
}

/// Coefficients of a 3⊗3 state on the five meson states, plus what they miss.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MesonExpansion {
    pub kappa_plus: [f64; 2],
    pub kappa_minus: [f64; 2],
    pub pi0: [f64; 2],
    pub eta0: [f64; 2],
    pub eta0_prime: [f64; 2],
    /// Norm of the component orthogonal to all five.
    pub remainder: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntanglementReport {
    pub system: &'static str,
    pub initial_measure: f64,
    pub final_measure: f64,
    /// `‖P|φ⟩‖` before normalization.
    pub norm_factor: f64,
    pub final_state: StateVector,
    pub disentangled: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meson_expansion: Option<MesonExpansion>,
    /// Comparisons against the closed-form final states, norms and measures.
    pub checks: Vec<RelationCheck>,
}

/// `(μ − λ/2)/(μ+ν)` and `(ν + λ/2)/(μ+ν)`, the two β-coefficients of the final qubit state.
pub fn su2_final_coefficients(params: &YangianParams) -> Result<(f64, f64), YangianError> {
    let s = params.normalizer()?;
    Ok((
        (params.mu - params.lambda / 2.0) / s,
        (params.nu + params.lambda / 2.0) / s,
    ))
}

/// `a` fixed by `a²[α² + (p² + q²)β²] = 2`, positive root.
pub fn su2_normalizing_amplitude(
    params: &YangianParams,
    alpha: f64,
    beta: f64,
) -> Result<f64, YangianError> {
    let (p, q) = su2_final_coefficients(params)?;
    Ok((2.0 / (alpha * alpha + (p * p + q * q) * beta * beta)).sqrt())
}

/// `|p q a² β²|`.
pub fn su2_closed_form_concurrence(
    params: &YangianParams,
    a: f64,
    beta: f64,
) -> Result<f64, YangianError> {
    let (p, q) = su2_final_coefficients(params)?;
    Ok((p * q * a * a * beta * beta).abs())
}

/// `(a/√2)[−pβ|01⟩ − qβ|10⟩ + α|11⟩]`.
pub fn su2_closed_form_state(
    params: &YangianParams,
    a: f64,
    alpha: f64,
    beta: f64,
) -> Result<StateVector, YangianError> {
    let (p, q) = su2_final_coefficients(params)?;
    let k = a * FRAC_1_SQRT_2;
    // index = 2·site1 + site2 with |1⟩ ↦ 0, |0⟩ ↦ 1
    let mut amps = vec![re(0.0); 4];
    amps[0] = re(k * alpha);
    amps[2] = re(-k * p * beta);
    amps[1] = re(-k * q * beta);
    Ok(StateVector {
        dims: (2, 2),
        amplitudes: amps,
    })
}

/// `a(J³ + 2 s₁³ s₂³)` on ℂ²⊗ℂ².
pub fn su2_transition_operator(
    params: YangianParams,
    a: f64,
) -> Result<ComplexMatrix, YangianError> {
    let rep = build_su2(params)?;
    let s1s2 = &rep.site1_ops[2] * &rep.site2_ops[2];
    Ok((&rep.j_ops[2] + &s1s2.scale_real(2.0)).scale_real(a))
}

pub fn apply_su2_transition(
    state: &StateVector,
    spec: &TransitionSpec,
) -> Result<EntanglementReport, EntanglementError> {
    let TransitionKind::Su2P { a } = spec.kind else {
        return Err(EntanglementError::Config(
            "su2 transition needs kind su2_p".into(),
        ));
    };
    state.require_dims((2, 2))?;
    let initial = concurrence(state)?;
    let p_op = su2_transition_operator(spec.params, a)?;
    let raw = state.apply(&p_op)?;
    let (fin, n) = raw.normalized()?;
    let final_measure = concurrence(&fin)?;

    // The closed forms are stated for the symmetric input; recover (α, β) from it.
    let amps = &state.amplitudes;
    let alpha = amps[0].re * std::f64::consts::SQRT_2;
    let beta = amps[1].re * std::f64::consts::SQRT_2;
    let symmetric = (amps[0] - amps[3]).norm() < NORM_TOL
        && (amps[1] - amps[2]).norm() < NORM_TOL
        && amps.iter().all(|z| z.im.abs() < NORM_TOL);
    let mut checks = Vec::new();
    if symmetric {
        let closed = su2_closed_form_state(&spec.params, a, alpha, beta)?;
        checks.push(RelationCheck::new(
            "Eq11:final-state",
            raw.max_abs_distance(&closed),
            1e-10,
        ));
        let (p, q) = su2_final_coefficients(&spec.params)?;
        let eq12 = a * a * (alpha * alpha + (p * p + q * q) * beta * beta) / 2.0;
        checks.push(RelationCheck::new(
            "Eq12:norm",
            (raw.norm_sq() - eq12).abs(),
            1e-10,
        ));
        let a_eff = a / n;
        let c13 = su2_closed_form_concurrence(&spec.params, a_eff, beta)?;
        checks.push(RelationCheck::new(
            "Eq13:concurrence",
            (final_measure - c13).abs(),
            1e-10,
        ));
    }
    Ok(EntanglementReport {
        system: "su2",
        initial_measure: initial,
        final_measure,
        norm_factor: n,
        final_state: fin,
        disentangled: final_measure <= DISENTANGLED_TOL,
        meson_expansion: None,
        checks,
    })
}

pub const U: usize = 0;
pub const D: usize = 1;
pub const S: usize = 2;

/// `|q q̄'⟩` with quark on site 1 and antiquark on site 2.
pub fn flavor(q: usize, anti: usize) -> StateVector {
    StateVector::basis((3, 3), q, anti)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MesonBasis {
    pub kappa_plus: StateVector,
    pub kappa_minus: StateVector,
    pub pi0: StateVector,
    pub eta0: StateVector,
    pub eta0_prime: StateVector,
}

fn combo(terms: &[(f64, usize)]) -> StateVector {
    let mut v = StateVector::basis((3, 3), 0, 0).scale(re(0.0));
    for &(c, q) in terms {
        v = v.add(&flavor(q, q).scale(re(c)));
    }
    v
}

/// `κ⁺ = |us̄⟩`, `κ⁻ = |sū⟩`, `π⁰ = (|dd̄⟩ − |uū⟩)/√2`,
/// `η⁰ = (2|ss̄⟩ − |uū⟩ − |dd̄⟩)/√6`, `η⁰′ = (|uū⟩ + |dd̄⟩ + |ss̄⟩)/√3`.
pub fn meson_basis() -> MesonBasis {
    let r2 = FRAC_1_SQRT_2;
    let r3 = 1.0 / 3f64.sqrt();
    let r6 = 1.0 / 6f64.sqrt();
    MesonBasis {
        kappa_plus: flavor(U, S),
        kappa_minus: flavor(S, U),
        pi0: combo(&[(-r2, U), (r2, D)]),
        eta0: combo(&[(-r6, U), (-r6, D), (2.0 * r6, S)]),
        eta0_prime: combo(&[(r3, U), (r3, D), (r3, S)]),
    }
}

impl MesonBasis {
    pub fn expand(&self, state: &StateVector) -> MesonExpansion {
        let c = |m: &StateVector| {
            let z = m.inner(state);
            [z.re, z.im]
        };
        let captured: f64 = [
            &self.kappa_plus,
            &self.kappa_minus,
            &self.pi0,
            &self.eta0,
            &self.eta0_prime,
        ]
        .iter()
        .map(|m| m.inner(state).norm_sqr())
        .sum();
        MesonExpansion {
            kappa_plus: c(&self.kappa_plus),
            kappa_minus: c(&self.kappa_minus),
            pi0: c(&self.pi0),
            eta0: c(&self.eta0),
            eta0_prime: c(&self.eta0_prime),
            remainder: (state.norm_sq() - captured).max(0.0).sqrt(),
        }
    }

    /// `(1/√3)η⁰′ + (1/√2)π⁰ − (1/√6)η⁰`.
    pub fn reduced_combination(&self) -> StateVector {
        self.eta0_prime
            .scale(re(1.0 / 3f64.sqrt()))
            .add(&self.pi0.scale(re(FRAC_1_SQRT_2)))
            .add(&self.eta0.scale(re(-1.0 / 6f64.sqrt())))
    }
}

/// `α₁|κ⁺⟩ + α₂|κ⁻⟩`.
pub fn initial_meson(alpha1: f64, alpha2: f64) -> Result<StateVector, EntanglementError> {
    check_pair(alpha1, alpha2)?;
    let b = meson_basis();
    Ok(b.kappa_plus
        .scale(re(alpha1))
        .add(&b.kappa_minus.scale(re(alpha2))))
}

/// `η₁V̄⁺ + η₂V̄⁻` over quark ⊗ antiquark sites.
pub fn su3_transition_operator(
    params: YangianParams,
    eta1: f64,
    eta2: f64,
) -> Result<ComplexMatrix, YangianError> {
    let g = gellmann_basis();
    let rep = build_su3(
        params,
        SiteRep::fundamental(g.clone()),
        SiteRep::conjugate(g),
    )?;
    let bar = barred_ops(&rep)?;
    Ok(&bar.get(Ladder::VPlus).scale_real(eta1) + &bar.get(Ladder::VMinus).scale_real(eta2))
}

/// `X = (μ+ν)η₂α₁ + (μ+λ)η₂α₂` and `Z = (μ+ν)η₁(α₁+α₂)`.
pub fn su3_closed_form_xz(
    params: &YangianParams,
    eta1: f64,
    eta2: f64,
    a1: f64,
    a2: f64,
) -> (f64, f64) {
    let s = params.mu_plus_nu();
    (
        s * eta2 * a1 + (params.mu + params.lambda) * eta2 * a2,
        s * eta1 * (a1 + a2),
    )
}

/// `(X + Z)/√3 η⁰′ + X/√2 π⁰ + (2Z − X)/√6 η⁰`.
pub fn su3_closed_form_state(
    params: &YangianParams,
    eta1: f64,
    eta2: f64,
    a1: f64,
    a2: f64,
) -> StateVector {
    let (x, z) = su3_closed_form_xz(params, eta1, eta2, a1, a2);
    let b = meson_basis();
    b.eta0_prime
        .scale(re((x + z) / 3f64.sqrt()))
        .add(&b.pi0.scale(re(x * FRAC_1_SQRT_2)))
        .add(&b.eta0.scale(re((2.0 * z - x) / 6f64.sqrt())))
}

fn xlog3x(p: f64) -> f64 {
    if p > 0.0 {
        -p * p.ln() / 3f64.ln()
    } else {
        0.0
    }
}

/// Whether `(μ, ν, λ)` sits at the disentangling point `μ = −ν = λ/2`.
pub fn is_reduced_point(params: &YangianParams) -> bool {
    (params.mu + params.nu).abs() <= 1e-12 && (params.mu - params.lambda / 2.0).abs() <= 1e-12
}

pub fn apply_su3_transition(
    state: &StateVector,
    spec: &TransitionSpec,
) -> Result<EntanglementReport, EntanglementError> {
    let TransitionKind::Su3P { eta1, eta2 } = spec.kind else {
        return Err(EntanglementError::Config(
            "su3 transition needs kind su3_p".into(),
        ));
    };
    state.require_dims((3, 3))?;
    let initial = schmidt_entropy_base3(state)?;
    let p_op = su3_transition_operator(spec.params, eta1, eta2)?;
    let raw = state.apply(&p_op)?;
    let (fin, n) = raw.normalized()?;
    let final_measure = schmidt_entropy_base3(&fin)?;
    let basis = meson_basis();

    let a1 = basis.kappa_plus.inner(state).re;
    let a2 = basis.kappa_minus.inner(state).re;
    let on_kappa = (state.norm_sq() - a1 * a1 - a2 * a2).abs() < NORM_TOL
        && state.amplitudes.iter().all(|z| z.im.abs() < NORM_TOL);
    let mut checks = Vec::new();
    if on_kappa {
        let params = &spec.params;
        let closed = su3_closed_form_state(params, eta1, eta2, a1, a2);
        checks.push(RelationCheck::new(
            "Eq55:final-state",
            raw.max_abs_distance(&closed),
            1e-10,
        ));
        let (x, z) = su3_closed_form_xz(params, eta1, eta2, a1, a2);
        checks.push(RelationCheck::new(
            "Eq56:norm",
            (raw.norm_sq() - (x * x + z * z)).abs(),
            1e-10,
        ));
        let n_xz = (x * x + z * z).sqrt();
        if n_xz > 0.0 {
            let e57 = xlog3x((x / n_xz).powi(2)) + xlog3x((z / n_xz).powi(2));
            checks.push(RelationCheck::new(
                "Eq57:entropy",
                (final_measure - e57).abs(),
                1e-10,
            ));
        }
        if is_reduced_point(params) {
            let comb = basis.reduced_combination();
            checks.push(RelationCheck::new(
                "Eq58:direction",
                fin.distance_up_to_phase(&comb),
                1e-10,
            ));
            let amp = 1.5 * params.lambda * eta2 * a2;
            checks.push(RelationCheck::new(
                "Eq59:amplitude",
                (n - amp.abs()).abs(),
                1e-10,
            ));
            checks.push(RelationCheck::new("Eq60:entropy", final_measure, 1e-12));
        }
    }
    Ok(EntanglementReport {
        system: "su3",
        initial_measure: initial,
        final_measure,
        norm_factor: n,
        meson_expansion: Some(basis.expand(&fin)),
        final_state: fin,
        disentangled: final_measure <= DISENTANGLED_TOL,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(mu: f64, nu: f64, l: f64) -> YangianParams {
        YangianParams::new(mu, nu, l).unwrap()
    }

    #[test]
    fn concurrence_cases() {
        let bell = initial_su2(1.0, 0.0).unwrap();
        assert!((concurrence(&bell).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(concurrence(&StateVector::basis((2, 2), 0, 1)).unwrap(), 0.0);
        let s = initial_su2(0.8, 0.6).unwrap();
        assert!((concurrence(&s).unwrap() - 0.28).abs() < 1e-15);
        let h = FRAC_1_SQRT_2;
        assert!(concurrence(&initial_su2(h, h).unwrap()).unwrap() < 1e-15);
        assert!(initial_su2(0.8, 0.8).is_err());
        let unnorm = StateVector::new((2, 2), vec![re(1.0); 4]).unwrap();
        assert!(matches!(
            concurrence(&unnorm),
            Err(EntanglementError::NotNormalized { .. })
        ));
        assert!(concurrence(&StateVector::basis((3, 3), 0, 0)).is_err());
    }

    #[test]
    fn entropy_cases() {
        assert!(schmidt_entropy_base3(&flavor(U, U)).unwrap().abs() < 1e-15);
        let h = FRAC_1_SQRT_2;
        let two = flavor(U, U).scale(re(h)).add(&flavor(S, S).scale(re(h)));
        let log3_2 = 2f64.ln() / 3f64.ln();
        assert!((schmidt_entropy_base3(&two).unwrap() - log3_2).abs() < 1e-12);
        assert!(
            (schmidt_entropy_base3(&initial_meson(h, h).unwrap()).unwrap() - log3_2).abs() < 1e-12
        );
        let e = schmidt_entropy_base3(&initial_meson(0.8, 0.6).unwrap()).unwrap();
        assert!((e - (xlog3x(0.64) + xlog3x(0.36))).abs() < 1e-12);
        assert!((e - 0.594_75).abs() < 1e-4);
        assert!(schmidt_entropy_base3(&initial_meson(1.0, 0.0).unwrap()).unwrap() < 1e-15);
        let r3 = 1.0 / 3f64.sqrt();
        let max = combo(&[(r3, U), (r3, D), (r3, S)]);
        assert!((schmidt_entropy_base3(&max).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn meson_basis_relations() {
        let b = meson_basis();
        let all = [
            &b.kappa_plus,
            &b.kappa_minus,
            &b.pi0,
            &b.eta0,
            &b.eta0_prime,
        ];
        for (i, x) in all.iter().enumerate() {
            assert!((x.norm_sq() - 1.0).abs() < 1e-15);
            for y in &all[i + 1..] {
                assert!(x.inner(y).norm() < 1e-15);
            }
        }
        assert!(b.reduced_combination().max_abs_distance(&flavor(D, D)) < 1e-15);
        let ss = b
            .eta0_prime
            .scale(re(1.0 / 3f64.sqrt()))
            .add(&b.eta0.scale(re((2.0f64 / 3.0).sqrt())));
        assert!(ss.max_abs_distance(&flavor(S, S)) < 1e-15);
        assert_eq!(b.kappa_plus.amplitudes[2], re(1.0));
        assert_eq!(b.kappa_minus.amplitudes[6], re(1.0));
    }

    #[test]
    fn su2_transition_matches_closed_forms() {
        let p = params(1.0, -0.25, 1.0);
        let a = su2_normalizing_amplitude(&p, 0.6, 0.8).unwrap();
        let spec = TransitionSpec {
            kind: TransitionKind::Su2P { a },
            params: p,
        };
        let r = apply_su2_transition(&initial_su2(0.6, 0.8).unwrap(), &spec).unwrap();
        assert!(r.checks.iter().all(|c| c.pass), "{:?}", r.checks);
        assert!((r.norm_factor - 1.0).abs() < 1e-12);
        let want = (0.5 * 0.25 / (0.75f64 * 0.75) * a * a * 0.64).abs();
        assert!((r.final_measure - want).abs() < 1e-12);

        let spec = TransitionSpec {
            kind: TransitionKind::Su2P { a: 1.0 },
            params: params(0.7, 1.3, 0.4),
        };
        let r = apply_su2_transition(&initial_su2(1.0, 0.0).unwrap(), &spec).unwrap();
        assert!(r.final_measure < 1e-15);
        assert!(
            r.final_state
                .distance_up_to_phase(&StateVector::basis((2, 2), 0, 0))
                < 1e-15
        );
    }

    #[test]
    fn su2_reduced_point_is_undefined() {
        let spec = TransitionSpec {
            kind: TransitionKind::Su2P { a: 1.0 },
            params: params(0.5, -0.5, 1.0),
        };
        let e = apply_su2_transition(&initial_su2(0.6, 0.8).unwrap(), &spec).unwrap_err();
        assert!(matches!(
            e,
            EntanglementError::Yangian(YangianError::Normalization { .. })
        ));
    }

    #[test]
    fn su3_transition_direct_oracle() {
        // Components from expanding V̄± by hand on |us̄⟩ and |sū⟩.
        for (mu, nu, l) in [(1.0, -0.25, 1.0), (0.7, 1.3, 0.4), (0.5, -0.5, 1.0)] {
            let p = params(mu, nu, l);
            let (e1, e2, a1, a2) = (0.3, 0.7, 0.6, 0.8);
            let raw = initial_meson(a1, a2)
                .unwrap()
                .apply(&su3_transition_operator(p, e1, e2).unwrap())
                .unwrap();
            let h = l / 2.0;
            let uu = -(e1 * a1 * (h + nu) + e2 * a2 * (h - mu));
            let dd = -h * (e1 * a1 + e2 * a2);
            let ss = -(e1 * a1 * (h - mu) + e2 * a2 * (h + nu));
            let want = combo(&[(uu, U), (dd, D), (ss, S)]);
            assert!(raw.max_abs_distance(&want) < 1e-14, "{:?}", (mu, nu, l));
        }
    }

    #[test]
    fn su3_reduced_point_disentangles() {
        let spec = TransitionSpec {
            kind: TransitionKind::Su3P {
                eta1: 1.0,
                eta2: 1.0,
            },
            params: params(0.5, -0.5, 1.0),
        };
        let r = apply_su3_transition(&initial_meson(0.6, 0.8).unwrap(), &spec).unwrap();
        assert!(r.final_measure <= 1e-12);
        assert!(r.disentangled);
        assert!(r.final_state.distance_up_to_phase(&flavor(D, D)) < 1e-14);
        let dir = r
            .checks
            .iter()
            .find(|c| c.relation == "Eq58:direction")
            .unwrap();
        assert!(dir.pass);
        assert!((r.norm_factor - 0.5 * 1.4).abs() < 1e-14);

        let zero = TransitionSpec {
            kind: TransitionKind::Su3P {
                eta1: 0.8,
                eta2: -0.6,
            },
            params: params(0.5, -0.5, 1.0),
        };
        assert!(matches!(
            apply_su3_transition(&initial_meson(0.6, 0.8).unwrap(), &zero),
            Err(EntanglementError::ZeroState { .. })
        ));
        assert!(apply_su3_transition(&initial_su2(1.0, 0.0).unwrap(), &spec).is_err());
    }
}
