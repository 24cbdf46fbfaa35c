//! su(2) and su(3) fundamental representations, structure constants, Casimirs and
//! the I/U/V-spin ladder operators.
//!
//! Generator indices are stored 0-based; every label that leaves this module
//! (relation names, report keys) uses the conventional 1-based numbering.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{
    anticommutator, commutator, dagger, im, matmul, max_abs_distance, re, Complex, ComplexMatrix,
};
use crate::report::RelationCheck;

/// Imaginary residue allowed when extracting real structure constants from traces.
pub const STRUCTURE_IMAG_TOL: f64 = 1e-12;

/// The two forms of the quadratic Casimir must agree to this.
pub const CASIMIR_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LieError {
    #[error("structure constant {table}_{{{a}{b}{c}}} has imaginary residue {residue:e}")]
    ComplexStructureConstant {
        table: &'static str,
        a: usize,
        b: usize,
        c: usize,
        residue: f64,
    },
    #[error("Casimir forms disagree: max |Σ F² − triple form| = {residual:e}")]
    CasimirMismatch { residual: f64 },
    #[error("{0} requires the su(3) basis")]
    NotSu3(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraName {
    Su2,
    Su3,
}

/// Dense `n × n × n` real table, e.g. `f_abc` or `d_abc`.
#[derive(Clone, PartialEq)]
pub struct StructureTable {
    n: usize,
    data: Vec<f64>,
}

impl StructureTable {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n * n],
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> f64 {
        self.data[(a * self.n + b) * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize, c: usize, v: f64) {
        self.data[(a * self.n + b) * self.n + c] = v;
    }

    /// Entry by 1-based index triple, as written in the literature.
    pub fn at(&self, a: usize, b: usize, c: usize) -> f64 {
        self.get(a - 1, b - 1, c - 1)
    }

    /// Sets `(a, b, c)` and every permutation, with sign `±1` for odd permutations.
    fn set_all_perms(&mut self, (a, b, c): (usize, usize, usize), v: f64, odd_sign: f64) {
        for (x, y, z, s) in [
            (a, b, c, 1.0),
            (b, c, a, 1.0),
            (c, a, b, 1.0),
            (b, a, c, odd_sign),
            (a, c, b, odd_sign),
            (c, b, a, odd_sign),
        ] {
            self.set(x, y, z, s * v);
        }
    }

    pub fn iter_nonzero(&self, tol: f64) -> impl Iterator<Item = (usize, usize, usize, f64)> + '_ {
        let n = self.n;
        (0..n * n * n).filter_map(move |i| {
            let v = self.data[i];
            (v.abs() > tol).then_some((i / (n * n), (i / n) % n, i % n, v))
        })
    }
}

impl std::fmt::Debug for StructureTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut m = f.debug_map();
        for (a, b, c, v) in self.iter_nonzero(1e-14) {
            if a < b && b < c {
                m.entry(&format!("{}{}{}", a + 1, b + 1, c + 1), &v);
            }
        }
        m.finish()
    }
}

/// Generators `F^a` of a fundamental representation with their structure tables.
#[derive(Debug, Clone)]
pub struct LieBasis {
    pub name: AlgebraName,
    pub rep_dim: usize,
    /// `F^a = λ^a / 2` (su(3)) or `S_a = σ_a / 2` (su(2)).
    pub generators: Vec<ComplexMatrix>,
    pub f: StructureTable,
    pub d: StructureTable,
}

impl LieBasis {
    #[inline]
    pub fn n_gens(&self) -> usize {
        self.generators.len()
    }

    /// `λ^a = 2 F^a`.
    pub fn doubled(&self, a: usize) -> ComplexMatrix {
        self.generators[a].scale_real(2.0)
    }
}

fn pauli_matrices() -> [ComplexMatrix; 3] {
    [
        ComplexMatrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]),
        ComplexMatrix::from_rows(&[vec![re(0.0), im(-1.0)], vec![im(1.0), re(0.0)]]),
        ComplexMatrix::diag_real(&[1.0, -1.0]),
    ]
}

/// Spin-½ operators `S_a = σ_a / 2` with `f = ε` and `d = 0`.
pub fn pauli_basis() -> LieBasis {
    let generators: Vec<_> = pauli_matrices().iter().map(|s| s.scale_real(0.5)).collect();
    let mut f = StructureTable::zeros(3);
    f.set_all_perms((0, 1, 2), 1.0, -1.0);
    LieBasis {
        name: AlgebraName::Su2,
        rep_dim: 2,
        generators,
        f,
        d: StructureTable::zeros(3),
    }
}

/// The eight Gell-Mann matrices `λ^1 … λ^8`.
pub fn gellmann_matrices() -> [ComplexMatrix; 8] {
    let z = re(0.0);
    let o = re(1.0);
    let s3 = 1.0 / 3f64.sqrt();
    [
        ComplexMatrix::from_rows(&[vec![z, o, z], vec![o, z, z], vec![z, z, z]]),
        ComplexMatrix::from_rows(&[vec![z, im(-1.0), z], vec![im(1.0), z, z], vec![z, z, z]]),
        ComplexMatrix::diag_real(&[1.0, -1.0, 0.0]),
        ComplexMatrix::from_rows(&[vec![z, z, o], vec![z, z, z], vec![o, z, z]]),
        ComplexMatrix::from_rows(&[vec![z, z, im(-1.0)], vec![z, z, z], vec![im(1.0), z, z]]),
        ComplexMatrix::from_rows(&[vec![z, z, z], vec![z, z, o], vec![z, o, z]]),
        ComplexMatrix::from_rows(&[vec![z, z, z], vec![z, z, im(-1.0)], vec![z, im(1.0), z]]),
        ComplexMatrix::diag_real(&[s3, s3, -2.0 * s3]),
    ]
}

/// su(3) fundamental, `F^a = λ^a / 2`, with `f` and `d` filled from trace formulas.
pub fn gellmann_basis() -> LieBasis {
    let generators: Vec<_> = gellmann_matrices()
        .iter()
        .map(|l| l.scale_real(0.5))
        .collect();
    let mut basis = LieBasis {
        name: AlgebraName::Su3,
        rep_dim: 3,
        generators,
        f: StructureTable::zeros(8),
        d: StructureTable::zeros(8),
    };
    basis.f = compute_f(&basis).expect("Gell-Mann traces are real");
    basis.d = compute_d(&basis).expect("Gell-Mann traces are real");
    basis
}

fn trace_table(
    basis: &LieBasis,
    table: &'static str,
    pair: impl Fn(&ComplexMatrix, &ComplexMatrix) -> ComplexMatrix,
    prefactor: Complex,
) -> Result<StructureTable, LieError> {
    let n = basis.n_gens();
    let lambdas: Vec<_> = (0..n).map(|a| basis.doubled(a)).collect();
    let mut out = StructureTable::zeros(n);
    for a in 0..n {
        for b in 0..n {
            let p = pair(&lambdas[a], &lambdas[b]);
            for (c, lc) in lambdas.iter().enumerate() {
                let v = matmul(&p, lc).expect("square generators").trace() * prefactor;
                if v.im.abs() > STRUCTURE_IMAG_TOL {
                    return Err(LieError::ComplexStructureConstant {
                        table,
                        a: a + 1,
                        b: b + 1,
                        c: c + 1,
                        residue: v.im.abs(),
                    });
                }
                out.set(a, b, c, v.re);
            }
        }
    }
    Ok(out)
}

/// `f_abc = Tr([λ_a, λ_b] λ_c) / 4i`.
pub fn compute_f(basis: &LieBasis) -> Result<StructureTable, LieError> {
    trace_table(
        basis,
        "f",
        |x, y| commutator(x, y).expect("same shape"),
        Complex::new(0.0, -0.25),
    )
}

/// `d_abc = Tr({λ_a, λ_b} λ_c) / 4`.
pub fn compute_d(basis: &LieBasis) -> Result<StructureTable, LieError> {
    trace_table(
        basis,
        "d",
        |x, y| anticommutator(x, y).expect("same shape"),
        re(0.25),
    )
}

/// Max over `(i, j, k, n)` of `|f_ijm f_kmn + f_kim f_jmn + f_jkm f_imn|`.
pub fn verify_jacobi(f: &StructureTable) -> f64 {
    let n = f.dim();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let s: f64 = (0..n)
                        .map(|m| {
                            f.get(i, j, m) * f.get(k, m, l)
                                + f.get(k, i, m) * f.get(j, m, l)
                                + f.get(j, k, m) * f.get(i, m, l)
                        })
                        .sum();
                    worst = worst.max(s.abs());
                }
            }
        }
    }
    worst
}

/// Max over `(i, j, k, n)` of `|f_ijm d_knm + f_ikm d_jnm + f_inm d_jkm|`.
pub fn verify_fd_identity(f: &StructureTable, d: &StructureTable) -> f64 {
    let n = f.dim();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let s: f64 = (0..n)
                        .map(|m| {
                            f.get(i, j, m) * d.get(k, l, m)
                                + f.get(i, k, m) * d.get(j, l, m)
                                + f.get(i, l, m) * d.get(j, k, m)
                        })
                        .sum();
                    worst = worst.max(s.abs());
                }
            }
        }
    }
    worst
}

fn triple_sum(basis: &LieBasis, table: &StructureTable) -> ComplexMatrix {
    let g = &basis.generators;
    let mut acc = ComplexMatrix::zeros(basis.rep_dim, basis.rep_dim);
    for (a, b, c, v) in table.iter_nonzero(0.0) {
        acc += &(&(&g[a] * &g[b]) * &g[c]).scale_real(v);
    }
    acc
}

/// Quadratic Casimir `Σ F_a²`, cross-checked against `−(2i/n) Σ f_abc F_a F_b F_c`.
///
/// For su(n) the adjoint Casimir is `n`, so the triple-product coefficient is
/// `−2i/n`; su(3) gives the familiar `−2i/3`.
pub fn casimir_c1(basis: &LieBasis) -> Result<ComplexMatrix, LieError> {
    let mut sum_sq = ComplexMatrix::zeros(basis.rep_dim, basis.rep_dim);
    for g in &basis.generators {
        sum_sq += &(g * g);
    }
    let coeff = Complex::new(0.0, -2.0 / basis.rep_dim as f64);
    let triple = triple_sum(basis, &basis.f).scale(coeff);
    let residual = max_abs_distance(&sum_sq, &triple).expect("same shape");
    if residual > CASIMIR_TOL {
        return Err(LieError::CasimirMismatch { residual });
    }
    Ok(sum_sq)
}

/// Cubic Casimir `Σ d_abc F_a F_b F_c`.
pub fn casimir_c2(basis: &LieBasis) -> ComplexMatrix {
    triple_sum(basis, &basis.d)
}

/// Residual of `C₂ = C₁(2C₁ − 11/6)` as a matrix identity.
pub fn casimir_identity_residual(basis: &LieBasis) -> Result<f64, LieError> {
    let c1 = casimir_c1(basis)?;
    let c2 = casimir_c2(basis);
    let id = ComplexMatrix::identity(basis.rep_dim);
    let rhs = &c1 * &(&c1.scale_real(2.0) - &id.scale_real(11.0 / 6.0));
    Ok(max_abs_distance(&c2, &rhs).expect("same shape"))
}

/// `[F^a, F^b] − i Σ_c f_abc F^c`, max over all pairs.
pub fn lie_closure_residual(basis: &LieBasis) -> f64 {
    let g = &basis.generators;
    let n = g.len();
    let mut worst = 0.0_f64;
    for a in 0..n {
        for b in 0..n {
            let lhs = commutator(&g[a], &g[b]).expect("same shape");
            let mut rhs = ComplexMatrix::zeros(basis.rep_dim, basis.rep_dim);
            for (c, gc) in g.iter().enumerate() {
                let v = basis.f.get(a, b, c);
                if v != 0.0 {
                    rhs += &gc.scale(im(v));
                }
            }
            worst = worst.max(max_abs_distance(&lhs, &rhs).expect("same shape"));
        }
    }
    worst
}

/// Max `|Tr(λ_a λ_b) − 2δ_ab|`.
pub fn trace_orthogonality_residual(basis: &LieBasis) -> f64 {
    let n = basis.n_gens();
    let mut worst = 0.0_f64;
    for a in 0..n {
        for b in 0..n {
            let t = matmul(&basis.doubled(a), &basis.doubled(b))
                .expect("square")
                .trace();
            let want = if a == b { 2.0 } else { 0.0 };
            worst = worst.max((t - re(want)).norm());
        }
    }
    worst
}

/// Labels of the eight ladder-basis operators shared by every su(3)-like table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ladder {
    IPlus,
    IMinus,
    UPlus,
    UMinus,
    VPlus,
    VMinus,
    I3,
    I8,
}

impl Ladder {
    pub const ALL: [Ladder; 8] = [
        Ladder::IPlus,
        Ladder::IMinus,
        Ladder::UPlus,
        Ladder::UMinus,
        Ladder::VPlus,
        Ladder::VMinus,
        Ladder::I3,
        Ladder::I8,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Ladder::IPlus => "I+",
            Ladder::IMinus => "I-",
            Ladder::UPlus => "U+",
            Ladder::UMinus => "U-",
            Ladder::VPlus => "V+",
            Ladder::VMinus => "V-",
            Ladder::I3 => "I3",
            Ladder::I8 => "I8",
        }
    }

    #[inline]
    fn index(self) -> usize {
        self as usize
    }
}

/// Eight operators indexed by [`Ladder`]: single-site shift operators, their barred
/// two-site counterparts, the normalized tilde set, or a rescaled copy.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderSet {
    ops: [ComplexMatrix; 8],
}

impl LadderSet {
    pub fn from_fn(mut f: impl FnMut(Ladder) -> ComplexMatrix) -> Self {
        Self {
            ops: Ladder::ALL.map(&mut f),
        }
    }

    /// Ladder combinations of eight generator-like operators `X^1 … X^8`:
    /// `I± = X¹ ± iX²`, `U± = X⁶ ± iX⁷`, `V± = X⁴ ∓ iX⁵`, `I³ = X³`, `I⁸ = (2/√3) X⁸`.
    pub fn from_generators(x: &[ComplexMatrix]) -> Self {
        assert_eq!(x.len(), 8, "su(3) needs eight generators");
        let pm = |a: usize, b: usize, s: f64| &x[a] + &x[b].scale(im(s));
        Self::from_fn(|l| match l {
            Ladder::IPlus => pm(0, 1, 1.0),
            Ladder::IMinus => pm(0, 1, -1.0),
            Ladder::UPlus => pm(5, 6, 1.0),
            Ladder::UMinus => pm(5, 6, -1.0),
            Ladder::VPlus => pm(3, 4, -1.0),
            Ladder::VMinus => pm(3, 4, 1.0),
            Ladder::I3 => x[2].clone(),
            Ladder::I8 => x[7].scale_real(2.0 / 3f64.sqrt()),
        })
    }

    #[inline]
    pub fn get(&self, l: Ladder) -> &ComplexMatrix {
        &self.ops[l.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Ladder, &ComplexMatrix)> {
        Ladder::ALL.into_iter().zip(self.ops.iter())
    }

    pub fn map(&self, mut f: impl FnMut(Ladder, &ComplexMatrix) -> ComplexMatrix) -> Self {
        Self::from_fn(|l| f(l, self.get(l)))
    }

    /// `U³ = −I³/2 + (3/4) I⁸`.
    pub fn u3(&self) -> ComplexMatrix {
        &self.get(Ladder::I3).scale_real(-0.5) + &self.get(Ladder::I8).scale_real(0.75)
    }

    /// `V³ = −I³/2 − (3/4) I⁸`.
    pub fn v3(&self) -> ComplexMatrix {
        &self.get(Ladder::I3).scale_real(-0.5) - &self.get(Ladder::I8).scale_real(0.75)
    }

    /// Quadratic sum in the ladder form
    /// `I⁺² + I⁻² + I³² + U⁺² + U⁻² + V⁺² + V⁻² + (√3/2 · I⁸)²`.
    pub fn ladder_square_sum(&self) -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(self.ops[0].rows(), self.ops[0].cols());
        for l in Ladder::ALL {
            let op = if l == Ladder::I8 {
                self.get(l).scale_real(3f64.sqrt() / 2.0)
            } else {
                self.get(l).clone()
            };
            acc += &(&op * &op);
        }
        acc
    }
}

/// Single-site shift operators plus the derived diagonal combinations.
#[derive(Debug, Clone)]
pub struct ShiftOperators {
    pub ladder: LadderSet,
    pub u3: ComplexMatrix,
    pub v3: ComplexMatrix,
    /// Hypercharge; the same matrix as `I⁸`.
    pub y: ComplexMatrix,
    /// Charge `Q = I³ + Y/2`.
    pub q: ComplexMatrix,
}

impl ShiftOperators {
    pub fn get(&self, l: Ladder) -> &ComplexMatrix {
        self.ladder.get(l)
    }
}

pub fn shift_ops(basis: &LieBasis) -> Result<ShiftOperators, LieError> {
    if basis.name != AlgebraName::Su3 {
        return Err(LieError::NotSu3("shift_ops"));
    }
    let ladder = LadderSet::from_generators(&basis.generators);
    let y = ladder.get(Ladder::I8).clone();
    let q = ladder.get(Ladder::I3) + &y.scale_real(0.5);
    Ok(ShiftOperators {
        u3: ladder.u3(),
        v3: ladder.v3(),
        y,
        q,
        ladder,
    })
}

/// I/U/V-spin commutation table with every structure coefficient multiplied by
/// `scale` (1 for the Lie algebra itself, `μ + ν` for the unnormalized barred set).
///
/// Labels are `"{anchor}:[A,B]"`. Relations involving `U³`/`V³` are tagged with
/// `u3v3_anchor`.
pub fn ladder_relations(
    set: &LadderSet,
    scale: f64,
    anchor: &str,
    u3v3_anchor: &str,
    tol: f64,
) -> Vec<RelationCheck> {
    use Ladder::*;
    let op = |l| set.get(l);
    let zero = ComplexMatrix::zeros(op(I3).rows(), op(I3).cols());
    let k = scale;
    let comb = |terms: &[(f64, Ladder)]| {
        let mut acc = zero.clone();
        for &(c, l) in terms {
            acc += &op(l).scale_real(c * k);
        }
        acc
    };
    let u3 = set.u3();
    let v3 = set.v3();

    let mut out = Vec::new();
    let mut push = |label: String, lhs: ComplexMatrix, rhs: ComplexMatrix, tag: &str| {
        let residual = max_abs_distance(&lhs, &rhs).expect("same shape");
        out.push(RelationCheck::new(format!("{tag}:{label}"), residual, tol));
    };
    let c = |a: Ladder, b: Ladder| commutator(op(a), op(b)).expect("same shape");
    let name = |a: Ladder, b: Ladder| format!("[{},{}]", a.symbol(), b.symbol());

    let linear: &[(Ladder, Ladder, &[(f64, Ladder)])] = &[
        (I3, IPlus, &[(1.0, IPlus)]),
        (I3, IMinus, &[(-1.0, IMinus)]),
        (IPlus, IMinus, &[(2.0, I3)]),
        (I8, IPlus, &[]),
        (I8, IMinus, &[]),
        (I3, I8, &[]),
        (I3, UPlus, &[(-0.5, UPlus)]),
        (I3, UMinus, &[(0.5, UMinus)]),
        (I8, UPlus, &[(1.0, UPlus)]),
        (I8, UMinus, &[(-1.0, UMinus)]),
        (UPlus, UMinus, &[(-1.0, I3), (1.5, I8)]),
        (I3, VPlus, &[(-0.5, VPlus)]),
        (I3, VMinus, &[(0.5, VMinus)]),
        (I8, VPlus, &[(-1.0, VPlus)]),
        (I8, VMinus, &[(1.0, VMinus)]),
        (VPlus, VMinus, &[(-1.0, I3), (-1.5, I8)]),
        (IPlus, UPlus, &[(1.0, VMinus)]),
        (IMinus, UMinus, &[(-1.0, VPlus)]),
        (UPlus, VPlus, &[(1.0, IMinus)]),
        (UMinus, VMinus, &[(-1.0, IPlus)]),
        (VPlus, IPlus, &[(1.0, UMinus)]),
        (VMinus, IMinus, &[(-1.0, UPlus)]),
        (IPlus, UMinus, &[]),
        (IMinus, UPlus, &[]),
        (UPlus, VMinus, &[]),
        (UMinus, VPlus, &[]),
        (VPlus, IMinus, &[]),
        (VMinus, IPlus, &[]),
    ];
    for &(a, b, rhs) in linear {
        push(name(a, b), c(a, b), comb(rhs), anchor);
    }

    let cu = |x: &ComplexMatrix, l: Ladder| commutator(x, op(l)).expect("same shape");
    push(
        "[U3,U+]".into(),
        cu(&u3, UPlus),
        op(UPlus).scale_real(k),
        u3v3_anchor,
    );
    push(
        "[U3,U-]".into(),
        cu(&u3, UMinus),
        op(UMinus).scale_real(-k),
        u3v3_anchor,
    );
    push(
        "[U+,U-]=2U3".into(),
        c(UPlus, UMinus),
        u3.scale_real(2.0 * k),
        u3v3_anchor,
    );
    push(
        "[V3,V+]".into(),
        cu(&v3, VPlus),
        op(VPlus).scale_real(k),
        u3v3_anchor,
    );
    push(
        "[V3,V-]".into(),
        cu(&v3, VMinus),
        op(VMinus).scale_real(-k),
        u3v3_anchor,
    );
    push(
        "[V+,V-]=2V3".into(),
        c(VPlus, VMinus),
        v3.scale_real(2.0 * k),
        u3v3_anchor,
    );
    out
}

/// Single-site su(3) checks: the ladder table, `U³/V³` relations, and `[U^a, Q] = 0`.
pub fn verify_su3_table(ops: &ShiftOperators, tol: f64) -> Vec<RelationCheck> {
    let mut out = ladder_relations(&ops.ladder, 1.0, "Eq28", "Eq30", tol);
    for (label, u) in [
        ("[U+,Q]", ops.get(Ladder::UPlus)),
        ("[U-,Q]", ops.get(Ladder::UMinus)),
        ("[U3,Q]", &ops.u3),
    ] {
        let r = commutator(u, &ops.q).expect("same shape").max_abs();
        out.push(RelationCheck::new(format!("Eq32:{label}"), r, tol));
    }
    out
}

/// Whether `[V±, Q]` vanishes (it does not: charge is U-spin but not V-spin invariant).
pub fn v_spin_charge_commutator_norm(ops: &ShiftOperators) -> f64 {
    commutator(ops.get(Ladder::VPlus), &ops.q)
        .expect("same shape")
        .max_abs()
}

/// `I⁻ = (I⁺)†` and friends, max residual.
pub fn ladder_adjoint_residual(set: &LadderSet) -> f64 {
    use Ladder::*;
    [(IPlus, IMinus), (UPlus, UMinus), (VPlus, VMinus)]
        .iter()
        .map(|&(p, m)| max_abs_distance(&dagger(set.get(p)), set.get(m)).expect("same shape"))
        .fold(0.0, f64::max)
}

/// Reference `f_abc` values for the independent ascending triples (1-based).
pub const SU3_F_REFERENCE: [((usize, usize, usize), f64); 9] = [
    ((1, 2, 3), 1.0),
    ((4, 5, 8), 0.866_025_403_784_438_6),
    ((6, 7, 8), 0.866_025_403_784_438_6),
    ((1, 4, 7), 0.5),
    ((2, 4, 6), 0.5),
    ((2, 5, 7), 0.5),
    ((3, 4, 5), 0.5),
    ((1, 5, 6), -0.5),
    ((3, 6, 7), -0.5),
];

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn pauli_commutator_and_squares() {
        let b = pauli_basis();
        let lhs = commutator(&b.generators[0], &b.generators[1]).unwrap();
        let rhs = b.generators[2].scale(im(1.0));
        assert!(max_abs_distance(&lhs, &rhs).unwrap() < 1e-15);
        for g in &b.generators {
            assert_eq!(g.trace(), re(0.0));
            let sq = g * g;
            assert!(
                max_abs_distance(&sq, &ComplexMatrix::identity(2).scale_real(0.25)).unwrap()
                    < 1e-15
            );
        }
        assert!(lie_closure_residual(&b) < 1e-15);
    }

    #[test]
    fn gellmann_literals() {
        let l = gellmann_matrices();
        let s3 = 1.0 / 3f64.sqrt();
        assert_eq!(l[7], ComplexMatrix::diag_real(&[s3, s3, -2.0 * s3]));
        assert_eq!(l[2][(0, 0)], re(1.0));
        let prod = matmul(&l[0], &l[1]).unwrap();
        assert!(
            max_abs_distance(&prod, &ComplexMatrix::diag(&[im(1.0), im(-1.0), re(0.0)])).unwrap()
                < 1e-15
        );
        let basis = gellmann_basis();
        assert!(trace_orthogonality_residual(&basis) < 1e-14);
        for g in &basis.generators {
            assert!(g.is_hermitian(0.0));
            assert!(g.trace().norm() < 1e-15);
        }
    }

    #[test]
    fn gellmann_commutators() {
        let l = gellmann_matrices();
        let c12 = commutator(&l[0], &l[1]).unwrap();
        assert!(max_abs_distance(&c12, &l[2].scale(im(2.0))).unwrap() < 1e-12);
        // [λ4, λ5] = i(λ3 + √3 λ8)
        let c45 = commutator(&l[3], &l[4]).unwrap();
        let want = (&l[2] + &l[7].scale_real(3f64.sqrt())).scale(im(1.0));
        assert!(max_abs_distance(&c45, &want).unwrap() < 1e-12);
    }

    #[test]
    fn structure_constant_values() {
        let b = gellmann_basis();
        assert!(close(b.f.at(1, 2, 3), 1.0, 1e-12));
        assert!(close(b.f.at(4, 5, 8), 3f64.sqrt() / 2.0, 1e-12));
        assert!(close(b.f.at(1, 5, 6), -0.5, 1e-12));
        assert!(close(b.d.at(1, 1, 8), 1.0 / 3f64.sqrt(), 1e-12));
        assert!(close(b.d.at(1, 4, 6), 0.5, 1e-12));
        assert!(close(b.d.at(1, 2, 3), 0.0, 1e-12));
    }

    #[test]
    fn jacobi_and_fd_residuals() {
        let b = gellmann_basis();
        assert!(verify_jacobi(&b.f) <= 1e-12);
        assert!(verify_fd_identity(&b.f, &b.d) <= 1e-12);
        let su2 = pauli_basis();
        assert_eq!(verify_jacobi(&su2.f), 0.0);
        assert_eq!(verify_fd_identity(&su2.f, &su2.d), 0.0);

        let mut bad_f = b.f.clone();
        bad_f.set(0, 1, 2, 2.0);
        assert!(verify_jacobi(&bad_f) > 0.1);
        let mut bad_d = b.d.clone();
        bad_d.set(0, 0, 7, 1.0);
        assert!(verify_fd_identity(&b.f, &bad_d) > 0.1);
    }

    #[test]
    fn casimirs() {
        let b = gellmann_basis();
        let c1 = casimir_c1(&b).unwrap();
        assert!(
            max_abs_distance(&c1, &ComplexMatrix::identity(3).scale_real(4.0 / 3.0)).unwrap()
                < 1e-12
        );
        let c2 = casimir_c2(&b);
        assert!(
            max_abs_distance(&c2, &ComplexMatrix::identity(3).scale_real(10.0 / 9.0)).unwrap()
                < 1e-12
        );
        assert!(c2.is_hermitian(1e-14));
        assert!(casimir_identity_residual(&b).unwrap() < 1e-10);
        for g in &b.generators {
            assert!(commutator(&c1, g).unwrap().max_abs() < 1e-12);
        }
        let su2 = casimir_c1(&pauli_basis()).unwrap();
        assert!(
            max_abs_distance(&su2, &ComplexMatrix::identity(2).scale_real(0.75)).unwrap() < 1e-14
        );
        assert_eq!(su2[(0, 1)], re(0.0));
    }

    #[test]
    fn shift_operator_literals() {
        let ops = shift_ops(&gellmann_basis()).unwrap();
        assert_eq!(ops.get(Ladder::IPlus), &ComplexMatrix::unit(3, 0, 1));
        assert_eq!(ops.get(Ladder::UPlus), &ComplexMatrix::unit(3, 1, 2));
        assert_eq!(ops.get(Ladder::VPlus), &ComplexMatrix::unit(3, 2, 0));
        assert_eq!(dagger(ops.get(Ladder::IPlus)), ComplexMatrix::unit(3, 1, 0));
        assert!(
            max_abs_distance(
                ops.get(Ladder::I3),
                &ComplexMatrix::diag_real(&[0.5, -0.5, 0.0])
            )
            .unwrap()
                < 1e-15
        );
        assert!(
            max_abs_distance(
                &ops.y,
                &ComplexMatrix::diag_real(&[1.0 / 3.0, 1.0 / 3.0, -2.0 / 3.0])
            )
            .unwrap()
                < 1e-15
        );
        assert!(
            max_abs_distance(
                &ops.q,
                &ComplexMatrix::diag_real(&[2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0])
            )
            .unwrap()
                < 1e-15
        );
        assert!(ladder_adjoint_residual(&ops.ladder) < 1e-15);
        assert!(shift_ops(&pauli_basis()).is_err());
    }

    #[test]
    fn su3_table_passes_and_v_spin_is_charged() {
        let ops = shift_ops(&gellmann_basis()).unwrap();
        let report = verify_su3_table(&ops, 1e-12);
        for r in &report {
            assert!(r.pass, "{r:?}");
        }
        assert!(report.iter().any(|r| r.relation == "Eq28:[U+,U-]"));
        assert!(v_spin_charge_commutator_norm(&ops) > 0.5);
    }
}
