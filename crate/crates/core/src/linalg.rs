//! Dense complex linear algebra for the small operators used throughout the crate.
//!
//! Operators act on at most two sites of dimension three, so nothing exceeds 9×9.
//! Storage is a flat row-major `Vec` and every algorithm is a textbook O(n³)
//! routine with partial pivoting.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Double precision complex scalar.
pub type Complex = num_complex::Complex64;

/// `|det|` below this is treated as exactly singular by [`inverse`].
pub const SINGULAR_DET_THRESHOLD: f64 = 1e-8;

/// Shorthand for a real-valued complex number.
#[inline]
pub fn re(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

/// Shorthand for a purely imaginary complex number.
#[inline]
pub fn im(y: f64) -> Complex {
    Complex::new(0.0, y)
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("matrix is singular: |det| = {det_abs:e} is below {SINGULAR_DET_THRESHOLD:e}")]
    Singular { det_abs: f64 },
    #[error("invalid matrix: {0}")]
    Invalid(String),
}

fn mismatch(op: &'static str, a: &ComplexMatrix, b: &ComplexMatrix) -> LinalgError {
    LinalgError::DimensionMismatch {
        op,
        left_rows: a.rows,
        left_cols: a.cols,
        right_rows: b.rows,
        right_cols: b.cols,
    }
}

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex>) -> Result<Self, LinalgError> {
        if rows == 0 || cols == 0 {
            return Err(LinalgError::Invalid(format!(
                "shape {rows}x{cols} has a zero dimension"
            )));
        }
        if rows.checked_mul(cols) != Some(data.len()) {
            return Err(LinalgError::Invalid(format!(
                "{rows}x{cols} needs {} entries, got {}",
                rows.saturating_mul(cols),
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![Complex::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = re(1.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Builds a matrix from nested rows. Panics on ragged input; intended for literals.
    pub fn from_rows(rows: &[Vec<Complex>]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix literal");
        Self::from_fn(n, m, |r, c| rows[r][c])
    }

    /// Real-valued literal, e.g. `ComplexMatrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]])`.
    pub fn from_real(rows: &[&[f64]]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix literal");
        Self::from_fn(n, m, |r, c| re(rows[r][c]))
    }

    pub fn diag(values: &[Complex]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |r, c| if r == c { values[r] } else { re(0.0) })
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |r, c| if r == c { re(values[r]) } else { re(0.0) })
    }

    /// Matrix with a single unit entry at `(row, col)`.
    pub fn unit(n: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(row, col)] = re(1.0);
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[Complex] {
        &self.data
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(re(s))
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Complex::conj).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn trace(&self) -> Complex {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Sub-block `[row0, row0+rows) × [col0, col0+cols)`.
    pub fn block(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Self {
        assert!(row0 + rows <= self.rows && col0 + cols <= self.cols);
        Self::from_fn(rows, cols, |r, c| self[(row0 + r, col0 + c)])
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[Complex]) -> Result<Vec<Complex>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "apply",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.data[r * self.cols..(r + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `true` when `max |A − A†| ≤ tol`.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && max_abs_distance(self, &dagger(self)).is_ok_and(|d| d <= tol)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of bounds"
        );
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r}, {c}) out of bounds"
        );
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self[(r, c)];
                write!(f, "{:>9.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

// Operator sugar for internal use on matrices whose shapes are fixed by construction.
// Mismatched shapes are programming errors here, so these panic; the checked
// free functions below are the fallible surface.

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix add shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sub shape mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        matmul(self, rhs).expect("matrix product shape mismatch")
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale_real(-1.0)
    }
}

impl AddAssign<&ComplexMatrix> for ComplexMatrix {
    fn add_assign(&mut self, rhs: &ComplexMatrix) {
        assert_eq!(self.shape(), rhs.shape(), "matrix add shape mismatch");
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
    }
}

pub fn matmul(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
    if a.cols != b.rows {
        return Err(mismatch("matmul", a, b));
    }
    let mut out = ComplexMatrix::zeros(a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let x = a.data[r * a.cols + k];
            if x.re == 0.0 && x.im == 0.0 {
                continue;
            }
            let brow = &b.data[k * b.cols..(k + 1) * b.cols];
            let orow = &mut out.data[r * b.cols..(r + 1) * b.cols];
            for (o, y) in orow.iter_mut().zip(brow) {
                *o += x * y;
            }
        }
    }
    Ok(out)
}

/// Kronecker product `A ⊗ B`: block `(i, j)` of the result is `a_ij · B`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(a.rows * b.rows, a.cols * b.cols, |r, c| {
        a[(r / b.rows, c / b.cols)] * b[(r % b.rows, c % b.cols)]
    })
}

/// `[A, B] = AB − BA`.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
    if !a.is_square() || a.shape() != b.shape() {
        return Err(mismatch("commutator", a, b));
    }
    Ok(&matmul(a, b)? - &matmul(b, a)?)
}

/// `{A, B} = AB + BA`.
pub fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
    if !a.is_square() || a.shape() != b.shape() {
        return Err(mismatch("anticommutator", a, b));
    }
    Ok(&matmul(a, b)? + &matmul(b, a)?)
}

/// Conjugate transpose.
pub fn dagger(a: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(a.cols, a.rows, |r, c| a[(c, r)].conj())
}

/// LU factorization with partial pivoting, in place. Returns the row-swap parity
/// (`+1`/`-1`), or `None` when a pivot column is entirely zero.
fn lu_in_place(m: &mut ComplexMatrix) -> Option<f64> {
    let n = m.rows;
    let mut sign = 1.0;
    for k in 0..n {
        let (p, pmag) = (k..n)
            .map(|r| (r, m[(r, k)].norm()))
            .fold(
                (k, -1.0),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );
        if pmag == 0.0 {
            return None;
        }
        if p != k {
            for c in 0..n {
                m.data.swap(k * n + c, p * n + c);
            }
            sign = -sign;
        }
        let pivot = m[(k, k)];
        for r in (k + 1)..n {
            let factor = m[(r, k)] / pivot;
            m[(r, k)] = factor;
            if factor.re == 0.0 && factor.im == 0.0 {
                continue;
            }
            for c in (k + 1)..n {
                let t = m[(k, c)];
                m[(r, c)] -= factor * t;
            }
        }
    }
    Some(sign)
}

pub fn det(a: &ComplexMatrix) -> Result<Complex, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            op: "det",
            rows: a.rows,
            cols: a.cols,
        });
    }
    let mut lu = a.clone();
    Ok(match lu_in_place(&mut lu) {
        None => re(0.0),
        Some(sign) => (0..a.rows).map(|i| lu[(i, i)]).product::<Complex>() * sign,
    })
}

/// Gauss–Jordan inverse. Rejects `|det| < SINGULAR_DET_THRESHOLD`.
pub fn inverse(a: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
    let d = det(a)?;
    if d.norm() < SINGULAR_DET_THRESHOLD {
        return Err(LinalgError::Singular { det_abs: d.norm() });
    }
    let n = a.rows;
    let mut work = a.clone();
    let mut inv = ComplexMatrix::identity(n);
    for k in 0..n {
        let p = (k..n)
            .max_by(|&x, &y| work[(x, k)].norm().total_cmp(&work[(y, k)].norm()))
            .unwrap_or(k);
        if p != k {
            for c in 0..n {
                work.data.swap(k * n + c, p * n + c);
                inv.data.swap(k * n + c, p * n + c);
            }
        }
        let pivot = work[(k, k)];
        for c in 0..n {
            work[(k, c)] /= pivot;
            inv[(k, c)] /= pivot;
        }
        for r in 0..n {
            if r == k {
                continue;
            }
            let factor = work[(r, k)];
            if factor.re == 0.0 && factor.im == 0.0 {
                continue;
            }
            for c in 0..n {
                let (w, v) = (work[(k, c)], inv[(k, c)]);
                work[(r, c)] -= factor * w;
                inv[(r, c)] -= factor * v;
            }
        }
    }
    Ok(inv)
}

/// `max_ij |a_ij − b_ij|`.
pub fn max_abs_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64, LinalgError> {
    if a.shape() != b.shape() {
        return Err(mismatch("max_abs_distance", a, b));
    }
    Ok(a.data
        .iter()
        .zip(&b.data)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max))
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations, ascending.
///
/// Only the Hermitian part of the input is used. Accurate to a few ulps of the
/// matrix norm, which keeps `p·log p` terms for vanishing Schmidt weights at
/// rounding level.
pub fn hermitian_eigenvalues(a: &ComplexMatrix) -> Result<Vec<f64>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            op: "hermitian_eigenvalues",
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    let mut m = ComplexMatrix::from_fn(n, n, |r, c| (a[(r, c)] + a[(c, r)].conj()) * 0.5);
    let scale = m.max_abs().max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|r| (0..n).filter(move |&c| c != r).map(move |c| (r, c)))
            .map(|(r, c)| m[(r, c)].norm_sqr())
            .sum();
        if off.sqrt() <= 1e-17 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                let mag = apq.norm();
                if mag <= 1e-300 {
                    continue;
                }
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                // Phase-rotate the pair so the (p, q) entry is real, then do a real Jacobi step.
                let phase = apq / mag;
                let theta = 0.5 * (2.0 * mag).atan2(aqq - app);
                let (s, c) = theta.sin_cos();
                let g_pp = re(c);
                let g_pq = re(s) * phase;
                let g_qp = -re(s) * phase.conj();
                let g_qq = re(c);
                // M ← G† M G with G = [[g_pp, g_pq], [g_qp, g_qq]] embedded at (p, q).
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = mkp * g_pp + mkq * g_qp;
                    m[(k, q)] = mkp * g_pq + mkq * g_qq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = g_pp.conj() * mpk + g_qp.conj() * mqk;
                    m[(q, k)] = g_pq.conj() * mpk + g_qq.conj() * mqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<[f64; 2]>,
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.data.iter().map(|z| [z.re, z.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        if repr.entries.iter().flatten().any(|x| !x.is_finite()) {
            return Err(D::Error::custom("matrix entries must be finite"));
        }
        let data = repr
            .entries
            .iter()
            .map(|[a, b]| Complex::new(*a, *b))
            .collect();
        ComplexMatrix::new(repr.rows, repr.cols, data).map_err(D::Error::custom)
    }
}

impl ComplexMatrix {
    /// Parses the `{"rows", "cols", "entries": [[re, im], ...]}` report format.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma(k: usize) -> ComplexMatrix {
        match k {
            1 => ComplexMatrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]),
            2 => ComplexMatrix::from_rows(&[vec![re(0.0), im(-1.0)], vec![im(1.0), re(0.0)]]),
            3 => ComplexMatrix::diag_real(&[1.0, -1.0]),
            _ => unreachable!(),
        }
    }

    #[test]
    fn sigma_plus_times_sigma_minus() {
        let sp = &sigma(1) + &sigma(2).scale(im(1.0));
        let sm = &sigma(1) - &sigma(2).scale(im(1.0));
        let prod = matmul(&sp, &sm).unwrap();
        assert!(max_abs_distance(&prod, &ComplexMatrix::diag_real(&[4.0, 0.0])).unwrap() < 1e-15);
    }

    #[test]
    fn matmul_rejects_mismatch() {
        let err = matmul(&ComplexMatrix::zeros(2, 3), &ComplexMatrix::zeros(2, 3)).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("2x3") && msg.contains("matmul"), "{msg}");
    }

    #[test]
    fn kron_sigma3_identity() {
        let k = kron(&sigma(3), &ComplexMatrix::identity(2));
        assert_eq!(k, ComplexMatrix::diag_real(&[1.0, 1.0, -1.0, -1.0]));
        assert_eq!(
            kron(&ComplexMatrix::identity(2), &ComplexMatrix::identity(2)),
            ComplexMatrix::identity(4)
        );
        assert_eq!(
            kron(&ComplexMatrix::zeros(3, 3), &ComplexMatrix::zeros(3, 3)).shape(),
            (9, 9)
        );
    }

    #[test]
    fn self_commutator_vanishes() {
        let m = &sigma(2) + &sigma(3);
        assert_eq!(commutator(&m, &m).unwrap().max_abs(), 0.0);
        assert!(commutator(&ComplexMatrix::zeros(2, 2), &ComplexMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn dagger_is_involution() {
        let m = ComplexMatrix::from_rows(&[
            vec![Complex::new(1.0, 2.0), Complex::new(-0.5, 0.25)],
            vec![Complex::new(3.0, -1.0), Complex::new(0.0, 7.0)],
        ]);
        assert_eq!(dagger(&dagger(&m)), m);
        assert_eq!(dagger(&m)[(0, 1)], Complex::new(3.0, 1.0));
    }

    #[test]
    fn det_of_identity_and_singular() {
        assert_eq!(det(&ComplexMatrix::identity(9)).unwrap(), re(1.0));
        assert_eq!(det(&ComplexMatrix::zeros(3, 3)).unwrap(), re(0.0));
        assert!(matches!(
            det(&ComplexMatrix::zeros(2, 3)),
            Err(LinalgError::NotSquare { .. })
        ));
    }

    #[test]
    fn inverse_rejects_singular() {
        let m = ComplexMatrix::from_real(&[&[1.0, 2.0], &[2.0, 4.0]]);
        assert!(matches!(inverse(&m), Err(LinalgError::Singular { .. })));
        assert_eq!(
            inverse(&ComplexMatrix::identity(4)).unwrap(),
            ComplexMatrix::identity(4)
        );
    }

    #[test]
    fn distance_basics() {
        let m = sigma(2);
        assert_eq!(max_abs_distance(&m, &m).unwrap(), 0.0);
        assert_eq!(
            max_abs_distance(&ComplexMatrix::identity(2), &ComplexMatrix::zeros(2, 2)).unwrap(),
            1.0
        );
    }

    #[test]
    fn jacobi_eigenvalues_of_known_hermitian() {
        // σ² has eigenvalues ±1; diag shift and a complex coupling.
        let eig = hermitian_eigenvalues(&sigma(2)).unwrap();
        assert!((eig[0] + 1.0).abs() < 1e-14 && (eig[1] - 1.0).abs() < 1e-14);
        let m = ComplexMatrix::from_rows(&[
            vec![re(2.0), Complex::new(0.0, 1.0), re(0.0)],
            vec![Complex::new(0.0, -1.0), re(2.0), re(0.0)],
            vec![re(0.0), re(0.0), re(5.0)],
        ]);
        let eig = hermitian_eigenvalues(&m).unwrap();
        for (got, want) in eig.iter().zip([1.0, 3.0, 5.0]) {
            assert!((got - want).abs() < 1e-13, "{eig:?}");
        }
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = sigma(2);
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(
            text,
            r#"{"rows":2,"cols":2,"entries":[[0.0,0.0],[0.0,-1.0],[0.0,1.0],[0.0,0.0]]}"#
        );
        assert_eq!(ComplexMatrix::from_json(&text).unwrap(), m);
        assert!(ComplexMatrix::from_json(r#"{"rows":2,"cols":2,"entries":[[0,0]]}"#).is_err());
        assert!(ComplexMatrix::from_json(r#"{"rows":0,"cols":0,"entries":[]}"#).is_err());
    }
}
