//! Seeded random draws for the parameter sweeps and the property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::entanglement::StateVector;
use crate::linalg::{Complex, ComplexMatrix};
use crate::yangian::YangianParams;

pub const DEFAULT_SEED: u64 = 42;

/// Component range for parameter draws.
pub const PARAM_RANGE: f64 = 2.0;

/// Minimum distance from `μ + ν = 0` and from `ν = ±λ/2`.
pub const EXCLUSION: f64 = 0.1;

/// Independent streams so adding draws to one sweep never shifts another.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stream {
    Generic = 0,
    Constrained = 1,
    States = 2,
    Unitaries = 3,
    Matrices = 4,
}

pub fn rng(seed: u64, stream: Stream) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream as u64);
    r
}

fn admissible(p: &YangianParams) -> bool {
    (p.mu + p.nu).abs() >= EXCLUSION
        && (p.nu - p.lambda / 2.0).abs() >= EXCLUSION
        && (p.nu + p.lambda / 2.0).abs() >= EXCLUSION
}

/// One draw with components uniform in `[−2, 2]`; constrained draws replace `μ` by
/// `−λ²/(4ν)`. Rejects draws near `μ + ν = 0` or `ν = ±λ/2`.
pub fn draw_params<R: Rng>(rng: &mut R, constrained: bool) -> YangianParams {
    loop {
        let mu = rng.gen_range(-PARAM_RANGE..=PARAM_RANGE);
        let nu = rng.gen_range(-PARAM_RANGE..=PARAM_RANGE);
        let lambda = rng.gen_range(-PARAM_RANGE..=PARAM_RANGE);
        let p = if constrained {
            match YangianParams::constrained_from(nu, lambda) {
                Ok(p) => p,
                Err(_) => continue,
            }
        } else {
            match YangianParams::new(mu, nu, lambda) {
                Ok(p) => p,
                Err(_) => continue,
            }
        };
        if admissible(&p) && (!constrained || p.is_constrained()) {
            return p;
        }
    }
}

pub fn param_battery(seed: u64, n: usize, constrained: bool) -> Vec<YangianParams> {
    let stream = if constrained {
        Stream::Constrained
    } else {
        Stream::Generic
    };
    let mut r = rng(seed, stream);
    (0..n).map(|_| draw_params(&mut r, constrained)).collect()
}

/// Uniformly random point on the real unit circle.
pub fn draw_angle_pair<R: Rng>(rng: &mut R) -> (f64, f64) {
    let t = rng.gen_range(0.0..std::f64::consts::TAU);
    (t.cos(), t.sin())
}

pub fn draw_complex<R: Rng>(rng: &mut R) -> Complex {
    Complex::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
}

/// Normalized state with components uniform in the unit square before scaling.
pub fn draw_state<R: Rng>(rng: &mut R, dims: (usize, usize)) -> StateVector {
    loop {
        let amps: Vec<_> = (0..dims.0 * dims.1).map(|_| draw_complex(rng)).collect();
        let v = StateVector::new(dims, amps).expect("dims match");
        if let Ok((u, _)) = v.normalized() {
            return u;
        }
    }
}

pub fn draw_matrix<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| draw_complex(rng))
}

/// Random unitary from Gram–Schmidt on the columns of a random matrix.
pub fn draw_unitary<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    'retry: loop {
        let m = draw_matrix(rng, n);
        let mut cols: Vec<Vec<Complex>> = Vec::with_capacity(n);
        for j in 0..n {
            let mut v: Vec<Complex> = (0..n).map(|i| m[(i, j)]).collect();
            for q in &cols {
                let proj: Complex = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= proj * qi;
                }
            }
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-8 {
                continue 'retry;
            }
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
        return ComplexMatrix::from_fn(n, n, |i, j| cols[j][i]);
    }
}
