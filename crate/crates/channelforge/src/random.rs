//! Seeded random sampling: Haar unitaries, random channels, random states.
//!
//! Everything takes an explicit RNG and all entry points are reachable from
//! a single u64 seed through [`rng_from_seed`], so every sampled artifact in
//! tests and CLI output is reproducible byte for byte.

use crate::mat::{c64, ComplexMatrix};
use crate::qubit::BlochVector;
use crate::rep::kraus::{kraus_from_environment, KrausSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

/// The crate's one RNG construction: ChaCha12 from a u64 seed.
pub fn rng_from_seed(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian entry (independent N(0,1) real and imaginary
/// parts).
pub fn complex_gaussian(rng: &mut ChaCha12Rng) -> num_complex::Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c64(re, im)
}

/// Matrix of iid standard complex Gaussians.
pub fn ginibre(rows: usize, cols: usize, rng: &mut ChaCha12Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Haar-random unitary: QR of a Ginibre matrix via modified Gram–Schmidt.
///
/// Gram–Schmidt produces an R with positive real diagonal, which is exactly
/// the phase fixing that makes the resulting Q Haar distributed.
pub fn haar_unitary(n: usize, rng: &mut ChaCha12Rng) -> ComplexMatrix {
    let g = ginibre(n, n, rng);
    let mut cols: Vec<Vec<num_complex::Complex64>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v: Vec<num_complex::Complex64> = (0..n).map(|i| g[(i, j)]).collect();
        for _ in 0..2 {
            for q in &cols {
                let ip: num_complex::Complex64 =
                    q.iter().zip(&v).map(|(qi, vi)| qi.conj() * vi).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= ip * qi;
                }
            }
        }
        let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for vi in &mut v {
            *vi /= c64(norm, 0.0);
        }
        cols.push(v);
    }
    ComplexMatrix::from_fn(n, n, |i, j| cols[j][i])
}

/// Random CPTP channel: reduce a Haar-random unitary on system ⊗ environment
/// over a pure environment state. Yields `env_dim` Kraus operators.
pub fn random_cptp(n: usize, env_dim: usize, rng: &mut ChaCha12Rng) -> KrausSet {
    let u = haar_unitary(n * env_dim, rng);
    let mut probs = vec![0.0; env_dim];
    probs[0] = 1.0;
    kraus_from_environment(&u, &probs, n).expect("Haar unitary with pure environment is valid")
}

/// Random full-rank density matrix (Hilbert–Schmidt ensemble): GG†/tr(GG†).
pub fn random_density(n: usize, rng: &mut ChaCha12Rng) -> ComplexMatrix {
    let g = ginibre(n, n, rng);
    let m = g.matmul(&g.adjoint()).expect("shapes agree");
    let t = m.trace().re;
    m.scale_re(1.0 / t)
}

/// Random pure state |ψ⟩⟨ψ| with |ψ⟩ a normalized Gaussian vector.
pub fn random_pure_density(n: usize, rng: &mut ChaCha12Rng) -> ComplexMatrix {
    let mut psi: Vec<num_complex::Complex64> = (0..n).map(|_| complex_gaussian(rng)).collect();
    let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut psi {
        *z /= c64(norm, 0.0);
    }
    ComplexMatrix::from_fn(n, n, |i, j| psi[i] * psi[j].conj())
}

/// Random Hermitian matrix with O(1) entries (test fodder).
pub fn random_hermitian(n: usize, rng: &mut ChaCha12Rng) -> ComplexMatrix {
    ginibre(n, n, rng).symmetrize()
}

/// Uniform point on the Bloch sphere (Marsaglia's method): draw (u, v) in
/// the unit disc, map to (2u√(1-s), 2v√(1-s), 1-2s) with s = u²+v².
pub fn bloch_on_sphere(rng: &mut ChaCha12Rng) -> BlochVector {
    loop {
        let u: f64 = rng.random_range(-1.0..1.0);
        let v: f64 = rng.random_range(-1.0..1.0);
        let s = u * u + v * v;
        if s < 1.0 && s > 0.0 {
            let f = (1.0 - s).sqrt();
            return BlochVector {
                x: 2.0 * u * f,
                y: 2.0 * v * f,
                z: 1.0 - 2.0 * s,
            };
        }
    }
}

/// Uniform point in the closed Bloch ball: rejection sampling from the cube.
pub fn bloch_in_ball(rng: &mut ChaCha12Rng) -> BlochVector {
    loop {
        let x: f64 = rng.random_range(-1.0..1.0);
        let y: f64 = rng.random_range(-1.0..1.0);
        let z: f64 = rng.random_range(-1.0..1.0);
        if x * x + y * y + z * z <= 1.0 {
            return BlochVector { x, y, z };
        }
    }
}
