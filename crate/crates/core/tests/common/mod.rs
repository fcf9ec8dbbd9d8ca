#![allow(dead_code)]

use num_complex::Complex64 as C64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ybcorr::linalg::ComplexMatrix;
use ybcorr::states::{validate_density, DensityMatrix};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn gaussian(rng: &mut StdRng) -> C64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    C64::from_polar(r, 2.0 * std::f64::consts::PI * u2)
}

pub fn random_density(rng: &mut StdRng) -> DensityMatrix {
    let a = ComplexMatrix::from_row_major(4, 4, (0..16).map(|_| gaussian(rng)).collect()).unwrap();
    let m = &a * &a.dagger();
    let m = m.scale_real(1.0 / m.trace().re);
    validate_density(&(&m + &m.dagger()).scale_real(0.5)).unwrap()
}

/// Haar-random 2×2 unitary from a Gaussian column normalized and completed.
pub fn random_unitary_2(rng: &mut StdRng) -> ComplexMatrix {
    let (a, b) = (gaussian(rng), gaussian(rng));
    let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let (a, b) = (a / n, b / n);
    let phase = C64::from_polar(1.0, rng.gen_range(0.0..2.0 * std::f64::consts::PI));
    ComplexMatrix::from_rows(&[[a, -b.conj() * phase], [b, a.conj() * phase]])
}

/// Random X state: positive diagonal, anti-diagonal bounded by the
/// geometric means of the matching diagonal pairs.
pub fn random_x_state(rng: &mut StdRng) -> DensityMatrix {
    let mut d: Vec<f64> = (0..4).map(|_| rng.gen_range(0.0..1.0f64)).collect();
    if rng.gen_bool(0.2) {
        d[rng.gen_range(0..4)] = 0.0;
    }
    let total: f64 = d.iter().sum();
    let d: Vec<f64> = d.iter().map(|x| x / total).collect();
    let z = C64::from_polar(
        rng.gen_range(0.0..=1.0) * (d[0] * d[3]).sqrt(),
        rng.gen_range(-3.2..3.2),
    );
    let w = C64::from_polar(
        rng.gen_range(0.0..=1.0) * (d[1] * d[2]).sqrt(),
        rng.gen_range(-3.2..3.2),
    );
    let mut m = ComplexMatrix::from_diagonal(&d);
    m.set(0, 3, z);
    m.set(3, 0, z.conj());
    m.set(1, 2, w);
    m.set(2, 1, w.conj());
    validate_density(&m).unwrap()
}
