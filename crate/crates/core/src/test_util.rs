use num_complex::Complex64 as C64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::linalg::ComplexMatrix;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn gaussian_pair(rng: &mut StdRng) -> C64 {
    // Box-Muller
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let a = 2.0 * std::f64::consts::PI * u2;
    C64::new(r * a.cos(), r * a.sin())
}

pub fn random_matrix(rng: &mut StdRng, n: usize) -> ComplexMatrix {
    let entries = (0..n * n).map(|_| gaussian_pair(rng)).collect();
    ComplexMatrix::from_row_major(n, n, entries).unwrap()
}

pub fn random_hermitian(rng: &mut StdRng, n: usize) -> ComplexMatrix {
    let a = random_matrix(rng, n);
    (&a + &a.dagger()).scale_real(0.5)
}

pub fn random_density(rng: &mut StdRng, n: usize) -> ComplexMatrix {
    let a = random_matrix(rng, n);
    let m = &a * &a.dagger();
    let tr = m.trace().re;
    m.scale_real(1.0 / tr)
}
