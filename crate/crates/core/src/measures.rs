//! Entanglement, coherence and measurement-induced disturbance of two-qubit
//! states.
//!
//! All logarithms are base 2. Coherence measures use the fixed computational
//! basis.
//!
//! MID needs the eigenbases of the two marginals. When a marginal is
//! degenerate (eigenvalues within `1e-8`), its eigenbasis is not unique and
//! the computational basis is used for that qubit. Every state produced by
//! the dynamics here has diagonal marginals, so this choice makes the general
//! MID coincide with the X-state expression `S(diag ρ) - S(ρ)`.

use nalgebra::{DMatrix, SVD};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{binary_entropy, herm_eig, shannon_entropy, von_neumann_entropy, ComplexMatrix, Subsystem};
use crate::states::{x_pattern_defect, DensityMatrix, StateVector};

/// Tolerance for taking the X-state fast paths.
pub const X_STATE_TOL: f64 = 1e-10;

/// Marginal eigenvalue gap below which MID falls back to the computational basis.
pub const DEGENERACY_TOL: f64 = 1e-8;

/// Eigenvalues of ρ at or below this are dropped when forming the concurrence
/// decomposition `ρ = V V^H`.
const RANK_CUTOFF: f64 = 1e-14;

/// All five quantifiers at one state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasureSet {
    pub concurrence: f64,
    pub eof: f64,
    pub c_l1: f64,
    pub c_r: f64,
    pub mid: f64,
}

/// `σ_y ⊗ σ_y`.
pub fn sigma_yy() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ])
}

/// Spin-flipped state `(σ_y⊗σ_y) ρ* (σ_y⊗σ_y)`.
pub fn spin_flip(rho: &DensityMatrix) -> ComplexMatrix {
    let yy = sigma_yy();
    &(&yy * &rho.matrix().conj()) * &yy
}

/// The `λ_i` of the concurrence, descending.
///
/// With `ρ = V V^H`, the eigenvalues of `ρ ρ̃` are the squared singular values
/// of the symmetric matrix `V^T (σ_y⊗σ_y) V`, so the `λ_i` come out of an SVD
/// directly without square-rooting small eigenvalues.
pub fn concurrence_lambdas(rho: &DensityMatrix) -> Vec<f64> {
    let spectrum = herm_eig(rho.matrix()).expect("validated density matrix is Hermitian");
    let kept: Vec<usize> = (0..4).filter(|&k| spectrum.eigenvalues[k] > RANK_CUTOFF).collect();
    let mut lambdas = vec![0.0; 4];
    if kept.is_empty() {
        return lambdas;
    }
    let v = DMatrix::from_fn(4, kept.len(), |i, c| {
        let k = kept[c];
        spectrum.eigenvectors[(i, k)] * spectrum.eigenvalues[k].sqrt()
    });
    let yy = sigma_yy();
    let tau = v.transpose() * yy.inner() * &v;
    let svd = SVD::new(tau, false, false);
    let mut values: Vec<f64> = svd.singular_values.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    lambdas[..values.len()].copy_from_slice(&values);
    lambdas
}

/// Wootters concurrence of an arbitrary two-qubit state.
pub fn concurrence_general(rho: &DensityMatrix) -> f64 {
    let l = concurrence_lambdas(rho);
    (l[0] - l[1] - l[2] - l[3]).clamp(0.0, 1.0)
}

/// Concurrence from the X-state closed form.
pub fn concurrence_x(rho: &DensityMatrix) -> Result<f64> {
    require_x(rho)?;
    let r = |i: usize, j: usize| rho.entry(i, j);
    let branch_inner = r(1, 2).norm() - (r(0, 0).re.max(0.0) * r(3, 3).re.max(0.0)).sqrt();
    let branch_outer = r(0, 3).norm() - (r(1, 1).re.max(0.0) * r(2, 2).re.max(0.0)).sqrt();
    Ok((2.0 * branch_inner.max(branch_outer).max(0.0)).min(1.0))
}

/// `|<ψ|ψ̃>|` with `|ψ̃> = (σ_y⊗σ_y)|ψ*>`.
pub fn concurrence_pure(psi: &StateVector) -> Result<f64> {
    let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized { norm });
    }
    let conj: Vec<C64> = psi.iter().map(|z| z.conj()).collect();
    let flipped = sigma_yy().apply(&conj);
    let overlap: C64 = psi.iter().zip(&flipped).map(|(a, b)| a.conj() * b).sum();
    Ok(overlap.norm())
}

/// Entanglement of formation from the concurrence.
pub fn eof(c: f64) -> Result<f64> {
    if !(-1e-12..=1.0 + 1e-12).contains(&c) {
        return Err(Error::DomainError {
            what: "concurrence",
            value: c,
            domain: "[0, 1]",
        });
    }
    let c = c.clamp(0.0, 1.0);
    binary_entropy((1.0 + (1.0 - c * c).sqrt()) / 2.0)
}

/// Sum of the magnitudes of the off-diagonal entries.
pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    let mut sum = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                sum += rho.entry(i, j).norm();
            }
        }
    }
    sum
}

fn diagonal_entropy(m: &ComplexMatrix) -> f64 {
    let probs: Vec<f64> = m.diagonal().iter().map(|z| z.re).collect();
    shannon_entropy(&probs)
}

/// `S(ρ_diag) - S(ρ)`.
pub fn rel_entropy_coherence(rho: &DensityMatrix) -> Result<f64> {
    let s = von_neumann_entropy(rho.matrix())?;
    Ok((diagonal_entropy(rho.matrix()) - s).max(0.0))
}

fn mutual_information_of(m: &ComplexMatrix) -> Result<f64> {
    let sa = von_neumann_entropy(&crate::linalg::partial_trace(m, Subsystem::A))?;
    let sb = von_neumann_entropy(&crate::linalg::partial_trace(m, Subsystem::B))?;
    Ok(sa + sb - von_neumann_entropy(m)?)
}

/// `S(ρ_A) + S(ρ_B) - S(ρ)`.
pub fn mutual_information(rho: &DensityMatrix) -> Result<f64> {
    mutual_information_of(rho.matrix())
}

/// Rank-one projectors onto the eigenbasis of a qubit marginal, or onto the
/// computational basis when the marginal is degenerate.
fn local_projectors(marginal: &ComplexMatrix) -> Result<[ComplexMatrix; 2]> {
    let spectrum = herm_eig(marginal)?;
    if (spectrum.eigenvalues[0] - spectrum.eigenvalues[1]).abs() < DEGENERACY_TOL {
        return Ok([
            ComplexMatrix::from_diagonal(&[1.0, 0.0]),
            ComplexMatrix::from_diagonal(&[0.0, 1.0]),
        ]);
    }
    let project = |k: usize| {
        let v = spectrum.eigenvector(k);
        ComplexMatrix::outer(&v, &v)
    };
    Ok([project(0), project(1)])
}

/// Post-measurement state `Σ (Π_i ⊗ Π_j) ρ (Π_i ⊗ Π_j)` in the marginal eigenbases.
pub fn local_measurement(rho: &DensityMatrix) -> Result<ComplexMatrix> {
    let pa = local_projectors(&rho.partial_trace(Subsystem::A))?;
    let pb = local_projectors(&rho.partial_trace(Subsystem::B))?;
    let mut out = ComplexMatrix::zeros(4, 4);
    for a in &pa {
        for b in &pb {
            let p = a.kron(b);
            out = &out + &(&(&p * rho.matrix()) * &p);
        }
    }
    Ok(out)
}

/// `I(ρ) - I(Π(ρ))`.
pub fn mid_general(rho: &DensityMatrix) -> Result<f64> {
    let measured = local_measurement(rho)?;
    let value = mutual_information(rho)? - mutual_information_of(&measured)?;
    Ok(value.max(0.0))
}

/// `S(diag ρ) - S(ρ)` for X states.
pub fn mid_x(rho: &DensityMatrix) -> Result<f64> {
    require_x(rho)?;
    rel_entropy_coherence(rho)
}

fn require_x(rho: &DensityMatrix) -> Result<()> {
    let deviation = x_pattern_defect(rho.matrix());
    if deviation >= X_STATE_TOL {
        return Err(Error::NotXState { deviation });
    }
    Ok(())
}

/// All five measures, through the X-state formulas when they apply.
pub fn measure_all(rho: &DensityMatrix) -> Result<MeasureSet> {
    let (concurrence, mid) = if rho.is_x_state(X_STATE_TOL) {
        (concurrence_x(rho)?, mid_x(rho)?)
    } else {
        (concurrence_general(rho), mid_general(rho)?)
    };
    Ok(MeasureSet {
        concurrence,
        eof: eof(concurrence)?,
        c_l1: l1_coherence(rho),
        c_r: rel_entropy_coherence(rho)?,
        mid,
    })
}

/// Same as [`measure_all`] but always through the general routes.
pub fn measure_all_general(rho: &DensityMatrix) -> Result<MeasureSet> {
    let concurrence = concurrence_general(rho);
    Ok(MeasureSet {
        concurrence,
        eof: eof(concurrence)?,
        c_l1: l1_coherence(rho),
        c_r: rel_entropy_coherence(rho)?,
        mid: mid_general(rho)?,
    })
}

/// The pure-state vector as a density matrix.
pub fn pure_density(psi: &StateVector) -> Result<DensityMatrix> {
    DensityMatrix::from_pure(psi)
}
