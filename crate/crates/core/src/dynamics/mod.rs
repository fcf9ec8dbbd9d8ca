//! Unitary evolution of the input states, closed-form oracles for the
//! measures along the evolution, and parameter sweeps comparing the two.

pub mod analytic;
pub mod sweep;

use crate::error::Result;
use crate::linalg::{herm_eig, ComplexMatrix, HermitianSpectrum};
use crate::states::{validate_density, DensityMatrix};

pub use analytic::{
    analytic_h1_werner, analytic_h1_xlike, analytic_h2_werner, analytic_h2_xlike, AnalyticAuxiliaries, AnalyticMeasures,
};
pub use sweep::{
    compare_analytic_numeric, compare_models, run_sweep, time_constancy, ComparisonReport, MeasureDiscrepancy,
    SweepRow, SweepSpec,
};

/// `σ = e^{-itH} ρ e^{itH}`.
pub fn evolve(rho: &DensityMatrix, h: &ComplexMatrix, t: f64) -> Result<DensityMatrix> {
    evolve_with(rho, &herm_eig(h)?, t)
}

/// [`evolve`] with a precomputed spectrum of `H`.
pub fn evolve_with(rho: &DensityMatrix, spectrum: &HermitianSpectrum, t: f64) -> Result<DensityMatrix> {
    if t == 0.0 {
        return Ok(rho.clone());
    }
    let u = spectrum.propagator(t);
    let sigma = &(&u * rho.matrix()) * &u.dagger();
    // Re-symmetrize so rounding never pushes the result past the Hermitian check.
    validate_density(&(&sigma + &sigma.dagger()).scale_real(0.5))
}
