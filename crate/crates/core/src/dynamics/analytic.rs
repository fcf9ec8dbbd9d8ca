//! Closed-form expressions for the measures along the four evolutions
//! (H1 or H2 acting on the Werner or X-like input) at `θ = π/2`.
//!
//! These are kept independent of the numerical pipeline: no matrices, only
//! scalar formulas in `p`, `φ` and the scaled time (`Bt` for H1, `Jt` for H2).
//! Concurrences are clamped at zero before entering the EoF. Logarithms are
//! base 2 with `0 log 0 = 0`.
//!
//! Two of the published expressions do not agree with the exact evolution:
//! the MID for H1 on the X-like input, and the concurrence for H2 on the
//! X-like input at small `p`. The oracles below implement the published
//! forms as written; [`exact_h1_xlike_mid`] and
//! [`exact_h2_xlike_concurrence`] give the values obtained from the exact
//! eigenvalues and X-state entries.

use crate::error::{Error, Result};
use crate::linalg::{binary_entropy, xlog2x};
use crate::measures::eof;

/// `C`, `E`, `C_l1` and `MID` from a closed form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalyticMeasures {
    pub concurrence: f64,
    pub eof: f64,
    pub c_l1: f64,
    pub mid: f64,
}

impl AnalyticMeasures {
    fn from_concurrence(concurrence: f64, c_l1: f64, mid: f64) -> Result<Self> {
        let concurrence = concurrence.clamp(0.0, 1.0);
        Ok(Self {
            concurrence,
            eof: eof(concurrence)?,
            c_l1,
            mid,
        })
    }
}

/// Auxiliary populations of the evolved states.
///
/// `x±` and `y±` read `scaled_time` as `Bt`; `z±` read it as `Jt`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalyticAuxiliaries {
    pub x_plus: f64,
    pub x_minus: f64,
    pub y_plus: f64,
    pub y_minus: f64,
    pub z_plus: f64,
    pub z_minus: f64,
}

impl AnalyticAuxiliaries {
    pub fn new(p: f64, phi: f64, scaled_time: f64) -> Self {
        let cs = phi.cos() * (2.0 * scaled_time).sin();
        Self {
            x_plus: 1.0 + p + 2.0 * p * cs,
            x_minus: 1.0 + p - 2.0 * p * cs,
            y_plus: (1.0 - p) * (1.0 + cs),
            y_minus: (1.0 - p) * (1.0 - cs),
            z_plus: (1.0 + p + (1.0 - 3.0 * p) * cs) / 4.0,
            z_minus: (1.0 + p - (1.0 - 3.0 * p) * cs) / 4.0,
        }
    }
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::DomainError {
            what: "p",
            value: p,
            domain: "[0, 1]",
        });
    }
    Ok(())
}

/// `√(1 - cos²φ sin²(2τ))`
fn damping(phi: f64, scaled_time: f64) -> f64 {
    let cs = phi.cos() * (2.0 * scaled_time).sin();
    (1.0 - cs * cs).max(0.0).sqrt()
}

/// H1 acting on the Werner input; `bt` is `Bt`.
pub fn analytic_h1_werner(p: f64, phi: f64, bt: f64) -> Result<AnalyticMeasures> {
    check_p(p)?;
    let aux = AnalyticAuxiliaries::new(p, phi, bt);
    let c_l1 = (p * damping(phi, bt)).abs();
    let concurrence = c_l1 - (1.0 - p).abs() / 2.0;
    let mid = 0.25 * (xlog2x(1.0 - p) + xlog2x(1.0 + 3.0 * p) - xlog2x(aux.x_plus) - xlog2x(aux.x_minus));
    AnalyticMeasures::from_concurrence(concurrence, c_l1, mid)
}

/// H1 acting on the X-like input; `bt` is `Bt`.
pub fn analytic_h1_xlike(p: f64, phi: f64, bt: f64) -> Result<AnalyticMeasures> {
    check_p(p)?;
    let aux = AnalyticAuxiliaries::new(p, phi, bt);
    let c_l1 = 0.5 * (((1.0 - p) * damping(phi, bt)).abs() + (1.0 - 3.0 * p).abs());
    let concurrence = (1.0 - 3.0 * p).abs() - c_l1;
    let mid = 0.25
        * (3.0 * xlog2x(1.0 - p) + xlog2x(1.0 + 3.0 * p)
            - 2.0 * xlog2x(1.0 + p)
            - xlog2x(aux.y_plus)
            - xlog2x(aux.y_minus));
    AnalyticMeasures::from_concurrence(concurrence, c_l1, mid)
}

/// H2 acting on the Werner input. Time-independent.
pub fn analytic_h2_werner(p: f64) -> Result<AnalyticMeasures> {
    check_p(p)?;
    let concurrence = (3.0 * p - 1.0) / 2.0;
    let mid = 0.25 * (xlog2x(1.0 - p) + xlog2x(1.0 + 3.0 * p) - 2.0 * xlog2x(1.0 + p));
    AnalyticMeasures::from_concurrence(concurrence, p, mid)
}

/// H2 acting on the X-like input; `jt` is `Jt`.
pub fn analytic_h2_xlike(p: f64, phi: f64, jt: f64) -> Result<AnalyticMeasures> {
    check_p(p)?;
    let aux = AnalyticAuxiliaries::new(p, phi, jt);
    let c_l1 = 0.5 * ((1.0 - p).abs() + ((1.0 - 3.0 * p) * damping(phi, jt)).abs());
    let concurrence = c_l1 - (1.0 - p).abs();
    let mid = -binary_entropy(p)? - 0.5 * xlog2x(1.0 - p) - xlog2x(aux.z_plus) - xlog2x(aux.z_minus);
    AnalyticMeasures::from_concurrence(concurrence, c_l1, mid)
}

/// `h[(2 + √(3(1-p)(1+3p)))/4]`, the unclamped EoF of the Werner family when its
/// concurrence is `(3p - 1)/2`. Equals the true EoF only for `p ≥ 1/3`.
pub fn werner_eof_formula(p: f64) -> Result<f64> {
    check_p(p)?;
    let root = (3.0 * (1.0 - p) * (1.0 + 3.0 * p)).max(0.0).sqrt();
    binary_entropy(((2.0 + root) / 4.0).min(1.0))
}

/// Exact MID for H1 on the X-like input, from the spectrum
/// `{p, (1-p)/2, (1-p)/2, 0}` and the evolved diagonal `(y+/4, (1+p)/4, (1+p)/4, y-/4)`.
pub fn exact_h1_xlike_mid(p: f64, phi: f64, bt: f64) -> Result<f64> {
    check_p(p)?;
    let aux = AnalyticAuxiliaries::new(p, phi, bt);
    Ok(1.0 + p - binary_entropy(p)? - 0.5 * xlog2x(1.0 + p) - 0.25 * (xlog2x(aux.y_plus) + xlog2x(aux.y_minus)))
}

/// Exact concurrence for H2 on the X-like input, keeping both X-state branches.
pub fn exact_h2_xlike_concurrence(p: f64, phi: f64, jt: f64) -> Result<f64> {
    check_p(p)?;
    let aux = AnalyticAuxiliaries::new(p, phi, jt);
    let inner = ((1.0 - 3.0 * p).abs() * damping(phi, jt) - (1.0 - p)) / 2.0;
    let outer = (1.0 - p) / 2.0 - 2.0 * (aux.z_plus * aux.z_minus).max(0.0).sqrt();
    Ok(inner.max(outer).clamp(0.0, 1.0))
}
