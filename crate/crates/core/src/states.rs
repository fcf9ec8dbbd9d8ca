//! Two-qubit states: Bell vectors, the two Werner-like input families and a
//! validated density-matrix type.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{herm_eig, partial_trace, ComplexMatrix, Subsystem, HERMITIAN_TOL, PSD_CLAMP, ZERO};

/// Two-qubit state vector in the computational basis.
pub type StateVector = [C64; 4];

/// A Hermitian, unit-trace, positive semidefinite 4×4 matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    /// `ρ_ij`, zero-based.
    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.0[(i, j)]
    }

    pub fn from_pure(psi: &StateVector) -> Result<Self> {
        validate_density(&ComplexMatrix::outer(psi, psi))
    }

    pub fn partial_trace(&self, keep: Subsystem) -> ComplexMatrix {
        partial_trace(&self.0, keep)
    }

    /// Eigenvalues, descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        herm_eig(&self.0)
            .expect("validated density matrix is Hermitian")
            .eigenvalues
    }

    pub fn is_x_state(&self, tol: f64) -> bool {
        is_x_state(self, tol)
    }
}

impl AsRef<ComplexMatrix> for DensityMatrix {
    fn as_ref(&self) -> &ComplexMatrix {
        &self.0
    }
}

/// Checks the density-matrix invariants and wraps the matrix.
pub fn validate_density(m: &ComplexMatrix) -> Result<DensityMatrix> {
    if (m.rows(), m.cols()) != (4, 4) {
        return Err(Error::Dimension(format!(
            "two-qubit density matrix must be 4x4, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let deviation = m.hermiticity_defect();
    if deviation.is_nan() || deviation > HERMITIAN_TOL {
        return Err(Error::NonHermitian { deviation });
    }
    let trace = m.trace().re;
    if (trace - 1.0).abs() > HERMITIAN_TOL {
        return Err(Error::TraceNotOne { trace });
    }
    let min_eigenvalue = herm_eig(m)?.eigenvalues[3];
    if min_eigenvalue < -PSD_CLAMP {
        return Err(Error::NotPsd { min_eigenvalue });
    }
    Ok(DensityMatrix(m.clone()))
}

/// Label of the Bell vector `|β_xy>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BellLabel {
    x: u8,
    y: u8,
}

impl BellLabel {
    pub fn new(x: u8, y: u8) -> Result<Self> {
        if x > 1 || y > 1 {
            return Err(Error::DomainError {
                what: "Bell label bit",
                value: x.max(y) as f64,
                domain: "{0, 1}",
            });
        }
        Ok(Self { x, y })
    }

    pub fn all() -> [BellLabel; 4] {
        [(0, 0), (0, 1), (1, 0), (1, 1)].map(|(x, y)| BellLabel { x, y })
    }
}

/// `|β_xy> = (|0,y> + (-1)^x |1,ȳ>)/√2`.
pub fn bell_state(label: BellLabel) -> StateVector {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let y = label.y as usize;
    let sign = if label.x == 0 { 1.0 } else { -1.0 };
    let mut psi = [ZERO; 4];
    psi[y] = C64::new(s, 0.0);
    psi[2 + (1 - y)] = C64::new(sign * s, 0.0);
    psi
}

fn bell_projector(x: u8, y: u8) -> ComplexMatrix {
    let psi = bell_state(BellLabel { x, y });
    ComplexMatrix::outer(&psi, &psi)
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::DomainError {
            what: "p",
            value: p,
            domain: "[0, 1]",
        });
    }
    Ok(())
}

/// `(1 - p) I/4 + p |β00><β00|`.
pub fn werner_state(p: f64) -> Result<DensityMatrix> {
    check_probability(p)?;
    let mixed = ComplexMatrix::identity(4).scale_real((1.0 - p) / 4.0);
    validate_density(&(&mixed + &bell_projector(0, 0).scale_real(p)))
}

/// `p |β11><β11| + (1 - p)/2 (|β01><β01| + |β00><β00|)`.
pub fn xlike_state(p: f64) -> Result<DensityMatrix> {
    check_probability(p)?;
    let pair = &bell_projector(0, 1) + &bell_projector(0, 0);
    validate_density(&(&bell_projector(1, 1).scale_real(p) + &pair.scale_real((1.0 - p) / 2.0)))
}

/// Largest magnitude outside the diagonal and anti-diagonal.
pub fn x_pattern_defect(m: &ComplexMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            if i != j && i + j != 3 {
                worst = worst.max(m[(i, j)].norm());
            }
        }
    }
    worst
}

pub fn is_x_state(rho: &DensityMatrix, tol: f64) -> bool {
    x_pattern_defect(rho.matrix()) < tol
}

/// The two input families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InputState {
    Werner,
    Xlike,
}

impl InputState {
    pub const ALL: [InputState; 2] = [InputState::Werner, InputState::Xlike];

    pub fn name(self) -> &'static str {
        match self {
            InputState::Werner => "werner",
            InputState::Xlike => "xlike",
        }
    }

    pub fn build(self, p: f64) -> Result<DensityMatrix> {
        match self {
            InputState::Werner => werner_state(p),
            InputState::Xlike => xlike_state(p),
        }
    }
}

impl fmt::Display for InputState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InputState {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "werner" => Ok(InputState::Werner),
            "xlike" => Ok(InputState::Xlike),
            other => Err(format!("unknown state '{other}' (expected werner or xlike)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn bell_vectors() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(bell_state(BellLabel::new(0, 0).unwrap()), [re(s), ZERO, ZERO, re(s)]);
        assert_eq!(bell_state(BellLabel::new(1, 1).unwrap()), [ZERO, re(s), re(-s), ZERO]);
        for a in BellLabel::all() {
            for b in BellLabel::all() {
                let (va, vb) = (bell_state(a), bell_state(b));
                let overlap: C64 = va.iter().zip(&vb).map(|(x, y)| x.conj() * y).sum();
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!((overlap - re(expected)).norm() < 1e-15);
            }
        }
        assert!(BellLabel::new(2, 0).is_err());
    }

    #[test]
    fn werner_entries() {
        let w = werner_state(0.0).unwrap();
        assert!(w.matrix().max_abs_diff(&ComplexMatrix::identity(4).scale_real(0.25)) < 1e-16);

        let psi = bell_state(BellLabel::new(0, 0).unwrap());
        let w = werner_state(1.0).unwrap();
        assert!(w.matrix().max_abs_diff(&ComplexMatrix::outer(&psi, &psi)) < 1e-15);

        let w = werner_state(0.5).unwrap();
        let mut expected = ComplexMatrix::from_diagonal(&[0.375, 0.125, 0.125, 0.375]);
        expected.set(0, 3, re(0.25));
        expected.set(3, 0, re(0.25));
        assert!(w.matrix().max_abs_diff(&expected) < 1e-15);

        assert!(matches!(werner_state(1.5), Err(Error::DomainError { .. })));
    }

    #[test]
    fn xlike_entries() {
        for k in 0..=10 {
            let p = k as f64 / 10.0;
            let x = xlike_state(p).unwrap();
            let d = [(1.0 - p) / 4.0, (1.0 + p) / 4.0, (1.0 + p) / 4.0, (1.0 - p) / 4.0];
            let mut expected = ComplexMatrix::from_diagonal(&d);
            for (i, j, v) in [(0, 3, (1.0 - p) / 4.0), (1, 2, (1.0 - 3.0 * p) / 4.0)] {
                expected.set(i, j, re(v));
                expected.set(j, i, re(v));
            }
            assert!(x.matrix().max_abs_diff(&expected) < 1e-15, "p={p}");
        }
        let singlet = bell_state(BellLabel::new(1, 1).unwrap());
        let x = xlike_state(1.0).unwrap();
        assert!(x.matrix().max_abs_diff(&ComplexMatrix::outer(&singlet, &singlet)) < 1e-15);
        assert!((xlike_state(0.0).unwrap().entry(1, 2) - re(0.25)).norm() < 1e-16);
        assert!(xlike_state(1.0 / 3.0).unwrap().entry(1, 2).norm() < 1e-16);
        assert!(xlike_state(-0.1).is_err());
    }

    #[test]
    fn constructors_valid_on_grid() {
        for k in 0..=100 {
            let p = k as f64 / 100.0;
            let half = ComplexMatrix::identity(2).scale_real(0.5);
            let w = werner_state(p).unwrap();
            assert!(w.partial_trace(Subsystem::A).max_abs_diff(&half) < 1e-15);
            assert!(w.partial_trace(Subsystem::B).max_abs_diff(&half) < 1e-15);

            let x = xlike_state(p).unwrap();
            let mut expected = [p, (1.0 - p) / 2.0, (1.0 - p) / 2.0, 0.0];
            expected.sort_by(|a, b| b.total_cmp(a));
            for (a, b) in x.eigenvalues().iter().zip(&expected) {
                assert!((a - b).abs() < 1e-14, "p={p}");
            }
        }
    }

    #[test]
    fn validation_errors() {
        assert!(validate_density(&ComplexMatrix::identity(4).scale_real(0.25)).is_ok());
        assert!(matches!(
            validate_density(&ComplexMatrix::from_diagonal(&[1.0, 0.0, 0.0, 0.1])),
            Err(Error::TraceNotOne { .. })
        ));
        assert!(matches!(
            validate_density(&ComplexMatrix::from_diagonal(&[1.5, -0.5, 0.0, 0.0])),
            Err(Error::NotPsd { min_eigenvalue }) if (min_eigenvalue + 0.5).abs() < 1e-12
        ));
        let mut m = ComplexMatrix::identity(4).scale_real(0.25);
        m.set(0, 1, re(0.1));
        assert!(matches!(validate_density(&m), Err(Error::NonHermitian { .. })));
        assert!(matches!(
            validate_density(&ComplexMatrix::identity(2).scale_real(0.5)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn x_form() {
        assert!(werner_state(0.7).unwrap().is_x_state(1e-12));
        let mut m = ComplexMatrix::identity(4).scale_real(0.25);
        m.set(0, 1, re(0.1));
        m.set(1, 0, re(0.1));
        assert!(!validate_density(&m).unwrap().is_x_state(1e-10));
    }
}
