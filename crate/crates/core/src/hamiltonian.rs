//! The base Hamiltonian `H0` and the three Hamiltonians obtained from it by
//! conjugation with the R-matrices.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;

use crate::algebra::{RFamily, RMatrixSpec, Sign};
use crate::error::Result;
use crate::linalg::{herm_eig, ComplexMatrix, I};
use crate::spin::spin_ops;

/// Physical parameters shared by the R-matrices and the Hamiltonians.
///
/// Stored as `B = (μ1 + μ2)/2` and `J = (μ1 - μ2)/2`; the field strengths
/// are recovered as `μ1 = B + J`, `μ2 = B - J`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    pub b: f64,
    pub j: f64,
    pub g: f64,
    pub theta: f64,
    pub phi: f64,
    pub epsilon: Sign,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self {
            b: 1.0,
            j: 1.0,
            g: 0.5,
            theta: FRAC_PI_2,
            phi: 0.0,
            epsilon: Sign::Plus,
        }
    }
}

impl ModelParams {
    pub fn from_fields(mu1: f64, mu2: f64, g: f64) -> Self {
        Self {
            b: (mu1 + mu2) / 2.0,
            j: (mu1 - mu2) / 2.0,
            g,
            ..Self::default()
        }
    }

    pub fn mu1(&self) -> f64 {
        self.b + self.j
    }

    pub fn mu2(&self) -> f64 {
        self.b - self.j
    }

    pub fn with_angles(self, theta: f64, phi: f64) -> Self {
        Self { theta, phi, ..self }
    }

    pub fn with_epsilon(self, epsilon: Sign) -> Self {
        Self { epsilon, ..self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    H1,
    H2,
    H3,
}

impl Model {
    pub const ALL: [Model; 3] = [Model::H1, Model::H2, Model::H3];

    pub fn name(self) -> &'static str {
        match self {
            Model::H1 => "h1",
            Model::H2 => "h2",
            Model::H3 => "h3",
        }
    }

    /// The R-matrix family that generates this model from `H0`.
    pub fn family(self) -> RFamily {
        match self {
            Model::H1 => RFamily::R1,
            Model::H2 => RFamily::R2,
            Model::H3 => RFamily::R3,
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "h1" => Ok(Model::H1),
            "h2" => Ok(Model::H2),
            "h3" => Ok(Model::H3),
            other => Err(format!("unknown model '{other}' (expected h1, h2 or h3)")),
        }
    }
}

/// `H0 = μ1 S1^z + μ2 S2^z + g S1^z S2^z`.
pub fn build_h0(p: &ModelParams) -> ComplexMatrix {
    let s = spin_ops();
    let zz = &s.sz1 * &s.sz2;
    &(&s.sz1.scale_real(p.mu1()) + &s.sz2.scale_real(p.mu2())) + &zz.scale_real(p.g)
}

/// Closed-form Hamiltonians at general `θ`.
pub fn build_h(model: Model, p: &ModelParams) -> ComplexMatrix {
    let s = spin_ops();
    let (sin_t, cos_t) = p.theta.sin_cos();
    let e = C64::from_polar(1.0, p.phi);
    let ec = e.conj();

    let z_sum = &s.sz1 + &s.sz2;
    let z_diff = &s.sz1 - &s.sz2;
    let zz = (&s.sz1 * &s.sz2).scale_real(p.g);
    // e^{iφ} S1^+ S2^+ - e^{-iφ} S1^- S2^-
    let pair = &(&s.sp1 * &s.sp2).scale(e) - &(&s.sm1 * &s.sm2).scale(ec);
    // e^{iφ} S1^+ S2^- - e^{-iφ} S1^- S2^+
    let hop = &(&s.sp1 * &s.sm2).scale(e) - &(&s.sm1 * &s.sp2).scale(ec);
    let exchange = &(&s.sp1 * &s.sm2) + &(&s.sm1 * &s.sp2);

    let terms: Vec<ComplexMatrix> = match model {
        Model::H1 => vec![
            z_sum.scale_real(p.b * cos_t),
            z_diff.scale_real(p.j),
            zz,
            pair.scale(I * (p.b * sin_t)),
        ],
        Model::H2 => vec![
            z_sum.scale_real(p.b),
            z_diff.scale_real(p.j * cos_t),
            zz,
            hop.scale(I * (p.j * sin_t)),
        ],
        Model::H3 => vec![
            z_sum.scale_real(p.b * cos_t),
            pair.scale(-I * (p.b * sin_t)),
            zz,
            z_diff.scale_real(p.j * cos_t),
            exchange.scale_real(p.epsilon.value() * p.j * sin_t),
        ],
    };
    terms.iter().fold(ComplexMatrix::zeros(4, 4), |acc, t| &acc + t)
}

/// `R H0 R^†` for the given family at the angles in `p`.
pub fn conjugate_h0(family: RFamily, p: &ModelParams) -> ComplexMatrix {
    let r = RMatrixSpec::new(family, p.theta, p.phi, p.epsilon).matrix();
    &(&r * &build_h0(p)) * &r.dagger()
}

/// Eigenvalues in descending order.
pub fn spectrum_of(h: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(herm_eig(h)?.eigenvalues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::linalg::{ONE, ZERO};
    use std::f64::consts::{FRAC_PI_4, PI};

    fn params(b: f64, j: f64, g: f64) -> ModelParams {
        ModelParams {
            b,
            j,
            g,
            ..ModelParams::default()
        }
    }

    #[test]
    fn field_bookkeeping() {
        let p = ModelParams::from_fields(2.0, 0.0, 0.0);
        assert_eq!((p.b, p.j), (1.0, 1.0));
        let p = params(0.3, -0.7, 0.0);
        assert_eq!(p.mu1(), 0.3 + -0.7);
        assert_eq!(p.mu2(), 0.3 - -0.7);
    }

    #[test]
    fn h0_examples() {
        assert_eq!(build_h0(&ModelParams::from_fields(0.0, 0.0, 0.0)).max_norm(), 0.0);
        assert_eq!(
            build_h0(&ModelParams::from_fields(2.0, 0.0, 0.0)),
            ComplexMatrix::from_diagonal(&[1.0, 1.0, -1.0, -1.0])
        );
        assert_eq!(
            build_h0(&params(1.0, 0.0, 4.0)),
            ComplexMatrix::from_diagonal(&[2.0, -1.0, -1.0, 0.0])
        );
        let p = params(0.8, -0.3, 1.7);
        let (b, j, g) = (p.b, p.j, p.g);
        let expected = ComplexMatrix::from_diagonal(&[b + g / 4.0, j - g / 4.0, -j - g / 4.0, -b + g / 4.0]);
        assert!(build_h0(&p).max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn h_examples_at_quarter_turn() {
        let (j, g) = (0.6, 1.2);
        let h1 = build_h(Model::H1, &params(0.0, j, g).with_angles(FRAC_PI_2, 0.9));
        let expected = ComplexMatrix::from_diagonal(&[g / 4.0, j - g / 4.0, -j - g / 4.0, g / 4.0]);
        assert!(h1.max_abs_diff(&expected) < 1e-15);

        let b = -0.4;
        let h2 = build_h(Model::H2, &params(b, 0.0, g).with_angles(FRAC_PI_2, 0.9));
        let expected = ComplexMatrix::from_diagonal(&[b + g / 4.0, -g / 4.0, -g / 4.0, -b + g / 4.0]);
        assert!(h2.max_abs_diff(&expected) < 1e-15);

        // φ = -π/2 turns H3 into a real symmetric XYZ-type matrix.
        let h3 = build_h(Model::H3, &params(0.7, 0.4, g).with_angles(FRAC_PI_2, -FRAC_PI_2));
        assert!(h3.row_major().iter().all(|z| z.im.abs() < 1e-15));
        assert!(h3.max_abs_diff(&h3.transpose()) < 1e-15);
    }

    /// Closed forms at θ = π/2, ε = +1, written out independently.
    fn quarter_turn_forms(model: Model, p: &ModelParams) -> ComplexMatrix {
        let s = spin_ops();
        let e = C64::from_polar(1.0, p.phi);
        let zz = (&s.sz1 * &s.sz2).scale_real(p.g);
        let pair = &(&s.sp1 * &s.sp2).scale(e) - &(&s.sm1 * &s.sm2).scale(e.conj());
        let hop = &(&s.sp1 * &s.sm2).scale(e) - &(&s.sm1 * &s.sp2).scale(e.conj());
        let exchange = &(&s.sp1 * &s.sm2) + &(&s.sm1 * &s.sp2);
        match model {
            Model::H1 => &(&(&s.sz1 - &s.sz2).scale_real(p.j) + &zz) + &pair.scale(I * p.b),
            Model::H2 => &(&(&s.sz1 + &s.sz2).scale_real(p.b) + &zz) + &hop.scale(I * p.j),
            Model::H3 => &(&exchange.scale_real(p.j) + &zz) + &pair.scale(-I * p.b),
        }
    }

    #[test]
    fn quarter_turn_reduction() {
        for &(b, j, g) in &[(1.0, 0.5, 0.5), (-0.3, 0.9, -1.1), (0.0, 1.0, 0.0)] {
            for k in 0..8 {
                let phi = 2.0 * PI * k as f64 / 8.0;
                let p = params(b, j, g).with_angles(FRAC_PI_2, phi);
                for model in Model::ALL {
                    let diff = build_h(model, &p).max_abs_diff(&quarter_turn_forms(model, &p));
                    assert!(diff < 1e-15, "{model} diff={diff}");
                }
            }
        }
    }

    #[test]
    fn conjugation_matches_closed_forms() {
        let values = [-1.0, 0.0, 0.5, 1.0];
        for &b in &values {
            for &j in &values {
                for &g in &values {
                    for k in 0..6 {
                        let theta = PI * k as f64 / 5.0;
                        let phi = 2.0 * PI * k as f64 / 7.0 - 0.3;
                        for eps in Sign::BOTH {
                            let p = params(b, j, g).with_angles(theta, phi).with_epsilon(eps);
                            for model in Model::ALL {
                                let conj = conjugate_h0(model.family(), &p);
                                let closed = build_h(model, &p);
                                assert!(conj.max_abs_diff(&closed) < 1e-10, "{model} {p:?}");
                                assert!(closed.hermiticity_defect() < 1e-12);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_trivial_angles() {
        let p = params(0.4, -0.2, 0.9).with_angles(0.0, 1.1);
        let h0 = build_h0(&p);
        assert!(conjugate_h0(RFamily::R1, &p).max_abs_diff(&h0) < 1e-15);
        assert!(conjugate_h0(RFamily::R3, &p).max_abs_diff(&h0) < 1e-15);
    }

    #[test]
    fn spectra() {
        let p = params(0.8, -0.3, 1.7).with_angles(1.1, FRAC_PI_4);
        let mut expected = vec![p.b + p.g / 4.0, p.j - p.g / 4.0, -p.j - p.g / 4.0, -p.b + p.g / 4.0];
        expected.sort_by(|a, b| b.total_cmp(a));
        let h0 = spectrum_of(&build_h0(&p)).unwrap();
        for (a, b) in h0.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-14);
        }
        for model in Model::ALL {
            let spec = spectrum_of(&build_h(model, &p)).unwrap();
            for (a, b) in spec.iter().zip(&expected) {
                assert!((a - b).abs() < 1e-10);
            }
        }
        assert_eq!(spectrum_of(&ComplexMatrix::zeros(4, 4)).unwrap(), vec![0.0; 4]);
        let bad = ComplexMatrix::from_rows(&[[ZERO, ONE], [ZERO, ZERO]]);
        assert!(matches!(spectrum_of(&bad), Err(Error::NonHermitianInput { .. })));
    }

    #[test]
    fn model_parsing() {
        assert_eq!("h2".parse::<Model>(), Ok(Model::H2));
        assert!("h4".parse::<Model>().is_err());
        assert_eq!(Model::H3.to_string(), "h3");
    }
}
