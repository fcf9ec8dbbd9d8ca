//! Temperley-Lieb generators, Yang-Baxterized R-matrices and residual checks
//! for the algebraic relations they are expected to satisfy.
//!
//! Site indices in multi-site embeddings are 1-based: `U_i` acts on sites
//! `(i, i+1)` with identities elsewhere.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, I, ONE, ZERO};
use crate::spin::spin_ops;

/// The sign `ε = ±1` that appears in `U3`, `R3` and `H3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TlaFamily {
    U1,
    U2,
    U3,
}

impl TlaFamily {
    pub const ALL: [TlaFamily; 3] = [TlaFamily::U1, TlaFamily::U2, TlaFamily::U3];

    /// Loop value `d` in `U^2 = d U`.
    pub fn loop_value(self) -> f64 {
        match self {
            TlaFamily::U1 | TlaFamily::U2 => 2.0,
            TlaFamily::U3 => std::f64::consts::SQRT_2,
        }
    }
}

/// A Temperley-Lieb generator on two qubits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TlaGenerator {
    pub family: TlaFamily,
    pub phi: f64,
    /// Only read by `U3`.
    pub epsilon: Sign,
}

impl TlaGenerator {
    pub fn new(family: TlaFamily, phi: f64, epsilon: Sign) -> Self {
        Self { family, phi, epsilon }
    }

    pub fn loop_value(&self) -> f64 {
        self.family.loop_value()
    }

    pub fn matrix(&self) -> ComplexMatrix {
        build_u(self)
    }
}

/// Hermitian 4×4 realization of a Temperley-Lieb generator.
pub fn build_u(spec: &TlaGenerator) -> ComplexMatrix {
    let e = C64::from_polar(1.0, spec.phi);
    let ec = e.conj();
    match spec.family {
        TlaFamily::U1 => ComplexMatrix::from_rows(&[
            [ONE, ZERO, ZERO, e],
            [ZERO, ZERO, ZERO, ZERO],
            [ZERO, ZERO, ZERO, ZERO],
            [ec, ZERO, ZERO, ONE],
        ]),
        TlaFamily::U2 => ComplexMatrix::from_rows(&[
            [ZERO, ZERO, ZERO, ZERO],
            [ZERO, ONE, e, ZERO],
            [ZERO, ec, ONE, ZERO],
            [ZERO, ZERO, ZERO, ZERO],
        ]),
        TlaFamily::U3 => {
            let ie = I * spec.epsilon.value();
            ComplexMatrix::from_rows(&[
                [ONE, ZERO, ZERO, e],
                [ZERO, ONE, ie, ZERO],
                [ZERO, -ie, ONE, ZERO],
                [ec, ZERO, ZERO, ONE],
            ])
            .scale_real(std::f64::consts::FRAC_1_SQRT_2)
        }
    }
}

/// Embeds a two-site operator on sites `(site, site + 1)` of a chain.
pub fn embed_two_site(op: &ComplexMatrix, site: usize, sites: usize) -> ComplexMatrix {
    assert!(site >= 1 && site < sites, "site {site} out of range for {sites} sites");
    let left = ComplexMatrix::identity(1 << (site - 1));
    let right = ComplexMatrix::identity(1 << (sites - site - 1));
    left.kron(op).kron(&right)
}

/// Max-norm residuals of the Temperley-Lieb relations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TlaResiduals {
    /// `max(|U_i U_{i+1} U_i - U_i|, |U_{i+1} U_i U_{i+1} - U_{i+1}|)` over adjacent pairs.
    pub braid_like: f64,
    /// `|U_i^2 - d U_i|`.
    pub idempotent: f64,
    /// `|[U_1, U_3]|`, only on four sites.
    pub far_commutation: Option<f64>,
}

impl TlaResiduals {
    pub fn max(&self) -> f64 {
        self.braid_like
            .max(self.idempotent)
            .max(self.far_commutation.unwrap_or(0.0))
    }
}

pub fn check_tla(family: TlaFamily, phi: f64, epsilon: Sign, sites: usize) -> Result<TlaResiduals> {
    if !(3..=4).contains(&sites) {
        return Err(Error::DomainError {
            what: "sites",
            value: sites as f64,
            domain: "{3, 4}",
        });
    }
    let gen = TlaGenerator::new(family, phi, epsilon);
    let u = gen.matrix();
    let d = gen.loop_value();
    let us: Vec<ComplexMatrix> = (1..sites).map(|i| embed_two_site(&u, i, sites)).collect();

    let mut braid_like = 0.0f64;
    for pair in us.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        braid_like = braid_like
            .max((&(a * b) * a).max_abs_diff(a))
            .max((&(b * a) * b).max_abs_diff(b));
    }
    let idempotent = us
        .iter()
        .map(|ui| (ui * ui).max_abs_diff(&ui.scale_real(d)))
        .fold(0.0, f64::max);
    let far_commutation = (sites == 4).then(|| us[0].commutator(&us[2]).max_norm());
    Ok(TlaResiduals {
        braid_like,
        idempotent,
        far_commutation,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RFamily {
    R1,
    R2,
    R3,
}

impl RFamily {
    pub const ALL: [RFamily; 3] = [RFamily::R1, RFamily::R2, RFamily::R3];

    /// The generator this family is Yang-Baxterized from.
    pub fn generator(self) -> TlaFamily {
        match self {
            RFamily::R1 => TlaFamily::U1,
            RFamily::R2 => TlaFamily::U2,
            RFamily::R3 => TlaFamily::U3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RMatrixSpec {
    pub family: RFamily,
    pub theta: f64,
    pub phi: f64,
    /// Only read by `R3`.
    pub epsilon: Sign,
}

impl RMatrixSpec {
    pub fn new(family: RFamily, theta: f64, phi: f64, epsilon: Sign) -> Self {
        Self {
            family,
            theta,
            phi,
            epsilon,
        }
    }

    pub fn matrix(&self) -> ComplexMatrix {
        build_r(self)
    }
}

/// Unitary R-matrix `R(θ, φ)` of the requested family.
pub fn build_r(spec: &RMatrixSpec) -> ComplexMatrix {
    let s = spin_ops();
    let (half_sin, half_cos) = (spec.theta / 2.0).sin_cos();
    let e = C64::from_polar(1.0, spec.phi);
    let ec = e.conj();

    let double_raise = &(&s.sp1 * &s.sp2).scale(e) + &(&s.sm1 * &s.sm2).scale(ec);
    let zz = &s.sz1 * &s.sz2;
    match spec.family {
        RFamily::R1 | RFamily::R2 => {
            let head = C64::new(half_cos, 0.5 * half_sin);
            let (zz_sign, hop) = if spec.family == RFamily::R1 {
                (-1.0, double_raise)
            } else {
                (1.0, &(&s.sp1 * &s.sm2).scale(e) + &(&s.sm1 * &s.sp2).scale(ec))
            };
            let a = s.identity.scale(head);
            let b = zz.scale(I * (2.0 * zz_sign * half_sin));
            let c = hop.scale(-I * half_sin);
            &(&a + &b) + &c
        }
        RFamily::R3 => {
            let flip = &(&s.sp1 * &s.sm2) - &(&s.sm1 * &s.sp2);
            let a = s.identity.scale_real(-half_cos);
            let b = double_raise.scale(-I * half_sin);
            let c = flip.scale_real(spec.epsilon.value() * half_sin);
            &(&a + &b) + &c
        }
    }
}

/// Residual of the braid relation `(R⊗I)(I⊗R)(R⊗I) = (I⊗R)(R⊗I)(I⊗R)`.
pub fn check_constant_ybe(r: &ComplexMatrix) -> Result<f64> {
    if (r.rows(), r.cols()) != (4, 4) {
        return Err(Error::Dimension("R must be 4x4".into()));
    }
    let a = embed_two_site(r, 1, 3);
    let b = embed_two_site(r, 2, 3);
    let lhs = &(&a * &b) * &a;
    let rhs = &(&b * &a) * &b;
    Ok(lhs.max_abs_diff(&rhs))
}

/// Spectral-parameter to angle map, `θ ∈ [0, π]`.
///
/// `R1`, `R2`: `cos θ = (1 - μ²)/(1 + μ²)`; `R3`: `cos θ = 1/cosh μ`.
pub fn theta_of_mu(family: RFamily, mu: f64) -> f64 {
    let cos_theta = match family {
        RFamily::R1 | RFamily::R2 => (1.0 - mu * mu) / (1.0 + mu * mu),
        RFamily::R3 => 1.0 / mu.cosh(),
    };
    cos_theta.clamp(-1.0, 1.0).acos()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralParams {
    pub mu: f64,
    pub nu: f64,
    /// `β²` of the rational composition rule.
    pub beta_squared: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompositionRule {
    /// `μ ∘ ν = μ + ν`
    Additive,
    /// `μ ∘ ν = (μ + ν)/(1 + β² μ ν)`
    Rational,
}

impl CompositionRule {
    pub fn compose(self, params: &SpectralParams) -> Result<f64> {
        match self {
            CompositionRule::Additive => Ok(params.mu + params.nu),
            CompositionRule::Rational => {
                let denominator = 1.0 + params.beta_squared * params.mu * params.nu;
                if denominator.abs() < 1e-12 {
                    return Err(Error::SingularComposition {
                        denominator: denominator.abs(),
                    });
                }
                Ok((params.mu + params.nu) / denominator)
            }
        }
    }
}

/// Residual of `R_i(μ) R_{i+1}(μ∘ν) R_i(ν) = R_{i+1}(ν) R_i(μ∘ν) R_{i+1}(μ)` on three sites.
pub fn check_spectral_ybe(
    family: RFamily,
    phi: f64,
    epsilon: Sign,
    params: &SpectralParams,
    rule: CompositionRule,
) -> Result<f64> {
    let middle = rule.compose(params)?;
    let r_at = |mu: f64| RMatrixSpec::new(family, theta_of_mu(family, mu), phi, epsilon).matrix();
    let left = |mu: f64| embed_two_site(&r_at(mu), 1, 3);
    let right = |mu: f64| embed_two_site(&r_at(mu), 2, 3);

    let lhs = &(&left(params.mu) * &right(middle)) * &left(params.nu);
    let rhs = &(&right(params.nu) * &left(middle)) * &right(params.mu);
    Ok(lhs.max_abs_diff(&rhs))
}

/// Best-fitting `β²` from a candidate set, with its worst-case residual over a `(μ, ν)` grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BetaScan {
    pub beta_squared: f64,
    pub residual: f64,
}

pub fn scan_beta_squared(
    family: RFamily,
    phi: f64,
    epsilon: Sign,
    grid: &[f64],
    candidates: &[f64],
) -> Result<Vec<BetaScan>> {
    let mut out = Vec::with_capacity(candidates.len());
    for &beta_squared in candidates {
        let mut residual = 0.0f64;
        for &mu in grid {
            for &nu in grid {
                let params = SpectralParams { mu, nu, beta_squared };
                residual = residual.max(check_spectral_ybe(
                    family,
                    phi,
                    epsilon,
                    &params,
                    CompositionRule::Rational,
                )?);
            }
        }
        out.push(BetaScan { beta_squared, residual });
    }
    Ok(out)
}

/// `R ≈ a I + b U` in the least-squares (Frobenius) sense.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Decomposition {
    pub a: C64,
    pub b: C64,
    pub residual: f64,
}

pub fn decompose_r(r: &ComplexMatrix, u: &ComplexMatrix) -> Result<Decomposition> {
    let id = ComplexMatrix::identity(r.rows());
    // Gram system for the basis {I, U}.
    let g11 = id.inner_product(&id);
    let g12 = id.inner_product(u);
    let g21 = u.inner_product(&id);
    let g22 = u.inner_product(u);
    let det = g11 * g22 - g12 * g21;
    if det.norm() <= 1e-12 * g11.norm() * g22.norm().max(f64::MIN_POSITIVE) {
        return Err(Error::DegenerateBasis);
    }
    let y1 = id.inner_product(r);
    let y2 = u.inner_product(r);
    let a = (g22 * y1 - g12 * y2) / det;
    let b = (g11 * y2 - g21 * y1) / det;
    let fit = &id.scale(a) + &u.scale(b);
    Ok(Decomposition {
        a,
        b,
        residual: r.max_abs_diff(&fit),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

    fn swap() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ])
    }

    #[test]
    fn u_matrices() {
        let u1 = TlaGenerator::new(TlaFamily::U1, 0.0, Sign::Plus).matrix();
        let expected = ComplexMatrix::from_real_rows(&[
            [1.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 1.0],
        ]);
        assert_eq!(u1, expected);
        assert_eq!(u1.trace(), C64::new(2.0, 0.0));

        let u3 = TlaGenerator::new(TlaFamily::U3, 0.0, Sign::Plus).matrix();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let expected = ComplexMatrix::from_rows(&[
            [ONE, ZERO, ZERO, ONE],
            [ZERO, ONE, I, ZERO],
            [ZERO, -I, ONE, ZERO],
            [ONE, ZERO, ZERO, ONE],
        ])
        .scale_real(s);
        assert!(u3.max_abs_diff(&expected) < 1e-16);
    }

    #[test]
    fn u_matrices_are_hermitian_exactly() {
        for family in TlaFamily::ALL {
            for eps in Sign::BOTH {
                for k in 0..16 {
                    let phi = 2.0 * PI * k as f64 / 16.0;
                    let u = TlaGenerator::new(family, phi, eps).matrix();
                    assert_eq!(u.hermiticity_defect(), 0.0, "{family:?} phi={phi}");
                }
            }
        }
    }

    #[test]
    fn tla_relations() {
        let r = check_tla(TlaFamily::U1, FRAC_PI_4, Sign::Plus, 3).unwrap();
        assert!(r.max() < 1e-12, "{r:?}");
        assert!(r.far_commutation.is_none());

        let r = check_tla(TlaFamily::U3, 1.0, Sign::Minus, 3).unwrap();
        assert!(r.max() < 1e-12, "{r:?}");
        assert_eq!(TlaFamily::U3.loop_value(), SQRT_2);

        let r = check_tla(TlaFamily::U1, 0.3, Sign::Plus, 4).unwrap();
        assert_eq!(r.far_commutation, Some(0.0));
        assert!(r.max() < 1e-12);

        assert!(check_tla(TlaFamily::U2, 0.0, Sign::Plus, 5).is_err());
    }

    #[test]
    fn r_special_values() {
        for phi in [0.0, 0.4, 2.0] {
            let r1 = RMatrixSpec::new(RFamily::R1, 0.0, phi, Sign::Plus).matrix();
            assert!(r1.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-16);
            let r2 = RMatrixSpec::new(RFamily::R2, 0.0, phi, Sign::Plus).matrix();
            assert!(r2.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-16);
            let r3 = RMatrixSpec::new(RFamily::R3, 0.0, phi, Sign::Minus).matrix();
            assert!(r3.max_abs_diff(&ComplexMatrix::identity(4).scale_real(-1.0)) < 1e-16);
        }
    }

    #[test]
    fn r1_block_at_quarter_turn() {
        // θ = π/2, φ = π/4: on span{|00>, |11>} the block is
        // cos(π/4) I - i sin(π/4) [[0, e^{iπ/4}], [e^{-iπ/4}, 0]].
        let r = RMatrixSpec::new(RFamily::R1, FRAC_PI_2, FRAC_PI_4, Sign::Plus).matrix();
        let (s, c) = FRAC_PI_4.sin_cos();
        let e = C64::from_polar(1.0, FRAC_PI_4);
        let expected = [[C64::new(c, 0.0), -I * s * e], [-I * s * e.conj(), C64::new(c, 0.0)]];
        let idx = [0, 3];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                assert!((r[(i, j)] - expected[a][b]).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn r_matrices_are_unitary() {
        for family in RFamily::ALL {
            for eps in Sign::BOTH {
                for i in 0..16 {
                    for j in 0..16 {
                        let theta = 2.0 * PI * i as f64 / 16.0;
                        let phi = 2.0 * PI * j as f64 / 16.0;
                        let r = RMatrixSpec::new(family, theta, phi, eps).matrix();
                        assert!(r.unitarity_defect() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn constant_ybe() {
        assert_eq!(check_constant_ybe(&ComplexMatrix::identity(4)).unwrap(), 0.0);
        assert_eq!(check_constant_ybe(&swap()).unwrap(), 0.0);
        let r = RMatrixSpec::new(RFamily::R1, FRAC_PI_2, 0.0, Sign::Plus).matrix();
        let residual = check_constant_ybe(&r).unwrap();
        assert!(residual.is_finite());
        assert!(check_constant_ybe(&ComplexMatrix::identity(2)).is_err());
    }

    #[test]
    fn theta_map() {
        assert_eq!(theta_of_mu(RFamily::R1, 0.0), 0.0);
        assert!((theta_of_mu(RFamily::R1, 1.0) - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(theta_of_mu(RFamily::R3, 0.0), 0.0);
        for family in [RFamily::R1, RFamily::R3] {
            let thetas: Vec<f64> = (0..200).map(|k| theta_of_mu(family, k as f64 * 0.05)).collect();
            assert!(thetas.windows(2).all(|w| w[1] >= w[0]), "{family:?}");
            assert!(thetas.iter().all(|t| (0.0..=PI).contains(t)));
        }
    }

    #[test]
    fn spectral_ybe() {
        let zero = SpectralParams {
            mu: 0.0,
            nu: 0.0,
            beta_squared: 1.0,
        };
        for family in RFamily::ALL {
            for rule in [CompositionRule::Additive, CompositionRule::Rational] {
                assert!(check_spectral_ybe(family, 0.3, Sign::Plus, &zero, rule).unwrap() < 1e-15);
            }
        }

        let grid = [0.3, 0.7, 1.1];
        for &mu in &grid {
            for &nu in &grid {
                let params = SpectralParams {
                    mu,
                    nu,
                    beta_squared: 0.0,
                };
                let res = check_spectral_ybe(RFamily::R3, 0.0, Sign::Plus, &params, CompositionRule::Additive).unwrap();
                assert!(res < 1e-10, "mu={mu} nu={nu} residual={res}");
            }
        }

        let scan = scan_beta_squared(RFamily::R1, 0.0, Sign::Plus, &grid, &[-1.0, 1.0]).unwrap();
        assert_eq!(scan.len(), 2);
        assert!(scan.iter().all(|s| s.residual.is_finite()));
    }

    #[test]
    fn singular_composition() {
        let params = SpectralParams {
            mu: 1.0,
            nu: 1.0,
            beta_squared: -1.0,
        };
        assert!(matches!(
            check_spectral_ybe(RFamily::R1, 0.0, Sign::Plus, &params, CompositionRule::Rational),
            Err(Error::SingularComposition { .. })
        ));
    }

    #[test]
    fn decomposition() {
        let u1 = TlaGenerator::new(TlaFamily::U1, 0.7, Sign::Plus).matrix();
        let d = decompose_r(&ComplexMatrix::identity(4), &u1).unwrap();
        assert!((d.a - ONE).norm() < 1e-15 && d.b.norm() < 1e-15 && d.residual < 1e-15);

        for theta in [0.3, FRAC_PI_2, 2.0] {
            let r1 = RMatrixSpec::new(RFamily::R1, theta, 0.7, Sign::Plus).matrix();
            assert!(decompose_r(&r1, &u1).unwrap().residual < 1e-12);
        }
        let r2 = RMatrixSpec::new(RFamily::R2, 1.0, 0.7, Sign::Plus).matrix();
        assert!(decompose_r(&r2, &u1).unwrap().residual > 0.1);

        let scalar = ComplexMatrix::identity(4).scale_real(3.0);
        assert_eq!(decompose_r(&r2, &scalar), Err(Error::DegenerateBasis));
    }

    #[test]
    fn every_family_lives_in_its_generator_span() {
        for family in RFamily::ALL {
            for eps in Sign::BOTH {
                let r = RMatrixSpec::new(family, 1.3, -0.4, eps).matrix();
                let u = TlaGenerator::new(family.generator(), -0.4, eps).matrix();
                assert!(decompose_r(&r, &u).unwrap().residual < 1e-12, "{family:?} {eps:?}");
            }
        }
    }
}
