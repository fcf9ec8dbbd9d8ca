use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;

use crate::algebra::Sign;
use crate::dynamics::analytic::{
    analytic_h1_werner, analytic_h1_xlike, analytic_h2_werner, analytic_h2_xlike, AnalyticMeasures,
};
use crate::dynamics::evolve_with;
use crate::error::{Error, Result};
use crate::hamiltonian::{build_h, Model, ModelParams};
use crate::linalg::herm_eig;
use crate::measures::{measure_all, MeasureSet};
use crate::states::InputState;

/// A `(p, scaled time)` grid for one model and input state.
///
/// The time axis is `Bt` for H1 and H3, `Jt` for H2.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub model: Model,
    pub state: InputState,
    pub p_grid: Vec<f64>,
    pub time_grid: Vec<f64>,
    pub phi: f64,
    pub theta: f64,
    pub b: f64,
    pub j: f64,
    pub g: f64,
    pub epsilon: Sign,
}

impl SweepSpec {
    /// Defaults: `B = J = 1`, `g = 0.5`, `θ = π/2`, `φ = π/4`, 101 `p` values
    /// on `[0, 1]` and 201 scaled times on `[0, π]`.
    pub fn new(model: Model, state: InputState) -> Self {
        Self {
            model,
            state,
            p_grid: linspace(0.0, 1.0, 101),
            time_grid: linspace(0.0, std::f64::consts::PI, 201),
            phi: std::f64::consts::FRAC_PI_4,
            theta: FRAC_PI_2,
            b: 1.0,
            j: 1.0,
            g: 0.5,
            epsilon: Sign::Plus,
        }
    }

    pub fn params(&self) -> ModelParams {
        ModelParams {
            b: self.b,
            j: self.j,
            g: self.g,
            theta: self.theta,
            phi: self.phi,
            epsilon: self.epsilon,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, grid) in [("p grid", &self.p_grid), ("time grid", &self.time_grid)] {
            if grid.is_empty() {
                return Err(Error::InvalidSweep(format!("{name} is empty")));
            }
            if grid.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidSweep(format!("{name} has a non-finite value")));
            }
            if grid.windows(2).any(|w| w[1] <= w[0]) {
                return Err(Error::InvalidSweep(format!("{name} is not strictly increasing")));
            }
        }
        if let Some(p) = self.p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(Error::InvalidSweep(format!("p = {p} is outside [0, 1]")));
        }
        for (name, v) in [
            ("phi", self.phi),
            ("theta", self.theta),
            ("B", self.b),
            ("J", self.j),
            ("g", self.g),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidSweep(format!("{name} is not finite")));
            }
        }
        Ok(())
    }

    /// Converts a scaled time to a physical time.
    pub fn physical_time(&self, scaled: f64) -> Result<f64> {
        let (scale, name) = match self.model {
            Model::H1 | Model::H3 => (self.b, "B"),
            Model::H2 => (self.j, "J"),
        };
        if scaled == 0.0 {
            return Ok(0.0);
        }
        if scale == 0.0 {
            return Err(Error::ZeroScale {
                model: self.model.name(),
                scale: name,
            });
        }
        Ok(scaled / scale)
    }

    /// Whether a closed form exists for this model, state and angle.
    pub fn has_oracle(&self) -> bool {
        self.model != Model::H3 && (self.theta - FRAC_PI_2).abs() < 1e-12
    }

    pub fn oracle(&self, p: f64, scaled_time: f64) -> Result<Option<AnalyticMeasures>> {
        if !self.has_oracle() {
            return Ok(None);
        }
        let m = match (self.model, self.state) {
            (Model::H1, InputState::Werner) => analytic_h1_werner(p, self.phi, scaled_time)?,
            (Model::H1, InputState::Xlike) => analytic_h1_xlike(p, self.phi, scaled_time)?,
            (Model::H2, InputState::Werner) => analytic_h2_werner(p)?,
            (Model::H2, InputState::Xlike) => analytic_h2_xlike(p, self.phi, scaled_time)?,
            (Model::H3, _) => return Ok(None),
        };
        Ok(Some(m))
    }
}

/// `count` evenly spaced values from `min` to `max` inclusive.
pub fn linspace(min: f64, max: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![min],
        _ => {
            let step = (max - min) / (count - 1) as f64;
            (0..count)
                .map(|k| if k == count - 1 { max } else { min + step * k as f64 })
                .collect()
        }
    }
}

/// One grid point of a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub model: Model,
    pub state: InputState,
    pub p: f64,
    pub theta: f64,
    pub phi: f64,
    pub b: f64,
    pub j: f64,
    pub g: f64,
    pub scaled_time: f64,
    pub numeric: MeasureSet,
    pub analytic: Option<AnalyticMeasures>,
    /// Largest `|numeric - analytic|` over the four measures with a closed form.
    pub discrepancy: Option<f64>,
}

fn discrepancies(numeric: &MeasureSet, analytic: &AnalyticMeasures) -> [f64; 4] {
    [
        (numeric.concurrence - analytic.concurrence).abs(),
        (numeric.eof - analytic.eof).abs(),
        (numeric.c_l1 - analytic.c_l1).abs(),
        (numeric.mid - analytic.mid).abs(),
    ]
}

/// Evolves and measures every grid point, `p`-major then time ascending.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let times = spec
        .time_grid
        .iter()
        .map(|&tau| spec.physical_time(tau))
        .collect::<Result<Vec<f64>>>()?;
    let spectrum = herm_eig(&build_h(spec.model, &spec.params()))?;
    let states = spec
        .p_grid
        .iter()
        .map(|&p| spec.state.build(p))
        .collect::<Result<Vec<_>>>()?;

    let nt = times.len();
    (0..spec.p_grid.len() * nt)
        .into_par_iter()
        .map(|idx| {
            let (pi, ti) = (idx / nt, idx % nt);
            let (p, tau) = (spec.p_grid[pi], spec.time_grid[ti]);
            let sigma = evolve_with(&states[pi], &spectrum, times[ti])?;
            let numeric = measure_all(&sigma)?;
            let analytic = spec.oracle(p, tau)?;
            let discrepancy = analytic
                .as_ref()
                .map(|a| discrepancies(&numeric, a).into_iter().fold(0.0, f64::max));
            Ok(SweepRow {
                model: spec.model,
                state: spec.state,
                p,
                theta: spec.theta,
                phi: spec.phi,
                b: spec.b,
                j: spec.j,
                g: spec.g,
                scaled_time: tau,
                numeric,
                analytic,
                discrepancy,
            })
        })
        .collect()
}

/// Worst absolute difference for one measure and where it happened.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureDiscrepancy {
    pub measure: &'static str,
    pub max: f64,
    pub worst_p: f64,
    pub worst_time: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub title: String,
    pub rows: usize,
    pub measures: Vec<MeasureDiscrepancy>,
}

impl ComparisonReport {
    fn new(title: String, names: &[&'static str]) -> Self {
        Self {
            title,
            rows: 0,
            measures: names
                .iter()
                .map(|&measure| MeasureDiscrepancy {
                    measure,
                    max: 0.0,
                    worst_p: f64::NAN,
                    worst_time: f64::NAN,
                })
                .collect(),
        }
    }

    fn record(&mut self, diffs: &[f64], p: f64, time: f64) {
        self.rows += 1;
        for (slot, &d) in self.measures.iter_mut().zip(diffs) {
            if d > slot.max || slot.worst_p.is_nan() {
                slot.max = slot.max.max(d);
                slot.worst_p = p;
                slot.worst_time = time;
            }
        }
    }

    pub fn max_discrepancy(&self) -> f64 {
        self.measures.iter().map(|m| m.max).fold(0.0, f64::max)
    }

    pub fn get(&self, measure: &str) -> Option<&MeasureDiscrepancy> {
        self.measures.iter().find(|m| m.measure == measure)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.measures.iter().all(|m| m.max < tol)
    }
}

const ORACLE_MEASURES: [&str; 4] = ["concurrence", "eof", "c_l1", "mid"];
const ALL_MEASURES: [&str; 5] = ["concurrence", "eof", "c_l1", "c_r", "mid"];

fn as_array(m: &MeasureSet) -> [f64; 5] {
    [m.concurrence, m.eof, m.c_l1, m.c_r, m.mid]
}

/// Numeric-versus-closed-form discrepancies over a sweep.
pub fn compare_analytic_numeric(spec: &SweepSpec) -> Result<ComparisonReport> {
    if !spec.has_oracle() {
        return Err(Error::NoOracle {
            model: spec.model.name(),
            state: spec.state.name(),
            detail: if spec.model == Model::H3 {
                " (compare h3 against h1 instead)"
            } else {
                " (closed forms exist only at theta = pi/2)"
            },
        });
    }
    let rows = run_sweep(spec)?;
    let mut report = ComparisonReport::new(
        format!("{} on {}: numeric vs closed form", spec.model, spec.state),
        &ORACLE_MEASURES,
    );
    for row in &rows {
        let analytic = row.analytic.expect("oracle exists for this spec");
        report.record(&discrepancies(&row.numeric, &analytic), row.p, row.scaled_time);
    }
    Ok(report)
}

/// Largest change of each numeric measure from its value at the first time.
pub fn time_constancy(spec: &SweepSpec) -> Result<ComparisonReport> {
    let rows = run_sweep(spec)?;
    let nt = spec.time_grid.len();
    let mut report = ComparisonReport::new(
        format!("{} on {}: variation in time", spec.model, spec.state),
        &ALL_MEASURES,
    );
    for chunk in rows.chunks(nt) {
        let first = as_array(&chunk[0].numeric);
        for row in chunk {
            let diffs: Vec<f64> = as_array(&row.numeric)
                .iter()
                .zip(&first)
                .map(|(a, b)| (a - b).abs())
                .collect();
            report.record(&diffs, row.p, row.scaled_time);
        }
    }
    Ok(report)
}

/// Row-by-row difference of the numeric measures of two sweeps over the same grid.
pub fn compare_models(a: &SweepSpec, b: &SweepSpec) -> Result<ComparisonReport> {
    if a.p_grid != b.p_grid || a.time_grid != b.time_grid {
        return Err(Error::InvalidSweep("model comparison needs identical grids".into()));
    }
    let (ra, rb) = (run_sweep(a)?, run_sweep(b)?);
    let mut report = ComparisonReport::new(
        format!("{} vs {} on {}: numeric measures", a.model, b.model, a.state),
        &ALL_MEASURES,
    );
    for (x, y) in ra.iter().zip(&rb) {
        let diffs: Vec<f64> = as_array(&x.numeric)
            .iter()
            .zip(&as_array(&y.numeric))
            .map(|(u, v)| (u - v).abs())
            .collect();
        report.record(&diffs, x.p, x.scaled_time);
    }
    Ok(report)
}
