use crate::error::{Error, Result};
use crate::numerics::Real;

use super::model::FourierModel;

/// Smallest number of coefficients a decay fit accepts.
pub const MIN_FIT_POINTS: usize = 20;

/// R² required for an exponential-decay verdict.
pub const MIN_R_SQUARED: f64 = 0.9;

/// A coefficient enters the fit only above this multiple of the noise
/// floor; the floor is a median, so half of the noise sits above it.
pub const FIT_FLOOR_MARGIN: f64 = 10.0;

/// The decay region ends once this many admitted coefficients in a row sit
/// at or below the floor; isolated noise spikes past it stay out of the fit.
pub const FLOOR_RUN: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    All,
    Even,
    Odd,
}

impl Parity {
    fn admits(self, k: usize) -> bool {
        match self {
            Parity::All => true,
            Parity::Even => k.is_multiple_of(2),
            Parity::Odd => k % 2 == 1,
        }
    }
}

/// Least-squares line `log10|a_k| ≈ intercept − beta·k`.
#[derive(Debug, Clone, Copy)]
pub struct AnalyticityFit {
    pub beta: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub points: usize,
}

impl AnalyticityFit {
    /// Exponential decay at working precision: `beta > 0` and `R² >= 0.9`.
    pub fn real_analytic(&self) -> bool {
        self.beta > 0.0 && self.r_squared >= MIN_R_SQUARED
    }
}

/// Fits the decay of `|a_k|`, `k >= 1`, over the coefficients of the given
/// parity that clear the noise floor by [`FIT_FLOOR_MARGIN`].
pub fn analyticity_fit<R: Real>(model: &FourierModel<R>, parity: Parity) -> Result<AnalyticityFit> {
    fit_magnitudes(&model.a_magnitudes(), FIT_FLOOR_MARGIN * model.noise_floor, parity)
}

/// Same fit on raw magnitudes `mags[k] = |a_k|`, `k = 0..`, keeping those
/// strictly above `floor` up to the end of the decay region.
pub fn fit_magnitudes(mags: &[f64], floor: f64, parity: Parity) -> Result<AnalyticityFit> {
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let mut run = 0;
    for (k, &m) in mags.iter().enumerate().skip(1).filter(|&(k, _)| parity.admits(k)) {
        if m > floor && m > 0.0 {
            pts.push((k as f64, m.log10()));
            run = 0;
        } else {
            run += 1;
            if run >= FLOOR_RUN {
                break;
            }
        }
    }
    if pts.len() < MIN_FIT_POINTS {
        return Err(Error::InsufficientData(format!(
            "{} coefficients above the noise floor {floor:e}, need {MIN_FIT_POINTS}",
            pts.len()
        )));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let r_squared = if syy > 0.0 { sxy * sxy / (sxx * syy) } else { 1.0 };
    Ok(AnalyticityFit { beta: -slope, intercept: my - slope * mx, r_squared, points: pts.len() })
}
