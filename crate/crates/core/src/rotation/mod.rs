//! Rotation numbers of planar quasiperiodic curves from trajectory data:
//! angles about a base point, delay embedding, lift by continuation,
//! weighted averaging and winding-number validation.

mod embedding;
mod lift;

use crate::error::{Error, Result};
use crate::numerics::{make_weights, uniform_average, weighted_birkhoff, Real, WeightScheme};
use crate::trajectory::{Point, Trajectory};

pub use embedding::{delay_embed, DelayEmbedding, MAX_DELAY};
pub use lift::{continue_lift, LiftedAngleSeries, RESIDUAL_CAP};

/// Distance to the base point below which a point counts as coincident,
/// relative to the size of the trajectory.
const DEGENERATE_RELATIVE: f64 = 1e-15;

/// Winding sums must be this close to an integer.
const WINDING_SLACK: f64 = 0.1;

/// Largest angle step between neighbours in curve order before the
/// ordering is considered wrong.
const MAX_ORDER_STEP: f64 = 0.125;

/// Largest `|W|` tried when explaining a failed validation.
const MAX_WINDING_SEARCH: i64 = 12;

/// Angles `φ_n ∈ [0, 1)` of `γ_n − P`.
#[derive(Debug, Clone)]
pub struct AngleSeries<R> {
    pub phi: Vec<R>,
    pub base: Point<R>,
}

pub fn angle_about<R: Real>(traj: &Trajectory<R>, p: Point<R>) -> Result<AngleSeries<R>> {
    let scale = traj.points.iter().map(|q| (q - p).norm_sqr().to_f64()).fold(1.0f64, f64::max).sqrt();
    let mut phi = Vec::with_capacity(traj.len());
    for (i, q) in traj.points.iter().enumerate() {
        let d = q - p;
        if d.norm_sqr().to_f64().sqrt() <= DEGENERATE_RELATIVE * scale {
            return Err(Error::DegenerateBasePoint { index: i });
        }
        phi.push(turns(d.im.atan2(d.re)));
    }
    Ok(AngleSeries { phi, base: p })
}

/// Angle in radians to a fraction of a turn in `[0, 1)`.
pub(crate) fn turns<R: Real>(a: R) -> R {
    (a / R::two_pi()).fract()
}

/// `Δ_n = (φ_{n+1} − φ_n) mod 1`.
pub fn raw_increments<R: Real>(a: &AngleSeries<R>) -> Vec<R> {
    a.phi.windows(2).map(|w| (w[1] - w[0]).fract()).collect()
}

#[derive(Debug, Clone)]
pub struct RotationReport<R> {
    /// `frac(WB_N(Δ̄*))`; the data cannot distinguish it from `1 − rho`.
    pub rho: R,
    /// `WB_N(Δ̄*)` before reduction mod 1.
    pub rho_raw: R,
    pub winding: i64,
    pub delay: usize,
    pub n: usize,
    pub p: u32,
    pub max_residual: f64,
    /// `|ρ_N − ρ_{N/2}|` measured on the circle.
    pub fluctuation: f64,
}

/// Rotation number of the curve sampled by `traj`, seen from the base point
/// `p`, with delay `k` and the weights of `scheme` (whose length is `N`).
///
/// Needs `N + K − 1` trajectory points.
pub fn rotation_number<R: Real>(
    traj: &Trajectory<R>,
    p: Point<R>,
    k: usize,
    scheme: &WeightScheme<R>,
) -> Result<RotationReport<R>> {
    let n = scheme.len();
    if traj.len() < n + k - 1 {
        return Err(Error::Contract(format!(
            "N = {n} with K = {k} needs {} trajectory points, got {}",
            n + k - 1,
            traj.len()
        )));
    }
    let traj = traj.truncated(n + k - 1);
    let angles = angle_about(&traj, p)?;
    let emb = delay_embed(&traj, k)?;
    let mut deltas = raw_increments(&angles);
    deltas.truncate(emb.len());
    let lifted = continue_lift(&deltas, &emb)?;
    let rho_raw = weighted_birkhoff(&lifted.delta_star[..n], scheme)?;
    let rho = rho_raw.fract();

    let winding = validate_base_point(&traj, p, rho_raw)?;

    let half = n / 2;
    let fluctuation = if half >= 2 {
        let s2 = if scheme.p() == 0 { WeightScheme::uniform(half)? } else { make_weights(half, scheme.p())? };
        let r2 = weighted_birkhoff(&lifted.delta_star[..half], &s2)?.fract();
        circle_distance(rho, r2)
    } else {
        f64::NAN
    };

    Ok(RotationReport {
        rho,
        rho_raw,
        winding,
        delay: k,
        n,
        p: scheme.p(),
        max_residual: lifted.max_residual,
        fluctuation,
    })
}

/// `|a − b|` on the circle `R/Z`.
pub fn circle_distance<R: Real>(a: R, b: R) -> f64 {
    let d = (a - b).fract();
    d.min(R::one() - d).to_f64()
}

fn validate_base_point<R: Real>(traj: &Trajectory<R>, p: Point<R>, rho_raw: R) -> Result<i64> {
    let f = rho_raw.fract();
    if circle_distance(f, R::zero()) < 1e-8 {
        return Err(Error::InvalidBasePoint { winding: Some(0) });
    }
    if let Ok(w) = winding_number(traj, p, f) {
        if w.abs() == 1 {
            return Ok(w);
        }
    }
    // the lifted mean is W·ρ mod 1; recover W from the candidate that
    // orders the points consistently
    for w in 2..=MAX_WINDING_SEARCH {
        for j in 0..w {
            let cand = (f + R::from_i64(j)) / R::from_i64(w);
            if let Ok(found) = winding_number(traj, p, cand) {
                if found.abs() == w {
                    return Err(Error::InvalidBasePoint { winding: Some(found) });
                }
            }
        }
    }
    Err(Error::InvalidBasePoint { winding: None })
}

/// Winding number of the curve about `p`, counterclockwise positive.
///
/// Points are put in curve order by sorting on `frac(n·rho_est)`; the
/// branch-nearest angle steps around that polygon must add up to an
/// integer.
pub fn winding_number<R: Real>(traj: &Trajectory<R>, p: Point<R>, rho_est: R) -> Result<i64> {
    if traj.len() < 3 {
        return Err(Error::InsufficientData("winding number needs at least 3 points".into()));
    }
    let angles = angle_about(traj, p)?;
    let rho = rho_est.to_f64();
    let mut order: Vec<(f64, usize)> = (0..traj.len()).map(|n| (f64::frac_mul(n as u64, rho), n)).collect();
    order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let phi: Vec<f64> = order.iter().map(|&(_, n)| angles.phi[n].to_f64()).collect();
    let mut total = 0.0;
    let mut max_step = 0.0f64;
    for i in 0..phi.len() {
        let step = wrap_half(phi[(i + 1) % phi.len()] - phi[i]);
        max_step = max_step.max(step.abs());
        total += step;
    }
    let w = total.round();
    if (total - w).abs() > WINDING_SLACK || max_step >= MAX_ORDER_STEP {
        return Err(Error::InconsistentOrdering(format!(
            "angle sum {total:.3} with largest step {max_step:.3} does not close up"
        )));
    }
    Ok(w as i64)
}

/// Maps `x` into `[-0.5, 0.5)`.
pub(crate) fn wrap_half(x: f64) -> f64 {
    x - (x + 0.5).floor()
}

/// Classical estimate of `ρ` from the lifted increments.
pub fn coarse_rho<R: Real>(lifted: &LiftedAngleSeries<R>) -> Result<R> {
    Ok(uniform_average(&lifted.delta_star)?.fract())
}
