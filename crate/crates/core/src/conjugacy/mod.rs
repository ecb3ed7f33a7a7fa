//! Change of coordinates `h(θ) = (θ + g(θ), r(θ))` conjugating a
//! quasiperiodic invariant circle to the rotation `θ ↦ θ + ρ`, recovered as
//! Fourier series from weighted averages.

mod fit;
mod fourier;
mod model;

use crate::error::{Error, Result};
use crate::numerics::{pairwise_sum, Real};
use crate::rotation::{angle_about, winding_number};
use crate::trajectory::{Point, Trajectory};

pub use fit::{analyticity_fit, fit_magnitudes, AnalyticityFit, Parity};
pub use fourier::{basis_average, basis_averages, fourier_coefficient, fourier_coefficients};
pub use model::{build_model, evaluate_model, FourierModel};

/// Polar samples of a trajectory against the rotation `θ_n = frac(nρ)`.
#[derive(Debug, Clone)]
pub struct ConjugacySamples<R> {
    pub theta: Vec<R>,
    /// `g_n = φ_n − θ_n`, lifted continuously in `θ` with mean in `(−1/2, 1/2]`.
    pub g: Vec<R>,
    pub rad: Vec<R>,
    pub center: Point<R>,
    /// Rotation number actually used; `1 − ρ` when the curve runs clockwise.
    pub rho: R,
    /// Low-order part of the rotation number below the resolution of `R`.
    pub rho_tail: R,
}

impl<R: Real> ConjugacySamples<R> {
    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }
}

pub fn conjugacy_samples<R: Real>(traj: &Trajectory<R>, rho: R, center: Point<R>) -> Result<ConjugacySamples<R>> {
    conjugacy_samples_with_tail(traj, rho, R::zero(), center)
}

/// Same as [`conjugacy_samples`] with the rotation number given as an
/// unevaluated sum `rho + rho_tail`, for when `rho` is known to more
/// digits than `R` holds.
pub fn conjugacy_samples_with_tail<R: Real>(
    traj: &Trajectory<R>,
    rho: R,
    rho_tail: R,
    center: Point<R>,
) -> Result<ConjugacySamples<R>> {
    let w = winding_number(traj, center, rho).map_err(|e| match e {
        Error::InconsistentOrdering(_) => Error::InvalidCenter { winding: None },
        other => other,
    })?;
    let (rho, rho_tail) = match w {
        1 => (rho.fract(), rho_tail),
        -1 => ((R::one() - rho).fract(), -rho_tail),
        w => return Err(Error::InvalidCenter { winding: Some(w) }),
    };
    let angles = angle_about(traj, center)?;
    let n = traj.len();
    let theta: Vec<R> = (0..n as u64).map(|i| rotation_phase(i, rho, rho_tail)).collect();
    let d: Vec<R> = angles.phi.iter().zip(&theta).map(|(&p, &t)| (p - t).fract()).collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| theta[a].partial_cmp(&theta[b]).unwrap().then(a.cmp(&b)));
    // g_i = d_i + m_i with an integer lift m_i; a running sum of increments
    // would carry its rounding along θ
    let mut g = vec![R::zero(); n];
    let mut prev = d[order[0]];
    let mut lift = R::zero();
    g[order[0]] = prev;
    for &i in &order[1..] {
        lift -= (d[i] - prev + R::from_f64(0.5)).floor();
        prev = d[i];
        g[i] = d[i] + lift;
    }
    let closure = (lift - (d[order[0]] - prev + R::from_f64(0.5)).floor()).to_f64();
    if closure.abs() > 0.1 {
        return Err(Error::InconsistentOrdering(format!("angular part does not close up (gap {closure:.3})")));
    }
    let mean = pairwise_sum(&g) / R::from_usize(n);
    let shift = ceil(mean - R::from_f64(0.5));
    for v in &mut g {
        *v -= shift;
    }
    let rad = traj.points.iter().map(|p| (p - center).norm_sqr().sqrt()).collect();
    Ok(ConjugacySamples { theta, g, rad, center, rho, rho_tail })
}

/// `frac(n·(rho + tail))`.
pub fn rotation_phase<R: Real>(n: u64, rho: R, tail: R) -> R {
    let t = R::frac_mul(n, rho);
    if tail == R::zero() {
        t
    } else {
        (t + (R::from_usize(n as usize) * tail).fract()).fract()
    }
}

fn ceil<R: Real>(x: R) -> R {
    let f = x.floor();
    if f == x {
        f
    } else {
        f + R::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::golden;
    use crate::systems::CurveSpec;
    use num_complex::Complex;

    #[test]
    fn unit_circle_has_flat_profiles() {
        let rho = golden::<f64>();
        let t = CurveSpec::pure_circle(rho).trajectory(500);
        let s = conjugacy_samples(&t, rho, Complex::new(0.0, 0.0)).unwrap();
        for (&g, &r) in s.g.iter().zip(&s.rad) {
            assert!(g.abs() < 1e-12);
            assert!((r - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn clockwise_curve_flips_rho() {
        let rho = golden::<f64>();
        let mut t = CurveSpec::pure_circle(rho).trajectory(500);
        for p in &mut t.points {
            *p = p.conj();
        }
        let s = conjugacy_samples(&t, rho, Complex::new(0.0, 0.0)).unwrap();
        assert!((s.rho - (1.0 - rho)).abs() < 1e-15);
        assert!(s.g.iter().all(|g| g.abs() < 1e-12));
    }

    #[test]
    fn outside_center_is_rejected() {
        let rho = golden::<f64>();
        let t = CurveSpec::pure_circle(rho).trajectory(500);
        assert!(matches!(
            conjugacy_samples(&t, rho, Complex::new(3.0, 0.0)),
            Err(Error::InvalidCenter { winding: Some(0) })
        ));
    }

    #[test]
    fn offset_circle_gives_periodic_profiles() {
        let rho = golden::<f64>();
        let t = CurveSpec::pure_circle(rho).trajectory(2000);
        let s = conjugacy_samples(&t, rho, Complex::new(0.3, 0.1)).unwrap();
        let spread =
            |v: &[f64]| v.iter().cloned().fold(f64::MIN, f64::max) - v.iter().cloned().fold(f64::MAX, f64::min);
        assert!(spread(&s.g) > 0.01 && spread(&s.g) < 0.5);
        assert!(spread(&s.rad) > 0.1);
    }

    #[test]
    fn lift_differs_from_the_wrapped_offset_by_whole_turns() {
        let rho = golden::<f64>();
        let spec = CurveSpec::custom(vec![(1, Complex::new(1.0, 0.0)), (3, Complex::new(0.2, 0.1))], rho);
        let t = spec.trajectory(20_000);
        let s = conjugacy_samples(&t, rho, Complex::new(0.0, 0.0)).unwrap();
        let phi = angle_about(&t, Complex::new(0.0, 0.0)).unwrap().phi;
        for ((&g, &p), &th) in s.g.iter().zip(&phi).zip(&s.theta) {
            let m = g - (p - th).fract();
            assert!((m - m.round()).abs() <= 4.0 * f64::EPSILON, "{m}");
        }
    }
}
