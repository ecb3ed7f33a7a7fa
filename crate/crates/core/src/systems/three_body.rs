use crate::error::{Error, Result};
use crate::numerics::Real;

use super::rk8::Rk8;

/// Distance to a primary below which the field reports a collision.
pub const COLLISION_DISTANCE: f64 = 1e-8;

/// Rotating-frame state of the massless body.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeBodyState<R> {
    pub q1: R,
    pub q2: R,
    pub p1: R,
    pub p2: R,
}

impl<R: Real> ThreeBodyState<R> {
    pub fn new(q1: R, q2: R, p1: R, p2: R) -> Self {
        Self { q1, q2, p1, p2 }
    }

    fn to_array(self) -> [R; 4] {
        [self.q1, self.q2, self.p1, self.p2]
    }

    fn from_array(a: [R; 4]) -> Self {
        Self { q1: a[0], q2: a[1], p1: a[2], p2: a[3] }
    }
}

/// A crossing of `q2 = 0` with `dq2/dt > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectionPoint<R> {
    pub q1: R,
    pub p1: R,
    pub time: R,
    /// Full state at the crossing.
    pub state: ThreeBodyState<R>,
}

/// Planar circular restricted three-body problem with mass ratio `mu`.
/// The primaries sit at `(-mu, 0)` and `(1 - mu, 0)`.
#[derive(Debug, Clone)]
pub struct ThreeBody<R> {
    pub mu: R,
    rk: Rk8<R>,
}

impl<R: Real> ThreeBody<R> {
    pub fn new(mu: R) -> Self {
        Self { mu, rk: Rk8::new() }
    }

    fn distances(&self, q1: R, q2: R) -> (R, R) {
        let a = q1 + self.mu;
        let b = a - R::one();
        ((a * a + q2 * q2).sqrt(), (b * b + q2 * q2).sqrt())
    }

    fn check_collision(&self, d1: R, d2: R) -> Result<()> {
        let m = d1.min(d2);
        if !(m.to_f64() > COLLISION_DISTANCE) {
            return Err(Error::Collision { distance: m.to_f64(), time: f64::NAN });
        }
        Ok(())
    }

    /// Effective potential term `(1-μ)/d1 + μ/d2`.
    pub fn potential(&self, q1: R, q2: R) -> Result<R> {
        let (d1, d2) = self.distances(q1, q2);
        self.check_collision(d1, d2)?;
        Ok((R::one() - self.mu) / d1 + self.mu / d2)
    }

    /// `H = (p1² + p2²)/2 + q2 p1 − q1 p2 − (1−μ)/d1 − μ/d2`.
    pub fn hamiltonian(&self, s: &ThreeBodyState<R>) -> Result<R> {
        let u = self.potential(s.q1, s.q2)?;
        Ok((s.p1 * s.p1 + s.p2 * s.p2).mul_f64(0.5) + s.q2 * s.p1 - s.q1 * s.p2 - u)
    }

    /// Hamilton's equations.
    pub fn field(&self, s: &ThreeBodyState<R>) -> Result<ThreeBodyState<R>> {
        self.field_array(&s.to_array()).map(ThreeBodyState::from_array)
    }

    fn field_array(&self, s: &[R; 4]) -> Result<[R; 4]> {
        let [q1, q2, p1, p2] = *s;
        let (d1, d2) = self.distances(q1, q2);
        self.check_collision(d1, d2)?;
        let m1 = R::one() - self.mu;
        let k1 = m1 / (d1 * d1 * d1);
        let k2 = self.mu / (d2 * d2 * d2);
        let a = q1 + self.mu;
        let b = a - R::one();
        Ok([p1 + q2, p2 - q1, p2 - k1 * a - k2 * b, -p1 - (k1 + k2) * q2])
    }

    pub fn rk8_step(&self, s: &ThreeBodyState<R>, h: R) -> Result<ThreeBodyState<R>> {
        let out = self.rk.step(|y| self.field_array(y), &s.to_array(), h)?;
        Ok(ThreeBodyState::from_array(out))
    }

    /// State on the section `q2 = 0` with the given `(q1, p1)` and energy
    /// `h0`, on the branch `dq2/dt = p2 − q1 > 0`.
    pub fn section_seed(&self, q1: R, p1: R, h0: R) -> Result<ThreeBodyState<R>> {
        let u = self.potential(q1, R::zero())?;
        // p2² − 2 q1 p2 + p1² − 2U − 2H0 = 0
        let disc = q1 * q1 - p1 * p1 + (u + h0).mul_f64(2.0);
        if !(disc > R::zero()) {
            return Err(Error::InfeasibleSeed { discriminant: disc.to_f64() });
        }
        Ok(ThreeBodyState::new(q1, R::zero(), p1, q1 + disc.sqrt()))
    }

    /// Integrates on the fixed grid `t = k h` and returns the first `count`
    /// upward crossings of `q2 = 0`, each refined to `|q2| <= tol`.
    pub fn poincare_returns(
        &self,
        s0: &ThreeBodyState<R>,
        count: usize,
        h: R,
        tol: f64,
        max_time: f64,
    ) -> Result<Vec<SectionPoint<R>>> {
        if !(h > R::zero()) {
            return Err(Error::Domain("step size must be positive".into()));
        }
        let mut out = Vec::with_capacity(count);
        let mut s = *s0;
        let mut t = R::zero();
        let mut last_t = 0.0f64;
        while out.len() < count {
            let next = self.rk8_step(&s, h).map_err(|e| with_time(e, t))?;
            if s.q2 < R::zero() && next.q2 >= R::zero() {
                let (tau, state) = self.refine(&s, h, tol).map_err(|e| with_time(e, t))?;
                let time = t + tau;
                out.push(SectionPoint { q1: state.q1, p1: state.p1, time, state });
                last_t = time.to_f64();
            }
            s = next;
            t += h;
            if t.to_f64() - last_t > max_time {
                return Err(Error::SectionTimeout { max_time });
            }
        }
        Ok(out)
    }

    fn refine(&self, s: &ThreeBodyState<R>, h: R, tol: f64) -> Result<(R, ThreeBodyState<R>)> {
        let mut lo = R::zero();
        let mut hi = h;
        // bracket first so Newton starts well inside the basin
        for _ in 0..8 {
            let mid = (lo + hi).mul_f64(0.5);
            let q2 = self.rk8_step(s, mid)?.q2;
            if q2 < R::zero() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut tau = (lo + hi).mul_f64(0.5);
        for _ in 0..20 {
            let st = self.rk8_step(s, tau)?;
            if st.q2.abs().to_f64() <= tol && st.p2 > st.q1 {
                return Ok((tau, st));
            }
            let dq2 = st.p2 - st.q1;
            let mut next = tau - st.q2 / dq2;
            if !(next >= lo && next <= hi) {
                next = (lo + hi).mul_f64(0.5);
            }
            if st.q2 < R::zero() {
                lo = tau;
            } else {
                hi = tau;
            }
            tau = next;
        }
        let st = self.rk8_step(s, tau)?;
        if st.q2.abs().to_f64() <= tol {
            Ok((tau, st))
        } else {
            Err(Error::Domain(format!("section refinement stalled at |q2| = {:e}", st.q2.abs().to_f64())))
        }
    }
}

fn with_time(e: Error, t: impl Real) -> Error {
    match e {
        Error::Collision { distance, .. } => Error::Collision { distance, time: t.to_f64() },
        other => other,
    }
}

/// Section tolerance on `|q2|` for the precision of `R`.
pub fn section_tolerance<R: Real>() -> f64 {
    match R::PRECISION {
        crate::numerics::Precision::Fast => 1e-13,
        crate::numerics::Precision::High => 1e-25,
    }
}

pub fn three_body_field<R: Real>(s: &ThreeBodyState<R>, mu: R) -> Result<ThreeBodyState<R>> {
    ThreeBody::new(mu).field(s)
}

pub fn rk8_step<R: Real>(s: &ThreeBodyState<R>, h: R, mu: R) -> Result<ThreeBodyState<R>> {
    ThreeBody::new(mu).rk8_step(s, h)
}

pub fn section_seed<R: Real>(q1: R, p1: R, h0: R, mu: R) -> Result<ThreeBodyState<R>> {
    ThreeBody::new(mu).section_seed(q1, p1, h0)
}

pub fn poincare_returns<R: Real>(s0: &ThreeBodyState<R>, count: usize, h: R, mu: R) -> Result<Vec<SectionPoint<R>>> {
    ThreeBody::new(mu).poincare_returns(s0, count, h, section_tolerance::<R>(), 1000.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singularities_at_primaries() {
        let tb = ThreeBody::new(0.1);
        for q1 in [-0.1, 0.9] {
            let s = ThreeBodyState::new(q1, 0.0, 0.0, 0.0);
            assert!(matches!(tb.field(&s), Err(Error::Collision { .. })));
        }
    }

    #[test]
    fn tangent_to_section_when_p2_equals_q1() {
        let tb = ThreeBody::new(0.1);
        let f = tb.field(&ThreeBodyState::new(0.4, 0.0, 0.0, 0.4)).unwrap();
        assert_eq!(f.q2, 0.0);
    }

    #[test]
    fn seed_round_trip_and_branch() {
        let tb = ThreeBody::new(0.1);
        let s = tb.section_seed(-0.35, 0.1, -2.63).unwrap();
        assert!((tb.hamiltonian(&s).unwrap() + 2.63).abs() < 1e-13);
        assert!(s.p2 > s.q1);
        assert!(matches!(tb.section_seed(0.4, 2.0, -2.63), Err(Error::InfeasibleSeed { .. })));
    }

    #[test]
    fn hamiltonian_is_conserved_by_the_field() {
        let tb = ThreeBody::new(0.1);
        let s = ThreeBodyState::new(0.3, 0.2, -0.1, 0.6);
        let f = tb.field(&s).unwrap();
        // dH/dt = H_q1 q1' + H_q2 q2' + H_p1 p1' + H_p2 p2' computed by differences
        let eps = 1e-6;
        let h = |s: ThreeBodyState<f64>| tb.hamiltonian(&s).unwrap();
        let g = |d: [f64; 4]| {
            let p = ThreeBodyState::new(s.q1 + d[0], s.q2 + d[1], s.p1 + d[2], s.p2 + d[3]);
            let m = ThreeBodyState::new(s.q1 - d[0], s.q2 - d[1], s.p1 - d[2], s.p2 - d[3]);
            (h(p) - h(m)) / (2.0 * eps)
        };
        let dh = g([eps, 0.0, 0.0, 0.0]) * f.q1
            + g([0.0, eps, 0.0, 0.0]) * f.q2
            + g([0.0, 0.0, eps, 0.0]) * f.p1
            + g([0.0, 0.0, 0.0, eps]) * f.p2;
        assert!(dh.abs() < 1e-8, "{dh}");
    }
}
