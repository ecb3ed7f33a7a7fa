use std::sync::Arc;

use super::real::Real;
use super::sum::pairwise_sum;
use crate::error::{Error, Result};

/// The bump `w^[p](t) = exp(-[t(1-t)]^-p)` on `(0, 1)`, zero at the end points.
pub fn weight_value<R: Real>(t: R, p: u32) -> Result<R> {
    if p == 0 {
        return Err(Error::Domain("weight exponent p must be >= 1".into()));
    }
    if !(t >= R::zero() && t <= R::one()) {
        return Err(Error::Domain(format!("weight argument t = {} outside [0, 1]", t.to_f64())));
    }
    if t == R::zero() || t == R::one() {
        return Ok(R::zero());
    }
    let u = t * (R::one() - t);
    Ok(bump(u, p))
}

#[inline]
fn bump<R: Real>(u: R, p: u32) -> R {
    (-(u.powi(-(p as i32)))).exp()
}

/// Normalized weights `ŵ_{n,N} = w(n/N) / Σ_j w(j/N)` for one window length.
///
/// Cheap to clone; the weight vector is shared.
#[derive(Debug, Clone)]
pub struct WeightScheme<R> {
    p: u32,
    weights: Arc<Vec<R>>,
}

impl<R: Real> WeightScheme<R> {
    /// Builds the scheme for a window of `n` samples.
    ///
    /// `t(1-t)` is evaluated as the exact integer ratio `k(N-k) / N^2`, so the
    /// weights are exactly symmetric: `ŵ_k == ŵ_{N-k}` bit for bit.
    pub fn new(n: usize, p: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("weight window length N = {n} must be >= 2")));
        }
        if p == 0 {
            return Err(Error::Domain("weight exponent p must be >= 1".into()));
        }
        let nn = n as u128 * n as u128;
        let denom = ratio_denominator::<R>(nn);
        let mut raw = Vec::with_capacity(n);
        raw.push(R::zero());
        for k in 1..n {
            let num = k as u128 * (n - k) as u128;
            let u = exact_integer::<R>(num) / denom;
            raw.push(bump(u, p));
        }
        let total = pairwise_sum(&raw);
        if !(total > R::zero()) {
            return Err(Error::Domain(format!("all weights underflow for N = {n}, p = {p}")));
        }
        let weights = raw.into_iter().map(|w| w / total).collect();
        Ok(Self { p, weights: Arc::new(weights) })
    }

    /// Uniform weights `1/N` (the classical Birkhoff average) in scheme form.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Contract("uniform weights need N >= 1".into()));
        }
        let w = R::one() / R::from_usize(n);
        Ok(Self { p: 0, weights: Arc::new(vec![w; n]) })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[R] {
        &self.weights
    }
}

/// Convenience wrapper matching the kernel's operation name.
pub fn make_weights<R: Real>(n: usize, p: u32) -> Result<WeightScheme<R>> {
    WeightScheme::new(n, p)
}

fn exact_integer<R: Real>(v: u128) -> R {
    // split at 2^52 so each half converts exactly
    let hi = (v >> 52) as i64;
    let lo = (v & ((1u128 << 52) - 1)) as i64;
    if hi == 0 {
        R::from_i64(lo)
    } else {
        R::from_i64(hi) * R::from_f64(4_503_599_627_370_496.0) + R::from_i64(lo)
    }
}

fn ratio_denominator<R: Real>(nn: u128) -> R {
    exact_integer(nn)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::DoubleDouble;

    #[test]
    fn boundary_values() {
        assert_eq!(weight_value(0.0f64, 1).unwrap(), 0.0);
        assert_eq!(weight_value(1.0f64, 1).unwrap(), 0.0);
        assert_eq!(weight_value(0.5f64, 1).unwrap(), (-4.0f64).exp());
        let w = weight_value(DoubleDouble::from_f64(0.5), 2).unwrap();
        let want = DoubleDouble::from_f64(-16.0).exp();
        assert_eq!(w, want);
    }

    #[test]
    fn rejects_outside_unit_interval() {
        assert!(matches!(weight_value(1.5f64, 1), Err(Error::Domain(_))));
        assert!(matches!(weight_value(-0.1f64, 1), Err(Error::Domain(_))));
        assert!(matches!(weight_value(0.5f64, 0), Err(Error::Domain(_))));
        assert!(matches!(WeightScheme::<f64>::new(1, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn two_point_window_puts_all_mass_on_midpoint() {
        let s = WeightScheme::<f64>::new(2, 1).unwrap();
        assert_eq!(s.weights(), &[0.0, 1.0]);
    }

    #[test]
    fn four_point_window_is_symmetric() {
        let s = WeightScheme::<f64>::new(4, 1).unwrap();
        let w = s.weights();
        assert_eq!(w[0], 0.0);
        assert_eq!(w[1], w[3]);
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn peak_at_window_center() {
        let s = WeightScheme::<f64>::new(100, 1).unwrap();
        let (imax, _) =
            s.weights().iter().enumerate().fold((0, 0.0), |acc, (i, &w)| if w > acc.1 { (i, w) } else { acc });
        assert_eq!(imax, 50);
    }

    #[test]
    fn exact_integer_conversion() {
        let v: u128 = (1u128 << 80) + 12345;
        let x: DoubleDouble = exact_integer(v);
        assert_eq!(x, DoubleDouble::from_u128(v));
    }
}
