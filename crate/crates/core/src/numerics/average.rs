use num_complex::Complex;

use super::real::Real;
use super::sum::Accumulator;
use super::weights::WeightScheme;
use crate::error::{Error, Result};

fn check_len<R: Real>(len: usize, scheme: &WeightScheme<R>) -> Result<()> {
    if len != scheme.len() {
        return Err(Error::Contract(format!(
            "weighted average over {len} values with a scheme of length {}",
            scheme.len()
        )));
    }
    Ok(())
}

/// `WB_N(f) = Σ ŵ_{n,N} f(x_n)`.
pub fn weighted_birkhoff<R: Real>(values: &[R], scheme: &WeightScheme<R>) -> Result<R> {
    check_len(values.len(), scheme)?;
    let mut acc = Accumulator::new();
    for (&w, &v) in scheme.weights().iter().zip(values) {
        acc.push(w * v);
    }
    Ok(acc.total())
}

/// Componentwise complex version of [`weighted_birkhoff`].
pub fn weighted_birkhoff_complex<R: Real>(values: &[Complex<R>], scheme: &WeightScheme<R>) -> Result<Complex<R>> {
    check_len(values.len(), scheme)?;
    let mut re = Accumulator::new();
    let mut im = Accumulator::new();
    for (&w, v) in scheme.weights().iter().zip(values) {
        re.push(w * v.re);
        im.push(w * v.im);
    }
    Ok(Complex::new(re.total(), im.total()))
}

/// The classical Birkhoff average `B_N(f) = (1/N) Σ f(x_n)`.
pub fn uniform_average<R: Real>(values: &[R]) -> Result<R> {
    if values.is_empty() {
        return Err(Error::Contract("uniform average of an empty sequence".into()));
    }
    let mut acc = Accumulator::new();
    for &v in values {
        acc.push(v);
    }
    Ok(acc.total() / R::from_usize(values.len()))
}

/// Streaming form of [`weighted_birkhoff`] for orbits that are too long to
/// store. Produces bit-identical results to the slice form.
#[derive(Debug, Clone)]
pub struct WeightedAverager<'a, R> {
    weights: &'a [R],
    next: usize,
    acc: Accumulator<R>,
}

impl<'a, R: Real> WeightedAverager<'a, R> {
    pub fn new(scheme: &'a WeightScheme<R>) -> Self {
        Self { weights: scheme.weights(), next: 0, acc: Accumulator::new() }
    }

    /// Adds the next sample. Panics if more samples than the window length
    /// are pushed.
    #[inline]
    pub fn push(&mut self, value: R) {
        let w = self.weights[self.next];
        self.next += 1;
        self.acc.push(w * value);
    }

    pub fn is_full(&self) -> bool {
        self.next == self.weights.len()
    }

    pub fn finish(self) -> Result<R> {
        if !self.is_full() {
            return Err(Error::Contract(format!(
                "streaming average received {} of {} samples",
                self.next,
                self.weights.len()
            )));
        }
        Ok(self.acc.total())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{golden, make_weights, DoubleDouble};

    #[test]
    fn constant_sequence_averages_to_itself() {
        let s = make_weights::<f64>(1000, 1).unwrap();
        let v = vec![3.25; 1000];
        assert!((weighted_birkhoff(&v, &s).unwrap() - 3.25).abs() < 1e-14);
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(uniform_average(&[1.0, 1.0, 1.0]).unwrap(), 1.0);
        assert_eq!(uniform_average(&[0.0, 1.0]).unwrap(), 0.5);
        assert!(matches!(uniform_average::<f64>(&[]), Err(Error::Contract(_))));
    }

    #[test]
    fn length_mismatch_is_contract_error() {
        let s = make_weights::<f64>(10, 1).unwrap();
        assert!(matches!(weighted_birkhoff(&[1.0; 9], &s), Err(Error::Contract(_))));
    }

    #[test]
    fn streaming_matches_slice_bitwise() {
        let n = 5000;
        let s = make_weights::<DoubleDouble>(n, 1).unwrap();
        let rho = golden::<DoubleDouble>();
        let v: Vec<DoubleDouble> = (0..n as u64)
            .map(|k| (DoubleDouble::frac_mul(k, rho) * crate::numerics::double_double::TWO_PI).sin())
            .collect();
        let mut avg = WeightedAverager::new(&s);
        for &x in &v {
            avg.push(x);
        }
        assert_eq!(avg.finish().unwrap(), weighted_birkhoff(&v, &s).unwrap());
    }

    #[test]
    fn complex_average_is_componentwise() {
        let s = make_weights::<f64>(64, 2).unwrap();
        let v: Vec<Complex<f64>> = (0..64).map(|k| Complex::new(k as f64, -(k as f64) * 2.0)).collect();
        let re: Vec<f64> = v.iter().map(|c| c.re).collect();
        let im: Vec<f64> = v.iter().map(|c| c.im).collect();
        let c = weighted_birkhoff_complex(&v, &s).unwrap();
        assert_eq!(c.re, weighted_birkhoff(&re, &s).unwrap());
        assert_eq!(c.im, weighted_birkhoff(&im, &s).unwrap());
    }
}
