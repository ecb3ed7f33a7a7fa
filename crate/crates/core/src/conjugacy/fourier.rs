use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::{Accumulator, Real, WeightScheme};

/// Wavenumbers handled per pass; powers `e^{-i2πkθ}` are reseeded from
/// `sin_cos` at the start of every block.
const BLOCK: usize = 64;

/// `e^{-i2πkθ}` evaluated directly.
fn seed<R: Real>(k: usize, theta: R) -> Complex<R> {
    let t = (theta * R::from_usize(k)).fract();
    let (s, c) = (t * R::two_pi()).sin_cos();
    Complex::new(c, -s)
}

/// Weighted averages `WB_N(v · e^{-i2πkθ})` for `k = 0..=kmax` and every
/// series in `series`, over the first `N = scheme.len()` samples.
///
/// Returns one vector of `kmax + 1` coefficients per series. Work is split
/// over blocks of wavenumbers; the result does not depend on the thread
/// count.
pub fn fourier_coefficients<R: Real>(
    series: &[&[R]],
    theta: &[R],
    kmax: usize,
    scheme: &WeightScheme<R>,
) -> Result<Vec<Vec<Complex<R>>>> {
    let n = scheme.len();
    if theta.len() < n || series.iter().any(|s| s.len() < n) {
        return Err(Error::Contract(format!("{n} weights but fewer samples")));
    }
    let w = scheme.weights();
    let base: Vec<Complex<R>> = theta[..n].par_iter().map(|&t| seed(1, t)).collect();
    let blocks: Vec<usize> = (0..=kmax).step_by(BLOCK).collect();
    let parts: Vec<Vec<Vec<Complex<R>>>> = blocks
        .par_iter()
        .map(|&k0| {
            let k1 = (k0 + BLOCK).min(kmax + 1);
            let width = k1 - k0;
            let mut acc: Vec<Vec<(Accumulator<R>, Accumulator<R>)>> =
                series.iter().map(|_| vec![(Accumulator::new(), Accumulator::new()); width]).collect();
            let mut wv = vec![R::zero(); series.len()];
            for i in 0..n {
                if w[i] == R::zero() {
                    continue;
                }
                for (s, v) in series.iter().zip(wv.iter_mut()) {
                    *v = w[i] * s[i];
                }
                let e = base[i];
                let mut z = if k0 == 0 { Complex::new(R::one(), R::zero()) } else { seed(k0, theta[i]) };
                for j in 0..width {
                    for (a, &v) in acc.iter_mut().zip(&wv) {
                        a[j].0.push(v * z.re);
                        a[j].1.push(v * z.im);
                    }
                    z = z * e;
                }
            }
            acc.into_iter()
                .map(|row| row.into_iter().map(|(re, im)| Complex::new(re.total(), im.total())).collect())
                .collect()
        })
        .collect();
    let mut out: Vec<Vec<Complex<R>>> = vec![Vec::with_capacity(kmax + 1); series.len()];
    for part in parts {
        for (o, p) in out.iter_mut().zip(part) {
            o.extend(p);
        }
    }
    Ok(out)
}

/// Single coefficient `WB_N(v · e^{-i2πkθ})` for any integer `k`.
pub fn fourier_coefficient<R: Real>(values: &[R], theta: &[R], k: i64, scheme: &WeightScheme<R>) -> Result<Complex<R>> {
    let n = scheme.len();
    if theta.len() < n || values.len() < n {
        return Err(Error::Contract(format!("{n} weights but fewer samples")));
    }
    if k.unsigned_abs() as usize > n / 2 {
        return Err(Error::Contract(format!("|k| = {} exceeds N/2 = {}", k.abs(), n / 2)));
    }
    let w = scheme.weights();
    let mut re = Accumulator::new();
    let mut im = Accumulator::new();
    for i in 0..n {
        let z = seed(k.unsigned_abs() as usize, theta[i]);
        let z = if k < 0 { z.conj() } else { z };
        let v = w[i] * values[i];
        re.push(v * z.re);
        im.push(v * z.im);
    }
    Ok(Complex::new(re.total(), im.total()))
}

/// `WB_N(σ_j)` along `θ_n = frac(nρ)`, the error kernel of the coefficient
/// estimator.
pub fn basis_average<R: Real>(j: i64, rho: R, scheme: &WeightScheme<R>) -> Result<Complex<R>> {
    if j == 0 {
        return Err(Error::Contract("σ_0 ≡ 1; its average is 1".into()));
    }
    let n = scheme.len();
    let theta: Vec<R> = (0..n as u64).map(|i| R::frac_mul(i, rho)).collect();
    let ones = vec![R::one(); n];
    // σ_j = e^{+i2πjθ}
    fourier_coefficient(&ones, &theta, -j, scheme)
}

/// `WB_N(σ_j)` for `j = 1..=jmax`; negative `j` are the conjugates.
pub fn basis_averages<R: Real>(jmax: usize, rho: R, scheme: &WeightScheme<R>) -> Result<Vec<Complex<R>>> {
    let n = scheme.len();
    let theta: Vec<R> = (0..n as u64).map(|i| R::frac_mul(i, rho)).collect();
    let ones = vec![R::one(); n];
    let c = fourier_coefficients(&[&ones], &theta, jmax, scheme)?;
    Ok(c[0][1..].iter().map(|z| z.conj()).collect())
}
