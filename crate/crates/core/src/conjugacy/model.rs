use std::io::{BufRead, Write};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::numerics::{weighted_birkhoff, Precision, Real, WeightScheme};
use crate::trajectory::Point;

use super::fit::{analyticity_fit, Parity};
use super::fourier::fourier_coefficients;
use super::{rotation_phase, ConjugacySamples};

/// Imaginary residue allowed in a reconstruction, in units of the noise
/// floor.
const RESIDUE_FACTOR: f64 = 1e3;

/// Fourier coefficients of the angular part `g` (`a_k`) and the radius
/// (`b_k`) for `|k| <= kmax`.
#[derive(Debug, Clone)]
pub struct FourierModel<R> {
    pub rho: R,
    /// Low-order part of the rotation number; usually zero.
    pub rho_tail: R,
    pub center: Point<R>,
    pub kmax: usize,
    a: Vec<Complex<R>>,
    b: Vec<Complex<R>>,
    /// Median `|â_k|` over the top decile of `k`.
    pub noise_floor: f64,
    /// Same statistic for the radial coefficients.
    pub radial_noise_floor: f64,
}

impl<R: Real> FourierModel<R> {
    /// Assembles a model from nonnegative-`k` coefficients; negative `k` are
    /// filled in by conjugation.
    pub fn from_half_spectrum(rho: R, center: Point<R>, a_pos: &[Complex<R>], b_pos: &[Complex<R>]) -> Result<Self> {
        if a_pos.len() != b_pos.len() || a_pos.len() < 2 {
            return Err(Error::Contract("need matching coefficient tables with kmax >= 1".into()));
        }
        let kmax = a_pos.len() - 1;
        let mirror = |pos: &[Complex<R>]| -> Vec<Complex<R>> {
            let mut v: Vec<Complex<R>> = pos[1..].iter().rev().map(|z| z.conj()).collect();
            v.extend_from_slice(pos);
            v
        };
        let a = mirror(a_pos);
        let b = mirror(b_pos);
        let noise_floor = top_decile_median(a_pos);
        let radial_noise_floor = top_decile_median(b_pos);
        Ok(Self { rho, rho_tail: R::zero(), center, kmax, a, b, noise_floor, radial_noise_floor })
    }

    pub fn with_rho_tail(mut self, tail: R) -> Self {
        self.rho_tail = tail;
        self
    }

    pub fn a(&self, k: i64) -> Complex<R> {
        self.a[(k + self.kmax as i64) as usize]
    }

    pub fn b(&self, k: i64) -> Complex<R> {
        self.b[(k + self.kmax as i64) as usize]
    }

    /// `|a_k|` for `k = 0..=kmax`.
    pub fn a_magnitudes(&self) -> Vec<f64> {
        (0..=self.kmax as i64).map(|k| self.a(k).norm_sqr().sqrt().to_f64()).collect()
    }

    /// Estimate of the truncation plus noise error of a reconstruction:
    /// the fitted geometric tail beyond `kmax` plus `(2 kmax + 1)` noise
    /// floors.
    pub fn tail_bound(&self) -> f64 {
        let noise = (2 * self.kmax + 1) as f64 * self.noise_floor.max(self.radial_noise_floor);
        match analyticity_fit(self, Parity::All) {
            Ok(fit) if fit.beta > 0.0 => {
                let q = 10f64.powf(-fit.beta);
                let first = 10f64.powf(fit.intercept - fit.beta * (self.kmax + 1) as f64);
                noise + 2.0 * first / (1.0 - q)
            }
            _ => noise,
        }
    }

    fn series(&self, coeffs: &[Complex<R>], theta: R) -> Complex<R> {
        let mut acc = coeffs[self.kmax];
        let (s, c) = (theta * R::two_pi()).sin_cos();
        let e = Complex::new(c, s);
        let mut z = e;
        for k in 1..=self.kmax {
            if k % 64 == 0 {
                let (s, c) = ((theta * R::from_usize(k)).fract() * R::two_pi()).sin_cos();
                z = Complex::new(c, s);
            }
            acc = acc + coeffs[self.kmax + k] * z + coeffs[self.kmax - k] * z.conj();
            z = z * e;
        }
        acc
    }

    /// `g(θ)` and `r(θ)` with the imaginary residue check.
    pub fn profiles(&self, theta: R) -> Result<(R, R)> {
        let g = self.series(&self.a, theta);
        let r = self.series(&self.b, theta);
        let limit = RESIDUE_FACTOR * self.noise_floor.max(self.radial_noise_floor).max(R::epsilon().to_f64());
        let residue = g.im.abs().to_f64().max(r.im.abs().to_f64());
        if residue > limit {
            return Err(Error::InconsistentModel { residue, limit });
        }
        Ok((g.re, r.re))
    }

    /// Point on the curve at parameter `θ`.
    pub fn evaluate(&self, theta: R) -> Result<Point<R>> {
        let (g, r) = self.profiles(theta)?;
        let phi = theta + g;
        let (s, c) = (phi * R::two_pi()).sin_cos();
        Ok(self.center + Complex::new(r * c, r * s))
    }

    /// Predicted `n`-th point of the orbit the model was built from.
    pub fn predict(&self, n: u64) -> Result<Point<R>> {
        self.evaluate(rotation_phase(n, self.rho, self.rho_tail))
    }

    /// Self-describing text form, stamped with the precision.
    pub fn save<W: Write>(&self, mut w: W) -> Result<()> {
        let d = R::print_digits();
        writeln!(w, "# birkhoff fourier model")?;
        writeln!(w, "precision {}", R::PRECISION)?;
        writeln!(w, "rho {}", self.rho.to_sci(d))?;
        if self.rho_tail != R::zero() {
            writeln!(w, "rho_tail {}", self.rho_tail.to_sci(d))?;
        }
        writeln!(w, "center {} {}", self.center.re.to_sci(d), self.center.im.to_sci(d))?;
        writeln!(w, "kmax {}", self.kmax)?;
        for k in 0..=self.kmax as i64 {
            let (a, b) = (self.a(k), self.b(k));
            writeln!(w, "coef {k} {} {} {} {}", a.re.to_sci(d), a.im.to_sci(d), b.re.to_sci(d), b.im.to_sci(d))?;
        }
        Ok(())
    }

    pub fn load<B: BufRead>(r: B) -> Result<Self> {
        let mut precision = None;
        let mut rho = None;
        let mut rho_tail = R::zero();
        let mut center = None;
        let mut kmax = None;
        let mut a_pos = Vec::new();
        let mut b_pos = Vec::new();
        let num = |s: &str| R::parse_str(s).ok_or_else(|| Error::Parse(format!("bad number '{s}'")));
        for line in r.lines() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            match f[0] {
                "precision" if f.len() == 2 => precision = Some(f[1].parse::<Precision>().map_err(Error::Parse)?),
                "rho" if f.len() == 2 => rho = Some(num(f[1])?),
                "rho_tail" if f.len() == 2 => rho_tail = num(f[1])?,
                "center" if f.len() == 3 => center = Some(Complex::new(num(f[1])?, num(f[2])?)),
                "kmax" if f.len() == 2 => {
                    kmax = Some(f[1].parse::<usize>().map_err(|e| Error::Parse(format!("kmax: {e}")))?)
                }
                "coef" if f.len() == 6 => {
                    let k: usize = f[1].parse().map_err(|e| Error::Parse(format!("coefficient index: {e}")))?;
                    if k != a_pos.len() {
                        return Err(Error::Parse(format!("coefficient {k} out of order")));
                    }
                    a_pos.push(Complex::new(num(f[2])?, num(f[3])?));
                    b_pos.push(Complex::new(num(f[4])?, num(f[5])?));
                }
                _ => return Err(Error::Parse(format!("unrecognised model line '{line}'"))),
            }
        }
        let precision = precision.ok_or_else(|| Error::Parse("model lacks a precision stamp".into()))?;
        if precision != R::PRECISION {
            return Err(Error::Parse(format!("model was saved in {precision} precision, loading as {}", R::PRECISION)));
        }
        let kmax = kmax.ok_or_else(|| Error::Parse("model lacks kmax".into()))?;
        if a_pos.len() != kmax + 1 {
            return Err(Error::Parse(format!("expected {} coefficients, found {}", kmax + 1, a_pos.len())));
        }
        Self::from_half_spectrum(
            rho.ok_or_else(|| Error::Parse("model lacks rho".into()))?,
            center.ok_or_else(|| Error::Parse("model lacks center".into()))?,
            &a_pos,
            &b_pos,
        )
        .map(|m| m.with_rho_tail(rho_tail))
    }

    /// Coefficient table `k,re_a,im_a,abs_a,re_b,im_b,abs_b` for
    /// `k = -kmax..=kmax`.
    pub fn write_coefficients_csv<W: Write>(&self, w: W, header: &[String]) -> Result<()> {
        let mut w = w;
        for h in header {
            writeln!(w, "# {h}")?;
        }
        let mut csv = csv::Writer::from_writer(w);
        csv.write_record(["k", "re_a", "im_a", "abs_a", "re_b", "im_b", "abs_b"])?;
        let d = R::print_digits();
        for k in -(self.kmax as i64)..=self.kmax as i64 {
            let (a, b) = (self.a(k), self.b(k));
            csv.write_record([
                k.to_string(),
                a.re.to_sci(d),
                a.im.to_sci(d),
                a.norm_sqr().sqrt().to_sci(d),
                b.re.to_sci(d),
                b.im.to_sci(d),
                b.norm_sqr().sqrt().to_sci(d),
            ])?;
        }
        csv.flush()?;
        Ok(())
    }
}

fn top_decile_median<R: Real>(pos: &[Complex<R>]) -> f64 {
    let kmax = pos.len() - 1;
    let lo = kmax - kmax / 10;
    let mut m: Vec<f64> = pos[lo..].iter().map(|z| z.norm_sqr().sqrt().to_f64()).collect();
    m.sort_by(f64::total_cmp);
    let n = m.len();
    if n % 2 == 1 {
        m[n / 2]
    } else {
        0.5 * (m[n / 2 - 1] + m[n / 2])
    }
}

/// Coefficients `â_k = WB_N(g σ_{-k})` and `b̂_k = WB_N(r σ_{-k})` for
/// `|k| <= kmax`, using the first `N = scheme.len()` samples.
pub fn build_model<R: Real>(
    samples: &ConjugacySamples<R>,
    kmax: usize,
    scheme: &WeightScheme<R>,
) -> Result<FourierModel<R>> {
    if kmax < 1 {
        return Err(Error::Contract("kmax must be >= 1".into()));
    }
    // the means are removed first: a constant leaks into â_k through
    // WB_N(σ_k), which is largest where k is a continued-fraction denominator
    let n = scheme.len().min(samples.len());
    let means = [weighted_birkhoff(&samples.g[..n], scheme)?, weighted_birkhoff(&samples.rad[..n], scheme)?];
    let g: Vec<R> = samples.g.iter().map(|&v| v - means[0]).collect();
    let rad: Vec<R> = samples.rad.iter().map(|&v| v - means[1]).collect();
    let mut c = fourier_coefficients(&[&g, &rad], &samples.theta, kmax, scheme)?;
    for (row, m) in c.iter_mut().zip(means) {
        row[0].re += m;
    }
    Ok(FourierModel::from_half_spectrum(samples.rho, samples.center, &c[0], &c[1])?.with_rho_tail(samples.rho_tail))
}

pub fn evaluate_model<R: Real>(model: &FourierModel<R>, theta: R) -> Result<Point<R>> {
    model.evaluate(theta)
}
