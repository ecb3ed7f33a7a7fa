use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::numerics::{golden, Real};
use crate::trajectory::{Provenance, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    Fish,
    Flower,
    PureCircle,
    Custom,
}

impl CurveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CurveKind::Fish => "fish",
            CurveKind::Flower => "flower",
            CurveKind::PureCircle => "circle",
            CurveKind::Custom => "custom",
        }
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CurveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fish" => Ok(CurveKind::Fish),
            "flower" => Ok(CurveKind::Flower),
            "circle" | "pure_circle" => Ok(CurveKind::PureCircle),
            "custom" => Ok(CurveKind::Custom),
            _ => Err(Error::Parse(format!("unknown curve '{s}' (fish, flower, circle)"))),
        }
    }
}

/// A closed curve given by a finite Fourier sum `γ(x) = Σ ĥ_k z^k`,
/// `z = e^{i2πx}`, and the rotation number used to sample it.
#[derive(Debug, Clone)]
pub struct CurveSpec<R> {
    pub kind: CurveKind,
    pub coefficients: Vec<(i32, Complex<R>)>,
    pub rho: R,
}

fn c<R: Real>(re: &str, im: &str) -> Complex<R> {
    Complex::new(R::parse_str(re).unwrap(), R::parse_str(im).unwrap())
}

impl<R: Real> CurveSpec<R> {
    pub fn fish(rho: R) -> Self {
        let coefficients =
            vec![(-1, c("1.4", "-2")), (0, c("4.1", "1.34")), (1, c("-2", "2.412")), (2, c("-2.5", "-1.752"))];
        Self { kind: CurveKind::Fish, coefficients, rho }
    }

    pub fn flower(rho: R) -> Self {
        let coefficients = vec![(1, c("0.75", "0")), (6, c("1", "0"))];
        Self { kind: CurveKind::Flower, coefficients, rho }
    }

    pub fn pure_circle(rho: R) -> Self {
        Self { kind: CurveKind::PureCircle, coefficients: vec![(1, Complex::new(R::one(), R::zero()))], rho }
    }

    pub fn custom(coefficients: Vec<(i32, Complex<R>)>, rho: R) -> Self {
        Self { kind: CurveKind::Custom, coefficients, rho }
    }

    /// Built-in curve by kind, sampled at the golden rotation number.
    pub fn named(kind: CurveKind) -> Result<Self> {
        let rho = golden::<R>();
        match kind {
            CurveKind::Fish => Ok(Self::fish(rho)),
            CurveKind::Flower => Ok(Self::flower(rho)),
            CurveKind::PureCircle => Ok(Self::pure_circle(rho)),
            CurveKind::Custom => Err(Error::Contract("custom curves need explicit coefficients".into())),
        }
    }

    /// `γ(x)` for `x` in `[0, 1)`.
    pub fn point(&self, x: R) -> Complex<R> {
        let (s, cs) = (x * R::two_pi()).sin_cos();
        let z = Complex::new(cs, s);
        let zinv = Complex::new(cs, -s);
        let mut acc = Complex::new(R::zero(), R::zero());
        for &(k, h) in &self.coefficients {
            acc = acc + h * zpow(z, zinv, k);
        }
        acc
    }

    /// `γ(frac(nρ))` for `n = 0..n`.
    pub fn trajectory(&self, n: usize) -> Trajectory<R> {
        let points = (0..n as u64).map(|k| self.point(R::frac_mul(k, self.rho))).collect();
        let prov = Provenance::new(self.kind.as_str()).with("rho", self.rho.to_sci(R::print_digits())).with("N", n);
        Trajectory::new(points, prov)
    }
}

fn zpow<R: Real>(z: Complex<R>, zinv: Complex<R>, k: i32) -> Complex<R> {
    let (base, e) = if k < 0 { (zinv, k.unsigned_abs()) } else { (z, k as u32) };
    let mut acc = Complex::new(R::one(), R::zero());
    let mut b = base;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b;
        }
        b = b * b;
        e >>= 1;
    }
    acc
}

pub fn curve_point<R: Real>(spec: &CurveSpec<R>, x: R) -> Complex<R> {
    spec.point(x)
}

pub fn curve_trajectory<R: Real>(spec: &CurveSpec<R>, n: usize) -> Trajectory<R> {
    spec.trajectory(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::DoubleDouble;

    #[test]
    fn values_at_zero_and_half() {
        let fish = CurveSpec::<f64>::fish(0.5);
        let p = fish.point(0.0);
        assert!((p.re - 1.0).abs() < 1e-14 && p.im.abs() < 1e-14);
        let flower = CurveSpec::<DoubleDouble>::flower(DoubleDouble::from_f64(0.5));
        let a = flower.point(DoubleDouble::ZERO);
        assert!((a.re - DoubleDouble::from_f64(1.75)).abs().to_f64() < 1e-31);
        let b = flower.point(DoubleDouble::from_f64(0.5));
        assert!((b.re - DoubleDouble::from_f64(0.25)).abs().to_f64() < 1e-31);
        assert!(b.im.abs().to_f64() < 1e-31);
    }

    #[test]
    fn fish_coefficients_are_exact_decimals() {
        let fish = CurveSpec::<DoubleDouble>::fish(DoubleDouble::ZERO);
        let sum: Complex<DoubleDouble> =
            fish.coefficients.iter().fold(Complex::new(DoubleDouble::ZERO, DoubleDouble::ZERO), |a, &(_, h)| a + h);
        assert!((sum.re - DoubleDouble::ONE).abs().to_f64() < 1e-31);
        assert!(sum.im.abs().to_f64() < 1e-31);
    }

    #[test]
    fn circle_gaps_equal_rho() {
        let rho = golden::<f64>();
        let t = CurveSpec::pure_circle(rho).trajectory(10);
        for w in t.points.windows(2) {
            let d = (w[1].arg() - w[0].arg()) / (2.0 * std::f64::consts::PI);
            assert!((d.rem_euclid(1.0) - rho).abs() < 1e-13);
            assert!((w[0].norm() - 1.0).abs() < 1e-14);
        }
    }
}
