use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, Neg, SubAssign};

use super::double_double::{self, DoubleDouble};
use super::precision::Precision;

/// Scalar type every kernel in the crate is generic over.
///
/// Two implementations exist: `f64` (fast mode) and [`DoubleDouble`]
/// (high mode). Jobs pick one at the top level and run monomorphized code.
pub trait Real:
    Copy
    + Send
    + Sync
    + 'static
    + Debug
    + Display
    + PartialOrd
    + Default
    + num_traits::Num
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
{
    const PRECISION: Precision;

    fn from_f64(x: f64) -> Self;
    fn from_i64(n: i64) -> Self;
    fn to_f64(self) -> f64;

    fn pi() -> Self;
    fn two_pi() -> Self;
    /// Unit roundoff of the representation.
    fn epsilon() -> Self;

    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn floor(self) -> Self;
    fn round(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn log10(self) -> Self;
    fn sin_cos(self) -> (Self, Self);
    fn atan2(self, x: Self) -> Self;
    fn powi(self, n: i32) -> Self;
    fn mul_f64(self, x: f64) -> Self;

    /// `frac(n * rho)` computed without rounding away the low bits of the
    /// product.
    fn frac_mul(n: u64, rho: Self) -> Self;

    fn parse_str(s: &str) -> Option<Self>;
    /// Scientific notation with the given number of significant digits.
    fn to_sci(self, digits: usize) -> String;

    fn sin(self) -> Self {
        self.sin_cos().0
    }

    fn cos(self) -> Self {
        self.sin_cos().1
    }

    fn is_finite(self) -> bool {
        self.to_f64().is_finite()
    }

    /// `self - floor(self)`, guaranteed in `[0, 1)`.
    fn fract(self) -> Self {
        let f = self - self.floor();
        if f >= Self::one() {
            f - Self::one()
        } else if f < Self::zero() {
            f + Self::one()
        } else {
            f
        }
    }

    fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    fn from_usize(n: usize) -> Self {
        Self::from_i64(n as i64)
    }

    /// Number of decimal digits printed by reports in this precision.
    fn print_digits() -> usize {
        Self::PRECISION.print_digits()
    }
}

impl Real for f64 {
    const PRECISION: Precision = Precision::Fast;

    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
    #[inline]
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn two_pi() -> Self {
        std::f64::consts::TAU
    }
    fn epsilon() -> Self {
        f64::EPSILON / 2.0
    }
    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    #[inline]
    fn floor(self) -> Self {
        f64::floor(self)
    }
    #[inline]
    fn round(self) -> Self {
        f64::round(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn log10(self) -> Self {
        f64::log10(self)
    }
    #[inline]
    fn sin_cos(self) -> (Self, Self) {
        f64::sin_cos(self)
    }
    #[inline]
    fn atan2(self, x: Self) -> Self {
        f64::atan2(self, x)
    }
    fn powi(self, n: i32) -> Self {
        f64::powi(self, n)
    }
    #[inline]
    fn mul_f64(self, x: f64) -> Self {
        self * x
    }
    fn frac_mul(n: u64, rho: Self) -> Self {
        let (p, e) = double_double::two_prod(n as f64, rho);
        let f = p - p.trunc();
        Real::fract(f + e)
    }
    fn parse_str(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }
    fn to_sci(self, digits: usize) -> String {
        format!("{:.*e}", digits.saturating_sub(1), self)
    }
}

impl Real for DoubleDouble {
    const PRECISION: Precision = Precision::High;

    #[inline]
    fn from_f64(x: f64) -> Self {
        DoubleDouble::from_f64(x)
    }
    #[inline]
    fn from_i64(n: i64) -> Self {
        DoubleDouble::from_i64(n)
    }
    #[inline]
    fn to_f64(self) -> f64 {
        DoubleDouble::to_f64(self)
    }
    fn pi() -> Self {
        double_double::PI
    }
    fn two_pi() -> Self {
        double_double::TWO_PI
    }
    fn epsilon() -> Self {
        DoubleDouble::from_f64(double_double::EPSILON)
    }
    #[inline]
    fn abs(self) -> Self {
        DoubleDouble::abs(self)
    }
    fn sqrt(self) -> Self {
        DoubleDouble::sqrt(self)
    }
    #[inline]
    fn floor(self) -> Self {
        DoubleDouble::floor(self)
    }
    #[inline]
    fn round(self) -> Self {
        DoubleDouble::round(self)
    }
    fn exp(self) -> Self {
        DoubleDouble::exp(self)
    }
    fn ln(self) -> Self {
        DoubleDouble::ln(self)
    }
    fn log10(self) -> Self {
        DoubleDouble::log10(self)
    }
    fn sin_cos(self) -> (Self, Self) {
        DoubleDouble::sin_cos(self)
    }
    fn atan2(self, x: Self) -> Self {
        DoubleDouble::atan2(self, x)
    }
    fn powi(self, n: i32) -> Self {
        DoubleDouble::powi(self, n)
    }
    #[inline]
    fn mul_f64(self, x: f64) -> Self {
        DoubleDouble::mul_f64(self, x)
    }
    fn frac_mul(n: u64, rho: Self) -> Self {
        DoubleDouble::frac_mul(n, rho)
    }
    fn parse_str(s: &str) -> Option<Self> {
        DoubleDouble::parse(s).ok()
    }
    fn to_sci(self, digits: usize) -> String {
        self.to_sci_string(digits)
    }
    fn fract(self) -> Self {
        self.fract_floor()
    }
}

/// The golden rotation number `(sqrt(5) - 1) / 2` at full working precision.
pub fn golden<R: Real>() -> R {
    (R::from_f64(5.0).sqrt() - R::one()).mul_f64(0.5)
}
