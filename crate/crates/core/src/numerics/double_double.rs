//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64` with
//! `|lo| <= ulp(hi) / 2`, giving a 106-bit significand (about 32 decimal
//! digits).
//!
//! The algorithms follow the classic QD library (Hida, Li, Bailey): error-free
//! transformations for `+` and `*`, Newton corrections for division, square
//! root, logarithm and `atan2`, and table-driven argument reduction for the
//! trigonometric functions.

use std::cmp::Ordering;
use std::f64::consts;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, Sub, SubAssign};
use std::sync::OnceLock;

#[derive(Clone, Copy, Default, PartialEq)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline(always)]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline(always)]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1

#[inline(always)]
fn split(a: f64) -> (f64, f64) {
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

/// Exact product `a * b = p + e` (Dekker). Avoids a libm `fma` call on
/// targets built without hardware FMA enabled.
#[inline(always)]
pub(crate) fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

pub const PI: DoubleDouble = DoubleDouble::from_parts(consts::PI, 1.2246467991473532e-16);
pub const TWO_PI: DoubleDouble = DoubleDouble::from_parts(consts::TAU, 2.4492935982947064e-16);
pub const FRAC_PI_2: DoubleDouble = DoubleDouble::from_parts(consts::FRAC_PI_2, 6.123233995736766e-17);
pub const FRAC_PI_4: DoubleDouble = DoubleDouble::from_parts(consts::FRAC_PI_4, 3.061616997868383e-17);
pub const FRAC_PI_16: DoubleDouble = DoubleDouble::from_parts(consts::PI / 16.0, 7.654042494670958e-18);
pub const LN_2: DoubleDouble = DoubleDouble::from_parts(consts::LN_2, 2.3190468138462996e-17);
pub const LN_10: DoubleDouble = DoubleDouble::from_parts(consts::LN_10, -2.1707562233822494e-16);

/// 2^-106
pub const EPSILON: f64 = 1.232_595_164_407_831e-32;

impl DoubleDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };

    pub const fn from_parts(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    /// Normalizes an arbitrary pair so that `|lo| <= ulp(hi)/2`.
    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        Self { hi, lo }
    }

    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Exact conversion for every `i64`.
    pub fn from_i64(n: i64) -> Self {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Self::new(hi, lo)
    }

    /// Exact conversion for integers below 2^106.
    pub fn from_u128(n: u128) -> Self {
        let hi = n as f64;
        let rem = n as i128 - hi as i128;
        Self::new(hi, rem as f64)
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    #[inline]
    fn mul_pow2(self, b: f64) -> Self {
        Self { hi: self.hi * b, lo: self.lo * b }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * b);
        Self { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Self {
        let (s1, s2) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Self { hi, lo }
    }

    #[inline]
    pub fn sqr(self) -> Self {
        let (p1, p2) = two_prod(self.hi, self.hi);
        let p2 = p2 + 2.0 * self.hi * self.lo + self.lo * self.lo;
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    pub fn floor(self) -> Self {
        let hi = self.hi.floor();
        if hi == self.hi {
            let lo = self.lo.floor();
            let (hi, lo) = quick_two_sum(hi, lo);
            Self { hi, lo }
        } else {
            Self { hi, lo: 0.0 }
        }
    }

    /// Round half away from zero.
    pub fn round(self) -> Self {
        let hi = self.hi.round();
        if hi == self.hi {
            let lo = self.lo.round();
            let (hi, lo) = quick_two_sum(hi, lo);
            Self { hi, lo }
        } else {
            if (hi - self.hi).abs() == 0.5 && self.lo != 0.0 {
                // exact tie in `hi` is decided by the sign of `lo`
                if self.lo > 0.0 && hi < self.hi {
                    return Self::from_f64(hi + 1.0);
                }
                if self.lo < 0.0 && hi > self.hi {
                    return Self::from_f64(hi - 1.0);
                }
            }
            Self { hi, lo: 0.0 }
        }
    }

    pub fn trunc(self) -> Self {
        if self.hi >= 0.0 {
            self.floor()
        } else {
            -(-self).floor()
        }
    }

    pub fn sqrt(self) -> Self {
        if self.hi == 0.0 {
            return Self::ZERO;
        }
        if self.hi < 0.0 {
            return Self::from_f64(f64::NAN);
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let corr = (self - Self::from_f64(ax).sqr()).hi * (x * 0.5);
        let (hi, lo) = two_sum(ax, corr);
        Self { hi, lo }
    }

    pub fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Self::ONE;
        }
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Self::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    fn ldexp(self, e: i32) -> Self {
        let f = 2f64.powi(e);
        Self { hi: self.hi * f, lo: self.lo * f }
    }

    pub fn exp(self) -> Self {
        const INV_K: f64 = 1.0 / 512.0;
        if self.hi <= -709.0 {
            return Self::ZERO;
        }
        if self.hi >= 709.0 {
            return Self::from_f64(f64::INFINITY);
        }
        if self.is_zero() {
            return Self::ONE;
        }
        let m = (self.hi / LN_2.hi + 0.5).floor();
        let r = (self - LN_2.mul_f64(m)).mul_pow2(INV_K);
        let thresh = INV_K * EPSILON;

        let mut p = r.sqr();
        let mut s = r + p.mul_pow2(0.5);
        p *= r;
        let inv = inv_factorials();
        let mut t = p * inv[3];
        let mut i = 3;
        loop {
            s += t;
            p *= r;
            i += 1;
            t = p * inv[i];
            if t.hi.abs() <= thresh || i >= 9 {
                break;
            }
        }
        s += t;
        // (1 + s)^512 - 1 by repeated squaring of 1 + s
        for _ in 0..9 {
            s = s.mul_pow2(2.0) + s.sqr();
        }
        (s + Self::ONE).ldexp(m as i32)
    }

    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Self::from_f64(if self.hi == 0.0 { f64::NEG_INFINITY } else { f64::NAN });
        }
        if self == Self::ONE {
            return Self::ZERO;
        }
        let x = Self::from_f64(self.hi.ln());
        x + self * (-x).exp() - Self::ONE
    }

    pub fn log10(self) -> Self {
        self.ln() / LN_10
    }

    /// `sin` and `cos` of the reduced argument `|t| <= pi/32`.
    fn sin_cos_reduced(t: Self) -> (Self, Self) {
        if t.is_zero() {
            return (Self::ZERO, Self::ONE);
        }
        let inv = inv_factorials();
        let t2 = t.sqr();
        // sin t = t (1 - t^2/3! + t^4/5! - ...), Horner in t^2 up to t^21
        let mut acc = inv[21];
        let mut k = 19;
        while k >= 3 {
            acc = inv[k] - t2 * acc;
            k -= 2;
        }
        let s = t * (Self::ONE - t2 * acc);
        let c = (Self::ONE - s.sqr()).sqrt();
        (s, c)
    }

    pub fn sin_cos(self) -> (Self, Self) {
        if self.is_zero() {
            return (Self::ZERO, Self::ONE);
        }
        // reduce modulo 2pi, then by pi/2, then by pi/16
        let z = (self / TWO_PI).round();
        let r = self - TWO_PI * z;

        let q = (r.hi / FRAC_PI_2.hi + 0.5).floor();
        let t = r - FRAC_PI_2.mul_f64(q);
        let j = q as i64;
        let kf = (t.hi / FRAC_PI_16.hi + 0.5).floor();
        let k = kf as i64;
        let t = t - FRAC_PI_16.mul_f64(kf);

        let (st, ct) = Self::sin_cos_reduced(t);

        let (mut s, mut c) = if k == 0 {
            (st, ct)
        } else {
            let table = trig_table();
            let (sk, ck) = table[(k.unsigned_abs() - 1) as usize];
            if k > 0 {
                (sk * ct + ck * st, ck * ct - sk * st)
            } else {
                (ck * st - sk * ct, ck * ct + sk * st)
            }
        };

        match j.rem_euclid(4) {
            0 => {}
            1 => {
                let tmp = s;
                s = c;
                c = -tmp;
            }
            2 => {
                s = -s;
                c = -c;
            }
            _ => {
                let tmp = s;
                s = -c;
                c = tmp;
            }
        }
        (s, c)
    }

    pub fn sin(self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(self) -> Self {
        self.sin_cos().1
    }

    /// Four-quadrant arctangent of `self / x`, in `(-pi, pi]`.
    pub fn atan2(self, x: Self) -> Self {
        let y = self;
        if x.is_zero() {
            if y.is_zero() {
                return Self::ZERO;
            }
            return if y.hi > 0.0 { FRAC_PI_2 } else { -FRAC_PI_2 };
        }
        if y.is_zero() {
            return if x.hi > 0.0 { Self::ZERO } else { PI };
        }
        if x == y {
            return if y.hi > 0.0 { FRAC_PI_4 } else { -(FRAC_PI_4 * Self::from_f64(3.0)) };
        }
        if x == -y {
            return if y.hi > 0.0 { FRAC_PI_4 * Self::from_f64(3.0) } else { -FRAC_PI_4 };
        }
        let r = (x.sqr() + y.sqr()).sqrt();
        let xx = x / r;
        let yy = y / r;
        let mut z = Self::from_f64(y.to_f64().atan2(x.to_f64()));
        let (sz, cz) = z.sin_cos();
        if xx.hi.abs() > yy.hi.abs() {
            z += (yy - sz) / cz;
        } else {
            z -= (xx - cz) / sz;
        }
        z
    }

    /// Fractional part `self - floor(self)`, in `[0, 1)`.
    pub fn fract_floor(self) -> Self {
        let f = self - self.floor();
        // compare full values: `1 - tiny` has `hi == 1`
        if f >= Self::ONE {
            f - Self::ONE
        } else if f < Self::ZERO {
            f + Self::ONE
        } else {
            f
        }
    }

    /// `frac(n * rho)` without losing the integer part's bits: both halves of
    /// `rho` are multiplied exactly before the integer part is dropped.
    pub fn frac_mul(n: u64, rho: Self) -> Self {
        debug_assert!(n < (1u64 << 53));
        let nf = n as f64;
        let (p1, e1) = two_prod(nf, rho.hi);
        let (p2, e2) = two_prod(nf, rho.lo);
        // trunc keeps both subtractions exact
        let f1 = p1 - p1.trunc();
        let f2 = p2 - p2.trunc();
        let s = Self::from_f64(f1) + Self::from_f64(e1) + Self::from_f64(f2) + Self::from_f64(e2);
        s.fract_floor()
    }

    pub fn pow10(e: i32) -> Self {
        Self::from_f64(10.0).powi(e)
    }

    /// Scientific notation with `digits` significant digits.
    pub fn to_sci_string(self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.hi.is_nan() {
            return "NaN".to_string();
        }
        if self.hi.is_infinite() {
            return if self.hi > 0.0 { "inf".into() } else { "-inf".into() };
        }
        if self.is_zero() {
            return format!("{}e0", if digits > 1 { format!("0.{}", "0".repeat(digits - 1)) } else { "0".into() });
        }
        let neg = self.hi < 0.0;
        let mut x = self.abs();
        let mut e = x.hi.log10().floor() as i32;
        x *= Self::pow10(-e);
        if x.hi >= 10.0 {
            x /= Self::from_f64(10.0);
            e += 1;
        } else if x.hi < 1.0 {
            x = x.mul_f64(10.0);
            e -= 1;
        }
        let mut ds: Vec<u8> = Vec::with_capacity(digits + 1);
        for _ in 0..=digits {
            let d = x.hi.floor().clamp(0.0, 9.0);
            ds.push(d as u8);
            x = (x - Self::from_f64(d)).mul_f64(10.0);
        }
        // round on the extra digit
        if ds[digits] >= 5 {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    e += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
        ds.truncate(digits);
        let mut s = String::with_capacity(digits + 8);
        if neg {
            s.push('-');
        }
        s.push((b'0' + ds[0]) as char);
        if digits > 1 {
            s.push('.');
            for d in &ds[1..] {
                s.push((b'0' + d) as char);
            }
        }
        s.push('e');
        s.push_str(&e.to_string());
        s
    }

    pub fn parse(src: &str) -> Result<Self, ParseDoubleDoubleError> {
        let s = src.trim();
        let err = || ParseDoubleDoubleError(src.to_string());
        if s.is_empty() {
            return Err(err());
        }
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "nan" => return Ok(Self::from_f64(f64::NAN)),
            "inf" | "+inf" | "infinity" => return Ok(Self::from_f64(f64::INFINITY)),
            "-inf" | "-infinity" => return Ok(Self::from_f64(f64::NEG_INFINITY)),
            _ => {}
        }
        let (neg, body) = match s.as_bytes()[0] {
            b'-' => (true, &s[1..]),
            b'+' => (false, &s[1..]),
            _ => (false, s),
        };
        let (mant, exp) = match body.find(['e', 'E']) {
            Some(i) => {
                let e: i32 = body[i + 1..].parse().map_err(|_| err())?;
                (&body[..i], e)
            }
            None => (body, 0),
        };
        let mut acc = Self::ZERO;
        let mut scale = 0i32;
        let mut seen_dot = false;
        let mut any = false;
        let mut sig = 0usize;
        for ch in mant.bytes() {
            match ch {
                b'0'..=b'9' => {
                    any = true;
                    if sig < 40 {
                        acc = acc.mul_f64(10.0).add_f64((ch - b'0') as f64);
                        if acc.hi != 0.0 {
                            sig += 1;
                        }
                        if seen_dot {
                            scale -= 1;
                        }
                    } else if !seen_dot {
                        scale += 1;
                    }
                }
                b'.' if !seen_dot => seen_dot = true,
                _ => return Err(err()),
            }
        }
        if !any {
            return Err(err());
        }
        let e = exp + scale;
        let v = if e >= 0 { acc * Self::pow10(e) } else { acc / Self::pow10(-e) };
        Ok(if neg { -v } else { v })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDoubleDoubleError(pub String);

impl fmt::Display for ParseDoubleDoubleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid number `{}`", self.0)
    }
}

impl std::error::Error for ParseDoubleDoubleError {}

fn inv_factorials() -> &'static [DoubleDouble; 32] {
    static TABLE: OnceLock<[DoubleDouble; 32]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [DoubleDouble::ONE; 32];
        let mut f = DoubleDouble::ONE;
        for (i, slot) in t.iter_mut().enumerate().skip(1) {
            f = f.mul_f64(i as f64);
            *slot = DoubleDouble::ONE / f;
        }
        t
    })
}

/// `(sin(k pi/16), cos(k pi/16))` for k = 1..=4, from the full Taylor series.
fn trig_table() -> &'static [(DoubleDouble, DoubleDouble); 4] {
    static TABLE: OnceLock<[(DoubleDouble, DoubleDouble); 4]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let inv = inv_factorials();
        let mut out = [(DoubleDouble::ZERO, DoubleDouble::ONE); 4];
        for (k, slot) in out.iter_mut().enumerate() {
            let x = FRAC_PI_16.mul_f64((k + 1) as f64);
            let x2 = x.sqr();
            // |x| <= pi/4 : terms beyond x^31 are far below 2^-106
            let mut s = inv[31];
            let mut c = inv[30];
            for i in (1..=29).rev().step_by(2) {
                s = inv[i] - x2 * s;
            }
            for i in (0..=28).rev().step_by(2) {
                c = inv[i] - x2 * c;
            }
            *slot = (x * s, c);
        }
        out
    })
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Self { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        Self { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        Self { hi: q1, lo: q2 }.add_f64(q3)
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, b: Self) -> Self {
        self - b * (self / b).trunc()
    }
}

impl AddAssign for DoubleDouble {
    #[inline]
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for DoubleDouble {
    #[inline]
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for DoubleDouble {
    #[inline]
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

impl DivAssign for DoubleDouble {
    fn div_assign(&mut self, b: Self) {
        *self = *self / b;
    }
}

impl Sum for DoubleDouble {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |a, b| a + b)
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            o => Some(o),
        }
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl fmt::Debug for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoubleDouble({})", self.to_sci_string(34))
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(32);
        f.write_str(&self.to_sci_string(digits))
    }
}

impl std::str::FromStr for DoubleDouble {
    type Err = ParseDoubleDoubleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl num_traits::Zero for DoubleDouble {
    fn zero() -> Self {
        Self::ZERO
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
}

impl num_traits::One for DoubleDouble {
    fn one() -> Self {
        Self::ONE
    }
}

impl num_traits::Num for DoubleDouble {
    type FromStrRadixErr = ParseDoubleDoubleError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err(ParseDoubleDoubleError(s.to_string()));
        }
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd(s: &str) -> DoubleDouble {
        DoubleDouble::parse(s).unwrap()
    }

    fn close(a: DoubleDouble, b: DoubleDouble, tol: f64) -> bool {
        (a - b).abs().to_f64() <= tol
    }

    #[test]
    fn constants_are_consistent() {
        assert!(close(PI.mul_f64(2.0), TWO_PI, 1e-32));
        assert!(close(PI.mul_f64(0.5), FRAC_PI_2, 1e-32));
        assert!(close(PI.mul_f64(0.0625), FRAC_PI_16, 1e-33));
        assert!(close(LN_2.exp(), DoubleDouble::from_f64(2.0), 1e-31));
    }

    #[test]
    fn tiny_relative_difference_survives() {
        let one = DoubleDouble::ONE;
        let bumped = one + dd("1e-32");
        assert!(bumped > one);
        let diff = bumped - one;
        assert!(close(diff, dd("1e-32"), 1e-47));
    }

    #[test]
    fn sqrt_of_two_digits() {
        let r = DoubleDouble::from_f64(2.0).sqrt();
        let want = dd("1.4142135623730950488016887242096980785696718753769");
        assert!(close(r, want, 3e-32));
    }

    #[test]
    fn sin_cos_reference_values() {
        // sin(2), cos(2), sin(1) to 40 digits
        let (s, c) = DoubleDouble::from_f64(2.0).sin_cos();
        assert!(close(s, dd("0.9092974268256816953960198659117448427022549714478902683789"), 4e-32));
        assert!(close(c, dd("-0.4161468365471423869975682295007621897660007710755448907551"), 4e-32));
        let s1 = DoubleDouble::ONE.sin();
        assert!(close(s1, dd("0.8414709848078965066525023216302989996225630607983710656727"), 4e-32));
        // large-ish argument with reduction
        let s100 = DoubleDouble::from_f64(100.0).sin();
        assert!(close(s100, dd("-0.5063656411097587936565576104597854320650327212906"), 1e-30));
    }

    #[test]
    fn exp_and_ln() {
        let e = DoubleDouble::ONE.exp();
        assert!(close(e, dd("2.7182818284590452353602874713526624977572470937000"), 5e-32));
        let e4 = DoubleDouble::from_f64(-4.0).exp();
        assert!(close(e4, dd("0.018315638888734180293718021273241242211912067553475"), 1e-33));
        let l = DoubleDouble::from_f64(10.0).ln();
        assert!(close(l, LN_10, 4e-32));
    }

    #[test]
    fn atan2_quadrants() {
        let one = DoubleDouble::ONE;
        assert!(close(one.atan2(one), FRAC_PI_4, 1e-32));
        assert!(close(one.atan2(-one), FRAC_PI_4.mul_f64(3.0), 1e-32));
        let a = DoubleDouble::from_f64(0.3).atan2(DoubleDouble::from_f64(-2.0));
        let (s, c) = a.sin_cos();
        let r = (DoubleDouble::from_f64(0.3).sqr() + DoubleDouble::from_f64(4.0)).sqrt();
        assert!(close(s * r, DoubleDouble::from_f64(0.3), 1e-31));
        assert!(close(c * r, DoubleDouble::from_f64(-2.0), 1e-31));
    }

    #[test]
    fn frac_mul_matches_long_product() {
        let rho = (DoubleDouble::from_f64(5.0).sqrt() - DoubleDouble::ONE).mul_f64(0.5);
        let n = 123_456_789u64;
        let direct = (rho * DoubleDouble::from_i64(n as i64)).fract_floor();
        let exact = DoubleDouble::frac_mul(n, rho);
        assert!(close(direct, exact, 1e-23));
        assert!(exact >= DoubleDouble::ZERO && exact < DoubleDouble::ONE);
    }

    #[test]
    fn print_parse_round_trip() {
        let x = DoubleDouble::from_f64(2.0).sqrt() * dd("1e-7");
        let s = x.to_sci_string(36);
        let y = dd(&s);
        assert!(close(x, y, 1e-38));
        assert_eq!(DoubleDouble::from_f64(1.5).to_sci_string(3), "1.50e0");
        assert_eq!(dd("-0.125").to_f64(), -0.125);
    }

    #[test]
    fn floor_and_round_use_low_word() {
        let x = DoubleDouble::from_parts(3.0, -1e-20);
        assert_eq!(x.floor().to_f64(), 2.0);
        assert_eq!(x.round().to_f64(), 3.0);
        let h = DoubleDouble::from_parts(2.5, 1e-20);
        assert_eq!(h.round().to_f64(), 3.0);
        let h = DoubleDouble::from_parts(2.5, -1e-20);
        assert_eq!(h.round().to_f64(), 2.0);
    }

    #[test]
    fn fract_of_tiny_negative_stays_in_unit_interval() {
        let f = DoubleDouble::from_f64(-2e-27).fract_floor();
        assert!(f >= DoubleDouble::ZERO && f < DoubleDouble::ONE);
        assert_eq!(f.hi(), 1.0);
        assert!(((DoubleDouble::ONE - f).to_f64() - 2e-27).abs() < 1e-40);
    }
}
