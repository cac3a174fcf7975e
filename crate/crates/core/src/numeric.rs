//! Configurable-precision real and complex arithmetic on top of `astro-float`.
//!
//! There is no global precision state: every computation carries a [`Ctx`]
//! holding its own precision and constant cache, so evaluations at different
//! precisions can run side by side on different threads.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::BigRational;

pub type Real = BigFloat;

const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision and the relative accuracy asked of iterative evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Precision {
    pub mantissa_bits: usize,
    pub target_rel_err: f64,
}

impl Precision {
    pub const DEFAULT_BITS: usize = 128;

    /// Precision with the default target `2^-(bits-16)`.
    pub fn new(mantissa_bits: usize) -> Result<Self> {
        if mantissa_bits < 53 {
            return Err(Error::Usage(format!(
                "precision must be at least 53 bits, got {mantissa_bits}"
            )));
        }
        Ok(Precision {
            mantissa_bits,
            target_rel_err: 2f64.powi(-(mantissa_bits as i32 - 16)),
        })
    }

    pub fn with_target(mut self, target_rel_err: f64) -> Result<Self> {
        if !(target_rel_err > 0.0) {
            return Err(Error::Usage("target relative error must be positive".into()));
        }
        self.target_rel_err = target_rel_err;
        Ok(self)
    }

    /// Number of significant decimal digits the mantissa carries.
    pub fn decimal_digits(&self) -> usize {
        (self.mantissa_bits as f64 * std::f64::consts::LOG10_2).floor() as usize
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::new(Self::DEFAULT_BITS).expect("default precision is valid")
    }
}

/// Evaluation context: precision plus a private constant cache.
pub struct Ctx {
    prec: Precision,
    work: usize,
    consts: RefCell<Consts>,
}

impl fmt::Debug for Ctx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ctx")
            .field("prec", &self.prec)
            .field("work", &self.work)
            .finish()
    }
}

impl Ctx {
    /// Guard bits carried on top of the requested mantissa.
    pub const GUARD_BITS: usize = 64;

    pub fn new(prec: Precision) -> Result<Self> {
        let consts = Consts::new().map_err(|e| Error::Arithmetic(format!("{e:?}")))?;
        Ok(Ctx {
            prec,
            work: prec.mantissa_bits + Self::GUARD_BITS,
            consts: RefCell::new(consts),
        })
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    /// Bits used for intermediate results.
    pub fn work_bits(&self) -> usize {
        self.work
    }

    /// Unit roundoff at working precision.
    pub fn eps(&self) -> f64 {
        2f64.powi(-(self.work as i32))
    }

    fn check(&self, x: BigFloat) -> Result<BigFloat> {
        if x.is_nan() || x.is_inf() {
            Err(Error::Arithmetic(format!(
                "non-finite intermediate ({:?})",
                x.err()
            )))
        } else {
            Ok(x)
        }
    }

    pub fn zero(&self) -> Real {
        BigFloat::from_word(0, self.work)
    }

    pub fn one(&self) -> Real {
        BigFloat::from_word(1, self.work)
    }

    pub fn from_i64(&self, v: i64) -> Real {
        BigFloat::from_i64(v, self.work)
    }

    pub fn from_usize(&self, v: usize) -> Real {
        BigFloat::from_u64(v as u64, self.work)
    }

    pub fn from_f64(&self, v: f64) -> Real {
        BigFloat::from_f64(v, self.work)
    }

    /// Exact integer conversion followed by one rounding to working precision.
    pub fn from_bigint(&self, v: &BigInt) -> Real {
        let digits = v.magnitude().to_u64_digits();
        let p = 64 * (digits.len() + 1);
        let radix = BigFloat::from_u64(u64::MAX, p).add(&BigFloat::from_word(1, p), p, RM);
        let mut acc = BigFloat::from_word(0, p);
        for d in digits.iter().rev() {
            acc = acc.mul(&radix, p, RM).add(&BigFloat::from_u64(*d, p), p, RM);
        }
        let mut out = if v.is_negative() { acc.neg() } else { acc };
        let _ = out.set_precision(self.work, RM);
        out
    }

    pub fn from_rational(&self, v: &BigRational) -> Real {
        if v.is_zero() {
            return self.zero();
        }
        let n = self.from_bigint(v.numer());
        let d = self.from_bigint(v.denom());
        n.div(&d, self.work, RM)
    }

    /// Parse a decimal literal such as `0.9159655941772190150546`.
    pub fn parse_decimal(&self, s: &str) -> Result<Real> {
        let v = BigFloat::parse(s, Radix::Dec, self.work, RM, &mut self.consts.borrow_mut());
        self.check(v)
            .map_err(|_| Error::Usage(format!("not a decimal number: {s:?}")))
    }

    pub fn add(&self, a: &Real, b: &Real) -> Real {
        a.add(b, self.work, RM)
    }

    pub fn sub(&self, a: &Real, b: &Real) -> Real {
        a.sub(b, self.work, RM)
    }

    pub fn mul(&self, a: &Real, b: &Real) -> Real {
        a.mul(b, self.work, RM)
    }

    pub fn div(&self, a: &Real, b: &Real) -> Result<Real> {
        if b.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        self.check(a.div(b, self.work, RM))
    }

    pub fn mul_i64(&self, a: &Real, k: i64) -> Real {
        self.mul(a, &self.from_i64(k))
    }

    pub fn powi(&self, a: &Real, n: usize) -> Real {
        if n == 0 {
            return self.one();
        }
        a.powi(n, self.work, RM)
    }

    pub fn ln(&self, a: &Real) -> Result<Real> {
        if !a.is_positive() || a.is_zero() {
            return Err(Error::Domain("logarithm of a non-positive value".into()));
        }
        self.check(a.ln(self.work, RM, &mut self.consts.borrow_mut()))
    }

    pub fn exp(&self, a: &Real) -> Result<Real> {
        self.check(a.exp(self.work, RM, &mut self.consts.borrow_mut()))
    }

    pub fn sin(&self, a: &Real) -> Real {
        a.sin(self.work, RM, &mut self.consts.borrow_mut())
    }

    pub fn cos(&self, a: &Real) -> Real {
        a.cos(self.work, RM, &mut self.consts.borrow_mut())
    }

    pub fn sqrt(&self, a: &Real) -> Result<Real> {
        self.check(a.sqrt(self.work, RM))
    }

    pub fn pi(&self) -> Real {
        self.consts.borrow_mut().pi(self.work, RM)
    }

    pub fn ln2(&self) -> Real {
        self.consts.borrow_mut().ln_2(self.work, RM)
    }

    pub fn cmp(&self, a: &Real, b: &Real) -> Ordering {
        match a.cmp(b) {
            Some(c) if c < 0 => Ordering::Less,
            Some(c) if c > 0 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }

    pub fn is_positive(&self, a: &Real) -> bool {
        !a.is_zero() && a.is_positive()
    }

    /// Nearest `f64` (truncating the mantissa); saturates to 0 / ±inf outside range.
    pub fn to_f64(&self, a: &Real) -> f64 {
        to_f64(a)
    }

    /// Scientific notation with `digits` significant decimal digits.
    pub fn format_sci(&self, a: &Real, digits: usize) -> String {
        let digits = digits.max(1);
        if a.is_zero() {
            return format!("{}e+0", pad_mantissa("0", digits));
        }
        let raw = match a.format(Radix::Dec, RM, &mut self.consts.borrow_mut()) {
            Ok(s) => s,
            Err(_) => return format!("{:e}", to_f64(a)),
        };
        round_sci(&raw, digits)
    }
}

fn pad_mantissa(lead: &str, digits: usize) -> String {
    if digits == 1 {
        lead.to_string()
    } else {
        format!("{lead}.{}", "0".repeat(digits - 1))
    }
}

/// Round astro-float's `d.ddd...e±x` output to a fixed number of significant digits.
fn round_sci(raw: &str, digits: usize) -> String {
    let (neg, body) = match raw.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, raw),
    };
    let (mant, exp) = match body.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let mut ds: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
    let point = mant.find('.').unwrap_or(mant.len()) as i64;
    // normalize so the first digit is non-zero
    let lead_zeros = ds.iter().take_while(|&&d| d == 0).count();
    ds.drain(..lead_zeros);
    let mut exp = exp + point - 1 - lead_zeros as i64;
    if ds.is_empty() {
        return format!("{}e+0", pad_mantissa("0", digits));
    }
    if ds.len() > digits {
        let round_up = ds[digits] >= 5;
        ds.truncate(digits);
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.truncate(digits);
                    exp += 1;
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
    }
    while ds.len() < digits {
        ds.push(0);
    }
    let s: String = ds.iter().map(|d| char::from(b'0' + d)).collect();
    let mantissa = if digits == 1 {
        s
    } else {
        format!("{}.{}", &s[..1], &s[1..])
    };
    let sign = if neg { "-" } else { "" };
    let esign = if exp < 0 { "-" } else { "+" };
    format!("{sign}{mantissa}e{esign}{}", exp.abs())
}

/// Truncating conversion to `f64` from the raw mantissa words.
pub fn to_f64(a: &Real) -> f64 {
    if a.is_zero() {
        return 0.0;
    }
    if a.is_nan() {
        return f64::NAN;
    }
    if a.is_inf() {
        return if a.is_inf_pos() { f64::INFINITY } else { f64::NEG_INFINITY };
    }
    let (words, _, sign, exp, _) = match a.as_raw_parts() {
        Some(parts) => parts,
        None => return f64::NAN,
    };
    let top = *words.last().unwrap_or(&0) as f64 / 2f64.powi(64);
    let v = top * 2f64.powf(exp as f64);
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

/// Complex value at working precision.
#[derive(Debug)]
pub struct ComplexVal {
    pub re: Real,
    pub im: Real,
}

impl Clone for ComplexVal {
    fn clone(&self) -> Self {
        ComplexVal {
            re: self.re.clone(),
            im: self.im.clone(),
        }
    }
}

impl ComplexVal {
    pub fn new(re: Real, im: Real) -> Self {
        ComplexVal { re, im }
    }

    pub fn real(ctx: &Ctx, re: Real) -> Self {
        ComplexVal { re, im: ctx.zero() }
    }

    pub fn from_f64(ctx: &Ctx, re: f64, im: f64) -> Self {
        ComplexVal::new(ctx.from_f64(re), ctx.from_f64(im))
    }

    pub fn from_rational(ctx: &Ctx, re: &BigRational, im: &BigRational) -> Self {
        ComplexVal::new(ctx.from_rational(re), ctx.from_rational(im))
    }

    pub fn zero(ctx: &Ctx) -> Self {
        ComplexVal::new(ctx.zero(), ctx.zero())
    }

    pub fn one(ctx: &Ctx) -> Self {
        ComplexVal::new(ctx.one(), ctx.zero())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, ctx: &Ctx, o: &Self) -> Self {
        ComplexVal::new(ctx.add(&self.re, &o.re), ctx.add(&self.im, &o.im))
    }

    pub fn sub(&self, ctx: &Ctx, o: &Self) -> Self {
        ComplexVal::new(ctx.sub(&self.re, &o.re), ctx.sub(&self.im, &o.im))
    }

    pub fn neg(&self) -> Self {
        ComplexVal::new(self.re.neg(), self.im.neg())
    }

    pub fn mul(&self, ctx: &Ctx, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return ComplexVal::real(ctx, ctx.mul(&self.re, &o.re));
        }
        let re = ctx.sub(&ctx.mul(&self.re, &o.re), &ctx.mul(&self.im, &o.im));
        let im = ctx.add(&ctx.mul(&self.re, &o.im), &ctx.mul(&self.im, &o.re));
        ComplexVal::new(re, im)
    }

    pub fn scale(&self, ctx: &Ctx, k: &Real) -> Self {
        ComplexVal::new(ctx.mul(&self.re, k), ctx.mul(&self.im, k))
    }

    pub fn norm_sqr(&self, ctx: &Ctx) -> Real {
        ctx.add(&ctx.mul(&self.re, &self.re), &ctx.mul(&self.im, &self.im))
    }

    pub fn abs(&self, ctx: &Ctx) -> Real {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        ctx.sqrt(&self.norm_sqr(ctx)).unwrap_or_else(|_| ctx.zero())
    }

    pub fn abs_f64(&self) -> f64 {
        to_f64(&self.re).hypot(to_f64(&self.im))
    }

    pub fn recip(&self, ctx: &Ctx) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Arithmetic("reciprocal of zero".into()));
        }
        if self.im.is_zero() {
            return Ok(ComplexVal::real(ctx, ctx.div(&ctx.one(), &self.re)?));
        }
        let d = self.norm_sqr(ctx);
        Ok(ComplexVal::new(
            ctx.div(&self.re, &d)?,
            ctx.div(&self.im.neg(), &d)?,
        ))
    }

    pub fn div(&self, ctx: &Ctx, o: &Self) -> Result<Self> {
        Ok(self.mul(ctx, &o.recip(ctx)?))
    }

    pub fn exp(&self, ctx: &Ctx) -> Result<Self> {
        let m = ctx.exp(&self.re)?;
        if self.im.is_zero() {
            return Ok(ComplexVal::real(ctx, m));
        }
        Ok(ComplexVal::new(
            ctx.mul(&m, &ctx.cos(&self.im)),
            ctx.mul(&m, &ctx.sin(&self.im)),
        ))
    }

    /// `base^(-self)` for a positive real base (principal branch).
    pub fn pow_neg_of(&self, ctx: &Ctx, base: &Real) -> Result<Self> {
        if !ctx.is_positive(base) {
            return Err(Error::Domain("power of a non-positive base".into()));
        }
        let l = ctx.ln(base)?;
        ComplexVal::new(ctx.mul(&self.re, &l).neg(), ctx.mul(&self.im, &l).neg()).exp(ctx)
    }

    /// `self^n` for a machine integer `n`.
    pub fn powi(&self, ctx: &Ctx, n: usize) -> Self {
        let mut acc = ComplexVal::one(ctx);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(ctx, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(ctx, &base);
            }
        }
        acc
    }

    /// Relative deviation `|self - other| / max(|other|, floor)`.
    pub fn rel_dev(&self, ctx: &Ctx, other: &Self, floor: f64) -> f64 {
        let d = self.sub(ctx, other).abs_f64();
        d / other.abs_f64().max(floor)
    }

    pub fn format(&self, ctx: &Ctx, digits: usize) -> String {
        let re = ctx.format_sci(&self.re, digits);
        if self.im.is_zero() {
            return re;
        }
        let im = ctx.format_sci(&self.im, digits);
        if im.starts_with('-') {
            format!("{re} - {}i", &im[1..])
        } else {
            format!("{re} + {im}i")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn precision_floor() {
        assert!(Precision::new(52).is_err());
        assert_eq!(Precision::new(128).unwrap().decimal_digits(), 38);
    }

    #[test]
    fn rational_conversion_round_trips_through_f64() {
        let ctx = Ctx::new(Precision::default()).unwrap();
        let v = ctx.from_rational(&rat(-7, 3));
        assert!((ctx.to_f64(&v) + 7.0 / 3.0).abs() < 1e-15);
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let b = ctx.from_bigint(&big);
        assert!((ctx.to_f64(&b) / 1.2345678901234568e29 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sci_formatting_rounds() {
        let ctx = Ctx::new(Precision::default()).unwrap();
        let pi = ctx.pi();
        assert_eq!(ctx.format_sci(&pi, 5), "3.1416e+0");
        assert_eq!(ctx.format_sci(&ctx.from_f64(-0.0099999), 3), "-1.00e-2");
        assert_eq!(ctx.format_sci(&ctx.zero(), 3), "0.00e+0");
        assert_eq!(ctx.format_sci(&ctx.from_i64(1234), 2), "1.2e+3");
    }

    #[test]
    fn complex_exp_on_unit_circle() {
        let ctx = Ctx::new(Precision::default()).unwrap();
        // exp(i*pi) = -1
        let z = ComplexVal::new(ctx.zero(), ctx.pi()).exp(&ctx).unwrap();
        assert!((ctx.to_f64(&z.re) + 1.0).abs() < 1e-30);
        assert!(ctx.to_f64(&z.im).abs() < 1e-30);
    }

    #[test]
    fn complex_division() {
        let ctx = Ctx::new(Precision::default()).unwrap();
        let a = ComplexVal::from_f64(&ctx, 1.0, 2.0);
        let b = ComplexVal::from_f64(&ctx, 3.0, -1.0);
        let q = a.div(&ctx, &b).unwrap();
        // (1+2i)/(3-i) = (1+7i)/10
        assert!((ctx.to_f64(&q.re) - 0.1).abs() < 1e-30);
        assert!((ctx.to_f64(&q.im) - 0.7).abs() < 1e-30);
    }
}
