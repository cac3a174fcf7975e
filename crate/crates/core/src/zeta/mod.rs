//! The interpolating function
//!
//! ```text
//! Z(s, x; a, b, c) = 2 sum_{n>=0} (-1)^n / alpha_n^s,
//! alpha_n = x ln c - ln a + n ln(b/a)
//! ```
//!
//! its values at non-positive integers, the odd-`y` distribution relation,
//! and the relations to the Lerch transcendent.

pub mod accel;
pub mod lerch;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, BigRational, MPoly, Point, Var};
use crate::numeric::{to_f64, ComplexVal, Ctx, Real};
use crate::param::g_poly;
use crate::report::IdentityReport;

pub use accel::{DiffTable, Summed};
pub use lerch::{hurwitz, lerch_phi, special_value, Special};

/// Relative tolerance for comparing negative-integer values with the
/// polynomial side.
pub const INTERPOLATION_REL_TOL: f64 = 1e-10;

/// Catalan's constant `beta(2)` to 100 digits, as an external reference.
pub const CATALAN: &str = "0.9159655941772190150546035149323841107741493742816721342664981196217630197762547694793565129261151062";

/// Parse `1.25`, `-3`, `7/4` or `2.5e-3` exactly.
pub fn parse_exact(s: &str) -> Result<BigRational> {
    let bad = || Error::Usage(format!("not an exact number: {s:?}"));
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    if ip.is_empty() && fp.is_empty()
        || !ip.bytes().chain(fp.bytes()).all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{ip}{fp}0").parse().map_err(|_| bad())?;
    let mut v = BigRational::new(digits, BigInt::from(10));
    let shift = exp - fp.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    v *= if shift >= 0 {
        num_traits::pow(ten, shift as usize)
    } else {
        BigRational::one() / num_traits::pow(ten, (-shift) as usize)
    };
    Ok(if neg { -v } else { v })
}

/// A positive parameter, either an exact rational or Euler's number `e`
/// (whose logarithm is exactly 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosParam {
    Rational(BigRational),
    E,
}

impl PosParam {
    pub fn ln(&self, ctx: &Ctx) -> Result<Real> {
        match self {
            PosParam::E => Ok(ctx.one()),
            PosParam::Rational(r) => ctx.ln(&ctx.from_rational(r)),
        }
    }
}

impl FromStr for PosParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "e" {
            return Ok(PosParam::E);
        }
        let r = parse_exact(s)?;
        if !r.is_positive() {
            return Err(Error::Usage(format!("parameter must be positive, got {s}")));
        }
        Ok(PosParam::Rational(r))
    }
}

impl fmt::Display for PosParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosParam::E => f.write_str("e"),
            PosParam::Rational(r) => f.write_str(&rational_label(r)),
        }
    }
}

/// Short decimal label for an exact value (`3/10` -> `0.3`).
pub fn rational_label(r: &BigRational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    // terminating decimals print exactly; others as p/q
    let mut d = r.denom().clone();
    for p in [2u32, 5] {
        while (&d % p).is_zero() {
            d /= p;
        }
    }
    if d.is_one() {
        let mut digits = 0;
        let mut scaled = r.clone();
        let ten = BigRational::from_integer(BigInt::from(10));
        while !scaled.is_integer() {
            scaled *= &ten;
            digits += 1;
        }
        let n = scaled.numer().abs().to_string();
        let n = format!("{:0>width$}", n, width = digits + 1);
        let (ip, fp) = n.split_at(n.len() - digits);
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}{ip}.{fp}")
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Positive parameters `a, b, c` with `a != b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamTriple {
    pub a: PosParam,
    pub b: PosParam,
    pub c: PosParam,
}

impl ParamTriple {
    pub fn new(a: PosParam, b: PosParam, c: PosParam) -> Result<Self> {
        if a == b {
            return Err(Error::Usage(format!("parameters need a != b, got a = b = {a}")));
        }
        Ok(ParamTriple { a, b, c })
    }

    /// `(ln a, ln b, ln c)`
    pub fn logs(&self, ctx: &Ctx) -> Result<(Real, Real, Real)> {
        Ok((self.a.ln(ctx)?, self.b.ln(ctx)?, self.c.ln(ctx)?))
    }

    /// The point `La, Lb, Lc, X = x` for evaluating polynomials.
    pub fn point(&self, ctx: &Ctx, x: &BigRational) -> Result<Point<Real>> {
        let (la, lb, lc) = self.logs(ctx)?;
        Ok(Point::new()
            .with(Var::La, la)
            .with(Var::Lb, lb)
            .with(Var::Lc, lc)
            .with(Var::X, ctx.from_rational(x)))
    }
}

impl FromStr for ParamTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Usage(format!("expected a,b,c, got {s:?}")));
        }
        ParamTriple::new(parts[0].parse()?, parts[1].parse()?, parts[2].parse()?)
    }
}

impl fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

/// `alpha_n = alpha0 + n step`.
#[derive(Debug, Clone)]
pub struct AlphaSequence {
    pub alpha0: Real,
    pub step: Real,
}

impl AlphaSequence {
    /// `alpha0 = x ln c - ln a`, `step = ln b - ln a`.
    pub fn new(ctx: &Ctx, x: &BigRational, params: &ParamTriple) -> Result<Self> {
        let (la, lb, lc) = params.logs(ctx)?;
        Ok(Self::from_logs(ctx, &ctx.mul(&ctx.from_rational(x), &lc), &la, &lb))
    }

    /// From `x ln c`, `ln a`, `ln b`.
    pub fn from_logs(ctx: &Ctx, xlc: &Real, la: &Real, lb: &Real) -> Self {
        AlphaSequence {
            alpha0: ctx.sub(xlc, la),
            step: ctx.sub(lb, la),
        }
    }

    pub fn alpha(&self, ctx: &Ctx, n: usize) -> Real {
        ctx.add(&self.alpha0, &ctx.mul(&ctx.from_usize(n), &self.step))
    }

    /// Positive, increasing base points.
    pub fn check_domain(&self, ctx: &Ctx) -> Result<()> {
        if !ctx.is_positive(&self.step) || !ctx.is_positive(&self.alpha0) {
            return Err(Error::Domain(format!(
                "base sequence not positive increasing (alpha0 = {:e}, step = {:e})",
                to_f64(&self.alpha0),
                to_f64(&self.step)
            )));
        }
        Ok(())
    }
}

/// `2 sum_n (-1)^n alpha_n^(-s)` by the Euler transform, `Re s > 0`.
pub fn zeta_alpha(ctx: &Ctx, s: &ComplexVal, seq: &AlphaSequence) -> Result<Summed> {
    seq.check_domain(ctx)?;
    if !(to_f64(&s.re) > 0.0) {
        return Err(Error::Domain("the alternating series needs Re s > 0".into()));
    }
    let minus_one = ComplexVal::real(ctx, ctx.from_i64(-1));
    let tol = ctx.precision().target_rel_err / 16.0;
    let budget = 8 * ctx.work_bits() + 64;
    let half = accel::euler_transform(ctx, &minus_one, tol, budget, |n| {
        s.pow_neg_of(ctx, &seq.alpha(ctx, n))
    })?;
    let two = ctx.from_i64(2);
    Ok(Summed {
        value: half.value.scale(ctx, &two),
        abs_err: 2.0 * half.abs_err,
        terms: half.terms,
    })
}

/// `Z(s, x; a, b, c)`.
pub fn zeta_g(ctx: &Ctx, s: &ComplexVal, x: &BigRational, params: &ParamTriple) -> Result<Summed> {
    zeta_alpha(ctx, s, &AlphaSequence::new(ctx, x, params)?)
}

/// Value of `Z(-n, x; a, b, c)` with the number of non-zero difference levels.
#[derive(Debug, Clone)]
pub struct NegIntValue {
    pub value: Real,
    pub levels: usize,
}

/// `Z(-n, x; a, b, c)` as the Euler-transform (Abel) value
/// `2 sum_{k<=n} (-1)^k Delta^k alpha_0^n / 2^(k+1)`, which is a finite sum.
pub fn zeta_g_neg_int(ctx: &Ctx, n: usize, x: &BigRational, params: &ParamTriple) -> Result<NegIntValue> {
    let seq = AlphaSequence::new(ctx, x, params)?;
    let a: Vec<Real> = (0..=n).map(|j| ctx.powi(&seq.alpha(ctx, j), n)).collect();
    let (value, levels) = accel::finite_alternating_transform(ctx, &a);
    Ok(NegIntValue { value, levels })
}

/// The same transform over `alpha_j = X Lc - La + j (Lb - La)` in exact
/// arithmetic. Errors if `Delta^(n+1)` does not vanish.
pub fn zeta_g_neg_int_exact(n: usize) -> Result<(MPoly, usize)> {
    let la = MPoly::var(Var::La);
    let step = &MPoly::var(Var::Lb) - &la;
    let alpha0 = &(&MPoly::var(Var::X) * &MPoly::var(Var::Lc)) - &la;
    // rows[k] = Delta^k a_0, built from a_0..a_(n+1)
    let mut a: Vec<MPoly> = (0..=n + 1)
        .map(|j| (&alpha0 + &step.scale(&int(j as i64))).pow(n as u32))
        .collect();
    let mut tops = Vec::with_capacity(n + 2);
    while !a.is_empty() {
        tops.push(a[0].clone());
        a = a.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    if !tops[n + 1].is_zero() {
        return Err(Error::IdentityViolation(format!(
            "difference of order {} does not vanish",
            n + 1
        )));
    }
    let levels = tops.iter().rposition(|t| !t.is_zero()).map_or(0, |i| i + 1);
    let mut value = MPoly::zero();
    let mut w = BigRational::one();
    for (k, t) in tops.iter().take(n + 1).enumerate() {
        // 2 (-1)^k / 2^(k+1) = (-1)^k / 2^k
        value += &t.scale(&(crate::exact::sign(k) * &w));
        w /= int(2);
    }
    Ok((value, levels))
}

fn s_label(s: &ComplexVal) -> String {
    let re = to_f64(&s.re);
    if s.is_real() {
        format!("{re}")
    } else {
        format!("{re}{:+}i", to_f64(&s.im))
    }
}

/// Compare `lhs` with `rhs` at relative tolerance `rel_tol`, the reference
/// magnitude floored at `2^(-bits/2)`.
pub fn numeric_report<K: Into<String>, I: IntoIterator<Item = (K, String)>>(
    ctx: &Ctx,
    id: &str,
    params: I,
    lhs: &ComplexVal,
    rhs: &ComplexVal,
    rel_tol: f64,
) -> IdentityReport {
    let floor = 2f64.powi(-(ctx.precision().mantissa_bits as i32) / 2);
    let scale = rhs.abs_f64().max(floor);
    let diff = lhs.sub(ctx, rhs).abs_f64();
    IdentityReport::numeric(id, params, diff, rel_tol * scale)
}

fn numeric_tol(ctx: &Ctx) -> f64 {
    10.0 * ctx.precision().target_rel_err
}

/// `Z(-(n-1))` and `Z(-n)` against `G_n(x;a,b,c)/n` evaluated from the exact
/// polynomial; ids `interpolation-derived` and `interpolation-printed`.
pub fn interpolation_check(
    ctx: &Ctx,
    n: usize,
    x: &BigRational,
    params: &ParamTriple,
) -> Result<Vec<IdentityReport>> {
    if n == 0 {
        return Err(Error::Domain("interpolation check needs n >= 1".into()));
    }
    let point = params.point(ctx, x)?;
    let g = g_poly(n).value.eval_float(&point, ctx)?;
    let rhs = ComplexVal::real(ctx, ctx.div(&g, &ctx.from_usize(n))?);
    let labels = || {
        [
            ("n", n.to_string()),
            ("x", rational_label(x)),
            ("params", params.to_string()),
        ]
    };
    let mut out = Vec::new();
    for (id, k) in [("interpolation-derived", n - 1), ("interpolation-printed", n)] {
        let lhs = zeta_g_neg_int(ctx, k, x, params)?;
        out.push(numeric_report(
            ctx,
            id,
            labels(),
            &ComplexVal::real(ctx, lhs.value),
            &rhs,
            INTERPOLATION_REL_TOL,
        ));
    }
    Ok(out)
}

/// Exact counterparts over symbolic `La, Lb, Lc, X`, plus the bound on the
/// number of difference levels.
pub fn interpolation_exact_checks(max_n: usize) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let target = g_poly(n).value.scale(&(BigRational::one() / int(n as i64)));
        let p = [("n", n.to_string())];
        for (id, k) in [
            ("interpolation-exact-derived", n - 1),
            ("interpolation-exact-printed", n),
        ] {
            match zeta_g_neg_int_exact(k) {
                Ok((v, levels)) => {
                    out.push(IdentityReport::exact(id, p.clone(), &v - &target));
                    if k == n - 1 {
                        let excess = levels.saturating_sub(k + 1) as i64;
                        out.push(IdentityReport::exact(
                            "euler-transform-levels",
                            [("n", k.to_string())],
                            int(excess),
                        ));
                    }
                }
                Err(e) => out.push(IdentityReport::failed_with(id, p.clone(), e.to_string())),
            }
        }
    }
    out
}

fn domain_like(e: &Error) -> bool {
    matches!(e, Error::Domain(_) | Error::Pole(_))
}

/// Evaluate a numeric identity, turning domain failures into a
/// `domain_error` report.
fn guarded<K, I, F>(id: &str, params: I, f: F) -> Result<IdentityReport>
where
    K: Into<String>,
    I: IntoIterator<Item = (K, String)>,
    F: FnOnce(Vec<(String, String)>) -> Result<IdentityReport>,
{
    let params: Vec<(String, String)> = params.into_iter().map(|(k, v)| (k.into(), v)).collect();
    match f(params.clone()) {
        Ok(r) => Ok(r),
        Err(e) if domain_like(&e) => Ok(IdentityReport::domain_error(id, params, &e)),
        Err(e) => Err(e),
    }
}

/// Distribution relation for odd `y`.
///
/// `distribution-derived`:
/// `Z(s,x;a,b,c) = y^-s sum_{j<y} (-1)^j Z(s,1;a,b,c_j)`,
/// `ln c_j = (x ln c + j ln b + (y-1-j) ln a) / y`.
///
/// `distribution-printed`:
/// `Z(s,1;a,b,1) = y^-s sum_{j=1}^{y} (-1)^j Z(s,1;a,b,c_j)`,
/// `c_j = b^(j/y) / a^((y+j-1)/y)`.
pub fn distribution_check(
    ctx: &Ctx,
    s: &ComplexVal,
    y: usize,
    x: &BigRational,
    params: &ParamTriple,
) -> Result<Vec<IdentityReport>> {
    if y == 0 || y % 2 == 0 {
        return Err(Error::Domain(format!(
            "distribution relation needs an odd positive y, got {y}"
        )));
    }
    let (la, lb, lc) = params.logs(ctx)?;
    let yr = ctx.from_usize(y);
    let y_s = s.pow_neg_of(ctx, &yr)?;
    let xr = ctx.from_rational(x);
    let tol = numeric_tol(ctx);

    let derived_params = [
        ("s", s_label(s)),
        ("y", y.to_string()),
        ("x", rational_label(x)),
        ("params", params.to_string()),
    ];
    let derived = guarded("distribution-derived", derived_params, |p| {
        let lhs = zeta_alpha(ctx, s, &AlphaSequence::from_logs(ctx, &ctx.mul(&xr, &lc), &la, &lb))?;
        let mut sum = ComplexVal::zero(ctx);
        for j in 0..y {
            let num = ctx.add(
                &ctx.add(&ctx.mul(&xr, &lc), &ctx.mul(&ctx.from_usize(j), &lb)),
                &ctx.mul(&ctx.from_usize(y - 1 - j), &la),
            );
            let lc_j = ctx.div(&num, &yr)?;
            let t = zeta_alpha(ctx, s, &AlphaSequence::from_logs(ctx, &lc_j, &la, &lb))?;
            sum = if j % 2 == 0 { sum.add(ctx, &t.value) } else { sum.sub(ctx, &t.value) };
        }
        Ok(numeric_report(ctx, "distribution-derived", p, &lhs.value, &y_s.mul(ctx, &sum), tol))
    })?;

    let printed_params = [
        ("s", s_label(s)),
        ("y", y.to_string()),
        ("params", params.to_string()),
    ];
    let printed = guarded("distribution-printed", printed_params, |p| {
        let lhs = zeta_alpha(ctx, s, &AlphaSequence::from_logs(ctx, &ctx.zero(), &la, &lb))?;
        let mut sum = ComplexVal::zero(ctx);
        for j in 1..=y {
            let num = ctx.sub(
                &ctx.mul(&ctx.from_usize(j), &lb),
                &ctx.mul(&ctx.from_usize(y + j - 1), &la),
            );
            let lc_j = ctx.div(&num, &yr)?;
            let t = zeta_alpha(ctx, s, &AlphaSequence::from_logs(ctx, &lc_j, &la, &lb))?;
            sum = if j % 2 == 0 { sum.add(ctx, &t.value) } else { sum.sub(ctx, &t.value) };
        }
        Ok(numeric_report(ctx, "distribution-printed", p, &lhs.value, &y_s.mul(ctx, &sum), tol))
    })?;
    Ok(vec![derived, printed])
}

fn e_triple() -> ParamTriple {
    ParamTriple::new(PosParam::Rational(BigRational::one()), PosParam::E, PosParam::E)
        .expect("1 != e")
}

/// `Z(s,x;1,e,e)` against `+2 Phi(-1,s,x)` (`zetaG-lerch-derived`) and the
/// printed `-2 Phi(-1,s,x)` (`zetaG-lerch-printed`).
pub fn lerch_relation_check(ctx: &Ctx, s: &ComplexVal, x: &BigRational) -> Result<Vec<IdentityReport>> {
    let params = || [("s", s_label(s)), ("x", rational_label(x))];
    let tol = numeric_tol(ctx);
    let mut out = Vec::new();
    for (id, sign) in [("zetaG-lerch-derived", 2), ("zetaG-lerch-printed", -2)] {
        out.push(guarded(id, params(), |p| {
            let z = zeta_g(ctx, s, x, &e_triple())?;
            let minus_one = ComplexVal::real(ctx, ctx.from_i64(-1));
            let phi = lerch_phi(ctx, &minus_one, s, &ctx.from_rational(x))?;
            let rhs = phi.value.scale(ctx, &ctx.from_i64(sign));
            Ok(numeric_report(ctx, id, p, &z.value, &rhs, tol))
        })?);
    }
    Ok(out)
}

/// `Z(s,1;1,e,e)` against `+2 eta(s)` and `-2 eta(s)`, with `eta` taken from
/// the Hurwitz route `(1 - 2^(1-s)) zeta(s)`; and the printed series
/// `2 sum_{n>=0} (-1)^n / n^s`, whose first term is singular.
pub fn eta_relation_check(ctx: &Ctx, s: &ComplexVal) -> Result<Vec<IdentityReport>> {
    let params = || [("s", s_label(s))];
    let tol = numeric_tol(ctx);
    let mut out = Vec::new();
    for (id, sign) in [("zetaG-x1-eta-derived", 2), ("zetaG-x1-eta-printed", -2)] {
        out.push(guarded(id, params(), |p| {
            let z = zeta_g(ctx, s, &BigRational::one(), &e_triple())?;
            let eta = eta_via_hurwitz(ctx, s)?;
            let rhs = eta.scale(ctx, &ctx.from_i64(sign));
            Ok(numeric_report(ctx, id, p, &z.value, &rhs, tol))
        })?);
    }
    out.push(guarded("zetaG-x1-series-printed", params(), |_| {
        Err(Error::Pole("term n = 0 of 2 sum (-1)^n / n^s is 2 / 0^s".into()))
    })?);
    Ok(out)
}

/// `eta(s) = (1 - 2^(1-s)) zeta(s)` with `zeta` from the Hurwitz evaluator.
pub fn eta_via_hurwitz(ctx: &Ctx, s: &ComplexVal) -> Result<ComplexVal> {
    let zeta = hurwitz(ctx, s, &ctx.one())?;
    let two = ctx.from_i64(2);
    let factor = ComplexVal::one(ctx).sub(ctx, &s.pow_neg_of(ctx, &two)?.scale(ctx, &two));
    Ok(factor.mul(ctx, &zeta.value))
}

/// Closed-form special values and cross-relations among the `Phi` cases.
pub fn special_value_checks(ctx: &Ctx, s_list: &[f64]) -> Result<Vec<IdentityReport>> {
    let tol = numeric_tol(ctx);
    let real = |v: &Real| ComplexVal::real(ctx, v.clone());
    let two = ComplexVal::real(ctx, ctx.from_i64(2));
    let one = ComplexVal::one(ctx);
    let pi = ctx.pi();
    let pi2 = ctx.mul(&pi, &pi);
    let none = Vec::<(&str, String)>::new;
    let mut out = Vec::new();

    let eta2 = special_value(ctx, &Special::Eta, &two)?;
    out.push(numeric_report(ctx, "special-eta2", none(), &eta2.value, &real(&ctx.div(&pi2, &ctx.from_i64(12))?), tol));
    let zeta2 = special_value(ctx, &Special::Riemann, &two)?;
    out.push(numeric_report(ctx, "special-zeta2-via-eta", none(), &zeta2.value, &real(&ctx.div(&pi2, &ctx.from_i64(6))?), tol));
    let beta2 = special_value(ctx, &Special::Beta, &two)?;
    out.push(numeric_report(ctx, "special-beta2-catalan", none(), &beta2.value, &real(&ctx.parse_decimal(CATALAN)?), tol));
    let chi2 = special_value(ctx, &Special::Chi { z: one.clone() }, &two)?;
    out.push(numeric_report(ctx, "special-chi2-at-1", none(), &chi2.value, &real(&ctx.div(&pi2, &ctx.from_i64(8))?), tol));
    let half = ComplexVal::real(ctx, ctx.from_f64(0.5));
    let li1 = special_value(ctx, &Special::Polylog { z: half }, &one)?;
    out.push(numeric_report(ctx, "special-polylog1-half", none(), &li1.value, &real(&ctx.ln2()), tol));

    for &sv in s_list {
        let s = ComplexVal::from_f64(ctx, sv, 0.0);
        let p = || [("s", s_label(&s))];
        out.push(guarded("special-eta-vs-hurwitz", p(), |p| {
            let eta = special_value(ctx, &Special::Eta, &s)?;
            Ok(numeric_report(ctx, "special-eta-vs-hurwitz", p, &eta.value, &eta_via_hurwitz(ctx, &s)?, tol))
        })?);
        out.push(guarded("special-chi-vs-hurwitz", p(), |p| {
            let chi = special_value(ctx, &Special::Chi { z: one.clone() }, &s)?;
            let zeta = hurwitz(ctx, &s, &ctx.one())?;
            let factor = one.sub(ctx, &s.pow_neg_of(ctx, &ctx.from_i64(2))?);
            Ok(numeric_report(ctx, "special-chi-vs-hurwitz", p, &chi.value, &factor.mul(ctx, &zeta.value), tol))
        })?);
    }
    Ok(out)
}
