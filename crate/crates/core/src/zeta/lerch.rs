//! The Lerch transcendent `Phi(z,s,u) = sum_{n>=0} z^n / (n+u)^s` and the
//! special functions that are cases of it.

use std::sync::OnceLock;

use super::accel::{direct_sum, euler_transform, Summed};
use crate::classical::ClassicalTable;
use crate::error::{Error, Result};
use crate::exact::{factorial, BigRational};
use crate::numeric::{to_f64, ComplexVal, Ctx, Real};

/// Ratio `|z|` up to which plain summation is used.
const DIRECT_RADIUS: f64 = 0.9;
/// Bound on `|z / (1-z)|` for the Euler transform.
const EULER_RATIO: f64 = 0.5;
const MAX_SPLIT_DEPTH: usize = 12;
const MAX_EM_ORDER: usize = 64;

fn internal_tol(ctx: &Ctx) -> f64 {
    ctx.precision().target_rel_err / 16.0
}

fn term_budget(ctx: &Ctx) -> usize {
    8 * ctx.work_bits() + 64
}

/// `(n + u)^(-s)`
fn power_term(ctx: &Ctx, s: &ComplexVal, u: &Real, n: usize) -> Result<ComplexVal> {
    let base = ctx.add(&ctx.from_usize(n), u);
    s.pow_neg_of(ctx, &base)
}

fn is_real_int(ctx: &Ctx, z: &ComplexVal, v: i64) -> bool {
    z.im.is_zero() && ctx.cmp(&z.re, &ctx.from_i64(v)) == std::cmp::Ordering::Equal
}

fn is_one(ctx: &Ctx, z: &ComplexVal) -> bool {
    is_real_int(ctx, z, 1)
}

/// `Phi(z, s, u)` with an absolute error estimate.
///
/// Domain: `u > 0`; `|z| < 1`; `z = 1` with `Re s > 1`; `z = -1` with
/// `Re s > 0`; other `|z| = 1` with `Re s > 1`.
pub fn lerch_phi(ctx: &Ctx, z: &ComplexVal, s: &ComplexVal, u: &Real) -> Result<Summed> {
    if !ctx.is_positive(u) {
        return Err(Error::Domain("Lerch transcendent needs u > 0".into()));
    }
    let zabs = z.abs_f64();
    let re_s = to_f64(&s.re);
    if zabs > 1.0 + 1e-15 {
        return Err(Error::Domain(format!("|z| = {zabs} exceeds 1")));
    }
    if is_one(ctx, z) {
        return hurwitz(ctx, s, u);
    }
    let on_circle = (zabs - 1.0).abs() <= 1e-15;
    if on_circle {
        let needed = if is_real_int(ctx, z, -1) { 0.0 } else { 1.0 };
        if re_s <= needed {
            return Err(Error::Domain(format!(
                "|z| = 1 needs Re s > {needed}, got Re s = {re_s}"
            )));
        }
    }
    phi_inner(ctx, z, s, u, 0)
}

fn phi_inner(ctx: &Ctx, z: &ComplexVal, s: &ComplexVal, u: &Real, depth: usize) -> Result<Summed> {
    if z.is_zero() {
        return Ok(Summed {
            value: power_term(ctx, s, u, 0)?,
            abs_err: 0.0,
            terms: 1,
        });
    }
    if is_one(ctx, z) {
        return hurwitz(ctx, s, u);
    }
    let zabs = z.abs_f64();
    let tol = internal_tol(ctx);
    if zabs <= DIRECT_RADIUS {
        let re_s = to_f64(&s.re);
        let u64v = to_f64(u);
        let mut zn = ComplexVal::one(ctx);
        return direct_sum(
            ctx,
            tol,
            100_000,
            |n| {
                if n > 0 {
                    zn = zn.mul(ctx, z);
                }
                Ok(zn.mul(ctx, &power_term(ctx, s, u, n)?))
            },
            |n| zabs * (1.0 + 1.0 / (n as f64 + u64v)).powf((-re_s).max(0.0)),
        );
    }
    let one_minus = ComplexVal::one(ctx).sub(ctx, z).abs_f64();
    if zabs / one_minus <= EULER_RATIO + 1e-12 {
        return euler_transform(ctx, z, tol, term_budget(ctx), |n| power_term(ctx, s, u, n));
    }
    if depth >= MAX_SPLIT_DEPTH {
        return Err(Error::NoConvergence(format!(
            "no summation route for z = {} after {depth} splittings",
            z.format(ctx, 8)
        )));
    }
    // Phi(z,s,u) = 2^-s (Phi(z^2, s, u/2) + z Phi(z^2, s, (u+1)/2))
    let z2 = z.mul(ctx, z);
    let half = ctx.from_f64(0.5);
    let u_even = ctx.mul(u, &half);
    let u_odd = ctx.mul(&ctx.add(u, &ctx.one()), &half);
    let even = phi_inner(ctx, &z2, s, &u_even, depth + 1)?;
    let odd = phi_inner(ctx, &z2, s, &u_odd, depth + 1)?;
    let two_s = s.pow_neg_of(ctx, &ctx.from_i64(2))?;
    let inner = even.value.add(ctx, &z.mul(ctx, &odd.value));
    let scale = two_s.abs_f64();
    Ok(Summed {
        value: two_s.mul(ctx, &inner),
        abs_err: scale * (even.abs_err + zabs * odd.abs_err),
        terms: even.terms + odd.terms,
    })
}

fn bernoulli_table() -> &'static ClassicalTable {
    static TABLE: OnceLock<ClassicalTable> = OnceLock::new();
    TABLE.get_or_init(|| ClassicalTable::new(2 * MAX_EM_ORDER))
}

/// Hurwitz zeta `zeta(s, u) = Phi(1, s, u)` for `Re s > 1`: a partial sum of
/// `N` terms plus the Euler-Maclaurin tail
/// `(N+u)^(1-s)/(s-1) + (N+u)^(-s)/2 + sum_j B_2j/(2j)! (s)_(2j-1) (N+u)^(1-s-2j)`.
pub fn hurwitz(ctx: &Ctx, s: &ComplexVal, u: &Real) -> Result<Summed> {
    let re_s = to_f64(&s.re);
    if !(re_s > 1.0) {
        return Err(Error::Domain(format!(
            "Hurwitz zeta series needs Re s > 1, got {re_s}"
        )));
    }
    if !ctx.is_positive(u) {
        return Err(Error::Domain("Hurwitz zeta needs u > 0".into()));
    }
    let tol = internal_tol(ctx);
    let big_n = ctx.work_bits() + s.abs_f64().ceil() as usize;
    let mut sum = ComplexVal::zero(ctx);
    for n in 0..big_n {
        sum = sum.add(ctx, &power_term(ctx, s, u, n)?);
    }
    let nu = ctx.add(&ctx.from_usize(big_n), u);
    let f_n = s.pow_neg_of(ctx, &nu)?;
    let one = ComplexVal::one(ctx);
    let s_minus_1 = s.sub(ctx, &one);
    // (N+u)^(1-s) = (N+u) (N+u)^(-s)
    let integral = f_n.scale(ctx, &nu).div(ctx, &s_minus_1)?;
    sum = sum.add(ctx, &integral);
    sum = sum.add(ctx, &f_n.scale(ctx, &ctx.from_f64(0.5)));

    let inv_nu = ctx.div(&ctx.one(), &nu)?;
    let inv_nu2 = ctx.mul(&inv_nu, &inv_nu);
    // poch = (s)_(2j-1), pw = (N+u)^(1-s-2j)
    let mut poch = s.clone();
    let mut pw = f_n.scale(ctx, &inv_nu);
    let b = bernoulli_table();
    let mut prev = f64::INFINITY;
    for j in 1..=MAX_EM_ORDER {
        if j > 1 {
            let k = 2 * j - 3;
            let sk = s.add(ctx, &ComplexVal::real(ctx, ctx.from_usize(k)));
            let sk1 = s.add(ctx, &ComplexVal::real(ctx, ctx.from_usize(k + 1)));
            poch = poch.mul(ctx, &sk).mul(ctx, &sk1);
            pw = pw.scale(ctx, &inv_nu2);
        }
        let coef: BigRational = b.bernoulli(2 * j) / factorial(2 * j);
        let t = poch.mul(ctx, &pw).scale(ctx, &ctx.from_rational(&coef));
        sum = sum.add(ctx, &t);
        let tm = t.abs_f64();
        if tm <= tol * sum.abs_f64() {
            return Ok(Summed {
                abs_err: tm + (big_n + j) as f64 * ctx.eps() * sum.abs_f64(),
                value: sum,
                terms: big_n + j,
            });
        }
        if tm > prev {
            break;
        }
        prev = tm;
    }
    Err(Error::NoConvergence(
        "Euler-Maclaurin tail did not reach the target accuracy".into(),
    ))
}

/// Special functions reachable from `Phi`.
#[derive(Debug, Clone)]
pub enum Special {
    /// `zeta(s) = eta(s) / (1 - 2^(1-s))`, `Re s > 0`, `s != 1`.
    Riemann,
    /// `zeta(s, u) = Phi(1, s, u)`, `Re s > 1`.
    Hurwitz { u: Real },
    /// `eta(s) = sum_{n>=1} (-1)^(n-1) n^-s = Phi(-1, s, 1)`.
    Eta,
    /// `beta(s) = 2^-s Phi(-1, s, 1/2)`.
    Beta,
    /// `chi_s(z) = z 2^-s Phi(z^2, s, 1/2)`.
    Chi { z: ComplexVal },
    /// `Li_m(z) = z Phi(z, m, 1)`, integer `m >= 1`.
    Polylog { z: ComplexVal },
}

impl Special {
    pub fn name(&self) -> &'static str {
        match self {
            Special::Riemann => "riemann",
            Special::Hurwitz { .. } => "hurwitz",
            Special::Eta => "eta",
            Special::Beta => "beta",
            Special::Chi { .. } => "chi",
            Special::Polylog { .. } => "polylog",
        }
    }
}

pub fn special_value(ctx: &Ctx, kind: &Special, s: &ComplexVal) -> Result<Summed> {
    let minus_one = ComplexVal::real(ctx, ctx.from_i64(-1));
    let half = ctx.from_f64(0.5);
    let two = ctx.from_i64(2);
    let re_s = to_f64(&s.re);
    match kind {
        Special::Riemann => {
            if re_s <= 0.0 {
                return Err(Error::Domain("zeta via eta needs Re s > 0".into()));
            }
            let one = ComplexVal::one(ctx);
            // 1 - 2^(1-s) = 1 - 2 * 2^-s
            let d = one.sub(ctx, &s.pow_neg_of(ctx, &two)?.scale(ctx, &two));
            if d.abs_f64() == 0.0 || s.sub(ctx, &one).is_zero() {
                return Err(Error::Pole("zeta has a pole at s = 1".into()));
            }
            let eta = lerch_phi(ctx, &minus_one, s, &ctx.one())?;
            let dabs = d.abs_f64();
            Ok(Summed {
                value: eta.value.div(ctx, &d)?,
                abs_err: eta.abs_err / dabs,
                terms: eta.terms,
            })
        }
        Special::Hurwitz { u } => hurwitz(ctx, s, u),
        Special::Eta => lerch_phi(ctx, &minus_one, s, &ctx.one()),
        Special::Beta => {
            let phi = lerch_phi(ctx, &minus_one, s, &half)?;
            scaled(ctx, phi, &s.pow_neg_of(ctx, &two)?)
        }
        Special::Chi { z } => {
            let z2 = z.mul(ctx, z);
            let phi = lerch_phi(ctx, &z2, s, &half)?;
            scaled(ctx, phi, &z.mul(ctx, &s.pow_neg_of(ctx, &two)?))
        }
        Special::Polylog { z } => {
            if !s.is_real() || re_s < 1.0 || re_s.fract() != 0.0 {
                return Err(Error::Domain(format!(
                    "polylogarithm order must be an integer >= 1, got {}",
                    s.format(ctx, 6)
                )));
            }
            if re_s == 1.0 && is_one(ctx, z) {
                return Err(Error::Pole("Li_1 has a pole at z = 1".into()));
            }
            let phi = lerch_phi(ctx, z, s, &ctx.one())?;
            scaled(ctx, phi, z)
        }
    }
}

fn scaled(ctx: &Ctx, v: Summed, k: &ComplexVal) -> Result<Summed> {
    let m = k.abs_f64();
    Ok(Summed {
        value: v.value.mul(ctx, k),
        abs_err: v.abs_err * m,
        terms: v.terms,
    })
}
