//! Series summation: plain partial sums with a ratio tail bound, and the
//! generalized Euler transform
//!
//! ```text
//! sum_n z^n a_n = sum_k z^k / (1-z)^(k+1) Delta^k a_0
//! ```
//!
//! which for `z = -1` is the classical `sum_k (-1)^k Delta^k a_0 / 2^(k+1)`.

use crate::error::{Error, Result};
use crate::numeric::{ComplexVal, Ctx, Real};

/// A summed value with an estimate of its absolute error.
#[derive(Debug, Clone)]
pub struct Summed {
    pub value: ComplexVal,
    pub abs_err: f64,
    pub terms: usize,
}

/// Consecutive small terms required before a sum is accepted.
const QUIET_TERMS: usize = 3;

/// Forward differences of a sequence fed one term at a time; after `k + 1`
/// pushes, [`DiffTable::top`] is `Delta^k a_0`.
pub struct DiffTable {
    diag: Vec<ComplexVal>,
}

impl DiffTable {
    pub fn new() -> Self {
        DiffTable { diag: Vec::new() }
    }

    /// Push `a_k`; keeps `diag[j] = Delta^j a_(k-j)`.
    pub fn push(&mut self, ctx: &Ctx, a: ComplexVal) {
        let mut next = Vec::with_capacity(self.diag.len() + 1);
        next.push(a);
        for (j, old) in self.diag.iter().enumerate() {
            let d = next[j].sub(ctx, old);
            next.push(d);
        }
        self.diag = next;
    }

    pub fn top(&self) -> &ComplexVal {
        self.diag.last().expect("at least one term pushed")
    }

    pub fn levels(&self) -> usize {
        self.diag.len()
    }
}

impl Default for DiffTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Euler transform of `sum_n z^n a_n`, stopping once [`QUIET_TERMS`]
/// consecutive transformed terms fall below `rel_tol * |S|`.
pub fn euler_transform(
    ctx: &Ctx,
    z: &ComplexVal,
    rel_tol: f64,
    max_terms: usize,
    mut term: impl FnMut(usize) -> Result<ComplexVal>,
) -> Result<Summed> {
    let one_minus_z = ComplexVal::one(ctx).sub(ctx, z);
    let inv = one_minus_z.recip(ctx)?;
    let w = z.mul(ctx, &inv);
    let mut factor = inv;
    let mut table = DiffTable::new();
    let mut sum = ComplexVal::zero(ctx);
    let mut quiet = 0;
    let mut last = f64::INFINITY;
    for k in 0..max_terms {
        table.push(ctx, term(k)?);
        let t = factor.mul(ctx, table.top());
        sum = sum.add(ctx, &t);
        let tm = t.abs_f64();
        let sm = sum.abs_f64();
        last = tm;
        if tm <= rel_tol * sm || tm == 0.0 && k > 0 {
            quiet += 1;
            if quiet >= QUIET_TERMS {
                let rounding = (k + 1) as f64 * ctx.eps() * sm.max(tm);
                return Ok(Summed {
                    value: sum,
                    abs_err: 2.0 * tm + rounding,
                    terms: k + 1,
                });
            }
        } else {
            quiet = 0;
        }
        factor = factor.mul(ctx, &w);
    }
    Err(Error::NoConvergence(format!(
        "Euler transform not settled after {max_terms} terms (last term {last:e})"
    )))
}

/// Partial sums of `sum_n t_n` where `|t_(n+1)| <= ratio(n) |t_n|` for the
/// tail; `ratio(n) < 1` is required once the sum is accepted.
pub fn direct_sum(
    ctx: &Ctx,
    rel_tol: f64,
    max_terms: usize,
    mut term: impl FnMut(usize) -> Result<ComplexVal>,
    ratio: impl Fn(usize) -> f64,
) -> Result<Summed> {
    let mut sum = ComplexVal::zero(ctx);
    for n in 0..max_terms {
        let t = term(n)?;
        sum = sum.add(ctx, &t);
        let r = ratio(n);
        if r < 1.0 {
            let tail = t.abs_f64() * r / (1.0 - r);
            let sm = sum.abs_f64();
            if tail <= rel_tol * sm || sm == 0.0 && tail == 0.0 {
                let rounding = (n + 1) as f64 * ctx.eps() * sm;
                return Ok(Summed {
                    value: sum,
                    abs_err: tail + rounding,
                    terms: n + 1,
                });
            }
        }
    }
    Err(Error::NoConvergence(format!(
        "direct summation not settled after {max_terms} terms"
    )))
}

/// `2 sum_(k<=n) (-1)^k Delta^k a_0 / 2^(k+1)` over real terms, with the
/// number of difference levels that were non-zero.
pub fn finite_alternating_transform(ctx: &Ctx, a: &[Real]) -> (Real, usize) {
    let mut table = DiffTable::new();
    let mut sum = ctx.zero();
    let mut scale = ctx.from_f64(0.5);
    let half = ctx.from_f64(0.5);
    let mut levels = 0;
    for (k, ak) in a.iter().enumerate() {
        table.push(ctx, ComplexVal::real(ctx, ak.clone()));
        let d = &table.top().re;
        if !d.is_zero() {
            levels = k + 1;
        }
        let t = ctx.mul(d, &scale);
        sum = if k % 2 == 0 { ctx.add(&sum, &t) } else { ctx.sub(&sum, &t) };
        scale = ctx.mul(&scale, &half);
    }
    (ctx.mul_i64(&sum, 2), levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{to_f64, Precision};

    fn ctx() -> Ctx {
        Ctx::new(Precision::default()).unwrap()
    }

    #[test]
    fn differences_of_squares() {
        let c = ctx();
        let mut t = DiffTable::new();
        let mut tops = Vec::new();
        for k in 0..5 {
            t.push(&c, ComplexVal::from_f64(&c, (k * k) as f64, 0.0));
            tops.push(to_f64(&t.top().re));
        }
        assert_eq!(tops, vec![0.0, 1.0, 2.0, 0.0, 0.0]);
    }

    #[test]
    fn ln2_by_euler_transform() {
        let c = ctx();
        let minus_one = ComplexVal::from_f64(&c, -1.0, 0.0);
        // sum (-1)^n / (n+1) = ln 2
        let s = euler_transform(&c, &minus_one, 1e-36, 1000, |n| {
            let d = c.from_usize(n + 1);
            Ok(ComplexVal::real(&c, c.div(&c.one(), &d)?))
        })
        .unwrap();
        let err = to_f64(&c.sub(&s.value.re, &c.ln2())).abs();
        assert!(err < 1e-35, "{err:e}");
        assert!(s.abs_err < 1e-33);
    }

    #[test]
    fn geometric_direct_sum() {
        let c = ctx();
        let half = c.from_f64(0.5);
        let s = direct_sum(
            &c,
            1e-36,
            1000,
            |n| Ok(ComplexVal::real(&c, c.powi(&half, n))),
            |_| 0.5,
        )
        .unwrap();
        assert!((to_f64(&s.value.re) - 2.0).abs() < 1e-15);
        assert!(s.abs_err < 1e-35);
    }

    #[test]
    fn finite_transform_of_linear_sequence() {
        let c = ctx();
        // a_j = x + j with x = 0.25: value x - 1/2
        let a: Vec<Real> = (0..2).map(|j| c.from_f64(0.25 + j as f64)).collect();
        let (v, levels) = finite_alternating_transform(&c, &a);
        assert_eq!(to_f64(&v), -0.25);
        assert_eq!(levels, 2);
    }
}
