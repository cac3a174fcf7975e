//! Alternating power sums `sum_{k=0}^{m-1} (-1)^k k^n` from the Genocchi-type
//! polynomials at `a = 1, c = b`.
//!
//! Multiplying `F(t;1,b) = 2t/(b^t + 1)` by `sum_k (-1)^k b^(kt)` gives
//!
//! ```text
//! G_N(1,b) - (-1)^m G_N(m;1,b,b) = 2 N Lb^(N-1) sum_k (-1)^k k^(N-1)
//! ```
//!
//! so the power `n` sum is read off at index `N = n + 1`. The statement
//! evaluated by [`alt_power_sum_formula`] uses index `N = n` and divides by
//! `2 n Lb^n`, which cannot cancel; it is kept as an audit item.

use std::fmt;

use num_traits::Zero;

use crate::classical::ClassicalTable;
use crate::error::{Error, Result};
use crate::exact::{int, BigRational, MPoly, Point, Substitution, Var};
use crate::param::{g_number, g_poly};
use crate::report::IdentityReport;

/// Both sides of an alternating-sum formula at one `(n, m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AltSumWitness {
    pub n: usize,
    pub m: usize,
    pub direct: BigRational,
    pub via_formula: BigRational,
}

impl AltSumWitness {
    pub fn agrees(&self) -> bool {
        self.direct == self.via_formula
    }
}

/// Which index the Genocchi-type side is taken at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaIndex {
    /// Index `n`, divided by `2 n Lb^n`.
    Printed,
    /// Index `n + 1`, divided by `2 (n+1) Lb^n`.
    Shifted,
}

impl fmt::Display for FormulaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaIndex::Printed => "printed",
            FormulaIndex::Shifted => "shifted",
        })
    }
}

fn check_args(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::Domain(format!(
            "alternating sums need n >= 1 and m >= 1, got n = {n}, m = {m}"
        )));
    }
    Ok(())
}

/// `sum_{k=0}^{m-1} (-1)^k k^n` by direct summation (`0^n = 0`).
pub fn alt_power_sum_direct(n: usize, m: usize) -> BigRational {
    let mut acc = num_bigint::BigInt::zero();
    for k in 1..m {
        let p = num_traits::pow(num_bigint::BigInt::from(k), n);
        if k % 2 == 0 {
            acc += p;
        } else {
            acc -= p;
        }
    }
    BigRational::from_integer(acc)
}

/// Numerator, symbolic in `Lb`, at Genocchi index `idx`, given
/// `G_idx(a,b)` and `G_idx(x;a,b,c)`.
fn numerator(number: &MPoly, poly: &MPoly, m: usize) -> MPoly {
    let a_one = Substitution::new().with(Var::La, MPoly::zero());
    let at_m = Substitution::new()
        .with(Var::La, MPoly::zero())
        .with(Var::Lc, MPoly::var(Var::Lb))
        .with(Var::X, MPoly::int(m as i64));
    let second = poly.substitute(&at_m);
    let first = number.substitute(&a_one);
    if m % 2 == 0 {
        &first - &second
    } else {
        &first + &second
    }
}

/// Divide a polynomial in `Lb` by `Lb^k`, insisting on a constant quotient.
fn constant_quotient(num: &MPoly, k: u32) -> Result<BigRational> {
    if num.is_zero() {
        return Ok(BigRational::zero());
    }
    let mut q: Option<BigRational> = None;
    for (mono, c) in num.terms() {
        let only_lb = Var::ALL
            .iter()
            .all(|v| *v == Var::Lb || mono.exp(*v) == 0);
        if !only_lb || mono.exp(Var::Lb) != k {
            return Err(Error::IdentityViolation(format!(
                "numerator {num} is not a constant multiple of Lb^{k}"
            )));
        }
        q = Some(c.clone());
    }
    Ok(q.unwrap_or_else(BigRational::zero))
}

fn formula_with(
    index: FormulaIndex,
    n: usize,
    m: usize,
    number: &MPoly,
    poly: &MPoly,
) -> Result<BigRational> {
    let num = numerator(number, poly, m);
    let big_n = match index {
        FormulaIndex::Printed => n,
        FormulaIndex::Shifted => n + 1,
    };
    let q = constant_quotient(&num, n as u32)?;
    Ok(q / int(2 * big_n as i64))
}

fn index_polys(index: FormulaIndex, n: usize) -> (MPoly, MPoly) {
    let idx = match index {
        FormulaIndex::Printed => n,
        FormulaIndex::Shifted => n + 1,
    };
    (g_number(idx).value, g_poly(idx).value)
}

/// The statement as printed:
/// `(G_n(1,b) - (-1)^m G_n(m;1,b,b)) / (2 n Lb^n)`, symbolic in `Lb`.
///
/// Fails with [`Error::IdentityViolation`] unless the numerator is a constant
/// multiple of `Lb^n`.
pub fn alt_power_sum_formula(n: usize, m: usize) -> Result<BigRational> {
    check_args(n, m)?;
    let (number, poly) = index_polys(FormulaIndex::Printed, n);
    formula_with(FormulaIndex::Printed, n, m, &number, &poly)
}

/// `(G_{n+1}(1,b) - (-1)^m G_{n+1}(m;1,b,b)) / (2 (n+1) Lb^n)`, symbolic in `Lb`.
pub fn alt_power_sum_formula_shifted(n: usize, m: usize) -> Result<BigRational> {
    check_args(n, m)?;
    let (number, poly) = index_polys(FormulaIndex::Shifted, n);
    formula_with(FormulaIndex::Shifted, n, m, &number, &poly)
}

pub fn alt_sum_witness(index: FormulaIndex, n: usize, m: usize) -> Result<AltSumWitness> {
    let via_formula = match index {
        FormulaIndex::Printed => alt_power_sum_formula(n, m)?,
        FormulaIndex::Shifted => alt_power_sum_formula_shifted(n, m)?,
    };
    Ok(AltSumWitness {
        n,
        m,
        direct: alt_power_sum_direct(n, m),
        via_formula,
    })
}

/// `(E_n - (-1)^m E_n(m)) / 2` from the classical Euler numbers and polynomials.
pub fn euler_variant_value(table: &ClassicalTable, n: usize, m: usize) -> BigRational {
    let at = Point::new().with(Var::X, int(m as i64));
    let em = table
        .euler_poly(n)
        .eval_rational(&at)
        .expect("only X occurs");
    let signed = if m % 2 == 0 { em } else { -em };
    (table.euler(n) - signed) / int(2)
}

pub fn euler_variant_check(n: usize, m: usize) -> IdentityReport {
    let table = ClassicalTable::new(n);
    let diff = alt_power_sum_direct(n, m) - euler_variant_value(&table, n, m);
    IdentityReport::exact(
        "altsum-euler-variant",
        [("n", n.to_string()), ("m", m.to_string())],
        diff,
    )
}

/// Outcome of the formula route over `m = 1..=max_m` at a fixed `n`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FormulaSweep {
    pub matched: Vec<usize>,
    pub mismatched: Vec<usize>,
    pub violations: Vec<usize>,
}

impl FormulaSweep {
    pub fn all_match(&self) -> bool {
        self.mismatched.is_empty() && self.violations.is_empty()
    }

    fn describe(&self) -> String {
        let part = |label: &str, v: &[usize]| {
            if v.is_empty() {
                None
            } else {
                Some(format!("{label} m in {}", ranges(v)))
            }
        };
        [
            part("identity violation for", &self.violations),
            part("wrong value for", &self.mismatched),
            part("match for", &self.matched),
        ]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("; ")
    }
}

/// `1,2,3,5` -> `1..3,5`
fn ranges(v: &[usize]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < v.len() {
        let start = v[i];
        let mut end = start;
        while i + 1 < v.len() && v[i + 1] == end + 1 {
            i += 1;
            end = v[i];
        }
        out.push(if start == end {
            start.to_string()
        } else if end == start + 1 {
            format!("{start},{end}")
        } else {
            format!("{start}..{end}")
        });
        i += 1;
    }
    out.join(",")
}

pub fn formula_sweep(index: FormulaIndex, n: usize, max_m: usize) -> Result<FormulaSweep> {
    check_args(n, max_m)?;
    let (number, poly) = index_polys(index, n);
    let mut sweep = FormulaSweep::default();
    for m in 1..=max_m {
        match formula_with(index, n, m, &number, &poly) {
            Ok(v) if v == alt_power_sum_direct(n, m) => sweep.matched.push(m),
            Ok(_) => sweep.mismatched.push(m),
            Err(Error::IdentityViolation(_)) => sweep.violations.push(m),
            Err(e) => return Err(e),
        }
    }
    Ok(sweep)
}

/// One report per `n` for each of the Euler-polynomial variant, the printed
/// formula and the shifted formula, each summarising `m = 1..=max_m`.
pub fn altsum_reports(max_n: usize, max_m: usize) -> Vec<IdentityReport> {
    let table = ClassicalTable::new(max_n);
    let mut out = Vec::new();
    for n in 1..=max_n {
        let params = || [("n", n.to_string()), ("m_max", max_m.to_string())];
        let bad: Vec<usize> = (1..=max_m)
            .filter(|&m| alt_power_sum_direct(n, m) != euler_variant_value(&table, n, m))
            .collect();
        out.push(if bad.is_empty() {
            IdentityReport::exact("altsum-euler-variant", params(), BigRational::zero())
        } else {
            IdentityReport::failed_with(
                "altsum-euler-variant",
                params(),
                format!("wrong value for m in {}", ranges(&bad)),
            )
        });
        for (id, index) in [
            ("altsum-formula-printed", FormulaIndex::Printed),
            ("altsum-formula-shifted", FormulaIndex::Shifted),
        ] {
            out.push(match formula_sweep(index, n, max_m) {
                Ok(s) if s.all_match() => {
                    IdentityReport::exact(id, params(), BigRational::zero())
                }
                Ok(s) => IdentityReport::failed_with(id, params(), s.describe()),
                Err(e) => IdentityReport::domain_error(id, params(), &e),
            });
        }
    }
    out
}
