//! Sparse multivariate polynomials over `Q` in five fixed indeterminates.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::BigRational;
use crate::numeric::{Ctx, Real};

/// The indeterminates: `ln a`, `ln b`, `ln c`, `x`, `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    La,
    Lb,
    Lc,
    X,
    Y,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::La, Var::Lb, Var::Lc, Var::X, Var::Y];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::La => "La",
            Var::Lb => "Lb",
            Var::Lc => "Lc",
            Var::X => "X",
            Var::Y => "Y",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector, ordered graded-lexicographically with `La > Lb > Lc > X > Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; 5];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 5]
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial; zero coefficients are never stored, so equality of
/// polynomials is structural equality of the term maps.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        MPoly::monomial(Monomial::ONE, c)
    }

    pub fn int(c: i64) -> Self {
        MPoly::constant(crate::exact::int(c))
    }

    pub fn var(v: Var) -> Self {
        MPoly::monomial(Monomial::var(v), BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant term (zero if absent).
    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&Monomial::ONE)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest exponent of `v` over all terms; `None` for the zero polynomial.
    pub fn min_degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    /// Variables that occur with non-zero exponent.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.degree_in(v) > 0)
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigRational) -> MPoly {
        if k.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution of the bound indeterminates.
    pub fn substitute(&self, subst: &Substitution) -> MPoly {
        let mut cache: [Vec<MPoly>; 5] = Default::default();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = [0u32; 5];
            let mut term = MPoly::constant(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                match &subst.images[v.index()] {
                    None => kept[v.index()] = e,
                    Some(img) => {
                        let powers = &mut cache[v.index()];
                        if powers.is_empty() {
                            powers.push(MPoly::one());
                        }
                        while powers.len() <= e as usize {
                            let next = powers.last().unwrap() * img;
                            powers.push(next);
                        }
                        term = &term * &powers[e as usize];
                    }
                }
            }
            let shift = Monomial(kept);
            for (tm, tc) in term.terms {
                out.add_term(tm.mul(&shift), tc);
            }
        }
        out
    }

    /// Exchange two indeterminates.
    pub fn swap(&self, a: Var, b: Var) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0;
                    e.swap(a.index(), b.index());
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Exact evaluation; every occurring indeterminate must be bound.
    pub fn eval_rational(&self, point: &Point<BigRational>) -> Result<BigRational> {
        self.bound_check(point)?;
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    let x = point.get(v).expect("checked above");
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Floating evaluation, each monomial formed at working precision.
    pub fn eval_float(&self, point: &Point<Real>, ctx: &Ctx) -> Result<Real> {
        self.bound_check(point)?;
        let mut acc = ctx.zero();
        for (m, c) in &self.terms {
            let mut t = ctx.from_rational(c);
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    let x = point.get(v).expect("checked above");
                    t = ctx.mul(&t, &ctx.powi(x, e as usize));
                }
            }
            acc = ctx.add(&acc, &t);
        }
        Ok(acc)
    }

    fn bound_check<T>(&self, point: &Point<T>) -> Result<()> {
        for v in self.variables() {
            if point.get(v).is_none() {
                return Err(Error::Unbound(v));
            }
        }
        Ok(())
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical rendering: terms in descending graded-lex order, e.g. `2*Lc*X - La - Lb`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                f.write_str(&fmt_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_coeff(&abs))?;
            }
        }
        Ok(())
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -self.clone()
    }
}

/// Images for a simultaneous substitution; unbound indeterminates stay put.
#[derive(Debug, Clone, Default)]
pub struct Substitution {
    images: [Option<MPoly>; 5],
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    pub fn with(mut self, v: Var, image: MPoly) -> Self {
        self.images[v.index()] = Some(image);
        self
    }

    pub fn get(&self, v: Var) -> Option<&MPoly> {
        self.images[v.index()].as_ref()
    }
}

/// Values bound to (some of) the indeterminates.
#[derive(Debug, Clone)]
pub struct Point<T> {
    values: [Option<T>; 5],
}

impl<T> Default for Point<T> {
    fn default() -> Self {
        Point {
            values: [None, None, None, None, None],
        }
    }
}

impl<T> Point<T> {
    pub fn new() -> Self {
        Point::default()
    }

    pub fn with(mut self, v: Var, value: T) -> Self {
        self.values[v.index()] = Some(value);
        self
    }

    pub fn set(&mut self, v: Var, value: T) {
        self.values[v.index()] = Some(value);
    }

    pub fn get(&self, v: Var) -> Option<&T> {
        self.values[v.index()].as_ref()
    }
}
