//! Truncated power series in `t` with polynomial coefficients.
//!
//! This is the ground truth the closed forms are checked against: the
//! generating function `(2t / (b^t + a^t))^k c^(xt)` is expanded by plain
//! series division and Cauchy products, with `a^t = e^(t La)` and so on.
//! Coefficients are stored as ordinary power-series coefficients (the `1/n!`
//! folded in); [`SeriesTrunc::egf_coeff`] rescales on the way out.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{factorial, int, BigRational, MPoly, Var};

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesTrunc {
    coeffs: Vec<MPoly>,
}

impl SeriesTrunc {
    /// Series `sum coeffs[n] t^n`; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<MPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        SeriesTrunc { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        SeriesTrunc::new(vec![MPoly::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = SeriesTrunc::zero(order);
        s.coeffs[0] = MPoly::one();
        s
    }

    /// The monomial `c t^k` truncated at `order`.
    pub fn monomial(order: usize, k: usize, c: MPoly) -> Self {
        let mut s = SeriesTrunc::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&MPoly> {
        self.coeffs.get(n)
    }

    fn same_order(&self, o: &SeriesTrunc) -> Result<()> {
        if self.order() != o.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: o.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, o: &SeriesTrunc) -> Result<SeriesTrunc> {
        self.same_order(o)?;
        Ok(SeriesTrunc::new(
            self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Cauchy product, truncated.
    pub fn mul(&self, o: &SeriesTrunc) -> Result<SeriesTrunc> {
        self.same_order(o)?;
        let n = self.order();
        let mut out = vec![MPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Ok(SeriesTrunc::new(out))
    }

    /// The unique `q` with `q * den = self` up to the order, by forward
    /// substitution. `den` must start with a non-zero constant.
    pub fn div(&self, den: &SeriesTrunc) -> Result<SeriesTrunc> {
        self.same_order(den)?;
        let d0 = den.coeffs[0].as_constant().ok_or(Error::NonInvertible)?;
        if d0.is_zero() {
            return Err(Error::NonInvertible);
        }
        let inv = BigRational::from_integer(1.into()) / d0;
        let n = self.order();
        let mut q: Vec<MPoly> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for (i, qi) in q.iter().enumerate() {
                let d = &den.coeffs[k - i];
                if !d.is_zero() && !qi.is_zero() {
                    acc -= &(qi * d);
                }
            }
            q.push(acc.scale(&inv));
        }
        Ok(SeriesTrunc::new(q))
    }

    /// `n! * [t^n]`, the exponential-generating-function coefficient.
    pub fn egf_coeff(&self, n: usize) -> Result<MPoly> {
        let c = self.coeffs.get(n).ok_or_else(|| {
            Error::Domain(format!(
                "coefficient {n} requested from a series of order {}",
                self.order()
            ))
        })?;
        Ok(c.scale(&factorial(n)))
    }
}

/// `e^(rate t) = sum rate^n t^n / n!`.
pub fn exp_series(rate: &MPoly, order: usize) -> SeriesTrunc {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut p = MPoly::one();
    for n in 0..=order {
        if n > 0 {
            p = (&p * rate).scale(&(BigRational::from_integer(1.into()) / int(n as i64)));
        }
        coeffs.push(p.clone());
    }
    SeriesTrunc::new(coeffs)
}

/// `F(t; a, b) = 2t / (b^t + a^t)`.
pub fn expand_base(order: usize) -> SeriesTrunc {
    let num = SeriesTrunc::monomial(order, 1, MPoly::int(2));
    let den = exp_series(&MPoly::var(Var::Lb), order)
        .add(&exp_series(&MPoly::var(Var::La), order))
        .expect("equal orders");
    num.div(&den).expect("constant term 2 is invertible")
}

/// `F(t; a, b)^k c^(xt)`.
pub fn expand_power(order: usize, k: usize) -> SeriesTrunc {
    assert!(k >= 1, "power must be positive");
    let base = expand_base(order);
    let mut acc = base.clone();
    for _ in 1..k {
        acc = acc.mul(&base).expect("equal orders");
    }
    let cx = exp_series(&(&MPoly::var(Var::X) * &MPoly::var(Var::Lc)), order);
    acc.mul(&cx).expect("equal orders")
}
