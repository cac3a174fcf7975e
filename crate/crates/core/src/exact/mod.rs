//! Exact rational arithmetic and the sparse polynomial ring
//! `Q[La, Lb, Lc, X, Y]` in which every symbolic object lives.
//!
//! `La`, `Lb`, `Lc` stand for `ln a`, `ln b`, `ln c`; `X` and `Y` are the
//! polynomial arguments. Rationals are [`num_rational::BigRational`], which
//! keeps a positive denominator and a reduced fraction after every operation.

pub mod poly;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use num_rational::BigRational;
pub use poly::{MPoly, Monomial, Point, Substitution, Var};

/// Rational from a pair of machine integers. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n!` as an exact rational.
pub fn factorial(n: usize) -> BigRational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    BigRational::from_integer(acc)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    BigRational::from_integer(acc)
}

/// Pascal triangle memo up to a fixed row.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigRational>>,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![BigRational::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`; falls back to direct computation past the memoized rows.
    pub fn get(&self, n: usize, k: usize) -> BigRational {
        if k > n {
            return BigRational::zero();
        }
        match self.rows.get(n) {
            Some(row) => row[k].clone(),
            None => binomial(n, k),
        }
    }
}

/// Multinomial coefficient `n! / (k_1! k_2! ...)`; zero unless the parts sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> BigRational {
    if parts.iter().sum::<usize>() != n {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    let mut left = n;
    for &p in parts {
        acc *= binomial(left, p);
        left -= p;
    }
    acc
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> BigRational {
    if k % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}
