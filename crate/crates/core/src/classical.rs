//! Classical Genocchi, Euler and Bernoulli numbers and polynomials.
//!
//! Euler numbers here follow the `2/(e^t + 1)` generating function, so
//! `E_1 = -1/2` and `E_n = G_{n+1}/(n+1)`. These are *not* the integer
//! secant numbers that also go by the name "Euler numbers".

use num_traits::{One, Zero};

use crate::exact::{binomial, int, BigRational, BinomialTable, MPoly, Monomial, Var};
use crate::report::IdentityReport;

/// Genocchi, Euler and Bernoulli numbers up to `max_n`, filled once.
#[derive(Debug, Clone)]
pub struct ClassicalTable {
    max_n: usize,
    genocchi: Vec<BigRational>,
    euler: Vec<BigRational>,
    bernoulli: Vec<BigRational>,
}

impl ClassicalTable {
    pub fn new(max_n: usize) -> Self {
        let binom = BinomialTable::new(max_n + 2);

        // 2 G_n + sum_{k<n} C(n,k) G_k = 2 [n = 1], G_0 = 0
        let mut genocchi = vec![BigRational::zero(); max_n + 2];
        for n in 1..=max_n + 1 {
            let mut rhs = if n == 1 { int(2) } else { BigRational::zero() };
            for k in 0..n {
                rhs -= binom.get(n, k) * &genocchi[k];
            }
            genocchi[n] = rhs / int(2);
        }

        let euler = (0..=max_n)
            .map(|n| &genocchi[n + 1] / int(n as i64 + 1))
            .collect();
        genocchi.truncate(max_n + 1);

        // sum_{k=0}^{n} C(n+1,k) B_k = [n = 0]
        let mut bernoulli: Vec<BigRational> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut rhs = if n == 0 {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            for (k, b) in bernoulli.iter().enumerate() {
                rhs -= binom.get(n + 1, k) * b;
            }
            bernoulli.push(rhs / binom.get(n + 1, n));
        }

        ClassicalTable {
            max_n,
            genocchi,
            euler,
            bernoulli,
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn genocchi(&self, n: usize) -> &BigRational {
        &self.genocchi[n]
    }

    pub fn euler(&self, n: usize) -> &BigRational {
        &self.euler[n]
    }

    pub fn bernoulli(&self, n: usize) -> &BigRational {
        &self.bernoulli[n]
    }

    /// `G_n(x) = sum_k C(n,k) G_k x^(n-k)` as a polynomial in `X`.
    pub fn genocchi_poly(&self, n: usize) -> MPoly {
        appell(n, |k| self.genocchi(k))
    }

    /// `E_n(x) = sum_k C(n,k) E_k x^(n-k)` as a polynomial in `X`.
    pub fn euler_poly(&self, n: usize) -> MPoly {
        appell(n, |k| self.euler(k))
    }

    /// The `x^i` coefficients of `G_n(x)`, lowest power first.
    pub fn genocchi_poly_coeffs(&self, n: usize) -> Vec<BigRational> {
        let mut c = vec![BigRational::zero(); n + 1];
        for k in 0..=n {
            c[n - k] = binomial(n, k) * self.genocchi(k);
        }
        c
    }
}

fn appell<'a>(n: usize, seq: impl Fn(usize) -> &'a BigRational) -> MPoly {
    MPoly::from_terms((0..=n).map(|k| {
        let mut e = [0; 5];
        e[Var::X.index()] = (n - k) as u32;
        (Monomial(e), binomial(n, k) * seq(k))
    }))
}

pub fn genocchi_number(n: usize) -> BigRational {
    ClassicalTable::new(n).genocchi(n).clone()
}

pub fn genocchi_poly(n: usize) -> MPoly {
    ClassicalTable::new(n).genocchi_poly(n)
}

pub fn euler_number(n: usize) -> BigRational {
    ClassicalTable::new(n).euler(n).clone()
}

pub fn euler_poly(n: usize) -> MPoly {
    ClassicalTable::new(n).euler_poly(n)
}

pub fn bernoulli_number(n: usize) -> BigRational {
    ClassicalTable::new(n).bernoulli(n).clone()
}

/// Checks `E_n = G_{n+1}/(n+1)`, `G_{2n} = 2(1-2^{2n}) B_{2n}` and
/// `G_{2n} = 2n E_{2n-1}(0)` for every index up to `max_n`.
pub fn classical_relations_check(max_n: usize) -> Vec<IdentityReport> {
    let max_n = max_n.max(2);
    let t = ClassicalTable::new(2 * max_n + 1);
    let mut out = Vec::new();
    for n in 0..=max_n {
        let lhs = t.euler(n).clone();
        let rhs = t.genocchi(n + 1) / int(n as i64 + 1);
        out.push(IdentityReport::exact(
            "classical-euler-vs-genocchi",
            [("n", n.to_string())],
            &lhs - &rhs,
        ));
    }
    for n in 1..=max_n / 2 {
        let g = t.genocchi(2 * n);
        let pow = num_traits::pow(int(2), 2 * n);
        let via_b = int(2) * (int(1) - pow) * t.bernoulli(2 * n);
        out.push(IdentityReport::exact(
            "classical-genocchi-vs-bernoulli",
            [("n", (2 * n).to_string())],
            g - &via_b,
        ));
        let via_e = int(2 * n as i64) * t.euler_poly(2 * n - 1).constant_term();
        out.push(IdentityReport::exact(
            "classical-genocchi-vs-euler-at-zero",
            [("n", (2 * n).to_string())],
            g - &via_e,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Point, Substitution};
    use crate::report::Status;

    #[test]
    fn genocchi_values() {
        let t = ClassicalTable::new(8);
        let expect = [0, 1, -1, 0, 1, 0, -3, 0, 17];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(t.genocchi(n), &int(*e), "G_{n}");
        }
        assert_eq!(genocchi_number(5), int(0));
        assert_eq!(genocchi_number(8), int(17));
    }

    #[test]
    fn genocchi_numbers_are_integers_and_odd_ones_vanish() {
        let t = ClassicalTable::new(40);
        for n in 0..=40 {
            assert!(t.genocchi(n).is_integer(), "G_{n}");
            if n % 2 == 1 && n > 1 {
                assert!(t.genocchi(n).is_zero(), "G_{n}");
            }
        }
    }

    #[test]
    fn genocchi_polynomials() {
        let x = MPoly::var(Var::X);
        assert_eq!(genocchi_poly(2), &x.scale(&int(2)) - &MPoly::one());
        assert_eq!(
            genocchi_poly(3),
            &x.pow(2).scale(&int(3)) - &x.scale(&int(3))
        );
        assert!(genocchi_poly(0).is_zero());
    }

    #[test]
    fn genocchi_poly_degree_is_n_minus_one() {
        let t = ClassicalTable::new(20);
        for n in 1..=20 {
            assert_eq!(t.genocchi_poly(n).degree_in(Var::X) as usize, n - 1);
        }
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_number(0), int(1));
        assert_eq!(euler_number(1), rat(-1, 2));
        assert_eq!(euler_number(3), rat(1, 4));
        let x = MPoly::var(Var::X);
        assert_eq!(euler_poly(2), &x.pow(2) - &x);
        assert_eq!(euler_poly(0), MPoly::one());
        assert_eq!(euler_poly(1), &x - &MPoly::constant(rat(1, 2)));
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn reflection_at_zero_and_one() {
        let t = ClassicalTable::new(32);
        let at = |v: i64| Point::new().with(Var::X, int(v));
        for n in 0..=32 {
            let g = t.genocchi_poly(n);
            assert_eq!(g.eval_rational(&at(0)).unwrap(), *t.genocchi(n));
            let bump = if n == 1 { int(2) } else { int(0) };
            assert_eq!(
                g.eval_rational(&at(1)).unwrap(),
                -t.genocchi(n).clone() + bump,
                "G_{n}(1)"
            );
            assert_eq!(t.euler_poly(n).eval_rational(&at(0)).unwrap(), *t.euler(n));
        }
    }

    #[test]
    fn genocchi_poly_via_substitution_is_appell() {
        // G_n(x + 1) = 2 n x^(n-1) - G_n(x), n >= 1
        let t = ClassicalTable::new(16);
        let x = MPoly::var(Var::X);
        let shift = Substitution::new().with(Var::X, &x + &MPoly::one());
        for n in 1..=16 {
            let g = t.genocchi_poly(n);
            let rhs = &x.pow(n as u32 - 1).scale(&int(2 * n as i64)) - &g;
            assert_eq!(g.substitute(&shift), rhs, "n = {n}");
        }
    }

    #[test]
    fn relations_verified() {
        for max_n in [2, 8, 16] {
            let reports = classical_relations_check(max_n);
            assert!(!reports.is_empty());
            for r in reports {
                assert_eq!(r.status, Status::Verified, "{r:?}");
            }
        }
    }
}
