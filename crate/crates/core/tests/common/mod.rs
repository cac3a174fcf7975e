//! Strategies shared by the property and acceptance tests.

#![allow(dead_code)]

use genocchi_core::exact::{BigRational, MPoly, Monomial, Point, Substitution, Var};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

pub fn monomial() -> impl Strategy<Value = Monomial> {
    proptest::array::uniform5(0u32..=2).prop_map(Monomial)
}

/// Sparse polynomials with up to five terms of degree at most 2 per variable.
pub fn poly() -> impl Strategy<Value = MPoly> {
    proptest::collection::vec((monomial(), rational()), 0..=5).prop_map(MPoly::from_terms)
}

/// Polynomials in `La, Lb, Lc, X` only, used as substitution images.
pub fn small_poly() -> impl Strategy<Value = MPoly> {
    proptest::collection::vec(
        (proptest::array::uniform4(0u32..=1), rational()),
        0..=3,
    )
    .prop_map(|ts| {
        MPoly::from_terms(
            ts.into_iter()
                .map(|(e, c)| (Monomial([e[0], e[1], e[2], e[3], 0]), c)),
        )
    })
}

pub fn substitution() -> impl Strategy<Value = Substitution> {
    proptest::array::uniform5(proptest::option::of(small_poly())).prop_map(|imgs| {
        let mut s = Substitution::new();
        for (v, img) in Var::ALL.into_iter().zip(imgs) {
            if let Some(p) = img {
                s = s.with(v, p);
            }
        }
        s
    })
}

pub fn point() -> impl Strategy<Value = Point<BigRational>> {
    proptest::array::uniform5(rational()).prop_map(|vals| {
        let mut p = Point::new();
        for (v, x) in Var::ALL.into_iter().zip(vals) {
            p.set(v, x);
        }
        p
    })
}

/// Ring axioms for one triple; `Err` names the first axiom that fails.
pub fn ring_axioms(p: &MPoly, q: &MPoly, r: &MPoly) -> Result<(), &'static str> {
    let zero = MPoly::zero();
    let one = MPoly::one();
    let checks = [
        (p + q == q + p, "additive commutativity"),
        (&(p + q) + r == p + &(q + r), "additive associativity"),
        (p + &zero == *p, "additive identity"),
        (p + &(-p.clone()) == zero, "additive inverse"),
        (p * q == q * p, "multiplicative commutativity"),
        (&(p * q) * r == p * &(q * r), "multiplicative associativity"),
        (p * &one == *p, "multiplicative identity"),
        (p * &(q + r) == &(p * q) + &(p * r), "distributivity"),
    ];
    match checks.iter().find(|(ok, _)| !ok) {
        Some((_, name)) => Err(name),
        None => Ok(()),
    }
}

/// Substitution and evaluation respect sums and products.
pub fn homomorphism(
    p: &MPoly,
    q: &MPoly,
    s: &Substitution,
    at: &Point<BigRational>,
) -> Result<(), &'static str> {
    if (p + q).substitute(s) != &p.substitute(s) + &q.substitute(s) {
        return Err("substitution of a sum");
    }
    if (p * q).substitute(s) != &p.substitute(s) * &q.substitute(s) {
        return Err("substitution of a product");
    }
    let e = |x: &MPoly| x.eval_rational(at).expect("all variables bound");
    if e(&(p * q)) != e(p) * e(q) || e(&(p + q)) != e(p) + e(q) {
        return Err("evaluation");
    }
    // evaluating after substituting equals evaluating the images
    let mut img_point = Point::new();
    for v in Var::ALL {
        let val = match s.get(v) {
            Some(img) => e(img),
            None => at.get(v).expect("bound").clone(),
        };
        img_point.set(v, val);
    }
    if e(&p.substitute(s)) != p.eval_rational(&img_point).expect("bound") {
        return Err("composition with evaluation");
    }
    Ok(())
}
