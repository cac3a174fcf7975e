mod common;

use common::{homomorphism, point, poly, rational, ring_axioms, substitution};
use genocchi_core::altsum::{alt_power_sum_direct, alt_power_sum_formula_shifted};
use genocchi_core::audit::{to_json, SuiteOutput};
use genocchi_core::exact::{MPoly, Var};
use genocchi_core::param::{g_number, g_poly};
use genocchi_core::report::IdentityReport;
use genocchi_core::series::{exp_series, SeriesTrunc};
use genocchi_core::zeta::{parse_exact, rational_label};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn polynomial_ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(ring_axioms(&p, &q, &r), Ok(()));
    }

    #[test]
    fn substitution_is_a_homomorphism(p in poly(), q in poly(), s in substitution(), at in point()) {
        prop_assert_eq!(homomorphism(&p, &q, &s, &at), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn series_division_inverts_product(order in 0usize..8, c in rational()) {
        let rate = MPoly::var(Var::La).scale(&c);
        let den = exp_series(&rate, order);
        let num = exp_series(&MPoly::var(Var::Lb), order);
        let q = num.div(&den).unwrap();
        prop_assert_eq!(q.mul(&den).unwrap(), num);
    }

    #[test]
    fn rational_labels_parse_back(p in -500i64..500, k in 0u32..4) {
        let r = parse_exact(&format!("{p}e-{k}")).unwrap();
        prop_assert_eq!(parse_exact(&rational_label(&r)).unwrap(), r);
    }

    #[test]
    fn report_json_round_trips(
        ids in proptest::collection::vec("[a-z][a-z0-9.-]{0,12}", 1..6),
        diffs in proptest::collection::vec(0.0f64..1e-3, 1..6),
    ) {
        let reports: Vec<IdentityReport> = ids
            .iter()
            .zip(diffs.iter().cycle())
            .enumerate()
            .map(|(i, (id, d))| {
                if i % 2 == 0 {
                    IdentityReport::numeric(id, [("s", format!("{d}"))], *d, 1e-4)
                } else {
                    IdentityReport::exact(id, [("n", i.to_string())], MPoly::var(Var::X).scale(&parse_exact("3/7").unwrap()))
                }
            })
            .collect();
        let json = to_json(&reports);
        let back: SuiteOutput = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back.reports, &reports);
        prop_assert_eq!(to_json(&back.reports), json);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shifted_alternating_sum_formula(n in 1usize..7, m in 1usize..60) {
        prop_assert_eq!(alt_power_sum_formula_shifted(n, m).unwrap(), alt_power_sum_direct(n, m));
    }
}

#[test]
fn symmetry_in_a_and_b() {
    for n in 0..=16 {
        let g = g_number(n).value;
        assert_eq!(g.swap(Var::La, Var::Lb), g, "n = {n}");
    }
}

#[test]
fn degree_is_n_minus_one() {
    for n in 1..=16 {
        let g = g_poly(n).value;
        for (m, _) in g.terms() {
            assert_eq!(m.0[0] + m.0[1] + m.0[2], n as u32 - 1, "n = {n}");
            assert_eq!(m.exp(Var::X), m.exp(Var::Lc), "x enters only as x ln c");
        }
    }
}

#[test]
fn truncated_series_identity() {
    let one = SeriesTrunc::one(5);
    assert_eq!(one.mul(&one).unwrap(), one);
}
