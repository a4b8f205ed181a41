//! Property tests for the algebraic invariants: every law here must hold
//! exactly, for all inputs — tolerances do not exist in this crate.

use proptest::prelude::*;

use zqft_core::arith::Rat;
use zqft_core::bell::{bell_triangle, complete_bell, WeightSequence};
use zqft_core::boson::{normal_order_word, word_excess, BosonOp};
use zqft_core::counting::{z_series_bell, z_series_pf, CountingProblem};
use zqft_core::egf::EgfSeries;

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Rat::new(p.into(), q.into()))
}

fn series(order: usize) -> impl Strategy<Value = EgfSeries> {
    prop::collection::vec(rat(), order + 1).prop_map(EgfSeries::from_coeffs)
}

/// Constant term forced to zero (domain of exp/compose).
fn series_zero_constant(order: usize) -> impl Strategy<Value = EgfSeries> {
    series(order).prop_map(|s| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = Rat::from_integer(0.into());
        EgfSeries::from_coeffs(coeffs)
    })
}

/// Constant term forced to one (domain of log/rational_power).
fn series_unit_constant(order: usize) -> impl Strategy<Value = EgfSeries> {
    series(order).prop_map(|s| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = Rat::from_integer(1.into());
        EgfSeries::from_coeffs(coeffs)
    })
}

fn word() -> impl Strategy<Value = Vec<BosonOp>> {
    prop::collection::vec(
        prop_oneof![Just(BosonOp::Create), Just(BosonOp::Annihilate)],
        1..=7,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_formula_is_symmetric(f in series(10), g in series(10)) {
        prop_assert_eq!(f.product_formula(&g), g.product_formula(&f));
    }

    #[test]
    fn log_inverts_exp(f in series_zero_constant(8)) {
        prop_assert_eq!(f.exp().unwrap().log().unwrap(), f);
    }

    #[test]
    fn exp_inverts_log(g in series_unit_constant(8)) {
        prop_assert_eq!(g.log().unwrap().exp().unwrap(), g);
    }

    #[test]
    fn multiply_commutes(f in series(6), g in series(6)) {
        prop_assert_eq!(f.multiply(&g), g.multiply(&f));
    }

    #[test]
    fn multiply_associates(f in series(6), g in series(6), h in series(6)) {
        prop_assert_eq!(
            f.multiply(&g).multiply(&h),
            f.multiply(&g.multiply(&h))
        );
    }

    #[test]
    fn compose_associates(
        f in series(6),
        g in series_zero_constant(6),
        h in series_zero_constant(6),
    ) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rational_power_adds_exponents(
        f in series_unit_constant(6),
        a in rat(),
        b in rat(),
    ) {
        let sum = f.rational_power(&(a.clone() + b.clone())).unwrap();
        let split = f
            .rational_power(&a)
            .unwrap()
            .multiply(&f.rational_power(&b).unwrap());
        prop_assert_eq!(sum, split);
    }

    #[test]
    fn normal_form_conserves_excess(w in word()) {
        let poly = normal_order_word(&w);
        prop_assert_eq!(poly.uniform_excess(), Some(word_excess(&w)));
    }

    #[test]
    fn complete_bell_matches_exp_route(
        weights in prop::collection::vec(rat(), 8),
    ) {
        let h = WeightSequence::new(weights);
        let via_triangle = complete_bell(&h, 8).unwrap();
        let via_exp = h.egf_series(8).unwrap().exp().unwrap();
        prop_assert_eq!(&via_triangle[..], via_exp.coeffs());
    }

    #[test]
    fn triangle_rows_sum_to_complete_bell(
        weights in prop::collection::vec(rat(), 7),
    ) {
        let h = WeightSequence::new(weights);
        let triangle = bell_triangle(&h, 7).unwrap();
        prop_assert_eq!(triangle.row_sums(), complete_bell(&h, 7).unwrap());
    }

    #[test]
    fn z_routes_agree_and_swap(
        l in prop::collection::vec(-3i64..=3, 6),
        v in prop::collection::vec(-3i64..=3, 6),
    ) {
        let l = WeightSequence::new(l.into_iter().map(|x| Rat::from_integer(x.into())).collect());
        let v = WeightSequence::new(v.into_iter().map(|x| Rat::from_integer(x.into())).collect());
        let p = CountingProblem::new(l, v, 6).unwrap();
        let bell_route = z_series_bell(&p);
        prop_assert_eq!(&bell_route, &z_series_pf(&p));
        prop_assert_eq!(&bell_route, &z_series_bell(&p.swapped()));
    }
}
