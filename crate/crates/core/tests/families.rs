use proptest::prelude::*;
use qalink::families::*;
use qalink::{determinant, determinant_oracle, spanning_tree_count, tait_graph, BigInt};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn rational_numerator_is_determinant(terms in prop::collection::vec(1i64..=5, 1..=4)) {
        prop_assume!(terms.iter().sum::<i64>() <= 16);
        let cf = ContinuedFraction::new(terms.clone()).unwrap();
        let d = rational_diagram(&cf);
        prop_assert_eq!(determinant_oracle(&d).unwrap(), cf_numerator(&cf));
        prop_assert_eq!(determinant(&d), cf_numerator(&cf));
        prop_assert!(d.is_alternating());
    }

    #[test]
    fn positive_pretzels(tassels in prop::collection::vec(1i64..=4, 2..=4)) {
        let d = pretzel_diagram(&tassels).unwrap();
        let det = determinant(&d);
        prop_assert_eq!(&det, &pretzel_det_formula(&tassels));
        prop_assert_eq!(&det, &determinant_oracle(&d).unwrap());
        prop_assert_eq!(&det, &spanning_tree_count(&tait_graph(&d).unwrap()));
    }

    #[test]
    fn signed_pretzels(tassels in prop::collection::vec(prop_oneof![-5i64..=-1, 1i64..=5], 1..=4)) {
        let d = pretzel_diagram(&tassels).unwrap();
        prop_assert_eq!(determinant(&d), pretzel_det_formula(&tassels));
        prop_assert_eq!(d.crossing_count() as i64, tassels.iter().map(|t| t.abs()).sum::<i64>());
    }

    #[test]
    fn montesinos_classical(e in -2i64..=2, tangles in prop::collection::vec((2i64..=6, -5i64..=5), 1..=3)) {
        let tangles: Vec<(i64, i64)> = tangles.into_iter().filter(|t| t.1 != 0).collect();
        prop_assume!(!tangles.is_empty());
        let coprime = tangles.iter().all(|t| num_integer::gcd(t.0, t.1) == 1);
        let spec = MontesinosSpec::new(e, tangles);
        if !coprime {
            prop_assert!(montesinos_diagram(&spec).is_err());
            return Ok(());
        }
        let d = montesinos_diagram(&spec).unwrap();
        prop_assert_eq!(determinant(&d), montesinos_det_formula(&spec));
    }

    #[test]
    fn product_dominates(xs in prop::collection::vec(1i64..=50, 1..=12)) {
        prop_assert!(product_dominates_sum(&xs).unwrap().holds);
    }

    #[test]
    fn greene_permutation_invariant(e in 0u32..4, mut p in prop::collection::vec(2i64..8, 0..5),
                                    mut q in prop::collection::vec(3i64..8, 1..5)) {
        let before = greene_classify_pretzel(&PretzelSpec::new(e, p.clone(), q.clone())).unwrap();
        p.reverse();
        q.rotate_left(1);
        prop_assert_eq!(greene_classify_pretzel(&PretzelSpec::new(e, p, q)).unwrap(), before);
    }

    #[test]
    fn widmer_bounds_hold(a1 in 1i64..6, a2 in 1i64..6, a3 in 1i64..6, n in 1i64..12) {
        if 1 + a1 * (a2 - n) < 0 {
            let case = WidmerCase::One { a1, a2, n };
            prop_assert!(widmer_inequality_check(&case).unwrap().holds);
        }
        if a3 < n {
            let case = WidmerCase::Three { a1, a2, a3, n };
            prop_assert!(widmer_inequality_check(&case).unwrap().holds);
        }
    }
}

#[test]
fn pretzel_spec_matches_montesinos_form() {
    for (e, p, q) in [(0, vec![2, 3], vec![4]), (2, vec![2], vec![3]), (1, vec![3], vec![3, 5])] {
        let spec = PretzelSpec::new(e, p, q);
        let d = spec.diagram().unwrap();
        assert_eq!(determinant(&d), montesinos_det_formula(&spec.to_montesinos()));
    }
}

#[test]
fn table_pretzels() {
    // P(4,3,-3) and P(5,3,-3)
    let d = pretzel_diagram(&[4, 3, -3]).unwrap();
    assert_eq!((d.crossing_count(), determinant(&d)), (10, BigInt::from(9)));
    let d = pretzel_diagram(&[5, 3, -3]).unwrap();
    assert_eq!((d.crossing_count(), determinant(&d)), (11, BigInt::from(9)));
    for p in [[4, 3], [5, 3]] {
        let v = greene_classify_pretzel(&PretzelSpec::new(0, p.to_vec(), vec![3])).unwrap();
        assert_eq!(v, GreeneVerdict::NotQa);
    }
}

#[test]
fn alternating_montesinos_diagrams_alternate() {
    for (p, q) in [(vec![2], vec![3]), (vec![3, 2], vec![4]), (vec![], vec![3, 5])] {
        let d = montesinos_diagram(&MontesinosSpec::alternating(&p, &q)).unwrap();
        assert!(d.reduce().is_alternating(), "{p:?} {q:?}");
    }
}

#[test]
fn widmer_two_and_triple_examples() {
    let r = widmer_inequality_check(&WidmerCase::Two { a1: 3, a2: 2, c1: 2, c2: 2 }).unwrap();
    assert!(r.holds);
    assert!(widmer_inequality_check(&WidmerCase::Two { a1: 2, a2: 3, c1: 2, c2: 2 }).is_err());
    assert!(widmer_inequality_check(&WidmerCase::Triple { a: [2, 2, 2], c: [2, 2, 2] }).is_err());
}
