use proptest::prelude::*;
use tamecm_autgroup::*;
use tamecm_core::{qi, NcPoly, Qi, Scalar, UniPoly, Var};

fn coeffs(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, 1..=max_deg + 1)
}

fn unit() -> impl Strategy<Value = Qi> {
    prop::sample::select(vec![qi(1), qi(-1), qi(2), Qi::from_ratio(1, 2), Qi::imag_unit(), -Qi::imag_unit()])
}

fn elem(max_deg: usize) -> impl Strategy<Value = AutElem<Qi>> {
    prop_oneof![
        coeffs(max_deg).prop_map(|c| AutElem::phi(UniPoly::from_ints(Var::X, &c))),
        coeffs(max_deg).prop_map(|c| AutElem::psi(UniPoly::from_ints(Var::Y, &c))),
        unit().prop_map(|t| AutElem::scale(t).unwrap()),
        (unit(), coeffs(max_deg), -2i64..=2)
            .prop_map(|(a, c, h)| AutElem::triangular(a, UniPoly::from_ints(Var::Y, &c), qi(h)).unwrap()),
        (-2i64..=2, -2i64..=2, -1i64..=1).prop_map(|(b, e, f)| {
            // (y, -x) ∘ (x + b y + e, y + f) is affine outside U.
            let t = AutElem::affine([qi(1), qi(b), qi(0), qi(1)], [qi(e), qi(f)]).unwrap();
            AutElem::Affine(
                AutWord::new(vec![AutElem::flip(), t]).normal_form().factors()[0]
                    .to_elem()
                    .to_affine()
                    .unwrap(),
            )
        }),
    ]
}

fn word(max_deg: usize, max_len: usize) -> impl Strategy<Value = AutWord<Qi>> {
    prop::collection::vec(elem(max_deg), 0..=max_len).prop_map(AutWord::new)
}

fn small(w: &AutWord<Qi>) -> bool {
    w.normal_form().degree() <= 16
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn words_are_symplectic(w in word(3, 4)) {
        prop_assume!(small(&w));
        let (p, q) = w.nc_pair().unwrap();
        prop_assert!(is_symplectic(&p, &q));
    }

    #[test]
    fn normal_form_preserves_the_map(w in word(3, 4)) {
        prop_assume!(small(&w));
        let nf = w.normal_form();
        let (p, q) = w.nc_pair().unwrap();
        prop_assert_eq!(nf.to_word().nc_pair().unwrap(), (p.clone(), q.clone()));
        prop_assert_eq!(nf.degree(), pair_degree(&p, &q));
    }

    #[test]
    fn inverse_round_trips(w in word(3, 4)) {
        prop_assert!(w.compose(&w.inverse()).normal_form().is_identity());
        prop_assert!(w.inverse().compose(&w).normal_form().is_identity());
        prop_assert_eq!(w.inverse().inverse().normal_form(), w.normal_form());
        prop_assert!(w.inverse().normal_form().degree() <= w.normal_form().degree());
    }

    #[test]
    fn action_is_right_action(u in word(2, 3), v in word(2, 3), x in prop::collection::vec(-2i64..=2, 9), y in prop::collection::vec(-2i64..=2, 9)) {
        let mx = tamecm_core::Matrix::from_vec(3, 3, x.into_iter().map(qi).collect()).unwrap();
        let my = tamecm_core::Matrix::from_vec(3, 3, y.into_iter().map(qi).collect()).unwrap();
        let (a, b) = u.act(&mx, &my);
        prop_assert_eq!(u.compose(&v).act(&mx, &my), v.act(&a, &b));
        // The action evaluates the inverse pair.
        let (p, q) = u.inverse().nc_pair().unwrap();
        prop_assert_eq!((p.eval(&mx, &my).unwrap(), q.eval(&mx, &my).unwrap()), (a, b));
    }

    #[test]
    fn dynamics_is_conjugation_invariant(w in word(3, 4), g in word(2, 3)) {
        prop_assert_eq!(classify_dynamics(&w.conjugate_by(&g)), classify_dynamics(&w));
    }

    #[test]
    fn iterate_matches_repeated_composition(
        lambda in prop::sample::select(vec![qi(1), qi(-1), Qi::imag_unit(), -Qi::imag_unit()]),
        c in prop::collection::vec(-3i64..=3, 1..=7),
        k in 1usize..=4,
    ) {
        let phi = AutElem::triangular(lambda, UniPoly::from_ints(Var::Y, &c), qi(0)).unwrap();
        let closed = iterate_triangular(&phi, k).unwrap();
        let direct = AutWord::new(vec![phi; k]);
        prop_assert_eq!(AutWord::from(closed).nc_pair().unwrap(), direct.nc_pair().unwrap());
    }
}

#[test]
fn perturbed_pairs_fail_the_symplectic_test() {
    let w = AutWord::<Qi>::new(vec![
        AutElem::psi(UniPoly::from_ints(Var::Y, &[0, 1, 1])),
        AutElem::flip(),
        AutElem::psi(UniPoly::from_ints(Var::Y, &[1, 0, 0, 1])),
    ]);
    let (p, q) = w.nc_pair().unwrap();
    for (word, _) in p.terms() {
        let bumped = &p + &NcPoly::monomial(*word, Qi::one());
        assert!(!is_symplectic(&bumped, &q), "bump at {word}");
    }
}
