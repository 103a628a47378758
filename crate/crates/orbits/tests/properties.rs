use proptest::prelude::*;
use tamecm_adelic::{fixed_point, partitions};
use tamecm_autgroup::{Affine, AutElem, AutWord};
use tamecm_cmspace::{basepoint, make_pair, same_point};
use tamecm_core::{qi, qr, Matrix, Qi, Scalar, UniPoly, Var};
use tamecm_orbits::*;

fn small() -> impl Strategy<Value = Qi> {
    (-4i64..=4, 1i64..=3).prop_map(|(a, b)| qr(a, b))
}

fn nonzero() -> impl Strategy<Value = Qi> {
    prop_oneof![Just(qi(1)), Just(qi(-1)), Just(qi(2)), Just(qr(1, 3)), Just(Qi::imag_unit())]
}

/// `(a x + q(y), a^{-1} y + h)`; in U when `max_deg <= 1`.
fn triangular(max_deg: usize) -> impl Strategy<Value = AutElem<Qi>> {
    (nonzero(), proptest::collection::vec(small(), 1..=max_deg + 1), small())
        .prop_map(|(a, q, h)| AutElem::triangular(a, UniPoly::from_coeffs(Var::Y, q), h).unwrap())
}

fn unimodular() -> impl Strategy<Value = AutElem<Qi>> {
    (small(), small(), small(), small()).prop_map(|(b, c, e, f)| {
        // ((1 + b c, b), (c, 1)) has determinant 1.
        AutElem::affine([qi(1) + b.clone() * c.clone(), b, c, qi(1)], [e, f]).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn c2_labels_are_u_and_b_invariant(u in triangular(1), b in triangular(3)) {
        for label in C2Orbit::ALL {
            let rep = label.representative();
            prop_assert_eq!(classify_c2_orbit(&rep.act_elem(&u).unwrap()).unwrap(), label);
            prop_assert_eq!(classify_c2_orbit(&rep.act_elem(&b).unwrap()).unwrap(), label);
        }
    }

    #[test]
    fn c2_labels_survive_affine_u(e in small(), f in small(), b in small()) {
        let u = AutElem::Affine(Affine::new([qi(1), b, qi(0), qi(1)], [e, f]).unwrap());
        for label in C2Orbit::ALL {
            let rep = label.representative();
            prop_assert_eq!(classify_c2_orbit(&rep.act_elem(&u).unwrap()).unwrap(), label);
        }
    }

    #[test]
    fn affine_images_stay_classifiable(a in unimodular()) {
        for label in C2Orbit::ALL {
            let moved = label.representative().act_elem(&a).unwrap();
            prop_assert!(classify_c2_orbit(&moved).is_ok());
        }
    }

    #[test]
    fn shiota_certificates_recheck(n in 1usize..=4, seed in 0u64..100) {
        let b = basepoint::<Qi>(n).unwrap();
        for dir in [Direction::X, Direction::Y] {
            let q = shiota_search(&b, dir, 3, 16, seed).unwrap();
            prop_assert!(shiota_check(&b, dir, &q));
        }
    }

    #[test]
    fn conjugate_to_torus_is_nilpotent(idx in 0usize..8, b0 in triangular(3), t in prop_oneof![Just(qi(2)), Just(qr(-1, 3)), Just(Qi::imag_unit())]) {
        let all: Vec<_> = (2..=3).flat_map(partitions).collect();
        let m = &all[idx % all.len()];
        let f = fixed_point::<Qi>(m).unwrap();
        let b0 = AutWord::from(b0);
        let p = f.act(&b0).unwrap();
        let h = AutWord::from(AutElem::scale(t).unwrap()).conjugate_by(&b0.inverse());
        let mv = conjugate_to_torus(&p, &h).unwrap();
        prop_assert!(mv.verified);
        prop_assert!(same_point(&mv.target, &f));
    }

    #[test]
    fn one_point_navigation(x1 in small(), y1 in small(), x2 in small(), y2 in small()) {
        prop_assume!(x1 != x2 || y1 != y2);
        let pt = |x: &Qi, y: &Qi| make_pair(Matrix::diag(std::slice::from_ref(x)), Matrix::diag(std::slice::from_ref(y))).unwrap();
        let nav = navigate_n1(&pt(&x1, &y1), &pt(&x2, &y2)).unwrap();
        prop_assert!(nav.verified);
    }

    #[test]
    fn lagrange_moves_verify(d1 in proptest::collection::vec(small(), 3), d2 in proptest::collection::vec(small(), 3)) {
        let lam = [qi(1), qi(-2), qr(1, 2)];
        let a = tamecm_cmspace::cm_normal_form(&lam, &d1).unwrap();
        let b = tamecm_cmspace::cm_normal_form(&lam, &d2).unwrap();
        prop_assert!(lagrange_fiber_move(&a, &b).unwrap().verified);
    }
}
