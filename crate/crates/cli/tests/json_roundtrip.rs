use proptest::prelude::*;

use tamecm_autgroup::{AutElem, AutWord};
use tamecm_cli::json::{matrices_from_json, matrices_to_json, word_from_json, word_to_json};
use tamecm_core::{qr, Cf, Matrix, Qi, UniPoly, Var};

fn rational() -> impl Strategy<Value = Qi> {
    (-50i64..=50, 1i64..=9).prop_map(|(n, d)| qr(n, d))
}

fn nonzero() -> impl Strategy<Value = Qi> {
    (1i64..=9, 1i64..=9, any::<bool>()).prop_map(|(n, d, neg)| qr(if neg { -n } else { n }, d))
}

fn poly(var: Var) -> impl Strategy<Value = UniPoly<Qi>> {
    prop::collection::vec(rational(), 0..5).prop_map(move |c| UniPoly::from_coeffs(var, c))
}

fn elem() -> impl Strategy<Value = AutElem<Qi>> {
    prop_oneof![
        poly(Var::X).prop_map(AutElem::phi),
        poly(Var::Y).prop_map(AutElem::psi),
        nonzero().prop_map(|t| AutElem::scale(t).expect("nonzero")),
        (nonzero(), poly(Var::Y), rational()).prop_map(|(a, q, h)| AutElem::triangular(a, q, h).expect("a != 0")),
        (nonzero(), rational(), rational(), rational(), rational()).prop_map(|(a, b, e, f, c)| {
            AutElem::affine([a.clone(), b.clone(), c.clone(), (qr(1, 1) + b * c) / a], [e, f]).expect("det 1")
        }),
    ]
}

fn square(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(any::<f64>().prop_filter("finite", |v| v.is_finite()), n * n)
}

proptest! {
    #[test]
    fn exact_words_round_trip(elems in prop::collection::vec(elem(), 0..5)) {
        let word = AutWord::new(elems);
        let back: AutWord<Qi> = word_from_json(&word_to_json(&word)).unwrap();
        prop_assert_eq!(back, word);
    }

    #[test]
    fn exact_matrices_round_trip(entries in prop::collection::vec(rational(), 18)) {
        let x = Matrix::from_fn(3, 3, |i, j| entries[3 * i + j].clone());
        let y = Matrix::from_fn(3, 3, |i, j| entries[9 + 3 * i + j].clone());
        let (bx, by): (Matrix<Qi>, Matrix<Qi>) = matrices_from_json(&matrices_to_json(&x, &y)).unwrap();
        prop_assert!(bx == x && by == y);
    }

    #[test]
    fn float_matrices_round_trip_bit_exact(re in square(2), im in square(2)) {
        let x = Matrix::from_fn(2, 2, |i, j| Cf::new(re[2 * i + j], im[2 * i + j]));
        let y = Matrix::from_fn(2, 2, |i, j| Cf::new(im[2 * i + j], -re[2 * i + j]));
        let (bx, by): (Matrix<Cf>, Matrix<Cf>) = matrices_from_json(&matrices_to_json(&x, &y)).unwrap();
        for (a, b) in [(&x, &bx), (&y, &by)] {
            for (ra, rb) in a.to_rows().iter().zip(b.to_rows().iter()) {
                for (u, v) in ra.iter().zip(rb) {
                    prop_assert_eq!(u.re().to_bits(), v.re().to_bits());
                    prop_assert_eq!(u.im().to_bits(), v.im().to_bits());
                }
            }
        }
    }
}
