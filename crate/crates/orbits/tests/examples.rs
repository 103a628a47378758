use tamecm_adelic::{fixed_point, partitions, Partition};
use tamecm_autgroup::{AutElem, AutWord};
use tamecm_cmspace::{basepoint, cm_normal_form, make_pair, MatrixPair};
use tamecm_core::{qi, qi_c, qr, Cf, Matrix, Qi, Scalar, UniPoly, Var};
use tamecm_orbits::*;

fn mu(s: &str) -> Partition {
    s.parse().unwrap()
}

/// `Y = diag(mus)` and `X_ij = 1 / (mu_j - mu_i)`, the CM form with roles swapped.
fn y_diagonal_point(mus: &[i64]) -> MatrixPair<Qi> {
    let n = mus.len();
    let y = Matrix::diag(&mus.iter().map(|&m| qi(m)).collect::<Vec<_>>());
    let x = Matrix::from_fn(n, n, |i, j| if i == j { qi(0) } else { qr(1, mus[j] - mus[i]) });
    make_pair(x, y).unwrap()
}

#[test]
fn lagrange_examples() {
    let a = cm_normal_form(&[qi(0), qi(1)], &[qi(0), qi(0)]).unwrap();
    let b = cm_normal_form(&[qi(0), qi(1)], &[qi(1), qi(3)]).unwrap();
    let mv = lagrange_fiber_move(&a, &b).unwrap();
    assert!(mv.verified);
    assert_eq!(mv.tag, CertTag::Lagrange);
    assert_eq!(mv.word.elems(), &[AutElem::phi(UniPoly::from_ints(Var::X, &[-1, -2]))]);

    let same = lagrange_fiber_move(&a, &a).unwrap();
    assert_eq!(same.word.elems(), &[AutElem::phi(UniPoly::zero(Var::X))]);

    let lam = [qi(1), qi(2), qi(3)];
    let c = cm_normal_form(&lam, &[qr(1, 2), qi(-4), qr(7, 3)]).unwrap();
    let d = cm_normal_form(&lam, &[qi(5), qr(-2, 9), qi(0)]).unwrap();
    assert!(lagrange_fiber_move(&c, &d).unwrap().verified);

    let err = lagrange_fiber_move(&basepoint::<Qi>(2).unwrap(), &basepoint::<Qi>(2).unwrap()).unwrap_err();
    assert_eq!(err.to_string(), "fiber move requires diagonal distinct spectrum");
}

#[test]
fn euclid_examples() {
    let p = cm_normal_form(&[qi(1), qi(-1)], &[qi(0), qi(0)]).unwrap();
    let (f, g) = euclid_reduction(&p, 2).unwrap();
    assert_eq!(f, UniPoly::from_ints(Var::Z, &[1]));
    assert_eq!(g, UniPoly::from_ints(Var::Z, &[-1]));
    assert!(verify_euclid(&p, 2, &f, &UniPoly::from_ints(Var::Z, &[3, 0, 1, 5])));

    let one = make_pair(Matrix::from_ints(&[&[1]]), Matrix::from_ints(&[&[0]])).unwrap();
    let (f, g) = euclid_reduction(&one, 5).unwrap();
    assert_eq!(f, UniPoly::from_ints(Var::Z, &[1]));
    let z5 = UniPoly::monomial(Var::Z, qi(1), 5);
    let chi = UniPoly::from_ints(Var::Z, &[-1, 1]);
    assert_eq!(&(&f * &z5) + &(&g * &chi), UniPoly::from_ints(Var::Z, &[1]));

    assert!(matches!(euclid_reduction(&basepoint::<Qi>(3).unwrap(), 2), Err(OrbitError::Singular(_))));
}

#[test]
fn shiota_examples() {
    let b = basepoint::<Qi>(2).unwrap();
    let q = shiota_search(&b, Direction::X, 3, 10, 0).unwrap();
    assert_eq!(q, UniPoly::ident(Var::X));
    assert_eq!(shifted_det(&b, &q), qi(1));

    let one = make_pair(Matrix::<Qi>::from_ints(&[&[3]]), Matrix::from_ints(&[&[0]])).unwrap();
    let q = shiota_search(&one, Direction::X, 2, 0, 0).unwrap();
    assert!(shiota_check(&one, Direction::X, &q));
    assert_eq!(q, UniPoly::from_ints(Var::X, &[1]));

    let f = fixed_point::<Qi>(&mu("1+1")).unwrap();
    assert!(!shiota_check(&f, Direction::X, &UniPoly::from_ints(Var::X, &[1])));
    let q = shiota_search(&f, Direction::X, 3, 10, 0).unwrap();
    assert!(shiota_check(&f, Direction::X, &q));
    let r = shiota_search(&f, Direction::Y, 3, 10, 0).unwrap();
    assert!(shiota_check(&f, Direction::Y, &r));
}

fn shifted_det(p: &MatrixPair<Qi>, q: &UniPoly<Qi>) -> Qi {
    (p.y() + &q.eval_matrix(p.x())).det().unwrap()
}

#[test]
fn multi_nonsingular_examples() {
    assert!(multi_nonsingular_search::<Qi>(&[]).unwrap().is_zero());
    for set in [&[2][..], &[2, 3], &[1, 3, 4], &[2, 5]] {
        let p = multi_nonsingular_search::<Qi>(set).unwrap();
        assert!(multi_nonsingular_check(set, &p).unwrap(), "{set:?}");
        assert!(p.coeffs().iter().enumerate().all(|(d, c)| c.is_zero() || set.contains(&(d + 1))));
    }
    assert!(multi_nonsingular_search::<Qi>(&[0, 2]).is_err());
}

#[test]
fn c2_examples() {
    let labels: Vec<_> = C2Orbit::ALL.iter().map(|o| classify_c2_orbit(&o.representative()).unwrap()).collect();
    assert_eq!(labels, C2Orbit::ALL);
    let y2 = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
    let p = make_pair(Matrix::from_ints(&[&[5, 7], &[1, 2]]), y2).unwrap();
    assert_eq!(classify_c2_orbit(&p).unwrap(), C2Orbit::O22);
    assert!(classify_c2_orbit(&basepoint::<Qi>(3).unwrap()).is_err());
}

#[test]
fn b_orbit_of_fixed_points() {
    for n in 1..=4 {
        for m in partitions(n) {
            let f = fixed_point::<Qi>(&m).unwrap();
            match classify_b_orbit(&f, 64).unwrap() {
                BOrbitType::TorusFixed { partition, .. } => assert_eq!(partition, m),
                other => panic!("{m}: {other}"),
            }
        }
    }
}

#[test]
fn b_orbit_of_two_point_basepoint() {
    let b = basepoint::<Qi>(2).unwrap();
    let BOrbitType::TorusFixed { partition, word, point } = classify_b_orbit(&b, 64).unwrap() else {
        panic!("basepoint is nilpotent");
    };
    assert_eq!(partition, mu("2"));
    assert!(is_nilpotent(point.x()) && is_nilpotent(point.y()));
    assert_eq!(b.act(&word).unwrap(), point);
}

#[test]
fn b_orbit_types_a_and_c() {
    let cyc = y_diagonal_point(&[-1, 0, 1]);
    let BOrbitType::Cyclic { order, stabilizer } = classify_b_orbit(&cyc, 16).unwrap() else {
        panic!("expected type C");
    };
    assert_eq!(order, 2);
    let h = stabilizer.expect("certificate for t = -1");
    assert!(tamecm_cmspace::same_point(&cyc.act(&h).unwrap(), &cyc));

    let free = y_diagonal_point(&[1, 2, -3]);
    assert_eq!(classify_b_orbit(&free, 16).unwrap().label(), "A");

    let free4 = y_diagonal_point(&[0, 1, 3, 7]);
    assert_eq!(classify_b_orbit(&free4, 16).unwrap().label(), "A");

    // Spectrum symmetric about its mean: t = -1 survives trace normalization.
    let c4 = y_diagonal_point(&[1, -1, 0, 2]);
    let BOrbitType::Cyclic { order: 2, stabilizer: Some(h) } = classify_b_orbit(&c4, 16).unwrap() else {
        panic!("expected type C of order 2");
    };
    assert!(tamecm_cmspace::same_point(&c4.act(&h).unwrap(), &c4));
}

fn sample_b_element(k: i64) -> AutElem<Qi> {
    let q = UniPoly::from_coeffs(Var::Y, vec![qi(k), qi(1 - k), qr(1, 2 + k), qi(k % 3)]);
    AutElem::triangular(qr(2 + k, 1 + k), q, qi(k - 1)).unwrap()
}

#[test]
fn conjugate_to_torus_round_trip() {
    for (k, label) in ["1+1", "2", "1+2", "3", "1+1+1"].into_iter().enumerate() {
        let f = fixed_point::<Qi>(&mu(label)).unwrap();
        let b0 = AutWord::from(sample_b_element(k as i64));
        let p = f.act(&b0).unwrap();
        for t in [qi(2), Qi::imag_unit()] {
            let h = AutWord::from(AutElem::scale(t).unwrap()).conjugate_by(&b0.inverse());
            let mv = conjugate_to_torus(&p, &h).unwrap();
            assert!(mv.verified, "{label}");
            assert!(tamecm_cmspace::same_point(&mv.target, &f), "{label}");
        }
    }
    let f = fixed_point::<Qi>(&mu("2")).unwrap();
    let mv = conjugate_to_torus(&f, &AutWord::from(AutElem::scale(qi(3)).unwrap())).unwrap();
    assert!(mv.word.normal_form().is_identity());

    let h = AutWord::from(AutElem::scale(qi(-1)).unwrap());
    assert!(matches!(conjugate_to_torus(&f, &h), Err(OrbitError::SmallOrder(_))));
    let not_stab = AutWord::from(AutElem::psi(UniPoly::from_ints(Var::Y, &[0, 1])));
    assert_eq!(conjugate_to_torus(&f, &not_stab).unwrap_err(), OrbitError::NotInStabilizer);
}

#[test]
fn torus_denominators_at_i() {
    let t = Qi::imag_unit();
    assert_eq!(t.clone() - t.inv().unwrap(), qi_c(0, 2));
    assert_eq!(t.clone() - t.powi(-2).unwrap(), qi_c(1, 1));
}

#[test]
fn one_point_double_transitivity() {
    let pt = |x: Qi, y: Qi| make_pair(Matrix::diag(&[x]), Matrix::diag(&[y])).unwrap();
    let cases = [
        (pt(qi(1), qi(2)), pt(qi(3), qi(-1))),
        (pt(qr(1, 3), qi(0)), pt(qr(1, 3), qi(5))),
        (pt(qi(0), qi(0)), pt(qi(1), qi(0))),
    ];
    for (a, b) in &cases {
        let nav = navigate_n1(a, b).unwrap();
        assert!(nav.verified);
    }
    assert_eq!(navigate_n1(&cases[0].0, &cases[0].0).unwrap_err(), OrbitError::SamePoint);
}

#[test]
fn float_navigation_from_a_moved_point() {
    let start = cm_normal_form(&[Cf::new(0.3, 0.1), Cf::new(-1.2, 0.5)], &[Cf::new(0.7, 0.0), Cf::new(0.0, -0.4)]).unwrap();
    let w = AutWord::new(vec![
        AutElem::psi(UniPoly::from_coeffs(Var::Y, vec![Cf::new(0.2, 0.0), Cf::new(0.0, 0.3), Cf::new(0.5, 0.0)])),
        AutElem::phi(UniPoly::from_coeffs(Var::X, vec![Cf::new(0.0, 0.0), Cf::new(-0.4, 0.1)])),
    ]);
    let p = start.act(&w).unwrap();
    let nav = navigate_n2(&p, 2, 32, 0, 1e-6).unwrap();
    assert!(nav.residual <= 1e-6);
    assert!(nav.moves.iter().all(|m| m.verified));
    let rep = regular_representative::<Cf>();
    assert!(signature_residual(&p.act(&nav.word).unwrap(), &rep, 4) <= 1e-6);
}
