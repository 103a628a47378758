use tamecm_autgroup::*;
use tamecm_core::{qi, Matrix, NcPoly, Qi, Scalar, UniPoly, Var};

type W = AutWord<Qi>;

fn ypoly(c: &[i64]) -> UniPoly<Qi> {
    UniPoly::from_ints(Var::Y, c)
}

fn xpoly(c: &[i64]) -> UniPoly<Qi> {
    UniPoly::from_ints(Var::X, c)
}

fn psi(c: &[i64]) -> AutElem<Qi> {
    AutElem::psi(ypoly(c))
}

fn nc(s: &str) -> NcPoly<Qi> {
    s.parse().unwrap()
}

/// Basepoint matrices, built directly from their entries.
fn basepoint(n: usize) -> (Matrix<Qi>, Matrix<Qi>) {
    let x = Matrix::from_fn(n, n, |i, j| if i == j + 1 { qi(1) } else { qi(0) });
    let y = Matrix::from_fn(n, n, |i, j| if j == i + 1 { qi(j as i64 - n as i64) } else { qi(0) });
    (x, y)
}

/// Subdiagonal `X(n, r)` sharing `Y_0` with the basepoint.
fn x_nr(n: usize, r: usize) -> Matrix<Qi> {
    Matrix::from_fn(n, n, |i, j| {
        if i == j + 1 {
            let k = j as i64 + 1;
            if (k as usize) < r {
                Qi::from_ratio(k, k - n as i64)
            } else {
                qi(1)
            }
        } else {
            qi(0)
        }
    })
}

#[test]
fn nc_pair_examples() {
    assert_eq!(W::identity().nc_pair().unwrap(), (NcPoly::x(), NcPoly::y()));
    assert_eq!(W::from(psi(&[0, 0, 1])).nc_pair().unwrap(), (nc("x + y^2"), nc("y")));
    let w = W::new(vec![psi(&[0, 0, 1]), AutElem::phi(xpoly(&[0, 1]))]);
    let (p, q) = w.nc_pair().unwrap();
    assert_eq!(p, nc("x + y^2 + yx + xy + x^2"));
    assert_eq!(q, nc("y + x"));
    assert_eq!(pair_degree(&p, &q), 2);
}

#[test]
fn symplectic_examples() {
    assert!(is_symplectic(&nc("x"), &nc("y")));
    assert!(!is_symplectic(&nc("x"), &nc("2*y")));
    assert!(is_symplectic(&nc("x + y^2"), &nc("y")));
}

#[test]
fn affine_rejects_bad_determinant() {
    assert!(AutElem::affine([qi(1), qi(0), qi(0), qi(2)], [qi(0), qi(0)]).is_err());
    assert!(AutElem::scale(qi(0)).is_err());
    assert!(AutElem::triangular(qi(0), ypoly(&[1]), qi(0)).is_err());
}

#[test]
fn inverse_examples() {
    let p = xpoly(&[1, 0, 3]);
    assert_eq!(AutElem::phi(p.clone()).inverse(), AutElem::phi(-&p));
    assert_eq!(AutElem::scale(qi(2)).unwrap().inverse(), AutElem::scale(Qi::from_ratio(1, 2)).unwrap());
    let t = AutElem::triangular(qi(3), ypoly(&[1, -2, 0, 5]), qi(-4)).unwrap();
    let w = W::new(vec![t.clone(), t.inverse()]);
    assert_eq!(w.nc_pair().unwrap(), (NcPoly::x(), NcPoly::y()));
    assert!(w.normal_form().is_identity());
}

#[test]
fn normal_form_examples() {
    let b1 = psi(&[0, 0, 0, 1]);
    let nf = W::from(b1.clone()).normal_form();
    assert_eq!((nf.length(), nf.degree()), (1, 3));

    let nf = W::new(vec![psi(&[0, 0, 1]), psi(&[0, 0, -1])]).normal_form();
    assert!(nf.is_identity());
    assert_eq!(nf.length(), 0);

    let w = W::new(vec![b1.clone(), AutElem::flip(), b1]);
    let nf = w.normal_form();
    assert_eq!((nf.length(), nf.degree()), (2, 9));
    let (p, q) = w.nc_pair().unwrap();
    assert_eq!(pair_degree(&p, &q), 9);
    assert_eq!(nf.to_word().nc_pair().unwrap(), (p, q));
}

#[test]
fn phi_is_rewritten_through_the_flip() {
    let w = W::from(AutElem::phi(xpoly(&[0, 1, 2, -1])));
    let nf = w.normal_form();
    assert_eq!((nf.length(), nf.degree()), (1, 3));
    assert_eq!(nf.to_word().nc_pair().unwrap(), w.nc_pair().unwrap());
}

#[test]
fn dynamics_examples() {
    let b = W::from(psi(&[0, 0, 0, 1]));
    assert_eq!(classify_dynamics(&b), Dynamics::Elementary);
    let g = W::new(vec![AutElem::flip(), psi(&[1, 0, 2]), AutElem::phi(xpoly(&[0, 0, 1]))]);
    assert_eq!(classify_dynamics(&b.conjugate_by(&g)), Dynamics::Elementary);
    let h = W::new(vec![psi(&[0, 0, 1]), AutElem::flip(), psi(&[0, 0, 0, 1]), AutElem::flip()]);
    assert_eq!(classify_dynamics(&h), Dynamics::Henon);
    assert_eq!(classify_dynamics(&h.conjugate_by(&g)), Dynamics::Henon);
}

#[test]
fn sigma_with_zero_polynomial_is_identity() {
    let s = special_sigma::<Qi>(2, &UniPoly::zero(Var::X)).unwrap();
    assert!(s.normal_form().is_identity());
    assert!(special_sigma::<Qi>(1, &UniPoly::zero(Var::X)).is_err());
}

#[test]
fn alpha_matches_minimal_polynomial() {
    assert_eq!(alpha_poly::<Qi>(2).unwrap(), UniPoly::from_ints(Var::X, &[-1, 0, 1]));
    for k in 2..=6 {
        let (x0, y0) = basepoint(k);
        let m = &x0 - &y0.pow(k as u32 - 1);
        let mu = m.minimal_polynomial().unwrap();
        assert_eq!(alpha_poly::<Qi>(k).unwrap().monic(), mu, "k = {k}");
    }
}

#[test]
fn beta_matches_minimal_polynomial_from_three() {
    assert_eq!(beta_poly::<Qi>(3).unwrap(), UniPoly::from_ints(Var::X, &[2, -3, 0, 1]));
    for k in 3..=6 {
        let (x0, y0) = basepoint(k);
        let m = &(&x0 - &y0.pow(k as u32 - 2)) - &y0.pow(k as u32 - 1);
        assert_eq!(beta_poly::<Qi>(k).unwrap(), m.minimal_polynomial().unwrap(), "k = {k}");
    }
}

#[test]
fn beta_expression_disagrees_at_two() {
    assert!(beta_poly::<Qi>(2).is_err());
    let (x0, y0) = basepoint(2);
    let m = &(&x0 - &Matrix::identity(2)) - &y0;
    let direct = m.minimal_polynomial().unwrap();
    assert_eq!(direct, UniPoly::from_ints(Var::Z, &[0, 2, 1]));
    let expr = beta_expression::<Qi>(2).unwrap();
    assert_eq!(expr, UniPoly::from_ints(Var::X, &[-1, 2, 1]));
    assert_ne!(expr, direct);
}

#[test]
fn q_i_match_minimal_polynomials() {
    assert_eq!(q_i_poly::<Qi>(3, 2).unwrap(), UniPoly::from_ints(Var::X, &[-1, 0, 0, 1]));
    for n in 3..=5 {
        let (_, y0) = basepoint(n);
        for i in 1..=n {
            let m = &(&x_nr(n, i) - &y0.pow(n as u32 - 2)) - &y0.pow(n as u32 - 1);
            assert_eq!(q_i_poly::<Qi>(n, i).unwrap(), m.minimal_polynomial().unwrap(), "n = {n}, i = {i}");
        }
    }
    assert!(q_i_poly::<Qi>(3, 0).is_err());
    assert!(q_i_poly::<Qi>(3, 4).is_err());
}

#[test]
fn sigma_fixes_basepoint() {
    for k in 2..=4 {
        let (x0, y0) = basepoint(k);
        let alpha = alpha_poly::<Qi>(k).unwrap();
        for c in [&[1][..], &[2, -1], &[0, 1, 1]] {
            let p = &alpha * &xpoly(c);
            let (x1, y1) = special_sigma(k, &p).unwrap().act(&x0, &y0);
            assert_eq!((x1, y1), (x0.clone(), y0.clone()), "k = {k}, c = {c:?}");
        }
    }
}

#[test]
fn iterate_examples() {
    let p = ypoly(&[1, 2, 0, 3]);
    let phi = AutElem::psi(p.clone());
    assert_eq!(iterate_triangular(&phi, 3).unwrap().to_triangular().unwrap().q(), &p.scale(&qi(3)));

    let phi = AutElem::triangular(qi(-1), ypoly(&[0, 1, 1]), qi(0)).unwrap();
    let sq = iterate_triangular(&phi, 2).unwrap();
    assert_eq!(sq, AutElem::triangular(qi(1), ypoly(&[0, -2]), qi(0)).unwrap());
    let direct = W::new(vec![phi.clone(), phi]).normal_form();
    assert_eq!(direct.to_word().nc_pair().unwrap(), W::from(sq).nc_pair().unwrap());

    let s = AutElem::scale(Qi::imag_unit()).unwrap();
    let p4 = iterate_triangular(&s, 4).unwrap();
    assert!(W::from(p4).normal_form().is_identity());

    let shifted = AutElem::triangular(qi(1), ypoly(&[1]), qi(1)).unwrap();
    assert!(iterate_triangular(&shifted, 2).is_err());
}
