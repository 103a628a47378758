use tamecm_autgroup::{AutElem, AutWord};
use tamecm_cmspace::*;
use tamecm_core::{qi, Cf, CoreError, Matrix, Qi, Scalar, UniPoly, Var};

fn x22() -> MatrixPair<Qi> {
    let x = Matrix::from_ints(&[&[0, 0], &[-1, 0]]);
    let y = Matrix::from_ints(&[&[0, -1], &[0, 0]]);
    make_pair(x, y).unwrap()
}

#[test]
fn make_pair_examples() {
    let p = make_pair(Matrix::<Qi>::zeros(1, 1), Matrix::zeros(1, 1)).unwrap();
    assert_eq!((p.v(), p.w()), (&[qi(1)][..], &[qi(1)][..]));

    let b = basepoint::<Qi>(2).unwrap();
    assert_eq!(rank_one_defect(b.x(), b.y()), Matrix::diag(&[qi(2), qi(0)]));

    let err = make_pair(Matrix::<Qi>::zeros(2, 2), Matrix::zeros(2, 2)).unwrap_err();
    assert_eq!(err, CmError::NotCalogeroMoser { rank: 2 });
    assert!(make_pair(Matrix::<Qi>::zeros(2, 2), Matrix::zeros(3, 3)).is_err());
}

#[test]
fn basepoint_examples() {
    let b1 = basepoint::<Qi>(1).unwrap();
    assert_eq!(b1.x(), &Matrix::zeros(1, 1));
    assert_eq!(b1.y(), &Matrix::zeros(1, 1));
    let b2 = basepoint::<Qi>(2).unwrap();
    assert_eq!(b2.x(), &Matrix::from_ints(&[&[0, 0], &[1, 0]]));
    assert_eq!(b2.y(), &Matrix::from_ints(&[&[0, -1], &[0, 0]]));
    for n in 1..=8 {
        let b = basepoint::<Qi>(n).unwrap();
        let vw = Matrix::from_fn(n, n, |i, j| b.v()[i].clone() * b.w()[j].clone());
        assert_eq!(vw, rank_one_defect(b.x(), b.y()));
    }
    assert!(basepoint::<Qi>(0).is_err());
}

#[test]
fn action_examples() {
    let b = basepoint::<Qi>(3).unwrap();
    assert_eq!(b.act(&AutWord::identity()).unwrap(), b);
    let p = UniPoly::from_ints(Var::X, &[1, 0, 2]);
    let moved = b.act_elem(&AutElem::phi(p.clone())).unwrap();
    assert_eq!(moved.x(), b.x());
    assert_eq!(moved.y(), &(b.y() - &p.eval_matrix(b.x())));
}

#[test]
fn scaling_a_fixed_point_stays_in_its_class() {
    let b = basepoint::<Qi>(3).unwrap();
    for t in [qi(2), Qi::imag_unit(), Qi::from_ratio(-1, 3)] {
        let moved = b.act_elem(&AutElem::scale(t).unwrap()).unwrap();
        assert!(same_point(&moved, &b));
    }
}

#[test]
fn pgl_examples() {
    let b = basepoint::<Qi>(2).unwrap();
    let g = Matrix::from_ints(&[&[1, 2], &[1, 3]]);
    let c = b.conjugate(&g).unwrap();
    let verdict = pgl_equivalent(&b, &c).unwrap();
    assert!(verdict.witness().unwrap().verify(&b, &c));

    assert_eq!(pgl_equivalent(&b, &x22()).unwrap(), PglVerdict::Inequivalent);

    let id = pgl_equivalent(&b, &b).unwrap();
    assert!(id.witness().unwrap().verify(&b, &b));

    let bf = basepoint::<Cf>(2).unwrap();
    assert_eq!(pgl_equivalent(&bf, &bf).unwrap_err(), CmError::Core(CoreError::ExactOnly("pgl_equivalent")));
}

#[test]
fn normal_form_examples() {
    let p = cm_normal_form(&[qi(0)], &[qi(0)]).unwrap();
    assert_eq!(p, basepoint(1).unwrap());
    let p = cm_normal_form(&[qi(0), qi(1)], &[qi(0), qi(0)]).unwrap();
    assert_eq!(p.y(), &Matrix::from_ints(&[&[0, -1], &[1, 0]]));
    assert!(cm_normal_form(&[qi(1), qi(2), qi(3)], &[qi(5), qi(-1), Qi::imag_unit()]).is_ok());
    assert_eq!(cm_normal_form(&[qi(1), qi(1)], &[qi(0), qi(0)]).unwrap_err(), CmError::RepeatedEigenvalue(1));
}

#[test]
fn q_scaling_examples() {
    let b = basepoint::<Qi>(3).unwrap();
    assert!(same_point(&b.apply_q_scaling(&qi(3)).unwrap(), &b));
    let p = cm_normal_form(&[qi(1), qi(2)], &[qi(0), qi(1)]).unwrap();
    assert!(same_point(&p.apply_q_scaling(&qi(1)).unwrap(), &p));
    assert_eq!(b.apply_q_scaling(&qi(0)).unwrap_err(), CmError::ZeroScale);

    // Entries on the k-th superdiagonal are scaled by t^{-k-1}; the subdiagonal is fixed.
    let (x0, y0) = x22().into_matrices();
    let t = qi(2);
    let c = qi(5);
    let mut x = x0.clone();
    x[(0, 0)] = c.clone();
    x[(1, 1)] = -c.clone();
    let p = make_pair(x, y0.clone()).unwrap();
    let q = p.apply_q_scaling(&t).unwrap();
    assert_eq!(q.y(), &y0);
    let expected = c * t.inv().unwrap();
    assert_eq!(q.x()[(0, 0)], expected);
    assert_eq!(q.x()[(1, 0)], x0[(1, 0)]);
}

#[test]
fn trace_normalizer_removes_traces() {
    let p = cm_normal_form(&[qi(1), qi(2), qi(6)], &[qi(3), qi(0), qi(0)]).unwrap();
    let q = p.act_elem(&p.trace_normalizer()).unwrap();
    assert!(q.is_traceless());
}
