use tamecm_adelic::*;
use tamecm_autgroup::AutElem;
use tamecm_cmspace::{make_pair, pgl_equivalent, same_point, MatrixPair};
use tamecm_core::{qi, Matrix, Qi};

fn mu(s: &str) -> Partition {
    s.parse().unwrap()
}

fn subdiag_pair(sub: &[i64]) -> MatrixPair<Qi> {
    let n = sub.len() + 1;
    let x = Matrix::from_fn(n, n, |i, j| if i == j + 1 { qi(sub[j]) } else { qi(0) });
    let y = Matrix::from_fn(n, n, |i, j| if j == i + 1 { qi(1) } else { qi(0) });
    make_pair(x, y).unwrap()
}

/// The explicit matrices listed for n <= 4.
fn printed(label: &str) -> MatrixPair<Qi> {
    match label {
        "1" => make_pair(Matrix::zeros(1, 1), Matrix::zeros(1, 1)).unwrap(),
        "2" => subdiag_pair(&[-1]),
        "1+1" => subdiag_pair(&[1]),
        "3" => subdiag_pair(&[-2, -1]),
        "1+1+1" => subdiag_pair(&[1, 2]),
        "1+2" => subdiag_pair(&[1, -1]),
        "4" => subdiag_pair(&[-3, -2, -1]),
        "1+3" => subdiag_pair(&[1, -2, -1]),
        "1+1+2" => subdiag_pair(&[1, 2, -1]),
        "1+1+1+1" => subdiag_pair(&[1, 2, 3]),
        "2+2" => {
            let x = Matrix::from_ints(&[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, -1, 0, 1], &[-3, 0, 0, 0]]);
            let y = Matrix::from_ints(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
            make_pair(x, y).unwrap()
        }
        _ => unreachable!(),
    }
}

const SMALL: [&str; 11] = ["1", "2", "1+1", "3", "1+1+1", "1+2", "4", "1+3", "1+1+2", "1+1+1+1", "2+2"];

#[test]
fn partition_text_and_counts() {
    let p = mu("1+1+2");
    assert_eq!(p.parts(), &[1, 1, 2]);
    assert_eq!(p.to_string(), "(1,1,2)");
    assert_eq!(mu("(2,1,1)"), p);
    assert!("1+0".parse::<Partition>().is_err());
    assert!("".parse::<Partition>().is_err());
    let counts: Vec<usize> = (1..=10).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    for n in 1..=10 {
        assert!(partitions(n).iter().all(|p| p.n() == n && p.parts().windows(2).all(|w| w[0] <= w[1])));
    }
}

#[test]
fn fixed_points_match_printed_matrices() {
    for label in SMALL {
        let f = fixed_point::<Qi>(&mu(label)).unwrap();
        let p = printed(label);
        assert!(same_point(&f, &p), "{label}");
        assert!(is_nilpotent(f.x()) && is_nilpotent(f.y()), "{label}");
    }
    // Small cases come out literally equal.
    assert_eq!(fixed_point::<Qi>(&mu("2")).unwrap().x(), &Matrix::from_ints(&[&[0, 0], &[-1, 0]]));
    assert_eq!(fixed_point::<Qi>(&mu("1+1")).unwrap().x(), &Matrix::from_ints(&[&[0, 0], &[1, 0]]));
    assert_eq!(fixed_point::<Qi>(&mu("2+2")).unwrap(), printed("2+2"));
}

#[test]
fn fixed_points_are_distinct_and_torus_fixed() {
    for n in 1..=4 {
        let pts: Vec<_> = partitions(n).iter().map(|p| fixed_point::<Qi>(p).unwrap()).collect();
        for (i, a) in pts.iter().enumerate() {
            let scaled = a.act_elem(&AutElem::scale(qi(2)).unwrap()).unwrap();
            assert!(same_point(&scaled, a));
            for b in &pts[i + 1..] {
                assert!(!pgl_equivalent(a, b).unwrap().is_equivalent());
            }
        }
    }
}

#[test]
fn fixed_points_for_larger_partitions_build() {
    for n in 5..=7 {
        for p in partitions(n) {
            let f = fixed_point::<Qi>(&p).unwrap();
            assert!(is_nilpotent(f.x()) && is_nilpotent(f.y()), "{p}");
        }
    }
    for label in ["3+3+3", "1+3+3+3", "3+4+5", "3+3+4"] {
        let p = mu(label);
        assert_eq!(p.hooks().len(), 3);
        let f = fixed_point::<Qi>(&p).unwrap();
        assert!(is_nilpotent(f.x()), "{p}");
        assert!(same_point(&f.act_elem(&AutElem::scale(qi(3)).unwrap()).unwrap(), &f), "{p}");
    }
}

#[test]
fn exponent_and_semigroup_examples() {
    assert_eq!(exponents(&mu("1")).to_string(), "{0, 2, 3, 4, ...}");
    assert_eq!(exponents(&mu("2")).to_string(), "{0, 3, 4, 5, ...}");
    assert_eq!(exponents(&mu("1+2")).to_string(), "{0, 2, 4, 5, 6, ...}");
    assert_eq!(semigroup(&CofiniteSet::new(0, [])).to_string(), "{1, 2, 3, ...}");
    assert_eq!(semigroup(&CofiniteSet::new(2, [0])).to_string(), "{2, 3, 4, ...}");
    assert_eq!(semigroup(&CofiniteSet::new(4, [0, 2])).to_string(), "{2, 4, 5, 6, ...}");
}

#[test]
fn borel_table() {
    let expected = [
        ("1", "yC[y]"),
        ("2", "y^2C[y]"),
        ("1+1", "y^2C[y]"),
        ("3", "y^3C[y]"),
        ("1+1+1", "y^3C[y]"),
        ("1+2", "Cy + y^3C[y]"),
        ("4", "y^4C[y]"),
        ("1+3", "Cy^2 + y^4C[y]"),
        ("1+1+2", "Cy^2 + y^4C[y]"),
        ("1+1+1+1", "y^4C[y]"),
        ("2+2", "y^3C[y]"),
    ];
    for (label, span) in expected {
        assert_eq!(borel_description(&mu(label)).span(), span, "{label}");
    }
    assert_eq!(
        borel_description(&mu("1+1+2")).table_line(),
        "B(1,1,2) = T ⋉ {Psi_q : q ∈ Cy^2 + y^4C[y]}"
    );
    assert_eq!(borel_description(&mu("2+2")).generator_exponents().members_up_to(5), [3, 4, 5]);
    assert!(is_generator(&mu("1+1+2"), 2, &qi(5)));
    assert!(!is_generator(&mu("1+1+2"), 2, &qi(0)));
    assert!(!is_generator(&mu("1+1+2"), 3, &qi(1)));
}

#[test]
fn stabilizer_examples() {
    let p11 = fixed_point::<Qi>(&mu("1+1")).unwrap();
    let moved = p11.act_elem(&tamecm_autgroup::psi_monomial(qi(1), 2)).unwrap();
    assert_eq!(moved, p11);

    let p2 = fixed_point::<Qi>(&mu("2")).unwrap();
    let moved = p2.act_elem(&tamecm_autgroup::psi_monomial(qi(1), 1)).unwrap();
    assert!(!same_point(&moved, &p2));
}

#[test]
fn stabilizer_reports_up_to_n4() {
    for n in 1..=4 {
        for p in partitions(n) {
            let report = verify_stabilizer(&p, 8).unwrap();
            assert_eq!(report.checks.len(), 24);
            let bad: Vec<_> = report.failures().collect();
            assert!(bad.is_empty(), "{p}: {bad:?}");
        }
    }
}
