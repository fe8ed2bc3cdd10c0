use ksymplectic::linalg::{Mat, Subspace};
use ksymplectic::rat::{format_rat, parse_rat, rat, ratio, Rat};
use num_traits::Zero;
use proptest::prelude::*;

fn small_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(-4i64..=4, rows * cols).prop_map(move |v| {
        Mat::from_fn(rows, cols, |i, j| rat(v[i * cols + j]))
    })
}

proptest! {
    #[test]
    fn rational_format_round_trips(p in -1000i64..1000, q in 1i64..1000) {
        let r = ratio(p, q);
        prop_assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
    }

    #[test]
    fn rref_is_idempotent(m in small_mat(3, 4)) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn nullspace_annihilates(m in small_mat(3, 5)) {
        let ns = m.nullspace();
        prop_assert!((&m * &ns).is_zero());
        prop_assert_eq!(m.rank() + ns.cols(), 5);
    }

    #[test]
    fn solve_finds_inverse(m in small_mat(3, 3)) {
        let id = Mat::identity(3);
        match m.solve(&id) {
            Some(inv) => prop_assert_eq!(&m * &inv, id),
            None => prop_assert!(m.det().is_zero()),
        }
    }

    #[test]
    fn subspace_dimension_formula(a in small_mat(4, 2), b in small_mat(4, 2)) {
        let s = Subspace::from_columns(4, &a);
        let t = Subspace::from_columns(4, &b);
        let sum = s.sum(&t);
        let meet = s.intersect(&t);
        prop_assert_eq!(s.dim() + t.dim(), sum.dim() + meet.dim());
        prop_assert!(sum.contains_subspace(&s));
        prop_assert!(s.contains_subspace(&meet));
    }

    #[test]
    fn det_multiplicative(a in small_mat(3, 3), b in small_mat(3, 3)) {
        prop_assert_eq!((&a * &b).det(), a.det() * b.det());
    }
}

#[test]
fn zero_and_identity_edges() {
    let z = Mat::zero(3, 3);
    assert_eq!(z.rank(), 0);
    assert_eq!(z.nullspace().cols(), 3);
    assert!(z.det().is_zero());
    assert_eq!(Mat::identity(4).det(), Rat::from_integer(1.into()));
}
