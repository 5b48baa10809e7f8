use std::collections::BTreeMap;

use proptest::prelude::*;
use voakit_core::exact::{
    format_scalar, int, nullspace, parse_scalar, q, rref, solve, span_contains, ExactMatrix, Scalar, SparseEchelon,
};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..7, 1i64..4).prop_map(|(n, d)| q(n, d))
}

fn matrix(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(scalar(), c), r)
            .prop_map(|rows| ExactMatrix::from_rows(rows).unwrap())
    })
}

fn mat_vec(a: &ExactMatrix, x: &[Scalar]) -> Vec<Scalar> {
    (0..a.rows()).map(|i| a.row(i).iter().zip(x).map(|(p, y)| p * y).sum()).collect()
}

#[test]
fn rational_strings() {
    assert_eq!(format_scalar(&q(-5, 2)), "-5/2");
    assert_eq!(format_scalar(&int(3)), "3");
    assert_eq!(parse_scalar("−7/2").unwrap(), q(-7, 2));
    assert!(parse_scalar("1/0").is_err());
}

#[test]
fn singular_system_has_no_solution() {
    let a = ExactMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]).unwrap();
    assert!(solve(&a, &[int(1), int(3)]).unwrap().is_none());
    let (x, null) = solve(&a, &[int(1), int(2)]).unwrap().unwrap();
    assert_eq!(mat_vec(&a, &x), vec![int(1), int(2)]);
    assert_eq!(null.len(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in matrix(5)) {
        let r = rref(&m);
        prop_assert_eq!(rref(&r), r.clone());
        prop_assert_eq!(r.rank(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn rank_nullity(m in matrix(5)) {
        let null = nullspace(&m);
        prop_assert_eq!(null.len() + m.rank(), m.cols());
        for v in &null {
            prop_assert!(mat_vec(&m, v).iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn solve_finds_consistent_solutions(m in matrix(5), seed in prop::collection::vec(scalar(), 5)) {
        let x0: Vec<Scalar> = seed.into_iter().take(m.cols()).chain(std::iter::repeat(int(0))).take(m.cols()).collect();
        let b = mat_vec(&m, &x0);
        let (x, _) = solve(&m, &b).unwrap().expect("consistent");
        prop_assert_eq!(mat_vec(&m, &x), b);
    }

    #[test]
    fn span_contains_combinations(m in matrix(4), coeffs in prop::collection::vec(scalar(), 4)) {
        let rows = m.to_rows();
        let mut v = vec![int(0); m.cols()];
        for (row, c) in rows.iter().zip(&coeffs) {
            for (x, y) in v.iter_mut().zip(row) {
                *x += c * y;
            }
        }
        prop_assert!(span_contains(&rows, &v).unwrap());
    }

    #[test]
    fn sparse_echelon_rank_matches_dense(m in matrix(5)) {
        let mut e: SparseEchelon<usize> = SparseEchelon::new();
        for row in m.to_rows() {
            let v: BTreeMap<usize, Scalar> = row.into_iter().enumerate().filter(|(_, x)| *x != int(0)).collect();
            e.insert(&v);
        }
        prop_assert_eq!(e.rank(), m.rank());
    }
}
