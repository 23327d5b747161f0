use proptest::prelude::*;
use tightbound_core::gf2::{express_in_basis, independent_columns, rank, solve_affine};
use tightbound_core::{BitMatrix, BitVec};

fn matrix() -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1usize..=12, 1usize..=12)
        .prop_flat_map(|(m, n)| prop::collection::vec(prop::collection::vec(any::<bool>(), n), m))
}

fn brute_solutions(rows: &[Vec<bool>], rhs: &[bool]) -> Vec<Vec<bool>> {
    let n = rows[0].len();
    (0u32..1 << n)
        .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|x| {
            rows.iter().zip(rhs).all(|(row, &b)| {
                row.iter().zip(x).filter(|(a, v)| **a && **v).count() % 2 == b as usize
            })
        })
        .collect()
}

proptest! {
    #[test]
    fn rank_matches_basis_and_expansions_reproduce_columns(rows in matrix()) {
        let mat = BitMatrix::from_bool_rows(&rows).unwrap();
        let basis = independent_columns(&mat);
        prop_assert_eq!(rank(&mat), basis.len());
        for col in 0..mat.cols() {
            if basis.contains(&col) {
                continue;
            }
            let combo = express_in_basis(&mat, &basis, col).unwrap();
            let mut sum = BitVec::zeros(mat.rows());
            for c in combo {
                sum.xor_assign(mat.column(c));
            }
            prop_assert_eq!(&sum, mat.column(col));
        }
    }

    #[test]
    fn solve_affine_agrees_with_brute_force(
        rows in matrix(),
        rhs_seed in prop::collection::vec(any::<bool>(), 12),
    ) {
        let rhs = &rhs_seed[..rows.len()];
        let mat = BitMatrix::from_bool_rows(&rows).unwrap();
        let solutions = brute_solutions(&rows, rhs);
        match solve_affine(&mat, &BitVec::from_bools(rhs)).unwrap() {
            Some(x) => prop_assert!(solutions.contains(&x.to_bools())),
            None => prop_assert!(solutions.is_empty()),
        }
    }

    #[test]
    fn rank_invariant_under_row_operations(rows in matrix(), i in 0usize..12, j in 0usize..12) {
        let r0 = rank(&BitMatrix::from_bool_rows(&rows).unwrap());
        let (i, j) = (i % rows.len(), j % rows.len());
        let mut swapped = rows.clone();
        swapped.swap(i, j);
        prop_assert_eq!(rank(&BitMatrix::from_bool_rows(&swapped).unwrap()), r0);
        if i != j {
            let mut added = rows.clone();
            let src = added[j].clone();
            for (a, b) in added[i].iter_mut().zip(src) {
                *a ^= b;
            }
            prop_assert_eq!(rank(&BitMatrix::from_bool_rows(&added).unwrap()), r0);
        }
    }
}
