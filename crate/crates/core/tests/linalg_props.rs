use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use stl_homology::linalg::{smith_decompose, ExactMatrix, SparseVec, Submodule};
use stl_homology::ScalarDomain;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows)
}

fn domain() -> impl Strategy<Value = ScalarDomain> {
    prop_oneof![
        Just(ScalarDomain::PrimeField(2)),
        Just(ScalarDomain::PrimeField(3)),
        Just(ScalarDomain::PrimeField(5)),
        Just(ScalarDomain::Rationals),
    ]
}

/// Determinant by cofactor expansion (independent of the elimination code).
fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0] as i128;
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, x)| *x)
                        .collect()
                })
                .collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] as i128 * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k x k minors.
fn minor_gcd(m: &[Vec<i64>], k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in subsets(m.len(), k) {
        for cols in subsets(m[0].len(), k) {
            let sub: Vec<Vec<i64>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| m[r][c]).collect())
                .collect();
            g = g.gcd(&BigInt::from(det(&sub)));
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(k in domain(), m in matrix(4, 6)) {
        let a = ExactMatrix::from_rows_i64(k, &m);
        let kernel = a.kernel_basis();
        prop_assert_eq!(a.rank() + kernel.len(), 6);
        for v in &kernel {
            prop_assert!(a.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn smith_matches_minor_gcds(m in matrix(5, 5)) {
        let a = ExactMatrix::from_rows_i64(ScalarDomain::Integers, &m);
        let snf = a.smith_normal_form().unwrap();
        for w in snf.diag.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(snf.rank, ExactMatrix::from_rows_i64(ScalarDomain::Rationals, &m).rank());
        let mut prefix = BigInt::from(1);
        for k in 1..=5 {
            let g = minor_gcd(&m, k);
            if k <= snf.rank {
                prefix *= &snf.diag[k - 1];
                prop_assert_eq!(prefix.abs(), g);
            } else {
                prop_assert!(g.is_zero());
            }
        }
    }

    #[test]
    fn smith_decomposition_reconstructs(m in matrix(3, 4)) {
        let a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let s = smith_decompose(&a, 4);
        let mul = |x: &Vec<Vec<BigInt>>, y: &Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
            (0..x.len())
                .map(|i| (0..y[0].len()).map(|j| (0..y.len()).map(|k| &x[i][k] * &y[k][j]).sum()).collect())
                .collect()
        };
        let d = mul(&mul(&s.u, &a), &s.v);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expected = if i == j && i < s.diag.len() { s.diag[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(x, &expected);
            }
        }
    }

    #[test]
    fn submodule_coordinates_roundtrip(k in domain(), m in matrix(3, 5), c in prop::collection::vec(-4i64..=4, 3)) {
        let rows: Vec<SparseVec> = m
            .iter()
            .map(|r| SparseVec::from_dense(&r.iter().map(|&x| k.from_i64(x)).collect::<Vec<_>>()))
            .collect();
        let s = Submodule::spanned_by(k, 5, rows.clone());
        let mut v = SparseVec::new();
        for (row, x) in rows.iter().zip(&c) {
            v.add_scaled(&k.from_i64(*x), row);
        }
        prop_assert!(s.contains(&v));
        let coords = s.coordinates(&v).unwrap();
        let mut back = SparseVec::new();
        for (b, x) in s.basis().iter().zip(&coords) {
            back.add_scaled(x, b);
        }
        prop_assert_eq!(back, v);
    }
}
