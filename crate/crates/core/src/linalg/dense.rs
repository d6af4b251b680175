//! Gauss-Jordan inversion for change-of-basis matrices.

use super::sparse::SparseVec;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarDomain};

/// Inverse of the square matrix whose columns are `columns`, returned as columns.
///
/// Over `Z` the inverse is computed over `Q` and must come out integral.
pub fn invert_columns(domain: ScalarDomain, columns: &[SparseVec]) -> Result<Vec<SparseVec>> {
    let n = columns.len();
    let work_domain = if domain == ScalarDomain::Integers {
        ScalarDomain::Rationals
    } else {
        domain
    };
    let lift = |s: &Scalar| -> Scalar {
        if domain == ScalarDomain::Integers {
            Scalar::Rational(s.to_rational())
        } else {
            s.clone()
        }
    };
    // a[i][j] = columns[j][i], augmented with identity
    let mut a: Vec<Vec<Scalar>> = vec![vec![work_domain.zero(); 2 * n]; n];
    for (j, c) in columns.iter().enumerate() {
        for (i, v) in c.iter() {
            if *i >= n {
                return Err(Error::Shape(format!("row {i} outside {n}x{n} matrix")));
            }
            a[*i][j] = lift(v);
        }
    }
    for (i, row) in a.iter_mut().enumerate() {
        row[n + i] = work_domain.one();
    }
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::Singular(domain))?;
        a.swap(col, piv);
        let inv = a[col][col].inverse().unwrap();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut entries = Vec::new();
        for (i, row) in a.iter().enumerate() {
            let x = &row[n + j];
            if x.is_zero() {
                continue;
            }
            let v = domain
                .from_rational(&x.to_rational())
                .ok_or(Error::Singular(domain))?;
            entries.push((
                i,
                if domain == ScalarDomain::Integers {
                    v
                } else {
                    x.clone()
                },
            ));
        }
        out.push(SparseVec::from_entries(entries));
    }
    Ok(out)
}

/// Applies a matrix given by columns to a vector.
pub fn apply_columns(columns: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (j, c) in v.iter() {
        out.add_scaled(c, &columns[*j]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodular_integer_inverse() {
        let z = ScalarDomain::Integers;
        let cols = vec![
            SparseVec::from_dense(&[z.from_i64(2), z.from_i64(1)]),
            SparseVec::from_dense(&[z.from_i64(1), z.from_i64(1)]),
        ];
        let inv = invert_columns(z, &cols).unwrap();
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(apply_columns(&inv, c), SparseVec::unit(j, z.one()));
        }
    }

    #[test]
    fn non_unimodular_integer_matrix_is_rejected() {
        let z = ScalarDomain::Integers;
        let cols = vec![SparseVec::unit(0, z.from_i64(2))];
        assert!(invert_columns(z, &cols).is_err());
    }
}
