use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::echelon::Submodule;
use super::smith::{smith_dense, SmithForm};
use super::sparse::SparseVec;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarDomain};

/// A sparse matrix with exact entries. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    domain: ScalarDomain,
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl ExactMatrix {
    pub fn zeros(domain: ScalarDomain, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            domain,
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(domain: ScalarDomain, n: usize) -> Self {
        let mut m = Self::zeros(domain, n, n);
        for i in 0..n {
            m.set(i, i, domain.one());
        }
        m
    }

    pub fn from_rows_i64(domain: ScalarDomain, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut m = Self::zeros(domain, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, domain.from_i64(x));
            }
        }
        m
    }

    pub fn from_columns(domain: ScalarDomain, rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = Self::zeros(domain, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (i, v) in c.iter() {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        assert!(self.domain.contains(&v), "entry outside {}", self.domain);
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(|| self.domain.zero())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.cols];
        for ((r, c), v) in &self.entries {
            cols[*c].push((*r, v.clone()));
        }
        cols.into_iter().map(SparseVec::from_entries).collect()
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for ((r, c), v) in &self.entries {
            rows[*r].push((*c, v.clone()));
        }
        rows.into_iter().map(SparseVec::from_entries).collect()
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for ((r, c), a) in &self.entries {
            if let Some(x) = v.get(*c) {
                out.push((*r, a * x));
            }
        }
        SparseVec::from_entries(out)
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let cols: Vec<SparseVec> = other.columns().iter().map(|c| self.mul_vec(c)).collect();
        Ok(ExactMatrix::from_columns(self.domain, self.rows, &cols))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Column span as an echelonized submodule of `K^rows`.
    pub fn column_span(&self) -> Submodule {
        Submodule::spanned_by(self.domain, self.rows, self.columns())
    }

    /// Rank over the fraction field of the domain.
    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.column_span().rank()
        } else {
            Submodule::spanned_by(self.domain, self.cols, self.row_vectors()).rank()
        }
    }

    /// Echelonized right null space. Over `Z` this is a saturated lattice.
    pub fn kernel_module(&self) -> Submodule {
        if self.domain.is_field() {
            let rref = Submodule::spanned_by(self.domain, self.cols, self.row_vectors());
            let pivots: Vec<usize> = rref.pivots().collect();
            let mut kernel = Submodule::new(self.domain, self.cols);
            let is_pivot = |j: usize| pivots.binary_search(&j).is_ok();
            for free in (0..self.cols).filter(|&j| !is_pivot(j)) {
                let mut v = vec![(free, self.domain.one())];
                for (p, row) in rref.basis_ref() {
                    if let Some(c) = row.get(free) {
                        v.push((*p, -c));
                    }
                }
                kernel.insert(SparseVec::from_entries(v));
            }
            kernel
        } else {
            // HNF of [A e_j | e_j]; rows whose A-part vanished span the kernel.
            let m = self.rows;
            let aug = self.columns().into_iter().enumerate().map(|(j, c)| {
                let mut e = c.into_entries();
                e.push((m + j, self.domain.one()));
                SparseVec::from_entries(e)
            });
            let lattice = Submodule::spanned_by(self.domain, m + self.cols, aug);
            let mut kernel = Submodule::new(self.domain, self.cols);
            for (p, row) in lattice.basis_ref() {
                if *p >= m {
                    kernel.insert(row.map_indices(|i| i.checked_sub(m)));
                }
            }
            kernel
        }
    }

    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        self.kernel_module().basis()
    }

    pub fn smith_normal_form(&self) -> Result<SmithForm> {
        if self.domain != ScalarDomain::Integers {
            return Err(Error::DomainMismatch {
                expected: ScalarDomain::Integers,
                found: self.domain,
            });
        }
        let span = self.column_span();
        let dense: Vec<Vec<BigInt>> = span
            .basis()
            .iter()
            .map(|v| {
                let mut row = vec![BigInt::zero(); self.rows];
                for (i, x) in v.iter() {
                    row[*i] = x.as_bigint();
                }
                row
            })
            .collect();
        Ok(smith_dense(&dense, self.rows))
    }
}
