use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, SparseVec, Submodule};
use crate::scalar::{Scalar, ScalarDomain};

/// A grading vector; brackets add weights.
pub type Weight = Vec<i32>;

/// A finite-dimensional Leibniz algebra given by the brackets of basis elements.
///
/// An optional weight grading (`[e_i, e_j]` homogeneous of weight `w_i + w_j`) is
/// used to split the chain complex into independent blocks.
#[derive(Clone, Debug)]
pub struct LeibnizAlgebra {
    name: String,
    domain: ScalarDomain,
    labels: Vec<String>,
    /// `table[i * dim + j] = [e_i, e_j]`
    table: Vec<SparseVec>,
    weights: Option<Vec<Weight>>,
}

/// Perfectness and the two-sided center.
#[derive(Clone, Debug)]
pub struct StructuralReport {
    pub is_perfect: bool,
    pub center: Submodule,
}

impl LeibnizAlgebra {
    /// Builds and validates an algebra from its bracket table (`dim * dim` entries).
    pub fn new(
        name: impl Into<String>,
        domain: ScalarDomain,
        labels: Vec<String>,
        table: Vec<SparseVec>,
        weights: Option<Vec<Weight>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if table.len() != dim * dim {
            return Err(Error::Shape(format!(
                "bracket table has {} entries, expected {}",
                table.len(),
                dim * dim
            )));
        }
        if let Some(w) = &weights {
            if w.len() != dim {
                return Err(Error::Shape(format!("{} weights for dim {dim}", w.len())));
            }
        }
        for v in &table {
            if let Some(m) = v.max_index() {
                if m >= dim {
                    return Err(Error::Shape(format!(
                        "bracket coordinate {m} outside dim {dim}"
                    )));
                }
            }
            if let Some((_, c)) = v.iter().find(|(_, c)| !domain.contains(c)) {
                return Err(Error::DomainMismatch {
                    expected: domain,
                    found: c.domain(),
                });
            }
        }
        let algebra = LeibnizAlgebra {
            name: name.into(),
            domain,
            labels,
            table,
            weights,
        };
        algebra.check_weights()?;
        algebra.check_leibniz()?;
        Ok(algebra)
    }

    /// Builds an algebra from `(i, j, k, c)` quadruples meaning `[e_i, e_j] += c e_k`.
    pub fn from_structure(
        name: impl Into<String>,
        domain: ScalarDomain,
        labels: Vec<String>,
        structure: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let dim = labels.len();
        let mut raw: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in structure {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Shape(format!(
                    "structure entry ({i},{j},{k}) outside dim {dim}"
                )));
            }
            raw[i * dim + j].push((*k, c.clone()));
        }
        let table = raw.into_iter().map(SparseVec::from_entries).collect();
        Self::new(name, domain, labels, table, None)
    }

    /// The abelian algebra of dimension `dim`.
    pub fn abelian(domain: ScalarDomain, dim: usize) -> Self {
        LeibnizAlgebra {
            name: format!("abelian{dim}"),
            domain,
            labels: (0..dim).map(|i| format!("e{}", i + 1)).collect(),
            table: vec![SparseVec::new(); dim * dim],
            weights: None,
        }
    }

    fn check_weights(&self) -> Result<()> {
        let Some(w) = &self.weights else {
            return Ok(());
        };
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let target = add_weights(&w[i], &w[j]);
                if self
                    .bracket_basis(i, j)
                    .iter()
                    .any(|(k, _)| w[*k] != target)
                {
                    return Err(Error::WeightViolation(i, j));
                }
            }
        }
        Ok(())
    }

    fn check_leibniz(&self) -> Result<()> {
        let d = self.dim();
        let one = self.domain.one();
        let violation = (0..d * d).into_par_iter().find_map_first(|ij| {
            let (i, j) = (ij / d, ij % d);
            let xy = self.bracket_basis(i, j);
            for k in 0..d {
                // [x,[y,z]] = [[x,y],z] - [[x,z],y]
                let lhs = self.bracket_left_basis(i, self.bracket_basis(j, k));
                let mut rhs = self.bracket_right_basis(xy, k);
                rhs.add_scaled(
                    &-&one,
                    &self.bracket_right_basis(self.bracket_basis(i, k), j),
                );
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
            None
        });
        match violation {
            Some((i, j, k)) => Err(Error::LeibnizViolation(i, j, k)),
            None => Ok(()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    /// Weight of basis element `i` (the empty weight when ungraded).
    pub fn weight(&self, i: usize) -> Weight {
        self.weights
            .as_ref()
            .map(|w| w[i].clone())
            .unwrap_or_default()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn table(&self) -> &[SparseVec] {
        &self.table
    }

    fn bracket_left_basis(&self, i: usize, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in y.iter() {
            out.add_scaled(c, self.bracket_basis(i, *j));
        }
        out
    }

    fn bracket_right_basis(&self, x: &SparseVec, j: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in x.iter() {
            out.add_scaled(c, self.bracket_basis(*i, j));
        }
        out
    }

    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(&(a * b), self.bracket_basis(*i, *j));
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.domain.one())
    }

    /// `[L, L]` as a submodule of `L`.
    pub fn derived_span(&self) -> Submodule {
        Submodule::spanned_by(self.domain, self.dim(), self.table.iter().cloned())
    }

    /// `[L, L] = L`; over `Z` the derived lattice must have index 1.
    pub fn is_perfect(&self) -> bool {
        let s = self.derived_span();
        s.is_full() && (self.domain.is_field() || s.pivot_product() == 1.into())
    }

    /// `{ z : [z, L] = [L, z] = 0 }`.
    pub fn center(&self) -> Submodule {
        let d = self.dim();
        // row (side, b, c): coefficient of z_a is the c-coordinate of [e_a, e_b] or [e_b, e_a]
        let mut m = ExactMatrix::zeros(self.domain, 2 * d * d, d);
        for a in 0..d {
            for b in 0..d {
                for (c, v) in self.bracket_basis(a, b).iter() {
                    m.set(b * d + c, a, v.clone());
                }
                for (c, v) in self.bracket_basis(b, a).iter() {
                    m.set(d * d + b * d + c, a, v.clone());
                }
            }
        }
        m.kernel_module()
    }

    pub fn structural_report(&self) -> StructuralReport {
        StructuralReport {
            is_perfect: self.is_perfect(),
            center: self.center(),
        }
    }

    /// Checks `[k, e_i] = [e_i, k] = 0` for every basis element.
    pub fn is_central(&self, k: &SparseVec) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.basis_vector(i);
            self.bracket(k, &e).is_zero() && self.bracket(&e, k).is_zero()
        })
    }
}

pub(crate) fn add_weights(a: &[i32], b: &[i32]) -> Weight {
    if a.is_empty() {
        return b.to_vec();
    }
    if b.is_empty() {
        return a.to_vec();
    }
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(d: usize) -> Vec<String> {
        (1..=d).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn abelian_and_nilpotent_leibniz() {
        let f2 = ScalarDomain::PrimeField(2);
        let one = f2.one();
        assert!(LeibnizAlgebra::from_structure("a", f2, labels(1), &[]).is_ok());
        // [e1, e1] = e2 is Leibniz but not Lie
        let l =
            LeibnizAlgebra::from_structure("nl", f2, labels(2), &[(0, 0, 1, one.clone())]).unwrap();
        assert!(!l.is_perfect());
        assert_eq!(l.center().rank(), 1);
    }

    #[test]
    fn symmetric_bracket_fails_leibniz() {
        let q = ScalarDomain::Rationals;
        let one = q.one();
        // [e1, e2] = [e2, e1] = e1: [e2,[e2,e1]] = [e2,e1] = e1 while
        // [[e2,e2],e1] - [[e2,e1],e2] = -[e1,e2] = -e1
        let r = LeibnizAlgebra::from_structure(
            "bad",
            q,
            labels(2),
            &[(0, 1, 0, one.clone()), (1, 0, 0, one)],
        );
        assert!(matches!(r, Err(Error::LeibnizViolation(..))));
    }

    #[test]
    fn abelian_center_is_everything() {
        let l = LeibnizAlgebra::abelian(ScalarDomain::PrimeField(3), 3);
        let s = l.structural_report();
        assert!(!s.is_perfect);
        assert_eq!(s.center.rank(), 3);
    }
}
