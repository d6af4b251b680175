//! Explicit coordinates on a quotient module `K^n / S`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::echelon::Submodule;
use super::smith::smith_decompose;
use super::sparse::SparseVec;
use super::subquotient::SubquotientInvariants;
use crate::scalar::{Scalar, ScalarDomain};

/// A quotient `K^n / S` with a chosen generating set.
///
/// Generator `g` has order `moduli[g]` (`None` for a free generator), a lift
/// `lifts[g]` in `K^n`, and a coordinate functional `functionals[g]` such that
/// `v` maps to `(functionals[g] . v mod moduli[g])_g`.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    domain: ScalarDomain,
    ambient: usize,
    moduli: Vec<Option<BigInt>>,
    functionals: Vec<SparseVec>,
    lifts: Vec<SparseVec>,
    relations: Submodule,
}

impl QuotientModule {
    pub fn new(relations: Submodule) -> Self {
        let domain = relations.domain();
        let n = relations.ambient_dim();
        if domain.is_field() {
            let pivots: Vec<usize> = relations.pivots().collect();
            let free: Vec<usize> = (0..n)
                .filter(|j| pivots.binary_search(j).is_err())
                .collect();
            let functionals = free
                .iter()
                .map(|&g| {
                    let mut e = vec![(g, domain.one())];
                    for (p, row) in relations.basis_ref() {
                        if let Some(c) = row.get(g) {
                            e.push((*p, -c));
                        }
                    }
                    SparseVec::from_entries(e)
                })
                .collect();
            let lifts = free
                .iter()
                .map(|&g| SparseVec::unit(g, domain.one()))
                .collect();
            return QuotientModule {
                domain,
                ambient: n,
                moduli: vec![None; free.len()],
                functionals,
                lifts,
                relations,
            };
        }

        let dense: Vec<Vec<BigInt>> = relations
            .basis()
            .iter()
            .map(|v| {
                let mut row = vec![BigInt::zero(); n];
                for (i, x) in v.iter() {
                    row[*i] = x.as_bigint();
                }
                row
            })
            .collect();
        let snf = smith_decompose(&dense, n);
        let mut moduli = Vec::new();
        let mut functionals = Vec::new();
        let mut lifts = Vec::new();
        for i in 0..n {
            let modulus = snf.diag.get(i).cloned();
            if modulus.as_ref().map(|d| d.is_one()).unwrap_or(false) {
                continue;
            }
            moduli.push(modulus);
            // x -> (x V)_i ; lift is row i of V^{-1}
            functionals.push(SparseVec::from_entries(
                (0..n)
                    .map(|k| (k, Scalar::Integer(snf.v[k][i].clone())))
                    .collect(),
            ));
            lifts.push(SparseVec::from_entries(
                (0..n)
                    .map(|k| (k, Scalar::Integer(snf.v_inv[i][k].clone())))
                    .collect(),
            ));
        }
        QuotientModule {
            domain,
            ambient: n,
            moduli,
            functionals,
            lifts,
            relations,
        }
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.lifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lifts.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.moduli.iter().all(|m| m.is_none())
    }

    pub fn moduli(&self) -> &[Option<BigInt>] {
        &self.moduli
    }

    pub fn lift(&self, g: usize) -> &SparseVec {
        &self.lifts[g]
    }

    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    pub fn invariants(&self) -> SubquotientInvariants {
        if self.domain.is_field() {
            return SubquotientInvariants::Field {
                domain: self.domain,
                dimension: self.len(),
            };
        }
        SubquotientInvariants::Integer {
            free_rank: self.moduli.iter().filter(|m| m.is_none()).count(),
            torsion: self.moduli.iter().flatten().cloned().collect(),
        }
    }

    /// Coordinates of the class of `v`, torsion coordinates reduced into `[0, d)`.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        if self.domain.is_field() {
            let r = self.relations.reduce(v);
            // reduced vectors vanish on pivots; read off the free columns
            let mut out = Vec::new();
            for (g, lift) in self.lifts.iter().enumerate() {
                let col = lift.leading().unwrap().0;
                if let Some(c) = r.get(col) {
                    out.push((g, c.clone()));
                }
            }
            return SparseVec::from_entries(out);
        }
        let zero = self.domain.zero();
        let mut out = Vec::new();
        for (g, f) in self.functionals.iter().enumerate() {
            let mut c = f.dot(v, &zero);
            if let Some(d) = &self.moduli[g] {
                c = Scalar::Integer(c.as_bigint().mod_floor(d));
            }
            out.push((g, c));
        }
        SparseVec::from_entries(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(d: ScalarDomain, xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| d.from_i64(x)).collect::<Vec<_>>())
    }

    #[test]
    fn integer_quotient_with_torsion() {
        let z = ScalarDomain::Integers;
        let s = Submodule::spanned_by(z, 3, [iv(z, &[2, 2, 0]), iv(z, &[0, 1, 1])]);
        let q = QuotientModule::new(s.clone());
        assert_eq!(q.invariants().to_string(), "Z^1 + Z/2");
        for gen in s.basis() {
            assert!(q.project(&gen).is_zero());
        }
        for g in 0..q.len() {
            let p = q.project(q.lift(g));
            assert_eq!(p, SparseVec::unit(g, z.one()));
        }
    }

    #[test]
    fn field_quotient() {
        let f = ScalarDomain::PrimeField(3);
        let s = Submodule::spanned_by(f, 3, [iv(f, &[1, 1, 0])]);
        let q = QuotientModule::new(s);
        assert_eq!(q.len(), 2);
        assert!(q.project(&iv(f, &[1, 1, 0])).is_zero());
        assert!(!q.project(&iv(f, &[1, 0, 0])).is_zero());
        for g in 0..q.len() {
            assert_eq!(q.project(q.lift(g)), SparseVec::unit(g, f.one()));
        }
    }
}
