//! Incrementally maintained submodules of `K^n`.
//!
//! Over a field the basis is kept in reduced row echelon form (leading entry 1,
//! zeros in every other pivot column). Over `Z` it is kept in Hermite normal
//! form: positive pivots, and every entry above a pivot reduced into
//! `[0, pivot)`. No saturation is ever applied, so `2Z` stays `2Z`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::sparse::{DenseAccumulator, SparseVec};
use crate::scalar::{Scalar, ScalarDomain};

#[derive(Clone, Debug)]
pub struct Submodule {
    domain: ScalarDomain,
    ambient: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Submodule {
    pub fn new(domain: ScalarDomain, ambient: usize) -> Self {
        Submodule {
            domain,
            ambient,
            rows: BTreeMap::new(),
        }
    }

    pub fn spanned_by<I: IntoIterator<Item = SparseVec>>(
        domain: ScalarDomain,
        ambient: usize,
        gens: I,
    ) -> Self {
        let mut s = Submodule::new(domain, ambient);
        for g in gens {
            s.insert(g);
        }
        s
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Basis vectors in increasing pivot order.
    pub fn basis(&self) -> Vec<SparseVec> {
        self.rows.values().cloned().collect()
    }

    pub fn basis_ref(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }

    /// Adds `v` to the generating set; returns whether the submodule grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        if self.domain.is_field() {
            self.insert_field(v)
        } else {
            self.insert_integer(v)
        }
    }

    /// Canonical remainder of `v`: zero exactly when `v` lies in the submodule.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        if self.domain.is_field() {
            self.reduce_field(v)
        } else {
            self.reduce_integer(v)
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_all(&self, other: &Submodule) -> bool {
        other.rows.values().all(|v| self.contains(v))
    }

    /// Exact coefficients of `v` with respect to `basis()`, if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let mut rest = v.clone();
        let mut coords = vec![self.domain.zero(); self.rows.len()];
        for (k, (p, row)) in self.rows.iter().enumerate() {
            let Some(c) = rest.get(*p).cloned() else {
                continue;
            };
            let lead = row.get(*p).expect("pivot entry");
            let q = c.checked_div(lead)?;
            rest.add_scaled(&-&q, row);
            coords[k] = q;
        }
        rest.is_zero().then_some(coords)
    }

    fn reduce_field(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(&SparseVec, Scalar)> = v
            .iter()
            .filter_map(|(i, c)| self.rows.get(i).map(|r| (r, c.clone())))
            .collect();
        if hits.is_empty() {
            return v.clone();
        }
        let fill: usize = hits.iter().map(|(r, _)| r.nnz()).sum::<usize>() + v.nnz();
        if fill * 2 > self.ambient {
            let mut acc = DenseAccumulator::new(self.ambient, self.domain);
            acc.add_scaled(&self.domain.one(), v);
            for (r, c) in &hits {
                acc.add_scaled(&-c, r);
            }
            acc.finish()
        } else {
            let mut out = v.clone();
            for (r, c) in &hits {
                out.add_scaled(&-c, r);
            }
            out
        }
    }

    fn insert_field(&mut self, v: SparseVec) -> bool {
        let r = self.reduce_field(&v);
        let Some((p, lead)) = r.leading().cloned() else {
            return false;
        };
        let r = r.scale(&lead.inverse().expect("field"));
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(p).cloned() {
                row.add_scaled(&-c, &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    fn reduce_integer(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (p, row) in &self.rows {
            let Some(c) = out.get(*p) else { continue };
            let q = c.as_bigint().div_floor(&row.get(*p).unwrap().as_bigint());
            if !q.is_zero() {
                out.add_scaled(&Scalar::Integer(-q), row);
            }
        }
        out
    }

    fn insert_integer(&mut self, v: SparseVec) -> bool {
        let mut v = v;
        let mut changed = false;
        loop {
            let Some((p, b)) = v.leading().cloned() else {
                break;
            };
            match self.rows.get(&p).cloned() {
                None => {
                    if b.is_negative() {
                        v = v.neg();
                    }
                    self.rows.insert(p, v);
                    changed = true;
                    break;
                }
                Some(row) => {
                    let a = row.get(p).unwrap().as_bigint();
                    let b = b.as_bigint();
                    if (&b % &a).is_zero() {
                        v.add_scaled(&Scalar::Integer(-(&b / &a)), &row);
                        continue;
                    }
                    let g = a.extended_gcd(&b);
                    let (s, t) = (g.x, g.y);
                    let gcd = g.gcd;
                    // [s t; -b/g a/g] is unimodular
                    let mut new_row = row.scale(&Scalar::Integer(s));
                    new_row.add_scaled(&Scalar::Integer(t), &v);
                    let mut rest = v.scale(&Scalar::Integer(&a / &gcd));
                    rest.add_scaled(&Scalar::Integer(-(&b / &gcd)), &row);
                    if new_row
                        .leading()
                        .map(|e| e.1.is_negative())
                        .unwrap_or(false)
                    {
                        new_row = new_row.neg();
                    }
                    self.rows.insert(p, new_row);
                    v = rest;
                    changed = true;
                }
            }
        }
        if changed {
            self.normalize_integer();
        }
        changed
    }

    fn normalize_integer(&mut self) {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        for (k, &p) in pivots.iter().enumerate() {
            let prow = self.rows[&p].clone();
            let lead: BigInt = prow.get(p).unwrap().as_bigint();
            for &q in &pivots[..k] {
                let row = self.rows.get_mut(&q).unwrap();
                if let Some(c) = row.get(p) {
                    let f = c.as_bigint().div_floor(&lead);
                    if !f.is_zero() {
                        row.add_scaled(&Scalar::Integer(-f), &prow);
                    }
                }
            }
        }
    }

    /// Product of the absolute pivots; for a full-rank lattice this is its index.
    pub fn pivot_product(&self) -> BigInt {
        self.rows
            .iter()
            .map(|(p, r)| r.get(*p).unwrap().as_bigint().abs())
            .product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(z: ScalarDomain, xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| z.from_i64(x)).collect::<Vec<_>>())
    }

    #[test]
    fn integer_lattice_keeps_index() {
        let z = ScalarDomain::Integers;
        let mut s = Submodule::new(z, 2);
        s.insert(iv(z, &[4, 0]));
        s.insert(iv(z, &[6, 0]));
        assert_eq!(s.rank(), 1);
        assert_eq!(s.basis()[0], iv(z, &[2, 0]));
        assert!(s.contains(&iv(z, &[10, 0])));
        assert!(!s.contains(&iv(z, &[1, 0])));
        assert!(!s.insert(iv(z, &[-8, 0])));
    }

    #[test]
    fn integer_hermite_form_is_reduced() {
        let z = ScalarDomain::Integers;
        let s = Submodule::spanned_by(z, 2, [iv(z, &[2, 5]), iv(z, &[0, 3])]);
        assert_eq!(s.basis(), vec![iv(z, &[2, 2]), iv(z, &[0, 3])]);
        assert_eq!(s.coordinates(&iv(z, &[2, 5])), Some(vec![z.one(), z.one()]));
        assert_eq!(s.coordinates(&iv(z, &[1, 0])), None);
    }

    #[test]
    fn field_rref() {
        let f = ScalarDomain::PrimeField(2);
        let mut s = Submodule::new(f, 3);
        assert!(s.insert(iv(f, &[1, 1, 0])));
        assert!(s.insert(iv(f, &[0, 1, 1])));
        assert!(!s.insert(iv(f, &[1, 0, 1])));
        assert_eq!(s.basis(), vec![iv(f, &[1, 0, 1]), iv(f, &[0, 1, 1])]);
    }
}
