use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::echelon::Submodule;
use super::smith::smith_dense;
use super::sparse::SparseVec;
use crate::error::{Error, Result};
use crate::scalar::ScalarDomain;

/// Isomorphism type of a finitely generated module over the coefficient domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SubquotientInvariants {
    /// A vector space over a field.
    Field {
        domain: ScalarDomain,
        dimension: usize,
    },
    /// `Z^free_rank` plus `Z/t` for each `t` in `torsion` (all `t > 1`, sorted by divisibility).
    Integer {
        free_rank: usize,
        torsion: Vec<BigInt>,
    },
}

impl SubquotientInvariants {
    pub fn zero(domain: ScalarDomain) -> Self {
        if domain.is_field() {
            SubquotientInvariants::Field {
                domain,
                dimension: 0,
            }
        } else {
            SubquotientInvariants::Integer {
                free_rank: 0,
                torsion: Vec::new(),
            }
        }
    }

    /// Vector-space dimension, or the free rank over `Z`.
    pub fn dimension(&self) -> usize {
        match self {
            SubquotientInvariants::Field { dimension, .. } => *dimension,
            SubquotientInvariants::Integer { free_rank, .. } => *free_rank,
        }
    }

    pub fn torsion(&self) -> &[BigInt] {
        match self {
            SubquotientInvariants::Field { .. } => &[],
            SubquotientInvariants::Integer { torsion, .. } => torsion,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dimension() == 0 && self.torsion().is_empty()
    }

    /// Direct sum.
    pub fn sum(&self, other: &Self) -> Self {
        match (self, other) {
            (
                SubquotientInvariants::Field { domain, dimension },
                SubquotientInvariants::Field { dimension: d2, .. },
            ) => SubquotientInvariants::Field {
                domain: *domain,
                dimension: dimension + d2,
            },
            (
                SubquotientInvariants::Integer { free_rank, torsion },
                SubquotientInvariants::Integer {
                    free_rank: f2,
                    torsion: t2,
                },
            ) => {
                let mut all: Vec<BigInt> = torsion.iter().chain(t2).cloned().collect();
                all.sort();
                SubquotientInvariants::Integer {
                    free_rank: free_rank + f2,
                    torsion: canonical_torsion(all),
                }
            }
            _ => panic!("mixing field and integer invariants"),
        }
    }

    /// `k` copies of `self`.
    pub fn repeat(&self, k: usize) -> Self {
        (0..k).fold(Self::zero(self.domain()), |acc, _| acc.sum(self))
    }

    pub fn domain(&self) -> ScalarDomain {
        match self {
            SubquotientInvariants::Field { domain, .. } => *domain,
            SubquotientInvariants::Integer { .. } => ScalarDomain::Integers,
        }
    }

    /// Sorted multiset of cyclic factor orders, free summands written as 0.
    pub fn factor_multiset(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self.torsion().to_vec();
        out.extend(std::iter::repeat(BigInt::from(0)).take(self.dimension()));
        out.sort();
        out
    }
}

/// Normal form of a finite abelian group given by any list of cyclic orders:
/// split into prime powers, then regroup into invariant factors `d_1 | d_2 | ...`.
fn canonical_torsion(t: Vec<BigInt>) -> Vec<BigInt> {
    let mut by_prime: BTreeMap<BigInt, Vec<BigInt>> = BTreeMap::new();
    for x in t {
        let mut x = x.abs();
        let mut p = BigInt::from(2);
        while !x.is_one() && !x.is_zero() {
            if &p * &p > x {
                by_prime.entry(x.clone()).or_default().push(x.clone());
                break;
            }
            let mut q = BigInt::one();
            while (&x % &p).is_zero() {
                x /= &p;
                q *= &p;
            }
            if !q.is_one() {
                by_prime.entry(p.clone()).or_default().push(q);
            }
            p += 1;
        }
    }
    let len = by_prime.values().map(|v| v.len()).max().unwrap_or(0);
    let mut out = vec![BigInt::one(); len];
    for powers in by_prime.values_mut() {
        powers.sort();
        let offset = len - powers.len();
        for (k, q) in powers.iter().enumerate() {
            out[offset + k] *= q;
        }
    }
    out
}

impl fmt::Display for SubquotientInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubquotientInvariants::Field { domain, dimension } => write!(f, "{domain}^{dimension}"),
            SubquotientInvariants::Integer { free_rank, torsion } => {
                let mut parts = Vec::new();
                if *free_rank > 0 {
                    parts.push(format!("Z^{free_rank}"));
                }
                for t in torsion {
                    parts.push(format!("Z/{t}"));
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
        }
    }
}

/// Invariants of `span(kernel_gens) / span(image_gens)`.
pub fn subquotient(
    kernel_gens: &[SparseVec],
    image_gens: &[SparseVec],
    domain: ScalarDomain,
    ambient: usize,
) -> Result<SubquotientInvariants> {
    let kernel = Submodule::spanned_by(domain, ambient, kernel_gens.iter().cloned());
    subquotient_of(&kernel, image_gens.iter())
}

/// Invariants of `kernel / span(image_gens)` for an already echelonized `kernel`.
pub fn subquotient_of<'a>(
    kernel: &Submodule,
    image_gens: impl Iterator<Item = &'a SparseVec>,
) -> Result<SubquotientInvariants> {
    let domain = kernel.domain();
    let k = kernel.rank();
    let mut image = Submodule::new(domain, k);
    for (index, g) in image_gens.enumerate() {
        let coords = kernel.coordinates(g).ok_or(Error::NotContained { index })?;
        image.insert(SparseVec::from_dense(&coords));
    }
    Ok(invariants_of_quotient(&image))
}

/// Invariants of `K^n / lattice` for `lattice` a submodule of `K^n`.
pub fn invariants_of_quotient(lattice: &Submodule) -> SubquotientInvariants {
    let domain = lattice.domain();
    let n = lattice.ambient_dim();
    if domain.is_field() {
        return SubquotientInvariants::Field {
            domain,
            dimension: n - lattice.rank(),
        };
    }
    let dense: Vec<Vec<BigInt>> = lattice
        .basis()
        .iter()
        .map(|v| {
            let mut row = vec![BigInt::from(0); n];
            for (i, x) in v.iter() {
                row[*i] = x.as_bigint();
            }
            row
        })
        .collect();
    let snf = smith_dense(&dense, n);
    SubquotientInvariants::Integer {
        free_rank: n - snf.rank,
        torsion: canonical_torsion(snf.diag),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(d: ScalarDomain, xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| d.from_i64(x)).collect::<Vec<_>>())
    }

    #[test]
    fn field_quotient_dimension() {
        let f3 = ScalarDomain::PrimeField(3);
        let kernel: Vec<SparseVec> = (0..4).map(|i| SparseVec::unit(i, f3.one())).collect();
        let image = vec![iv(f3, &[1, 2, 0, 1])];
        let inv = subquotient(&kernel, &image, f3, 4).unwrap();
        assert_eq!(inv.dimension(), 3);
    }

    #[test]
    fn integer_torsion() {
        let z = ScalarDomain::Integers;
        let kernel = vec![iv(z, &[1, 0]), iv(z, &[0, 1])];
        let image = vec![iv(z, &[2, 0]), iv(z, &[0, 2])];
        let inv = subquotient(&kernel, &image, z, 2).unwrap();
        assert_eq!(
            inv,
            SubquotientInvariants::Integer {
                free_rank: 0,
                torsion: vec![BigInt::from(2), BigInt::from(2)]
            }
        );
        assert_eq!(inv.to_string(), "Z/2 + Z/2");
    }

    #[test]
    fn containment_violation_is_reported() {
        let z = ScalarDomain::Integers;
        let kernel = vec![iv(z, &[2, 0])];
        let image = vec![iv(z, &[2, 0]), iv(z, &[1, 0])];
        assert!(matches!(
            subquotient(&kernel, &image, z, 2),
            Err(Error::NotContained { index: 1 })
        ));
    }
}
