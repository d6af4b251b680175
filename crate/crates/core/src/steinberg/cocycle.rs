//! The cocycles `psi` with values in `W = R_2^6` (n = 4) and `U = R_3^6` (n = 3).

use serde::Serialize;

use super::theta::ThetaMap;
use crate::assoc::{AssocAlgebra, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;

/// A generator `X_ij(r_lambda)` (0-based `i`, `j`), or an element of the `H` part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Descriptor {
    X {
        i: usize,
        j: usize,
        lambda: usize,
    },
    /// `t(r_lambda, r_mu)`
    SmallT {
        lambda: usize,
        mu: usize,
    },
    /// `T_{1j}(r_lambda, 1)`
    T1 {
        j: usize,
        lambda: usize,
    },
}

/// `sign(m, n) = 1` if `m < n`, `-1` if `m > n`.
pub fn sign(m: usize, n: usize) -> i64 {
    if m < n {
        1
    } else {
        -1
    }
}

/// Six copies of `R_m` with coordinates `copy * len + g`.
#[derive(Clone, Debug)]
pub struct CocycleTarget {
    pub n: usize,
    pub quotient: QuotientAlgebra,
    pub theta: ThetaMap,
    /// `products[lambda * d + mu]` = class of `r_lambda r_mu` in quotient coordinates
    products: Vec<SparseVec>,
    ring_dim: usize,
}

impl CocycleTarget {
    /// `W = R_2^6` for `n = 4`, `U = R_3^6` for `n = 3`.
    pub fn new(n: usize, r: &AssocAlgebra, theta: ThetaMap) -> Result<Self> {
        let m = match n {
            4 => 2,
            3 => 3,
            _ => return Err(Error::UnsupportedSize(n)),
        };
        let quotient = r.quotient_rm(m);
        let d = r.dim();
        let mut products = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                products.push(quotient.project(r.mul_basis(a, b)));
            }
        }
        Ok(CocycleTarget {
            n,
            quotient,
            theta,
            products,
            ring_dim: d,
        })
    }

    pub fn m(&self) -> u32 {
        self.quotient.m()
    }

    /// Generators of one copy of `R_m`.
    pub fn copy_len(&self) -> usize {
        self.quotient.len()
    }

    pub fn len(&self) -> usize {
        6 * self.copy_len()
    }

    pub fn is_empty(&self) -> bool {
        self.copy_len() == 0
    }

    /// Names of the six copies: `1..6` for `n = 4`, `+1, +2, +3, -1, -2, -3` for `n = 3`.
    pub fn copy_labels(&self) -> Vec<String> {
        if self.n == 4 {
            (1..=6).map(|m| m.to_string()).collect()
        } else {
            ["+1", "+2", "+3", "-1", "-2", "-3"]
                .map(String::from)
                .to_vec()
        }
    }

    /// Copy index of `(+i)` (0-based `i`) for `n = 3`.
    pub fn plus(i: usize) -> usize {
        i
    }

    /// Copy index of `(-j)` (0-based `j`) for `n = 3`.
    pub fn minus(j: usize) -> usize {
        3 + j
    }

    /// `e_copy(v)` for `v` in quotient coordinates.
    pub fn embed(&self, copy: usize, v: &SparseVec) -> SparseVec {
        let q = self.copy_len();
        v.map_indices(|g| Some(copy * q + g))
    }

    /// Class of `r_lambda r_mu` placed in `copy`, times `sign`.
    pub fn product_in(&self, copy: usize, lambda: usize, mu: usize, sign: i64) -> SparseVec {
        let v = &self.products[lambda * self.ring_dim + mu];
        let s = self.quotient.domain().from_i64(sign);
        self.reduce(&self.embed(copy, v).scale(&s))
    }

    /// Canonical form (torsion coordinates reduced) of a `W`/`U` vector.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let q = self.copy_len();
        let mut out = SparseVec::new();
        for copy in 0..6 {
            let part = v.map_indices(|k| (k / q == copy).then(|| k % q));
            if !part.is_zero() {
                out.add_scaled(
                    &self.quotient.domain().one(),
                    &self.embed(copy, &self.quotient.normalize(&part)),
                );
            }
        }
        out
    }

    /// `psi` on two descriptors.
    pub fn psi(&self, x: &Descriptor, y: &Descriptor) -> SparseVec {
        match (self.n, x, y) {
            (
                4,
                Descriptor::X { i, j, lambda },
                Descriptor::X {
                    i: k,
                    j: l,
                    lambda: mu,
                },
            ) => psi4(&self.theta, self, (*i, *j, *lambda), (*k, *l, *mu)),
            (
                3,
                Descriptor::X { i, j, lambda },
                Descriptor::X {
                    i: k,
                    j: l,
                    lambda: mu,
                },
            ) => psi3(self, (*i, *j, *lambda), (*k, *l, *mu)),
            _ => SparseVec::new(),
        }
    }
}

/// `psi(X_ij(r), X_kl(s)) = e_theta(ijkl)(rs)` for distinct `i, j, k, l`; zero otherwise.
pub fn psi4(
    theta: &ThetaMap,
    target: &CocycleTarget,
    (i, j, r): (usize, usize, usize),
    (k, l, s): (usize, usize, usize),
) -> SparseVec {
    let distinct = i != j && i != k && i != l && j != k && j != l && k != l;
    if !distinct {
        return SparseVec::new();
    }
    target.product_in(theta.coordinate(i, j, k, l), r, s, 1)
}

/// Row rule `psi(X_ij(r), X_ik(s)) = sign(j,k) (rs)^(+i)`, column rule
/// `psi(X_ij(r), X_kj(s)) = sign(i,k) (rs)^(-j)`, zero otherwise.
pub fn psi3(
    target: &CocycleTarget,
    (i, j, r): (usize, usize, usize),
    (k, l, s): (usize, usize, usize),
) -> SparseVec {
    if i == k && j != l {
        target.product_in(CocycleTarget::plus(i), r, s, sign(j, l))
    } else if j == l && i != k {
        target.product_in(CocycleTarget::minus(j), r, s, sign(i, k))
    } else {
        SparseVec::new()
    }
}
