//! Rewrite-rule model of `stl_n(R)` on the spanning set
//! `X_ij(r_lambda)`, `t(r_lambda, r_mu)`, `T_1j(r_lambda, 1)`, and the exhaustive cocycle check.

use rayon::prelude::*;
use serde::Serialize;

use super::cocycle::{CocycleTarget, Descriptor};
use super::theta::ThetaMap;
use crate::assoc::AssocAlgebra;
use crate::error::Result;
use crate::linalg::SparseVec;
use crate::scalar::Scalar;

/// Symbolic coordinates: `[X part | t(., .) symbols | T_1j(., 1) symbols]`.
#[derive(Clone, Debug)]
pub struct SymbolicStl<'a> {
    pub n: usize,
    pub ring: &'a AssocAlgebra,
    d: usize,
}

impl<'a> SymbolicStl<'a> {
    pub fn new(n: usize, ring: &'a AssocAlgebra) -> Self {
        SymbolicStl {
            n,
            ring,
            d: ring.dim(),
        }
    }

    fn x_len(&self) -> usize {
        self.n * (self.n - 1) * self.d
    }

    pub fn len(&self) -> usize {
        self.x_len() + self.d * self.d + (self.n - 1) * self.d
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, s: &Descriptor) -> usize {
        let d = self.d;
        match *s {
            Descriptor::X { i, j, lambda } => {
                let slot = i * (self.n - 1) + if j > i { j - 1 } else { j };
                slot * d + lambda
            }
            Descriptor::SmallT { lambda, mu } => self.x_len() + lambda * d + mu,
            Descriptor::T1 { j, lambda } => self.x_len() + d * d + (j - 1) * d + lambda,
        }
    }

    pub fn decode(&self, idx: usize) -> Descriptor {
        let d = self.d;
        if idx < self.x_len() {
            let (slot, lambda) = (idx / d, idx % d);
            let i = slot / (self.n - 1);
            let r = slot % (self.n - 1);
            let j = if r >= i { r + 1 } else { r };
            Descriptor::X { i, j, lambda }
        } else if idx < self.x_len() + d * d {
            let k = idx - self.x_len();
            Descriptor::SmallT {
                lambda: k / d,
                mu: k % d,
            }
        } else {
            let k = idx - self.x_len() - d * d;
            Descriptor::T1 {
                j: k / d + 1,
                lambda: k % d,
            }
        }
    }

    pub fn label(&self, idx: usize) -> String {
        let lab = |l: usize| self.ring.labels()[l].clone();
        match self.decode(idx) {
            Descriptor::X { i, j, lambda } => format!("X{}{}({})", i + 1, j + 1, lab(lambda)),
            Descriptor::SmallT { lambda, mu } => format!("t({},{})", lab(lambda), lab(mu)),
            Descriptor::T1 { j, lambda } => format!("T1{}({},1)", j + 1, lab(lambda)),
        }
    }

    pub fn is_h(&self, idx: usize) -> bool {
        idx >= self.x_len()
    }

    /// `X_ij(a)` for a ring vector `a`.
    pub fn x(&self, i: usize, j: usize, a: &SparseVec) -> SparseVec {
        a.map_indices(|lambda| Some(self.index(&Descriptor::X { i, j, lambda })))
    }

    /// `t(a, b)`, bilinear in ring vectors.
    pub fn t(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut e = Vec::new();
        for (l, x) in a.iter() {
            for (m, y) in b.iter() {
                e.push((
                    self.index(&Descriptor::SmallT { lambda: *l, mu: *m }),
                    x * y,
                ));
            }
        }
        SparseVec::from_entries(e)
    }

    /// `T_1j(a, 1)`; zero for `j = 0` (the convention `T_11 = 0`).
    pub fn t1(&self, j: usize, a: &SparseVec) -> SparseVec {
        if j == 0 {
            return SparseVec::new();
        }
        a.map_indices(|lambda| Some(self.index(&Descriptor::T1 { j, lambda })))
    }

    /// Normal form `T_ij(a, b) = t(a, b) - T_1i(ab, 1) + T_1j(ba, 1)`.
    pub fn big_t(&self, i: usize, j: usize, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let one = self.ring.domain().one();
        let mut v = self.t(a, b);
        v.add_scaled(&-&one, &self.t1(i, &self.ring.mul(a, b)));
        v.add_scaled(&one, &self.t1(j, &self.ring.mul(b, a)));
        v
    }

    fn r(&self, lambda: usize) -> SparseVec {
        self.ring.basis_vector(lambda)
    }

    /// `[X_ij(a), X_kl(b)]` by the defining relations.
    fn bracket_xx(
        &self,
        (i, j, a): (usize, usize, usize),
        (k, l, b): (usize, usize, usize),
    ) -> SparseVec {
        let ring = self.ring;
        if j == k && i == l {
            self.big_t(i, j, &self.r(a), &self.r(b))
        } else if j == k {
            self.x(i, l, ring.mul_basis(a, b))
        } else if i == l {
            self.x(k, j, ring.mul_basis(b, a)).neg()
        } else {
            SparseVec::new()
        }
    }

    /// `[T_ij(a, b), X_kl(c)]` for ring vectors `a`, `b` and a basis element `c`.
    fn bracket_tx(
        &self,
        (i, j): (usize, usize),
        a: &SparseVec,
        b: &SparseVec,
        (k, l, c): (usize, usize, usize),
    ) -> SparseVec {
        let ring = self.ring;
        let c = self.r(c);
        let m3 = |x: &SparseVec, y: &SparseVec, z: &SparseVec| ring.mul3(x, y, z);
        let one = ring.domain().one();
        if (k, l) == (i, j) {
            let mut v = m3(a, b, &c);
            v.add_scaled(&one, &m3(&c, b, a));
            self.x(i, j, &v)
        } else if (k, l) == (j, i) {
            let mut v = m3(&c, a, b);
            v.add_scaled(&one, &m3(b, a, &c));
            self.x(j, i, &v).neg()
        } else if k == i {
            self.x(i, l, &m3(a, b, &c))
        } else if l == i {
            self.x(k, i, &m3(&c, a, b)).neg()
        } else if l == j {
            self.x(k, j, &m3(&c, b, a))
        } else if k == j {
            self.x(j, l, &m3(b, a, &c)).neg()
        } else {
            SparseVec::new()
        }
    }

    /// `[t(a, b), X_kl(c)]`.
    fn bracket_smallt_x(&self, a: usize, b: usize, (k, l, c): (usize, usize, usize)) -> SparseVec {
        let ring = self.ring;
        let comm = ring.commutator(&self.r(a), &self.r(b));
        let c = self.r(c);
        if k == 0 {
            self.x(k, l, &ring.mul(&comm, &c))
        } else if l == 0 {
            self.x(k, l, &ring.mul(&c, &comm)).neg()
        } else {
            SparseVec::new()
        }
    }

    fn h_bracket_x(&self, h: Descriptor, x: (usize, usize, usize)) -> SparseVec {
        match h {
            Descriptor::SmallT { lambda, mu } => self.bracket_smallt_x(lambda, mu, x),
            Descriptor::T1 { j, lambda } => {
                self.bracket_tx((0, j), &self.r(lambda), &self.ring.one(), x)
            }
            Descriptor::X { .. } => unreachable!(),
        }
    }

    /// Bracket of two symbolic basis elements; `None` when both lie in `H`.
    pub fn bracket_basis(&self, p: usize, q: usize) -> Option<SparseVec> {
        let as_x = |s: Descriptor| match s {
            Descriptor::X { i, j, lambda } => Some((i, j, lambda)),
            _ => None,
        };
        let (sp, sq) = (self.decode(p), self.decode(q));
        match (as_x(sp), as_x(sq)) {
            (Some(x), Some(y)) => Some(self.bracket_xx(x, y)),
            (None, Some(y)) => Some(self.h_bracket_x(sp, y)),
            (Some(x), None) => Some(self.h_bracket_x(sq, x).neg()),
            (None, None) => None,
        }
    }
}

/// Outcome of the exhaustive cocycle check.
#[derive(Clone, Debug, Serialize)]
pub struct CocycleReport {
    pub n: usize,
    pub ring: String,
    pub passed: bool,
    /// triples with at most one `H` element, evaluated explicitly
    pub evaluated: usize,
    /// triples with two or more `H` elements, where every term vanishes
    pub vacuous: usize,
    pub witness: Option<String>,
}

/// Bilinear extension of `psi` to symbolic vectors.
fn psi_vec(sym: &SymbolicStl, target: &CocycleTarget, u: &SparseVec, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (p, a) in u.iter().filter(|(p, _)| !sym.is_h(*p)) {
        let dp = sym.decode(*p);
        for (q, b) in v.iter().filter(|(q, _)| !sym.is_h(*q)) {
            let val = target.psi(&dp, &sym.decode(*q));
            out.add_scaled(&(a * b), &val);
        }
    }
    target.reduce(&out)
}

/// `J(x,y,z) = psi(x,[y,z]) + psi([x,z],y) - psi([x,y],z)` on every ordered triple of
/// symbolic basis elements, with the given index map.
pub fn verify_cocycle_with(n: usize, r: &AssocAlgebra, theta: ThetaMap) -> Result<CocycleReport> {
    let target = CocycleTarget::new(n, r, theta)?;
    let sym = SymbolicStl::new(n, r);
    let len = sym.len();
    let one = r.domain().one();
    let minus: Scalar = -&one;
    let brackets: Vec<Option<SparseVec>> = (0..len * len)
        .into_par_iter()
        .map(|pq| sym.bracket_basis(pq / len, pq % len))
        .collect();
    let br = |p: usize, q: usize| brackets[p * len + q].as_ref();
    let unit = |p: usize| SparseVec::unit(p, one.clone());

    let witness = (0..len * len).into_par_iter().find_map_first(|xy| {
        let (x, y) = (xy / len, xy % len);
        for z in 0..len {
            let h_count = [x, y, z].iter().filter(|&&p| sym.is_h(p)).count();
            if h_count >= 2 {
                continue;
            }
            let mut j = psi_vec(&sym, &target, &unit(x), br(y, z).unwrap());
            j.add_scaled(&one, &psi_vec(&sym, &target, br(x, z).unwrap(), &unit(y)));
            j.add_scaled(&minus, &psi_vec(&sym, &target, br(x, y).unwrap(), &unit(z)));
            let j = target.reduce(&j);
            if !j.is_zero() {
                return Some(format!(
                    "J({}, {}, {}) = {:?}",
                    sym.label(x),
                    sym.label(y),
                    sym.label(z),
                    j
                ));
            }
        }
        None
    });
    let h = len - n * (n - 1) * r.dim();
    let x = len - h;
    let vacuous = len * len * len - (x * x * x + 3 * x * x * h);
    Ok(CocycleReport {
        n,
        ring: r.name().to_string(),
        passed: witness.is_none(),
        evaluated: x * x * x + 3 * x * x * h,
        vacuous,
        witness,
    })
}

/// The cocycle check with the standard index map.
pub fn verify_cocycle(n: usize, r: &AssocAlgebra) -> Result<CocycleReport> {
    verify_cocycle_with(n, r, ThetaMap::build())
}

/// The check with the labels of `(1,2,3,4)` and `(1,2,4,3)` exchanged; expected to fail.
pub fn verify_cocycle_corrupted(r: &AssocAlgebra) -> Result<CocycleReport> {
    verify_cocycle_with(
        4,
        r,
        ThetaMap::build().with_swapped([1, 2, 3, 4], [1, 2, 4, 3]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{dual, ground};
    use crate::ScalarDomain;

    #[test]
    fn decode_roundtrip() {
        let r = dual(ScalarDomain::PrimeField(2));
        let s = SymbolicStl::new(4, &r);
        for idx in 0..s.len() {
            assert_eq!(s.index(&s.decode(idx)), idx);
        }
    }

    #[test]
    fn cocycle_small_cases() {
        let f2 = ScalarDomain::PrimeField(2);
        let f3 = ScalarDomain::PrimeField(3);
        assert!(verify_cocycle(4, &ground(f2)).unwrap().passed);
        assert!(verify_cocycle(3, &ground(f3)).unwrap().passed);
        let bad = verify_cocycle_corrupted(&ground(f2)).unwrap();
        assert!(!bad.passed);
        assert!(bad.witness.is_some());
    }
}
