//! Finite-dimensional unital associative algebras given by structure constants.

use crate::error::{Error, Result};
use crate::linalg::{
    subquotient_of, ExactMatrix, QuotientModule, SparseVec, Submodule, SubquotientInvariants,
};
use crate::scalar::{Scalar, ScalarDomain};

/// Echelonized basis of a submodule of an algebra (Hermite-reduced over `Z`).
pub type SubspaceBasis = Submodule;

/// A unital associative algebra `R` with basis `r_0, ..., r_{d-1}` containing `1`.
#[derive(Clone, Debug)]
pub struct AssocAlgebra {
    name: String,
    domain: ScalarDomain,
    labels: Vec<String>,
    unit: usize,
    /// `table[i * dim + j] = r_i r_j`
    table: Vec<SparseVec>,
}

impl AssocAlgebra {
    /// Validates structure constants given as `(i, j, k, c)` with `r_i r_j = sum c r_k`.
    pub fn new(
        name: impl Into<String>,
        domain: ScalarDomain,
        labels: Vec<String>,
        structure: &[(usize, usize, usize, Scalar)],
        unit_index: usize,
    ) -> Result<Self> {
        let dim = labels.len();
        if unit_index >= dim {
            return Err(Error::Shape(format!(
                "unit index {unit_index} >= dim {dim}"
            )));
        }
        let mut raw: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in structure {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Shape(format!(
                    "structure entry ({i},{j},{k}) outside dim {dim}"
                )));
            }
            if !domain.contains(c) {
                return Err(Error::DomainMismatch {
                    expected: domain,
                    found: c.domain(),
                });
            }
            raw[i * dim + j].push((*k, c.clone()));
        }
        let table = raw.into_iter().map(SparseVec::from_entries).collect();
        let algebra = AssocAlgebra {
            name: name.into(),
            domain,
            labels,
            unit: unit_index,
            table,
        };
        algebra.validate()?;
        Ok(algebra)
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_i64(
        name: impl Into<String>,
        domain: ScalarDomain,
        labels: &[&str],
        structure: &[(usize, usize, usize, i64)],
        unit_index: usize,
    ) -> Result<Self> {
        let s: Vec<_> = structure
            .iter()
            .map(|&(i, j, k, c)| (i, j, k, domain.from_i64(c)))
            .collect();
        Self::new(
            name,
            domain,
            labels.iter().map(|s| s.to_string()).collect(),
            &s,
            unit_index,
        )
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        let one = SparseVec::unit(self.unit, self.domain.one());
        for i in 0..d {
            let e = SparseVec::unit(i, self.domain.one());
            if self.mul(&one, &e) != e || self.mul(&e, &one) != e {
                return Err(Error::NotUnital(self.unit));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for k in 0..d {
                    let left = self.mul(ij, &SparseVec::unit(k, self.domain.one()));
                    let right =
                        self.mul(&SparseVec::unit(i, self.domain.one()), self.mul_basis(j, k));
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
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

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn one(&self) -> SparseVec {
        SparseVec::unit(self.unit, self.domain.one())
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.domain.one())
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                out.add_scaled(&(x * y), self.mul_basis(*i, *j));
            }
        }
        out
    }

    pub fn mul3(&self, a: &SparseVec, b: &SparseVec, c: &SparseVec) -> SparseVec {
        self.mul(&self.mul(a, b), c)
    }

    pub fn commutator(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = self.mul(a, b);
        out.add_scaled(&-self.domain.one(), &self.mul(b, a));
        out
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// Structure constants as `(i, j, k, c)` quadruples.
    pub fn structure(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.mul_basis(i, j).iter() {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// `[R, R]`: the span of all `r_i r_j - r_j r_i`.
    pub fn commutator_span(&self) -> SubspaceBasis {
        let d = self.dim();
        let mut s = Submodule::new(self.domain, d);
        for i in 0..d {
            for j in i + 1..d {
                s.insert(self.commutator(&self.basis_vector(i), &self.basis_vector(j)));
            }
        }
        s
    }

    fn left_multiples(&self, span: &Submodule) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for k in 0..self.dim() {
            for v in span.basis() {
                out.push(self.mul(&self.basis_vector(k), &v));
            }
        }
        out
    }

    fn right_multiples(&self, span: &Submodule) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for k in 0..self.dim() {
            for v in span.basis() {
                out.push(self.mul(&v, &self.basis_vector(k)));
            }
        }
        out
    }

    /// `R [R, R]` and `[R, R] R` as spans; they coincide for every associative `R`.
    pub fn commutator_ideal_sides(&self) -> (SubspaceBasis, SubspaceBasis) {
        let c = self.commutator_span();
        let left = Submodule::spanned_by(self.domain, self.dim(), self.left_multiples(&c));
        let right = Submodule::spanned_by(self.domain, self.dim(), self.right_multiples(&c));
        (left, right)
    }

    /// The two-sided ideal generated by `m a` and `ab - ba`, built from the generators
    /// `mR + R[R,R]` and closed under multiplication on both sides until stable.
    pub fn ideal_im(&self, m: u32) -> SubspaceBasis {
        self.ideal_im_with_closure(m).0
    }

    /// Also returns the number of generators the closure had to add beyond `mR + R[R,R]`
    /// (zero when the generating span is already an ideal).
    pub fn ideal_im_with_closure(&self, m: u32) -> (SubspaceBasis, usize) {
        let d = self.dim();
        let scalar_m = self.domain.from_i64(m as i64);
        let (left, _) = self.commutator_ideal_sides();
        let mut span = Submodule::new(self.domain, d);
        for i in 0..d {
            span.insert(self.basis_vector(i).scale(&scalar_m));
        }
        for v in left.basis() {
            span.insert(v);
        }
        let mut added = 0;
        loop {
            let mut grew = false;
            let extra: Vec<SparseVec> = self
                .left_multiples(&span)
                .into_iter()
                .chain(self.right_multiples(&span))
                .collect();
            for v in extra {
                if span.insert(v) {
                    grew = true;
                    added += 1;
                }
            }
            if !grew {
                break;
            }
        }
        (span, added)
    }

    /// `R_m = R / I_m`.
    pub fn quotient_rm(&self, m: u32) -> QuotientAlgebra {
        QuotientAlgebra::new(self, self.ideal_im(m), m)
    }

    /// `HH_1(R) = ker b_1 / im b_2` on the bar complex `R^{(x)3} -> R^{(x)2} -> R`.
    pub fn hochschild_h1(&self) -> SubquotientInvariants {
        let d = self.dim();
        let one = self.domain.one();
        let minus = -&one;
        let pair = |i: usize, j: usize| i * d + j;
        // b1(r_i (x) r_j) = r_i r_j - r_j r_i
        let b1_cols: Vec<SparseVec> = (0..d * d)
            .map(|p| {
                let (i, j) = (p / d, p % d);
                self.commutator(&self.basis_vector(i), &self.basis_vector(j))
            })
            .collect();
        let b1 = ExactMatrix::from_columns(self.domain, d, &b1_cols);
        let kernel = b1.kernel_module();
        let tensor = |a: &SparseVec, b: &SparseVec| -> SparseVec {
            let mut e = Vec::new();
            for (i, x) in a.iter() {
                for (j, y) in b.iter() {
                    e.push((pair(*i, *j), x * y));
                }
            }
            SparseVec::from_entries(e)
        };
        let mut image = Vec::with_capacity(d * d * d);
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    // b2(a (x) b (x) c) = ab (x) c - a (x) bc + ca (x) b
                    let (ea, eb, ec) = (
                        self.basis_vector(a),
                        self.basis_vector(b),
                        self.basis_vector(c),
                    );
                    let mut v = tensor(self.mul_basis(a, b), &ec);
                    v.add_scaled(&minus, &tensor(&ea, self.mul_basis(b, c)));
                    v.add_scaled(&one, &tensor(self.mul_basis(c, a), &eb));
                    image.push(v);
                }
            }
        }
        subquotient_of(&kernel, image.iter()).expect("b1 b2 = 0 in an associative algebra")
    }
}

/// `R / I` for a two-sided ideal `I`, with coordinates on a chosen generating set.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    m: u32,
    module: QuotientModule,
    /// products of generators in quotient coordinates, `table[g * len + h]`
    table: Vec<SparseVec>,
}

impl QuotientAlgebra {
    fn new(ambient: &AssocAlgebra, ideal: Submodule, m: u32) -> Self {
        let module = QuotientModule::new(ideal);
        let q = module.len();
        let mut table = Vec::with_capacity(q * q);
        for g in 0..q {
            for h in 0..q {
                let prod = ambient.mul(module.lift(g), module.lift(h));
                table.push(module.project(&prod));
            }
        }
        QuotientAlgebra { m, module, table }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn domain(&self) -> ScalarDomain {
        self.module.domain()
    }

    /// Number of generators (the dimension over a field).
    pub fn len(&self) -> usize {
        self.module.len()
    }

    pub fn is_empty(&self) -> bool {
        self.module.is_empty()
    }

    pub fn invariants(&self) -> SubquotientInvariants {
        self.module.invariants()
    }

    pub fn moduli(&self) -> &[Option<num_bigint::BigInt>] {
        self.module.moduli()
    }

    pub fn ideal(&self) -> &Submodule {
        self.module.relations()
    }

    /// The projection `R -> R/I` on a coordinate vector of `R`.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        self.module.project(v)
    }

    pub fn lift(&self, g: usize) -> &SparseVec {
        self.module.lift(g)
    }

    /// Product in quotient coordinates.
    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let q = self.len();
        let mut out = SparseVec::new();
        for (g, x) in a.iter() {
            for (h, y) in b.iter() {
                out.add_scaled(&(x * y), &self.table[g * q + h]);
            }
        }
        self.normalize(&out)
    }

    /// Reduces torsion coordinates into their canonical range.
    pub fn normalize(&self, v: &SparseVec) -> SparseVec {
        let lifted = v.iter().fold(SparseVec::new(), |mut acc, (g, c)| {
            acc.add_scaled(c, self.module.lift(*g));
            acc
        });
        self.module.project(&lifted)
    }

    /// `k * x` vanishes for every generator `x`.
    pub fn killed_by(&self, k: i64) -> bool {
        let s = self.domain().from_i64(k);
        (0..self.len()).all(|g| self.project(&self.lift(g).scale(&s)).is_zero())
    }

    pub fn is_commutative(&self) -> bool {
        let q = self.len();
        (0..q).all(|g| (0..q).all(|h| self.table[g * q + h] == self.table[h * q + g]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> ScalarDomain {
        ScalarDomain::PrimeField(p)
    }

    fn ground(d: ScalarDomain) -> AssocAlgebra {
        AssocAlgebra::from_i64("ground", d, &["1"], &[(0, 0, 0, 1)], 0).unwrap()
    }

    fn dual(d: ScalarDomain) -> AssocAlgebra {
        AssocAlgebra::from_i64(
            "dual",
            d,
            &["1", "x"],
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
            0,
        )
        .unwrap()
    }

    fn mat2(d: ScalarDomain) -> AssocAlgebra {
        // e11, e12, e21, e22 ; e_ij e_kl = delta_jk e_il ; unit is e11 + e22, so use the
        // basis {1 = e11 + e22, e12, e21, e11}
        let labels = ["1", "e12", "e21", "e11"];
        let e = |idx: usize| -> [i64; 4] {
            // coordinates of basis element idx in (e11, e12, e21, e22)
            match idx {
                0 => [1, 0, 0, 1],
                1 => [0, 1, 0, 0],
                2 => [0, 0, 1, 0],
                _ => [1, 0, 0, 0],
            }
        };
        let mul = |a: [i64; 4], b: [i64; 4]| -> [i64; 4] {
            let (a11, a12, a21, a22) = (a[0], a[1], a[2], a[3]);
            let (b11, b12, b21, b22) = (b[0], b[1], b[2], b[3]);
            [
                a11 * b11 + a12 * b21,
                a11 * b12 + a12 * b22,
                a21 * b11 + a22 * b21,
                a21 * b12 + a22 * b22,
            ]
        };
        // back to basis {1, e12, e21, e11}: x = c0*1 + c1 e12 + c2 e21 + c3 e11
        let coords = |m: [i64; 4]| [m[3], m[1], m[2], m[0] - m[3]];
        let mut s = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                for (k, c) in coords(mul(e(i), e(j))).iter().enumerate() {
                    if *c != 0 {
                        s.push((i, j, k, *c));
                    }
                }
            }
        }
        AssocAlgebra::from_i64("mat2", d, &labels, &s, 0).unwrap()
    }

    #[test]
    fn rejects_non_associative_and_non_unital() {
        // x*x = 1 + x with x*1 = x... make (x x) x != x (x x) impossible in 2 dims with unit,
        // so break the unit instead
        let bad_unit = AssocAlgebra::from_i64("bad", f(2), &["1", "x"], &[(0, 0, 0, 1)], 0);
        assert!(matches!(bad_unit, Err(Error::NotUnital(0))));
        // 3-dim: 1, a, b with a*a = b, b*a = 0, a*b = a breaks associativity
        let bad_assoc = AssocAlgebra::from_i64(
            "bad",
            ScalarDomain::Rationals,
            &["1", "a", "b"],
            &[
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (1, 0, 1, 1),
                (0, 2, 2, 1),
                (2, 0, 2, 1),
                (1, 1, 2, 1),
                (1, 2, 1, 1),
            ],
            0,
        );
        assert!(matches!(bad_assoc, Err(Error::NotAssociative(..))));
    }

    #[test]
    fn commutator_spans() {
        assert_eq!(dual(f(3)).commutator_span().rank(), 0);
        assert_eq!(mat2(f(2)).commutator_span().rank(), 3);
    }

    #[test]
    fn ideals_and_quotients() {
        assert!(ground(ScalarDomain::Rationals).ideal_im(2).is_full());
        assert_eq!(ground(f(2)).ideal_im(2).rank(), 0);
        assert!(mat2(f(2)).ideal_im(2).is_full());
        assert_eq!(dual(f(3)).quotient_rm(3).len(), 2);
        assert_eq!(mat2(f(2)).quotient_rm(2).len(), 0);
        let zq = ground(ScalarDomain::Integers).quotient_rm(2);
        assert_eq!(zq.invariants().to_string(), "Z/2");
        assert!(zq.killed_by(2));
    }

    #[test]
    fn ideal_sides_agree() {
        let (l, r) = mat2(f(2)).commutator_ideal_sides();
        assert!(l.contains_all(&r) && r.contains_all(&l));
    }

    #[test]
    fn hochschild() {
        assert_eq!(ground(f(2)).hochschild_h1().dimension(), 0);
        assert_eq!(dual(ScalarDomain::Rationals).hochschild_h1().dimension(), 1);
        assert_eq!(dual(f(2)).hochschild_h1().dimension(), 2);
        assert_eq!(mat2(f(2)).hochschild_h1().dimension(), 0);
    }
}
