//! A structure-constant model of `stl_n(R)` as `(sl (x) sl) / (im delta_3 + N)`.

use crate::assoc::AssocAlgebra;
use crate::error::{Error, Result};
use crate::leibniz::{
    assemble, build_sl, homology_hl2_of, off_diagonal, tensor, CentralExtensionModel,
    HomologyReport, SlAlgebra, TensorComplex, TensorQuotient,
};
use crate::linalg::{SparseVec, Submodule, SubquotientInvariants};
use crate::scalar::Scalar;

/// `stl_n(R) -> sl_n(R)` with named generators.
///
/// Basis: `X_ij(r_lambda)` in `(i, j, lambda)` order (the same positions as `E_ij(r_lambda)`
/// in `sl`), followed by an echelon basis of `H`, the span of all `T_ij(a, b)`.
#[derive(Clone, Debug)]
pub struct SteinbergModel {
    pub n: usize,
    pub ring: AssocAlgebra,
    pub sl: SlAlgebra,
    pub extension: CentralExtensionModel,
    /// rank of `N` modulo `im delta_3`
    pub n_rank: usize,
    pub hh1: SubquotientInvariants,
    pub sl_hl2: HomologyReport,
}

impl SteinbergModel {
    pub fn algebra(&self) -> &crate::leibniz::LeibnizAlgebra {
        &self.extension.total
    }

    pub fn dim(&self) -> usize {
        self.extension.total.dim()
    }

    /// Number of `X` basis elements; `H` coordinates start here.
    pub fn x_dim(&self) -> usize {
        self.sl.off_diagonal_dim()
    }

    pub fn h_dim(&self) -> usize {
        self.dim() - self.x_dim()
    }

    pub fn x_index(&self, i: usize, j: usize, lambda: usize) -> usize {
        self.sl.e(i, j, lambda)
    }

    /// `X_ij(a)` for a ring vector `a`.
    pub fn x(&self, i: usize, j: usize, a: &SparseVec) -> SparseVec {
        self.sl.e_elem(i, j, a)
    }

    pub fn bracket(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        self.extension.total.bracket(u, v)
    }

    /// `T_ij(a, b) = [X_ij(a), X_ji(b)]`.
    pub fn big_t(&self, i: usize, j: usize, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.bracket(&self.x(i, j, a), &self.x(j, i, b))
    }

    /// `t(a, b) = T_1j(a, b) - T_1j(ba, 1)` computed with the given `j != 0`.
    pub fn small_t_via(&self, j: usize, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut v = self.big_t(0, j, a, b);
        let ba = self.ring.mul(b, a);
        v.add_scaled(
            &-self.ring.domain().one(),
            &self.big_t(0, j, &ba, &self.ring.one()),
        );
        v
    }

    pub fn small_t(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.small_t_via(1, a, b)
    }

    /// Whether a vector lies in `H` (no `X` coordinates).
    pub fn in_h(&self, v: &SparseVec) -> bool {
        v.iter().all(|(k, _)| *k >= self.x_dim())
    }
}

/// Whether sl basis elements `p`, `q` are `E_ij(.)`, `E_kl(.)` with `j != k`, `i != l`.
fn commuting_pair(sl: &SlAlgebra, p: usize, q: usize) -> bool {
    let off = sl.off_diagonal_dim();
    if p >= off || q >= off {
        return false;
    }
    let d = sl.ring.dim();
    let n = sl.n;
    let ij = |x: usize| {
        let slot = x / d;
        let i = slot / (n - 1);
        let r = slot % (n - 1);
        (i, if r >= i { r + 1 } else { r })
    };
    let ((i, j), (k, l)) = (ij(p), ij(q));
    j != k && i != l
}

/// Builds the model and checks: `N` is central, the kernel of `stl -> sl` matches
/// `HH_1(R)`, the defining relations hold, and the total algebra is perfect.
pub fn build_stl(n: usize, r: &AssocAlgebra) -> Result<SteinbergModel> {
    if !(3..=5).contains(&n) {
        return Err(Error::UnsupportedSize(n));
    }
    let sl = build_sl(n, r)?;
    let l = &sl.algebra;
    if !l.is_perfect() {
        return Err(Error::NotPerfect);
    }
    let d = l.dim();
    let domain = l.domain();
    for p in 0..d {
        for q in 0..d {
            if commuting_pair(&sl, p, q) && !l.bracket_basis(p, q).is_zero() {
                return Err(Error::ModelCheck(format!(
                    "N contains a non-cycle at ({p}, {q})"
                )));
            }
        }
    }
    let plain = TensorComplex::build(l, |_, _| false);
    let sl_hl2 = homology_hl2_of(l, &plain)?;
    let cx = TensorComplex::build(l, |p, q| commuting_pair(&sl, p, q));
    let n_rank = cx
        .blocks()
        .iter()
        .zip(plain.blocks())
        .map(|(a, b)| a.image.rank() - b.image.rank())
        .sum();
    let tq = TensorQuotient::new(cx)?;

    let off = sl.off_diagonal_dim();
    let rd = r.dim();
    let unit = r.unit_index();
    let mut basis = Vec::with_capacity(tq.len());
    let mut labels = Vec::with_capacity(tq.len());
    for (i, j) in off_diagonal(n) {
        let k = (0..n).find(|k| *k != i && *k != j).unwrap();
        for lambda in 0..rd {
            let t = tensor(
                d,
                &SparseVec::unit(sl.e(i, k, lambda), domain.one()),
                &SparseVec::unit(sl.e(k, j, unit), domain.one()),
            );
            basis.push(tq.project(&t));
            labels.push(format!("X{}{}({})", i + 1, j + 1, r.labels()[lambda]));
        }
    }
    debug_assert_eq!(basis.len(), off);
    let mut h = Submodule::new(domain, tq.len());
    for (i, j) in off_diagonal(n) {
        for a in 0..rd {
            for b in 0..rd {
                let t = tensor(
                    d,
                    &SparseVec::unit(sl.e(i, j, a), domain.one()),
                    &SparseVec::unit(sl.e(j, i, b), domain.one()),
                );
                h.insert(tq.project(&t));
            }
        }
    }
    for (k, v) in h.basis().into_iter().enumerate() {
        basis.push(v);
        labels.push(format!("H{}", k + 1));
    }
    if basis.len() != tq.len() {
        return Err(Error::ModelCheck(format!(
            "X part ({off}) plus H ({}) does not match the model rank {}",
            h.rank(),
            tq.len()
        )));
    }
    let extension = assemble(format!("stl{n}({})", r.name()), l, &tq, basis, labels)?;
    let hh1 = r.hochschild_h1();
    if extension.kernel_invariants != hh1 {
        return Err(Error::ModelCheck(format!(
            "kernel of stl -> sl is {} but HH1(R) is {}",
            extension.kernel_invariants, hh1
        )));
    }
    if !extension.total.is_perfect() {
        return Err(Error::ModelCheck("stl model is not perfect".into()));
    }
    let model = SteinbergModel {
        n,
        ring: r.clone(),
        sl,
        extension,
        n_rank,
        hh1,
        sl_hl2,
    };
    check_defining_relations(&model)?;
    Ok(model)
}

/// `[X_ij(a), X_jk(b)] = X_ik(ab)`, `[X_ij(a), X_ki(b)] = -X_kj(ba)` for distinct `i, j, k`,
/// and `[X_ij(a), X_kl(b)] = 0` for `j != k`, `i != l`, on all basis pairs.
pub fn check_defining_relations(m: &SteinbergModel) -> Result<()> {
    let (n, d) = (m.n, m.ring.dim());
    let l = m.algebra();
    let minus: Scalar = -l.domain().one();
    for (i, j) in off_diagonal(n) {
        for (k, q) in off_diagonal(n) {
            for a in 0..d {
                for b in 0..d {
                    let got = l.bracket_basis(m.x_index(i, j, a), m.x_index(k, q, b));
                    let expected = if j == k && i != q {
                        m.x(i, q, m.ring.mul_basis(a, b))
                    } else if q == i && j != k {
                        m.x(k, j, m.ring.mul_basis(b, a)).scale(&minus)
                    } else if j != k && i != q {
                        SparseVec::new()
                    } else {
                        continue;
                    };
                    if *got != expected {
                        return Err(Error::ModelCheck(format!(
                            "defining relation fails for X{}{}({a}), X{}{}({b})",
                            i + 1,
                            j + 1,
                            k + 1,
                            q + 1
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{dual, ground};
    use crate::ScalarDomain;

    #[test]
    fn small_models() {
        let f2 = ScalarDomain::PrimeField(2);
        let m = build_stl(4, &ground(f2)).unwrap();
        assert_eq!(m.dim(), 15);
        assert_eq!(m.n_rank, 6);
        let q = build_stl(3, &dual(ScalarDomain::Rationals)).unwrap();
        assert_eq!(q.dim(), 17);
        assert_eq!(q.extension.kernel_invariants.dimension(), 1);
    }
}
