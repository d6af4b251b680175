//! Central extensions realized as quotients of `L (x) L`, and the universal one.

use rayon::prelude::*;

use super::algebra::LeibnizAlgebra;
use super::complex::{apply_delta2, homology_hl2_of, TensorComplex};
use crate::error::{Error, Result};
use crate::linalg::{
    apply_columns, invert_columns, ExactMatrix, QuotientModule, SparseVec, Submodule,
    SubquotientInvariants,
};
use crate::scalar::Scalar;

/// A central extension `pi: total -> base` with its kernel.
#[derive(Clone, Debug)]
pub struct CentralExtensionModel {
    pub total: LeibnizAlgebra,
    pub base: LeibnizAlgebra,
    /// `projection[a]` is the image of total basis element `a` in base coordinates
    pub projection: Vec<SparseVec>,
    /// the kernel of `pi` in total coordinates
    pub kernel: Submodule,
    pub kernel_invariants: SubquotientInvariants,
}

impl CentralExtensionModel {
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        apply_columns(&self.projection, v)
    }
}

/// `(L (x) L) / (im delta_3 + extra)` with generators per weight block.
pub(crate) struct TensorQuotient {
    pub cx: TensorComplex,
    quotients: Vec<QuotientModule>,
    offsets: Vec<usize>,
    len: usize,
}

impl TensorQuotient {
    pub fn new(cx: TensorComplex) -> Result<Self> {
        let quotients: Vec<QuotientModule> = cx
            .blocks()
            .par_iter()
            .map(|b| QuotientModule::new(b.image.clone()))
            .collect();
        let torsion: Vec<String> = quotients
            .iter()
            .flat_map(|q| q.moduli().iter().flatten().map(|m| m.to_string()))
            .collect();
        if !torsion.is_empty() {
            return Err(Error::TorsionQuotient(torsion));
        }
        let mut offsets = Vec::with_capacity(quotients.len());
        let mut len = 0;
        for q in &quotients {
            offsets.push(len);
            len += q.len();
        }
        Ok(TensorQuotient {
            cx,
            quotients,
            offsets,
            len,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn block_of(&self, g: usize) -> usize {
        self.offsets.partition_point(|&o| o <= g) - 1
    }

    pub fn block_range(&self, b: usize) -> std::ops::Range<usize> {
        self.offsets[b]..self.offsets[b] + self.quotients[b].len()
    }

    /// Class of a flat-pair tensor in generator coordinates.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (b, local) in self.cx.split(v) {
            for (g, c) in self.quotients[b].project(&local).into_entries() {
                out.push((self.offsets[b] + g, c));
            }
        }
        SparseVec::from_entries(out)
    }

    /// A flat-pair tensor representing generator `g`.
    pub fn lift(&self, g: usize) -> SparseVec {
        let b = self.block_of(g);
        self.cx
            .globalize(b, self.quotients[b].lift(g - self.offsets[b]))
    }

    /// `class(x (x) y) -> [x, y]`.
    pub fn pi(&self, base: &LeibnizAlgebra, g: usize) -> SparseVec {
        apply_delta2(base, &self.lift(g)).neg()
    }
}

/// Flat-pair tensor `x (x) y`.
pub(crate) fn tensor(dim: usize, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut e = Vec::with_capacity(x.nnz() * y.nnz());
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            e.push((i * dim + j, a * b));
        }
    }
    SparseVec::from_entries(e)
}

/// Rewrites a tensor quotient on a new basis (columns in generator coordinates) and
/// validates the resulting central extension of `base`.
pub(crate) fn assemble(
    name: String,
    base: &LeibnizAlgebra,
    tq: &TensorQuotient,
    new_basis: Vec<SparseVec>,
    labels: Vec<String>,
) -> Result<CentralExtensionModel> {
    let domain = base.domain();
    let d = base.dim();
    let n = new_basis.len();
    if n != tq.len() || labels.len() != n {
        return Err(Error::Shape(format!(
            "{n} basis vectors and {} labels for a quotient of rank {}",
            labels.len(),
            tq.len()
        )));
    }
    let inverse = invert_columns(domain, &new_basis)?;
    let pis: Vec<SparseVec> = (0..tq.len()).map(|g| tq.pi(base, g)).collect();
    let projection: Vec<SparseVec> = new_basis.iter().map(|c| apply_columns(&pis, c)).collect();
    let weights: Option<Vec<Vec<i32>>> = base.weights().map(|_| {
        new_basis
            .iter()
            .map(|c| {
                let (g, _) = c.leading().expect("nonzero basis vector");
                tq.cx.blocks()[tq.block_of(*g)].weight.clone()
            })
            .collect()
    });
    let table: Vec<SparseVec> = (0..n * n)
        .into_par_iter()
        .map(|ab| {
            let (a, b) = (ab / n, ab % n);
            let t = tensor(d, &projection[a], &projection[b]);
            apply_columns(&inverse, &tq.project(&t))
        })
        .collect();
    let total = LeibnizAlgebra::new(name, domain, labels, table, weights)?;

    for a in 0..n {
        for b in 0..n {
            let lhs = apply_columns(&projection, total.bracket_basis(a, b));
            if lhs != base.bracket(&projection[a], &projection[b]) {
                return Err(Error::ModelCheck(format!(
                    "projection is not a homomorphism on ({a}, {b})"
                )));
            }
        }
    }
    let pi = ExactMatrix::from_columns(domain, d, &projection);
    let kernel = pi.kernel_module();
    if let Some(k) = kernel.basis().iter().find(|k| !total.is_central(k)) {
        return Err(Error::ModelCheck(format!(
            "kernel element {k:?} is not central"
        )));
    }
    let kernel_invariants = if domain.is_field() {
        SubquotientInvariants::Field {
            domain,
            dimension: kernel.rank(),
        }
    } else {
        SubquotientInvariants::Integer {
            free_rank: kernel.rank(),
            torsion: Vec::new(),
        }
    };
    Ok(CentralExtensionModel {
        total,
        base: base.clone(),
        projection,
        kernel,
        kernel_invariants,
    })
}

/// Splits `pi` on the generators of every block: returns, in generator coordinates, a
/// lift of every base basis element (indexed by base element) and a kernel basis.
pub(crate) fn split_projection(
    base: &LeibnizAlgebra,
    tq: &TensorQuotient,
) -> Result<(Vec<SparseVec>, Vec<SparseVec>)> {
    let d = base.dim();
    let domain = base.domain();
    let mut lifts: Vec<Option<SparseVec>> = vec![None; d];
    let mut kernel = Vec::new();
    for (b, blk) in tq.cx.blocks().iter().enumerate() {
        let range = tq.block_range(b);
        let targets: Vec<usize> = (0..d).filter(|&k| base.weight(k) == blk.weight).collect();
        let m = targets.len();
        let aug = range.clone().map(|g| {
            let mut e: Vec<(usize, Scalar)> = tq
                .pi(base, g)
                .into_entries()
                .into_iter()
                .map(|(k, c)| (targets.binary_search(&k).expect("homogeneous bracket"), c))
                .collect();
            e.push((m + g - range.start, domain.one()));
            SparseVec::from_entries(e)
        });
        let s = Submodule::spanned_by(domain, m + range.len(), aug);
        for (p, row) in s.basis_ref() {
            let tail = row.map_indices(|i| i.checked_sub(m).map(|t| t + range.start));
            if *p < m {
                let head = row.map_indices(|i| (i < m).then_some(i));
                if head != SparseVec::unit(*p, domain.one()) {
                    return Err(Error::NotPerfect);
                }
                lifts[targets[*p]] = Some(tail);
            } else {
                kernel.push(tail);
            }
        }
    }
    let lifts = lifts
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::NotPerfect)?;
    Ok((lifts, kernel))
}

/// The universal central extension `(L (x) L) / im delta_3 -> L` of a perfect algebra.
///
/// The basis lists lifts of the basis of `L` first and kernel vectors last; the kernel
/// invariants are cross-checked against `HL_2(L)`.
pub fn uce(l: &LeibnizAlgebra) -> Result<CentralExtensionModel> {
    if !l.is_perfect() {
        return Err(Error::NotPerfect);
    }
    let cx = TensorComplex::build(l, |_, _| false);
    let hl2 = homology_hl2_of(l, &cx)?;
    let tq = TensorQuotient::new(cx)?;
    let (lifts, kernel) = split_projection(l, &tq)?;
    let mut labels: Vec<String> = l.labels().iter().map(|s| format!("{s}~")).collect();
    labels.extend((1..=kernel.len()).map(|i| format!("c{i}")));
    let basis: Vec<SparseVec> = lifts.into_iter().chain(kernel).collect();
    let model = assemble(format!("uce({})", l.name()), l, &tq, basis, labels)?;
    if model.kernel_invariants != hl2.invariants {
        return Err(Error::ModelCheck(format!(
            "uce kernel {} differs from HL2 {}",
            model.kernel_invariants, hl2.invariants
        )));
    }
    if !model.total.is_perfect() {
        return Err(Error::ModelCheck("uce total algebra is not perfect".into()));
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ScalarDomain;

    #[test]
    fn abelian_has_no_uce() {
        let l = LeibnizAlgebra::abelian(ScalarDomain::PrimeField(2), 1);
        assert!(matches!(uce(&l), Err(Error::NotPerfect)));
    }
}
