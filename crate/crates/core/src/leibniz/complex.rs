//! The truncated chain complex `L^{(x)3} -> L^{(x)2} -> L -> 0`, split into weight blocks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::algebra::{add_weights, LeibnizAlgebra, Weight};
use crate::error::{Error, Result};
use crate::linalg::{subquotient_of, ExactMatrix, SparseVec, Submodule, SubquotientInvariants};

/// One weight block of `L (x) L`.
#[derive(Clone, Debug)]
pub struct TensorBlock {
    pub weight: Weight,
    /// flat pair indices `i * dim + j`, sorted; local coordinate = position here
    pub pairs: Vec<usize>,
    /// number of basis triples of this weight
    pub triples: usize,
    /// rank of `delta_2` restricted to the block
    pub boundary_rank: usize,
    /// `im delta_3` in local coordinates
    pub image: Submodule,
}

/// `L (x) L` with its boundary data, organized by weight.
#[derive(Clone, Debug)]
pub struct TensorComplex {
    dim: usize,
    blocks: Vec<TensorBlock>,
    /// flat pair index -> (block, local index)
    locate: Vec<(usize, usize)>,
}

/// Sizes of the largest blocks, for budgeting before any elimination happens.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct ComplexSizes {
    pub dim: usize,
    pub blocks: usize,
    pub max_block_pairs: usize,
    pub max_block_triples: usize,
    pub total_triples: usize,
}

/// `delta_2(x (x) y) = -[x, y]`.
pub fn delta2_pair(l: &LeibnizAlgebra, i: usize, j: usize) -> SparseVec {
    l.bracket_basis(i, j).neg()
}

/// `delta_3(x (x) y (x) z) = -[x,y] (x) z + [x,z] (x) y + x (x) [y,z]` in flat pair coordinates.
pub fn delta3_triple(l: &LeibnizAlgebra, i: usize, j: usize, k: usize) -> SparseVec {
    let d = l.dim();
    let mut e = Vec::new();
    for (a, c) in l.bracket_basis(i, j).iter() {
        e.push((a * d + k, -c));
    }
    for (a, c) in l.bracket_basis(i, k).iter() {
        e.push((a * d + j, c.clone()));
    }
    for (a, c) in l.bracket_basis(j, k).iter() {
        e.push((i * d + a, c.clone()));
    }
    SparseVec::from_entries(e)
}

/// Applies `delta_2` to a flat-pair vector.
pub fn apply_delta2(l: &LeibnizAlgebra, v: &SparseVec) -> SparseVec {
    let d = l.dim();
    let mut out = SparseVec::new();
    for (p, c) in v.iter() {
        out.add_scaled(&-c, l.bracket_basis(p / d, p % d));
    }
    out
}

struct Grouping {
    /// weight -> basis indices of that weight
    by_weight: BTreeMap<Weight, Vec<usize>>,
    /// weight -> flat pairs of that weight
    pairs: BTreeMap<Weight, Vec<usize>>,
}

fn grouping(l: &LeibnizAlgebra) -> Grouping {
    let d = l.dim();
    let mut by_weight: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for i in 0..d {
        by_weight.entry(l.weight(i)).or_default().push(i);
    }
    let mut pairs: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for i in 0..d {
        for j in 0..d {
            pairs
                .entry(add_weights(&l.weight(i), &l.weight(j)))
                .or_default()
                .push(i * d + j);
        }
    }
    Grouping { by_weight, pairs }
}

/// Triples `(i, j, k)` whose total weight is `w`, given the pair grouping.
fn block_triples<'a>(
    l: &'a LeibnizAlgebra,
    g: &'a Grouping,
    w: &'a Weight,
) -> impl Iterator<Item = (usize, usize, usize)> + 'a {
    let d = l.dim();
    g.pairs.iter().flat_map(move |(wp, ps)| {
        let need: Weight = if w.is_empty() {
            Vec::new()
        } else {
            w.iter().zip(wp).map(|(a, b)| a - b).collect()
        };
        let ks: &[usize] = g.by_weight.get(&need).map(|v| v.as_slice()).unwrap_or(&[]);
        ps.iter()
            .flat_map(move |&p| ks.iter().map(move |&k| (p / d, p % d, k)))
    })
}

/// Block sizes without building any matrix.
pub fn complex_sizes(l: &LeibnizAlgebra) -> ComplexSizes {
    let g = grouping(l);
    let mut s = ComplexSizes {
        dim: l.dim(),
        blocks: g.pairs.len(),
        ..Default::default()
    };
    for (w, ps) in &g.pairs {
        let t = block_triples(l, &g, w).count();
        s.max_block_pairs = s.max_block_pairs.max(ps.len());
        s.max_block_triples = s.max_block_triples.max(t);
        s.total_triples += t;
    }
    s
}

impl TensorComplex {
    /// Builds `im delta_3` block by block, plus the extra relations `extra(i, j)` on basis pairs.
    pub fn build(l: &LeibnizAlgebra, extra: impl Fn(usize, usize) -> bool + Sync) -> Self {
        let d = l.dim();
        let g = grouping(l);
        let mut locate = vec![(0, 0); d * d];
        for (b, ps) in g.pairs.values().enumerate() {
            for (local, &p) in ps.iter().enumerate() {
                locate[p] = (b, local);
            }
        }
        let weights: Vec<(&Weight, &Vec<usize>)> = g.pairs.iter().collect();
        let blocks: Vec<TensorBlock> = weights
            .par_iter()
            .map(|(w, ps)| {
                let n = ps.len();
                let boundary = Submodule::spanned_by(
                    l.domain(),
                    d,
                    ps.iter().map(|&p| delta2_pair(l, p / d, p % d)),
                );
                let cap = n - boundary.rank();
                let mut image = Submodule::new(l.domain(), n);
                for (local, &p) in ps.iter().enumerate() {
                    if extra(p / d, p % d) {
                        image.insert(SparseVec::unit(local, l.domain().one()));
                    }
                }
                let mut triples = 0;
                for (i, j, k) in block_triples(l, &g, w) {
                    triples += 1;
                    if l.domain().is_field() && image.rank() >= cap {
                        continue;
                    }
                    let v = delta3_triple(l, i, j, k).map_indices(|p| Some(locate[p].1));
                    image.insert(v);
                }
                TensorBlock {
                    weight: (*w).clone(),
                    pairs: (*ps).clone(),
                    triples,
                    boundary_rank: boundary.rank(),
                    image,
                }
            })
            .collect();
        TensorComplex {
            dim: d,
            blocks,
            locate,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn blocks(&self) -> &[TensorBlock] {
        &self.blocks
    }

    pub fn locate(&self, pair: usize) -> (usize, usize) {
        self.locate[pair]
    }

    /// Splits a flat-pair vector into local vectors per block.
    pub fn split(&self, v: &SparseVec) -> BTreeMap<usize, SparseVec> {
        let mut parts: BTreeMap<usize, Vec<(usize, crate::Scalar)>> = BTreeMap::new();
        for (p, c) in v.iter() {
            let (b, local) = self.locate[*p];
            parts.entry(b).or_default().push((local, c.clone()));
        }
        parts
            .into_iter()
            .map(|(b, e)| (b, SparseVec::from_entries(e)))
            .collect()
    }

    /// Flat-pair vector of a local vector of block `b`.
    pub fn globalize(&self, b: usize, v: &SparseVec) -> SparseVec {
        let ps = &self.blocks[b].pairs;
        v.map_indices(|i| Some(ps[i]))
    }
}

/// `HL_n(L)` together with the ranks of the adjacent boundary maps.
#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    pub algebra: String,
    pub degree: usize,
    pub invariants: SubquotientInvariants,
    /// rank of `delta_n` (over the fraction field)
    pub rank_in: usize,
    /// rank of `delta_{n+1}` (over the fraction field)
    pub rank_out: usize,
    pub chain_dim: usize,
}

/// The matrix of `delta_n` (`n` = 2 or 3) in the lexicographic tensor basis.
pub fn boundary(l: &LeibnizAlgebra, n: usize) -> Result<ExactMatrix> {
    let d = l.dim();
    match n {
        2 => {
            let cols: Vec<SparseVec> = (0..d * d).map(|p| delta2_pair(l, p / d, p % d)).collect();
            Ok(ExactMatrix::from_columns(l.domain(), d, &cols))
        }
        3 => {
            let cols: Vec<SparseVec> = (0..d * d * d)
                .map(|t| delta3_triple(l, t / (d * d), (t / d) % d, t % d))
                .collect();
            Ok(ExactMatrix::from_columns(l.domain(), d * d, &cols))
        }
        _ => Err(Error::UnsupportedSize(n)),
    }
}

/// `HL_1` or `HL_2`.
pub fn homology_hl(l: &LeibnizAlgebra, n: usize) -> Result<HomologyReport> {
    match n {
        1 => {
            let derived = l.derived_span();
            Ok(HomologyReport {
                algebra: l.name().to_string(),
                degree: 1,
                invariants: crate::linalg::invariants_of_quotient(&derived),
                rank_in: 0,
                rank_out: derived.rank(),
                chain_dim: l.dim(),
            })
        }
        2 => {
            let cx = TensorComplex::build(l, |_, _| false);
            homology_hl2_of(l, &cx)
        }
        _ => Err(Error::UnsupportedSize(n)),
    }
}

/// `HL_2` from a prebuilt tensor complex; checks `delta_2 delta_3 = 0` on every block.
pub fn homology_hl2_of(l: &LeibnizAlgebra, cx: &TensorComplex) -> Result<HomologyReport> {
    let parts: Vec<Result<(SubquotientInvariants, usize, usize)>> = cx
        .blocks()
        .par_iter()
        .enumerate()
        .map(|(b, blk)| {
            let cols: Vec<SparseVec> = blk
                .pairs
                .iter()
                .map(|&p| delta2_pair(l, p / l.dim(), p % l.dim()))
                .collect();
            for (idx, v) in blk.image.basis_ref() {
                if !apply_delta2(l, &cx.globalize(b, v)).is_zero() {
                    return Err(Error::ModelCheck(format!(
                        "delta_2 delta_3 != 0 in block {:?} (row {idx})",
                        blk.weight
                    )));
                }
            }
            let m = ExactMatrix::from_columns(l.domain(), l.dim(), &cols);
            let kernel = m.kernel_module();
            let rank2 = blk.pairs.len() - kernel.rank();
            let inv = subquotient_of(&kernel, blk.image.basis_ref().map(|(_, v)| v))?;
            Ok((inv, rank2, blk.image.rank()))
        })
        .collect();
    let mut invariants = SubquotientInvariants::zero(l.domain());
    let (mut rank_in, mut rank_out) = (0, 0);
    for p in parts {
        let (inv, r2, r3) = p?;
        invariants = invariants.sum(&inv);
        rank_in += r2;
        rank_out += r3;
    }
    Ok(HomologyReport {
        algebra: l.name().to_string(),
        degree: 2,
        invariants,
        rank_in,
        rank_out,
        chain_dim: l.dim() * l.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ScalarDomain;

    #[test]
    fn abelian_boundaries_vanish() {
        let l = LeibnizAlgebra::abelian(ScalarDomain::PrimeField(2), 1);
        assert!(boundary(&l, 2).unwrap().is_zero());
        assert!(boundary(&l, 3).unwrap().is_zero());
        assert_eq!(homology_hl(&l, 2).unwrap().invariants.dimension(), 1);
        assert_eq!(homology_hl(&l, 1).unwrap().invariants.dimension(), 1);
    }

    #[test]
    fn two_dim_abelian_hl2() {
        let l = LeibnizAlgebra::abelian(ScalarDomain::Rationals, 2);
        assert_eq!(homology_hl(&l, 2).unwrap().invariants.dimension(), 4);
    }
}
