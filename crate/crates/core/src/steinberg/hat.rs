//! The extension `W (+) stl` (n = 4) or `U (+) stl` (n = 3) defined by `psi`.

use super::cocycle::{sign, CocycleTarget, Descriptor};
use super::model::{build_stl, SteinbergModel};
use super::theta::ThetaMap;
use super::{CheckReport, SuiteReport};
use crate::assoc::AssocAlgebra;
use crate::error::{Error, Result};
use crate::leibniz::{off_diagonal, LeibnizAlgebra, Weight};
use crate::linalg::SparseVec;

/// Carrier `W (+) stl` with the `W` coordinates first.
#[derive(Clone, Debug)]
pub struct HatModel {
    pub n: usize,
    pub stl: SteinbergModel,
    pub target: CocycleTarget,
    pub algebra: LeibnizAlgebra,
}

impl HatModel {
    /// Number of `W` coordinates.
    pub fn w_len(&self) -> usize {
        self.target.len()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `(0, x)` for `x` in stl coordinates.
    pub fn include(&self, x: &SparseVec) -> SparseVec {
        let w = self.w_len();
        x.map_indices(|k| Some(k + w))
    }

    /// `(c, 0)` for `c` in `W` coordinates.
    pub fn include_w(&self, c: &SparseVec) -> SparseVec {
        c.clone()
    }

    /// Projection onto stl coordinates.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let w = self.w_len();
        v.map_indices(|k| k.checked_sub(w))
    }

    /// The `W` component of a vector.
    pub fn w_part(&self, v: &SparseVec) -> SparseVec {
        let w = self.w_len();
        v.map_indices(|k| (k < w).then_some(k))
    }

    /// `X#_ij(a) = (0, X_ij(a))`.
    pub fn x_sharp(&self, i: usize, j: usize, a: &SparseVec) -> SparseVec {
        self.include(&self.stl.x(i, j, a))
    }

    pub fn bracket(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        self.algebra.bracket(u, v)
    }
}

fn decode_x(m: &SteinbergModel, p: usize) -> Descriptor {
    let (n, d) = (m.n, m.ring.dim());
    let (slot, lambda) = (p / d, p % d);
    let i = slot / (n - 1);
    let r = slot % (n - 1);
    let j = if r >= i { r + 1 } else { r };
    Descriptor::X { i, j, lambda }
}

/// Weight of the `W` (or `U`) copy, matching the weight of the `psi` values landing in it.
fn copy_weight(n: usize, theta: &ThetaMap, copy: usize) -> Weight {
    let mut w = vec![0; n];
    if n == 4 {
        let [i, j, k, l] = theta.minimal(copy as u8 + 1).map(|x| x as usize - 1);
        w[i] += 1;
        w[k] += 1;
        w[j] -= 1;
        w[l] -= 1;
    } else if copy < 3 {
        w.iter_mut().for_each(|x| *x = -1);
        w[copy] = 2;
    } else {
        w.iter_mut().for_each(|x| *x = 1);
        w[copy - 3] = -2;
    }
    w
}

/// Builds the stl model and its `psi`-extension; needs a field so that `W` is free.
pub fn build_hat(n: usize, r: &AssocAlgebra) -> Result<HatModel> {
    if n != 3 && n != 4 {
        return Err(Error::UnsupportedSize(n));
    }
    let stl = build_stl(n, r)?;
    hat_over(stl)
}

/// The `psi`-extension of an existing model.
pub fn hat_over(stl: SteinbergModel) -> Result<HatModel> {
    let n = stl.n;
    let theta = ThetaMap::build();
    let target = CocycleTarget::new(n, &stl.ring, theta.clone())?;
    let torsion: Vec<String> = target
        .quotient
        .moduli()
        .iter()
        .flatten()
        .map(|m| m.to_string())
        .collect();
    if !torsion.is_empty() {
        return Err(Error::TorsionQuotient(torsion));
    }
    let (w, s) = (target.len(), stl.dim());
    let dim = w + s;
    let base = stl.algebra();
    let x_dim = stl.x_dim();
    let descriptors: Vec<Descriptor> = (0..x_dim).map(|p| decode_x(&stl, p)).collect();
    let mut table = Vec::with_capacity(dim * dim);
    for p in 0..dim {
        for q in 0..dim {
            if p < w || q < w {
                table.push(SparseVec::new());
                continue;
            }
            let (a, b) = (p - w, q - w);
            let mut v = base.bracket_basis(a, b).map_indices(|k| Some(k + w));
            if a < x_dim && b < x_dim {
                v.add_scaled(
                    &base.domain().one(),
                    &target.psi(&descriptors[a], &descriptors[b]),
                );
            }
            table.push(v);
        }
    }
    let copies = target.copy_labels();
    let ring_labels = target.quotient.len();
    let mut labels: Vec<String> = Vec::with_capacity(dim);
    for c in &copies {
        for g in 0..ring_labels {
            labels.push(format!("w{c}[{g}]"));
        }
    }
    labels.extend(base.labels().iter().cloned());
    let weights = base.weights().map(|ws| {
        let mut out: Vec<Weight> = Vec::with_capacity(dim);
        for copy in 0..6 {
            for _ in 0..ring_labels {
                out.push(copy_weight(n, &theta, copy));
            }
        }
        out.extend(ws.iter().cloned());
        out
    });
    let name = format!("hat-{}", base.name());
    let algebra = LeibnizAlgebra::new(name, base.domain(), labels, table, weights)?;
    Ok(HatModel {
        n,
        stl,
        target,
        algebra,
    })
}

/// Checks the relations of the sharp presentation on all basis pairs, perfectness,
/// centrality of `W`, and `m psi = 0`.
pub fn verify_sharp_relations(hat: &HatModel) -> SuiteReport {
    let mut checks = vec![steinberg_two_sided(hat), w_central(hat), same_root(hat)];
    if hat.n == 4 {
        checks.push(vanishing_rules(hat));
    }
    checks.push(cocycle_values(hat));
    checks.push(bilinearity(hat));
    checks.push(structure(hat));
    SuiteReport::new(hat.algebra.name(), checks)
}

fn ring_pairs(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..d).flat_map(move |a| (0..d).map(move |b| (a, b)))
}

fn distinct(idx: &[usize]) -> bool {
    idx.iter()
        .enumerate()
        .all(|(p, x)| idx[p + 1..].iter().all(|y| y != x))
}

fn basis(hat: &HatModel, a: usize) -> SparseVec {
    hat.stl.ring.basis_vector(a)
}

/// `[X#_ij(a), X#_jk(b)] = X#_ik(ab) = -[X#_jk(b), X#_ij(a)]`.
fn steinberg_two_sided(hat: &HatModel) -> CheckReport {
    let mut rep = CheckReport::new("two-sided Steinberg relation");
    let (n, r) = (hat.n, &hat.stl.ring);
    for (i, j) in off_diagonal(n) {
        for k in (0..n).filter(|&k| k != i && k != j) {
            for (a, b) in ring_pairs(r.dim()) {
                let xa = hat.x_sharp(i, j, &basis(hat, a));
                let xb = hat.x_sharp(j, k, &basis(hat, b));
                let e = hat.x_sharp(i, k, r.mul_basis(a, b));
                let ok = hat.bracket(&xa, &xb) == e && hat.bracket(&xb, &xa) == e.neg();
                rep.record(ok, || {
                    format!("i={} j={} k={} a={a} b={b}", i + 1, j + 1, k + 1)
                });
            }
        }
    }
    rep
}

/// `W` brackets to zero on both sides with every basis element.
fn w_central(hat: &HatModel) -> CheckReport {
    let mut rep = CheckReport::new("W is central");
    let l = &hat.algebra;
    for c in 0..hat.w_len() {
        for y in 0..l.dim() {
            let ok = l.bracket_basis(c, y).is_zero() && l.bracket_basis(y, c).is_zero();
            rep.record(ok, || format!("{} with {}", l.labels()[c], l.labels()[y]));
        }
    }
    rep
}

/// `[X#_ij(a), X#_ij(b)] = 0`.
fn same_root(hat: &HatModel) -> CheckReport {
    let mut rep = CheckReport::new("same-root brackets vanish");
    for (i, j) in off_diagonal(hat.n) {
        for (a, b) in ring_pairs(hat.stl.ring.dim()) {
            let v = hat.bracket(
                &hat.x_sharp(i, j, &basis(hat, a)),
                &hat.x_sharp(i, j, &basis(hat, b)),
            );
            rep.record(v.is_zero(), || {
                format!("i={} j={} a={a} b={b}", i + 1, j + 1)
            });
        }
    }
    rep
}

/// `[X#_ij(a), X#_ik(b)] = 0` and `[X#_ij(a), X#_kj(b)] = 0` for distinct `i, j, k` (n = 4).
fn vanishing_rules(hat: &HatModel) -> CheckReport {
    let mut rep = CheckReport::new("row and column brackets vanish");
    let n = hat.n;
    for (i, j) in off_diagonal(n) {
        for k in (0..n).filter(|&k| k != i && k != j) {
            for (a, b) in ring_pairs(hat.stl.ring.dim()) {
                let xa = hat.x_sharp(i, j, &basis(hat, a));
                let row = hat.bracket(&xa, &hat.x_sharp(i, k, &basis(hat, b)));
                let col = hat.bracket(&xa, &hat.x_sharp(k, j, &basis(hat, b)));
                rep.record(row.is_zero() && col.is_zero(), || {
                    format!("i={} j={} k={} a={a} b={b}", i + 1, j + 1, k + 1)
                });
            }
        }
    }
    rep
}

/// The `W`/`U`-valued brackets: `e_theta(ijkl)(ab)` for n = 4; `sign(j,k) (ab)^(+i)` and
/// `sign(i,k) (ab)^(-j)` for n = 3.
fn cocycle_values(hat: &HatModel) -> CheckReport {
    let mut rep = CheckReport::new("W-valued brackets");
    let (n, t) = (hat.n, &hat.target);
    let theta = &t.theta;
    for (i, j) in off_diagonal(n) {
        for (k, l) in off_diagonal(n) {
            let expected_copy = if n == 4 && distinct(&[i, j, k, l]) {
                Some((theta.coordinate(i, j, k, l), 1))
            } else if n == 3 && i == k && j != l {
                Some((CocycleTarget::plus(i), sign(j, l)))
            } else if n == 3 && j == l && i != k {
                Some((CocycleTarget::minus(j), sign(i, k)))
            } else {
                None
            };
            let Some((copy, s)) = expected_copy else {
                continue;
            };
            for (a, b) in ring_pairs(hat.stl.ring.dim()) {
                let v = hat.bracket(
                    &hat.x_sharp(i, j, &basis(hat, a)),
                    &hat.x_sharp(k, l, &basis(hat, b)),
                );
                let ok = v == hat.include_w(&t.product_in(copy, a, b, s));
                rep.record(ok, || {
                    format!(
                        "[X{}{}(r{a}), X{}{}(r{b})] = {v:?}",
                        i + 1,
                        j + 1,
                        k + 1,
                        l + 1
                    )
                });
            }
        }
    }
    rep
}

/// The bracket is additive in each ring argument on sums of two basis elements.
fn bilinearity(hat: &HatModel) -> CheckReport {
    let mut rep = CheckReport::new("bilinearity");
    let r = &hat.stl.ring;
    let one = r.domain().one();
    let d = r.dim();
    for (i, j) in off_diagonal(hat.n) {
        for (k, l) in off_diagonal(hat.n) {
            for (a, b) in ring_pairs(d) {
                let c = (a + 1) % d;
                let sum = basis(hat, a).add(&basis(hat, c), &one);
                let y = hat.x_sharp(k, l, &basis(hat, b));
                let lhs = hat.bracket(&hat.x_sharp(i, j, &sum), &y);
                let rhs = hat
                    .bracket(&hat.x_sharp(i, j, &basis(hat, a)), &y)
                    .add(&hat.bracket(&hat.x_sharp(i, j, &basis(hat, c)), &y), &one);
                rep.record(lhs == rhs, || {
                    format!("X{}{} X{}{} a={a} b={b}", i + 1, j + 1, k + 1, l + 1)
                });
            }
        }
    }
    rep
}

/// Perfect, center contains `W`, and `m` kills every `W` component of a bracket.
fn structure(hat: &HatModel) -> CheckReport {
    let mut rep = CheckReport::new("perfect with W central and m W = 0");
    let l = &hat.algebra;
    rep.record(l.is_perfect(), || "not perfect".into());
    let center = l.center();
    for c in 0..hat.w_len() {
        rep.record(center.contains(&l.basis_vector(c)), || {
            format!("{} not in center", l.labels()[c])
        });
    }
    let m = l.domain().from_i64(hat.target.m() as i64);
    for v in l.table() {
        let w = hat.w_part(v).scale(&m);
        rep.record(w.is_zero(), || format!("m * {v:?} has a W part"));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::ground;
    use crate::ScalarDomain;

    #[test]
    fn hat_dimensions_and_relations() {
        let f2 = ScalarDomain::PrimeField(2);
        let h = build_hat(4, &ground(f2)).unwrap();
        assert_eq!(h.dim(), 21);
        assert!(h.algebra.center().rank() >= 6);
        let rep = verify_sharp_relations(&h);
        assert!(rep.passed, "{:?}", rep.first_failure());
        let one = ground(f2).one();
        let v = h.bracket(&h.x_sharp(0, 1, &one), &h.x_sharp(2, 3, &one));
        assert_eq!(v, SparseVec::unit(0, f2.one()));

        let f3 = ScalarDomain::PrimeField(3);
        let h = build_hat(3, &ground(f3)).unwrap();
        assert_eq!(h.dim(), 14);
        let rep = verify_sharp_relations(&h);
        assert!(rep.passed, "{:?}", rep.first_failure());
    }

    #[test]
    fn integers_have_torsion() {
        let z = crate::rings::ring_catalog("int", ScalarDomain::Integers).unwrap();
        assert!(matches!(build_hat(4, &z), Err(Error::TorsionQuotient(_))));
    }
}
