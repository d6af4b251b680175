//! `gl_n(R)` and its derived subalgebra `sl_n(R)`.

use super::algebra::{LeibnizAlgebra, Weight};
use crate::assoc::AssocAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{SparseVec, Submodule};
use crate::scalar::Scalar;

/// `e_i - e_j` in `Z^n`.
pub fn root_weight(n: usize, i: usize, j: usize) -> Weight {
    let mut w = vec![0; n];
    w[i] += 1;
    w[j] -= 1;
    w
}

/// Index of `E_ij(r_lambda)` in the basis of `gl_n(R)` (0-based `i`, `j`).
pub fn gl_index(n: usize, d: usize, i: usize, j: usize, lambda: usize) -> usize {
    (i * n + j) * d + lambda
}

/// `gl_n(R)` on the basis `E_ij(r_lambda)`, ordered by `(i, j, lambda)`.
pub fn build_gl(n: usize, r: &AssocAlgebra) -> Result<LeibnizAlgebra> {
    if n < 2 {
        return Err(Error::UnsupportedSize(n));
    }
    let d = r.dim();
    let dim = n * n * d;
    let mut labels = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            for lab in r.labels() {
                labels.push(format!("E{}{}({lab})", i + 1, j + 1));
                weights.push(root_weight(n, i, j));
            }
        }
    }
    let minus = -r.domain().one();
    let mut table = Vec::with_capacity(dim * dim);
    for x in 0..dim {
        let (i, j, a) = (x / (n * d), (x / d) % n, x % d);
        for y in 0..dim {
            let (k, l, b) = (y / (n * d), (y / d) % n, y % d);
            // [E_ij(a), E_kl(b)] = delta_jk E_il(ab) - delta_il E_kj(ba)
            let mut v = SparseVec::new();
            if j == k {
                v.add_scaled(
                    &r.domain().one(),
                    &r.mul_basis(a, b)
                        .map_indices(|m| Some(gl_index(n, d, i, l, m))),
                );
            }
            if i == l {
                v.add_scaled(
                    &minus,
                    &r.mul_basis(b, a)
                        .map_indices(|m| Some(gl_index(n, d, k, j, m))),
                );
            }
            table.push(v);
        }
    }
    LeibnizAlgebra::new(
        format!("gl{n}({})", r.name()),
        r.domain(),
        labels,
        table,
        Some(weights),
    )
}

/// `sl_n(R) = [gl_n(R), gl_n(R)]` with its embedding into `gl_n(R)`.
///
/// Basis: the off-diagonal `E_ij(r_lambda)` in `(i, j, lambda)` order, then an echelon
/// basis of the diagonal part of the derived span.
#[derive(Clone, Debug)]
pub struct SlAlgebra {
    pub n: usize,
    pub ring: AssocAlgebra,
    pub algebra: LeibnizAlgebra,
    pub gl: LeibnizAlgebra,
    /// `gl` coordinates of each basis element
    pub embedding: Vec<SparseVec>,
    diagonal: Submodule,
    /// position in the sl basis of each diagonal echelon row, by pivot
    diagonal_pivots: Vec<usize>,
}

impl SlAlgebra {
    /// Basis index of `E_ij(r_lambda)`, `i != j`, 0-based.
    pub fn e(&self, i: usize, j: usize, lambda: usize) -> usize {
        assert!(i != j, "diagonal entries are not basis elements");
        let d = self.ring.dim();
        let slot = i * (self.n - 1) + if j > i { j - 1 } else { j };
        slot * d + lambda
    }

    /// Number of off-diagonal basis elements.
    pub fn off_diagonal_dim(&self) -> usize {
        self.n * (self.n - 1) * self.ring.dim()
    }

    /// `E_ij(a)` for an arbitrary ring element `a` given in ring coordinates.
    pub fn e_elem(&self, i: usize, j: usize, a: &SparseVec) -> SparseVec {
        a.map_indices(|lambda| Some(self.e(i, j, lambda)))
    }

    /// Coordinates in the sl basis of a `gl` vector, if it lies in `sl`.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let (n, d) = (self.n, self.ring.dim());
        let mut out = Vec::new();
        let mut diag = Vec::new();
        for (x, c) in v.iter() {
            let (i, j, a) = (x / (n * d), (x / d) % n, x % d);
            if i == j {
                diag.push((*x, c.clone()));
            } else {
                out.push((self.e(i, j, a), c.clone()));
            }
        }
        let coords = self.diagonal.coordinates(&SparseVec::from_entries(diag))?;
        for (k, c) in coords.into_iter().enumerate() {
            if !c.is_zero() {
                out.push((self.diagonal_pivots[k], c));
            }
        }
        Some(SparseVec::from_entries(out))
    }
}

/// Builds `sl_n(R)` and checks closure and the elementary-matrix relations.
pub fn build_sl(n: usize, r: &AssocAlgebra) -> Result<SlAlgebra> {
    if n < 3 {
        return Err(Error::UnsupportedSize(n));
    }
    let gl = build_gl(n, r)?;
    let d = r.dim();
    let gdim = gl.dim();
    let domain = r.domain();

    let derived = gl.derived_span();
    let is_diag = |x: usize| (x / (n * d)) == (x / d) % n;
    let mut diagonal = Submodule::new(domain, gdim);
    for v in gl.table() {
        if v.iter().all(|(x, _)| is_diag(*x)) {
            diagonal.insert(v.clone());
        }
    }
    let mut embedding = Vec::new();
    let mut labels = Vec::new();
    let mut weights: Vec<Weight> = Vec::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            for (lambda, lab) in r.labels().iter().enumerate() {
                let x = gl_index(n, d, i, j, lambda);
                let unit = SparseVec::unit(x, domain.one());
                if !derived.contains(&unit) {
                    return Err(Error::ModelCheck(format!(
                        "E{}{}({lab}) is not a commutator",
                        i + 1,
                        j + 1
                    )));
                }
                embedding.push(unit);
                labels.push(gl.labels()[x].clone());
                weights.push(root_weight(n, i, j));
            }
        }
    }
    let mut diagonal_pivots = Vec::new();
    for (k, v) in diagonal.basis().into_iter().enumerate() {
        diagonal_pivots.push(embedding.len());
        labels.push(format!("D{}", k + 1));
        weights.push(vec![0; n]);
        embedding.push(v);
    }
    if embedding.len() != derived.rank() {
        return Err(Error::ModelCheck(format!(
            "derived span has rank {} but the sl basis has {} elements",
            derived.rank(),
            embedding.len()
        )));
    }
    let mut sl = SlAlgebra {
        n,
        ring: r.clone(),
        algebra: LeibnizAlgebra::abelian(domain, 0),
        gl,
        embedding,
        diagonal,
        diagonal_pivots,
    };
    let m = sl.embedding.len();
    let mut table = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            let v = sl.gl.bracket(&sl.embedding[a], &sl.embedding[b]);
            let c = sl
                .coordinates(&v)
                .ok_or_else(|| Error::ModelCheck(format!("sl is not closed under [{a}, {b}]")))?;
            table.push(c);
        }
    }
    sl.algebra = LeibnizAlgebra::new(
        format!("sl{n}({})", r.name()),
        domain,
        labels,
        table,
        Some(weights),
    )?;
    check_elementary_relations(&sl)?;
    Ok(sl)
}

/// `[E_ij(a), E_jk(b)] = E_ik(ab)`, `[E_ij(a), E_ki(b)] = -E_kj(ba)`, and
/// `[E_ij(a), E_kl(b)] = 0` for `j != k`, `i != l`, on all basis pairs.
pub fn check_elementary_relations(sl: &SlAlgebra) -> Result<()> {
    let (n, d) = (sl.n, sl.ring.dim());
    let l = &sl.algebra;
    let minus: Scalar = -l.domain().one();
    for (i, j) in off_diagonal(n) {
        for (k, m) in off_diagonal(n) {
            for a in 0..d {
                for b in 0..d {
                    let got = l.bracket_basis(sl.e(i, j, a), sl.e(k, m, b));
                    let expected = if j == k && i != m {
                        sl.e_elem(i, m, sl.ring.mul_basis(a, b))
                    } else if m == i && j != k {
                        sl.e_elem(k, j, sl.ring.mul_basis(b, a)).scale(&minus)
                    } else if j != k && i != m {
                        SparseVec::new()
                    } else {
                        continue;
                    };
                    if *got != expected {
                        return Err(Error::ModelCheck(format!(
                            "elementary relation fails for E{}{}({a}), E{}{}({b})",
                            i + 1,
                            j + 1,
                            k + 1,
                            m + 1
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// All ordered pairs `(i, j)` with `i != j`, `0 <= i, j < n`.
pub fn off_diagonal(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::{boundary, homology_hl, uce};
    use crate::rings::{dual, ground, mat2};
    use crate::ScalarDomain;

    const F2: ScalarDomain = ScalarDomain::PrimeField(2);
    const F3: ScalarDomain = ScalarDomain::PrimeField(3);

    #[test]
    fn gl_dimensions_and_bracket() {
        assert_eq!(build_gl(2, &ground(F2)).unwrap().dim(), 4);
        let r = dual(ScalarDomain::Rationals);
        let gl = build_gl(3, &r).unwrap();
        assert_eq!(gl.dim(), 18);
        // [E12(x), E21(x)] = E11(x^2) - E22(x^2) = 0 ; [E12(1), E21(x)] = E11(x) - E22(x)
        let (n, d) = (3, 2);
        let got = gl.bracket_basis(gl_index(n, d, 0, 1, 0), gl_index(n, d, 1, 0, 1));
        let one = ScalarDomain::Rationals.one();
        let expected = SparseVec::from_entries(vec![
            (gl_index(n, d, 0, 0, 1), one.clone()),
            (gl_index(n, d, 1, 1, 1), -one),
        ]);
        assert_eq!(*got, expected);
        assert!(gl
            .bracket_basis(gl_index(n, d, 0, 1, 1), gl_index(n, d, 1, 0, 1))
            .is_zero());
    }

    #[test]
    fn sl_dimensions() {
        assert_eq!(build_sl(4, &ground(F2)).unwrap().algebra.dim(), 15);
        assert_eq!(build_sl(3, &dual(F3)).unwrap().algebra.dim(), 16);
        assert_eq!(build_sl(3, &mat2(F2)).unwrap().algebra.dim(), 35);
    }

    #[test]
    fn boundaries_compose_to_zero() {
        let sl = build_sl(3, &ground(F2)).unwrap().algebra;
        let d2 = boundary(&sl, 2).unwrap();
        let d3 = boundary(&sl, 3).unwrap();
        assert!(d2.mul(&d3).unwrap().is_zero());
    }

    #[test]
    fn sl3_f3_homology() {
        let sl = build_sl(3, &ground(F3)).unwrap().algebra;
        assert_eq!(boundary(&sl, 2).unwrap().rank(), 8);
        assert!(homology_hl(&sl, 1).unwrap().invariants.is_zero());
        let h = homology_hl(&sl, 2).unwrap();
        assert_eq!(h.invariants.dimension(), 6);
        assert_eq!(h.rank_in, 8);
    }

    #[test]
    fn uce_of_sl4_f2() {
        let sl = build_sl(4, &ground(F2)).unwrap().algebra;
        let u = uce(&sl).unwrap();
        assert_eq!(u.kernel_invariants.dimension(), 6);
        assert_eq!(u.total.dim(), 21);
    }
}
