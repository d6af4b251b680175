//! The `T`/`t` identities, checked in the concrete model on all ring basis elements.

use super::model::SteinbergModel;
use super::{CheckReport, SuiteReport};
use crate::linalg::{SparseVec, Submodule};

type Triple = (usize, usize, usize);

fn distinct_triples(n: usize) -> impl Iterator<Item = Triple> {
    (0..n)
        .flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .filter(|&(i, j, k)| i != j && j != k && i != k)
}

/// Runs every identity; failures are report content, never errors.
pub fn verify_calculus(m: &SteinbergModel) -> SuiteReport {
    let checks = vec![
        t_identity(m),
        t_antisymmetry(m),
        small_t_independence(m),
        bracket_rules(m),
        normal_form(m),
        h_subalgebra(m),
        center_in_h(m),
    ];
    SuiteReport::new(m.algebra().name(), checks)
}

fn sub(u: &SparseVec, v: &SparseVec, m: &SteinbergModel) -> SparseVec {
    let mut w = u.clone();
    w.add_scaled(&-m.ring.domain().one(), v);
    w
}

fn plus(u: &SparseVec, v: &SparseVec, m: &SteinbergModel) -> SparseVec {
    u.add(v, &m.ring.domain().one())
}

/// `T_ij(a, bc) = T_ik(ab, c) + T_kj(ca, b)`.
fn t_identity(m: &SteinbergModel) -> CheckReport {
    let mut rep = CheckReport::new("T-identity");
    let (r, d) = (&m.ring, m.ring.dim());
    for (i, j, k) in distinct_triples(m.n) {
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let (ra, rb, rc) = (r.basis_vector(a), r.basis_vector(b), r.basis_vector(c));
                    let lhs = m.big_t(i, j, &ra, r.mul_basis(b, c));
                    let rhs = plus(
                        &m.big_t(i, k, r.mul_basis(a, b), &rc),
                        &m.big_t(k, j, r.mul_basis(c, a), &rb),
                        m,
                    );
                    rep.record(lhs == rhs, || {
                        format!("i={i} j={j} k={k} a={a} b={b} c={c}")
                    });
                }
            }
        }
    }
    rep
}

/// `T_kj(c, 1) + T_jk(c, 1) = 0`.
fn t_antisymmetry(m: &SteinbergModel) -> CheckReport {
    let mut rep = CheckReport::new("T(c,1) antisymmetry");
    let one = m.ring.one();
    for (k, j) in crate::leibniz::off_diagonal(m.n) {
        for c in 0..m.ring.dim() {
            let rc = m.ring.basis_vector(c);
            let s = plus(&m.big_t(k, j, &rc, &one), &m.big_t(j, k, &rc, &one), m);
            rep.record(s.is_zero(), || format!("k={k} j={j} c={c}"));
        }
    }
    rep
}

/// `T_1j(a, b) - T_1j(ba, 1)` is the same for every `j != 1`.
fn small_t_independence(m: &SteinbergModel) -> CheckReport {
    let mut rep = CheckReport::new("t independent of j");
    let d = m.ring.dim();
    for a in 0..d {
        for b in 0..d {
            let (ra, rb) = (m.ring.basis_vector(a), m.ring.basis_vector(b));
            let base = m.small_t_via(1, &ra, &rb);
            for j in 2..m.n {
                let other = m.small_t_via(j, &ra, &rb);
                rep.record(other == base, || format!("a={a} b={b} j={}", j + 1));
            }
        }
    }
    rep
}

/// `[h, X_kl(c)]` and `[X_kl(c), h]` for `h = T_ij(a, b)` or `t(a, b)`.
fn bracket_rules(m: &SteinbergModel) -> CheckReport {
    let mut rep = CheckReport::new("T/t bracket rules");
    let (r, d, n) = (&m.ring, m.ring.dim(), m.n);
    let neg = |v: SparseVec| v.neg();
    for (i, j) in crate::leibniz::off_diagonal(n) {
        for (k, l) in crate::leibniz::off_diagonal(n) {
            for a in 0..d {
                for b in 0..d {
                    let (ra, rb) = (r.basis_vector(a), r.basis_vector(b));
                    let t = m.big_t(i, j, &ra, &rb);
                    for c in 0..d {
                        let rc = r.basis_vector(c);
                        let m3 = |x: &SparseVec, y: &SparseVec, z: &SparseVec| r.mul3(x, y, z);
                        let expected = if (k, l) == (i, j) {
                            m.x(i, j, &plus(&m3(&ra, &rb, &rc), &m3(&rc, &rb, &ra), m))
                        } else if (k, l) == (j, i) {
                            neg(m.x(j, i, &plus(&m3(&rc, &ra, &rb), &m3(&rb, &ra, &rc), m)))
                        } else if k == i {
                            m.x(i, l, &m3(&ra, &rb, &rc))
                        } else if l == i {
                            neg(m.x(k, i, &m3(&rc, &ra, &rb)))
                        } else if l == j {
                            m.x(k, j, &m3(&rc, &rb, &ra))
                        } else if k == j {
                            neg(m.x(j, l, &m3(&rb, &ra, &rc)))
                        } else {
                            SparseVec::new()
                        };
                        let xc = m.x(k, l, &rc);
                        let left = m.bracket(&t, &xc);
                        let right = m.bracket(&xc, &t);
                        rep.record(left == expected && right == expected.neg(), || {
                            format!(
                                "[T{}{}(r{a},r{b}), X{}{}(r{c})]",
                                i + 1,
                                j + 1,
                                k + 1,
                                l + 1
                            )
                        });
                    }
                }
            }
        }
    }
    for a in 0..d {
        for b in 0..d {
            let (ra, rb) = (r.basis_vector(a), r.basis_vector(b));
            let t = m.small_t(&ra, &rb);
            let comm = r.commutator(&ra, &rb);
            for (k, l) in crate::leibniz::off_diagonal(n) {
                for c in 0..d {
                    let rc = r.basis_vector(c);
                    let expected = if k == 0 {
                        m.x(k, l, &r.mul(&comm, &rc))
                    } else if l == 0 {
                        neg(m.x(k, l, &r.mul(&rc, &comm)))
                    } else {
                        SparseVec::new()
                    };
                    let xc = m.x(k, l, &rc);
                    let left = m.bracket(&t, &xc);
                    let right = m.bracket(&xc, &t);
                    rep.record(left == expected && right == expected.neg(), || {
                        format!("[t(r{a},r{b}), X{}{}(r{c})]", k + 1, l + 1)
                    });
                }
            }
        }
    }
    rep
}

/// `T_ij(a, b) = t(a, b) - T_1i(ab, 1) + T_1j(ba, 1)` with `T_11 = 0`, and the `t` and
/// `T_1j(., 1)` elements span `H`.
fn normal_form(m: &SteinbergModel) -> CheckReport {
    let mut rep = CheckReport::new("H normal form");
    let (r, d) = (&m.ring, m.ring.dim());
    let one = r.one();
    let t1 = |j: usize, a: &SparseVec| {
        if j == 0 {
            SparseVec::new()
        } else {
            m.big_t(0, j, a, &one)
        }
    };
    for (i, j) in crate::leibniz::off_diagonal(m.n) {
        for a in 0..d {
            for b in 0..d {
                let (ra, rb) = (r.basis_vector(a), r.basis_vector(b));
                let lhs = m.big_t(i, j, &ra, &rb);
                let rhs = plus(
                    &sub(&m.small_t(&ra, &rb), &t1(i, r.mul_basis(a, b)), m),
                    &t1(j, r.mul_basis(b, a)),
                    m,
                );
                rep.record(lhs == rhs, || format!("T{}{}(r{a},r{b})", i + 1, j + 1));
            }
        }
    }
    let mut span = Submodule::new(m.ring.domain(), m.dim());
    for a in 0..d {
        let ra = r.basis_vector(a);
        for b in 0..d {
            span.insert(m.small_t(&ra, &r.basis_vector(b)));
        }
        for j in 1..m.n {
            span.insert(t1(j, &ra));
        }
    }
    let h_units = (m.x_dim()..m.dim()).map(|k| m.algebra().basis_vector(k));
    let h = Submodule::spanned_by(m.ring.domain(), m.dim(), h_units);
    let spans = h.contains_all(&span) && span.contains_all(&h);
    rep.record(spans, || {
        format!("span rank {} but H has rank {}", span.rank(), h.rank())
    });
    rep
}

/// `[H, H]` stays in `H`.
fn h_subalgebra(m: &SteinbergModel) -> CheckReport {
    let mut rep = CheckReport::new("H is a subalgebra");
    let l = m.algebra();
    for p in m.x_dim()..m.dim() {
        for q in m.x_dim()..m.dim() {
            rep.record(m.in_h(l.bracket_basis(p, q)), || {
                format!("[{}, {}]", l.labels()[p], l.labels()[q])
            });
        }
    }
    rep
}

/// Central elements have no `X` coordinates.
fn center_in_h(m: &SteinbergModel) -> CheckReport {
    let mut rep = CheckReport::new("center lies in H");
    for z in m.algebra().center().basis() {
        rep.record(m.in_h(&z), || format!("{z:?}"));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{ground, mat2};
    use crate::steinberg::build_stl;
    use crate::ScalarDomain;

    #[test]
    fn calculus_small() {
        let f2 = ScalarDomain::PrimeField(2);
        let rep = verify_calculus(&build_stl(4, &ground(f2)).unwrap());
        assert!(rep.passed, "{:?}", rep.first_failure());
        let rep = verify_calculus(&build_stl(3, &mat2(f2)).unwrap());
        assert!(rep.passed, "{:?}", rep.first_failure());
    }
}
