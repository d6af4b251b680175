//! Smith normal form of small dense integer matrices.
//!
//! Pivoting picks the nonzero entry of least absolute value in the active
//! submatrix, which keeps entry growth in check on the boundary matrices
//! this crate feeds it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    pub diag: Vec<BigInt>,
    pub rank: usize,
}

/// `U * A * V = D` with `U`, `V` unimodular. `v_inv` is `V^{-1}`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub diag: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    pub v_inv: Vec<Vec<BigInt>>,
}

pub(crate) type DenseInt = Vec<Vec<BigInt>>;

pub(crate) fn identity(n: usize) -> DenseInt {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

struct Work {
    a: DenseInt,
    rows: usize,
    cols: usize,
    track: bool,
    u: DenseInt,
    v: DenseInt,
    v_inv: DenseInt,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if self.track {
            self.u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in self.a.iter_mut() {
            r.swap(i, j);
        }
        if self.track {
            for r in self.v.iter_mut() {
                r.swap(i, j);
            }
            self.v_inv.swap(i, j);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let t = &self.a[src][k] * c;
            self.a[dst][k] += t;
        }
        if self.track {
            for k in 0..self.rows {
                let t = &self.u[src][k] * c;
                self.u[dst][k] += t;
            }
        }
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for r in self.a.iter_mut() {
            let t = &r[src] * c;
            r[dst] += t;
        }
        if self.track {
            for r in self.v.iter_mut() {
                let t = &r[src] * c;
                r[dst] += t;
            }
            // inverse: row[src] -= c * row[dst]
            for k in 0..self.cols {
                let t = &self.v_inv[dst][k] * c;
                self.v_inv[src][k] -= t;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -&*x;
        }
        if self.track {
            for x in self.u[i].iter_mut() {
                *x = -&*x;
            }
        }
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.a[bi][bj].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn run(&mut self) -> Vec<BigInt> {
        let mut diag = Vec::new();
        let steps = self.rows.min(self.cols);
        for t in 0..steps {
            loop {
                let Some((pi, pj)) = self.min_pivot(t) else {
                    return diag;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let p = self.a[t][t].clone();
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = self.a[i][t].div_floor(&p);
                    self.add_row(i, t, &-q);
                    dirty |= !self.a[i][t].is_zero();
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = self.a[t][j].div_floor(&p);
                    self.add_col(j, t, &-q);
                    dirty |= !self.a[t][j].is_zero();
                }
                if dirty {
                    continue;
                }
                let bad = (t + 1..self.rows)
                    .find(|&i| (t + 1..self.cols).any(|j| !(&self.a[i][j] % &p).is_zero()));
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            diag.push(self.a[t][t].clone());
        }
        diag
    }
}

fn work(a: &[Vec<BigInt>], cols: usize, track: bool) -> Work {
    let rows = a.len();
    Work {
        a: a.to_vec(),
        rows,
        cols,
        track,
        u: if track { identity(rows) } else { Vec::new() },
        v: if track { identity(cols) } else { Vec::new() },
        v_inv: if track { identity(cols) } else { Vec::new() },
    }
}

/// Invariant factors of a dense `rows x cols` integer matrix.
pub fn smith_dense(a: &[Vec<BigInt>], cols: usize) -> SmithForm {
    let diag = work(a, cols, false).run();
    SmithForm {
        rank: diag.len(),
        diag,
    }
}

/// Smith form with the unimodular transforms.
pub fn smith_decompose(a: &[Vec<BigInt>], cols: usize) -> SmithDecomposition {
    let mut w = work(a, cols, true);
    let diag = w.run();
    SmithDecomposition {
        diag,
        u: w.u,
        v: w.v,
        v_inv: w.v_inv,
    }
}
