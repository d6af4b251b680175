use crate::scalar::{Scalar, ScalarDomain};

/// A sparse coordinate vector: sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(index: usize, one: Scalar) -> Self {
        SparseVec {
            entries: vec![(index, one)],
        }
    }

    /// Builds a vector from unsorted entries, summing duplicates and dropping zeros.
    pub fn from_entries(mut entries: Vec<(usize, Scalar)>) -> Self {
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match out.last_mut() {
                Some((j, w)) if *j == i => *w = &*w + &v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize, domain: ScalarDomain) -> Vec<Scalar> {
        let mut out = vec![domain.zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, w) = b.next().unwrap();
                    out.push((*j, c * w));
                }
                (Some(_), Some(_)) => {
                    let (i, v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    let s = &v + &(c * w);
                    if !s.is_zero() {
                        out.push((i, s));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, w) = b.next().unwrap();
                    out.push((*j, c * w));
                }
                (None, None) => break,
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec, one: &Scalar) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(one, other);
        out
    }

    pub fn dot(&self, other: &SparseVec, zero: &Scalar) -> Scalar {
        let mut acc = zero.clone();
        let (mut x, mut y) = (0, 0);
        while x < self.entries.len() && y < other.entries.len() {
            let (i, a) = &self.entries[x];
            let (j, b) = &other.entries[y];
            if i < j {
                x += 1;
            } else if i > j {
                y += 1;
            } else {
                acc = &acc + &(a * b);
                x += 1;
                y += 1;
            }
        }
        acc
    }

    /// Reindexes through `f`; entries mapped to `None` are dropped.
    pub fn map_indices(&self, mut f: impl FnMut(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_entries(
            self.entries
                .iter()
                .filter_map(|(i, v)| f(*i).map(|j| (j, v.clone())))
                .collect(),
        )
    }
}

/// Dense accumulator used when a sum of sparse vectors fills in.
pub(crate) struct DenseAccumulator {
    values: Vec<Scalar>,
    touched: Vec<bool>,
}

impl DenseAccumulator {
    pub(crate) fn new(len: usize, domain: ScalarDomain) -> Self {
        DenseAccumulator {
            values: vec![domain.zero(); len],
            touched: vec![false; len],
        }
    }

    pub(crate) fn add_scaled(&mut self, c: &Scalar, v: &SparseVec) {
        for (i, w) in v.iter() {
            self.values[*i] = &self.values[*i] + &(c * w);
            self.touched[*i] = true;
        }
    }

    pub(crate) fn finish(self) -> SparseVec {
        SparseVec {
            entries: self
                .values
                .into_iter()
                .zip(self.touched)
                .enumerate()
                .filter(|(_, (v, t))| *t && !v.is_zero())
                .map(|(i, (v, _))| (i, v))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_entries_merges_and_drops_zeros() {
        let z = ScalarDomain::Integers;
        let v = SparseVec::from_entries(vec![
            (3, z.from_i64(1)),
            (1, z.from_i64(2)),
            (3, z.from_i64(-1)),
            (0, z.from_i64(5)),
        ]);
        assert_eq!(v.entries(), &[(0, z.from_i64(5)), (1, z.from_i64(2))]);
    }

    #[test]
    fn add_scaled_cancels() {
        let f = ScalarDomain::PrimeField(3);
        let mut a = SparseVec::from_entries(vec![(0, f.from_i64(1)), (2, f.from_i64(2))]);
        let b = SparseVec::from_entries(vec![(2, f.from_i64(1)), (4, f.from_i64(1))]);
        a.add_scaled(&f.from_i64(1), &b);
        assert_eq!(a.entries(), &[(0, f.from_i64(1)), (4, f.from_i64(1))]);
    }
}
