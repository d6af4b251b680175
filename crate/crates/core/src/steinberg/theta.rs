//! The six-valued index map on quadruples of distinct indices in `{1, 2, 3, 4}`.

use std::collections::BTreeMap;

use serde::Serialize;

pub type Quadruple = [u8; 4];

/// Permutations of `{1, 2, 3, 4}` written as images `[s(1), s(2), s(3), s(4)]`.
fn s4() -> Vec<Quadruple> {
    let mut out = Vec::with_capacity(24);
    for a in 1..=4u8 {
        for b in 1..=4u8 {
            for c in 1..=4u8 {
                for d in 1..=4u8 {
                    let q = [a, b, c, d];
                    let mut seen = [false; 5];
                    if q.iter()
                        .all(|&x| !std::mem::replace(&mut seen[x as usize], true))
                    {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

/// `G = {(1), (13), (24), (13)(24)}`.
pub fn group_g() -> [Quadruple; 4] {
    [[1, 2, 3, 4], [3, 2, 1, 4], [1, 4, 3, 2], [3, 4, 1, 2]]
}

/// Componentwise action `s((i, j, k, l)) = (s(i), s(j), s(k), s(l))`.
pub fn act(s: &Quadruple, q: &Quadruple) -> Quadruple {
    q.map(|x| s[x as usize - 1])
}

fn compose(s: &Quadruple, t: &Quadruple) -> Quadruple {
    t.map(|x| s[x as usize - 1])
}

/// Label table `theta: P -> {1, ..., 6}` with `theta((1,2,3,4)) = 1`; the other labels
/// follow the lexicographic order of the smallest quadruple in each class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaMap {
    table: BTreeMap<Quadruple, u8>,
    /// coset representative `s_m` for label `m` (index `m - 1`)
    representatives: Vec<Quadruple>,
}

impl ThetaMap {
    pub fn build() -> Self {
        let base = [1, 2, 3, 4];
        let g = group_g();
        let mut orbits: Vec<(Quadruple, Vec<Quadruple>)> = Vec::new();
        let mut assigned: BTreeMap<Quadruple, usize> = BTreeMap::new();
        for s in s4() {
            if assigned.contains_key(&act(&s, &base)) {
                continue;
            }
            let mut orbit: Vec<Quadruple> = g.iter().map(|h| act(&compose(&s, h), &base)).collect();
            orbit.sort();
            for q in &orbit {
                assigned.insert(*q, orbits.len());
            }
            orbits.push((s, orbit));
        }
        // label 1 is the class of (1,2,3,4); the rest by smallest member
        orbits.sort_by_key(|(_, orbit)| (!orbit.contains(&base), orbit[0]));
        let mut table = BTreeMap::new();
        let mut representatives = Vec::new();
        for (m, (s, orbit)) in orbits.iter().enumerate() {
            representatives.push(*s);
            for q in orbit {
                table.insert(*q, m as u8 + 1);
            }
        }
        ThetaMap {
            table,
            representatives,
        }
    }

    /// `theta` of a quadruple of distinct 1-based indices.
    pub fn label(&self, q: Quadruple) -> u8 {
        self.table[&q]
    }

    /// `theta` for 0-based indices, as a coordinate in `0..6`.
    pub fn coordinate(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        let q = [i, j, k, l].map(|x| x as u8 + 1);
        self.label(q) as usize - 1
    }

    pub fn table(&self) -> &BTreeMap<Quadruple, u8> {
        &self.table
    }

    pub fn representatives(&self) -> &[Quadruple] {
        &self.representatives
    }

    pub fn preimages(&self, label: u8) -> Vec<Quadruple> {
        self.table
            .iter()
            .filter(|(_, &m)| m == label)
            .map(|(q, _)| *q)
            .collect()
    }

    /// Smallest quadruple with the given label.
    pub fn minimal(&self, label: u8) -> Quadruple {
        self.preimages(label)[0]
    }

    /// A copy with the labels of two quadruples exchanged (breaks `G`-invariance when
    /// the two lie in different classes).
    pub fn with_swapped(&self, a: Quadruple, b: Quadruple) -> Self {
        let mut t = self.clone();
        let (la, lb) = (t.table[&a], t.table[&b]);
        t.table.insert(a, lb);
        t.table.insert(b, la);
        t
    }

    /// Every class has four members, `(1,2,3,4)` has label 1, and the label is invariant
    /// under `G` and under `(i,j,k,l) -> (k,l,i,j)`, `(i,j,k,l) -> (i,l,k,j)`.
    pub fn is_consistent(&self) -> bool {
        let sizes_ok = (1..=6).all(|m| self.preimages(m).len() == 4);
        let anchored = self.table.get(&[1, 2, 3, 4]) == Some(&1);
        let invariant = self.table.iter().all(|(q, m)| {
            let [i, j, k, l] = *q;
            group_g().iter().all(|h| self.table[&compose(q, h)] == *m)
                && self.table[&[k, l, i, j]] == *m
                && self.table[&[i, l, k, j]] == *m
        });
        self.table.len() == 24 && sizes_ok && anchored && invariant
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_labels() {
        let t = ThetaMap::build();
        assert_eq!(t.label([1, 2, 3, 4]), 1);
        assert_eq!(t.label([3, 4, 1, 2]), 1);
        assert!(t.is_consistent());
        for m in 1..=6 {
            assert_eq!(t.preimages(m).len(), 4);
        }
        assert_eq!(t.minimal(2), [1, 2, 4, 3]);
    }

    #[test]
    fn swapping_breaks_invariance() {
        let t = ThetaMap::build().with_swapped([1, 2, 3, 4], [1, 2, 4, 3]);
        assert!(!t.is_consistent());
    }
}
