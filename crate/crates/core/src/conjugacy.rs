//! Natural conjugacy: `a ~n b` iff there are `g, h` in `S¹` with
//! `ag = gb`, `bh = ha`, `hag = b` and `gbh = a`.

use std::collections::BTreeSet;

use crate::partition::{Partition, UnionFind};
use crate::semigroup::WithOne;

/// A conjugator pair, as indices into `S¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjugacyWitness {
    pub g: usize,
    pub h: usize,
}

/// The eight conjugator equations, in order:
///
/// ```text
/// (i)   ag = gb        (v)    hg·b = b
/// (ii)  bh = ha        (vi)   gh·a = a
/// (iii) hag = b        (vii)  b·hg = b
/// (iv)  gbh = a        (viii) a·gh = a
/// ```
pub fn conditions(w: &WithOne, a: usize, b: usize, g: usize, h: usize) -> [bool; 8] {
    let gh = w.mul(g, h);
    let hg = w.mul(h, g);
    [
        w.mul(a, g) == w.mul(g, b),
        w.mul(b, h) == w.mul(h, a),
        w.mul3(h, a, g) == b,
        w.mul3(g, b, h) == a,
        w.mul(hg, b) == b,
        w.mul(gh, a) == a,
        w.mul(b, hg) == b,
        w.mul(a, gh) == a,
    ]
}

/// Sets of equations (0-based, so `0` is (i)) each of which forces all
/// eight. Item 5 is read as {(i), (iv), (v)}. The last two are
/// {(i), (ii), (v), (vi)} and {(i), (ii), (vii), (viii)}: pairing (v) with
/// (vii), or (vi) with (viii), is not enough (`a = e`, `b = 1`, `g = h = e`
/// in any monoid with an idempotent `e ≠ 1`).
pub const ALTERNATIVES: [&[usize]; 16] = [
    &[0, 2, 3],
    &[1, 2, 3],
    &[0, 2, 7],
    &[1, 3, 6],
    &[0, 3, 4],
    &[1, 2, 5],
    &[0, 4, 7],
    &[1, 5, 6],
    &[2, 3, 4],
    &[2, 3, 5],
    &[2, 3, 6],
    &[2, 3, 7],
    &[2, 5, 7],
    &[3, 4, 6],
    &[0, 1, 4, 5],
    &[0, 1, 6, 7],
];

pub fn is_witness(w: &WithOne, a: usize, b: usize, g: usize, h: usize) -> bool {
    let c = conditions(w, a, b, g, h);
    c[0] && c[1] && c[2] && c[3]
}

/// First witness in the order of [`WithOne::conjugator_order`] for `g`,
/// then for `h`.
pub fn conjugators(w: &WithOne, a: usize, b: usize) -> Option<ConjugacyWitness> {
    let order = w.conjugator_order();
    for &g in &order {
        for &h in &order {
            if is_witness(w, a, b, g, h) {
                return Some(ConjugacyWitness { g, h });
            }
        }
    }
    None
}

pub fn are_conjugate(w: &WithOne, a: usize, b: usize) -> bool {
    conjugators(w, a, b).is_some()
}

/// `a ~n b` via `(g, h)` exactly when `a ∈ D_{g,h}` and `b = hag`, so one
/// sweep over conjugator pairs finds every related pair.
pub fn conjugacy_classes(w: &WithOne) -> Partition {
    let n = w.base_len();
    let mut uf = UnionFind::new(n);
    for g in 0..w.len() {
        for h in 0..w.len() {
            let gh = w.mul(g, h);
            for a in 0..n {
                if w.mul(gh, a) == a && w.mul(a, gh) == a {
                    uf.union(a, w.mul3(h, a, g));
                }
            }
        }
    }
    uf.into_partition()
}

/// `K_{g,h}`: the pairs `(a, b)` of elements of `S` conjugated by `(g, h)`.
pub fn k_pairs(w: &WithOne, g: usize, h: usize) -> BTreeSet<(usize, usize)> {
    let gh = w.mul(g, h);
    w.elements()
        .filter(|&a| w.mul(gh, a) == a && w.mul(a, gh) == a)
        .map(|a| (a, w.mul3(h, a, g)))
        .collect()
}

/// `C_a = {x : xa = ax}` within `S`.
pub fn centralizer(w: &WithOne, a: usize) -> Vec<usize> {
    w.elements()
        .filter(|&x| w.mul(x, a) == w.mul(a, x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::FiniteSemigroup;

    fn left_zero2() -> WithOne {
        WithOne::new(&FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]]).unwrap())
    }

    #[test]
    fn reflexive_witness_is_identity() {
        let w = left_zero2();
        for a in w.elements() {
            assert_eq!(conjugators(&w, a, a), Some(ConjugacyWitness { g: 2, h: 2 }));
        }
    }

    #[test]
    fn left_zero_elements_are_conjugate() {
        // 1·0·0 = 1 and 0·1·1 = 0
        let w = left_zero2();
        let wit = conjugators(&w, 0, 1).unwrap();
        assert!(conditions(&w, 0, 1, wit.g, wit.h).iter().all(|&c| c));
        assert_eq!(conjugacy_classes(&w).num_blocks(), 1);
    }

    #[test]
    fn k_one_one_is_diagonal() {
        let w = left_zero2();
        let k = k_pairs(&w, 2, 2);
        assert_eq!(k, [(0, 0), (1, 1)].into_iter().collect());
    }

    #[test]
    fn zero_is_alone() {
        // {0, 1} under multiplication, 0 a zero
        let w = WithOne::new(&FiniteSemigroup::new(vec![vec![0, 0], vec![0, 1]]).unwrap());
        assert!(conjugacy_classes(&w).is_singletons());
    }
}
