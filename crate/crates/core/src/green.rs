//! Green's relations of a finite semigroup.

use fixedbitset::FixedBitSet;

use crate::partition::Partition;
use crate::semigroup::{FiniteSemigroup, WithOne};

/// The five Green's partitions of the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenData {
    pub l: Partition,
    pub r: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
    /// Indexed by H-class: does the class contain an idempotent.
    pub group_h: Vec<bool>,
}

impl GreenData {
    pub fn is_group_h_class_of(&self, x: usize) -> bool {
        self.group_h[self.h.block_of(x)]
    }
}

fn left_ideal(w: &WithOne, a: usize) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(w.base_len());
    for s in 0..w.len() {
        set.insert(w.mul(s, a));
    }
    set
}

fn right_ideal(w: &WithOne, a: usize) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(w.base_len());
    for t in 0..w.len() {
        set.insert(w.mul(a, t));
    }
    set
}

fn two_sided_ideal(w: &WithOne, a: usize) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(w.base_len());
    for s in 0..w.len() {
        let sa = w.mul(s, a);
        for t in 0..w.len() {
            set.insert(w.mul(sa, t));
        }
    }
    set
}

pub fn green(s: &FiniteSemigroup) -> GreenData {
    let w = WithOne::new(s);
    let n = s.len();
    let lk: Vec<FixedBitSet> = (0..n).map(|a| left_ideal(&w, a)).collect();
    let rk: Vec<FixedBitSet> = (0..n).map(|a| right_ideal(&w, a)).collect();
    let jk: Vec<FixedBitSet> = (0..n).map(|a| two_sided_ideal(&w, a)).collect();
    let l = Partition::from_keys(&lk);
    let r = Partition::from_keys(&rk);
    let j = Partition::from_keys(&jk);
    let h = l.meet(&r);

    // a D b iff the L-class of a meets the R-class of b
    let mut d_key = vec![usize::MAX; n];
    for a in 0..n {
        if d_key[a] != usize::MAX {
            continue;
        }
        for b in 0..n {
            if l.class_of(a).iter().any(|&c| r.same_block(c, b)) {
                d_key[b] = a;
            }
        }
    }
    let d = Partition::from_keys(&d_key);

    let group_h = h
        .blocks()
        .iter()
        .map(|b| b.iter().any(|&x| s.is_idempotent(x)))
        .collect();
    GreenData {
        l,
        r,
        h,
        d,
        j,
        group_h,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_zero_green() {
        let s = FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]]).unwrap();
        let g = green(&s);
        assert_eq!(g.l.num_blocks(), 1);
        assert!(g.r.is_singletons());
        assert_eq!(g.d.num_blocks(), 1);
        assert_eq!(g.d, g.l.join(&g.r));
        assert_eq!(g.d, g.j);
    }

    #[test]
    fn group_is_one_class() {
        let z3 = FiniteSemigroup::new(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        let g = green(&z3);
        for p in [&g.l, &g.r, &g.h, &g.d, &g.j] {
            assert_eq!(p.num_blocks(), 1);
        }
        assert_eq!(g.group_h, vec![true]);
    }

    #[test]
    fn chain_has_trivial_classes() {
        // 2-chain {0 < 1} under min
        let s = FiniteSemigroup::new(vec![vec![0, 0], vec![0, 1]]).unwrap();
        let g = green(&s);
        assert!(g.d.is_singletons());
        assert_eq!(g.group_h, vec![true, true]);
    }
}
