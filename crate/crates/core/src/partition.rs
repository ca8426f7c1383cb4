//! Set partitions of `0..n` in canonical form, and the union-find used to
//! build them.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("element {0} is outside the carrier")]
    OutOfRange(usize),
    #[error("element {0} appears in more than one block")]
    Repeated(usize),
    #[error("element {0} is not covered by any block")]
    Uncovered(usize),
    #[error("empty block")]
    EmptyBlock,
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Partition::from_keys(&roots)
    }
}

/// A partition of `0..n`.
///
/// Blocks are numbered in order of their minimum element and each block
/// lists its elements ascending, so two partitions are equal iff they have
/// the same blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Elements with equal keys share a block.
    pub fn from_keys<K: Eq + Hash>(keys: &[K]) -> Self {
        let mut ids: HashMap<&K, usize> = HashMap::new();
        let mut block_of = Vec::with_capacity(keys.len());
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (x, key) in keys.iter().enumerate() {
            let next = ids.len();
            let id = *ids.entry(key).or_insert(next);
            if id == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[id].push(x);
            block_of.push(id);
        }
        Partition { block_of, blocks }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, PartitionError> {
        let mut key = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &x in block {
                if x >= n {
                    return Err(PartitionError::OutOfRange(x));
                }
                if key[x] != usize::MAX {
                    return Err(PartitionError::Repeated(x));
                }
                key[x] = b;
            }
        }
        if let Some(x) = key.iter().position(|&k| k == usize::MAX) {
            return Err(PartitionError::Uncovered(x));
        }
        Ok(Self::from_keys(&key))
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_keys(&(0..n).collect::<Vec<_>>())
    }

    /// The one-block partition `{X}`.
    pub fn whole(n: usize) -> Self {
        Self::from_keys(&vec![0u8; n])
    }

    /// Size of the underlying set.
    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.blocks[b]
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// Block ids indexed by element.
    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn class_of(&self, x: usize) -> &[usize] {
        &self.blocks[self.block_of[x]]
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.len() == self.block_of.len()
    }

    /// Smallest common coarsening.
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len(), "join of partitions of different sets");
        let mut uf = UnionFind::new(self.len());
        for block in self.blocks.iter().chain(other.blocks.iter()) {
            for w in block.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.into_partition()
    }

    /// Coarsest common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len(), "meet of partitions of different sets");
        let keys: Vec<(usize, usize)> = (0..self.len())
            .map(|x| (self.block_of[x], other.block_of[x]))
            .collect();
        Self::from_keys(&keys)
    }

    /// `true` if every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.len() == coarser.len()
            && self.blocks.iter().all(|b| {
                let target = coarser.block_of[b[0]];
                b.iter().all(|&x| coarser.block_of[x] == target)
            })
    }

    /// Writes blocks as `0 1 | 2 | 3`, naming elements with `name`.
    pub fn render_with(&self, name: impl Fn(usize) -> String) -> String {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&x| name(x)).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|x| x.to_string()))
    }
}

/// All partitions of `0..n`, via restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn grow(rgs: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Partition>) {
        if rgs.len() == n {
            out.push(Partition::from_keys(rgs));
            return;
        }
        for v in 0..=max + 1 {
            rgs.push(v);
            grow(rgs, n, max.max(v), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::from_keys::<usize>(&[]));
        return out;
    }
    let mut rgs = vec![0];
    grow(&mut rgs, n, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, blocks: &[&[usize]]) -> Partition {
        let blocks: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        Partition::from_blocks(n, &blocks).unwrap()
    }

    #[test]
    fn join_merges_overlapping_blocks() {
        let a = p(4, &[&[0, 1], &[2], &[3]]);
        let b = p(4, &[&[0], &[1, 2], &[3]]);
        assert_eq!(a.join(&b), p(4, &[&[0, 1, 2], &[3]]));
        assert_eq!(a.join(&a), a);
        assert_eq!(a.join(&Partition::singletons(4)), a);
    }

    #[test]
    fn canonical_order_is_by_minimum() {
        let a = p(4, &[&[3, 1], &[2, 0]]);
        assert_eq!(a.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(a.to_string(), "0 2 | 1 3");
    }

    #[test]
    fn rejects_bad_block_lists() {
        assert_eq!(
            Partition::from_blocks(3, &[vec![0, 1]]),
            Err(PartitionError::Uncovered(2))
        );
        assert_eq!(
            Partition::from_blocks(2, &[vec![0, 1], vec![1]]),
            Err(PartitionError::Repeated(1))
        );
        assert_eq!(
            Partition::from_blocks(2, &[vec![0, 5]]),
            Err(PartitionError::OutOfRange(5))
        );
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..6).map(|n| all_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52]);
    }

    #[test]
    fn meet_and_refinement() {
        let a = p(4, &[&[0, 1], &[2, 3]]);
        let b = p(4, &[&[0, 2], &[1, 3]]);
        assert!(a.meet(&b).is_singletons());
        assert!(Partition::singletons(4).refines(&a));
        assert!(a.refines(&Partition::whole(4)));
        assert!(!a.refines(&b));
    }
}
