//! Pairs `(α, β)` of a partial bijection of `X` and a bijection between two
//! partitions of `X`, with the product
//! `(α₁, β₁)(α₂, β₂) = (α₁α₂, β̄₁β̄₂)` taken over the join of `cod β₁` and
//! `dom β₂`.
//!
//! Such a pair acts on transformations `t` with `im t ⊆ dom α` and
//! `dom β ⊆ ker t` by `x ↦ iα`, where `i` is the single value of `t` on the
//! block `[x]_{cod β} β⁻¹`. Normalisation is left to the callers, since
//! transformation monoids and G-sets normalise differently.

use std::fmt;

use thiserror::Error;

use crate::partial_map::PartialMap;
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WError {
    #[error("partitions or maps live on different sets")]
    SizeMismatch,
    #[error("block map is not a bijection")]
    NotBijective,
    #[error("point map does not respect the blocks")]
    NotWellDefined,
    #[error("the coarser partition is not refined by the domain")]
    NotARefinement,
    #[error("alpha and beta disagree at point {0}")]
    Incompatible(usize),
}

/// A bijection from the blocks of `dom` to the blocks of `cod`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockBijection {
    dom: Partition,
    cod: Partition,
    map: Vec<usize>,
}

impl BlockBijection {
    pub fn new(dom: Partition, cod: Partition, map: Vec<usize>) -> Result<Self, WError> {
        if dom.len() != cod.len() || map.len() != dom.num_blocks() {
            return Err(WError::SizeMismatch);
        }
        if dom.num_blocks() != cod.num_blocks() {
            return Err(WError::NotBijective);
        }
        let mut hit = vec![false; cod.num_blocks()];
        for &b in &map {
            if b >= hit.len() || hit[b] {
                return Err(WError::NotBijective);
            }
            hit[b] = true;
        }
        Ok(BlockBijection { dom, cod, map })
    }

    pub fn identity(p: &Partition) -> Self {
        BlockBijection {
            dom: p.clone(),
            cod: p.clone(),
            map: (0..p.num_blocks()).collect(),
        }
    }

    /// The unique map `{X} → {X}`.
    pub fn trivial(n: usize) -> Self {
        Self::identity(&Partition::whole(n))
    }

    /// Block map `[x]_dom ↦ [xf]_cod`.
    pub fn from_point_map(
        dom: &Partition,
        cod: &Partition,
        f: impl Fn(usize) -> usize,
    ) -> Result<Self, WError> {
        if dom.len() != cod.len() {
            return Err(WError::SizeMismatch);
        }
        let mut map = Vec::with_capacity(dom.num_blocks());
        for block in dom.blocks() {
            let target = cod.block_of(f(block[0]));
            if block.iter().any(|&x| cod.block_of(f(x)) != target) {
                return Err(WError::NotWellDefined);
            }
            map.push(target);
        }
        Self::new(dom.clone(), cod.clone(), map)
    }

    pub fn dom(&self) -> &Partition {
        &self.dom
    }

    pub fn cod(&self) -> &Partition {
        &self.cod
    }

    /// Image block index of domain block `b`.
    pub fn image(&self, b: usize) -> usize {
        self.map[b]
    }

    /// Image block of the domain block containing `x`.
    pub fn image_block_of(&self, x: usize) -> &[usize] {
        self.cod.block(self.map[self.dom.block_of(x)])
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.map.iter().enumerate().all(|(b, &c)| b == c)
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![0; self.map.len()];
        for (b, &c) in self.map.iter().enumerate() {
            map[c] = b;
        }
        BlockBijection {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            map,
        }
    }

    /// The induced bijection on a partition coarser than `dom`: a union of
    /// domain blocks goes to the union of their images.
    pub fn bar_lift(&self, coarser: &Partition) -> Result<Self, WError> {
        if !self.dom.refines(coarser) {
            return Err(WError::NotARefinement);
        }
        let n = self.dom.len();
        // label each point of the codomain by the coarse block it comes from
        let mut src_block = vec![0; self.cod.num_blocks()];
        for (b, &c) in self.map.iter().enumerate() {
            src_block[c] = coarser.block_of(self.dom.block(b)[0]);
        }
        let keys: Vec<usize> = (0..n).map(|y| src_block[self.cod.block_of(y)]).collect();
        let cod = Partition::from_keys(&keys);
        let map = coarser
            .blocks()
            .iter()
            .map(|block| cod.block_of(self.image_block_of(block[0])[0]))
            .collect();
        Ok(BlockBijection {
            dom: coarser.clone(),
            cod,
            map,
        })
    }

    /// `self` followed by `other`; requires `cod self = dom other`.
    pub fn then(&self, other: &BlockBijection) -> Result<Self, WError> {
        if self.cod != other.dom {
            return Err(WError::NotARefinement);
        }
        Ok(BlockBijection {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            map: self.map.iter().map(|&c| other.map[c]).collect(),
        })
    }

    pub fn render_with(&self, name: impl Fn(usize) -> String + Copy) -> String {
        let images: Vec<String> = self
            .map
            .iter()
            .map(|&c| {
                self.cod
                    .block(c)
                    .iter()
                    .map(|&x| name(x))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        format!("[{}]->[{}]", self.dom.render_with(name), images.join(" | "))
    }
}

impl fmt::Display for BlockBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|x| x.to_string()))
    }
}

/// A compatible pair `(α, β)`: `[i]_{dom β} β = [iα]_{cod β}` for every
/// `i ∈ dom α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WElement {
    pub alpha: PartialMap,
    pub beta: BlockBijection,
}

impl WElement {
    pub fn new(alpha: PartialMap, beta: BlockBijection) -> Result<Self, WError> {
        if alpha.ambient() != beta.dom.len() {
            return Err(WError::SizeMismatch);
        }
        for (i, j) in alpha.pairs() {
            if beta.map[beta.dom.block_of(i)] != beta.cod.block_of(j) {
                return Err(WError::Incompatible(i));
            }
        }
        Ok(WElement { alpha, beta })
    }

    pub fn identity(n: usize) -> Self {
        WElement {
            alpha: PartialMap::identity(n),
            beta: BlockBijection::identity(&Partition::singletons(n)),
        }
    }

    /// `(∅, id_{{X}})`, the element acting as the empty map.
    pub fn empty(n: usize) -> Self {
        WElement {
            alpha: PartialMap::empty(n),
            beta: BlockBijection::trivial(n),
        }
    }

    pub fn x_size(&self) -> usize {
        self.alpha.ambient()
    }

    pub fn inverse(&self) -> Self {
        WElement {
            alpha: self.alpha.invert(),
            beta: self.beta.inverse(),
        }
    }

    /// The product before any normalisation.
    pub fn compose_raw(&self, other: &WElement) -> WElement {
        let join = self.beta.cod.join(&other.beta.dom);
        let b1 = self
            .beta
            .inverse()
            .bar_lift(&join)
            .expect("cod β₁ refines the join")
            .inverse();
        let b2 = other.beta.bar_lift(&join).expect("dom β₂ refines the join");
        WElement {
            alpha: self.alpha.then(&other.alpha),
            beta: b1.then(&b2).expect("both sides meet at the join"),
        }
    }

    /// `im t ⊆ dom α` and `t` is constant on every block of `dom β`.
    pub fn in_domain(&self, t: &[usize]) -> bool {
        t.iter().all(|&y| self.alpha.get(y).is_some())
            && self
                .beta
                .dom
                .blocks()
                .iter()
                .all(|b| b.iter().all(|&x| t[x] == t[b[0]]))
    }

    /// `x ↦ iα` with `i` the value of `t` on `[x]_{cod β} β⁻¹`.
    pub fn apply(&self, t: &[usize]) -> Option<Vec<usize>> {
        if !self.in_domain(t) {
            return None;
        }
        let inv = self.beta.inverse();
        Some(
            (0..t.len())
                .map(|x| {
                    let source = inv.image_block_of(x)[0];
                    self.alpha.get(t[source]).expect("image inside dom α")
                })
                .collect(),
        )
    }

    pub fn render_with(&self, name: impl Fn(usize) -> String + Copy) -> String {
        format!(
            "alpha: {}; beta: {}",
            self.alpha.render_with(name),
            self.beta.render_with(name)
        )
    }
}

impl fmt::Display for WElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|x| x.to_string()))
    }
}
