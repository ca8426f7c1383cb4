//! Structure of `Inn(T(X))` for finite `X`.
//!
//! Transformations are image tables `t[x]`; products are left to right, so
//! for `g, h ∈ T(X)` the pair `(g, h)` has `p = gh : x ↦ h(g(x))`. The domain
//! of `φ_{g,h}` is described by the fixed points `I` of `p` and the weak
//! components `P` of its function graph.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::constructors::{compose_transformations, TransformationCodec};
use crate::partial_map::PartialMap;
use crate::partition::{all_partitions, Partition, UnionFind};
use crate::wcalc::{BlockBijection, WElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TxError {
    #[error("the domain has at most one transformation")]
    SmallDomain,
    #[error("transformation is outside the domain")]
    NotInDomain,
    #[error("map is not a partial inner automorphism of the expected shape")]
    Malformed,
}

/// `(P, I)`: the domain `{t : im t ⊆ I, P ⊆ ker t}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TxDescriptor {
    pub p: Partition,
    pub i: Vec<usize>,
}

impl TxDescriptor {
    pub fn contains(&self, t: &[usize]) -> bool {
        t.iter().all(|y| self.i.binary_search(y).is_ok())
            && self.p.blocks().iter().all(|b| b.iter().all(|&x| t[x] == t[b[0]]))
    }

    /// Every block meets `i` at most once.
    pub fn is_partial_section(&self) -> bool {
        let mut seen = vec![false; self.p.num_blocks()];
        self.i.iter().all(|&x| {
            let b = self.p.block_of(x);
            !std::mem::replace(&mut seen[b], true)
        })
    }

    /// Every singleton block lies inside `i`.
    pub fn singletons_covered(&self) -> bool {
        self.p
            .blocks()
            .iter()
            .filter(|b| b.len() == 1)
            .all(|b| self.i.binary_search(&b[0]).is_ok())
    }
}

/// Weak components of `x → f(x)`.
pub fn function_graph_components(f: &[usize]) -> Partition {
    let mut uf = UnionFind::new(f.len());
    for (x, &y) in f.iter().enumerate() {
        uf.union(x, y);
    }
    uf.into_partition()
}

pub fn fixed_points(f: &[usize]) -> Vec<usize> {
    (0..f.len()).filter(|&x| f[x] == x).collect()
}

pub fn descriptor_of(p: &[usize]) -> TxDescriptor {
    TxDescriptor {
        p: function_graph_components(p),
        i: fixed_points(p),
    }
}

/// Descriptors of `D_{g,h}` (from `gh`) and `D_{h,g}` (from `hg`).
pub fn descriptor_from_pair(g: &[usize], h: &[usize]) -> (TxDescriptor, TxDescriptor) {
    (
        descriptor_of(&compose_transformations(g, h)),
        descriptor_of(&compose_transformations(h, g)),
    )
}

/// The data classifying a `φ_{g,h}` whose domain has at least two elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTuple {
    pub p: Partition,
    pub p_prime: Partition,
    pub i: Vec<usize>,
    pub i_prime: Vec<usize>,
    /// `g` restricted to `I`.
    pub alpha: PartialMap,
    /// `[x]_P ↦ [xg]_{P′}`.
    pub beta: BlockBijection,
}

impl GeneratorTuple {
    pub fn to_welement(&self) -> WElement {
        WElement::new(self.alpha.clone(), self.beta.clone()).expect("β extends α")
    }
}

pub fn generator_tuple(g: &[usize], h: &[usize]) -> Result<GeneratorTuple, TxError> {
    let (d, d_prime) = descriptor_from_pair(g, h);
    if d.i.len() < 2 {
        return Err(TxError::SmallDomain);
    }
    let alpha = PartialMap::from_pairs(g.len(), &d.i.iter().map(|&i| (i, g[i])).collect::<Vec<_>>())
        .map_err(|_| TxError::Malformed)?;
    let beta =
        BlockBijection::from_point_map(&d.p, &d_prime.p, |x| g[x]).map_err(|_| TxError::Malformed)?;
    Ok(GeneratorTuple {
        p: d.p,
        p_prime: d_prime.p,
        i: d.i,
        i_prime: d_prime.i,
        alpha,
        beta,
    })
}

/// `θ`: when `|dom α| ≤ 1` the partition part is forgotten.
pub fn normalize(w: WElement) -> WElement {
    if w.alpha.rank() <= 1 {
        WElement {
            beta: BlockBijection::trivial(w.x_size()),
            alpha: w.alpha,
        }
    } else {
        w
    }
}

/// The normalised element of `W(X)` for `φ_{g,h}`; small domains give a
/// constant-to-constant map or the empty map.
pub fn generator_welement(g: &[usize], h: &[usize]) -> WElement {
    match generator_tuple(g, h) {
        Ok(t) => t.to_welement(),
        Err(_) => {
            let i = fixed_points(&compose_transformations(g, h));
            let alpha = PartialMap::from_pairs(g.len(), &i.iter().map(|&x| (x, g[x])).collect::<Vec<_>>())
                .expect("at most one point");
            normalize(WElement {
                alpha,
                beta: BlockBijection::trivial(g.len()),
            })
        }
    }
}

pub fn w_compose(a: &WElement, b: &WElement) -> WElement {
    normalize(a.compose_raw(b))
}

pub fn apply_w(w: &WElement, t: &[usize]) -> Result<Vec<usize>, TxError> {
    w.apply(t).ok_or(TxError::NotInDomain)
}

/// Membership of a normalised element in the image of `Inn(T(X))`.
pub fn finite_membership(w: &WElement, x_size: usize) -> bool {
    let dom_alpha = w.alpha.domain();
    let k = dom_alpha.len();
    if k <= 1 {
        return !(x_size == 1 && k == 0);
    }
    let dom_beta = w.beta.dom();
    let total = k == x_size && dom_beta.is_singletons();
    let witness = dom_beta
        .blocks()
        .iter()
        .any(|b| b.len() >= 2 && b.iter().any(|x| w.alpha.get(*x).is_none()));
    total || witness
}

/// `(P, I)` recovered from a domain with at least two transformations:
/// `I` is the union of images and `P` the meet of the kernels.
pub fn recover_descriptor(x_size: usize, domain: &[Vec<usize>]) -> Option<TxDescriptor> {
    if domain.len() < 2 {
        return None;
    }
    let i: BTreeSet<usize> = domain.iter().flatten().copied().collect();
    let p = domain
        .iter()
        .map(|t| Partition::from_keys(t))
        .fold(Partition::whole(x_size), |acc, k| acc.meet(&k));
    Some(TxDescriptor {
        p,
        i: i.into_iter().collect(),
    })
}

/// Reads off the normalised `(α, β)` of a partial map on `T(X)` (indexed by
/// `codec`) from its action on constants and two-valued maps.
pub fn embed(codec: &TransformationCodec, phi: &PartialMap) -> Result<WElement, TxError> {
    let n = codec.x_size;
    let dom: Vec<Vec<usize>> = phi.domain().into_iter().map(|t| codec.decode(t)).collect();
    let img: Vec<Vec<usize>> = phi.image().into_iter().map(|t| codec.decode(t)).collect();
    if dom.is_empty() {
        return Ok(WElement::empty(n));
    }
    let i: BTreeSet<usize> = dom.iter().flatten().copied().collect();
    let mut pairs = Vec::new();
    for &x in &i {
        let image = phi.get(codec.constant(x)).ok_or(TxError::Malformed)?;
        let image = codec.decode(image);
        if image.iter().any(|&y| y != image[0]) {
            return Err(TxError::Malformed);
        }
        pairs.push((x, image[0]));
    }
    let alpha = PartialMap::from_pairs(n, &pairs).map_err(|_| TxError::Malformed)?;
    if i.len() <= 1 {
        return Ok(normalize(WElement {
            alpha,
            beta: BlockBijection::trivial(n),
        }));
    }
    let p = recover_descriptor(n, &dom).expect("two constants").p;
    let p_prime = recover_descriptor(n, &img).ok_or(TxError::Malformed)?.p;
    let mut it = i.iter();
    let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
    let a_img = alpha.get(a).unwrap();
    let mut map = Vec::with_capacity(p.num_blocks());
    for block in p.blocks() {
        // t_B sends B to a and everything else to b
        let t: Vec<usize> = (0..n)
            .map(|x| if block.contains(&x) { a } else { b })
            .collect();
        let image = phi.get(codec.encode(&t)).ok_or(TxError::Malformed)?;
        let image = codec.decode(image);
        let hit: Vec<usize> = (0..n).filter(|&x| image[x] == a_img).collect();
        let target = p_prime.block_of(hit[0]);
        if p_prime.block(target) != hit.as_slice() {
            return Err(TxError::Malformed);
        }
        map.push(target);
    }
    let beta = BlockBijection::new(p, p_prime, map).map_err(|_| TxError::Malformed)?;
    WElement::new(alpha, beta).map_err(|_| TxError::Malformed)
}

/// Every normalised element of `W(X)` for `X = 0..n`.
pub fn enumerate_w(n: usize) -> Vec<WElement> {
    let partitions = all_partitions(n);
    let mut out = Vec::new();
    for alpha in all_partial_bijections(n) {
        if alpha.rank() <= 1 {
            out.push(WElement {
                alpha,
                beta: BlockBijection::trivial(n),
            });
            continue;
        }
        for dom in &partitions {
            for cod in partitions.iter().filter(|c| c.num_blocks() == dom.num_blocks()) {
                for map in permutations(dom.num_blocks()) {
                    let beta = BlockBijection::new(dom.clone(), cod.clone(), map).expect("a permutation");
                    if let Ok(w) = WElement::new(alpha.clone(), beta) {
                        out.push(w);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for len in 0..k {
        let mut next = Vec::new();
        for p in &out {
            for x in 0..k {
                if !p.contains(&x) {
                    let mut q: Vec<usize> = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
        }
        out = next;
        debug_assert!(out.iter().all(|p| p.len() == len + 1));
    }
    out
}

fn all_partial_bijections(n: usize) -> Vec<PartialMap> {
    let mut out = vec![Vec::<Option<usize>>::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            next.push({
                let mut q = p.clone();
                q.push(None);
                q
            });
            for y in 0..n {
                if !p.contains(&Some(y)) {
                    let mut q = p.clone();
                    q.push(Some(y));
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out.into_iter().map(PartialMap::from_images).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_examples() {
        let id = [0, 1, 2];
        let (d, d2) = descriptor_from_pair(&id, &id);
        assert_eq!(d.i, vec![0, 1, 2]);
        assert!(d.p.is_singletons());
        assert_eq!(d, d2);

        let (d, _) = descriptor_from_pair(&id, &[1, 0, 2]);
        assert_eq!(d.i, vec![2]);
        assert_eq!(d.p.to_string(), "0 1 | 2");

        let (d, _) = descriptor_from_pair(&id, &[0, 0, 0]);
        assert_eq!(d.i, vec![0]);
        assert_eq!(d.p, Partition::whole(3));
    }

    #[test]
    fn identity_tuple() {
        let id = [0, 1, 2];
        let t = generator_tuple(&id, &id).unwrap();
        assert!(t.alpha.is_identity());
        assert!(t.beta.is_identity());
        assert!(t.p.is_singletons());
        assert_eq!(t.to_welement(), WElement::identity(3));
    }

    #[test]
    fn small_domain_is_rejected() {
        assert_eq!(
            generator_tuple(&[0, 1, 2], &[0, 0, 0]),
            Err(TxError::SmallDomain)
        );
        let w = generator_welement(&[1, 1, 1], &[0, 0, 0]);
        // p = gh is constant 0, I = {0}, α(0) = g(0) = 1
        assert_eq!(w.alpha, PartialMap::from_pairs(3, &[(0, 1)]).unwrap());
        assert!(w.beta.is_identity());
    }

    #[test]
    fn membership_examples() {
        let singles = Partition::singletons(3);
        let total = WElement::new(
            PartialMap::identity(3),
            BlockBijection::identity(&singles),
        )
        .unwrap();
        assert!(finite_membership(&total, 3));

        let p = Partition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        let beta = BlockBijection::identity(&p);
        let two = WElement::new(PartialMap::restricted_identity(3, [0, 2]), beta.clone()).unwrap();
        assert!(finite_membership(&two, 3));
        let bad = WElement::new(PartialMap::restricted_identity(3, [0, 1, 2]), beta).unwrap();
        assert!(!finite_membership(&bad, 3));

        assert!(!finite_membership(&WElement::empty(1), 1));
        assert!(finite_membership(&WElement::empty(2), 2));
    }

    #[test]
    fn w_sizes_for_tiny_sets() {
        // n = 1: α ∈ {∅, id}
        assert_eq!(enumerate_w(1).len(), 2);
        // n = 2: five elements of rank ≤ 1; each rank-2 α pairs with the
        // forced β on singletons or with the map on {X}
        assert_eq!(enumerate_w(2).len(), 5 + 2 * 2);
    }
}
