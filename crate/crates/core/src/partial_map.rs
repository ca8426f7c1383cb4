//! Partial bijections of `0..n` and the inverse monoids they generate.
//!
//! Composition is left to right: `x(fg) = (xf)g`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::semigroup::FiniteSemigroup;

pub const DEFAULT_CLOSURE_LIMIT: usize = 1_000_000;

const NONE: u16 = u16::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartialMapError {
    #[error("maps act on carriers of size {0} and {1}")]
    AmbientMismatch(usize, usize),
    #[error("point {0} is outside the carrier")]
    OutOfRange(usize),
    #[error("point {0} has two images")]
    DuplicateSource(usize),
    #[error("point {0} has two preimages")]
    NotInjective(usize),
    #[error("carrier of size {0} is too large for a partial map")]
    TooLarge(usize),
    #[error("closure exceeded {0} elements")]
    LimitExceeded(usize),
    #[error("product of elements {0} and {1} is not in the set")]
    NotClosed(usize, usize),
}

/// An injective partial map on `0..n`, stored as an image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialMap {
    images: Box<[u16]>,
}

impl PartialMap {
    pub fn empty(n: usize) -> Self {
        assert!(n < NONE as usize, "carrier too large");
        PartialMap {
            images: vec![NONE; n].into_boxed_slice(),
        }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n < NONE as usize, "carrier too large");
        PartialMap {
            images: (0..n as u16).collect(),
        }
    }

    /// The identity restricted to `set`.
    pub fn restricted_identity(n: usize, set: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::empty(n);
        for x in set {
            m.images[x] = x as u16;
        }
        m
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, PartialMapError> {
        if n >= NONE as usize {
            return Err(PartialMapError::TooLarge(n));
        }
        let mut images = vec![NONE; n];
        let mut hit = vec![false; n];
        for &(x, y) in pairs {
            if x >= n {
                return Err(PartialMapError::OutOfRange(x));
            }
            if y >= n {
                return Err(PartialMapError::OutOfRange(y));
            }
            if images[x] != NONE {
                return Err(PartialMapError::DuplicateSource(x));
            }
            if hit[y] {
                return Err(PartialMapError::NotInjective(y));
            }
            images[x] = y as u16;
            hit[y] = true;
        }
        Ok(PartialMap {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds from an image table; the caller guarantees injectivity.
    pub(crate) fn from_images(images: impl IntoIterator<Item = Option<usize>>) -> Self {
        let images: Box<[u16]> = images
            .into_iter()
            .map(|y| y.map_or(NONE, |y| y as u16))
            .collect();
        debug_assert!(images.len() < NONE as usize);
        let m = PartialMap { images };
        debug_assert!(m.is_injective());
        m
    }

    fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.images.len()];
        self.images.iter().filter(|&&y| y != NONE).all(|&y| {
            let fresh = !hit[y as usize];
            hit[y as usize] = true;
            fresh
        })
    }

    /// Size of the ambient carrier.
    pub fn ambient(&self) -> usize {
        self.images.len()
    }

    /// Number of points in the domain.
    pub fn rank(&self) -> usize {
        self.images.iter().filter(|&&y| y != NONE).count()
    }

    pub fn is_empty_map(&self) -> bool {
        self.images.iter().all(|&y| y == NONE)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| y as usize == x)
    }

    #[inline]
    pub fn get(&self, x: usize) -> Option<usize> {
        match self.images[x] {
            NONE => None,
            y => Some(y as usize),
        }
    }

    /// Pairs `(x, xf)` with `x` ascending.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &y)| y != NONE)
            .map(|(x, &y)| (x, y as usize))
    }

    pub fn domain(&self) -> Vec<usize> {
        self.pairs().map(|(x, _)| x).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.pairs().map(|(_, y)| y).collect();
        im.sort_unstable();
        im
    }

    pub fn compose(&self, g: &PartialMap) -> Result<PartialMap, PartialMapError> {
        if self.ambient() != g.ambient() {
            return Err(PartialMapError::AmbientMismatch(self.ambient(), g.ambient()));
        }
        Ok(self.then(g))
    }

    /// `self` followed by `g`. Panics on mismatched carriers.
    pub fn then(&self, g: &PartialMap) -> PartialMap {
        assert_eq!(self.ambient(), g.ambient(), "composing maps on different carriers");
        PartialMap {
            images: self
                .images
                .iter()
                .map(|&y| if y == NONE { NONE } else { g.images[y as usize] })
                .collect(),
        }
    }

    pub fn invert(&self) -> PartialMap {
        let mut images = vec![NONE; self.ambient()];
        for (x, y) in self.pairs() {
            images[y] = x as u16;
        }
        PartialMap {
            images: images.into_boxed_slice(),
        }
    }

    /// `true` if every pair of `self` is a pair of `g`.
    pub fn subset_of(&self, g: &PartialMap) -> bool {
        self.ambient() == g.ambient()
            && self
                .images
                .iter()
                .zip(g.images.iter())
                .all(|(&a, &b)| a == NONE || a == b)
    }

    pub fn render_with(&self, name: impl Fn(usize) -> String) -> String {
        let body: Vec<String> = self
            .pairs()
            .map(|(x, y)| format!("{}->{}", name(x), name(y)))
            .collect();
        format!("{{{}}}", body.join(", "))
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|x| x.to_string()))
    }
}

impl fmt::Debug for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Breadth-first closure together with the spanning tree that reached each
/// element.
#[derive(Clone, Debug)]
pub struct ClosureTree {
    /// The generators followed by the inverses not already among them.
    pub generators: Vec<PartialMap>,
    /// Elements in discovery order; the first `generators.len()` are the
    /// generators themselves (deduplicated).
    pub elements: Vec<PartialMap>,
    /// For each element: `None` if it is a generator, else
    /// `(parent, generator)` with `element = parent · generator`.
    pub parent: Vec<Option<(usize, usize)>>,
    pub index: HashMap<PartialMap, usize>,
}

impl ClosureTree {
    pub fn build(gens: &[PartialMap], limit: Option<usize>) -> Result<Self, PartialMapError> {
        let limit = limit.unwrap_or(DEFAULT_CLOSURE_LIMIT);
        if let Some(first) = gens.first() {
            if let Some(bad) = gens.iter().find(|g| g.ambient() != first.ambient()) {
                return Err(PartialMapError::AmbientMismatch(first.ambient(), bad.ambient()));
            }
        }
        let mut generators: Vec<PartialMap> = Vec::new();
        let mut index: HashMap<PartialMap, usize> = HashMap::new();
        let mut elements = Vec::new();
        let mut parent = Vec::new();
        let inverses: Vec<PartialMap> = gens.iter().map(|g| g.invert()).collect();
        for g in gens.iter().chain(inverses.iter()) {
            if !index.contains_key(g) {
                index.insert(g.clone(), elements.len());
                elements.push(g.clone());
                parent.push(None);
                generators.push(g.clone());
            }
        }
        if elements.len() > limit {
            return Err(PartialMapError::LimitExceeded(limit));
        }
        let mut queue: VecDeque<usize> = (0..elements.len()).collect();
        while let Some(x) = queue.pop_front() {
            for (k, gen) in generators.iter().enumerate() {
                let z = elements[x].then(gen);
                if index.contains_key(&z) {
                    continue;
                }
                if elements.len() == limit {
                    return Err(PartialMapError::LimitExceeded(limit));
                }
                index.insert(z.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(z);
                parent.push(Some((x, k)));
            }
        }
        Ok(ClosureTree {
            generators,
            elements,
            parent,
            index,
        })
    }

    /// Indices from the root generator down to `x`, as generator indices.
    pub fn word(&self, mut x: usize) -> Vec<usize> {
        let mut word = Vec::new();
        loop {
            match self.parent[x] {
                Some((p, k)) => {
                    word.push(k);
                    x = p;
                }
                None => {
                    let g = self.generators.iter().position(|g| *g == self.elements[x]);
                    word.push(g.expect("roots are generators"));
                    break;
                }
            }
        }
        word.reverse();
        word
    }
}

/// The inverse semigroup generated by `gens`, sorted.
pub fn closure(gens: &[PartialMap], limit: Option<usize>) -> Result<Vec<PartialMap>, PartialMapError> {
    let mut out = ClosureTree::build(gens, limit)?.elements;
    out.sort_unstable();
    Ok(out)
}

/// Multiplication table of a composition-closed set, indexed by position.
pub fn abstract_cayley(set: &[PartialMap]) -> Result<FiniteSemigroup, PartialMapError> {
    let index: HashMap<&PartialMap, usize> = set.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = set.len();
    let mut table = Vec::with_capacity(n * n);
    for (i, f) in set.iter().enumerate() {
        for (j, g) in set.iter().enumerate() {
            let fg = f.compose(g)?;
            match index.get(&fg) {
                Some(&k) => table.push(k),
                None => return Err(PartialMapError::NotClosed(i, j)),
            }
        }
    }
    if n == 0 {
        return Err(PartialMapError::NotClosed(0, 0));
    }
    Ok(FiniteSemigroup::from_trusted(n, table))
}
