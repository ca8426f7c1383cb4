//! Example semigroups and families: named tables, left-zero semigroups,
//! cyclic and symmetric groups, symmetric inverse monoids, full
//! transformation monoids and Rees matrix semigroups.

use thiserror::Error;

use crate::partial_map::PartialMap;
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("size must be positive")]
    ZeroSize,
    #[error("{what} of size {size} is above the supported maximum {max}")]
    TooLarge {
        what: &'static str,
        size: usize,
        max: usize,
    },
    #[error("the Rees base is not a group")]
    NotAGroup,
    #[error("sandwich matrix must have {rows} rows of {cols} entries")]
    SandwichShape { rows: usize, cols: usize },
    #[error("sandwich entry at row {row}, column {col} is not a group element")]
    SandwichEntry { row: usize, col: usize },
}

fn labelled(rows: &[[usize; 8]], labels: &[&str]) -> FiniteSemigroup {
    FiniteSemigroup::new(rows.iter().map(|r| r.to_vec()).collect())
        .and_then(|s| s.with_labels(labels.iter().map(|l| l.to_string()).collect()))
        .expect("built-in table is a semigroup")
}

/// The 8-element Clifford semigroup, a semilattice of the groups
/// `{e, r1, r2, s1, s2, s3}` (a copy of S_3) and `{f, c}`.
pub fn clifford8() -> FiniteSemigroup {
    const E: usize = 0;
    const R1: usize = 1;
    const R2: usize = 2;
    const S1: usize = 3;
    const S2: usize = 4;
    const S3: usize = 5;
    const F: usize = 6;
    const C: usize = 7;
    labelled(
        &[
            [E, R1, R2, S1, S2, S3, E, S1],
            [R1, R2, E, S3, S1, S2, R1, S3],
            [R2, E, R1, S2, S3, S1, R2, S2],
            [S1, S2, S3, E, R1, R2, S1, E],
            [S2, S3, S1, R2, E, R1, S2, R2],
            [S3, S1, S2, R1, R2, E, S3, R1],
            [E, R1, R2, S1, S2, S3, F, C],
            [S1, S2, S3, E, R1, R2, C, F],
        ],
        &["e", "r1", "r2", "s1", "s2", "s3", "f", "c"],
    )
}

/// A 4-element semigroup whose elements are labelled `1..4` (indices
/// `0..3`). Conjugator reduction is a strict enlargement here.
pub fn strict4() -> FiniteSemigroup {
    FiniteSemigroup::new(vec![
        vec![0, 0, 3, 3],
        vec![1, 1, 2, 2],
        vec![2, 2, 1, 1],
        vec![3, 3, 0, 0],
    ])
    .and_then(|s| s.with_labels((1..=4).map(|i| i.to_string()).collect()))
    .expect("built-in table is a semigroup")
}

/// `xy = x` on `k` elements.
pub fn left_zero(k: usize) -> Result<FiniteSemigroup, ConstructError> {
    if k == 0 {
        return Err(ConstructError::ZeroSize);
    }
    let table = (0..k).flat_map(|a| std::iter::repeat_n(a, k)).collect();
    Ok(FiniteSemigroup::from_trusted(k, table))
}

/// `Z_k` under addition.
pub fn cyclic_group(k: usize) -> Result<FiniteSemigroup, ConstructError> {
    if k == 0 {
        return Err(ConstructError::ZeroSize);
    }
    let table = (0..k).flat_map(|a| (0..k).map(move |b| (a + b) % k)).collect();
    Ok(FiniteSemigroup::from_trusted(k, table))
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// `S_k` with permutations listed lexicographically by image tuple and
/// composed left to right.
pub fn symmetric_group(k: usize) -> Result<FiniteSemigroup, ConstructError> {
    if k == 0 {
        return Err(ConstructError::ZeroSize);
    }
    if k > 5 {
        return Err(ConstructError::TooLarge {
            what: "symmetric group degree",
            size: k,
            max: 5,
        });
    }
    let perms = permutations(k);
    let n = perms.len();
    let mut table = Vec::with_capacity(n * n);
    for p in &perms {
        for q in &perms {
            let pq: Vec<usize> = p.iter().map(|&x| q[x]).collect();
            table.push(perms.binary_search(&pq).expect("closed under composition"));
        }
    }
    Ok(FiniteSemigroup::from_trusted(n, table))
}

/// The symmetric inverse monoid on `k` points, with its elements as partial
/// maps in sorted order.
pub fn symmetric_inverse_monoid(k: usize) -> Result<(FiniteSemigroup, Vec<PartialMap>), ConstructError> {
    if k > 4 {
        return Err(ConstructError::TooLarge {
            what: "symmetric inverse monoid degree",
            size: k,
            max: 4,
        });
    }
    fn rec(k: usize, images: &mut Vec<Option<usize>>, used: &mut [bool], out: &mut Vec<PartialMap>) {
        if images.len() == k {
            out.push(PartialMap::from_images(images.iter().copied()));
            return;
        }
        images.push(None);
        rec(k, images, used, out);
        images.pop();
        for y in 0..k {
            if !used[y] {
                used[y] = true;
                images.push(Some(y));
                rec(k, images, used, out);
                images.pop();
                used[y] = false;
            }
        }
    }
    let mut maps = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut maps);
    maps.sort_unstable();
    let s = crate::partial_map::abstract_cayley(&maps).expect("all partial bijections are closed");
    Ok((s, maps))
}

/// Indexes the maps `X → X` for `X = 0..x_size` by reading the image
/// table as a little-endian base-`x_size` number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransformationCodec {
    pub x_size: usize,
}

impl TransformationCodec {
    pub const MAX_X: usize = 4;

    pub fn len(&self) -> usize {
        self.x_size.pow(self.x_size as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn encode(&self, f: &[usize]) -> usize {
        debug_assert_eq!(f.len(), self.x_size);
        f.iter().rev().fold(0, |acc, &y| acc * self.x_size + y)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut f = Vec::with_capacity(self.x_size);
        for _ in 0..self.x_size {
            f.push(index % self.x_size);
            index /= self.x_size;
        }
        f
    }

    pub fn identity(&self) -> usize {
        self.encode(&(0..self.x_size).collect::<Vec<_>>())
    }

    pub fn constant(&self, i: usize) -> usize {
        self.encode(&vec![i; self.x_size])
    }
}

/// `f` then `g`: `x ↦ g(f(x))`.
pub fn compose_transformations(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&y| g[y]).collect()
}

/// `T(X)` for `X = 0..x_size`, products composed left to right.
pub fn full_transformation_monoid(
    x_size: usize,
) -> Result<(FiniteSemigroup, TransformationCodec), ConstructError> {
    if x_size == 0 {
        return Err(ConstructError::ZeroSize);
    }
    if x_size > TransformationCodec::MAX_X {
        return Err(ConstructError::TooLarge {
            what: "transformation monoid degree",
            size: x_size,
            max: TransformationCodec::MAX_X,
        });
    }
    let codec = TransformationCodec { x_size };
    let maps: Vec<Vec<usize>> = (0..codec.len()).map(|i| codec.decode(i)).collect();
    let mut table = Vec::with_capacity(maps.len() * maps.len());
    for f in &maps {
        for g in &maps {
            table.push(codec.encode(&compose_transformations(f, g)));
        }
    }
    Ok((FiniteSemigroup::from_trusted(maps.len(), table), codec))
}

/// Parameters of `M(Γ; I, Λ; P)`.
///
/// Elements are triples `(i, γ, λ)` coded as `(i·|Γ| + γ)·|Λ| + λ`, and the
/// sandwich matrix is stored by rows indexed by `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesSpec {
    pub group: FiniteSemigroup,
    pub i_size: usize,
    pub lambda_size: usize,
    pub sandwich: Vec<Vec<usize>>,
}

/// `(i, γ, λ)`.
pub type ReesTriple = (usize, usize, usize);

impl ReesSpec {
    pub fn new(
        group: FiniteSemigroup,
        i_size: usize,
        lambda_size: usize,
        sandwich: Vec<Vec<usize>>,
    ) -> Result<Self, ConstructError> {
        if i_size == 0 || lambda_size == 0 {
            return Err(ConstructError::ZeroSize);
        }
        if !group.is_group() {
            return Err(ConstructError::NotAGroup);
        }
        if sandwich.len() != lambda_size || sandwich.iter().any(|r| r.len() != i_size) {
            return Err(ConstructError::SandwichShape {
                rows: lambda_size,
                cols: i_size,
            });
        }
        for (row, r) in sandwich.iter().enumerate() {
            if let Some(col) = r.iter().position(|&p| p >= group.len()) {
                return Err(ConstructError::SandwichEntry { row, col });
            }
        }
        Ok(ReesSpec {
            group,
            i_size,
            lambda_size,
            sandwich,
        })
    }

    pub fn len(&self) -> usize {
        self.i_size * self.group.len() * self.lambda_size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `p_{λ,i}`.
    pub fn p(&self, lambda: usize, i: usize) -> usize {
        self.sandwich[lambda][i]
    }

    pub fn encode(&self, (i, g, l): ReesTriple) -> usize {
        (i * self.group.len() + g) * self.lambda_size + l
    }

    pub fn decode(&self, x: usize) -> ReesTriple {
        let l = x % self.lambda_size;
        let rest = x / self.lambda_size;
        (rest / self.group.len(), rest % self.group.len(), l)
    }

    fn inv(&self, g: usize) -> usize {
        self.group.group_inverse(g).expect("validated as a group")
    }

    fn gmul(&self, a: usize, b: usize) -> usize {
        self.group.mul(a, b)
    }

    /// `(G,g,γ)(H,h,η) = (G, g p_{γ,H} h, η)`.
    pub fn mul_triples(&self, (big_g, g, gamma): ReesTriple, (big_h, h, eta): ReesTriple) -> ReesTriple {
        (big_g, self.gmul(self.gmul(g, self.p(gamma, big_h)), h), eta)
    }

    /// The `h` making `D_{(G,g,γ),(H,h,η)}` nonempty:
    /// `(p_{η,G} g p_{γ,H})⁻¹`.
    pub fn matching_h(&self, (big_g, g, gamma): ReesTriple, big_h: usize, eta: usize) -> usize {
        self.inv(self.gmul(self.gmul(self.p(eta, big_g), g), self.p(gamma, big_h)))
    }
}

pub fn rees_matrix(spec: &ReesSpec) -> FiniteSemigroup {
    let n = spec.len();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let a = spec.decode(x);
        for y in 0..n {
            table.push(spec.encode(spec.mul_triples(a, spec.decode(y))));
        }
    }
    FiniteSemigroup::from_trusted(n, table)
}

/// Evaluates `h = (p_{η,G} g p_{γ,H})⁻¹` for `a = (G,g,γ)`, `b = (H,h,η)`.
pub fn rees_domain_nonempty(spec: &ReesSpec, a: ReesTriple, b: ReesTriple) -> bool {
    let (big_h, h, eta) = b;
    h == spec.matching_h(a, big_h, eta)
}

/// One of the maps `{G}×Γ×{η} → {H}×Γ×{γ}` generating the Rees inner
/// automorphisms, together with the conjugator pair `(x, y)` that realises it
/// as `φ_{x,y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesGenerator {
    pub g: usize,
    pub big_g: usize,
    pub big_h: usize,
    pub gamma: usize,
    pub eta: usize,
    pub x: usize,
    pub y: usize,
    pub map: PartialMap,
}

/// `(G,a,η) ↦ (H, (g p_{γ,H})⁻¹ a (p_{η,G} g), γ)` for every
/// `g ∈ Γ, G, H ∈ I, γ, η ∈ Λ`.
pub fn rees_generators(spec: &ReesSpec) -> Vec<ReesGenerator> {
    let mut out = Vec::new();
    for g in 0..spec.group.len() {
        for big_g in 0..spec.i_size {
            for big_h in 0..spec.i_size {
                for gamma in 0..spec.lambda_size {
                    for eta in 0..spec.lambda_size {
                        let left = spec.inv(spec.gmul(g, spec.p(gamma, big_h)));
                        let right = spec.gmul(spec.p(eta, big_g), g);
                        let mut images = vec![None; spec.len()];
                        for a in 0..spec.group.len() {
                            let b = spec.gmul(spec.gmul(left, a), right);
                            images[spec.encode((big_g, a, eta))] = Some(spec.encode((big_h, b, gamma)));
                        }
                        let h = spec.matching_h((big_g, g, gamma), big_h, eta);
                        out.push(ReesGenerator {
                            g,
                            big_g,
                            big_h,
                            gamma,
                            eta,
                            x: spec.encode((big_g, g, gamma)),
                            y: spec.encode((big_h, h, eta)),
                            map: PartialMap::from_images(images),
                        });
                    }
                }
            }
        }
    }
    out
}
