//! Finite abelian G-sets, their endomorphism monoids, standard pairs and
//! the normal form for `Inn(End_G(X))`.
//!
//! The classical treatment of G-sets composes maps right to left, writing
//! `φ_{g,h}(t) = h∘t∘g`. Internally every product is left to right, where
//! the same map is `φ_{h,g}`. Functions here that take a conjugator pair use
//! the right-to-left reading and swap operands once before calling into the
//! left-to-right machinery.

use std::collections::HashMap;

use thiserror::Error;

use crate::constructors::{compose_transformations, TransformationCodec};
use crate::partial_map::PartialMap;
use crate::partition::{all_partitions, Partition, UnionFind};
use crate::semigroup::FiniteSemigroup;
use crate::tx::{descriptor_of, TxDescriptor};
use crate::wcalc::{BlockBijection, WElement, WError};

/// A subgroup of `G` as a bitmask over group indices.
pub type Subgroup = u64;

pub fn is_subgroup_of(a: Subgroup, b: Subgroup) -> bool {
    a & !b == 0
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GSetError {
    #[error("the acting semigroup is not a group")]
    NotAGroup,
    #[error("the acting group is not abelian")]
    NotAbelian,
    #[error("groups above order 64 are not supported")]
    GroupTooLarge,
    #[error("action must have {rows} rows of {cols} entries")]
    ActionShape { rows: usize, cols: usize },
    #[error("action entry at row {row}, column {col} is out of range")]
    ActionOutOfRange { row: usize, col: usize },
    #[error("the identity moves point {0}")]
    IdentityMoves(usize),
    #[error("({k}{l})·{x} differs from {k}·({l}·{x})")]
    NotAnAction { k: usize, l: usize, x: usize },
}

/// A finite abelian group acting on `0..x_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    group: FiniteSemigroup,
    x_size: usize,
    action: Vec<usize>,
}

impl GSet {
    pub fn new(group: FiniteSemigroup, x_size: usize, rows: Vec<Vec<usize>>) -> Result<Self, GSetError> {
        if !group.is_group() {
            return Err(GSetError::NotAGroup);
        }
        if !group.is_commutative() {
            return Err(GSetError::NotAbelian);
        }
        if group.len() > 64 {
            return Err(GSetError::GroupTooLarge);
        }
        if rows.len() != group.len() || rows.iter().any(|r| r.len() != x_size) {
            return Err(GSetError::ActionShape {
                rows: group.len(),
                cols: x_size,
            });
        }
        for (row, r) in rows.iter().enumerate() {
            if let Some(col) = r.iter().position(|&y| y >= x_size) {
                return Err(GSetError::ActionOutOfRange { row, col });
            }
        }
        let gs = GSet {
            x_size,
            action: rows.concat(),
            group,
        };
        let e = gs.identity();
        if let Some(x) = (0..x_size).find(|&x| gs.act(e, x) != x) {
            return Err(GSetError::IdentityMoves(x));
        }
        for k in 0..gs.order() {
            for l in 0..gs.order() {
                let kl = gs.group.mul(k, l);
                if let Some(x) = (0..x_size).find(|&x| gs.act(kl, x) != gs.act(k, gs.act(l, x))) {
                    return Err(GSetError::NotAnAction { k, l, x });
                }
            }
        }
        Ok(gs)
    }

    /// The trivial group acting on `x_size` points.
    pub fn trivial(x_size: usize) -> Self {
        GSet {
            group: FiniteSemigroup::from_trusted(1, vec![0]),
            x_size,
            action: (0..x_size).collect(),
        }
    }

    pub fn group(&self) -> &FiniteSemigroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.len()
    }

    pub fn x_size(&self) -> usize {
        self.x_size
    }

    pub fn identity(&self) -> usize {
        self.group.identity().expect("validated as a group")
    }

    /// `k·x`.
    #[inline]
    pub fn act(&self, k: usize, x: usize) -> usize {
        self.action[k * self.x_size + x]
    }

    pub fn action_rows(&self) -> Vec<Vec<usize>> {
        self.action.chunks(self.x_size.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn whole_group(&self) -> Subgroup {
        if self.order() == 64 {
            u64::MAX
        } else {
            (1u64 << self.order()) - 1
        }
    }

    pub fn elements_of(&self, h: Subgroup) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&k| h >> k & 1 == 1)
    }

    /// `G_x`.
    pub fn point_stabilizer(&self, x: usize) -> Subgroup {
        (0..self.order())
            .filter(|&k| self.act(k, x) == x)
            .fold(0, |m, k| m | 1 << k)
    }

    /// `G_B`, the setwise stabilizer.
    pub fn setwise_stabilizer(&self, set: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.x_size];
        for &x in set {
            inside[x] = true;
        }
        (0..self.order())
            .filter(|&k| set.iter().all(|&x| inside[self.act(k, x)]))
            .fold(0, |m, k| m | 1 << k)
    }

    /// `G^B`: the point stabilizer in `set` containing all others, if any.
    pub fn upper_stabilizer(&self, set: &[usize]) -> Option<Subgroup> {
        let stabs: Vec<Subgroup> = set.iter().map(|&x| self.point_stabilizer(x)).collect();
        stabs
            .iter()
            .copied()
            .find(|&top| stabs.iter().all(|&s| is_subgroup_of(s, top)))
    }

    /// `⟨l, H⟩`.
    pub fn generated(&self, l: usize, h: Subgroup) -> Subgroup {
        let mut set = h | 1 << self.identity();
        loop {
            let mut next = set;
            for a in self.elements_of(set) {
                next |= 1 << self.group.mul(a, l);
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut o: Vec<usize> = (0..self.order()).map(|k| self.act(k, x)).collect();
        o.sort_unstable();
        o.dedup();
        o
    }

    pub fn orbits(&self) -> Partition {
        let mut uf = UnionFind::new(self.x_size);
        for k in 0..self.order() {
            for x in 0..self.x_size {
                uf.union(x, self.act(k, x));
            }
        }
        uf.into_partition()
    }

    /// `k·B`, sorted.
    pub fn translate(&self, k: usize, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.act(k, x)).collect();
        out.sort_unstable();
        out
    }

    pub fn is_invariant(&self, p: &Partition) -> bool {
        (0..self.order()).all(|k| {
            p.blocks().iter().all(|b| {
                let target = p.block_of(self.act(k, b[0]));
                b.iter().all(|&x| p.block_of(self.act(k, x)) == target)
            })
        })
    }

    pub fn is_union_of_orbits(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.x_size];
        for &x in set {
            inside[x] = true;
        }
        set.iter().all(|&x| (0..self.order()).all(|k| inside[self.act(k, x)]))
    }

    /// Every block has a point whose stabilizer contains the others.
    pub fn is_non_null(&self, p: &Partition) -> bool {
        p.blocks().iter().all(|b| self.upper_stabilizer(b).is_some())
    }

    pub fn is_equivariant(&self, f: &[usize]) -> bool {
        (0..self.order()).all(|k| (0..self.x_size).all(|x| f[self.act(k, x)] == self.act(k, f[x])))
    }

    /// `{x : G_x = G}`.
    pub fn global_fixed_points(&self) -> Vec<usize> {
        (0..self.x_size)
            .filter(|&x| self.point_stabilizer(x) == self.whole_group())
            .collect()
    }
}

/// Stabilizer families for a G-set and optionally a partition and a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerData {
    /// `G_x` per point.
    pub point: Vec<Subgroup>,
    /// The orbits and `G_O` per orbit.
    pub orbits: Partition,
    pub orbit: Vec<Subgroup>,
    /// `G_B` per block of the partition.
    pub block: Vec<Subgroup>,
    /// `G^B` per block, for non-null blocks.
    pub upper: Vec<Option<Subgroup>>,
    /// `G′_B = ⋂ {G_i : i ∈ I, G_B ≤ G_i}`, when some `i` qualifies.
    pub prime: Vec<Option<Subgroup>>,
}

pub fn stabilizers(gs: &GSet, p: Option<&Partition>, i: Option<&[usize]>) -> StabilizerData {
    let point: Vec<Subgroup> = (0..gs.x_size()).map(|x| gs.point_stabilizer(x)).collect();
    let orbits = gs.orbits();
    let orbit = orbits.blocks().iter().map(|o| point[o[0]]).collect();
    let (block, upper, prime) = match p {
        None => (Vec::new(), Vec::new(), Vec::new()),
        Some(p) => {
            let block: Vec<Subgroup> = p.blocks().iter().map(|b| gs.setwise_stabilizer(b)).collect();
            let upper = p.blocks().iter().map(|b| gs.upper_stabilizer(b)).collect();
            let prime = block
                .iter()
                .map(|&gb| prime_stabilizer(gs, gb, i.unwrap_or(&[]), &point))
                .collect();
            (block, upper, prime)
        }
    };
    StabilizerData {
        point,
        orbits,
        orbit,
        block,
        upper,
        prime,
    }
}

fn prime_stabilizer(gs: &GSet, gb: Subgroup, i: &[usize], point: &[Subgroup]) -> Option<Subgroup> {
    let mut acc: Option<Subgroup> = None;
    for &x in i {
        if is_subgroup_of(gb, point[x]) {
            acc = Some(acc.unwrap_or(gs.whole_group()) & point[x]);
        }
    }
    acc
}

/// `End_G(X)` sorted by transformation index, with its multiplication
/// table (left to right).
#[derive(Clone, Debug)]
pub struct EndG {
    pub maps: Vec<Vec<usize>>,
    pub semigroup: FiniteSemigroup,
    index: HashMap<Vec<usize>, usize>,
}

impl EndG {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn index_of(&self, f: &[usize]) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// `f∘g`, right to left: apply `g` first.
    pub fn compose_rtl(&self, f: usize, g: usize) -> usize {
        self.semigroup.mul(g, f)
    }
}

/// All G-endomorphisms: pick an image for each orbit representative whose
/// stabilizer contains the representative's, then extend equivariantly.
pub fn end_g(gs: &GSet) -> EndG {
    let n = gs.x_size();
    let orbits = gs.orbits();
    let reps: Vec<usize> = orbits.blocks().iter().map(|b| b[0]).collect();
    let choices: Vec<Vec<usize>> = reps
        .iter()
        .map(|&r| {
            let s = gs.point_stabilizer(r);
            (0..n).filter(|&y| is_subgroup_of(s, gs.point_stabilizer(y))).collect()
        })
        .collect();
    let mut maps = Vec::new();
    let mut pick = vec![0usize; reps.len()];
    loop {
        let mut f = vec![usize::MAX; n];
        for (j, &r) in reps.iter().enumerate() {
            let y = choices[j][pick[j]];
            for k in 0..gs.order() {
                f[gs.act(k, r)] = gs.act(k, y);
            }
        }
        debug_assert!(gs.is_equivariant(&f));
        maps.push(f);
        // odometer over the choice lists
        let mut j = 0;
        while j < reps.len() {
            pick[j] += 1;
            if pick[j] < choices[j].len() {
                break;
            }
            pick[j] = 0;
            j += 1;
        }
        if j == reps.len() {
            break;
        }
    }
    let codec = TransformationCodec { x_size: n };
    maps.sort_by_key(|f| codec.encode(f));
    let index: HashMap<Vec<usize>, usize> = maps.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
    let m = maps.len();
    let mut table = Vec::with_capacity(m * m);
    for f in &maps {
        for g in &maps {
            table.push(index[&compose_transformations(f, g)]);
        }
    }
    EndG {
        semigroup: FiniteSemigroup::from_trusted(m, table),
        maps,
        index,
    }
}

/// Every block has some `i ∈ I` with `G_B ≤ G_i`.
pub fn is_accessible(gs: &GSet, p: &Partition, i: &[usize]) -> bool {
    let stabs: Vec<Subgroup> = i.iter().map(|&x| gs.point_stabilizer(x)).collect();
    p.blocks().iter().all(|b| {
        let gb = gs.setwise_stabilizer(b);
        stabs.iter().any(|&s| is_subgroup_of(gb, s))
    })
}

/// The unique `i ∈ I` with `G_i = G`.
pub fn sink(gs: &GSet, i: &[usize]) -> Option<usize> {
    let full: Vec<usize> = i
        .iter()
        .copied()
        .filter(|&x| gs.point_stabilizer(x) == gs.whole_group())
        .collect();
    (full.len() == 1).then(|| full[0])
}

/// A pair `(P, I)` with its classification flags.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardPair {
    pub p: Partition,
    pub i: Vec<usize>,
    pub is_standard: bool,
    pub is_valid: bool,
    pub is_accessible: bool,
    pub sink: Option<usize>,
}

impl StandardPair {
    pub fn is_degenerate(&self) -> bool {
        self.i.is_empty() && self.p.num_blocks() <= 1
    }

    pub fn descriptor(&self) -> TxDescriptor {
        TxDescriptor {
            p: self.p.clone(),
            i: self.i.clone(),
        }
    }
}

/// The four conditions on a domain pair, in order:
/// (1) each block holds at most one point of `I`;
/// (2) `x ∈ [i]_P ⇒ G_x ≤ G_i` for `i ∈ I`;
/// (3) if `G_x < G_i` for every other `x ∈ [i]_P` then `i ∈ I`;
/// (4) `G_B / G^B` is cyclic for every block.
pub fn pair_conditions(gs: &GSet, p: &Partition, i: &[usize]) -> [bool; 4] {
    let point: Vec<Subgroup> = (0..gs.x_size()).map(|x| gs.point_stabilizer(x)).collect();
    let in_i = |x: usize| i.binary_search(&x).is_ok();
    let c1 = p.blocks().iter().all(|b| b.iter().filter(|&&x| in_i(x)).count() <= 1);
    let c2 = i
        .iter()
        .all(|&j| p.class_of(j).iter().all(|&x| is_subgroup_of(point[x], point[j])));
    let c3 = (0..gs.x_size()).all(|j| {
        let dominates = p
            .class_of(j)
            .iter()
            .filter(|&&x| x != j)
            .all(|&x| is_subgroup_of(point[x], point[j]) && point[x] != point[j]);
        !dominates || in_i(j)
    });
    let c4 = p.blocks().iter().all(|b| quotient_is_cyclic(gs, b));
    [c1, c2, c3, c4]
}

/// `G_B / G^B` is cyclic: some `l ∈ G_B` has `⟨l, G^B⟩ = G_B`.
pub fn quotient_is_cyclic(gs: &GSet, block: &[usize]) -> bool {
    match gs.upper_stabilizer(block) {
        None => false,
        Some(upper) => {
            let gb = gs.setwise_stabilizer(block);
            gs.elements_of(gb).any(|l| gs.generated(l, upper) == gb)
        }
    }
}

/// The raw domain pair of `φ_{g,h}` read right to left (`p = g∘h`), checked
/// against the four conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauDescriptor {
    pub p: Partition,
    pub i: Vec<usize>,
    pub non_null: bool,
    pub invariant: bool,
    pub conditions: [bool; 4],
}

impl TauDescriptor {
    pub fn holds(&self) -> bool {
        self.non_null && self.invariant && self.conditions.iter().all(|&c| c)
    }
}

fn tau_of(gs: &GSet, p: &[usize]) -> TauDescriptor {
    let TxDescriptor { p, i } = descriptor_of(p);
    TauDescriptor {
        non_null: gs.is_non_null(&p),
        invariant: gs.is_invariant(&p) && gs.is_union_of_orbits(&i),
        conditions: pair_conditions(gs, &p, &i),
        p,
        i,
    }
}

/// Descriptors of `D_{g,h}` and `D_{h,g}` with `g, h` composed right to
/// left.
pub fn tau_descriptor(gs: &GSet, g: &[usize], h: &[usize]) -> (TauDescriptor, TauDescriptor) {
    // g∘h applies h first
    (
        tau_of(gs, &compose_transformations(h, g)),
        tau_of(gs, &compose_transformations(g, h)),
    )
}

/// The bar operator: `({X}, ∅)` when `I` is not accessible, otherwise `P`
/// with blocks merged along `G′_B`-translates and, when `I` has a sink,
/// all blocks that can only reach the sink.
pub fn standardize(gs: &GSet, p: &Partition, i: &[usize]) -> StandardPair {
    let (q, j) = merge_blocks(gs, p, i);
    classify(gs, &q, &j)
}

fn merge_blocks(gs: &GSet, p: &Partition, i: &[usize]) -> (Partition, Vec<usize>) {
    let n = gs.x_size();
    if !is_accessible(gs, p, i) {
        return (Partition::whole(n), Vec::new());
    }
    let point: Vec<Subgroup> = (0..n).map(|x| gs.point_stabilizer(x)).collect();
    let block_stab: Vec<Subgroup> = p.blocks().iter().map(|b| gs.setwise_stabilizer(b)).collect();
    let mut uf = UnionFind::new(p.num_blocks());
    for (b, block) in p.blocks().iter().enumerate() {
        let prime = prime_stabilizer(gs, block_stab[b], i, &point).expect("accessible");
        for l in gs.elements_of(prime) {
            uf.union(b, p.block_of(gs.act(l, block[0])));
        }
    }
    if let Some(s) = sink(gs, i) {
        let only_sink: Vec<usize> = (0..p.num_blocks())
            .filter(|&b| {
                i.iter()
                    .filter(|&&j| j != s)
                    .all(|&j| !is_subgroup_of(block_stab[b], point[j]))
            })
            .collect();
        for w in only_sink.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let merged = uf.into_partition();
    let keys: Vec<usize> = (0..n).map(|x| merged.block_of(p.block_of(x))).collect();
    let mut i = i.to_vec();
    i.sort_unstable();
    i.dedup();
    (Partition::from_keys(&keys), i)
}

/// Computes the flags of a pair.
pub fn classify(gs: &GSet, p: &Partition, i: &[usize]) -> StandardPair {
    let mut i = i.to_vec();
    i.sort_unstable();
    i.dedup();
    let accessible = is_accessible(gs, p, &i);
    let degenerate = i.is_empty() && p.num_blocks() <= 1;
    let is_standard = degenerate
        || (gs.is_invariant(p)
            && gs.is_non_null(p)
            && gs.is_union_of_orbits(&i)
            && accessible
            && pair_conditions(gs, p, &i)[..3].iter().all(|&c| c)
            && merge_blocks(gs, p, &i).0 == *p);
    let mut sp = StandardPair {
        p: p.clone(),
        sink: sink(gs, &i),
        i,
        is_standard,
        is_valid: false,
        is_accessible: accessible,
    };
    sp.is_valid = is_standard && is_valid_standard_pair(gs, &sp);
    sp
}

/// Realisability of a standard pair as some `D_{g,h}`.
pub fn is_valid_standard_pair(gs: &GSet, sp: &StandardPair) -> bool {
    if sp.is_degenerate() {
        return gs.global_fixed_points().len() != 1;
    }
    let point: Vec<Subgroup> = (0..gs.x_size()).map(|x| gs.point_stabilizer(x)).collect();
    sp.p.blocks().iter().all(|b| {
        if b.iter().any(|x| sp.i.binary_search(x).is_ok()) {
            return true;
        }
        let gb = gs.setwise_stabilizer(b);
        let upper = match gs.upper_stabilizer(b) {
            Some(u) => u,
            None => return false,
        };
        gs.elements_of(gb).any(|l| {
            let lb = gs.generated(l, upper);
            sp.i
                .iter()
                .all(|&j| !is_subgroup_of(lb, point[j]) || is_subgroup_of(gb, point[j]))
        })
    })
}

/// All G-invariant partitions of `X`.
pub fn invariant_partitions(gs: &GSet) -> Vec<Partition> {
    all_partitions(gs.x_size())
        .into_iter()
        .filter(|p| gs.is_invariant(p))
        .collect()
}

/// All unions of orbits, as sorted point lists.
pub fn orbit_unions(gs: &GSet) -> Vec<Vec<usize>> {
    let orbits = gs.orbits();
    let k = orbits.num_blocks();
    (0..1usize << k)
        .map(|mask| {
            let mut set: Vec<usize> = (0..k)
                .filter(|&o| mask >> o & 1 == 1)
                .flat_map(|o| orbits.block(o).iter().copied())
                .collect();
            set.sort_unstable();
            set
        })
        .collect()
}

/// Every standard pair, sorted.
pub fn standard_pairs(gs: &GSet) -> Vec<StandardPair> {
    let mut out = Vec::new();
    for p in invariant_partitions(gs) {
        for i in orbit_unions(gs) {
            let sp = classify(gs, &p, &i);
            if sp.is_standard {
                out.push(sp);
            }
        }
    }
    out.sort();
    out
}

/// Indices into `End_G(X)` of `D_{P,I}`.
pub fn domain_set(end: &EndG, p: &Partition, i: &[usize]) -> Vec<usize> {
    let d = TxDescriptor {
        p: p.clone(),
        i: i.to_vec(),
    };
    (0..end.len()).filter(|&t| d.contains(&end.maps[t])).collect()
}

/// The tuple `(P, P′, I, I′, α, β)` of `φ_{g,h}` read right to left, on
/// standardised pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauGeneratorTuple {
    pub pair: StandardPair,
    pub pair_prime: StandardPair,
    /// `h` restricted to `I`.
    pub alpha: PartialMap,
    /// `[x]_P ↦ [h x]_{P′}`.
    pub beta: BlockBijection,
}

impl TauGeneratorTuple {
    pub fn to_welement(&self) -> WElement {
        WElement {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        }
    }

    /// The element of `W(X)` this tuple represents, in normal form.
    pub fn normal_form(&self, gs: &GSet) -> WElement {
        normalize_bar(gs, self.to_welement())
    }
}

pub fn tau_generator_tuple(gs: &GSet, g: &[usize], h: &[usize]) -> Result<TauGeneratorTuple, WError> {
    let (d, d_prime) = tau_descriptor(gs, g, h);
    let pair = standardize(gs, &d.p, &d.i);
    let pair_prime = standardize(gs, &d_prime.p, &d_prime.i);
    let n = gs.x_size();
    if !pair.is_accessible {
        return Ok(TauGeneratorTuple {
            pair,
            pair_prime,
            alpha: PartialMap::empty(n),
            beta: BlockBijection::trivial(n),
        });
    }
    let alpha = PartialMap::from_pairs(n, &pair.i.iter().map(|&x| (x, h[x])).collect::<Vec<_>>())
        .map_err(|_| WError::NotBijective)?;
    let beta = BlockBijection::from_point_map(&pair.p, &pair_prime.p, |x| h[x])?;
    WElement::new(alpha.clone(), beta.clone())?;
    Ok(TauGeneratorTuple {
        pair,
        pair_prime,
        alpha,
        beta,
    })
}

/// Orbit counts per stabilizer agree on `I` and `I′`, and orbit counts per
/// `(G_B, G^B)` agree on `P` and `P′`.
pub fn tuple_exists(gs: &GSet, a: &StandardPair, b: &StandardPair) -> bool {
    fn point_profile(gs: &GSet, i: &[usize]) -> Vec<Subgroup> {
        let orbits = gs.orbits();
        let mut seen = vec![false; orbits.num_blocks()];
        let mut out = Vec::new();
        for &x in i {
            let o = orbits.block_of(x);
            if !std::mem::replace(&mut seen[o], true) {
                out.push(gs.point_stabilizer(x));
            }
        }
        out.sort_unstable();
        out
    }
    fn block_profile(gs: &GSet, p: &Partition) -> Vec<(Subgroup, Option<Subgroup>)> {
        let mut seen = vec![false; p.num_blocks()];
        let mut out = Vec::new();
        for (b, block) in p.blocks().iter().enumerate() {
            if seen[b] {
                continue;
            }
            for k in 0..gs.order() {
                seen[p.block_of(gs.act(k, block[0]))] = true;
            }
            out.push((gs.setwise_stabilizer(block), gs.upper_stabilizer(block)));
        }
        out.sort_unstable();
        out
    }
    point_profile(gs, &a.i) == point_profile(gs, &b.i) && block_profile(gs, &a.p) == block_profile(gs, &b.p)
}

/// The normal form: the empty element when `dom α` is not accessible from
/// `dom β`, otherwise `β` induced on the standardised partition.
pub fn normalize_bar(gs: &GSet, w: WElement) -> WElement {
    let n = gs.x_size();
    let WElement { mut alpha, mut beta } = w;
    loop {
        let i = alpha.domain();
        if !is_accessible(gs, beta.dom(), &i) {
            return WElement::empty(n);
        }
        let reachable = reachable_points(gs, beta.dom(), &i);
        if reachable.len() < i.len() {
            let pairs: Vec<(usize, usize)> = reachable.iter().map(|&x| (x, alpha.get(x).unwrap())).collect();
            alpha = PartialMap::from_pairs(n, &pairs).expect("restriction of a bijection");
            continue;
        }
        let (q, _) = merge_blocks(gs, beta.dom(), &i);
        if q == *beta.dom() {
            break;
        }
        beta = beta.bar_lift(&q).expect("standardising only merges blocks");
    }
    untwist(gs, WElement { alpha, beta })
}

/// The points of `I` hit by some endomorphism in `D_{P,I}`: those whose
/// stabilizer contains some `G_B`.
pub fn reachable_points(gs: &GSet, p: &Partition, i: &[usize]) -> Vec<usize> {
    let block_stabs: Vec<Subgroup> = p.blocks().iter().map(|b| gs.setwise_stabilizer(b)).collect();
    i.iter()
        .copied()
        .filter(|&x| {
            let gx = gs.point_stabilizer(x);
            block_stabs.iter().any(|&gb| is_subgroup_of(gb, gx))
        })
        .collect()
}

/// `(l·α, l·β)`: post-composition with the action of `l`.
pub fn twist(gs: &GSet, w: &WElement, l: usize) -> WElement {
    let n = gs.x_size();
    let pairs: Vec<(usize, usize)> = w.alpha.pairs().map(|(i, j)| (i, gs.act(l, j))).collect();
    let alpha = PartialMap::from_pairs(n, &pairs).expect("the action is a bijection");
    let cod = w.beta.cod();
    let map = (0..w.beta.dom().num_blocks())
        .map(|b| cod.block_of(gs.act(l, cod.block(w.beta.image(b))[0])))
        .collect();
    let beta = BlockBijection::new(w.beta.dom().clone(), cod.clone(), map).expect("codomain is G-invariant");
    WElement { alpha, beta }
}

/// The least of the twists of `w`. Since every endomorphism commutes with
/// the action, `(α, β)` and `(l·α, l·β)` describe the same map; composition
/// respects the choice because `G` is abelian.
pub fn untwist(gs: &GSet, w: WElement) -> WElement {
    let best = (0..gs.order())
        .filter(|&l| l != gs.identity())
        .map(|l| twist(gs, &w, l))
        .min();
    match best {
        Some(c) if c < w => c,
        _ => w,
    }
}

pub fn gw_compose(gs: &GSet, a: &WElement, b: &WElement) -> WElement {
    normalize_bar(gs, a.compose_raw(b))
}

/// `α` commutes with the action and `β` maps `k·B` to `k·βB`.
pub fn is_g_compatible(gs: &GSet, w: &WElement) -> bool {
    let alpha_ok = w
        .alpha
        .pairs()
        .all(|(i, j)| (0..gs.order()).all(|k| w.alpha.get(gs.act(k, i)) == Some(gs.act(k, j))));
    let beta = &w.beta;
    let beta_ok = (0..gs.x_size()).all(|x| {
        (0..gs.order()).all(|k| {
            let moved = beta.image_block_of(gs.act(k, x));
            let expected = gs.act(k, beta.image_block_of(x)[0]);
            moved.contains(&expected)
        })
    });
    alpha_ok && beta_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::cyclic_group;

    /// `Z_2` swapping 0 and 1, fixing 2 and 3.
    fn z2_on_four() -> GSet {
        GSet::new(cyclic_group(2).unwrap(), 4, vec![vec![0, 1, 2, 3], vec![1, 0, 2, 3]]).unwrap()
    }

    #[test]
    fn rejects_non_actions() {
        let z2 = cyclic_group(2).unwrap();
        assert_eq!(
            GSet::new(z2.clone(), 2, vec![vec![1, 0], vec![1, 0]]),
            Err(GSetError::IdentityMoves(0))
        );
        assert_eq!(
            GSet::new(z2, 1, vec![vec![0]]),
            Err(GSetError::ActionShape { rows: 2, cols: 1 })
        );
    }

    #[test]
    fn stabilizers_of_the_example() {
        let gs = z2_on_four();
        assert_eq!(gs.point_stabilizer(0), 0b01);
        assert_eq!(gs.point_stabilizer(2), 0b11);
        assert_eq!(gs.global_fixed_points(), vec![2, 3]);
        let p = Partition::from_blocks(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
        let data = stabilizers(&gs, Some(&p), Some(&[2, 3]));
        assert_eq!(data.block, vec![0b11, 0b11, 0b11]);
        assert_eq!(data.upper, vec![Some(0b01), Some(0b11), Some(0b11)]);
        assert_eq!(data.prime, vec![Some(0b11), Some(0b11), Some(0b11)]);
    }

    #[test]
    fn endomorphism_count() {
        let gs = z2_on_four();
        let end = end_g(&gs);
        assert_eq!(end.len(), 16);
        assert!(end.maps.iter().all(|f| gs.is_equivariant(f)));
        assert_eq!(end_g(&GSet::trivial(3)).len(), 27);
    }

    #[test]
    fn descriptor_with_merged_fixed_points() {
        let gs = z2_on_four();
        let id = [0, 1, 2, 3];
        let h = [0, 1, 2, 2];
        let (d, _) = tau_descriptor(&gs, &id, &h);
        assert_eq!(d.i, vec![0, 1, 2]);
        assert_eq!(d.p.to_string(), "0 | 1 | 2 3");
        assert!(d.holds());
    }

    #[test]
    fn degenerate_pair_validity() {
        let gs = z2_on_four();
        let sp = classify(&gs, &Partition::whole(4), &[]);
        assert!(sp.is_standard && sp.is_valid);
        let one_fixed = GSet::new(
            cyclic_group(2).unwrap(),
            3,
            vec![vec![0, 1, 2], vec![1, 0, 2]],
        )
        .unwrap();
        let sp = classify(&one_fixed, &Partition::whole(3), &[]);
        assert!(sp.is_standard && !sp.is_valid);
    }

    #[test]
    fn inaccessible_pairs_collapse() {
        let gs = z2_on_four();
        // {0,1} is stabilized by G but I = {0,1} has trivial stabilizers
        let p = Partition::from_blocks(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let sp = standardize(&gs, &p, &[0, 1]);
        assert_eq!(sp.p, Partition::whole(4));
        assert!(sp.i.is_empty());
    }
}
