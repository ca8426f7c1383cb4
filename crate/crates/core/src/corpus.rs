//! Small semigroups for exhaustive property checks, and isomorphism search.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::semigroup::FiniteSemigroup;

const UNSET: usize = usize::MAX;

/// Partial-table associativity: every triple whose products are all known.
fn consistent(n: usize, t: &[usize]) -> bool {
    let get = |a: usize, b: usize| t[a * n + b];
    for a in 0..n {
        for b in 0..n {
            let ab = get(a, b);
            if ab == UNSET {
                continue;
            }
            for c in 0..n {
                let bc = get(b, c);
                if bc == UNSET {
                    continue;
                }
                let (l, r) = (get(ab, c), get(a, bc));
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn search(n: usize, t: &mut Vec<usize>, cell: usize, out: &mut dyn FnMut(&[usize]) -> bool, order: &mut dyn FnMut() -> Vec<usize>) -> bool {
    if cell == n * n {
        return out(t);
    }
    for v in order() {
        t[cell] = v;
        if consistent(n, t) && !search(n, t, cell + 1, out, order) {
            t[cell] = UNSET;
            return false;
        }
    }
    t[cell] = UNSET;
    true
}

/// Every associative table on `0..n`. Practical for `n ≤ 4`.
pub fn labeled_semigroups(n: usize) -> Vec<FiniteSemigroup> {
    let mut found = Vec::new();
    let mut t = vec![UNSET; n * n];
    search(
        n,
        &mut t,
        0,
        &mut |t| {
            found.push(FiniteSemigroup::from_trusted(n, t.to_vec()));
            true
        },
        &mut || (0..n).collect(),
    );
    found
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn relabel(s: &FiniteSemigroup, pi: &[usize]) -> Vec<usize> {
    let n = s.len();
    let mut t = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            t[pi[a] * n + pi[b]] = pi[s.mul(a, b)];
        }
    }
    t
}

/// Lexicographically least relabelled table.
pub fn canonical_table(s: &FiniteSemigroup) -> Vec<usize> {
    permutations(s.len())
        .iter()
        .map(|pi| relabel(s, pi))
        .min()
        .unwrap_or_default()
}

/// One canonical representative per isomorphism class, sorted by table.
pub fn semigroups_up_to_iso(n: usize) -> Vec<FiniteSemigroup> {
    let perms = permutations(n);
    let classes: BTreeSet<Vec<usize>> = labeled_semigroups(n)
        .iter()
        .map(|s| perms.iter().map(|pi| relabel(s, pi)).min().unwrap())
        .collect();
    classes
        .into_iter()
        .map(|t| FiniteSemigroup::from_trusted(n, t))
        .collect()
}

/// A semigroup of order `n` found by backtracking with shuffled value order.
pub fn random_semigroup(n: usize, rng: &mut impl Rng) -> FiniteSemigroup {
    let mut t = vec![UNSET; n * n];
    let mut result = None;
    let mut values: Vec<usize> = (0..n).collect();
    search(
        n,
        &mut t,
        0,
        &mut |t| {
            result = Some(t.to_vec());
            false
        },
        &mut || {
            values.shuffle(rng);
            values.clone()
        },
    );
    FiniteSemigroup::from_trusted(n, result.expect("the zero semigroup always exists"))
}

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const RANDOM_ORDER_FIVE: usize = 16;

/// All semigroups of order `≤ min(max_order, 4)` up to isomorphism, followed
/// by seeded random ones of order 5 when `max_order ≥ 5`.
pub fn test_corpus(max_order: usize, seed: u64) -> Vec<(String, FiniteSemigroup)> {
    let mut out = Vec::new();
    for n in 1..=max_order.min(4) {
        for (k, s) in semigroups_up_to_iso(n).into_iter().enumerate() {
            out.push((format!("order{n}#{k}"), s));
        }
    }
    if max_order >= 5 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = BTreeSet::new();
        let mut k = 0;
        let mut attempts = 0;
        while k < RANDOM_ORDER_FIVE && attempts < 20 * RANDOM_ORDER_FIVE {
            attempts += 1;
            let s = random_semigroup(5, &mut rng);
            if seen.insert(canonical_table(&s)) {
                out.push((format!("random5#{k}"), s));
                k += 1;
            }
        }
    }
    out
}

/// A bijection `f` with `f(ab) = f(a)f(b)`, if one exists.
pub fn find_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let profile = |s: &FiniteSemigroup, x: usize| {
        let square = s.mul(x, x);
        (
            s.is_idempotent(x),
            s.elements().filter(|&y| s.mul(x, y) == x).count(),
            s.elements().filter(|&y| s.mul(y, x) == x).count(),
            s.elements().filter(|&y| s.mul(y, y) == x).count(),
            square == x,
        )
    };
    let pa: Vec<_> = a.elements().map(|x| profile(a, x)).collect();
    let pb: Vec<_> = b.elements().map(|x| profile(b, x)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut f = vec![UNSET; n];
    let mut used = vec![false; n];
    fn rec<P: PartialEq>(
        x: usize,
        a: &FiniteSemigroup,
        b: &FiniteSemigroup,
        pa: &[P],
        pb: &[P],
        f: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.len();
        if x == n {
            return true;
        }
        for y in 0..n {
            if used[y] || pa[x] != pb[y] {
                continue;
            }
            f[x] = y;
            used[y] = true;
            let ok = (0..=x).all(|u| {
                (0..=x).all(|v| {
                    let img = f[a.mul(u, v)];
                    img == UNSET || img == b.mul(f[u], f[v])
                })
            });
            if ok && rec(x + 1, a, b, pa, pb, f, used) {
                return true;
            }
            used[y] = false;
            f[x] = UNSET;
        }
        false
    }
    rec(0, a, b, &pa, &pb, &mut f, &mut used).then_some(f)
}
