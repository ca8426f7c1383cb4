//! Finite semigroups given by a dense Cayley table.

use std::ops::Range;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("a semigroup needs at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry at row {row}, column {col} is out of range")]
    OutOfRangeEntry { row: usize, col: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("{given} labels given for {n} elements")]
    LabelCount { given: usize, n: usize },
}

/// A semigroup on `0..n` with products stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    n: usize,
    table: Vec<usize>,
    identity: Option<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteSemigroup {
    /// Validates shape, range and associativity, and detects an identity.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(SemigroupError::RaggedRow {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
            table.extend(r);
        }
        Self::from_flat(n, table)
    }

    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Self, SemigroupError> {
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        assert_eq!(table.len(), n * n, "flat table has the wrong length");
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(SemigroupError::OutOfRangeEntry {
                row: pos / n,
                col: pos % n,
            });
        }
        let s = Self::from_trusted(n, table);
        if let Some((a, b, c)) = s.associativity_witness() {
            return Err(SemigroupError::NonAssociative { a, b, c });
        }
        Ok(s)
    }

    /// Builds a table that is associative by construction (composition of
    /// maps, Rees products). Only the identity is detected.
    pub(crate) fn from_trusted(n: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let mut s = FiniteSemigroup {
            n,
            table,
            identity: None,
            labels: None,
        };
        s.identity = s.find_identity();
        s
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, SemigroupError> {
        if labels.len() != self.n {
            return Err(SemigroupError::LabelCount {
                given: labels.len(),
                n: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn find_identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                let row_ab = &self.table[ab * n..ab * n + n];
                for c in 0..n {
                    if row_ab[c] != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `x`: its label if labelled, else the index.
    pub fn name(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1, "semigroup powers start at 1");
        (1..k).fold(a, |acc, _| self.mul(acc, a))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Two-sided inverse of `a` with respect to the identity, if both exist.
    pub fn group_inverse(&self, a: usize) -> Option<usize> {
        let e = self.identity?;
        (0..self.n).find(|&b| self.mul(a, b) == e && self.mul(b, a) == e)
    }

    pub fn is_group(&self) -> bool {
        self.identity.is_some() && (0..self.n).all(|a| self.group_inverse(a).is_some())
    }

    /// `S¹`: `self` if it already has an identity, otherwise `self` with a
    /// new identity at index `n`, named `1` (primed until the name is free).
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        if self.identity.is_some() {
            return self.clone();
        }
        let n = self.n;
        let m = n + 1;
        let mut table = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                table.push(if a == n {
                    b
                } else if b == n {
                    a
                } else {
                    self.mul(a, b)
                });
            }
        }
        let mut labels: Vec<String> = self.elements().map(|x| self.name(x)).collect();
        let mut one = "1".to_string();
        while labels.contains(&one) {
            one.push('\'');
        }
        labels.push(one);
        FiniteSemigroup {
            n: m,
            table,
            identity: Some(n),
            labels: Some(labels),
        }
    }

    /// Index, period and the idempotent power of `a`.
    pub fn omega_data(&self, a: usize) -> OmegaData {
        // powers[k - 1] = a^k until the first repeat
        let mut powers = vec![a];
        let mut seen = vec![usize::MAX; self.n];
        seen[a] = 1;
        let (index, period) = loop {
            let next = self.mul(*powers.last().unwrap(), a);
            let k = powers.len() + 1;
            if seen[next] != usize::MAX {
                break (seen[next], k - seen[next]);
            }
            seen[next] = k;
            powers.push(next);
        };
        let power = |k: usize| -> usize {
            let k = if k < index {
                k
            } else {
                index + (k - index) % period
            };
            powers[k - 1]
        };
        // the unique multiple of the period in [index, index + period)
        let k = index.div_ceil(period) * period;
        OmegaData {
            omega: power(k),
            omega_plus_one: power(k + 1),
            pseudo_inverse: power(k + period - 1),
            index,
            period,
        }
    }
}

/// The ω-power data of an element of a finite semigroup.
///
/// `omega` is the idempotent power, `omega_plus_one = a·omega`, and
/// `pseudo_inverse` is the inverse of `omega_plus_one` in the group
/// H-class of `omega`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaData {
    pub omega: usize,
    pub omega_plus_one: usize,
    pub pseudo_inverse: usize,
    pub index: usize,
    pub period: usize,
}

/// A semigroup `S` together with its monoid completion `S¹`.
///
/// Elements `0..base_len()` are the carrier of `S`; when `S` has no identity
/// the adjoined one sits at index `base_len()`.
#[derive(Clone, Debug)]
pub struct WithOne {
    s1: FiniteSemigroup,
    base: usize,
}

impl WithOne {
    pub fn new(s: &FiniteSemigroup) -> Self {
        WithOne {
            s1: s.adjoin_identity(),
            base: s.len(),
        }
    }

    pub fn monoid(&self) -> &FiniteSemigroup {
        &self.s1
    }

    pub fn base_len(&self) -> usize {
        self.base
    }

    pub fn len(&self) -> usize {
        self.s1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s1.is_empty()
    }

    pub fn one(&self) -> usize {
        self.s1.identity().expect("S¹ always has an identity")
    }

    pub fn is_adjoined(&self) -> bool {
        self.s1.len() > self.base
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.s1.mul(a, b)
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    /// The carrier of `S`.
    pub fn elements(&self) -> Range<usize> {
        0..self.base
    }

    /// `S¹` with the identity first, then the rest ascending.
    pub fn conjugator_order(&self) -> Vec<usize> {
        let one = self.one();
        std::iter::once(one)
            .chain((0..self.s1.len()).filter(move |&x| x != one))
            .collect()
    }

    pub fn name(&self, x: usize) -> String {
        self.s1.name(x)
    }

    /// Natural partial order: `a <= b` iff `sa = a = at` and `sb = a = bt`
    /// for some `s, t` in `S¹`.
    pub fn natural_leq(&self, a: usize, b: usize) -> bool {
        let left = (0..self.len()).any(|s| self.mul(s, a) == a && self.mul(s, b) == a);
        let right = (0..self.len()).any(|t| self.mul(a, t) == a && self.mul(b, t) == a);
        left && right
    }

    /// H-preorder: `a ⪯ b` iff `sb = a = bt` for some `s, t` in `S¹`.
    pub fn h_preorder_leq(&self, a: usize, b: usize) -> bool {
        let left = (0..self.len()).any(|s| self.mul(s, b) == a);
        let right = (0..self.len()).any(|t| self.mul(b, t) == a);
        left && right
    }
}
