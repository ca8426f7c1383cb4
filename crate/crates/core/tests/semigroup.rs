use std::collections::BTreeSet;

use innmonoid::constructors::{clifford8, full_transformation_monoid, left_zero, strict4};
use innmonoid::corpus::{semigroups_up_to_iso, test_corpus, DEFAULT_SEED};
use innmonoid::io::parse_table;
use innmonoid::{green, FiniteSemigroup, Partition, SemigroupError, WithOne};

fn at(s: &FiniteSemigroup, label: &str) -> usize {
    s.elements().find(|&x| s.name(x) == label).unwrap()
}

fn labels(s: &FiniteSemigroup, p: &Partition) -> BTreeSet<BTreeSet<String>> {
    p.blocks().iter().map(|b| b.iter().map(|&x| s.name(x)).collect()).collect()
}

/// `S¹ a`, `a S¹` and `S¹ a S¹` straight from the table.
fn ideals(s: &FiniteSemigroup, a: usize) -> (BTreeSet<usize>, BTreeSet<usize>, BTreeSet<usize>) {
    let mut left: BTreeSet<usize> = s.elements().map(|x| s.mul(x, a)).collect();
    left.insert(a);
    let mut right: BTreeSet<usize> = s.elements().map(|x| s.mul(a, x)).collect();
    right.insert(a);
    let mut two: BTreeSet<usize> = left.iter().flat_map(|&l| s.elements().map(move |x| s.mul(l, x))).collect();
    two.extend(left.iter().copied());
    (left, right, two)
}

#[test]
fn parses_the_small_examples() {
    let trivial = parse_table("1\n0\n").unwrap();
    assert_eq!(trivial.len(), 1);
    assert_eq!(trivial.identity(), Some(0));

    let lz = parse_table("2\n0 0\n1 1\n").unwrap();
    assert_eq!(lz.rows(), left_zero(2).unwrap().rows());
    assert_eq!(lz.identity(), None);
}

#[test]
fn rejects_non_associative_tables() {
    // 0·(1·1) = 0·0 = 1 but (0·1)·1 = 1·1 = 0.
    let err = FiniteSemigroup::new(vec![vec![1, 1], vec![1, 0]]).unwrap_err();
    assert!(matches!(err, SemigroupError::NonAssociative { .. }), "{err:?}");
}

#[test]
fn adjoining_an_identity_only_when_missing() {
    let lz = left_zero(2).unwrap();
    let w = WithOne::new(&lz);
    assert!(w.is_adjoined());
    assert_eq!(w.len(), 3);
    for x in w.elements() {
        assert_eq!(w.mul(w.one(), x), x);
        assert_eq!(w.mul(x, w.one()), x);
    }
    let c = clifford8();
    let wc = WithOne::new(&c);
    assert!(!wc.is_adjoined());
    assert_eq!(wc.one(), at(&c, "f"));
}

#[test]
fn clifford_idempotents_and_d_classes() {
    let s = clifford8();
    let names: Vec<String> = s.idempotents().into_iter().map(|x| s.name(x)).collect();
    assert_eq!(names, ["e", "f"]);
    let expected: BTreeSet<BTreeSet<String>> = [vec!["e", "r1", "r2", "s1", "s2", "s3"], vec!["f", "c"]]
        .iter()
        .map(|b| b.iter().map(|x| x.to_string()).collect())
        .collect();
    assert_eq!(labels(&s, &green(&s).d), expected);
}

#[test]
fn left_zero_green_classes() {
    let g = green(&left_zero(2).unwrap());
    assert_eq!(g.l.num_blocks(), 1);
    assert!(g.r.is_singletons());
    assert!(g.h.is_singletons());
}

#[test]
fn green_matches_principal_ideals_on_the_corpus() {
    let mut subjects: Vec<FiniteSemigroup> = test_corpus(5, DEFAULT_SEED).into_iter().map(|(_, s)| s).collect();
    subjects.extend([clifford8(), strict4(), full_transformation_monoid(3).unwrap().0]);
    for s in subjects {
        let g = green(&s);
        let id: Vec<_> = s.elements().map(|a| ideals(&s, a)).collect();
        for a in s.elements() {
            for b in s.elements() {
                let l = id[a].0 == id[b].0;
                let r = id[a].1 == id[b].1;
                assert_eq!(g.l.same_block(a, b), l);
                assert_eq!(g.r.same_block(a, b), r);
                assert_eq!(g.h.same_block(a, b), l && r);
                let d = s.elements().any(|c| id[a].0 == id[c].0 && id[c].1 == id[b].1);
                assert_eq!(g.d.same_block(a, b), d);
                assert_eq!(g.j.same_block(a, b), id[a].2 == id[b].2);
                assert_eq!(g.d.same_block(a, b), g.j.same_block(a, b));
            }
        }
    }
}

#[test]
fn omega_data_of_the_strict_example() {
    let s = strict4();
    let four = at(&s, "4");
    let o = s.omega_data(four);
    assert_eq!(s.name(o.omega), "1");
    assert_eq!(s.name(o.pseudo_inverse), "4");
}

#[test]
fn omega_power_is_the_idempotent_power() {
    for s in semigroups_up_to_iso(4) {
        for a in s.elements() {
            let o = s.omega_data(a);
            assert!(s.is_idempotent(o.omega));
            let powers: Vec<usize> = (1..=s.len() + 1).map(|k| s.pow(a, k)).collect();
            assert!(powers.contains(&o.omega));
            assert_eq!(s.mul(o.omega_plus_one, o.pseudo_inverse), o.omega);
            assert_eq!(s.mul(o.pseudo_inverse, o.omega_plus_one), o.omega);
        }
    }
}

#[test]
fn h_preorder_and_natural_order() {
    let w = WithOne::new(&left_zero(2).unwrap());
    assert!(!w.h_preorder_leq(0, 1));
    assert!(!w.h_preorder_leq(1, 0));
    assert!(w.h_preorder_leq(0, 0));

    for s in semigroups_up_to_iso(3) {
        let w = WithOne::new(&s);
        let h = green(&s).h;
        for a in s.elements() {
            for b in s.elements() {
                if w.natural_leq(a, b) {
                    assert!(w.h_preorder_leq(a, b));
                }
                if w.h_preorder_leq(a, b) && w.h_preorder_leq(b, a) {
                    assert!(h.same_block(a, b));
                }
            }
        }
    }
}

#[test]
fn corpus_counts_up_to_isomorphism() {
    let counts: Vec<usize> = (1..=4).map(|n| semigroups_up_to_iso(n).len()).collect();
    assert_eq!(counts, [1, 5, 24, 188]);
}
