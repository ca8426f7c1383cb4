use std::collections::{BTreeSet, VecDeque};

use innmonoid::constructors::{clifford8, cyclic_group, left_zero, strict4, symmetric_group, symmetric_inverse_monoid};
use innmonoid::corpus::{find_isomorphism, semigroups_up_to_iso};
use innmonoid::{abstract_cayley, domain_dgh, generators, inn, phi, reduce_conjugators, FiniteSemigroup, PartialMap, WithOne};

fn at(s: &FiniteSemigroup, label: &str) -> usize {
    s.elements().find(|&x| s.name(x) == label).unwrap()
}

type Raw = Vec<Option<usize>>;

/// Breadth-first closure on plain option vectors, independent of the
/// library's closure routine.
fn naive_inn(w: &WithOne) -> BTreeSet<Raw> {
    let n = w.base_len();
    let mut gens: Vec<Raw> = Vec::new();
    for g in 0..w.len() {
        for h in 0..w.len() {
            let gh = w.mul(g, h);
            gens.push(
                (0..n)
                    .map(|a| (w.mul(gh, a) == a && w.mul(a, gh) == a).then(|| w.mul(w.mul(h, a), g)))
                    .collect(),
            );
        }
    }
    let mut seen: BTreeSet<Raw> = gens.iter().cloned().collect();
    let mut queue: VecDeque<Raw> = seen.iter().cloned().collect();
    while let Some(f) = queue.pop_front() {
        for g in &gens {
            let fg: Raw = f.iter().map(|x| x.and_then(|y| g[y])).collect();
            if seen.insert(fg.clone()) {
                queue.push_back(fg);
            }
        }
    }
    seen
}

fn raw(m: &PartialMap) -> Raw {
    (0..m.ambient()).map(|x| m.get(x)).collect()
}

#[test]
fn inn_matches_a_naive_closure() {
    let mut subjects = semigroups_up_to_iso(3);
    subjects.extend([clifford8(), strict4(), left_zero(3).unwrap(), symmetric_group(3).unwrap()]);
    for s in subjects {
        let w = WithOne::new(&s);
        let got: BTreeSet<Raw> = inn(&w, None).unwrap().iter().map(raw).collect();
        assert_eq!(got, naive_inn(&w), "{:?}", s.rows());
    }
}

#[test]
fn clifford_phi() {
    let s = clifford8();
    let w = WithOne::new(&s);
    let s3 = at(&s, "s3");
    let mut expected: Vec<usize> = ["e", "r1", "r2", "s1", "s2", "s3"].iter().map(|l| at(&s, l)).collect();
    expected.sort_unstable();
    assert_eq!(domain_dgh(&w, s3, s3), expected);
    assert_eq!(phi(&w, s3, s3).map.get(at(&s, "s1")), Some(at(&s, "s2")));
}

#[test]
fn reduction_examples() {
    let s = strict4();
    let w = WithOne::new(&s);
    let (one, two, three) = (at(&s, "1"), at(&s, "2"), at(&s, "3"));
    assert_eq!(reduce_conjugators(&w, one, three), (one, two));
    assert_eq!(reduce_conjugators(&w, one, one), (one, one));
    let z3 = cyclic_group(3).unwrap();
    let wz = WithOne::new(&z3);
    for g in z3.elements() {
        let inv = z3.group_inverse(g).unwrap();
        assert_eq!(reduce_conjugators(&wz, g, inv), (g, inv));
    }
}

#[test]
fn reduced_conjugators_extend_the_map() {
    for s in semigroups_up_to_iso(3).into_iter().chain([clifford8(), strict4()]) {
        let w = WithOne::new(&s);
        for g in 0..w.len() {
            for h in 0..w.len() {
                let (gb, hb) = reduce_conjugators(&w, g, h);
                assert_eq!(w.mul3(gb, hb, gb), gb);
                assert_eq!(w.mul3(hb, gb, hb), hb);
                assert!(phi(&w, g, h).map.subset_of(&phi(&w, gb, hb).map));
            }
        }
    }
}

#[test]
fn small_inn_monoids() {
    let z2 = inn(&WithOne::new(&cyclic_group(2).unwrap()), None).unwrap();
    assert_eq!(z2.len(), 2);
    let chain = abstract_cayley(&z2).unwrap();
    assert!(chain.elements().all(|x| chain.is_idempotent(x)));
    assert!(chain.is_commutative());

    let lz2 = inn(&WithOne::new(&left_zero(2).unwrap()), None).unwrap();
    assert_eq!(lz2.len(), 6);
    assert_eq!(lz2.iter().filter(|m| m.rank() == 1).count(), 4);
    assert!(abstract_cayley(&lz2).is_ok());

    let single = abstract_cayley(&[PartialMap::identity(3)]).unwrap();
    assert_eq!(single.len(), 1);

    let (i2, _) = symmetric_inverse_monoid(2).unwrap();
    let maps = inn(&WithOne::new(&i2), None).unwrap();
    assert!(find_isomorphism(&abstract_cayley(&maps).unwrap(), &i2).is_some());
}

#[test]
fn inn_is_an_inverse_monoid() {
    for s in semigroups_up_to_iso(3).into_iter().chain([clifford8(), strict4()]) {
        let maps = inn(&WithOne::new(&s), None).unwrap();
        let set: BTreeSet<&PartialMap> = maps.iter().collect();
        assert!(maps.iter().any(PartialMap::is_identity));
        for m in &maps {
            assert!(set.contains(&m.invert()));
            assert_eq!(m.then(&m.invert()).then(m), *m);
        }
    }
}

#[test]
fn generator_provenance_is_exact() {
    let s = clifford8();
    let w = WithOne::new(&s);
    let gens = generators(&w);
    let total: usize = gens.provenance.iter().map(Vec::len).sum();
    assert_eq!(total, w.len() * w.len());
    for (m, pairs) in gens.maps.iter().zip(&gens.provenance) {
        for p in pairs {
            assert_eq!(phi(&w, p.g, p.h).map, *m);
        }
    }
}

#[test]
fn limit_is_enforced() {
    let w = WithOne::new(&symmetric_group(3).unwrap());
    assert!(inn(&w, Some(3)).is_err());
    assert_eq!(inn(&w, Some(7)).unwrap().len(), 7);
}
