use crate::conjugacy::{centralizer, conjugacy_classes, conjugators, k_pairs};
use crate::constructors::{clifford8, cyclic_group, left_zero, strict4, symmetric_group, symmetric_inverse_monoid};
use crate::corpus::find_isomorphism;
use crate::inner::{inn, phi, reduce_conjugators};
use crate::partial_map::{abstract_cayley, PartialMap};
use crate::semigroup::{FiniteSemigroup, WithOne};

use super::SuiteReport;

fn index_of(s: &FiniteSemigroup, label: &str) -> usize {
    s.elements().find(|&x| s.name(x) == label).expect("label exists")
}

fn names(s: &FiniteSemigroup, xs: &[usize]) -> String {
    xs.iter().map(|&x| s.name(x)).collect::<Vec<_>>().join(" ")
}

fn clifford(report: &mut SuiteReport) {
    let s = clifford8();
    let w = WithOne::new(&s);
    let at = |l: &str| index_of(&s, l);
    let classes = conjugacy_classes(&w);
    report.record("clifford8: s1 ~n s2", conjugators(&w, at("s1"), at("s2")).is_some(), String::new);
    report.record("clifford8: K_{s3,s3} contains (s1,s2)", k_pairs(&w, at("s3"), at("s3")).contains(&(at("s1"), at("s2"))), String::new);
    report.record("clifford8: [c] = {c}", classes.class_of(at("c")) == [at("c")], || {
        names(&s, classes.class_of(at("c")))
    });
    report.record("clifford8: idempotents e f", s.idempotents() == [at("e"), at("f")], || {
        names(&s, &s.idempotents())
    });
    let mut expected = vec![at("e"), at("f"), at("s1"), at("c")];
    expected.sort_unstable();
    let c1 = centralizer(&w, at("s1"));
    report.record("clifford8: centralizer of s1 is e f s1 c", c1 == expected, || names(&s, &c1));
    let mut expected = vec![at("e"), at("f"), at("s2")];
    expected.sort_unstable();
    let c2 = centralizer(&w, at("s2"));
    report.record("clifford8: centralizer of s2 is e f s2", c2 == expected, || names(&s, &c2));
}

fn strict(report: &mut SuiteReport) {
    let s = strict4();
    let w = WithOne::new(&s);
    let at = |l: &str| index_of(&s, l);
    let (g, h) = reduce_conjugators(&w, at("1"), at("3"));
    report.record("strict4: (1,3) reduces to (1,2)", (g, h) == (at("1"), at("2")), || {
        format!("({},{})", w.name(g), w.name(h))
    });
    let before = phi(&w, at("1"), at("3")).map;
    let after = phi(&w, at("1"), at("2")).map;
    let expected = PartialMap::from_pairs(4, &[(at("1"), at("2")), (at("4"), at("3"))]).unwrap();
    report.record("strict4: phi_{1,3} is empty", before.is_empty_map(), || before.to_string());
    report.record("strict4: phi_{1,2} = {1->2, 4->3}", after == expected, || after.to_string());
    report.record("strict4: inclusion is strict", before.subset_of(&after) && before != after, String::new);
}

fn groups(report: &mut SuiteReport) {
    let z2 = WithOne::new(&cyclic_group(2).unwrap());
    let inn_z2 = inn(&z2, None).unwrap();
    let ok = inn_z2.len() == 2 && inn_z2.iter().any(|m| m.is_identity()) && inn_z2.iter().any(|m| m.is_empty_map());
    report.record("Z_2: inn is identity and empty", ok, || format!("{inn_z2:?}"));
    let strict = phi(&z2, 0, 1).map.then(&phi(&z2, 0, 1).map);
    let bound = phi(&z2, 0, 0).map;
    report.record("Z_2: composition inclusion can be strict", strict.subset_of(&bound) && strict != bound, String::new);

    let s3 = symmetric_group(3).unwrap();
    let inn_s3 = inn(&WithOne::new(&s3), None).unwrap();
    report.record("S_3: inn has 7 elements", inn_s3.len() == 7, || inn_s3.len().to_string());
    let units: Vec<PartialMap> = inn_s3.into_iter().filter(|m| !m.is_empty_map()).collect();
    let closed = units.iter().all(|a| units.iter().all(|b| units.contains(&a.then(b))));
    let iso = closed && abstract_cayley(&units).is_ok_and(|c| find_isomorphism(&c, &s3).is_some());
    report.record("S_3: non-empty part is a group isomorphic to S_3", iso, String::new);
}

fn left_zeros(report: &mut SuiteReport) {
    for k in [2, 3] {
        let w = WithOne::new(&left_zero(k).unwrap());
        let maps = inn(&w, None).unwrap();
        let singles = maps.iter().filter(|m| m.rank() == 1).count();
        let ok = maps.len() == k * k + 2
            && singles == k * k
            && maps.iter().filter(|m| m.is_identity()).count() == 1
            && maps.iter().filter(|m| m.is_empty_map()).count() == 1;
        report.record(&format!("leftzero:{k}: inn is identity, empty and {} one-point maps", k * k), ok, || {
            format!("{maps:?}")
        });
    }
}

fn inverse_monoid(report: &mut SuiteReport) {
    let (i2, _) = symmetric_inverse_monoid(2).unwrap();
    let maps = inn(&WithOne::new(&i2), None).unwrap();
    let ok = maps.len() == 7 && abstract_cayley(&maps).is_ok_and(|c| find_isomorphism(&c, &i2).is_some());
    report.record("I_2: inn is isomorphic to I_2", ok, || maps.len().to_string());
}

/// The worked examples: the Clifford semigroup, the strict-inclusion table,
/// groups, left-zero semigroups and `I_2`.
pub fn examples_suite() -> SuiteReport {
    let mut report = SuiteReport::new("examples");
    clifford(&mut report);
    strict(&mut report);
    groups(&mut report);
    left_zeros(&mut report);
    inverse_monoid(&mut report);
    report
}
