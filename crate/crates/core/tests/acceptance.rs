//! Acceptance criteria. Each prints one line with its verdict and timing;
//! the test fails afterwards if any criterion failed.

use std::time::{Duration, Instant};

use innmonoid::conjugacy::{centralizer, conjugacy_classes, conjugators, k_pairs};
use innmonoid::constructors::{
    clifford8, cyclic_group, left_zero, rees_domain_nonempty, rees_generators, rees_matrix, strict4, symmetric_group,
    symmetric_inverse_monoid,
};
use innmonoid::corpus::{find_isomorphism, test_corpus, DEFAULT_SEED};
use innmonoid::gset::{end_g, tau_descriptor};
use innmonoid::verify::{
    catalog_semigroups, conjugacy_suite, gset_suite, inner_suite, trivial_gset_regression, tx_suite, z2_on_four,
    z2_rees_example, SuiteReport,
};
use innmonoid::{abstract_cayley, closure, domain_dgh, inn, phi, reduce_conjugators, FiniteSemigroup, PartialMap, WithOne};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn from_reports(reports: &[SuiteReport]) -> Outcome {
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    let cases: u64 = reports.iter().flat_map(|r| &r.checks).map(|c| c.cases).sum();
    if failed.is_empty() {
        outcome(true, format!("{cases} cases"))
    } else {
        outcome(false, failed.join(""))
    }
}

fn at(s: &FiniteSemigroup, label: &str) -> usize {
    s.elements().find(|&x| s.name(x) == label).unwrap()
}

fn set(s: &FiniteSemigroup, labels: &[&str]) -> Vec<usize> {
    let mut v: Vec<usize> = labels.iter().map(|l| at(s, l)).collect();
    v.sort_unstable();
    v
}

fn clifford() -> Outcome {
    let s = clifford8();
    let w = WithOne::new(&s);
    let classes = conjugacy_classes(&w);
    let witness = conjugators(&w, at(&s, "s1"), at(&s, "s2"));
    let checks = [
        ("s1 ~n s2", witness.is_some()),
        ("(s3,s3) witnesses s1 ~n s2", k_pairs(&w, at(&s, "s3"), at(&s, "s3")).contains(&(at(&s, "s1"), at(&s, "s2")))),
        ("[c] = {c}", classes.class_of(at(&s, "c")) == [at(&s, "c")]),
        ("idempotents", s.idempotents() == set(&s, &["e", "f"])),
        ("C_s1", centralizer(&w, at(&s, "s1")) == set(&s, &["e", "f", "s1", "c"])),
        ("C_s2", centralizer(&w, at(&s, "s2")) == set(&s, &["e", "f", "s2"])),
    ];
    let bad: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(bad.is_empty(), bad.join(", "))
}

fn strict() -> Outcome {
    let s = strict4();
    let w = WithOne::new(&s);
    let (one, two, three, four) = (at(&s, "1"), at(&s, "2"), at(&s, "3"), at(&s, "4"));
    let reduced = reduce_conjugators(&w, one, three);
    let before = phi(&w, one, three).map;
    let after = phi(&w, one, two).map;
    let expected = PartialMap::from_pairs(4, &[(one, two), (four, three)]).unwrap();
    let ok = reduced == (one, two) && before.is_empty_map() && after == expected && before.subset_of(&after) && before != after;
    outcome(ok, format!("reduced to {reduced:?}, phi_13 = {before}, phi_12 = {after}"))
}

fn groups() -> Outcome {
    let z2 = inn(&WithOne::new(&cyclic_group(2).unwrap()), None).unwrap();
    let z2_ok = z2.len() == 2 && z2.iter().any(PartialMap::is_identity) && z2.iter().any(PartialMap::is_empty_map);
    let s3 = symmetric_group(3).unwrap();
    let maps = inn(&WithOne::new(&s3), None).unwrap();
    let units: Vec<PartialMap> = maps.iter().filter(|m| !m.is_empty_map()).cloned().collect();
    let closed = units.iter().all(|a| units.iter().all(|b| units.contains(&a.then(b))));
    let iso = closed && abstract_cayley(&units).is_ok_and(|c| find_isomorphism(&c, &s3).is_some());
    outcome(z2_ok && maps.len() == 7 && iso, format!("|inn Z_2| = {}, |inn S_3| = {}", z2.len(), maps.len()))
}

fn left_zeros() -> Outcome {
    let mut sizes = Vec::new();
    let mut ok = true;
    for k in [2, 3] {
        let maps = inn(&WithOne::new(&left_zero(k).unwrap()), None).unwrap();
        let points = maps.iter().filter(|m| m.rank() == 1).count();
        ok &= maps.len() == k * k + 2
            && points == k * k
            && maps.iter().filter(|m| m.is_identity()).count() == 1
            && maps.iter().filter(|m| m.is_empty_map()).count() == 1;
        sizes.push(maps.len());
    }
    outcome(ok, format!("sizes {sizes:?}"))
}

fn inverse_monoid() -> Outcome {
    let (i2, _) = symmetric_inverse_monoid(2).unwrap();
    let maps = inn(&WithOne::new(&i2), None).unwrap();
    let ok = maps.len() == 7 && abstract_cayley(&maps).is_ok_and(|c| find_isomorphism(&c, &i2).is_some());
    outcome(ok, format!("|inn I_2| = {}", maps.len()))
}

fn subjects(max_order: usize) -> Vec<(String, FiniteSemigroup)> {
    catalog_semigroups().into_iter().chain(test_corpus(max_order, DEFAULT_SEED)).collect()
}

fn conjugacy_properties() -> Outcome {
    let mut report = SuiteReport::new("conjugacy");
    for (name, s) in subjects(4) {
        conjugacy_suite(&mut report, &name, &s);
    }
    from_reports(&[report])
}

fn inner_properties() -> Outcome {
    let mut report = SuiteReport::new("inner automorphisms");
    for (name, s) in subjects(5) {
        inner_suite(&mut report, &name, &s);
    }
    let z2 = WithOne::new(&cyclic_group(2).unwrap());
    let square = phi(&z2, 0, 1).map.then(&phi(&z2, 0, 1).map);
    let bound = phi(&z2, 0, 0).map;
    report.record("composition inclusion is strict on Z_2", square.subset_of(&bound) && square != bound, String::new);
    from_reports(&[report])
}

fn rees() -> Outcome {
    let spec = z2_rees_example();
    let s = rees_matrix(&spec);
    let w = WithOne::new(&s);
    let n = s.len();
    let mut agree = 0;
    for x in 0..n {
        for y in 0..n {
            if rees_domain_nonempty(&spec, spec.decode(x), spec.decode(y)) != domain_dgh(&w, x, y).is_empty() {
                agree += 1;
            }
        }
    }
    let gens = rees_generators(&spec);
    let gens_ok = gens.iter().all(|g| g.map == phi(&w, g.x, g.y).map);
    let mut maps: Vec<PartialMap> = gens.into_iter().map(|g| g.map).collect();
    maps.push(PartialMap::identity(n));
    let generated = closure(&maps, None).unwrap();
    let direct = inn(&w, None).unwrap();
    let ok = agree == n * n && n * n == 64 && gens_ok && generated == direct;
    outcome(ok, format!("{agree}/{} pairs agree, |inn| = {}", n * n, direct.len()))
}

fn transformations() -> Outcome {
    from_reports(&[tx_suite(2, true), tx_suite(3, true), tx_suite(4, false)])
}

fn gsets() -> Outcome {
    let gs = z2_on_four();
    let end = end_g(&gs);
    let mut descriptors = 0;
    for g in &end.maps {
        for h in &end.maps {
            let (a, b) = tau_descriptor(&gs, g, h);
            descriptors += usize::from(a.holds() && b.holds());
        }
    }
    let mut reports = vec![gset_suite(&gs)];
    reports.extend((1..=3).map(trivial_gset_regression));
    let suites = from_reports(&reports);
    let ok = end.len() == 16 && descriptors == 256 && suites.ok;
    outcome(ok, format!("|End| = {}, {descriptors}/256 descriptors hold, {}", end.len(), suites.detail))
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("Clifford example", 1, clifford),
        ("conjugator reduction", 1, strict),
        ("group degeneration", 5, groups),
        ("left-zero semigroups", 1, left_zeros),
        ("inverse monoid self-description", 5, inverse_monoid),
        ("conjugacy property suite", 120, conjugacy_properties),
        ("inner automorphism property suite", 120, inner_properties),
        ("Rees matrix example", 10, rees),
        ("full transformation monoids", 30 * 60, transformations),
        ("abelian G-set example", 5 * 60, gsets),
    ];
    let mut failed = Vec::new();
    for (k, (name, bound, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(*bound);
        let pass = result.ok && in_time;
        println!(
            "criterion {:>2} {} {name}: {:.2}s (bound {bound}s) {}",
            k + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            if pass { String::new() } else { result.detail.clone() }
        );
        if !pass {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
