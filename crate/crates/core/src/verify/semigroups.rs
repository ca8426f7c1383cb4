use std::collections::BTreeSet;

use crate::conjugacy::{are_conjugate, conditions, conjugacy_classes, conjugators, is_witness, k_pairs, ALTERNATIVES};
use crate::constructors::{
    clifford8, cyclic_group, full_transformation_monoid, left_zero, strict4, symmetric_group,
    symmetric_inverse_monoid,
};
use crate::green::green;
use crate::inner::{domain_dgh, phi, reduce_conjugators};
use crate::partial_map::PartialMap;
use crate::semigroup::{FiniteSemigroup, WithOne};

use super::SuiteReport;

/// Named instances of the catalog families used by the property suites.
pub fn catalog_semigroups() -> Vec<(String, FiniteSemigroup)> {
    vec![
        ("clifford8".into(), clifford8()),
        ("strict4".into(), strict4()),
        ("leftzero:2".into(), left_zero(2).unwrap()),
        ("leftzero:3".into(), left_zero(3).unwrap()),
        ("cyclic:2".into(), cyclic_group(2).unwrap()),
        ("cyclic:3".into(), cyclic_group(3).unwrap()),
        ("sym:3".into(), symmetric_group(3).unwrap()),
        ("I:2".into(), symmetric_inverse_monoid(2).unwrap().0),
        ("T:2".into(), full_transformation_monoid(2).unwrap().0),
        ("T:3".into(), full_transformation_monoid(3).unwrap().0),
    ]
}

/// Relational composition `{(a, c) : a r b, b s c}`.
fn compose_relations(n: usize, r: &BTreeSet<(usize, usize)>, s: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for &(a, b) in r {
        for c in 0..n {
            if s.contains(&(b, c)) {
                out.insert((a, c));
            }
        }
    }
    out
}

pub fn conjugacy_suite(report: &mut SuiteReport, name: &str, s: &FiniteSemigroup) {
    let w = WithOne::new(s);
    let n = s.len();
    let ones = w.len();
    let gd = green(s);
    let classes = conjugacy_classes(&w);

    for a in 0..n {
        for b in 0..n {
            for g in 0..ones {
                for h in 0..ones {
                    let c = conditions(&w, a, b, g, h);
                    let all = c.iter().all(|&x| x);
                    let triggered = ALTERNATIVES
                        .iter()
                        .position(|set| set.iter().all(|&k| c[k]));
                    report.record("equation sets force all eight", triggered.is_none() || all, || {
                        format!("{name}: a={a} b={b} g={g} h={h} set {}", triggered.unwrap() + 1)
                    });
                    if all {
                        report.record("witnesses are symmetric", is_witness(&w, b, a, h, g), || {
                            format!("{name}: a={a} b={b} g={g} h={h}")
                        });
                        let powers_ok = (1..=n).all(|k| is_witness(&w, s.pow(a, k), s.pow(b, k), g, h));
                        report.record("powers share conjugators", powers_ok, || {
                            format!("{name}: a={a} b={b} g={g} h={h}")
                        });
                    }
                }
            }
        }
    }

    for g in 0..ones {
        for h in 0..ones {
            let k = k_pairs(&w, g, h);
            let closed = k
                .iter()
                .all(|&(a, b)| k.iter().all(|&(c, d)| k.contains(&(s.mul(a, c), s.mul(b, d)))));
            report.record("K_{g,h} is closed under products", closed, || {
                format!("{name}: g={} h={}", w.name(g), w.name(h))
            });
        }
    }

    for a in 0..n {
        for b in 0..n {
            report.record("classes agree with pairwise search", classes.same_block(a, b) == are_conjugate(&w, a, b), || {
                format!("{name}: a={a} b={b}")
            });
        }
    }
    report.record("classes lie inside D-classes", classes.refines(&gd.d), || name.to_string());
    for e in s.idempotents() {
        let only_idem = classes.class_of(e).iter().all(|&x| s.is_idempotent(x));
        report.record("classes of idempotents are idempotent", only_idem, || format!("{name}: e={e}"));
        for f in s.idempotents() {
            let conj = classes.same_block(e, f);
            report.record("on idempotents conjugacy is D", conj == gd.d.same_block(e, f), || {
                format!("{name}: e={e} f={f}")
            });
            if conj {
                let found = (0..n).any(|g| {
                    (0..n).any(|h| {
                        is_witness(&w, e, f, g, h)
                            && s.mul(s.mul(g, h), g) == g
                            && s.mul(s.mul(h, g), h) == h
                            && gd.d.same_block(g, e)
                            && gd.d.same_block(h, e)
                    })
                });
                report.record("conjugate idempotents have D-related inverse witnesses", found, || {
                    format!("{name}: e={e} f={f}")
                });
            }
        }
    }

    let mut h_rel = BTreeSet::new();
    let mut n_rel = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            if gd.h.same_block(a, b) {
                h_rel.insert((a, b));
            }
            if classes.same_block(a, b) {
                n_rel.insert((a, b));
            }
        }
    }
    report.record(
        "H and conjugacy commute",
        compose_relations(n, &h_rel, &n_rel) == compose_relations(n, &n_rel, &h_rel),
        || name.to_string(),
    );
}

pub fn inner_suite(report: &mut SuiteReport, name: &str, s: &FiniteSemigroup) {
    let w = WithOne::new(s);
    let n = s.len();
    let ones = w.len();
    let gd = green(s);
    let maps: Vec<PartialMap> = (0..ones * ones).map(|k| phi(&w, k / ones, k % ones).map).collect();
    let map = |g: usize, h: usize| &maps[g * ones + h];

    for g in 0..ones {
        for h in 0..ones {
            let who = || format!("{name}: g={} h={}", w.name(g), w.name(h));
            let d = domain_dgh(&w, g, h);
            let f = map(g, h);
            let in_d = |x: usize| f.get(x).is_some();
            report.record("phi is defined exactly on D_{g,h}", f.domain() == d, who);

            let mult = d.iter().all(|&a| {
                d.iter()
                    .all(|&b| f.get(s.mul(a, b)) == Some(s.mul(f.get(a).unwrap(), f.get(b).unwrap())))
            });
            report.record("phi is multiplicative", mult, who);
            let mut image = f.image();
            image.sort_unstable();
            report.record("phi is onto D_{h,g}", image == domain_dgh(&w, h, g) && image.len() == d.len(), who);

            let sub = d.iter().all(|&a| d.iter().all(|&b| in_d(s.mul(a, b))));
            report.record("D_{g,h} is a subsemigroup", sub, who);
            let dir_h = d.iter().all(|&a| (0..n).all(|c| !w.h_preorder_leq(c, a) || in_d(c)));
            report.record("D_{g,h} is downward directed in the H-preorder", dir_h, who);
            let dir_nat = d.iter().all(|&a| (0..n).all(|c| !w.natural_leq(c, a) || in_d(c)));
            report.record("D_{g,h} is downward directed in the natural order", dir_nat, who);
            let union_h = d.iter().all(|&a| gd.h.class_of(a).iter().all(|&b| in_d(b)));
            report.record("D_{g,h} is a union of H-classes", union_h, who);

            for &a in &d {
                let fa = f.get(a).unwrap();
                let mut hit: Vec<usize> = gd.h.class_of(a).iter().map(|&x| f.get(x).unwrap()).collect();
                hit.sort_unstable();
                report.record("phi maps H-classes onto H-classes", hit == gd.h.class_of(fa), || {
                    format!("{name}: g={} h={} a={a}", w.name(g), w.name(h))
                });
                if s.is_idempotent(a) {
                    report.record("phi sends group identities to group identities", s.is_idempotent(fa), || {
                        format!("{name}: g={} h={} e={a}", w.name(g), w.name(h))
                    });
                }
            }

            let (gb, hb) = reduce_conjugators(&w, g, h);
            let mi = w.mul3(gb, hb, gb) == gb && w.mul3(hb, gb, hb) == hb;
            report.record("reduced conjugators are mutually inverse", mi, who);
            report.record("reduced conjugators extend phi", f.subset_of(map(gb, hb)), who);
        }
    }

    for g1 in 0..ones {
        for h1 in 0..ones {
            for g2 in 0..ones {
                for h2 in 0..ones {
                    let product = map(g1, h1).then(map(g2, h2));
                    let bound = map(w.mul(g1, g2), w.mul(h2, h1));
                    report.record("phi_{g1,h1} phi_{g2,h2} lies in phi_{g1g2,h2h1}", product.subset_of(bound), || {
                        format!("{name}: ({g1},{h1}) ({g2},{h2})")
                    });
                }
            }
        }
    }

    for a in 0..n {
        for b in 0..n {
            if let Some(wit) = conjugators(&w, a, b) {
                let (g, h) = reduce_conjugators(&w, wit.g, wit.h);
                let ok = is_witness(&w, a, b, g, h) && w.mul3(g, h, g) == g && w.mul3(h, g, h) == h;
                report.record("conjugates have mutually inverse conjugators", ok, || {
                    format!("{name}: a={a} b={b}")
                });
            }
        }
    }
}
