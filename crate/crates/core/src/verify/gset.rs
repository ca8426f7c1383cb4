use std::collections::{BTreeSet, HashMap, HashSet};

use crate::constructors::{cyclic_group, full_transformation_monoid};
use crate::gset::{
    classify, domain_set, end_g, gw_compose, invariant_partitions, is_g_compatible, orbit_unions, standard_pairs,
    standardize, tau_descriptor, tau_generator_tuple, tuple_exists, EndG, GSet,
};
use crate::inner::{domain_dgh, generators, phi};
use crate::partial_map::{ClosureTree, PartialMap};
use crate::semigroup::WithOne;
use crate::tx::{generator_welement, w_compose};
use crate::wcalc::WElement;

use super::SuiteReport;

/// `Z_2` swapping 0 and 1 and fixing 2 and 3.
pub fn z2_on_four() -> GSet {
    GSet::new(cyclic_group(2).unwrap(), 4, vec![vec![0, 1, 2, 3], vec![1, 0, 2, 3]]).unwrap()
}

/// `f∘g`: apply `g` first.
fn rtl(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

fn all_maps(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(n as u32).unwrap_or(0);
    (0..total).map(move |mut k| {
        (0..n)
            .map(|_| {
                let d = k % n;
                k /= n;
                d
            })
            .collect()
    })
}

/// `D_{g,h}` and `φ_{g,h}` evaluated literally with right-to-left
/// composition: `D = {t : (g∘h)∘t = t = t∘(g∘h)}` and `t ↦ h∘t∘g`.
fn literal_phi(end: &EndG, g: usize, h: usize) -> PartialMap {
    let (g, h) = (&end.maps[g], &end.maps[h]);
    let gh = rtl(g, h);
    let images = end.maps.iter().map(|t| {
        (rtl(&gh, t) == *t && rtl(t, &gh) == *t).then(|| end.index_of(&rtl(h, &rtl(t, g))).unwrap())
    });
    let pairs: Vec<(usize, usize)> = images.enumerate().filter_map(|(t, y)| y.map(|y| (t, y))).collect();
    PartialMap::from_pairs(end.len(), &pairs).expect("conjugation is injective on its domain")
}

fn check_tuple(report: &mut SuiteReport, gs: &GSet, end: &EndG, g: usize, h: usize, literal: &PartialMap) -> Option<WElement> {
    let who = || format!("g={:?} h={:?}", end.maps[g], end.maps[h]);
    let tuple = match tau_generator_tuple(gs, &end.maps[g], &end.maps[h]) {
        Ok(t) => t,
        Err(e) => {
            report.record("generator tuple is well defined", false, || format!("{}: {e}", who()));
            return None;
        }
    };
    report.record("generator tuple is well defined", true, String::new);
    let w = tuple.to_welement();
    report.record("generator tuple is G-compatible", is_g_compatible(gs, &w), who);
    if tuple.pair.is_accessible {
        let blocks_ok = tuple.pair.p.blocks().iter().enumerate().all(|(b, block)| {
            let image = tuple.beta.cod().block(tuple.beta.image(b));
            gs.upper_stabilizer(block) == gs.upper_stabilizer(image)
                && gs.setwise_stabilizer(block) == gs.setwise_stabilizer(image)
        });
        report.record("beta preserves block stabilizers", blocks_ok, who);
        report.record("orbit counts of the two pairs agree", tuple_exists(gs, &tuple.pair, &tuple.pair_prime), who);
    }
    let action = (0..end.len()).all(|t| match literal.get(t) {
        Some(y) => w.apply(&end.maps[t]).as_deref() == Some(end.maps[y].as_slice()),
        None => !w.in_domain(&end.maps[t]),
    });
    report.record("generator tuple reproduces phi", action, who);
    let normal = tuple.normal_form(gs);
    let action = (0..end.len()).all(|t| match literal.get(t) {
        Some(y) => normal.apply(&end.maps[t]).as_deref() == Some(end.maps[y].as_slice()),
        None => !normal.in_domain(&end.maps[t]),
    });
    report.record("normal form reproduces phi", action, who);
    Some(normal)
}

/// Every check that only needs the G-set: descriptors, standard pairs, the
/// domain correspondence, generator tuples and the closure embedding.
fn structure_checks(report: &mut SuiteReport, gs: &GSet) -> Option<(EndG, HashMap<PartialMap, WElement>)> {
    let end = end_g(gs);
    let w = WithOne::new(&end.semigroup);
    let m = end.len();
    let mut domains: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut gen_w: HashMap<PartialMap, WElement> = HashMap::new();

    for g in 0..m {
        for h in 0..m {
            let who = || format!("g={:?} h={:?}", end.maps[g], end.maps[h]);
            let literal = literal_phi(&end, g, h);
            let internal = phi(&w, h, g);
            report.record("right-to-left reading is phi with swapped operands", literal == internal.map, who);
            let d = literal.domain();
            report.record("swapped domain matches", d == domain_dgh(&w, h, g), who);

            let (raw, raw_prime) = tau_descriptor(gs, &end.maps[g], &end.maps[h]);
            report.record("descriptors satisfy conditions (1)-(4)", raw.holds() && raw_prime.holds(), || {
                format!("{}: {:?} {:?}", who(), raw.conditions, raw_prime.conditions)
            });
            report.record("descriptor gives the domain", domain_set(&end, &raw.p, &raw.i) == d, who);
            let sp = standardize(gs, &raw.p, &raw.i);
            report.record("standardised descriptor is a valid standard pair", sp.is_standard && sp.is_valid, || {
                format!("{}: {} / {:?}", who(), sp.p, sp.i)
            });
            report.record("standardising keeps the domain", domain_set(&end, &sp.p, &sp.i) == d, who);
            domains.insert(d);

            if let Some(tw) = check_tuple(report, gs, &end, g, h, &literal) {
                match gen_w.get(&literal) {
                    Some(prev) => report.record("pairs with equal maps give equal tuples", *prev == tw, who),
                    None => {
                        gen_w.insert(literal, tw);
                    }
                }
            }
        }
    }

    for p in invariant_partitions(gs) {
        for i in orbit_unions(gs) {
            let once = standardize(gs, &p, &i);
            let twice = standardize(gs, &once.p, &once.i);
            report.record("standardize is idempotent", once == twice, || format!("{p} / {i:?}"));
            report.record(
                "standardize keeps the domain",
                domain_set(&end, &p, &i) == domain_set(&end, &once.p, &once.i),
                || format!("{p} / {i:?}"),
            );
        }
    }

    let valid: Vec<_> = standard_pairs(gs).into_iter().filter(|sp| sp.is_valid).collect();
    let valid_domains: Vec<Vec<usize>> = valid.iter().map(|sp| domain_set(&end, &sp.p, &sp.i)).collect();
    let distinct: BTreeSet<Vec<usize>> = valid_domains.iter().cloned().collect();
    report.record("valid standard pairs have distinct domains", distinct.len() == valid_domains.len(), || {
        format!("{} pairs, {} domains", valid.len(), distinct.len())
    });
    report.record("valid standard pairs give exactly the domains", distinct == domains, || {
        format!("{} from pairs, {} realised", distinct.len(), domains.len())
    });
    for sp in standard_pairs(gs) {
        let reclassified = classify(gs, &sp.p, &sp.i);
        report.record("classification is stable", reclassified == sp, || format!("{} / {:?}", sp.p, sp.i));
    }
    Some((end, gen_w))
}

fn embedding_checks(report: &mut SuiteReport, gs: &GSet, end: &EndG, gen_w: &HashMap<PartialMap, WElement>) {
    let mut gens: Vec<PartialMap> = gen_w.keys().cloned().collect();
    gens.sort();
    let tree = match ClosureTree::build(&gens, None) {
        Ok(t) => t,
        Err(e) => {
            report.record("closure fits the limit", false, || e.to_string());
            return;
        }
    };
    let tree_gen_w: Vec<WElement> = tree
        .generators
        .iter()
        .map(|g| gen_w.get(g).cloned().unwrap_or_else(|| gen_w[&g.invert()].inverse()))
        .collect();
    let identity = WElement::identity(gs.x_size());
    for w in &tree_gen_w {
        report.record("identity is neutral", gw_compose(gs, &identity, w) == *w && gw_compose(gs, w, &identity) == *w, || {
            w.to_string()
        });
    }
    let mut forms: Vec<WElement> = Vec::with_capacity(tree.elements.len());
    for (x, parent) in tree.parent.iter().enumerate() {
        let w = match parent {
            None => tree_gen_w[tree.generators.iter().position(|g| *g == tree.elements[x]).unwrap()].clone(),
            Some((p, k)) => gw_compose(gs, &forms[*p], &tree_gen_w[*k]),
        };
        forms.push(w);
    }
    for (m, w) in tree.elements.iter().zip(&forms) {
        report.record("normal form reproduces each element", acts_as(end, m, w), || w.to_string());
    }
    let distinct: HashSet<&WElement> = forms.iter().collect();
    report.record("embedding is injective", distinct.len() == forms.len(), || {
        format!("{} elements, {} forms", forms.len(), distinct.len())
    });
    for (a, wa) in tree.elements.iter().zip(&forms) {
        for (b, wb) in tree.elements.iter().zip(&forms) {
            let product = tree.index[&a.then(b)];
            let composed = gw_compose(gs, wa, wb);
            report.record("composed forms act as the product", acts_as(end, &tree.elements[product], &composed), || {
                format!("{wa} then {wb}")
            });
            report.record("embedding is multiplicative", forms[product] == composed, || format!("{wa} then {wb}"));
        }
    }
}

fn acts_as(end: &EndG, m: &PartialMap, w: &WElement) -> bool {
    (0..end.len()).all(|t| match m.get(t) {
        Some(y) => w.apply(&end.maps[t]).as_deref() == Some(end.maps[y].as_slice()),
        None => !w.in_domain(&end.maps[t]),
    })
}

pub fn gset_suite(gs: &GSet) -> SuiteReport {
    let mut report = SuiteReport::new(&format!("G-set |G|={} |X|={}", gs.order(), gs.x_size()));
    let n = gs.x_size();
    if n <= 6 {
        let brute: Vec<Vec<usize>> = all_maps(n).filter(|f| gs.is_equivariant(f)).collect();
        let mut listed = end_g(gs).maps;
        listed.sort();
        let mut brute = brute;
        brute.sort();
        report.record("endomorphisms match a brute-force scan", listed == brute, || {
            format!("{} listed, {} found", listed.len(), brute.len())
        });
    }
    if let Some((end, gen_w)) = structure_checks(&mut report, gs) {
        embedding_checks(&mut report, gs, &end, &gen_w);
    }
    report
}

/// With the trivial group every G-set construction reduces to the plain
/// transformation monoid.
pub fn trivial_gset_regression(n: usize) -> SuiteReport {
    let mut report = SuiteReport::new(&format!("trivial G-set |X|={n}"));
    let gs = GSet::trivial(n);
    let end = end_g(&gs);
    let (t, codec) = full_transformation_monoid(n).unwrap();
    let same = end.semigroup == t && (0..t.len()).all(|k| end.maps[k] == codec.decode(k));
    report.record("End_G(X) is T(X) with the same indices", same, String::new);

    let tx_gens = generators(&WithOne::new(&t));
    let mut by_map: HashMap<&PartialMap, WElement> = HashMap::new();
    for g in 0..t.len() {
        for h in 0..t.len() {
            let (gg, hh) = (codec.decode(g), codec.decode(h));
            match tau_generator_tuple(&gs, &gg, &hh) {
                Ok(tuple) => {
                    let tx = generator_welement(&hh, &gg);
                    let same = tuple.to_welement() == tx && tuple.normal_form(&gs) == tx;
                    report.record("generator tuples agree with T(X)", same, || {
                        format!("g={gg:?} h={hh:?}")
                    });
                }
                Err(e) => report.record("generator tuples agree with T(X)", false, || e.to_string()),
            }
        }
    }
    for (map, pairs) in tx_gens.maps.iter().zip(&tx_gens.provenance) {
        let p = pairs[0];
        by_map.insert(map, generator_welement(&codec.decode(p.g), &codec.decode(p.h)));
    }
    let forms: Vec<&WElement> = tx_gens.maps.iter().map(|m| &by_map[m]).collect();
    for a in &forms {
        for b in &forms {
            report.record("composition agrees with T(X)", gw_compose(&gs, a, b) == w_compose(a, b), || {
                format!("{a} then {b}")
            });
        }
    }
    let _ = structure_checks(&mut report, &gs);
    report
}
