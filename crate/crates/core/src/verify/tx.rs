use std::collections::{BTreeSet, HashMap, HashSet};

use crate::constructors::{full_transformation_monoid, TransformationCodec};
use crate::inner::generators;
use crate::partial_map::{ClosureTree, PartialMap};
use crate::semigroup::WithOne;
use crate::tx::{embed, enumerate_w, finite_membership, generator_welement, normalize, w_compose};
use crate::wcalc::WElement;

use super::SuiteReport;

/// Largest closure the full check will build.
const CLOSURE_LIMIT: usize = 2_000_000;

/// `Inn(T(n))` against its description in `W(n)`.
///
/// For `n ≤ 3`, or with `full`, the whole closure is embedded and checked
/// for injectivity, multiplicativity and the membership criterion. Otherwise
/// only generators and products of two generators are checked.
pub fn tx_suite(n: usize, full: bool) -> SuiteReport {
    let mut report = SuiteReport::new(&format!("T({n}){}", if full { " full" } else { "" }));
    let (t, codec) = match full_transformation_monoid(n) {
        Ok(x) => x,
        Err(e) => {
            report.record("build T(n)", false, || e.to_string());
            return report;
        }
    };
    let w = WithOne::new(&t);
    let gens = generators(&w);

    let mut gen_w = Vec::with_capacity(gens.len());
    for (map, pairs) in gens.maps.iter().zip(&gens.provenance) {
        let direct = embed(&codec, map);
        let mut first: Option<WElement> = None;
        for p in pairs {
            let tuple = generator_welement(&codec.decode(p.g), &codec.decode(p.h));
            report.record("generator tuple matches the map's own reading", direct.as_ref() == Ok(&tuple), || {
                format!("g={:?} h={:?}", codec.decode(p.g), codec.decode(p.h))
            });
            first.get_or_insert(tuple);
        }
        let first = first.expect("every generator has a pair");
        report.record("generators satisfy the membership criterion", finite_membership(&first, n), || first.to_string());
        gen_w.push(first);
    }
    let distinct: HashSet<&WElement> = gen_w.iter().collect();
    report.record("distinct generators have distinct normal forms", distinct.len() == gen_w.len(), || {
        format!("{} maps, {} forms", gen_w.len(), distinct.len())
    });

    if n <= 3 || full {
        closure_checks(&mut report, n, &codec, &gens.maps, &gen_w);
    } else {
        pair_checks(&mut report, &codec, &gens.maps, &gen_w);
    }
    report
}

fn check_action(report: &mut SuiteReport, codec: &TransformationCodec, map: &PartialMap, w: &WElement) {
    let ok = (0..codec.len()).all(|t| {
        let tt = codec.decode(t);
        match map.get(t) {
            Some(img) => w.apply(&tt) == Some(codec.decode(img)),
            None => !w.in_domain(&tt),
        }
    });
    report.record("normal form reproduces the map", ok, || w.to_string());
}

fn pair_checks(report: &mut SuiteReport, codec: &TransformationCodec, maps: &[PartialMap], gen_w: &[WElement]) {
    let mut cache: HashMap<PartialMap, WElement> = HashMap::new();
    for (m, w) in maps.iter().zip(gen_w) {
        check_action(report, codec, m, w);
    }
    for (a, wa) in maps.iter().zip(gen_w) {
        for (b, wb) in maps.iter().zip(gen_w) {
            let product = a.then(b);
            let expected = match cache.get(&product) {
                Some(x) => Ok(x.clone()),
                None => embed(codec, &product).inspect(|x| {
                    cache.insert(product, x.clone());
                }),
            };
            let got = w_compose(wa, wb);
            report.record("composition of two generators matches", expected.as_ref() == Ok(&got), || {
                format!("{wa} then {wb}")
            });
        }
    }
}

fn closure_checks(report: &mut SuiteReport, n: usize, codec: &TransformationCodec, maps: &[PartialMap], gen_w: &[WElement]) {
    let tree = match ClosureTree::build(maps, Some(CLOSURE_LIMIT)) {
        Ok(t) => t,
        Err(e) => {
            report.record("closure fits the limit", false, || e.to_string());
            return;
        }
    };
    let by_map: HashMap<&PartialMap, &WElement> = maps.iter().zip(gen_w).collect();
    let tree_gen_w: Vec<WElement> = tree
        .generators
        .iter()
        .map(|g| match by_map.get(g) {
            Some(w) => (*w).clone(),
            None => normalize(by_map[&g.invert()].inverse()),
        })
        .collect();

    let mut forms: Vec<WElement> = Vec::with_capacity(tree.elements.len());
    for (x, parent) in tree.parent.iter().enumerate() {
        let w = match parent {
            None => tree_gen_w[tree.generators.iter().position(|g| *g == tree.elements[x]).unwrap()].clone(),
            Some((p, k)) => w_compose(&forms[*p], &tree_gen_w[*k]),
        };
        forms.push(w);
    }

    for (m, w) in tree.elements.iter().zip(&forms) {
        report.record("normal form matches the map's own reading", embed(codec, m).as_ref() == Ok(w), || {
            m.to_string()
        });
        check_action(report, codec, m, w);
    }
    let distinct: HashSet<&WElement> = forms.iter().collect();
    report.record("embedding is injective", distinct.len() == forms.len(), || {
        format!("{} elements, {} forms", forms.len(), distinct.len())
    });

    for (a, wa) in tree.elements.iter().zip(&forms) {
        for (b, wb) in tree.elements.iter().zip(&forms) {
            let product = tree.index[&a.then(b)];
            let ok = forms[product] == w_compose(wa, wb);
            report.record("embedding is multiplicative", ok, || format!("{wa} then {wb}"));
        }
    }

    let image: BTreeSet<&WElement> = forms.iter().collect();
    let predicted: Vec<WElement> = enumerate_w(n).into_iter().filter(|w| finite_membership(w, n)).collect();
    let predicted: BTreeSet<&WElement> = predicted.iter().collect();
    report.record("image is exactly the membership criterion", image == predicted, || {
        format!("{} embedded, {} predicted", image.len(), predicted.len())
    });
}
