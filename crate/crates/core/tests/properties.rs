use proptest::prelude::*;
use proptest::sample::{select, subsequence};

use innmonoid::constructors::{cyclic_group, ReesSpec};
use innmonoid::corpus::semigroups_up_to_iso;
use innmonoid::gset::{domain_set, end_g, invariant_partitions, orbit_unions, standardize, GSet};
use innmonoid::io::{
    parse_gset, parse_partial_map, parse_partition, parse_rees_spec, parse_table, to_cayley_text, to_gset_text,
    to_rees_text,
};
use innmonoid::verify::z2_on_four;
use innmonoid::{closure, Partition, PartialMap};

fn partial_map(n: usize) -> impl Strategy<Value = PartialMap> {
    (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n)).prop_map(
        move |(perm, keep)| {
            let pairs: Vec<(usize, usize)> = (0..n).filter(|&x| keep[x]).map(|x| (x, perm[x])).collect();
            PartialMap::from_pairs(n, &pairs).unwrap()
        },
    )
}

fn maps(count: usize) -> impl Strategy<Value = (PartialMap, PartialMap, PartialMap)> {
    (1..=count).prop_flat_map(|n| (partial_map(n), partial_map(n), partial_map(n)))
}

fn partition(n: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..n, n).prop_map(|keys| Partition::from_keys(&keys))
}

fn partitions() -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1..9usize).prop_flat_map(|n| (partition(n), partition(n), partition(n)))
}

fn gsets() -> Vec<GSet> {
    let z = |k| cyclic_group(k).unwrap();
    vec![
        z2_on_four(),
        GSet::trivial(3),
        GSet::new(z(2), 5, vec![vec![0, 1, 2, 3, 4], vec![1, 0, 3, 2, 4]]).unwrap(),
        GSet::new(z(3), 4, vec![vec![0, 1, 2, 3], vec![1, 2, 0, 3], vec![2, 0, 1, 3]]).unwrap(),
    ]
}

proptest! {
    #[test]
    fn composition_is_associative((f, g, h) in maps(9)) {
        prop_assert_eq!(f.then(&g).then(&h), f.then(&g.then(&h)));
    }

    #[test]
    fn inverse_laws((f, g, _) in maps(9)) {
        let fi = f.invert();
        prop_assert_eq!(f.then(&fi).then(&f), f.clone());
        prop_assert_eq!(fi.invert(), f.clone());
        prop_assert_eq!(f.then(&g).invert(), g.invert().then(&fi));
        prop_assert!(f.then(&fi).is_identity() == (f.rank() == f.ambient()));
        prop_assert_eq!(f.then(&fi).domain(), f.domain());
    }

    #[test]
    fn restriction_is_below((f, g, _) in maps(9)) {
        let e = g.then(&g.invert());
        prop_assert!(e.then(&f).subset_of(&f));
        prop_assert!(f.subset_of(&f));
        prop_assert!(PartialMap::empty(f.ambient()).subset_of(&f));
    }

    #[test]
    fn closure_ignores_generator_order(gens in (1..6usize).prop_flat_map(|n| proptest::collection::vec(partial_map(n), 1..4)).prop_shuffle()) {
        let mut sorted = gens.clone();
        sorted.sort();
        let a = closure(&gens, Some(100_000)).unwrap();
        let b = closure(&sorted, Some(100_000)).unwrap();
        prop_assert_eq!(a.clone(), b);
        for x in &gens {
            prop_assert!(a.contains(x));
        }
        for x in &a {
            for y in &a {
                prop_assert!(a.binary_search(&x.then(y)).is_ok());
            }
        }
    }

    #[test]
    fn join_and_meet_laws((p, q, r) in partitions()) {
        let n = p.len();
        prop_assert_eq!(p.join(&q), q.join(&p));
        prop_assert_eq!(p.meet(&q), q.meet(&p));
        prop_assert_eq!(p.join(&q).join(&r), p.join(&q.join(&r)));
        prop_assert_eq!(p.meet(&q).meet(&r), p.meet(&q.meet(&r)));
        prop_assert_eq!(p.join(&p.meet(&q)), p.clone());
        prop_assert_eq!(p.meet(&p.join(&q)), p.clone());
        prop_assert!(p.refines(&p.join(&q)) && q.refines(&p.join(&q)));
        prop_assert!(p.meet(&q).refines(&p) && p.meet(&q).refines(&q));
        prop_assert_eq!(p.join(&Partition::singletons(n)), p.clone());
        prop_assert_eq!(p.meet(&Partition::whole(n)), p.clone());
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(p.meet(&q).same_block(x, y), p.same_block(x, y) && q.same_block(x, y));
            }
        }
    }

    #[test]
    fn partition_is_canonical(keys in proptest::collection::vec(0..5usize, 1..9), shift in 1..7usize) {
        let shifted: Vec<usize> = keys.iter().map(|k| (k * 7 + shift) % 11).collect();
        prop_assert_eq!(Partition::from_keys(&keys), Partition::from_keys(&shifted));
    }

    #[test]
    fn table_text_round_trip(s in select(semigroups_up_to_iso(3))) {
        prop_assert_eq!(parse_table(&to_cayley_text(&s)).unwrap(), s);
    }

    #[test]
    fn partition_text_round_trip((p, _, _) in partitions()) {
        prop_assert_eq!(parse_partition(&p.to_string(), Some(p.len())).unwrap(), p);
    }

    #[test]
    fn partial_map_text_round_trip((f, _, _) in maps(9)) {
        prop_assert_eq!(parse_partial_map(&f.to_string(), f.ambient()).unwrap(), f);
    }

    #[test]
    fn gset_text_round_trip(gs in select(gsets())) {
        let back = parse_gset(&to_gset_text(&gs)).unwrap();
        prop_assert_eq!(back.action_rows(), gs.action_rows());
        prop_assert_eq!(back.group(), gs.group());
    }

    #[test]
    fn rees_text_round_trip(k in 1..4usize, i in 1..4usize, l in 1..4usize, seed in proptest::collection::vec(0..64usize, 9)) {
        let sandwich: Vec<Vec<usize>> = (0..l).map(|a| (0..i).map(|b| seed[a * 3 + b] % k).collect()).collect();
        let spec = ReesSpec::new(cyclic_group(k).unwrap(), i, l, sandwich).unwrap();
        let back = parse_rees_spec(&to_rees_text(&spec)).unwrap();
        prop_assert_eq!(to_rees_text(&back), to_rees_text(&spec));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn standardize_is_idempotent_and_keeps_the_domain(k in 0..4usize, pick in any::<prop::sample::Index>(), picks in subsequence((0..64).collect::<Vec<usize>>(), 1)) {
        let gs = &gsets()[k];
        let end = end_g(gs);
        let ps = invariant_partitions(gs);
        let is = orbit_unions(gs);
        let p = pick.get(&ps);
        let i = &is[picks[0] % is.len()];
        let once = standardize(gs, p, i);
        let twice = standardize(gs, &once.p, &once.i);
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(domain_set(&end, p, i), domain_set(&end, &once.p, &once.i));
    }
}
