use dcpo_core::canon::{canonical_form, universe};
use dcpo_core::domain::{birkhoff_round_trip, m_flat, scott_lattice};
use dcpo_core::lattice::is_distributive;
use dcpo_core::topology::{is_scott_closed, scott_closure};
use dcpo_core::{poset_isomorphism, Caps, Direction, ElementSet, FinitePoset};
use proptest::prelude::*;

/// A random poset: a random DAG on `0..n` (edges only go upward in index)
/// whose labels are then shuffled.
fn poset(max: usize) -> impl Strategy<Value = FinitePoset> {
    (0..=max)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (
                Just(n),
                prop::collection::vec(prop::bool::weighted(0.35), pairs),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, edges, perm)| {
            let covers: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .zip(edges)
                .filter(|&(_, keep)| keep)
                .map(|((a, b), _)| (perm[a], perm[b]))
                .collect();
            FinitePoset::build(n, &covers).unwrap()
        })
}

fn with_sets(max: usize) -> impl Strategy<Value = (FinitePoset, ElementSet, ElementSet)> {
    poset(max).prop_flat_map(|p| {
        let n = p.size();
        let set = move || prop::collection::vec(any::<bool>(), n)
            .prop_map(move |bits| ElementSet::from_indices(n, (0..n).filter(|&i| bits[i])));
        (Just(p), set(), set())
    })
}

proptest! {
    #[test]
    fn down_set_is_a_closure_operator((p, a, b) in with_sets(10)) {
        for dir in [Direction::Down, Direction::Up] {
            let ca = p.down_set(&a, dir);
            prop_assert!(a.is_subset(&ca));
            prop_assert_eq!(p.down_set(&ca, dir), ca.clone());
            let ab = a.union(&b);
            prop_assert!(ca.is_subset(&p.down_set(&ab, dir)));
        }
        prop_assert!(p.is_lower_set(&p.down_set(&a, Direction::Down)));
        prop_assert!(p.is_upper_set(&p.down_set(&a, Direction::Up)));
    }

    #[test]
    fn scott_closure_is_least_closed_superset((p, a, b) in with_sets(8)) {
        let caps = Caps::default();
        let cl = scott_closure(&p, &a);
        prop_assert!(is_scott_closed(&p, &cl, &caps).unwrap());
        prop_assert!(a.is_subset(&cl));
        if a.is_subset(&b) && is_scott_closed(&p, &b, &caps).unwrap() {
            prop_assert!(cl.is_subset(&b));
        }
    }

    #[test]
    fn directed_sup_bounds_its_set((p, d, _) in with_sets(10)) {
        match p.directed_sup(&d) {
            Ok(s) => {
                prop_assert!(p.is_directed(&d));
                prop_assert!(d.contains(s));
                prop_assert!(d.iter().all(|x| p.leq(x, s)));
            }
            Err(_) => prop_assert!(!p.is_directed(&d)),
        }
    }

    #[test]
    fn relabeling_preserves_class(
        (p, perm) in poset(8).prop_flat_map(|p| {
            let n = p.size();
            (Just(p), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let q = p.relabel(&perm);
        let f = poset_isomorphism(&p, &q);
        prop_assert!(f.as_ref().is_some_and(|f| f.verify(&p, &q)));
        prop_assert!(poset_isomorphism(&q, &p).is_some());
        prop_assert!(poset_isomorphism(&p, &p).is_some());
        prop_assert_eq!(canonical_form(&p).unwrap().0, canonical_form(&q).unwrap().0);
    }

    #[test]
    fn closed_set_lattice_is_distributive_and_recovers_p(p in poset(7)) {
        let l = scott_lattice(&p, &Caps::default()).unwrap();
        prop_assert!(is_distributive(&l));
        prop_assert!(birkhoff_round_trip(&p, &l));
    }

    #[test]
    fn element_set_algebra(
        (n, a, b) in (0usize..150).prop_flat_map(|n| (
            Just(n),
            prop::collection::btree_set(0..n.max(1), 0..n.max(1)),
            prop::collection::btree_set(0..n.max(1), 0..n.max(1)),
        ))
    ) {
        let a: Vec<usize> = a.into_iter().filter(|&i| i < n).collect();
        let b: Vec<usize> = b.into_iter().filter(|&i| i < n).collect();
        let sa = ElementSet::from_indices(n, a.iter().copied());
        let sb = ElementSet::from_indices(n, b.iter().copied());
        prop_assert_eq!(sa.to_vec(), a.clone());
        prop_assert_eq!(sa.count(), a.len());
        let union: Vec<usize> = (0..n).filter(|i| a.contains(i) || b.contains(i)).collect();
        let inter: Vec<usize> = (0..n).filter(|i| a.contains(i) && b.contains(i)).collect();
        prop_assert_eq!(sa.union(&sb).to_vec(), union);
        prop_assert_eq!(sa.intersection(&sb).to_vec(), inter);
        prop_assert_eq!(sa.union(&sb).complement(), sa.complement().intersection(&sb.complement()));
        prop_assert_eq!(sa.difference(&sb), sa.intersection(&sb.complement()));
        prop_assert_eq!(sa.is_subset(&sb), a.iter().all(|i| b.contains(i)));
        prop_assert!(sa.complement().complement() == sa);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// `M ⊆ N` implies `N^♭ ⊆ M^♭`.
    #[test]
    fn m_flat_is_antitone(small in any::<u32>(), extra in any::<u32>()) {
        let caps = Caps::default();
        let all = universe(4, &caps).unwrap();
        let pick = |mask: u32| -> Vec<FinitePoset> {
            all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.clone()).collect()
        };
        let m = pick(small);
        let n = pick(small | extra);
        let flat_m = m_flat(&m, 4, &caps).unwrap();
        let flat_n = m_flat(&n, 4, &caps).unwrap();
        prop_assert!(flat_n.iter().all(|p| flat_m.contains(p)));
    }
}
