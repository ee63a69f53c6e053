use dcpo_core::witness::{
    johnstone_leq, kou_leq, verify_witness_claims, Johnstone, JohnstoneElement, Kou, KouElement,
    Rational, SymbolicDcpo, Window, WitnessName,
};
use dcpo_core::{Caps, Status};

/// Relation rows as `u64` words, built straight from the predicate.
fn rows<E>(elements: &[E], leq: impl Fn(&E, &E) -> bool) -> Vec<Vec<u64>> {
    let words = elements.len().div_ceil(64);
    elements
        .iter()
        .map(|u| {
            let mut row = vec![0u64; words];
            for (j, v) in elements.iter().enumerate() {
                if leq(u, v) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect()
}

fn bit(row: &[u64], j: usize) -> bool {
    row[j / 64] >> (j % 64) & 1 == 1
}

/// Reflexivity, antisymmetry, and transitivity over every triple
/// `u ≤ v ≤ w`: the row of `v` must be contained in the row of `u`.
fn assert_partial_order<E: std::fmt::Display>(elements: &[E], leq: impl Fn(&E, &E) -> bool) {
    let r = rows(elements, leq);
    for u in 0..elements.len() {
        assert!(bit(&r[u], u), "not reflexive at {}", elements[u]);
        for v in (0..elements.len()).filter(|&v| v != u && bit(&r[u], v)) {
            assert!(!bit(&r[v], u), "{} and {} violate antisymmetry", elements[u], elements[v]);
            for (wv, wu) in r[v].iter().zip(&r[u]) {
                assert_eq!(wv & !wu, 0, "transitivity fails through {} <= {}", elements[u], elements[v]);
            }
        }
    }
}

#[test]
fn johnstone_order_axioms_up_to_twelve() {
    let caps = Caps::default();
    for bound in 1..=12 {
        let w = Johnstone.window(bound, &caps).unwrap();
        assert_eq!(w.len(), bound * (bound + 1));
        assert_partial_order(&w, johnstone_leq);
    }
}

#[test]
fn kou_order_axioms_up_to_eight() {
    let caps = Caps::default();
    for bound in 1..=8 {
        let w = Kou::default().window(bound, &caps).unwrap();
        assert_partial_order(&w, kou_leq);
    }
}

#[test]
fn kou_mixed_clause_transitivity() {
    let caps = Caps::default();
    let w = Kou::default().window(6, &caps).unwrap();
    let triples: Vec<&KouElement> = w.iter().filter(|e| matches!(e, KouElement::Triple { .. })).collect();
    let points: Vec<&KouElement> = w.iter().filter(|e| matches!(e, KouElement::Point(_))).collect();
    let mut chains = 0;
    for &u in &triples {
        for &v in triples.iter().filter(|&&v| kou_leq(u, v)) {
            for &x in points.iter().filter(|&&x| kou_leq(v, x)) {
                chains += 1;
                assert!(kou_leq(u, x), "{u} <= {v} <= {x}");
            }
        }
    }
    assert!(chains > 0);
}

#[test]
fn kou_triple_down_sets_are_chains_without_points() {
    let caps = Caps::default();
    let w = Kou::default().window(6, &caps).unwrap();
    for u in &w {
        let KouElement::Triple { k: h, a, b } = *u else { continue };
        for v in w.iter().filter(|v| kou_leq(v, u)) {
            match *v {
                KouElement::Point(_) => panic!("point {v} below {u}"),
                KouElement::Triple { k, a: a2, b: b2 } => {
                    assert!(a2 == a && b2 == b && k <= h);
                }
            }
        }
    }
}

#[test]
fn johnstone_infinite_down_sets_are_not_chains() {
    let a = JohnstoneElement::finite(1, 1);
    let b = JohnstoneElement::finite(2, 1);
    for m in 2..=40 {
        let top = JohnstoneElement::infinite(m);
        assert!(johnstone_leq(&a, &top) && johnstone_leq(&b, &top));
    }
    assert!(!johnstone_leq(&a, &b) && !johnstone_leq(&b, &a));
}

/// Growing the bound keeps earlier elements and the order among them.
#[test]
fn windows_embed_monotonically() {
    let caps = Caps::default();
    for bound in 1..12 {
        let small = Window::sample(&Johnstone, bound, &caps).unwrap();
        let big = Window::sample(&Johnstone, bound + 1, &caps).unwrap();
        check_embedding(&small, &big);
    }
    for bound in 1..8 {
        let small = Window::sample(&Kou::default(), bound, &caps).unwrap();
        let big = Window::sample(&Kou::default(), bound + 1, &caps).unwrap();
        check_embedding(&small, &big);
    }
}

fn check_embedding<E: Clone + Ord + std::fmt::Display>(small: &Window<E>, big: &Window<E>) {
    let map: Vec<usize> = small
        .elements
        .iter()
        .map(|e| big.index_of(e).expect("element kept"))
        .collect();
    for i in 0..small.len() {
        for j in 0..small.len() {
            assert_eq!(small.leq(i, j), big.leq(map[i], map[j]));
        }
    }
}

#[test]
fn every_witness_passes_its_bounded_checks() {
    let caps = Caps::default();
    let kou = Kou::default();
    for name in WitnessName::ALL {
        let bound = match name {
            WitnessName::Johnstone | WitnessName::JohnstoneStar => 12,
            WitnessName::Kou | WitnessName::KouStar => 6,
        };
        let reports = verify_witness_claims(name, bound, &kou, &caps).unwrap();
        assert!(!reports.is_empty());
        for r in &reports {
            assert_ne!(r.status, Status::Fail, "{name}: {r:?}");
            assert!(r.cases > 0, "{name}: {} checked nothing", r.claim_id);
        }
    }
}

#[test]
fn extra_kou_samples_are_merged_and_checked() {
    let caps = Caps::default();
    let r = |p, q| Rational::new(p, q);
    let kou = Kou {
        extra: vec![
            KouElement::point(r(5, 11)).unwrap(),
            KouElement::triple(r(3, 7), r(5, 11), r(5, 11)).unwrap(),
            KouElement::triple(r(1, 9), r(10, 11), r(2, 13)).unwrap(),
        ],
    };
    let window = kou.window(3, &caps).unwrap();
    assert!(kou.extra.iter().all(|e| window.contains(e)));
    for report in verify_witness_claims(WitnessName::KouStar, 3, &kou, &caps).unwrap() {
        assert_ne!(report.status, Status::Fail, "{report:?}");
    }
}

#[test]
fn window_caps_are_enforced() {
    let caps = Caps::default();
    assert!(verify_witness_claims(WitnessName::Johnstone, 33, &Kou::default(), &caps).is_err());
    assert!(verify_witness_claims(WitnessName::Kou, 9, &Kou::default(), &caps).is_err());
    assert!(verify_witness_claims(WitnessName::Kou, 0, &Kou::default(), &caps).is_err());
}
