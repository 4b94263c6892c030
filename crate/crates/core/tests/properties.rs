use diagmon::diagram::{ProductGraph, Row};
use diagmon::idempotent::{
    is_idempotent_direct, is_idempotent_structural, is_twisted_idempotent, TwistOrder,
};
use diagmon::{DiagramPartition, EquivalenceRelation, MonoidFamily};
use proptest::prelude::*;

fn diagram(max_n: usize) -> impl Strategy<Value = DiagramPartition> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..2 * n, 2 * n)
            .prop_map(move |keys| DiagramPartition::from_keys(n, &keys))
    })
}

fn triple(max_n: usize) -> impl Strategy<Value = [DiagramPartition; 3]> {
    (1..=max_n).prop_flat_map(|n| {
        let one = move || {
            proptest::collection::vec(0..2 * n, 2 * n)
                .prop_map(move |keys| DiagramPartition::from_keys(n, &keys))
        };
        (one(), one(), one()).prop_map(|(a, b, c)| [a, b, c])
    })
}

fn brauer_like(max_n: usize) -> impl Strategy<Value = DiagramPartition> {
    (1..=max_n).prop_flat_map(|n| {
        Just((0..2 * n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_flat_map(move |order| {
                proptest::collection::vec(any::<bool>(), n).prop_map(move |split| {
                    let mut blocks = Vec::new();
                    for i in 0..n {
                        if split[i] {
                            blocks.push(vec![order[2 * i]]);
                            blocks.push(vec![order[2 * i + 1]]);
                        } else {
                            blocks.push(vec![order[2 * i], order[2 * i + 1]]);
                        }
                    }
                    DiagramPartition::new(n, &blocks).unwrap()
                })
            })
    })
}

proptest! {
    #[test]
    fn associative([a, b, c] in triple(5)) {
        let ab = a.multiply(&b).unwrap();
        let bc = b.multiply(&c).unwrap();
        let left = ab.product.multiply(&c).unwrap();
        let right = a.multiply(&bc.product).unwrap();
        prop_assert_eq!(&left.product, &right.product);
        prop_assert_eq!(ab.middle + left.middle, right.middle + bc.middle);
    }

    #[test]
    fn floating_components_are_bounded([a, b, _c] in triple(5)) {
        let p = a.multiply(&b).unwrap();
        prop_assert!(p.middle <= a.n());
    }

    #[test]
    fn middle_connectivity_is_the_kernel_join([a, b, _c] in triple(5)) {
        let n = a.n();
        let join = a.profile().lower_kernel.join(&b.profile().upper_kernel).unwrap();
        let mut g = ProductGraph::new(&a, &b).unwrap();
        for x in 1..=n {
            for y in 1..=n {
                prop_assert_eq!(
                    join.related(x, y),
                    g.connected((Row::Middle, x), (Row::Middle, y))
                );
            }
        }
    }

    #[test]
    fn text_round_trip(a in diagram(6)) {
        let s = a.to_string();
        let back = DiagramPartition::parse_with_n(&s, a.n()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn decomposition_round_trip(a in diagram(6)) {
        if let Ok(parts) = a.decompose_irreducible() {
            prop_assert!(parts.iter().all(|s| s.part.is_irreducible()));
            prop_assert_eq!(DiagramPartition::direct_sum(a.n(), &parts).unwrap(), a);
        }
    }

    #[test]
    fn structural_matches_direct(a in diagram(6)) {
        prop_assert_eq!(is_idempotent_structural(&a), is_idempotent_direct(&a));
    }

    #[test]
    fn partial_brauer_structural_matches_direct(a in brauer_like(6)) {
        prop_assert!(a.belongs_to(MonoidFamily::PB));
        prop_assert_eq!(is_idempotent_structural(&a), is_idempotent_direct(&a));
    }

    #[test]
    fn twist_matches_floating_count(a in diagram(5), m in 0usize..4) {
        let sq = a.multiply(&a).unwrap();
        let direct = sq.product == a && if m == 0 { sq.middle == 0 } else { sq.middle % m == 0 };
        prop_assert_eq!(is_twisted_idempotent(&a, TwistOrder::new(m)), direct);
    }

    #[test]
    fn one_twist_is_plain(a in diagram(5)) {
        prop_assert_eq!(is_twisted_idempotent(&a, TwistOrder::new(1)), is_idempotent_direct(&a));
    }

    #[test]
    fn join_is_least_upper_bound(keys in proptest::collection::vec((0usize..5, 0usize..5), 1..8)) {
        let n = keys.len();
        let classes = |pick: &dyn Fn(&(usize, usize)) -> usize| {
            let mut c: Vec<Vec<usize>> = vec![Vec::new(); 5];
            for (i, k) in keys.iter().enumerate() {
                c[pick(k)].push(i + 1);
            }
            c.retain(|v| !v.is_empty());
            EquivalenceRelation::from_classes(n, &c).unwrap()
        };
        let e = classes(&|k| k.0);
        let f = classes(&|k| k.1);
        let j = e.join(&f).unwrap();
        for x in 1..=n {
            for y in 1..=n {
                if e.related(x, y) || f.related(x, y) {
                    prop_assert!(j.related(x, y));
                }
            }
        }
        prop_assert!(j.class_count() <= e.class_count().min(f.class_count()));
    }
}
