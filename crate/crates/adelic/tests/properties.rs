use proptest::prelude::*;
use tamecm_adelic::*;

fn partition_strategy() -> impl Strategy<Value = Partition> {
    (1usize..=9).prop_flat_map(|n| {
        let all = partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn semigroup_is_closed_and_inside_exponents(p in partition_strategy()) {
        let r = exponents(&p);
        let s = semigroup(&r);
        prop_assert!(r.contains(0));
        prop_assert!(!s.contains(0));
        let bound = r.threshold() + 4;
        for a in s.members_up_to(bound) {
            prop_assert!(r.contains(a));
            for b in s.members_up_to(bound) {
                prop_assert!(s.contains(a + b));
            }
        }
    }

    #[test]
    fn generator_exponents_are_positive(p in partition_strategy()) {
        let d = borel_description(&p);
        prop_assert!(!d.generator_exponents().contains(0));
        prop_assert!(d.generator_exponents().threshold() <= p.n());
    }

    #[test]
    fn partition_text_round_trips(p in partition_strategy()) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn hooks_cover_the_diagram(p in partition_strategy()) {
        prop_assert_eq!(p.hooks().iter().map(|h| h.size).sum::<usize>(), p.n());
    }

    #[test]
    fn cofinite_canonical(threshold in 0usize..12, members in proptest::collection::vec(0usize..12, 0..8)) {
        let c = CofiniteSet::new(threshold, members.clone());
        let direct = |k: usize| k >= threshold || members.contains(&k);
        for k in 0..20 {
            prop_assert_eq!(c.contains(k), direct(k));
        }
        prop_assert!(c.threshold() == 0 || !c.contains(c.threshold() - 1));
    }
}
