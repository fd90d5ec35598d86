use mckay::glgu::{enumerate_3prime_labels, full_bijection, full_bijection_inverse, Epsilon, GlguLabel, GroupParams};
use mckay::mckay_sym::{phi, phi_inverse, SymNormalizerLabel};
use mckay::partition::{
    char_degree, combine_core_quotient, core_tower, is_pprime_degree, p_core_and_quotient, pprime_partitions, Partition,
};
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max, 0..=max)
        .prop_map(move |mut parts| {
            let mut total = 0;
            parts.retain(|&x| {
                total += x;
                total <= max
            });
            Partition::from_unsorted(parts)
        })
}

proptest! {
    #[test]
    fn core_quotient_roundtrip(lambda in partition(60), p in prop::sample::select(vec![2usize, 3, 5, 7])) {
        let (core, quotient) = p_core_and_quotient(&lambda, p);
        prop_assert_eq!(quotient.len(), p);
        prop_assert_eq!(combine_core_quotient(&core, &quotient, p).unwrap(), lambda);
    }

    #[test]
    fn tower_roundtrip(lambda in partition(40)) {
        prop_assert_eq!(core_tower(&lambda, 3).to_partition().unwrap(), lambda);
    }

    #[test]
    fn macdonald_matches_degree(lambda in partition(30), p in prop::sample::select(vec![2usize, 3, 5])) {
        let coprime = !(char_degree(&lambda) % BigUint::from(p)).is_zero();
        prop_assert_eq!(is_pprime_degree(&lambda, p), coprime);
    }

    #[test]
    fn phi_roundtrip_with_json(n in 1usize..=120, pick in any::<prop::sample::Index>()) {
        let domain = pprime_partitions(n, 3);
        let lambda = &domain[pick.index(domain.len())];
        let label = phi(lambda).unwrap();
        let json = serde_json::to_string(&label).unwrap();
        let back: SymNormalizerLabel = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&phi_inverse(&back).unwrap(), lambda);
    }

    #[test]
    fn glgu_roundtrip_with_json(
        eps in prop::sample::select(vec![Epsilon::Plus, Epsilon::Minus]),
        q in prop::sample::select(vec![2u64, 4, 5, 7, 8, 11]),
        n in 1usize..=7,
        pick in any::<prop::sample::Index>(),
    ) {
        let labels = enumerate_3prime_labels(GroupParams::new(eps, q).unwrap(), n);
        let label = &labels[pick.index(labels.len())];
        let back: GlguLabel = serde_json::from_str(&serde_json::to_string(label).unwrap()).unwrap();
        prop_assert_eq!(&back, label);
        prop_assert_eq!(&full_bijection_inverse(&full_bijection(label).unwrap()).unwrap(), label);
    }
}
