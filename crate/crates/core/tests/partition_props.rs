use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use smallpart::partitions::{
    enumerate_overpartitions, enumerate_partitions, stat_basic, t_stat, tau_stat, weighted_sum,
    Filters, Partition, SetId, Weight,
};
use smallpart::qseries::{poch_recip_infinite, poch_scaled, poch_scaled_recip, PochBase};

/// Partition counts by the standard recurrence p(n, k) over the largest part.
fn partition_counts(max: usize) -> Vec<u64> {
    let mut p = vec![0u64; max + 1];
    p[0] = 1;
    for part in 1..=max {
        for n in part..=max {
            p[n] += p[n - part];
        }
    }
    p
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=9, 1..10).prop_map(|v| Partition::from_parts(v).unwrap())
}

#[test]
fn enumeration_counts_match_recurrence() {
    let p = partition_counts(30);
    for n in 0..=30u32 {
        assert_eq!(
            enumerate_partitions(n).count() as u64,
            p[n as usize],
            "n = {n}"
        );
    }
}

#[test]
fn enumeration_is_strictly_decreasing_and_unique() {
    for n in 1..=18u32 {
        let all: Vec<Partition> = enumerate_partitions(n).collect();
        assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        assert!(all.iter().all(|p| p.norm() == u64::from(n)));
    }
}

#[test]
fn euler_distinct_equals_odd_parts() {
    for n in 1..=30u32 {
        let distinct = enumerate_partitions(n)
            .filter(|p| p.parts().windows(2).all(|w| w[0] != w[1]))
            .count();
        let odd = enumerate_partitions(n)
            .filter(|p| p.parts().iter().all(|x| x % 2 == 1))
            .count();
        assert_eq!(distinct, odd, "n = {n}");
    }
}

#[test]
fn overpartitions_are_distinct_and_counted() {
    for n in 1..=14u32 {
        let all: Vec<String> = enumerate_overpartitions(n).map(|o| o.to_string()).collect();
        let unique: BTreeSet<&String> = all.iter().collect();
        assert_eq!(unique.len(), all.len());
        let by_weight = weighted_sum(n, SetId::U, Weight::TwoPowNuD, Filters::default()).unwrap();
        assert_eq!(BigInt::from(all.len()), by_weight);
    }
}

#[test]
fn finite_overpartition_product_matches_restricted_sum() {
    // (-q;q)_n/(q;q)_n against U_n with weight 2^{nu_d}, for N <= 20
    for n in 1..=6u32 {
        let order = 20;
        let mut s = smallpart::qseries::poch_finite(PochBase::neg_q(1), n as usize, order);
        s = s
            .checked_mul(
                &smallpart::qseries::poch_recip(PochBase::q(1), n as usize, order).unwrap(),
            )
            .unwrap();
        for norm in 1..=order as u32 {
            let f = Filters {
                max_part: Some(n),
                ..Filters::default()
            };
            let direct = weighted_sum(norm, SetId::U, Weight::TwoPowNuD, f).unwrap();
            assert_eq!(
                s.int_coeff(norm as usize),
                Some(direct),
                "n = {n}, N = {norm}"
            );
        }
    }
}

#[test]
fn two_parameter_generating_function() {
    // sum_U a^nu b^nu_d q^|pi| = prod_k (1 - (1-b) a q^k) / (1 - a q^k)
    let order = 12;
    for a in 1..=3i64 {
        for b in 1..=3i64 {
            let num = poch_scaled(&BigInt::from((1 - b) * a), 1, 1, order, order);
            let den = poch_scaled_recip(&BigInt::from(a), 1, 1, order, order).unwrap();
            let series = num.checked_mul(&den).unwrap();
            for n in 1..=order as u32 {
                let direct: BigInt = enumerate_partitions(n)
                    .map(|p| {
                        let st = stat_basic(&p).unwrap();
                        BigInt::from(a).pow(st.nu) * BigInt::from(b).pow(st.nu_d)
                    })
                    .sum();
                assert_eq!(
                    series.int_coeff(n as usize),
                    Some(direct),
                    "a={a} b={b} N={n}"
                );
            }
        }
    }
}

#[test]
fn u_star_is_where_t_is_positive() {
    for n in 1..=16u32 {
        for p in enumerate_partitions(n) {
            assert_eq!(t_stat(&p) > 0, SetId::Ustar.contains(&p), "{p}");
        }
    }
}

#[test]
fn p24_shifts_onto_p34() {
    // adding 1 to the smallest part maps P_{2,4} at N onto P_{3,4} at N + 1
    for n in 1..=24u32 {
        let mut image: Vec<Partition> = SetId::P24
            .members(n)
            .into_iter()
            .map(|p| {
                let mut parts = p.parts().to_vec();
                *parts.last_mut().unwrap() += 1;
                Partition::from_parts(parts).unwrap()
            })
            .collect();
        image.sort_by(|a, b| b.parts().cmp(a.parts()));
        assert_eq!(image, SetId::P34.members(n + 1), "N = {n}");
    }
}

#[test]
fn set_generating_functions() {
    let order = 25;
    let gen = poch_recip_infinite(PochBase::q(1), order).unwrap();
    for n in 1..=order as u32 {
        let count = weighted_sum(n, SetId::U, Weight::Unit, Filters::default()).unwrap();
        assert_eq!(gen.int_coeff(n as usize), Some(count));
    }
}

#[test]
fn weight_compatibility_is_enforced() {
    for w in Weight::ALL {
        for s in SetId::ALL {
            let r = weighted_sum(6, s, w, Filters::default());
            assert_eq!(r.is_ok(), w.compatible_with(s), "{w} on {s}");
        }
    }
}

proptest! {
    #[test]
    fn parity_of_parts(p in arb_partition()) {
        let st = stat_basic(&p)?;
        prop_assert_eq!((u64::from(st.nu) + p.norm()) % 2, u64::from(st.nu_e) % 2);
        prop_assert_eq!(st.nu, st.nu_e + st.nu_o);
        prop_assert!(st.nu_d <= st.nu);
    }

    #[test]
    fn conjugation_is_an_involution(p in arb_partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.conjugate(), p.clone());
        prop_assert_eq!(c.norm(), p.norm());
        prop_assert_eq!(c.len() as u32, p.largest().unwrap());
        prop_assert_eq!(c.largest().unwrap(), p.len() as u32);
    }

    #[test]
    fn frequency_notation_round_trips(p in arb_partition()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Partition>()?, p);
    }

    #[test]
    fn tau_is_positive_exactly_when_one_has_odd_frequency(p in arb_partition()) {
        // the first term of tau is [f_1 odd] 2^{nu_d}; later terms only add
        let tau = tau_stat(&p);
        prop_assert!(tau >= BigInt::from(0));
        if p.freq(1) % 2 == 1 {
            let nu_d = p.distinct_sizes().len();
            prop_assert!(tau >= BigInt::one() << nu_d);
        }
    }
}
