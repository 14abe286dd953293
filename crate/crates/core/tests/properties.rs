mod oracle;

use proptest::prelude::*;

use twocolor::bijections::{eta, eta_inverse, phi, phi_inverse, psi, psi_inverse, theta, theta_inverse};
use twocolor::families::{enumerate_ld, LdRules, ProfileWord};
use twocolor::qseries::{Marker, Monomial, TruncatedSeries};
use twocolor::{
    enumerate_partitions, from_triple, to_triple, ConstraintSet, Partition, TripleDecomposition, TwoColorPartition,
};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..12, 0..10).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

/// Random members of `L_d`, built by stacking gaps on top of a smallest part.
fn ld_member(d: u32) -> impl Strategy<Value = TwoColorPartition> {
    prop::collection::vec((0u32..4, any::<bool>()), 0..7).prop_filter_map("forbidden green", move |steps| {
        let rules = LdRules::new(d).unwrap();
        let mut parts = Vec::new();
        let mut value = 0u32;
        for (i, (extra, green)) in steps.iter().enumerate() {
            let gap = if i == 0 {
                1
            } else if *green {
                d + 1
            } else {
                d
            };
            value += gap + extra;
            parts.push(if *green {
                format!("{value}g")
            } else {
                format!("{value}r")
            });
        }
        parts.reverse();
        let text = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        };
        let p: TwoColorPartition = text.parse().ok()?;
        rules.contains(&p).then_some(p)
    })
}

fn word() -> impl Strategy<Value = ProfileWord> {
    "[xyz]{0,12}".prop_filter_map("must be terminal", |s| {
        let w: ProfileWord = s.parse().unwrap();
        w.is_terminal().then_some(w)
    })
}

fn small_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((-3i64..4, 0u16..3, 0u16..3, 0..=order), 0..6).prop_map(move |terms| {
        let terms: Vec<_> = terms
            .into_iter()
            .map(|(c, x, y, e)| (c, Monomial::pow(Marker::X, x) * Monomial::pow(Marker::Y, y), e))
            .collect();
        TruncatedSeries::from_terms(order, &terms).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }

    #[test]
    fn durfee_side_is_conjugation_invariant(p in partition()) {
        prop_assert_eq!(p.durfee_side(), p.conjugate().durfee_side());
        let d = p.durfee_side() as usize;
        prop_assert_eq!(d, oracle::durfee(&p.parts().iter().map(|&v| u64::from(v)).collect::<Vec<_>>()));
    }

    #[test]
    fn triple_round_trip(p in partition()) {
        let t = to_triple(&p);
        prop_assert_eq!(from_triple(&t), p.clone());
        prop_assert_eq!(t.weight(), p.weight());
        let text = t.to_string();
        prop_assert_eq!(text.parse::<TripleDecomposition>().unwrap(), t);
    }

    #[test]
    fn text_and_json_round_trip(p in partition(), q in ld_member(1)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(q.to_string().parse::<TwoColorPartition>().unwrap(), q.clone());
        let json = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<TwoColorPartition>(&json).unwrap(), q);
    }

    #[test]
    fn phi_psi_round_trip(p in ld_member(1)) {
        let w = phi(&p).unwrap();
        prop_assert_eq!(w.weight(), p.weight());
        prop_assert_eq!(phi_inverse(&w).unwrap(), p);
        let pair = psi(&w).unwrap();
        prop_assert_eq!(psi_inverse(&pair).unwrap(), w);
    }

    #[test]
    fn psi_round_trip_on_words(w in word()) {
        let pair = psi(&w).unwrap();
        prop_assert_eq!(pair.to_two_color().weight(), w.weight());
        prop_assert_eq!(psi_inverse(&pair).unwrap(), w);
    }

    #[test]
    fn eta_round_trip(p in ld_member(2)) {
        let t = eta(&p).unwrap();
        prop_assert!(t.is_basis());
        prop_assert_eq!(t.weight(), p.weight());
        prop_assert_eq!(eta_inverse(&t).unwrap(), p);
    }

    #[test]
    fn theta_round_trip(p in ld_member(3)) {
        let mu = theta(&p).unwrap();
        prop_assert!(mu.is_strict());
        prop_assert_eq!(mu.len(), p.red_count() + 2 * p.green_count());
        prop_assert_eq!(theta_inverse(&mu).unwrap(), p);
    }

    #[test]
    fn series_ring_laws(a in small_series(6), b in small_series(6), c in small_series(6)) {
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(ab.clone(), b.try_mul(&a).unwrap());
        prop_assert_eq!(ab.try_mul(&c).unwrap(), a.try_mul(&b.try_mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        let lhs = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
        let rhs = ab.try_add(&a.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_of_unit_series(a in small_series(6)) {
        // force a unit constant term
        let head = a.coeff(0, &Monomial::ONE).unwrap();
        let unit = a
            .try_sub(&TruncatedSeries::from_terms(6, &[(head - 1, Monomial::ONE, 0)]).unwrap())
            .unwrap();
        let nilpotent_free = unit.coefficient(0).unwrap().len() == 1;
        prop_assume!(nilpotent_free);
        let inv = unit.inverse().unwrap();
        prop_assert_eq!(unit.try_mul(&inv).unwrap(), TruncatedSeries::one(6));
    }
}

#[test]
fn partition_numbers_match_dp() {
    // p(n) by the pentagonal recurrence
    let mut p = vec![1i64; 41];
    for n in 1..=40usize {
        let mut total = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[n - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                total += sign * p[n - g2];
            }
        }
        p[n] = total;
    }
    for n in 0..=40u64 {
        let count = enumerate_partitions(n, &ConstraintSet::none()).count() as i64;
        assert_eq!(count, p[n as usize], "p({n})");
    }
}

#[test]
fn streams_are_deterministic() {
    let c = ConstraintSet::distinct().with_max_part(9);
    let a: Vec<_> = enumerate_partitions(25, &c).collect();
    let b: Vec<_> = enumerate_partitions(25, &c).collect();
    assert_eq!(a, b);
    assert_eq!(enumerate_ld(2, 24).unwrap(), enumerate_ld(2, 24).unwrap());
}
