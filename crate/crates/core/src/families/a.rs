//! The family `A(n, k, l, j)`: distinct red parts and distinct even green
//! parts, with `l` greens, `k` reds larger than `l`, and `j` reds at most `l`.

use crate::enumerate::{enumerate_partitions, ConstraintSet};
use crate::families::FamilyStats;
use crate::partition::Partition;
use crate::two_color::{listing_order, TwoColorPartition};

/// Stats of `p` if it belongs to `A`, `None` otherwise.
pub fn is_in_a(p: &TwoColorPartition) -> Option<FamilyStats> {
    let red = p.red_part();
    let green = p.green_part();
    if !red.is_strict() || !green.is_strict() || green.parts().iter().any(|v| v % 2 != 0) {
        return None;
    }
    let l = green.len();
    let j = red.parts().iter().filter(|&&v| v as usize <= l).count();
    Some(FamilyStats {
        n: p.weight(),
        k: red.len() - j,
        l,
        j: Some(j),
    })
}

/// Members of `A` of weight `n`, optionally restricted to given stats, in
/// listing order.
///
/// Reds and greens are generated independently (strict partitions, and
/// doubled strict partitions) and merged.
pub fn enumerate_a(n: u64, k: Option<usize>, l: Option<usize>, j: Option<usize>) -> Vec<TwoColorPartition> {
    let mut out = Vec::new();
    for half in 0..=n / 2 {
        let mut halves = ConstraintSet::distinct();
        if let Some(l) = l {
            halves = halves.with_num_parts(l);
        }
        for h in enumerate_partitions(half, &halves) {
            let green = Partition::new(h.parts().iter().map(|v| 2 * v).collect()).expect("doubling keeps order");
            let gl = green.len();
            for red in enumerate_partitions(n - 2 * half, &ConstraintSet::distinct()) {
                let rj = red.parts().iter().filter(|&&v| v as usize <= gl).count();
                let rk = red.len() - rj;
                if k.is_some_and(|k| k != rk) || j.is_some_and(|j| j != rj) {
                    continue;
                }
                out.push(TwoColorPartition::from_colors(&red, &green).expect("merge of valid parts"));
            }
        }
    }
    out.sort_by(listing_order);
    out
}

/// Brute-force reference: every two-color partition of `n` filtered by
/// [`is_in_a`]. Used to cross-check [`enumerate_a`].
pub fn enumerate_a_by_filter(n: u64) -> Vec<TwoColorPartition> {
    let mut out = Vec::new();
    for g in 0..=n {
        for green in enumerate_partitions(g, &ConstraintSet::none()) {
            for red in enumerate_partitions(n - g, &ConstraintSet::none()) {
                let p = TwoColorPartition::from_colors(&red, &green).expect("merge");
                if is_in_a(&p).is_some() {
                    out.push(p);
                }
            }
        }
    }
    out.sort_by(listing_order);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tc(s: &str) -> TwoColorPartition {
        s.parse().unwrap()
    }

    #[test]
    fn stats_examples() {
        assert_eq!(
            is_in_a(&tc("4g+2r+1r")),
            Some(FamilyStats {
                n: 7,
                k: 1,
                l: 1,
                j: Some(1)
            })
        );
        assert_eq!(
            is_in_a(&TwoColorPartition::empty()),
            Some(FamilyStats {
                n: 0,
                k: 0,
                l: 0,
                j: Some(0)
            })
        );
        assert_eq!(
            is_in_a(&tc("5r+2g")),
            Some(FamilyStats {
                n: 7,
                k: 1,
                l: 1,
                j: Some(0)
            })
        );
        assert_eq!(is_in_a(&tc("3g")), None);
        assert_eq!(is_in_a(&tc("2r+2r")), None);
        assert_eq!(is_in_a(&tc("4g+4g")), None);
        assert!(is_in_a(&tc("4r+4g")).is_some());
    }

    #[test]
    fn a_7_1_1() {
        let mut expected: Vec<_> = ["4g+2r+1r", "4r+2g+1r", "4g+3r", "5r+2g"]
            .iter()
            .map(|s| tc(s))
            .collect();
        expected.sort_by(listing_order);
        assert_eq!(enumerate_a(7, Some(1), Some(1), None), expected);
        let refined: Vec<String> = enumerate_a(7, Some(1), Some(1), Some(1))
            .iter()
            .map(|p| p.to_string())
            .collect();
        // 4g+3r has no red part <= 1, so it sits at j = 0 with 5r+2g
        assert_eq!(refined, ["4g+2r+1r", "4r+2g+1r"]);
    }

    #[test]
    fn small_cases() {
        let three: Vec<String> = enumerate_a(3, None, None, None).iter().map(|p| p.to_string()).collect();
        assert_eq!(three, ["3r", "2g+1r", "2r+1r"]);
        assert_eq!(
            enumerate_a(0, Some(0), Some(0), Some(0)),
            vec![TwoColorPartition::empty()]
        );
    }

    #[test]
    fn generator_matches_filter() {
        for n in 0..=15 {
            assert_eq!(enumerate_a(n, None, None, None), enumerate_a_by_filter(n), "n={n}");
        }
    }

    #[test]
    fn j_refines_kl() {
        for n in 0..=14 {
            for k in 0..=5 {
                for l in 0..=4 {
                    let total = enumerate_a(n, Some(k), Some(l), None).len();
                    let split: usize = (0..=l).map(|j| enumerate_a(n, Some(k), Some(l), Some(j)).len()).sum();
                    assert_eq!(total, split);
                }
            }
        }
    }
}
