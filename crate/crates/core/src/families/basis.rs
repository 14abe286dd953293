//! Basis partitions `B(n, k, l)`: triples `(k+l, pi, sigma)` where `pi` and
//! `sigma` share no part and `pi` has exactly `l` distinct part values.

use crate::enumerate::{enumerate_partitions, ConstraintSet};
use crate::families::FamilyStats;
use crate::partition::Partition;
use crate::triple::TripleDecomposition;

pub fn is_basis(t: &TripleDecomposition) -> bool {
    t.is_basis()
}

pub(crate) fn distinct_values(p: &Partition) -> usize {
    let mut parts = p.parts().to_vec();
    parts.dedup();
    parts.len()
}

/// The `(n, k, l)` cell a basis triple belongs to, or `None` if `t` is not a
/// basis partition.
pub fn basis_stats(t: &TripleDecomposition) -> Option<FamilyStats> {
    if !t.is_basis() {
        return None;
    }
    let l = distinct_values(t.pi());
    Some(FamilyStats {
        n: t.weight(),
        k: t.d() as usize - l,
        l,
        j: None,
    })
}

/// `B(n, k, l)`, ordered by `|sigma|` ascending, then `pi` and `sigma`
/// lexicographically decreasing.
pub fn enumerate_b(n: u64, k: usize, l: usize) -> Vec<TripleDecomposition> {
    let d = (k + l) as u64;
    let Some(rest) = n.checked_sub(d * d) else {
        return Vec::new();
    };
    let bounded = ConstraintSet::none().with_max_part(d as u32);
    let mut out = Vec::new();
    for s in 0..=rest {
        let sigmas: Vec<Partition> = enumerate_partitions(s, &bounded).collect();
        for pi in enumerate_partitions(rest - s, &bounded) {
            if distinct_values(&pi) != l {
                continue;
            }
            for sigma in &sigmas {
                let t = TripleDecomposition::new(d as u32, pi.clone(), sigma.clone()).expect("parts bounded by d");
                if t.is_basis() {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Every basis partition of `n`, as triples, across all cells.
pub fn enumerate_basis(n: u64) -> Vec<TripleDecomposition> {
    let mut out = Vec::new();
    let mut d = 0u64;
    while d * d <= n {
        for l in 0..=d as usize {
            out.extend(enumerate_b(n, d as usize - l, l));
        }
        d += 1;
    }
    out
}
