//! `D(n, k, l)`: strict partitions of `n` into `k + 2l` parts whose Durfee
//! square has side `k + l`.

use crate::enumerate::{enumerate_partitions, ConstraintSet};
use crate::families::FamilyStats;
use crate::partition::Partition;

pub fn enumerate_d(n: u64, k: usize, l: usize) -> Vec<Partition> {
    let c = ConstraintSet::distinct()
        .with_num_parts(k + 2 * l)
        .with_durfee_side((k + l) as u32);
    enumerate_partitions(n, &c).collect()
}

/// The `(n, k, l)` cell of a strict partition. Every strict partition with
/// `p` parts and Durfee side `d` has `d <= p <= 2d`, so it lands in exactly
/// one cell.
pub fn strict_stats(p: &Partition) -> Option<FamilyStats> {
    if !p.is_strict() {
        return None;
    }
    let d = p.durfee_side() as usize;
    let parts = p.len();
    Some(FamilyStats {
        n: p.weight(),
        k: 2 * d - parts,
        l: parts - d,
        j: None,
    })
}
