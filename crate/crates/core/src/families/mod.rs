//! Membership predicates and exhaustive enumerators for the restricted
//! partition families.

mod a;
mod basis;
mod durfee;
mod ld;
mod word;

pub use a::{enumerate_a, enumerate_a_by_filter, is_in_a};
pub use basis::{basis_stats, enumerate_b, enumerate_basis, is_basis};
pub use durfee::{enumerate_d, strict_stats};
pub use ld::{enumerate_ld, enumerate_ld_stats, is_in_ld, LdMutation, LdRules};
pub use word::{classify_z, enumerate_w, is_in_w, word_weight, Letter, Parity, ProfileWord};

use serde::{Deserialize, Serialize};

/// Cell coordinates of an object in one of the families.
///
/// `k` counts red parts for `L_d`, red parts larger than `l` for `A`, and
/// `x` letters for `W`. `l` counts green parts (or `z` letters). `j` counts
/// red parts at most `l` in `A`, or odd `z` letters in `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyStats {
    pub n: u64,
    pub k: usize,
    pub l: usize,
    pub j: Option<usize>,
}

/// `(n, #red, #green)` of a two-color partition, the `L_d` cell.
pub fn ld_stats(p: &crate::two_color::TwoColorPartition) -> FamilyStats {
    FamilyStats {
        n: p.weight(),
        k: p.red_count(),
        l: p.green_count(),
        j: None,
    }
}
