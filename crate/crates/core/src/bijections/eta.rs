//! `L_2(n, k, l)` to basis partitions `B(n, k, l)`.
//!
//! Peel the staircase, conjugate what is left, and send every column whose
//! length matches the column of some green row's last cell into `pi`. All
//! other columns form `sigma`.

use crate::bijections::indent::two_indent;
use crate::error::{Error, Result};
use crate::families::LdRules;
use crate::partition::Partition;
use crate::triple::TripleDecomposition;
use crate::two_color::{ColoredPart, TwoColorPartition};

pub fn eta(p: &TwoColorPartition) -> Result<TripleDecomposition> {
    LdRules::new(2)?.check(p)?;
    let peel = two_indent(p)?;
    let columns = peel.lambda_tilde.conjugate();
    let green_lengths: Vec<u32> = peel.green_columns.iter().map(|&c| columns.part(c as usize)).collect();
    let (pi, sigma): (Vec<u32>, Vec<u32>) = columns.parts().iter().partition(|len| green_lengths.contains(len));
    let t = TripleDecomposition::new(peel.m as u32, Partition::new(pi)?, Partition::new(sigma)?)?;
    debug_assert!(t.is_basis());
    Ok(t)
}

pub fn eta_inverse(t: &TripleDecomposition) -> Result<TwoColorPartition> {
    if !t.is_basis() {
        return Err(Error::Domain("pi and sigma share a part; not a basis partition".into()));
    }
    let m = t.d() as usize;
    let columns = Partition::from_unsorted(t.pi().parts().iter().chain(t.sigma().parts()).copied().collect())?;
    let rows = columns.conjugate();
    let parts = (1..=m)
        .map(|i| {
            let value = rows.part(i) + (2 * m - 2 * i + 1) as u32;
            if t.pi().contains_part(i as u32) {
                ColoredPart::green(value)
            } else {
                ColoredPart::red(value)
            }
        })
        .collect();
    let p = TwoColorPartition::new(parts)?;
    debug_assert!(crate::families::is_in_ld(2, &p), "eta_inverse left L_2: {p}");
    Ok(p)
}
