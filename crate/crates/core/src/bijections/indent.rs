//! The 2-indented Ferrers graph: strip the odd staircase
//! `(2m-1) + (2m-3) + ... + 1` from an `m`-part partition.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::two_color::TwoColorPartition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndentedPeel {
    /// Number of parts of the source.
    pub m: usize,
    /// `lambda_i - 2m + 2i - 1`, with trailing zeros dropped.
    pub lambda_tilde: Partition,
    /// `lambda_tilde_i` for every green row `i`, largest first.
    pub green_columns: Vec<u32>,
    /// 1-based indices of the green rows, top first.
    pub green_rows: Vec<usize>,
}

pub fn two_indent(p: &TwoColorPartition) -> Result<IndentedPeel> {
    let m = p.len() as i64;
    let mut tilde = Vec::with_capacity(p.len());
    let mut green_columns = Vec::new();
    let mut green_rows = Vec::new();
    for (idx, part) in p.parts().iter().enumerate() {
        let i = idx as i64 + 1;
        let t = i64::from(part.value) - 2 * m + 2 * i - 1;
        if t < 0 {
            return Err(Error::Domain(format!(
                "indented row {i} is negative; input is not in L_2"
            )));
        }
        let t = t as u32;
        if part.is_green() {
            green_columns.push(t);
            green_rows.push(i as usize);
        }
        tilde.push(t);
    }
    while tilde.last() == Some(&0) {
        tilde.pop();
    }
    let lambda_tilde = Partition::new(tilde)
        .map_err(|_| Error::Domain("indented rows are not a partition; input is not in L_2".into()))?;
    Ok(IndentedPeel {
        m: p.len(),
        lambda_tilde,
        green_columns,
        green_rows,
    })
}

impl IndentedPeel {
    /// Cells in the removed staircase, `m^2`.
    pub fn staircase(&self) -> u64 {
        (self.m as u64) * (self.m as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tc(s: &str) -> TwoColorPartition {
        s.parse().unwrap()
    }

    #[test]
    fn peels_examples() {
        let peel = two_indent(&tc("14r+12g+8g+5r+2g")).unwrap();
        assert_eq!(peel.lambda_tilde.to_string(), "5+5+3+2+1");
        assert_eq!(peel.green_columns, vec![5, 3, 1]);
        assert_eq!(peel.lambda_tilde.weight() + peel.staircase(), 41);

        let peel = two_indent(&tc("3r")).unwrap();
        assert_eq!(peel.lambda_tilde.to_string(), "2");
        assert!(peel.green_columns.is_empty());

        let peel = two_indent(&tc("13g+4r+1r")).unwrap();
        assert_eq!(peel.m, 3);
        assert_eq!(peel.lambda_tilde.to_string(), "8+1");
        assert_eq!(peel.green_columns, vec![8]);

        // gaps of exactly 2 peel to empty rows
        let peel = two_indent(&tc("3r+1r")).unwrap();
        assert!(peel.lambda_tilde.is_empty());
        assert_eq!(peel.staircase(), 4);
    }

    #[test]
    fn rejects_crowded_input() {
        assert!(two_indent(&tc("2r+1r")).is_err());
        assert!(two_indent(&tc("5r+4r+1r")).is_err());
    }
}
