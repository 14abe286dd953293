//! `L_3(n, k, l)` to `D(n, k, l)`, strict partitions into `k + 2l` parts
//! with Durfee side `k + l`.
//!
//! After peeling the staircase, each green row `i` contributes the column of
//! the peeled shape at index `lambda_tilde_i` to `pi` (its length is `i`).
//! The remaining columns form `sigma`, and the image is the partition with
//! triple `(m, pi, sigma)`.
//!
//! Since the parts of an `L_3` member are far enough apart, the column of
//! the full Ferrers graph at index `lambda_i` also has length `i`; indexing
//! either shape gives the same `pi`, the set of green row indices.

use crate::bijections::indent::two_indent;
use crate::error::{Error, Result};
use crate::families::LdRules;
use crate::partition::Partition;
use crate::triple::TripleDecomposition;
use crate::two_color::{ColoredPart, TwoColorPartition};

/// The triple built by the forward map, before reassembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaTrace {
    pub m: usize,
    pub pi: Partition,
    pub sigma: Partition,
    /// Whether the smallest source part is 1.
    pub ends_in_one: bool,
    pub image: Partition,
}

pub fn theta_trace(p: &TwoColorPartition) -> Result<ThetaTrace> {
    LdRules::new(3)?.check(p)?;
    let peel = two_indent(p)?;
    let columns = peel.lambda_tilde.conjugate();
    let mut rest = columns.parts().to_vec();
    let mut pi = Vec::with_capacity(peel.green_columns.len());
    for &c in &peel.green_columns {
        let len = columns.part(c as usize);
        let at = rest
            .iter()
            .position(|&x| x == len)
            .expect("column length is a part of the conjugate");
        rest.remove(at);
        pi.push(len);
    }
    // green rows are listed top first, so their lengths ascend
    pi.reverse();
    let pi = Partition::new(pi)?;
    let sigma = Partition::new(rest)?;
    let triple = TripleDecomposition::new(peel.m as u32, pi.clone(), sigma.clone())?;
    Ok(ThetaTrace {
        m: peel.m,
        pi,
        sigma,
        ends_in_one: p.parts().last().is_some_and(|c| c.value == 1),
        image: triple.to_partition(),
    })
}

pub fn theta(p: &TwoColorPartition) -> Result<Partition> {
    let image = theta_trace(p)?.image;
    debug_assert!(image.is_strict() && image.durfee_side() as usize == p.len());
    Ok(image)
}

pub fn theta_inverse(mu: &Partition) -> Result<TwoColorPartition> {
    if !mu.is_strict() {
        return Err(Error::Domain("partition does not have distinct parts".into()));
    }
    let t = TripleDecomposition::from_partition(mu);
    let m = t.d() as usize;
    let side = t.sigma().conjugate();
    let greens = t.pi();
    let parts = (1..=m)
        .map(|r| {
            let greens_at_or_below = greens.parts().iter().filter(|&&g| g as usize >= r).count();
            let value = side.part(r) + greens_at_or_below as u32 + (2 * m - 2 * r + 1) as u32;
            if greens.contains_part(r as u32) {
                ColoredPart::green(value)
            } else {
                ColoredPart::red(value)
            }
        })
        .collect();
    let p = TwoColorPartition::new(parts)?;
    debug_assert!(crate::families::is_in_ld(3, &p), "theta_inverse left L_3: {p}");
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tc(s: &str) -> TwoColorPartition {
        s.parse().unwrap()
    }

    #[test]
    fn hand_example() {
        let trace = theta_trace(&tc("13g+4r+1r")).unwrap();
        assert_eq!(trace.pi.to_string(), "1");
        assert_eq!(trace.sigma.to_string(), "2+1+1+1+1+1+1");
        assert!(trace.ends_in_one);
        assert_eq!(trace.image.to_string(), "10+4+3+1");
        assert_eq!(theta_inverse(&trace.image).unwrap(), tc("13g+4r+1r"));
    }

    #[test]
    fn small_cases() {
        assert_eq!(theta(&TwoColorPartition::empty()).unwrap(), Partition::empty());
        assert_eq!(theta_inverse(&Partition::empty()).unwrap(), TwoColorPartition::empty());
        assert_eq!(theta(&tc("1r")).unwrap().to_string(), "1");
        assert_eq!(theta(&tc("3g")).unwrap().to_string(), "2+1");
    }

    #[test]
    fn two_greens() {
        let trace = theta_trace(&tc("7g+3g")).unwrap();
        assert_eq!(trace.pi.to_string(), "2+1");
        assert_eq!(trace.sigma.to_string(), "2+1");
        assert_eq!(trace.image.to_string(), "4+3+2+1");
        assert_eq!(theta_inverse(&trace.image).unwrap(), tc("7g+3g"));
    }

    #[test]
    fn rejects_outside_domain() {
        assert!(theta(&tc("5r+3r")).is_err());
        assert!(theta(&tc("2g")).is_err());
        assert!(theta_inverse(&"3+3".parse().unwrap()).is_err());
    }
}
