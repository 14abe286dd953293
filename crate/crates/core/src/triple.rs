//! Durfee-square decomposition `(d, pi, sigma)` of a partition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A partition written as its Durfee side `d`, the subpartition `pi` below
/// the Durfee square, and the subpartition `sigma` below the Durfee square of
/// the conjugate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTriple", into = "RawTriple")]
pub struct TripleDecomposition {
    d: u32,
    pi: Partition,
    sigma: Partition,
}

#[derive(Serialize, Deserialize)]
struct RawTriple {
    d: u32,
    pi: Vec<u32>,
    sigma: Vec<u32>,
}

impl TryFrom<RawTriple> for TripleDecomposition {
    type Error = Error;

    fn try_from(raw: RawTriple) -> Result<Self> {
        TripleDecomposition::new(raw.d, Partition::new(raw.pi)?, Partition::new(raw.sigma)?)
    }
}

impl From<TripleDecomposition> for RawTriple {
    fn from(t: TripleDecomposition) -> Self {
        RawTriple {
            d: t.d,
            pi: t.pi.into_parts(),
            sigma: t.sigma.into_parts(),
        }
    }
}

impl TripleDecomposition {
    /// Rejects triples where a part of `pi` or `sigma` exceeds `d`.
    pub fn new(d: u32, pi: Partition, sigma: Partition) -> Result<Self> {
        for part in [pi.largest(), sigma.largest()].into_iter().flatten() {
            if part > d {
                return Err(Error::PartExceedsDurfee { part, d });
            }
        }
        // weight = d^2 + |pi| + |sigma| must fit
        u64::from(d)
            .checked_mul(u64::from(d))
            .and_then(|w| w.checked_add(pi.weight()))
            .and_then(|w| w.checked_add(sigma.weight()))
            .ok_or(Error::Overflow)?;
        Ok(TripleDecomposition { d, pi, sigma })
    }

    pub fn empty() -> Self {
        TripleDecomposition {
            d: 0,
            pi: Partition::empty(),
            sigma: Partition::empty(),
        }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn pi(&self) -> &Partition {
        &self.pi
    }

    pub fn sigma(&self) -> &Partition {
        &self.sigma
    }

    pub fn weight(&self) -> u64 {
        u64::from(self.d) * u64::from(self.d) + self.pi.weight() + self.sigma.weight()
    }

    /// Decomposes `p` around its Durfee square.
    pub fn from_partition(p: &Partition) -> Self {
        let d = p.durfee_side();
        let below = |q: &Partition| {
            Partition::new(q.parts()[d as usize..].to_vec()).expect("suffix of a partition is a partition")
        };
        TripleDecomposition {
            d,
            pi: below(p),
            sigma: below(&p.conjugate()),
        }
    }

    /// Rebuilds the partition: row `i <= d` has `d + sigma'_i` cells, and the
    /// rows below the square are `pi`.
    pub fn to_partition(&self) -> Partition {
        let side = self.sigma.conjugate();
        let mut parts: Vec<u32> = (1..=self.d as usize).map(|i| self.d + side.part(i)).collect();
        parts.extend_from_slice(self.pi.parts());
        Partition::new(parts).expect("valid triple reconstructs a partition")
    }

    /// No integer is a part of both `pi` and `sigma`.
    pub fn is_basis(&self) -> bool {
        self.pi.parts().iter().all(|&p| !self.sigma.contains_part(p))
    }
}

pub fn to_triple(p: &Partition) -> TripleDecomposition {
    TripleDecomposition::from_partition(p)
}

pub fn from_triple(t: &TripleDecomposition) -> Partition {
    t.to_partition()
}

fn fmt_bare(p: &Partition, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_empty() {
        Ok(())
    } else {
        write!(f, "{p}")
    }
}

/// `(d; pi; sigma)` with empty components left blank, e.g. `(0; ; )`.
impl fmt::Display for TripleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; ", self.d)?;
        fmt_bare(&self.pi, f)?;
        f.write_str("; ")?;
        fmt_bare(&self.sigma, f)?;
        f.write_str(")")
    }
}

impl FromStr for TripleDecomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("triple must be parenthesised: {s:?}")))?;
        let fields: Vec<&str> = inner.split(';').collect();
        let [d, pi, sigma] = fields[..] else {
            return Err(Error::Parse(format!("triple needs three ';'-separated fields: {s:?}")));
        };
        let d = d.trim();
        if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad Durfee side {d:?}")));
        }
        let d = d
            .parse::<u32>()
            .map_err(|e| Error::Parse(format!("bad Durfee side {d:?}: {e}")))?;
        TripleDecomposition::new(d, pi.parse()?, sigma.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(d: u32, pi: &str, sigma: &str) -> TripleDecomposition {
        TripleDecomposition::new(d, p(pi), p(sigma)).unwrap()
    }

    #[test]
    fn decomposes_running_example() {
        assert_eq!(to_triple(&p("12+8+6+4+3+1")), t(4, "3+1", "3+3+2+2+1+1+1+1"));
        assert_eq!(to_triple(&Partition::empty()), TripleDecomposition::empty());
        assert_eq!(to_triple(&p("6+6+6+6+5+5+3+2+2")), t(5, "5+3+2+2", "4"));
    }

    #[test]
    fn reconstructs() {
        assert_eq!(from_triple(&t(5, "5+3+2+2", "4")), p("6+6+6+6+5+5+3+2+2"));
        assert_eq!(from_triple(&TripleDecomposition::empty()), Partition::empty());
        assert_eq!(from_triple(&t(4, "3+1", "3+3+2+2+1+1+1+1")), p("12+8+6+4+3+1"));
    }

    #[test]
    fn rejects_oversized_parts() {
        assert_eq!(
            TripleDecomposition::new(2, p("3"), Partition::empty()),
            Err(Error::PartExceedsDurfee { part: 3, d: 2 })
        );
        assert!(TripleDecomposition::new(0, Partition::empty(), p("1")).is_err());
    }

    #[test]
    fn basis_predicate() {
        assert!(t(5, "5+3+2+2", "4").is_basis());
        assert!(t(3, "3+2", "1").is_basis());
        assert!(!t(2, "1+1", "1").is_basis());
    }

    #[test]
    fn text_form() {
        assert_eq!(t(5, "5+3+2+2", "4").to_string(), "(5; 5+3+2+2; 4)");
        assert_eq!(TripleDecomposition::empty().to_string(), "(0; ; )");
        assert_eq!(
            "(3; 3+1+1+1; )".parse::<TripleDecomposition>().unwrap(),
            t(3, "3+1+1+1", "")
        );
        assert!("(3; 4; )".parse::<TripleDecomposition>().is_err());
        assert!("3; 1; 1".parse::<TripleDecomposition>().is_err());
        assert!("(3; 1)".parse::<TripleDecomposition>().is_err());
    }

    #[test]
    fn json_form() {
        let json = serde_json::to_string(&t(4, "3+1", "3+3+2+2+1+1+1+1")).unwrap();
        assert_eq!(json, r#"{"d":4,"pi":[3,1],"sigma":[3,3,2,2,1,1,1,1]}"#);
        assert!(serde_json::from_str::<TripleDecomposition>(r#"{"d":1,"pi":[2],"sigma":[]}"#).is_err());
    }
}
