//! The map from words in `W(n, k, l, j)` to red/green partition pairs in
//! `A(n, k, l, j)`.
//!
//! Forward: with `z` positions `s_1 > s_2 > ... > s_l`, set
//! `sigma_i = s_i - #{x up to s_i} + #{even z up to s_i}` and let `v_i` be
//! `x` for an odd `z`, `y` for an even one. The word
//! `u_hat = v_1 ... v_l u'`, where `u'` is `u` with every `z` turned into
//! `y`, is read (trailing `y` dropped) as an all-red profile to give `pi`.
//!
//! Inverse: the `x` letters of `u_hat` sit exactly at the parts of `pi`, which
//! fixes the prefix (hence every `z` parity) and the `x` positions of `u'`.
//! Scanning the `z` letters left to right, `sigma_i` then pins down how many
//! `y` letters precede each one:
//! `#y before s_i = sigma_i - #odd z before - 2 #even z before - (1 if odd else 2)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bijections::phi::phi_inverse;
use crate::error::{Error, Result};
use crate::families::{Letter, Parity, ProfileWord};
use crate::partition::Partition;
use crate::two_color::TwoColorPartition;

/// A strict red partition `pi` and a strict all-even green partition
/// `sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair", into = "RawPair")]
pub struct PartitionPair {
    pi: Partition,
    sigma: Partition,
}

#[derive(Serialize, Deserialize)]
struct RawPair {
    pi: Vec<u32>,
    sigma: Vec<u32>,
}

impl TryFrom<RawPair> for PartitionPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        PartitionPair::new(Partition::new(raw.pi)?, Partition::new(raw.sigma)?)
    }
}

impl From<PartitionPair> for RawPair {
    fn from(p: PartitionPair) -> Self {
        RawPair {
            pi: p.pi.into_parts(),
            sigma: p.sigma.into_parts(),
        }
    }
}

impl PartitionPair {
    pub fn new(pi: Partition, sigma: Partition) -> Result<Self> {
        if !pi.is_strict() {
            return Err(Error::Domain("pi must have distinct parts".into()));
        }
        if !sigma.is_strict() {
            return Err(Error::Domain("sigma must have distinct parts".into()));
        }
        if let Some(odd) = sigma.parts().iter().find(|&&v| v % 2 == 1) {
            return Err(Error::Domain(format!("sigma part {odd} is odd")));
        }
        Ok(PartitionPair { pi, sigma })
    }

    pub fn pi(&self) -> &Partition {
        &self.pi
    }

    pub fn sigma(&self) -> &Partition {
        &self.sigma
    }

    /// Colors `pi` red and `sigma` green.
    pub fn to_two_color(&self) -> TwoColorPartition {
        TwoColorPartition::from_colors(&self.pi, &self.sigma).expect("valid parts merge")
    }

    pub fn from_two_color(p: &TwoColorPartition) -> Result<Self> {
        PartitionPair::new(p.red_part(), p.green_part())
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi={} sigma={}", self.pi, self.sigma)
    }
}

/// Parses `pi=8+6+4+2 sigma=8+4+2`.
impl FromStr for PartitionPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut fields = s.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse(format!("expected 'pi=... sigma=...', got {s:?}")));
        };
        let pi = a
            .strip_prefix("pi=")
            .ok_or_else(|| Error::Parse(format!("missing pi= in {s:?}")))?;
        let sigma = b
            .strip_prefix("sigma=")
            .ok_or_else(|| Error::Parse(format!("missing sigma= in {s:?}")))?;
        PartitionPair::new(pi.parse()?, sigma.parse()?)
    }
}

/// Intermediate values of the forward map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiTrace {
    /// `sigma_1 > ... > sigma_l`, in the order the `z` letters are met from
    /// the right.
    pub sigma_parts: Vec<u64>,
    /// `v_1 ... v_l`.
    pub prefix: Vec<Letter>,
    /// `v_1 ... v_l u'`, untrimmed.
    pub hat_u: ProfileWord,
    pub pair: PartitionPair,
}

pub fn psi_trace(w: &ProfileWord) -> Result<PsiTrace> {
    if !w.is_terminal() {
        return Err(Error::Domain("word ends with y, outside W".into()));
    }
    let letters = w.letters();
    let parities = w.classify_z();
    // prefix counts of x and even z, indexed by 1-based position
    let mut x_upto = vec![0u64; letters.len() + 1];
    let mut even_upto = vec![0u64; letters.len() + 1];
    let mut even_at = vec![false; letters.len() + 1];
    for &(pos, parity) in &parities {
        even_at[pos] = parity == Parity::Even;
    }
    for (i, &l) in letters.iter().enumerate() {
        x_upto[i + 1] = x_upto[i] + u64::from(l == Letter::X);
        even_upto[i + 1] = even_upto[i] + u64::from(even_at[i + 1]);
    }

    let mut sigma_parts = Vec::with_capacity(parities.len());
    let mut prefix = Vec::with_capacity(parities.len());
    for &(s, parity) in parities.iter().rev() {
        sigma_parts.push(s as u64 - x_upto[s] + even_upto[s]);
        prefix.push(match parity {
            Parity::Odd => Letter::X,
            Parity::Even => Letter::Y,
        });
    }

    let mut hat = prefix.clone();
    hat.extend(letters.iter().map(|&l| if l == Letter::Z { Letter::Y } else { l }));
    let hat_u = ProfileWord::new(hat);
    let pi = phi_inverse(&hat_u.clone().trim_trailing_y())?.values();
    let sigma = Partition::new(
        sigma_parts
            .iter()
            .map(|&v| u32::try_from(v).map_err(|_| Error::Overflow))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let pair = PartitionPair::new(pi, sigma)?;
    Ok(PsiTrace {
        sigma_parts,
        prefix,
        hat_u,
        pair,
    })
}

pub fn psi(w: &ProfileWord) -> Result<PartitionPair> {
    let pair = psi_trace(w)?.pair;
    debug_assert_eq!(
        crate::families::is_in_a(&pair.to_two_color()).map(|s| (s.n, s.k, s.l, s.j)),
        {
            let s = w.stats();
            Some((s.n, s.k, s.l, s.j))
        }
    );
    Ok(pair)
}

pub fn psi_inverse(pair: &PartitionPair) -> Result<ProfileWord> {
    let sigma = pair.sigma.parts();
    let l = sigma.len();
    let pi = pair.pi.parts();

    // non-x slots of u' (0-based, in reading order) that hold a z
    let mut z_slots = Vec::with_capacity(l);
    let (mut odd_before, mut even_before) = (0i64, 0i64);
    for i in (1..=l).rev() {
        let odd = pair.pi.contains_part(i as u32);
        let tail = if odd { 1 } else { 2 };
        let ys = i64::from(sigma[i - 1]) - odd_before - 2 * even_before - tail;
        let slot = ys + (l - i) as i64;
        if ys < 0 || z_slots.last().is_some_and(|&prev| slot <= prev) {
            return Err(Error::Domain(format!(
                "no position for the z with sigma part {}",
                sigma[i - 1]
            )));
        }
        z_slots.push(slot);
        if odd {
            odd_before += 1;
        } else {
            even_before += 1;
        }
    }

    let x_positions: BTreeSet<u64> = pi
        .iter()
        .filter(|&&p| p as usize > l)
        .map(|&p| u64::from(p) - l as u64)
        .collect();
    let last_x = x_positions.iter().next_back().copied().unwrap_or(0);
    let z_set: BTreeSet<i64> = z_slots.iter().copied().collect();
    let last_slot = z_slots.last().copied();

    let mut letters = Vec::new();
    let mut slot = 0i64;
    let mut pos = 1u64;
    loop {
        let slots_done = last_slot.is_none_or(|s| slot > s);
        if pos > last_x && slots_done {
            break;
        }
        if x_positions.contains(&pos) {
            letters.push(Letter::X);
        } else {
            letters.push(if z_set.contains(&slot) { Letter::Z } else { Letter::Y });
            slot += 1;
        }
        pos += 1;
    }
    let w = ProfileWord::new(letters);
    debug_assert_eq!(psi_trace(&w).map(|t| t.pair).as_ref(), Ok(pair));
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ProfileWord {
        s.parse().unwrap()
    }

    #[test]
    fn running_example() {
        let u = w("xzxyxzyyz");
        let pair = psi(&u).unwrap();
        assert_eq!(pair.to_string(), "pi=8+6+4+2 sigma=8+4+2");
        let stats = crate::families::is_in_a(&pair.to_two_color()).unwrap();
        assert_eq!((stats.n, stats.k, stats.l, stats.j), (34, 3, 3, Some(1)));
        assert_eq!(psi_inverse(&pair).unwrap(), u);
    }

    #[test]
    fn trace_of_running_example() {
        let t = psi_trace(&w("xzxyxzyyz")).unwrap();
        assert_eq!(t.sigma_parts, vec![8, 4, 2]);
        assert_eq!(t.prefix, vec![Letter::Y, Letter::X, Letter::Y]);
        assert_eq!(t.hat_u.to_string(), "yxyxyxyxyyyy");
    }

    #[test]
    fn small_cases() {
        let empty = psi(&ProfileWord::empty()).unwrap();
        assert!(empty.pi().is_empty() && empty.sigma().is_empty());
        assert_eq!(psi_inverse(&empty).unwrap(), ProfileWord::empty());
        let x = psi(&w("x")).unwrap();
        assert_eq!(x.to_string(), "pi=1 sigma=0");
        assert!(psi(&w("xy")).is_err());
    }

    #[test]
    fn pair_text_and_validation() {
        let pair: PartitionPair = "pi=8+6+4+2 sigma=8+4+2".parse().unwrap();
        assert_eq!(pair.to_string(), "pi=8+6+4+2 sigma=8+4+2");
        assert!("pi=3+3 sigma=0".parse::<PartitionPair>().is_err());
        assert!("pi=3 sigma=3".parse::<PartitionPair>().is_err());
        assert!("pi=3".parse::<PartitionPair>().is_err());
        assert!("sigma=2 pi=3".parse::<PartitionPair>().is_err());
    }
}
