//! Profile words over the alphabet `{x, y, z}` and the word classes
//! `W(n, k, l, j)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilyStats;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
    Z,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
            Letter::Z => 'z',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// A finite word over `{x, y, z}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWord", into = "RawWord")]
pub struct ProfileWord {
    letters: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct RawWord {
    word: String,
}

impl TryFrom<RawWord> for ProfileWord {
    type Error = Error;

    fn try_from(raw: RawWord) -> Result<Self> {
        raw.word.parse()
    }
}

impl From<ProfileWord> for RawWord {
    fn from(w: ProfileWord) -> Self {
        RawWord { word: w.to_string() }
    }
}

impl ProfileWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        ProfileWord { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Empty, or ends in `x` or `z`.
    pub fn is_terminal(&self) -> bool {
        !matches!(self.letters.last(), Some(Letter::Y))
    }

    /// `sum_i [w_i != y] * (i + #{t <= i : w_t = z})`, 1-based positions.
    pub fn weight(&self) -> u64 {
        let mut zs = 0u64;
        let mut total = 0u64;
        for (i, &l) in self.letters.iter().enumerate() {
            if l == Letter::Z {
                zs += 1;
            }
            if l != Letter::Y {
                total += i as u64 + 1 + zs;
            }
        }
        total
    }

    /// Positions (1-based) and parities of every `z`. A `z` is odd when an
    /// odd number of earlier letters are `y` or odd `z`.
    pub fn classify_z(&self) -> Vec<(usize, Parity)> {
        let mut odd_count = false;
        let mut out = Vec::new();
        for (i, &l) in self.letters.iter().enumerate() {
            match l {
                Letter::Y => odd_count = !odd_count,
                Letter::Z => {
                    if odd_count {
                        out.push((i + 1, Parity::Odd));
                        odd_count = !odd_count;
                    } else {
                        out.push((i + 1, Parity::Even));
                    }
                }
                Letter::X => {}
            }
        }
        out
    }

    pub fn odd_z_count(&self) -> usize {
        self.classify_z().iter().filter(|(_, p)| *p == Parity::Odd).count()
    }

    /// `(n, #x, #z, #odd z)`.
    pub fn stats(&self) -> FamilyStats {
        FamilyStats {
            n: self.weight(),
            k: self.count(Letter::X),
            l: self.count(Letter::Z),
            j: Some(self.odd_z_count()),
        }
    }

    /// Drops trailing `y` letters.
    pub fn trim_trailing_y(mut self) -> Self {
        while self.letters.last() == Some(&Letter::Y) {
            self.letters.pop();
        }
        self
    }
}

pub fn word_weight(w: &ProfileWord) -> u64 {
    w.weight()
}

pub fn classify_z(w: &ProfileWord) -> Vec<(usize, Parity)> {
    w.classify_z()
}

/// Membership in `W(n, k, l)` or, when `j` is given, `W(n, k, l, j)`.
pub fn is_in_w(w: &ProfileWord, n: u64, k: usize, l: usize, j: Option<usize>) -> bool {
    w.is_terminal()
        && w.weight() == n
        && w.count(Letter::X) == k
        && w.count(Letter::Z) == l
        && j.is_none_or(|j| w.odd_z_count() == j)
}

/// Every word of `W` with weight `n` (optionally filtered by stats), in
/// lexicographic order with `x < y < z`. Built by direct search over words,
/// independent of any partition map.
pub fn enumerate_w(n: u64, k: Option<usize>, l: Option<usize>, j: Option<usize>) -> Vec<ProfileWord> {
    let mut out = Vec::new();
    let mut letters = Vec::new();
    search(n, 0, 0, &mut letters, &mut out);
    out.retain(|w| {
        k.is_none_or(|k| w.count(Letter::X) == k)
            && l.is_none_or(|l| w.count(Letter::Z) == l)
            && j.is_none_or(|j| w.odd_z_count() == j)
    });
    out
}

fn search(n: u64, weight: u64, zs: u64, letters: &mut Vec<Letter>, out: &mut Vec<ProfileWord>) {
    if weight == n && !matches!(letters.last(), Some(Letter::Y)) {
        out.push(ProfileWord::new(letters.clone()));
        return;
    }
    let pos = letters.len() as u64 + 1;
    // any further non-y letter lands at position >= pos and adds >= pos + zs
    if weight + pos + zs > n {
        return;
    }
    for letter in [Letter::X, Letter::Y, Letter::Z] {
        let add = match letter {
            Letter::X => pos + zs,
            Letter::Y => 0,
            Letter::Z => pos + zs + 1,
        };
        if weight + add > n {
            continue;
        }
        letters.push(letter);
        search(n, weight + add, zs + u64::from(letter == Letter::Z), letters, out);
        letters.pop();
    }
}

impl fmt::Display for ProfileWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

/// Parses the bare letter string; `ε` denotes the empty word.
impl FromStr for ProfileWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" {
            return Ok(ProfileWord::empty());
        }
        s.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                'z' => Ok(Letter::Z),
                other => Err(Error::Parse(format!("letter {other:?} not in {{x, y, z}}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ProfileWord::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ProfileWord {
        s.parse().unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(w("xzxyxzyyz").weight(), 34);
        assert_eq!(ProfileWord::empty().weight(), 0);
        assert_eq!(w("yyy").weight(), 0);
        assert_eq!(w("xyx").weight(), 4);
    }

    #[test]
    fn z_parities() {
        use Parity::*;
        assert_eq!(w("xzxyxzyyz").classify_z(), vec![(2, Even), (6, Odd), (9, Even)]);
        assert!(ProfileWord::empty().classify_z().is_empty());
        assert_eq!(w("zz").classify_z(), vec![(1, Even), (2, Even)]);
        // an odd z flips the running parity for later letters
        assert_eq!(w("yzz").classify_z(), vec![(2, Odd), (3, Even)]);
    }

    #[test]
    fn membership() {
        let u = w("xzxyxzyyz");
        assert!(is_in_w(&u, 34, 3, 3, Some(1)));
        assert!(!is_in_w(&u, 34, 3, 3, Some(0)));
        assert!(is_in_w(&u, 34, 3, 3, None));
        let xy = w("xy");
        for n in 0..5 {
            assert!(!is_in_w(&xy, n, 1, 0, None));
        }
        assert!(is_in_w(&ProfileWord::empty(), 0, 0, 0, Some(0)));
    }

    #[test]
    fn enumerates_small_weights() {
        let strs = |n| {
            enumerate_w(n, None, None, None)
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(strs(0), [""]);
        assert_eq!(strs(1), ["x"]);
        assert_eq!(strs(2), ["yx", "z"]);
        assert_eq!(strs(3), ["xx", "yyx", "yz"]);
        let found = enumerate_w(34, Some(3), Some(3), Some(1));
        assert!(found.contains(&w("xzxyxzyyz")));
        assert!(found.iter().all(|v| is_in_w(v, 34, 3, 3, Some(1))));
    }

    #[test]
    fn rejects_foreign_letters() {
        assert!("xa".parse::<ProfileWord>().is_err());
        assert_eq!("ε".parse::<ProfileWord>().unwrap(), ProfileWord::empty());
        let json = serde_json::to_string(&w("xzy")).unwrap();
        assert_eq!(json, r#"{"word":"xzy"}"#);
    }
}
