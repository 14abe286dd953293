//! Two-color partitions: every part carries a red or green tag.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{checked_weight, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "r")]
    Red,
    #[serde(rename = "g")]
    Green,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Green => 'g',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredPart {
    pub value: u32,
    pub color: Color,
}

impl ColoredPart {
    pub fn red(value: u32) -> Self {
        ColoredPart {
            value,
            color: Color::Red,
        }
    }

    pub fn green(value: u32) -> Self {
        ColoredPart {
            value,
            color: Color::Green,
        }
    }

    pub fn is_green(&self) -> bool {
        self.color == Color::Green
    }
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, self.color.letter())
    }
}

/// Parts in non-increasing order of value; at equal value red comes before
/// green.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTwoColor", into = "RawTwoColor")]
pub struct TwoColorPartition {
    parts: Vec<ColoredPart>,
    weight: u64,
}

#[derive(Serialize, Deserialize)]
struct RawTwoColor {
    parts: Vec<(u32, Color)>,
}

impl TryFrom<RawTwoColor> for TwoColorPartition {
    type Error = Error;

    fn try_from(raw: RawTwoColor) -> Result<Self> {
        TwoColorPartition::new(
            raw.parts
                .into_iter()
                .map(|(value, color)| ColoredPart { value, color })
                .collect(),
        )
    }
}

impl From<TwoColorPartition> for RawTwoColor {
    fn from(p: TwoColorPartition) -> Self {
        RawTwoColor {
            parts: p.parts.into_iter().map(|c| (c.value, c.color)).collect(),
        }
    }
}

impl TwoColorPartition {
    pub fn new(parts: Vec<ColoredPart>) -> Result<Self> {
        for (index, part) in parts.iter().enumerate() {
            if part.value == 0 {
                return Err(Error::ZeroPart { index });
            }
            if index == 0 {
                continue;
            }
            let prev = parts[index - 1];
            if prev.value < part.value {
                return Err(Error::NotNonIncreasing {
                    index,
                    prev: prev.value,
                    next: part.value,
                });
            }
            if prev.value == part.value && prev.color == Color::Green && part.color == Color::Red {
                return Err(Error::TieOrder {
                    index,
                    value: part.value,
                });
            }
        }
        let weight = checked_weight(parts.iter().map(|p| p.value))?;
        Ok(TwoColorPartition { parts, weight })
    }

    /// Merges a red and a green partition into canonical order.
    pub fn from_colors(red: &Partition, green: &Partition) -> Result<Self> {
        let mut parts: Vec<ColoredPart> = red
            .parts()
            .iter()
            .map(|&v| ColoredPart::red(v))
            .chain(green.parts().iter().map(|&v| ColoredPart::green(v)))
            .collect();
        parts.sort_by(|a, b| b.value.cmp(&a.value).then(a.color.cmp(&b.color)));
        TwoColorPartition::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn red_count(&self) -> usize {
        self.parts.iter().filter(|p| p.color == Color::Red).count()
    }

    pub fn green_count(&self) -> usize {
        self.parts.iter().filter(|p| p.color == Color::Green).count()
    }

    pub fn values(&self) -> Partition {
        Partition::new(self.parts.iter().map(|p| p.value).collect())
            .expect("values of a two-color partition are non-increasing")
    }

    pub fn red_part(&self) -> Partition {
        self.of_color(Color::Red)
    }

    pub fn green_part(&self) -> Partition {
        self.of_color(Color::Green)
    }

    fn of_color(&self, color: Color) -> Partition {
        Partition::new(
            self.parts
                .iter()
                .filter(|p| p.color == color)
                .map(|p| p.value)
                .collect(),
        )
        .expect("subsequence of a non-increasing list")
    }
}

/// Order used when listing a family: part lists compared position by
/// position, larger value first, green before red at equal value.
pub fn listing_order(a: &TwoColorPartition, b: &TwoColorPartition) -> Ordering {
    let key = |p: &ColoredPart| (std::cmp::Reverse(p.value), p.color == Color::Red);
    a.parts.iter().map(key).cmp(b.parts.iter().map(key))
}

impl fmt::Display for TwoColorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `12g+8g+6r`; `0`, `ε` and the empty string denote the empty
/// partition.
impl FromStr for TwoColorPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "ε" {
            return Ok(TwoColorPartition::empty());
        }
        let parts = s
            .split('+')
            .map(|tok| {
                let tok = tok.trim();
                let color = match tok.as_bytes().last() {
                    Some(b'r') => Color::Red,
                    Some(b'g') => Color::Green,
                    _ => return Err(Error::Parse(format!("part {tok:?} lacks an r/g color"))),
                };
                let digits = &tok[..tok.len() - 1];
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(format!("bad part {tok:?}")));
                }
                let value = digits
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {tok:?}: {e}")))?;
                Ok(ColoredPart { value, color })
            })
            .collect::<Result<Vec<_>>>()?;
        TwoColorPartition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let p: TwoColorPartition = "12g+8g+6r+4r+3g+1r".parse().unwrap();
        assert_eq!(p.weight(), 34);
        assert_eq!(p.red_count(), 3);
        assert_eq!(p.green_count(), 3);
        assert_eq!(p.to_string(), "12g+8g+6r+4r+3g+1r");
        assert_eq!("0".parse::<TwoColorPartition>().unwrap(), TwoColorPartition::empty());
        assert_eq!(TwoColorPartition::empty().to_string(), "0");
    }

    #[test]
    fn enforces_tie_order() {
        assert!("4r+4g".parse::<TwoColorPartition>().is_ok());
        assert_eq!(
            "4g+4r".parse::<TwoColorPartition>(),
            Err(Error::TieOrder { index: 1, value: 4 })
        );
        assert!("2r+3g".parse::<TwoColorPartition>().is_err());
        assert!("3x".parse::<TwoColorPartition>().is_err());
        assert!("g".parse::<TwoColorPartition>().is_err());
        assert!("0r".parse::<TwoColorPartition>().is_err());
    }

    #[test]
    fn merges_colors() {
        let red: Partition = "4+2+1".parse().unwrap();
        let green: Partition = "4+2".parse().unwrap();
        let p = TwoColorPartition::from_colors(&red, &green).unwrap();
        assert_eq!(p.to_string(), "4r+4g+2r+2g+1r");
        assert_eq!(p.red_part(), red);
        assert_eq!(p.green_part(), green);
    }

    #[test]
    fn json_form() {
        let p: TwoColorPartition = "12g+8g+6r".parse().unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"parts":[[12,"g"],[8,"g"],[6,"r"]]}"#);
        assert_eq!(serde_json::from_str::<TwoColorPartition>(&json).unwrap(), p);
        assert!(serde_json::from_str::<TwoColorPartition>(r#"{"parts":[[1,"g"],[2,"r"]]}"#).is_err());
    }

    #[test]
    fn listing_order_puts_green_first_on_ties() {
        let a: TwoColorPartition = "5g+2r".parse().unwrap();
        let b: TwoColorPartition = "5r+2g".parse().unwrap();
        let c: TwoColorPartition = "6g+1r".parse().unwrap();
        assert_eq!(listing_order(&a, &b), Ordering::Less);
        assert_eq!(listing_order(&c, &a), Ordering::Less);
    }
}
