//! The gap-restricted families `L_d(n)`.
//!
//! A two-color partition lies in `L_d` when its parts are numerically
//! distinct, a red part exceeds the next part by at least `d`, a green part
//! exceeds the next part by at least `d + 1`, and neither `1_g` nor
//! `(d-1)_g` occurs. The gap rules bind consecutive parts only; the smallest
//! part is limited by the forbidden green values alone.
//!
//! Only `d` in 1..=3 carries a theorem. Larger `d` is accepted and the rules
//! are applied literally.

use crate::error::{Error, Result};
use crate::two_color::{Color, ColoredPart, TwoColorPartition};

/// The rule set defining `L_d`. Fields are public so that deliberately
/// perturbed rule sets can be built for mutation checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LdRules {
    pub d: u32,
    pub red_gap: u32,
    pub green_gap: u32,
    pub ban_green_one: bool,
    pub ban_green_d_minus_one: bool,
}

/// A single-rule perturbation of [`LdRules`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LdMutation {
    RedGapDown,
    RedGapUp,
    GreenGapDown,
    GreenGapUp,
    AllowGreenOne,
    AllowGreenDMinusOne,
}

impl LdMutation {
    pub const ALL: [LdMutation; 6] = [
        LdMutation::RedGapDown,
        LdMutation::RedGapUp,
        LdMutation::GreenGapDown,
        LdMutation::GreenGapUp,
        LdMutation::AllowGreenOne,
        LdMutation::AllowGreenDMinusOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LdMutation::RedGapDown => "red-gap-down",
            LdMutation::RedGapUp => "red-gap-up",
            LdMutation::GreenGapDown => "green-gap-down",
            LdMutation::GreenGapUp => "green-gap-up",
            LdMutation::AllowGreenOne => "allow-green-one",
            LdMutation::AllowGreenDMinusOne => "allow-green-d-minus-one",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == name)
    }
}

impl LdRules {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("d must be at least 1".into()));
        }
        Ok(LdRules {
            d,
            red_gap: d,
            green_gap: d + 1,
            ban_green_one: true,
            ban_green_d_minus_one: true,
        })
    }

    pub fn mutated(mut self, m: LdMutation) -> Self {
        match m {
            LdMutation::RedGapDown => self.red_gap = self.red_gap.saturating_sub(1),
            LdMutation::RedGapUp => self.red_gap += 1,
            LdMutation::GreenGapDown => self.green_gap = self.green_gap.saturating_sub(1),
            LdMutation::GreenGapUp => self.green_gap += 1,
            LdMutation::AllowGreenOne => self.ban_green_one = false,
            LdMutation::AllowGreenDMinusOne => self.ban_green_d_minus_one = false,
        }
        self
    }

    fn gap(&self, color: Color) -> u32 {
        match color {
            Color::Red => self.red_gap,
            Color::Green => self.green_gap,
        }
    }

    fn green_allowed(&self, value: u32) -> bool {
        !(self.ban_green_one && value == 1 || self.ban_green_d_minus_one && self.d >= 2 && value == self.d - 1)
    }

    /// Checks membership, naming the first violated rule.
    pub fn check(&self, p: &TwoColorPartition) -> Result<()> {
        let parts = p.parts();
        for (i, pair) in parts.windows(2).enumerate() {
            let (cur, next) = (pair[0], pair[1]);
            let idx = i + 1;
            if cur.value == next.value {
                return Err(Error::Domain(format!("parts not numerically distinct at part {idx}")));
            }
            let diff = cur.value - next.value;
            if diff < self.gap(cur.color) {
                let rule = match cur.color {
                    Color::Red => "red gap < d",
                    Color::Green => "green gap < d+1",
                };
                return Err(Error::Domain(format!("{rule} at part {idx}")));
            }
        }
        for (i, part) in parts.iter().enumerate() {
            if part.color == Color::Green && !self.green_allowed(part.value) {
                return Err(Error::Domain(format!(
                    "forbidden green part {}g at part {}",
                    part.value,
                    i + 1
                )));
            }
        }
        Ok(())
    }

    pub fn contains(&self, p: &TwoColorPartition) -> bool {
        self.check(p).is_ok()
    }

    /// All members of weight `n`, in listing order.
    pub fn enumerate(&self, n: u64) -> Vec<TwoColorPartition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.extend(n, None, &mut stack, &mut out);
        out
    }

    fn extend(
        &self,
        remaining: u64,
        prev: Option<ColoredPart>,
        stack: &mut Vec<ColoredPart>,
        out: &mut Vec<TwoColorPartition>,
    ) {
        if remaining == 0 {
            out.push(TwoColorPartition::new(stack.clone()).expect("gap rules keep order"));
            return;
        }
        let cap = match prev {
            None => remaining,
            Some(p) => {
                let gap = self.gap(p.color).max(1);
                match p.value.checked_sub(gap) {
                    Some(c) => remaining.min(u64::from(c)),
                    None => return,
                }
            }
        };
        for v in (1..=cap as u32).rev() {
            // green first, so that ties on value list green before red
            for color in [Color::Green, Color::Red] {
                if color == Color::Green && !self.green_allowed(v) {
                    continue;
                }
                let part = ColoredPart { value: v, color };
                stack.push(part);
                self.extend(remaining - u64::from(v), Some(part), stack, out);
                stack.pop();
            }
        }
    }
}

pub fn is_in_ld(d: u32, p: &TwoColorPartition) -> bool {
    LdRules::new(d).is_ok_and(|r| r.contains(p))
}

/// `L_d(n)` in listing order.
pub fn enumerate_ld(d: u32, n: u64) -> Result<Vec<TwoColorPartition>> {
    Ok(LdRules::new(d)?.enumerate(n))
}

/// `L_d(n, k, l)`: members with `k` red and `l` green parts.
pub fn enumerate_ld_stats(d: u32, n: u64, k: usize, l: usize) -> Result<Vec<TwoColorPartition>> {
    Ok(enumerate_ld(d, n)?
        .into_iter()
        .filter(|p| p.red_count() == k && p.green_count() == l)
        .collect())
}
