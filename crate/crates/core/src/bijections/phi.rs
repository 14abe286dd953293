//! The profile map from `L_1` to words: reading the Ferrers graph border from
//! south-west to north-east, a red part's corner `EN` becomes `x`, a green
//! part's final `EEN` becomes `z`, and every other east step becomes `y`.

use crate::error::{Error, Result};
use crate::families::{LdRules, Letter, ProfileWord};
use crate::two_color::{Color, ColoredPart, TwoColorPartition};

pub fn phi(p: &TwoColorPartition) -> Result<ProfileWord> {
    LdRules::new(1)?.check(p)?;
    let mut letters = Vec::new();
    let mut below = 0u32;
    for part in p.parts().iter().rev() {
        let step = part.value - below;
        let (pad, last) = match part.color {
            Color::Red => (step - 1, Letter::X),
            Color::Green => (step - 2, Letter::Z),
        };
        letters.extend(std::iter::repeat_n(Letter::Y, pad as usize));
        letters.push(last);
        below = part.value;
    }
    let w = ProfileWord::new(letters);
    debug_assert_eq!(w.weight(), p.weight());
    Ok(w)
}

/// Inverse of [`phi`]; rejects words ending in `y`.
pub fn phi_inverse(w: &ProfileWord) -> Result<TwoColorPartition> {
    if !w.is_terminal() {
        return Err(Error::Domain("word ends with y, outside W".into()));
    }
    let mut parts = Vec::new();
    let mut value = 0u32;
    let mut pad = 0u32;
    for &letter in w.letters() {
        match letter {
            Letter::Y => pad += 1,
            Letter::X | Letter::Z => {
                let (step, color) = if letter == Letter::X {
                    (pad + 1, Color::Red)
                } else {
                    (pad + 2, Color::Green)
                };
                value = value.checked_add(step).ok_or(Error::Overflow)?;
                parts.push(ColoredPart { value, color });
                pad = 0;
            }
        }
    }
    parts.reverse();
    let p = TwoColorPartition::new(parts)?;
    debug_assert!(crate::families::is_in_ld(1, &p));
    Ok(p)
}
