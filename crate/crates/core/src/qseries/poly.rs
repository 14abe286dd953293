//! Sparse integer polynomials in the fixed marker set `{x, y, z, a, t}`.

use std::collections::BTreeMap;
use std::fmt;

use super::SeriesError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Marker {
    X = 0,
    Y = 1,
    Z = 2,
    A = 3,
    T = 4,
}

impl Marker {
    pub const ALL: [Marker; 5] = [Marker::X, Marker::Y, Marker::Z, Marker::A, Marker::T];

    pub fn symbol(self) -> char {
        ['x', 'y', 'z', 'a', 't'][self as usize]
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.symbol() == c)
    }
}

pub const MARKERS: usize = 5;

/// Exponent vector over `(x, y, z, a, t)`. Ordered by total degree, then
/// lexicographically with higher powers of earlier markers first, so
/// `1 < x < y < x^2 < x*y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u16; MARKERS]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MARKERS]);

    pub fn var(m: Marker) -> Self {
        Self::pow(m, 1)
    }

    pub fn pow(m: Marker, e: u16) -> Self {
        let mut exps = [0; MARKERS];
        exps[m as usize] = e;
        Monomial(exps)
    }

    pub fn exponent(&self, m: Marker) -> u16 {
        self.0[m as usize]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; MARKERS]
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, SeriesError> {
        let mut out = [0u16; MARKERS];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0[i].checked_add(other.0[i]).ok_or(SeriesError::Overflow)?;
        }
        Ok(Monomial(out))
    }

    /// Every capped marker stays within its cap.
    pub fn within(&self, caps: &Caps) -> bool {
        self.0
            .iter()
            .zip(caps.0.iter())
            .all(|(&e, cap)| cap.is_none_or(|c| e <= c))
    }

    /// Positive degree in at least one capped marker.
    pub fn is_nilpotent(&self, caps: &Caps) -> bool {
        self.0.iter().zip(caps.0.iter()).any(|(&e, cap)| cap.is_some() && e > 0)
    }
}

impl std::ops::Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        self.checked_mul(&rhs).expect("marker exponent overflow")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for m in Marker::ALL {
            let e = self.exponent(m);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", m.symbol())?;
            } else {
                write!(f, "{}^{}", m.symbol(), e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Optional maximum degree per marker. Terms above a cap are discarded,
/// which makes every capped marker nilpotent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Caps(pub [Option<u16>; MARKERS]);

impl Caps {
    pub const NONE: Caps = Caps([None; MARKERS]);

    pub fn with(mut self, m: Marker, max_degree: u16) -> Self {
        self.0[m as usize] = Some(max_degree);
        self
    }

    /// Tightest cap of the two, marker by marker.
    pub fn meet(&self, other: &Caps) -> Caps {
        let mut out = [None; MARKERS];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = match (self.0[i], other.0[i]) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
        Caps(out)
    }
}

/// A sparse map from monomials to non-zero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MarkerPoly {
    terms: BTreeMap<Monomial, i64>,
}

impl MarkerPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(1, Monomial::ONE)
    }

    pub fn constant(c: i64) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(coeff: i64, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(mono, coeff);
        }
        MarkerPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE) == Some(&1)
    }

    pub fn coeff(&self, mono: &Monomial) -> i64 {
        self.terms.get(mono).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff * mono`, dropping the entry if it cancels.
    pub fn add_term(&mut self, coeff: i64, mono: Monomial) -> Result<(), SeriesError> {
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(mono).or_insert(0);
        *entry = entry.checked_add(coeff).ok_or(SeriesError::Overflow)?;
        if *entry == 0 {
            self.terms.remove(&mono);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MarkerPoly) -> Result<MarkerPoly, SeriesError> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(c, *m)?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MarkerPoly) -> Result<MarkerPoly, SeriesError> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(c.checked_neg().ok_or(SeriesError::Overflow)?, *m)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<MarkerPoly, SeriesError> {
        MarkerPoly::zero().try_sub(self)
    }

    /// Product with terms outside `caps` discarded.
    pub fn try_mul(&self, other: &MarkerPoly, caps: &Caps) -> Result<MarkerPoly, SeriesError> {
        let mut out = MarkerPoly::zero();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                if !m.within(caps) {
                    continue;
                }
                out.add_term(ca.checked_mul(cb).ok_or(SeriesError::Overflow)?, m)?;
            }
        }
        Ok(out)
    }

    /// Accumulates `self += a * b` without building the intermediate product.
    pub fn add_product(&mut self, a: &MarkerPoly, b: &MarkerPoly, caps: &Caps) -> Result<(), SeriesError> {
        for (ma, &ca) in &a.terms {
            for (mb, &cb) in &b.terms {
                let m = ma.checked_mul(mb)?;
                if m.within(caps) {
                    self.add_term(ca.checked_mul(cb).ok_or(SeriesError::Overflow)?, m)?;
                }
            }
        }
        Ok(())
    }

    pub fn truncate(&self, caps: &Caps) -> MarkerPoly {
        MarkerPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.within(caps))
                .map(|(m, c)| (*m, *c))
                .collect(),
        }
    }

    /// Substitutes an integer for `marker`.
    pub fn substitute(&self, marker: Marker, value: i64) -> Result<MarkerPoly, SeriesError> {
        let mut out = MarkerPoly::zero();
        for (m, &c) in &self.terms {
            let e = m.exponent(marker);
            let factor = value.checked_pow(u32::from(e)).ok_or(SeriesError::Overflow)?;
            let mut reduced = *m;
            reduced.0[marker as usize] = 0;
            out.add_term(c.checked_mul(factor).ok_or(SeriesError::Overflow)?, reduced)?;
        }
        Ok(out)
    }

    /// Inverse in the ring where capped markers are nilpotent. Requires the
    /// constant coefficient to be 1 and every other term to involve a capped
    /// marker.
    pub fn inverse(&self, caps: &Caps) -> Result<MarkerPoly, SeriesError> {
        if self.coeff(&Monomial::ONE) != 1 || self.terms.keys().any(|m| !m.is_one() && !m.is_nilpotent(caps)) {
            return Err(SeriesError::NonUnit(self.to_string()));
        }
        // 1 / (1 + e) = sum (-e)^r, terminating because e is nilpotent
        let minus_e = MarkerPoly::one().try_sub(self)?;
        let mut out = MarkerPoly::one();
        let mut power = MarkerPoly::one();
        loop {
            power = power.try_mul(&minus_e, caps)?;
            if power.is_zero() {
                return Ok(out);
            }
            out = out.try_add(&power)?;
        }
    }
}

impl fmt::Display for MarkerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            match (mag, m.is_one()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => write!(f, "{m}")?,
                _ => write!(f, "{mag}*{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MarkerPoly {
        MarkerPoly::term(1, Monomial::var(Marker::X))
    }

    fn y() -> MarkerPoly {
        MarkerPoly::term(1, Monomial::var(Marker::Y))
    }

    #[test]
    fn display() {
        let p = x().try_add(&y()).unwrap().try_mul(&x(), &Caps::NONE).unwrap();
        assert_eq!(p.to_string(), "x^2 + x*y");
        let q = MarkerPoly::constant(4)
            .try_mul(&x().try_mul(&y(), &Caps::NONE).unwrap(), &Caps::NONE)
            .unwrap();
        assert_eq!(q.to_string(), "4*x*y");
        assert_eq!(MarkerPoly::one().try_sub(&x()).unwrap().to_string(), "1 - x");
        assert_eq!(MarkerPoly::constant(-3).to_string(), "-3");
        assert_eq!(MarkerPoly::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = x().try_sub(&x()).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn overflow_is_reported() {
        let big = MarkerPoly::constant(i64::MAX);
        assert_eq!(big.try_add(&MarkerPoly::one()), Err(SeriesError::Overflow));
        assert_eq!(
            big.try_mul(&MarkerPoly::constant(2), &Caps::NONE),
            Err(SeriesError::Overflow)
        );
    }

    #[test]
    fn nilpotent_inverse() {
        let caps = Caps::NONE.with(Marker::T, 3);
        let t = MarkerPoly::term(1, Monomial::var(Marker::T));
        let one_minus_t = MarkerPoly::one().try_sub(&t).unwrap();
        let inv = one_minus_t.inverse(&caps).unwrap();
        assert_eq!(inv.to_string(), "1 + t + t^2 + t^3");
        assert!(one_minus_t.inverse(&Caps::NONE).is_err());
        assert!(MarkerPoly::constant(2).inverse(&caps).is_err());
    }

    #[test]
    fn substitution() {
        let p = x()
            .try_add(&MarkerPoly::constant(3))
            .unwrap()
            .try_mul(&x(), &Caps::NONE)
            .unwrap();
        assert_eq!(p.substitute(Marker::X, 2).unwrap(), MarkerPoly::constant(10));
    }
}
