//! `(a; q^s)_n = (1 - a)(1 - a q^s) ... (1 - a q^{s(n-1)})` for a base of the
//! form `c * monomial * q^e`.

use super::poly::{Caps, Monomial};
use super::series::TruncatedSeries;
use super::SeriesError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochhammerSpec {
    pub coeff: i64,
    pub monomial: Monomial,
    pub q_exp: usize,
    /// The `s` in `(a; q^s)`; must be positive.
    pub step: usize,
    pub length: Length,
}

impl PochhammerSpec {
    /// `(c * monomial * q^e; q)_n`.
    pub fn new(coeff: i64, monomial: Monomial, q_exp: usize, length: Length) -> Self {
        PochhammerSpec {
            coeff,
            monomial,
            q_exp,
            step: 1,
            length,
        }
    }

    pub fn with_step(mut self, step: usize) -> Self {
        self.step = step;
        self
    }

    /// `(q; q)_n`.
    pub fn q(length: Length) -> Self {
        Self::new(1, Monomial::ONE, 1, length)
    }

    /// Number of factors that can touch exponents up to `order`: the
    /// factor `i` starts at `q^{e + s i}`.
    fn factors(&self, order: usize) -> usize {
        let reach = if self.q_exp > order {
            0
        } else {
            (order - self.q_exp) / self.step + 1
        };
        match self.length {
            Length::Finite(n) => n.min(reach),
            Length::Infinite => reach,
        }
    }
}

pub fn pochhammer(spec: &PochhammerSpec, order: usize) -> Result<TruncatedSeries, SeriesError> {
    pochhammer_capped(spec, order, Caps::NONE)
}

/// As [`pochhammer`], with marker caps in force throughout.
pub fn pochhammer_capped(spec: &PochhammerSpec, order: usize, caps: Caps) -> Result<TruncatedSeries, SeriesError> {
    if spec.step == 0 {
        return Err(SeriesError::InvalidSpec("Pochhammer step must be positive".into()));
    }
    let mut out = TruncatedSeries::one(order).with_caps(caps);
    for i in 0..spec.factors(order) {
        out = out.mul_one_minus(spec.coeff, spec.monomial, spec.q_exp + spec.step * i)?;
    }
    Ok(out)
}

/// `1 / (q; q)_n`, the generating function for partitions into parts at
/// most `n`.
pub fn inverse_q_pochhammer(n: Length, order: usize) -> Result<TruncatedSeries, SeriesError> {
    pochhammer(&PochhammerSpec::q(n), order)?.inverse()
}
