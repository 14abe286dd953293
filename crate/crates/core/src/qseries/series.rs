//! Power series in `q` truncated at a fixed order, with [`MarkerPoly`]
//! coefficients.

use std::fmt;

use super::poly::{Caps, Marker, MarkerPoly, Monomial};
use super::SeriesError;

/// `sum_{n <= order} c_n q^n`. Terms above `order`, and terms exceeding a
/// marker cap, are dropped by every operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    caps: Caps,
    coeffs: Vec<MarkerPoly>,
}

/// The first coefficient at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub q_exp: usize,
    pub monomial: Monomial,
    pub left: i64,
    pub right: i64,
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of {}*q^{}: {} vs {}",
            self.monomial, self.q_exp, self.left, self.right
        )
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            caps: Caps::NONE,
            coeffs: vec![MarkerPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 1, Monomial::ONE, 0)
    }

    /// `coeff * mono * q^q_exp`, or zero if `q_exp > order`.
    pub fn monomial(order: usize, coeff: i64, mono: Monomial, q_exp: usize) -> Self {
        let mut s = Self::zero(order);
        if q_exp <= order {
            s.coeffs[q_exp] = MarkerPoly::term(coeff, mono);
        }
        s
    }

    /// Builds from `(coeff, monomial, q exponent)` triples.
    pub fn from_terms(order: usize, terms: &[(i64, Monomial, usize)]) -> Result<Self, SeriesError> {
        let mut s = Self::zero(order);
        for &(c, m, e) in terms {
            if e <= order {
                s.coeffs[e].add_term(c, m)?;
            }
        }
        Ok(s)
    }

    pub fn with_cap(mut self, marker: Marker, max_degree: u16) -> Self {
        self.caps = self.caps.with(marker, max_degree);
        let caps = self.caps;
        for c in &mut self.coeffs {
            *c = c.truncate(&caps);
        }
        self
    }

    /// Applies every cap in `caps` on top of the existing ones.
    pub fn with_caps(mut self, caps: Caps) -> Self {
        self.caps = self.caps.meet(&caps);
        let caps = self.caps;
        for c in &mut self.coeffs {
            *c = c.truncate(&caps);
        }
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn coefficient(&self, n: usize) -> Option<&MarkerPoly> {
        self.coeffs.get(n)
    }

    pub fn coefficients(&self) -> &[MarkerPoly] {
        &self.coeffs
    }

    /// Exact coefficient of `mono * q^q_exp`.
    pub fn coeff(&self, q_exp: usize, mono: &Monomial) -> Result<i64, SeriesError> {
        self.coeffs
            .get(q_exp)
            .map(|p| p.coeff(mono))
            .ok_or(SeriesError::BeyondOrder {
                requested: q_exp,
                order: self.order,
            })
    }

    fn check_order(&self, other: &TruncatedSeries) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_order(other)?;
        let caps = self.caps.meet(&other.caps);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| Ok(a.try_add(b)?.truncate(&caps)))
            .collect::<Result<_, SeriesError>>()?;
        Ok(TruncatedSeries {
            order: self.order,
            caps,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.try_add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<TruncatedSeries, SeriesError> {
        Ok(TruncatedSeries {
            order: self.order,
            caps: self.caps,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect::<Result<_, _>>()?,
        })
    }

    /// Cauchy product, truncated.
    pub fn try_mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_order(other)?;
        let caps = self.caps.meet(&other.caps);
        let mut coeffs = vec![MarkerPoly::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j].add_product(a, b, &caps)?;
                }
            }
        }
        Ok(TruncatedSeries {
            order: self.order,
            caps,
            coeffs,
        })
    }

    /// Multiplies by the single term `coeff * mono * q^shift`.
    pub fn mul_term(&self, coeff: i64, mono: Monomial, shift: usize) -> Result<TruncatedSeries, SeriesError> {
        let factor = MarkerPoly::term(coeff, mono);
        let mut coeffs = vec![MarkerPoly::zero(); self.order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + shift > self.order {
                break;
            }
            coeffs[i + shift] = c.try_mul(&factor, &self.caps)?;
        }
        Ok(TruncatedSeries {
            order: self.order,
            caps: self.caps,
            coeffs,
        })
    }

    /// Multiplies by `1 - coeff * mono * q^shift` in place of a full product.
    pub fn mul_one_minus(&self, coeff: i64, mono: Monomial, shift: usize) -> Result<TruncatedSeries, SeriesError> {
        self.try_sub(&self.mul_term(coeff, mono, shift)?)
    }

    /// Multiplicative inverse. The constant term must be invertible: exactly
    /// 1, or 1 plus terms in capped (hence nilpotent) markers.
    pub fn inverse(&self) -> Result<TruncatedSeries, SeriesError> {
        let c0_inv = self.coeffs[0].inverse(&self.caps)?;
        let mut out = vec![MarkerPoly::zero(); self.order + 1];
        out[0] = c0_inv.clone();
        for n in 1..=self.order {
            let mut acc = MarkerPoly::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() && !out[n - i].is_zero() {
                    acc.add_product(&self.coeffs[i], &out[n - i], &self.caps)?;
                }
            }
            out[n] = acc.neg()?.try_mul(&c0_inv, &self.caps)?;
        }
        Ok(TruncatedSeries {
            order: self.order,
            caps: self.caps,
            coeffs: out,
        })
    }

    /// Substitutes an integer for a marker in every coefficient.
    pub fn substitute(&self, marker: Marker, value: i64) -> Result<TruncatedSeries, SeriesError> {
        Ok(TruncatedSeries {
            order: self.order,
            caps: self.caps,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.substitute(marker, value))
                .collect::<Result<_, _>>()?,
        })
    }

    /// First `(q exponent, monomial)` where the series differ, scanning by
    /// q exponent and then by monomial order.
    pub fn first_difference(&self, other: &TruncatedSeries) -> Result<Option<Difference>, SeriesError> {
        self.check_order(other)?;
        for (n, (a, b)) in self.coeffs.iter().zip(&other.coeffs).enumerate() {
            if a == b {
                continue;
            }
            let mut monos: Vec<Monomial> = a.terms().chain(b.terms()).map(|(m, _)| *m).collect();
            monos.sort();
            for m in monos {
                if a.coeff(&m) != b.coeff(&m) {
                    return Ok(Some(Difference {
                        q_exp: n,
                        monomial: m,
                        left: a.coeff(&m),
                        right: b.coeff(&m),
                    }));
                }
            }
        }
        Ok(None)
    }
}

/// One line per q exponent: `q^n: <poly>`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "q^{n}: {c}")?;
        }
        Ok(())
    }
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    a.try_add(b)
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    a.try_mul(b)
}

pub fn series_inverse(s: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    s.inverse()
}

pub fn coeff(s: &TruncatedSeries, q_exp: usize, mono: &Monomial) -> Result<i64, SeriesError> {
    s.coeff(q_exp, mono)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_poly(order: usize, coeffs: &[i64]) -> TruncatedSeries {
        let terms: Vec<_> = coeffs.iter().enumerate().map(|(i, &c)| (c, Monomial::ONE, i)).collect();
        TruncatedSeries::from_terms(order, &terms).unwrap()
    }

    fn plain(s: &TruncatedSeries) -> Vec<i64> {
        (0..=s.order()).map(|n| s.coeff(n, &Monomial::ONE).unwrap()).collect()
    }

    #[test]
    fn products() {
        let p = q_poly(2, &[1, 1]).try_mul(&q_poly(2, &[1, -1])).unwrap();
        assert_eq!(plain(&p), [1, 0, -1]);

        let x = Monomial::var(Marker::X);
        let y = Monomial::var(Marker::Y);
        let a = TruncatedSeries::from_terms(2, &[(1, Monomial::ONE, 0), (1, x, 1)]).unwrap();
        let b = TruncatedSeries::from_terms(2, &[(1, Monomial::ONE, 0), (1, y, 1)]).unwrap();
        assert_eq!(a.try_mul(&b).unwrap().to_string(), "q^0: 1\nq^1: x + y\nq^2: x*y\n");

        // subset sums of {1, 2, 3}
        let mut prod = TruncatedSeries::one(6);
        for i in 1..=3 {
            let mut f = vec![0; i + 1];
            f[0] = 1;
            f[i] = 1;
            prod = prod.try_mul(&q_poly(6, &f)).unwrap();
        }
        assert_eq!(plain(&prod), [1, 1, 1, 2, 1, 1, 1]);
    }

    #[test]
    fn inverses() {
        assert_eq!(plain(&q_poly(3, &[1, -1]).inverse().unwrap()), [1, 1, 1, 1]);

        let t = Monomial::var(Marker::T);
        let s = TruncatedSeries::from_terms(3, &[(1, Monomial::ONE, 0), (-1, t, 1)]).unwrap();
        assert_eq!(s.inverse().unwrap().to_string(), "q^0: 1\nq^1: t\nq^2: t^2\nq^3: t^3\n");

        // (q;q)_3, inverted: partitions into parts <= 3
        let mut poch = TruncatedSeries::one(4);
        for i in 1..=3 {
            poch = poch.mul_one_minus(1, Monomial::ONE, i).unwrap();
        }
        assert_eq!(plain(&poch.inverse().unwrap()), [1, 1, 2, 3, 4]);
    }

    #[test]
    fn errors() {
        let a = TruncatedSeries::one(2);
        let b = TruncatedSeries::one(3);
        assert_eq!(a.try_mul(&b), Err(SeriesError::OrderMismatch { left: 2, right: 3 }));
        assert!(matches!(q_poly(2, &[2, 1]).inverse(), Err(SeriesError::NonUnit(_))));
        assert_eq!(
            a.coeff(3, &Monomial::ONE),
            Err(SeriesError::BeyondOrder { requested: 3, order: 2 })
        );
        let big = q_poly(1, &[i64::MAX]);
        assert_eq!(big.try_add(&big), Err(SeriesError::Overflow));
    }

    #[test]
    fn reports_first_difference() {
        let a = q_poly(3, &[1, 2, 3]);
        let b = q_poly(3, &[1, 2, 4]);
        let d = a.first_difference(&b).unwrap().unwrap();
        assert_eq!((d.q_exp, d.left, d.right), (2, 3, 4));
        assert_eq!(d.to_string(), "coefficient of 1*q^2: 3 vs 4");
        assert!(a.first_difference(&a).unwrap().is_none());
    }
}
