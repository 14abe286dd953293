//! Both sides of the generating-function identities, built to a fixed
//! q-order.
//!
//! Summations stop at the first index whose leading power of `q` exceeds the
//! order; that bound is read off the exponent formula, never found by trial.

use super::pochhammer::{pochhammer, pochhammer_capped, Length, PochhammerSpec};
use super::poly::{Caps, Marker, Monomial};
use super::series::TruncatedSeries;
use super::SeriesError;

type Result<T> = std::result::Result<T, SeriesError>;

fn var(m: Marker) -> Monomial {
    Monomial::var(m)
}

fn pow(m: Marker, e: usize) -> Result<Monomial> {
    Ok(Monomial::pow(m, u16::try_from(e).map_err(|_| SeriesError::Overflow)?))
}

/// `1 / (q^s; q^s)_n` for `n = 0..=max`.
fn inverse_pochhammers(step: usize, max: usize, order: usize) -> Result<Vec<TruncatedSeries>> {
    (0..=max)
        .map(|n| {
            let spec = PochhammerSpec::new(1, Monomial::ONE, step, Length::Finite(n)).with_step(step);
            pochhammer(&spec, order)?.inverse()
        })
        .collect()
}

/// Largest `m` with `f(m) <= order`, for `f` increasing.
fn last_index(order: usize, f: impl Fn(usize) -> usize) -> usize {
    let mut m = 0;
    while f(m + 1) <= order {
        m += 1;
    }
    m
}

fn triangular(n: usize) -> usize {
    n * (n + 1) / 2
}

/// `sum_m prod_{i=1..m} (x + y q^i) q^{e(m)} / (q)_m`.
fn staircase_sum(order: usize, exponent: impl Fn(usize) -> usize) -> Result<TruncatedSeries> {
    let top = last_index(order, &exponent);
    let inv = inverse_pochhammers(1, top, order)?;
    let mut product = TruncatedSeries::one(order);
    let mut total = TruncatedSeries::zero(order);
    for m in 0..=top {
        if m > 0 {
            product = product
                .mul_term(1, var(Marker::X), 0)?
                .try_add(&product.mul_term(1, var(Marker::Y), m)?)?;
        }
        let term = product.mul_term(1, Monomial::ONE, exponent(m))?.try_mul(&inv[m])?;
        total = total.try_add(&term)?;
    }
    Ok(total)
}

/// Red/green partitions with gap conditions of size 1: `x` marks red parts,
/// `y` green parts.
pub fn gf_l1_rhs(order: usize) -> Result<TruncatedSeries> {
    staircase_sum(order, triangular)
}

/// The same shape with `q^{m^2}`, counting the gap-2 family.
pub fn gf_l2_rhs(order: usize) -> Result<TruncatedSeries> {
    staircase_sum(order, |m| m * m)
}

fn a_exponent(k: usize, l: usize) -> usize {
    triangular(k + l) + triangular(l)
}

/// Pairs `(k, l)` whose leading exponent fits in the order.
fn a_cells(order: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for l in 0..=last_index(order, |l| a_exponent(0, l)) {
        for k in 0..=last_index(order, |k| a_exponent(k, l)) {
            if a_exponent(k, l) <= order {
                cells.push((k, l));
            }
        }
    }
    cells
}

/// `sum_{k,l} x^k y^l q^{C(k+l+1,2) + C(l+1,2)} / ((q)_k (q)_l)`.
pub fn gf_a_rhs(order: usize) -> Result<TruncatedSeries> {
    let cells = a_cells(order);
    let top = cells.iter().map(|&(k, l)| k.max(l)).max().unwrap_or(0);
    let inv = inverse_pochhammers(1, top, order)?;
    let mut total = TruncatedSeries::zero(order);
    for (k, l) in cells {
        let mono = pow(Marker::X, k)? * pow(Marker::Y, l)?;
        let term = inv[k].try_mul(&inv[l])?.mul_term(1, mono, a_exponent(k, l))?;
        total = total.try_add(&term)?;
    }
    Ok(total)
}

/// The refinement of [`gf_a_rhs`] with `z` marking the red parts no larger
/// than the number of green parts:
/// `(1/(q)_l)` becomes `(-zq; q)_l / (q^2; q^2)_l`.
pub fn gf_a_refined_rhs(order: usize) -> Result<TruncatedSeries> {
    let cells = a_cells(order);
    let top_k = cells.iter().map(|&(k, _)| k).max().unwrap_or(0);
    let top_l = cells.iter().map(|&(_, l)| l).max().unwrap_or(0);
    let inv_q = inverse_pochhammers(1, top_k, order)?;
    let inv_q2 = inverse_pochhammers(2, top_l, order)?;
    let mut total = TruncatedSeries::zero(order);
    for (k, l) in cells {
        let zs = pochhammer(&PochhammerSpec::new(-1, var(Marker::Z), 1, Length::Finite(l)), order)?;
        let mono = pow(Marker::X, k)? * pow(Marker::Y, l)?;
        let term = zs
            .try_mul(&inv_q[k])?
            .try_mul(&inv_q2[l])?
            .mul_term(1, mono, a_exponent(k, l))?;
        total = total.try_add(&term)?;
    }
    Ok(total)
}

/// Left: `sum_n (-zq; q)_n q^{C(n+1,2)} / (q; q)_n`.
/// Right: `(-q; q)_inf (-zq^2; q^2)_inf`.
pub fn lebesgue_sides(order: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let top = last_index(order, triangular);
    let inv = inverse_pochhammers(1, top, order)?;
    let mut left = TruncatedSeries::zero(order);
    for n in 0..=top {
        let zs = pochhammer(&PochhammerSpec::new(-1, var(Marker::Z), 1, Length::Finite(n)), order)?;
        left = left.try_add(&zs.try_mul(&inv[n])?.mul_term(1, Monomial::ONE, triangular(n))?)?;
    }
    let right =
        pochhammer(&PochhammerSpec::new(-1, Monomial::ONE, 1, Length::Infinite), order)?.try_mul(&pochhammer(
            &PochhammerSpec::new(-1, var(Marker::Z), 2, Length::Infinite).with_step(2),
            order,
        )?)?;
    Ok((left, right))
}

fn pentagonal(k: usize) -> usize {
    (3 * k * k - k) / 2
}

/// Left: `(-aq; q)_inf`.
/// Right: `1 + sum_{k>=1} a^k q^{(3k^2-k)/2} (-aq; q)_{k-1} (1 + a q^{2k}) / (q; q)_k`.
pub fn sylvester_sides(order: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let a = var(Marker::A);
    let left = pochhammer(&PochhammerSpec::new(-1, a, 1, Length::Infinite), order)?;
    let top = last_index(order, pentagonal);
    let inv = inverse_pochhammers(1, top, order)?;
    let mut right = TruncatedSeries::one(order);
    for k in 1..=top {
        let head = pochhammer(&PochhammerSpec::new(-1, a, 1, Length::Finite(k - 1)), order)?;
        let tail = TruncatedSeries::one(order).try_add(&TruncatedSeries::monomial(order, 1, a, 2 * k))?;
        let term = head
            .try_mul(&tail)?
            .try_mul(&inv[k])?
            .mul_term(1, pow(Marker::A, k)?, pentagonal(k))?;
        right = right.try_add(&term)?;
    }
    Ok((left, right))
}

/// Left: `sum_{n<=T} (a; q)_n t^n / (q; q)_n`.
/// Right: `(at; q)_inf / (t; q)_inf`. Both truncated at `t^T`.
pub fn qbinomial_sides(order: usize, t_order: u16) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let caps = Caps::NONE.with(Marker::T, t_order);
    let a = var(Marker::A);
    let t = var(Marker::T);
    let n_max = usize::from(t_order);
    let inv = inverse_pochhammers(1, n_max, order)?;
    let mut left = TruncatedSeries::zero(order).with_caps(caps);
    for (n, inv_n) in inv.iter().enumerate() {
        let an = pochhammer_capped(&PochhammerSpec::new(1, a, 0, Length::Finite(n)), order, caps)?;
        left = left.try_add(&an.try_mul(inv_n)?.mul_term(1, pow(Marker::T, n)?, 0)?)?;
    }
    let at = pochhammer_capped(&PochhammerSpec::new(1, a * t, 0, Length::Infinite), order, caps)?;
    let t_inf = pochhammer_capped(&PochhammerSpec::new(1, t, 0, Length::Infinite), order, caps)?;
    let right = at.try_mul(&t_inf.inverse()?)?;
    Ok((left, right))
}
