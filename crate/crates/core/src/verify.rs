//! Exhaustive sweeps that check identities up to a bound, cell by cell.
//!
//! Family sweeps compare counts from two independent enumerations. Bijection
//! sweeps push every source object through the map, validate the image and
//! the round trip, and count distinct images per target cell against an
//! enumeration of the target. Series sweeps compare coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bijections::{eta, eta_inverse, phi, phi_inverse, psi_inverse, psi_trace, theta_inverse, theta_trace};
use crate::enumerate::{enumerate_partitions, ConstraintSet};
use crate::error::{Error, Result};
use crate::families::{
    basis_stats, enumerate_a, enumerate_basis, enumerate_w, is_in_a, strict_stats, LdMutation, LdRules, Letter,
};
use crate::qseries::{
    gf_a_refined_rhs, gf_a_rhs, gf_l1_rhs, gf_l2_rhs, lebesgue_sides, qbinomial_sides, sylvester_sides, Marker,
    Monomial, TruncatedSeries,
};
use crate::two_color::TwoColorPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selector {
    Thm11,
    Thm12,
    Thm13,
    Thm15,
    Thm16,
    Thm17,
    Phi,
    Psi,
    Eta,
    Theta,
    Lebesgue,
    Sylvester,
    QBinomial,
    Gf2,
    Gf3,
    Gf8,
    GfARef,
}

impl Selector {
    pub const ALL: [Selector; 17] = [
        Selector::Thm11,
        Selector::Thm12,
        Selector::Thm13,
        Selector::Thm15,
        Selector::Thm16,
        Selector::Thm17,
        Selector::Phi,
        Selector::Psi,
        Selector::Eta,
        Selector::Theta,
        Selector::Lebesgue,
        Selector::Sylvester,
        Selector::QBinomial,
        Selector::Gf2,
        Selector::Gf3,
        Selector::Gf8,
        Selector::GfARef,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Selector::Thm11 => "1.1",
            Selector::Thm12 => "1.2",
            Selector::Thm13 => "1.3",
            Selector::Thm15 => "1.5",
            Selector::Thm16 => "1.6",
            Selector::Thm17 => "1.7",
            Selector::Phi => "phi",
            Selector::Psi => "psi",
            Selector::Eta => "eta",
            Selector::Theta => "theta",
            Selector::Lebesgue => "lebesgue",
            Selector::Sylvester => "sylvester",
            Selector::QBinomial => "qbinomial",
            Selector::Gf2 => "gf2",
            Selector::Gf3 => "gf3",
            Selector::Gf8 => "gf8",
            Selector::GfARef => "gfAref",
        }
    }

    /// Whether the sweep is bounded by a q-order rather than a weight.
    pub fn uses_order(self) -> bool {
        matches!(
            self,
            Selector::Lebesgue
                | Selector::Sylvester
                | Selector::QBinomial
                | Selector::Gf2
                | Selector::Gf3
                | Selector::Gf8
                | Selector::GfARef
        )
    }

    /// The `d` of the gap family the sweep enumerates, if any. Only these
    /// selectors accept a rule mutation.
    pub fn gap_family(self) -> Option<u32> {
        match self {
            Selector::Thm11 | Selector::Thm15 | Selector::Phi | Selector::Gf2 => Some(1),
            Selector::Thm12 | Selector::Thm16 | Selector::Eta | Selector::Gf8 => Some(2),
            Selector::Thm13 | Selector::Thm17 | Selector::Theta => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Selector::ALL
            .into_iter()
            .find(|sel| sel.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown selector {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    pub max_n: u64,
    pub order: usize,
    pub t_order: u16,
    pub mutation: Option<LdMutation>,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            max_n: 20,
            order: 20,
            t_order: 12,
            mutation: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub params: String,
    pub expected: i64,
    pub actual: i64,
}

impl Cell {
    pub fn matches(&self) -> bool {
        self.expected == self.actual
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}): expected {}, actual {}",
            self.params, self.expected, self.actual
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub selector: String,
    pub status: Status,
    pub cells: Vec<Cell>,
    pub first_mismatch: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates cells and structural problems for one sweep.
#[derive(Default)]
struct Sweep {
    cells: Vec<Cell>,
    problems: Vec<String>,
}

impl Sweep {
    fn compare<K: Ord + Clone>(
        &mut self,
        expected: &BTreeMap<K, i64>,
        actual: &BTreeMap<K, i64>,
        label: impl Fn(&K) -> String,
    ) {
        let keys: BTreeSet<&K> = expected.keys().chain(actual.keys()).collect();
        for k in keys {
            self.cells.push(Cell {
                params: label(k),
                expected: expected.get(k).copied().unwrap_or(0),
                actual: actual.get(k).copied().unwrap_or(0),
            });
        }
    }

    fn problem(&mut self, msg: String) {
        self.problems.push(msg);
    }

    fn finish(self, selector: Selector) -> Report {
        let first_mismatch = self
            .problems
            .first()
            .cloned()
            .or_else(|| self.cells.iter().find(|c| !c.matches()).map(|c| format!("cell {c}")));
        Report {
            selector: selector.name().to_string(),
            status: if first_mismatch.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            cells: self.cells,
            first_mismatch,
        }
    }
}

fn tally<K: Ord>(keys: impl IntoIterator<Item = K>) -> BTreeMap<K, i64> {
    let mut out = BTreeMap::new();
    for k in keys {
        *out.entry(k).or_insert(0) += 1;
    }
    out
}

fn nkl((n, k, l): &(u64, usize, usize)) -> String {
    format!("{n},{k},{l}")
}

fn nklj((n, k, l, j): &(u64, usize, usize, usize)) -> String {
    format!("{n},{k},{l},{j}")
}

fn rules(d: u32, mutation: Option<LdMutation>) -> Result<LdRules> {
    let r = LdRules::new(d)?;
    Ok(match mutation {
        Some(m) => r.mutated(m),
        None => r,
    })
}

fn colored_cell(p: &TwoColorPartition) -> (u64, usize, usize) {
    (p.weight(), p.red_count(), p.green_count())
}

fn strict_partitions(n: u64) -> Vec<crate::partition::Partition> {
    enumerate_partitions(n, &ConstraintSet::distinct()).collect()
}

/// Runs one sweep. `progress` receives a line per completed `n` (or once
/// for series sweeps).
pub fn verify(selector: Selector, params: &VerifyParams, progress: &mut dyn FnMut(&str)) -> Result<Report> {
    if params.mutation.is_some() && selector.gap_family().is_none() {
        return Err(Error::Domain(format!(
            "selector {selector} does not enumerate a gap family; mutations do not apply"
        )));
    }
    let mut sweep = Sweep::default();
    match selector {
        Selector::Thm11 | Selector::Thm12 | Selector::Thm13 => {
            let d = selector.gap_family().expect("gap family");
            let r = rules(d, params.mutation)?;
            for n in 0..=params.max_n {
                let expected = match selector {
                    Selector::Thm11 => enumerate_a(n, None, None, None).len(),
                    Selector::Thm12 => enumerate_basis(n).len(),
                    _ => strict_partitions(n).len(),
                } as i64;
                let actual = r.enumerate(n).len() as i64;
                sweep.compare(&BTreeMap::from([(n, expected)]), &BTreeMap::from([(n, actual)]), |n| {
                    n.to_string()
                });
                progress(&format!("{selector}: n={n} done"));
            }
        }
        Selector::Thm15 | Selector::Thm16 | Selector::Thm17 => {
            let d = selector.gap_family().expect("gap family");
            let r = rules(d, params.mutation)?;
            for n in 0..=params.max_n {
                let expected = match selector {
                    Selector::Thm15 => tally(enumerate_a(n, None, None, None).iter().map(|p| {
                        let s = is_in_a(p).expect("generated member");
                        (n, s.k, s.l)
                    })),
                    Selector::Thm16 => tally(enumerate_basis(n).iter().map(|t| {
                        let s = basis_stats(t).expect("generated member");
                        (n, s.k, s.l)
                    })),
                    _ => tally(strict_partitions(n).iter().map(|p| {
                        let s = strict_stats(p).expect("strict");
                        (n, s.k, s.l)
                    })),
                };
                let actual = tally(r.enumerate(n).iter().map(colored_cell));
                sweep.compare(&expected, &actual, nkl);
                progress(&format!("{selector}: n={n} done"));
            }
        }
        Selector::Phi => {
            let r = rules(1, params.mutation)?;
            for n in 0..=params.max_n {
                let expected = tally(enumerate_w(n, None, None, None).iter().map(|w| {
                    let s = w.stats();
                    (n, s.k, s.l)
                }));
                let mut seen = BTreeSet::new();
                let mut actual = BTreeMap::new();
                for p in r.enumerate(n) {
                    match check_phi(&p) {
                        Ok(w) => {
                            if seen.insert(w) {
                                *actual.entry(colored_cell(&p)).or_insert(0) += 1;
                            } else {
                                sweep.problem(format!("phi not injective at {p}"));
                            }
                        }
                        Err(e) => sweep.problem(format!("phi at {p}: {e}")),
                    }
                }
                sweep.compare(&expected, &actual, nkl);
                progress(&format!("{selector}: n={n} done"));
            }
        }
        Selector::Psi => {
            for n in 0..=params.max_n {
                let expected = tally(enumerate_a(n, None, None, None).iter().map(|p| {
                    let s = is_in_a(p).expect("generated member");
                    (n, s.k, s.l, s.j.expect("A carries j"))
                }));
                let mut seen = BTreeSet::new();
                let mut actual = BTreeMap::new();
                for w in enumerate_w(n, None, None, None) {
                    match check_psi(&w) {
                        Ok((p, cell)) => {
                            if seen.insert(p.to_string()) {
                                *actual.entry(cell).or_insert(0) += 1;
                            } else {
                                sweep.problem(format!("psi not injective at {w}"));
                            }
                        }
                        Err(e) => sweep.problem(format!("psi at {w}: {e}")),
                    }
                }
                sweep.compare(&expected, &actual, nklj);
                progress(&format!("{selector}: n={n} done"));
            }
        }
        Selector::Eta => {
            let r = rules(2, params.mutation)?;
            for n in 0..=params.max_n {
                let expected = tally(enumerate_basis(n).iter().map(|t| {
                    let s = basis_stats(t).expect("generated member");
                    (n, s.k, s.l)
                }));
                let mut seen = BTreeSet::new();
                let mut actual = BTreeMap::new();
                for p in r.enumerate(n) {
                    match check_eta(&p) {
                        Ok(t) => {
                            if seen.insert(t.to_string()) {
                                *actual.entry(colored_cell(&p)).or_insert(0) += 1;
                            } else {
                                sweep.problem(format!("eta not injective at {p}"));
                            }
                        }
                        Err(e) => sweep.problem(format!("eta at {p}: {e}")),
                    }
                }
                sweep.compare(&expected, &actual, nkl);
                progress(&format!("{selector}: n={n} done"));
            }
        }
        Selector::Theta => {
            let r = rules(3, params.mutation)?;
            for n in 0..=params.max_n {
                let expected = tally(strict_partitions(n).iter().map(|p| {
                    let s = strict_stats(p).expect("strict");
                    (n, s.k, s.l)
                }));
                let mut seen = BTreeSet::new();
                let mut actual = BTreeMap::new();
                for p in r.enumerate(n) {
                    match check_theta(&p) {
                        Ok(image) => {
                            if seen.insert(image) {
                                *actual.entry(colored_cell(&p)).or_insert(0) += 1;
                            } else {
                                sweep.problem(format!("theta not injective at {p}"));
                            }
                        }
                        Err(e) => sweep.problem(format!("theta at {p}: {e}")),
                    }
                }
                sweep.compare(&expected, &actual, nkl);
                progress(&format!("{selector}: n={n} done"));
            }
        }
        Selector::Lebesgue | Selector::Sylvester | Selector::QBinomial => {
            let (left, right) = match selector {
                Selector::Lebesgue => lebesgue_sides(params.order)?,
                Selector::Sylvester => sylvester_sides(params.order)?,
                _ => qbinomial_sides(params.order, params.t_order)?,
            };
            compare_series(&mut sweep, &left, &right);
            progress(&format!("{selector}: order {} done", params.order));
        }
        Selector::Gf2 | Selector::Gf3 | Selector::Gf8 | Selector::GfARef => {
            series_vs_enumeration(&mut sweep, selector, params, progress)?;
        }
    }
    Ok(sweep.finish(selector))
}

/// `phi(p)`, checked to land in the word cell of `p` and to invert.
fn check_phi(p: &TwoColorPartition) -> Result<crate::families::ProfileWord> {
    let w = phi(p)?;
    let (n, k, l) = colored_cell(p);
    if !crate::families::is_in_w(&w, n, k, l, None) {
        return Err(Error::Domain(format!("image {w} is not in W({n},{k},{l})")));
    }
    if &phi_inverse(&w)? != p {
        return Err(Error::Domain(format!("round trip through {w} fails")));
    }
    Ok(w)
}

/// The checks on `psi` beyond membership: the three claims about its
/// intermediate values.
pub fn psi_claims(w: &crate::families::ProfileWord) -> Result<()> {
    let t = psi_trace(w)?;
    let stats = w.stats();
    let j = stats.j.expect("words carry j");
    if t.sigma_parts.iter().any(|s| s % 2 != 0) || t.sigma_parts.windows(2).any(|p| p[0] <= p[1]) {
        return Err(Error::Domain(format!(
            "sigma {:?} not even and decreasing",
            t.sigma_parts
        )));
    }
    let prefix_x = t.prefix.iter().filter(|&&l| l == Letter::X).count();
    if t.hat_u.count(Letter::Z) != 0 || t.hat_u.count(Letter::X) != stats.k + j || prefix_x != j {
        return Err(Error::Domain(format!("letter budget of {} off", t.hat_u)));
    }
    let sigma_total: u64 = t.sigma_parts.iter().sum();
    if w.weight() != t.hat_u.weight() + sigma_total {
        return Err(Error::Domain(format!(
            "weight {} != {} + {}",
            w.weight(),
            t.hat_u.weight(),
            sigma_total
        )));
    }
    Ok(())
}

fn check_psi(w: &crate::families::ProfileWord) -> Result<(TwoColorPartition, (u64, usize, usize, usize))> {
    psi_claims(w)?;
    let pair = psi_trace(w)?.pair;
    let p = pair.to_two_color();
    let stats = is_in_a(&p).ok_or_else(|| Error::Domain(format!("image {pair} is not in A")))?;
    let ws = w.stats();
    if (stats.n, stats.k, stats.l, stats.j) != (ws.n, ws.k, ws.l, ws.j) {
        return Err(Error::Domain(format!("image {pair} is in the wrong cell")));
    }
    if &psi_inverse(&pair)? != w {
        return Err(Error::Domain(format!("round trip through {pair} fails")));
    }
    Ok((p, (stats.n, stats.k, stats.l, stats.j.expect("A carries j"))))
}

fn check_eta(p: &TwoColorPartition) -> Result<crate::triple::TripleDecomposition> {
    let t = eta(p)?;
    let (n, k, l) = colored_cell(p);
    match basis_stats(&t) {
        Some(s) if (s.n, s.k, s.l) == (n, k, l) => {}
        _ => return Err(Error::Domain(format!("image {t} is not in B({n},{k},{l})"))),
    }
    if &eta_inverse(&t)? != p {
        return Err(Error::Domain(format!("round trip through {t} fails")));
    }
    Ok(t)
}

/// The four facts about the intermediate triple of `theta`.
pub fn theta_facts(p: &TwoColorPartition) -> Result<()> {
    let t = theta_trace(p)?;
    let m = t.m as u32;
    let l = p.green_count();
    if !t.pi.is_strict() || t.pi.len() != l || t.pi.largest().is_some_and(|v| v > m) {
        return Err(Error::Domain(format!(
            "pi = {} is not strict with {l} parts <= {m}",
            t.pi
        )));
    }
    if t.ends_in_one && t.pi.largest().is_some_and(|v| v >= m) {
        return Err(Error::Domain(format!(
            "pi = {} reaches {m} although the last part is 1",
            t.pi
        )));
    }
    let sigma_conj = t.sigma.conjugate();
    let want = if t.ends_in_one { t.m.saturating_sub(1) } else { t.m };
    if !sigma_conj.is_strict() || sigma_conj.len() != want {
        return Err(Error::Domain(format!(
            "conjugate of sigma = {} is not strict with {want} parts",
            t.sigma
        )));
    }
    if p.weight() != u64::from(m) * u64::from(m) + t.pi.weight() + t.sigma.weight() {
        return Err(Error::Domain("weight is not m^2 + |pi| + |sigma|".into()));
    }
    Ok(())
}

fn check_theta(p: &TwoColorPartition) -> Result<crate::partition::Partition> {
    theta_facts(p)?;
    let image = theta_trace(p)?.image;
    let (n, k, l) = colored_cell(p);
    match strict_stats(&image) {
        Some(s) if (s.n, s.k, s.l) == (n, k, l) => {}
        _ => return Err(Error::Domain(format!("image {image} is not in D({n},{k},{l})"))),
    }
    if &theta_inverse(&image)? != p {
        return Err(Error::Domain(format!("round trip through {image} fails")));
    }
    Ok(image)
}

fn series_cells(s: &TruncatedSeries) -> BTreeMap<(usize, Monomial), i64> {
    let mut out = BTreeMap::new();
    for (n, poly) in s.coefficients().iter().enumerate() {
        for (m, &c) in poly.terms() {
            out.insert((n, *m), c);
        }
    }
    out
}

fn series_label((n, m): &(usize, Monomial)) -> String {
    format!("q^{n} {m}")
}

fn compare_series(sweep: &mut Sweep, left: &TruncatedSeries, right: &TruncatedSeries) {
    sweep.compare(&series_cells(left), &series_cells(right), series_label);
}

fn xyz(k: usize, l: usize, j: usize) -> Result<Monomial> {
    let e = |v: usize| u16::try_from(v).map_err(|_| Error::Overflow);
    Ok(Monomial::pow(Marker::X, e(k)?) * Monomial::pow(Marker::Y, e(l)?) * Monomial::pow(Marker::Z, e(j)?))
}

fn series_vs_enumeration(
    sweep: &mut Sweep,
    selector: Selector,
    params: &VerifyParams,
    progress: &mut dyn FnMut(&str),
) -> Result<()> {
    let order = params.order;
    let series = match selector {
        Selector::Gf2 => gf_l1_rhs(order)?,
        Selector::Gf3 => gf_a_rhs(order)?,
        Selector::Gf8 => gf_l2_rhs(order)?,
        _ => gf_a_refined_rhs(order)?,
    };
    let actual = series_cells(&series);
    let mut expected = BTreeMap::new();
    let mut basis = BTreeMap::new();
    for n in 0..=order as u64 {
        let q = n as usize;
        match selector {
            Selector::Gf2 | Selector::Gf8 => {
                let d = selector.gap_family().expect("gap family");
                for p in rules(d, params.mutation)?.enumerate(n) {
                    *expected
                        .entry((q, xyz(p.red_count(), p.green_count(), 0)?))
                        .or_insert(0) += 1;
                }
                if selector == Selector::Gf8 {
                    for t in enumerate_basis(n) {
                        let s = basis_stats(&t).expect("generated member");
                        *basis.entry((q, xyz(s.k, s.l, 0)?)).or_insert(0) += 1;
                    }
                }
            }
            _ => {
                for p in enumerate_a(n, None, None, None) {
                    let s = is_in_a(&p).expect("generated member");
                    let j = if selector == Selector::GfARef {
                        s.j.expect("A carries j")
                    } else {
                        0
                    };
                    *expected.entry((q, xyz(s.k, s.l, j)?)).or_insert(0) += 1;
                }
            }
        }
        progress(&format!("{selector}: enumerated n={n}"));
    }
    sweep.compare(&expected, &actual, series_label);
    if selector == Selector::Gf8 {
        sweep.compare(&basis, &actual, |k| format!("basis {}", series_label(k)));
    }
    if selector == Selector::Gf3 {
        // the two sides of the first refinement, as series
        if let Some(d) = series.first_difference(&gf_l1_rhs(order)?)? {
            sweep.problem(format!("series for A and L_1 differ at {d}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(sel: Selector, params: VerifyParams) -> Report {
        verify(sel, &params, &mut |_| {}).unwrap()
    }

    fn small() -> VerifyParams {
        VerifyParams {
            max_n: 12,
            order: 12,
            t_order: 4,
            mutation: None,
        }
    }

    #[test]
    fn every_selector_passes_small() {
        for sel in Selector::ALL {
            let r = run(sel, small());
            assert!(r.passed(), "{sel}: {:?}", r.first_mismatch);
            assert!(!r.cells.is_empty());
        }
    }

    #[test]
    fn thm_1_5_at_zero_is_one_cell() {
        let r = run(Selector::Thm15, VerifyParams { max_n: 0, ..small() });
        assert!(r.passed());
        assert_eq!(
            r.cells,
            vec![Cell {
                params: "0,0,0".into(),
                expected: 1,
                actual: 1
            }]
        );
    }

    #[test]
    fn strict_sweep_contains_sample_cell() {
        let r = run(Selector::Thm16, VerifyParams { max_n: 15, ..small() });
        assert!(r.passed());
        assert!(r.cells.contains(&Cell {
            params: "15,1,2".into(),
            expected: 6,
            actual: 6
        }));
    }

    #[test]
    fn mutation_flips_result() {
        let mutated = VerifyParams {
            mutation: Some(LdMutation::GreenGapDown),
            ..small()
        };
        assert!(!run(Selector::Thm15, mutated).passed());
        assert!(!run(Selector::Phi, mutated).passed());
        assert!(verify(Selector::Psi, &mutated, &mut |_| {}).is_err());
    }

    #[test]
    fn selector_names_round_trip() {
        for sel in Selector::ALL {
            assert_eq!(sel.name().parse::<Selector>().unwrap(), sel);
        }
        assert!("1.4".parse::<Selector>().is_err());
    }
}
