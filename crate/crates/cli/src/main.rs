//! Command-line front end: enumerate families, apply bijections, run
//! verification sweeps, expand q-series, and tabulate counts.
//!
//! Exit codes: 0 success, 1 mismatch or domain violation, 2 usage error.

use std::collections::BTreeMap;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use twocolor::bijections::{eta, eta_inverse, phi, phi_inverse, psi, psi_inverse, theta, theta_inverse, PartitionPair};
use twocolor::families::{
    basis_stats, enumerate_a, enumerate_b, enumerate_basis, enumerate_d, enumerate_w, is_in_a, strict_stats,
    LdMutation, LdRules, ProfileWord,
};
use twocolor::qseries::{
    gf_a_refined_rhs, gf_a_rhs, gf_l1_rhs, gf_l2_rhs, lebesgue_sides, qbinomial_sides, sylvester_sides, Marker,
    TruncatedSeries,
};
use twocolor::verify::{verify, Selector, VerifyParams};
use twocolor::{enumerate_partitions, ConstraintSet, Partition, TripleDecomposition, TwoColorPartition};

#[derive(Parser)]
#[command(
    name = "twocolor",
    version,
    about = "Two-color partitions, their bijections, and q-series checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "L")]
    L,
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "D")]
    D,
    #[value(name = "W")]
    W,
}

#[derive(Clone, Copy, ValueEnum)]
enum Map {
    Phi,
    PhiInv,
    Psi,
    PsiInv,
    Eta,
    EtaInv,
    Theta,
    ThetaInv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builder {
    Gf2,
    Gf3,
    Gf8,
    #[value(name = "gfAref")]
    GfARef,
    Lebesgue,
    Sylvester,
    Qbinomial,
}

#[derive(Subcommand)]
enum Command {
    /// List every member of a family cell, one per line, then a count line.
    Enum {
        #[arg(long, ignore_case = true)]
        family: Family,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a bijection (or its inverse) to one object given in text form.
    Apply {
        #[arg(long)]
        map: Map,
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Run an exhaustive check. Selectors: 1.1 1.2 1.3 1.5 1.6 1.7 phi psi eta
    /// theta lebesgue sylvester qbinomial gf2 gf3 gf8 gfAref.
    Verify {
        #[arg(value_name = "SELECTOR")]
        selector_name: String,
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        t_order: Option<u16>,
        /// Perturb one L_d rule (for checking that the sweep can fail).
        #[arg(long, hide = true)]
        mutate: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print a series truncated at q^order, one line per power of q.
    Qseries {
        builder: Builder,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long)]
        t_order: Option<u16>,
        #[arg(long)]
        json: bool,
    },
    /// Tab-separated counts per (n, k, l) cell, plus j for A and W.
    Table {
        #[arg(long, ignore_case = true)]
        family: Family,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    Mismatch,
}

impl From<twocolor::Error> for Failure {
    fn from(e: twocolor::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(format!("output: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Domain(format!("json: {e}"))
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}\n\nRun 'twocolor --help' for usage.");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut Out) -> Result<(), Failure> {
    match command {
        Command::Enum {
            family,
            d,
            n,
            k,
            l,
            j,
            json,
        } => cmd_enum(out, family, d, n, k, l, j, json),
        Command::Apply { map, input, json } => cmd_apply(out, map, &input, json),
        Command::Verify {
            selector_name,
            max_n,
            order,
            t_order,
            mutate,
            json,
        } => cmd_verify(out, &selector_name, max_n, order, t_order, mutate.as_deref(), json),
        Command::Qseries {
            builder,
            order,
            t_order,
            json,
        } => cmd_qseries(out, builder, order, t_order, json),
        Command::Table { family, d, max_n, json } => cmd_table(out, family, d, max_n, json),
    }
}

fn check_family_params(family: Family, d: Option<u32>, j: Option<usize>) -> Result<(), Failure> {
    match (family, d) {
        (Family::L, None) => return Err(Failure::Usage("family L requires --d".into())),
        (Family::L, Some(0)) => return Err(Failure::Usage("--d must be at least 1".into())),
        (Family::L, Some(_)) => {}
        (_, Some(_)) => return Err(Failure::Usage("--d applies only to family L".into())),
        _ => {}
    }
    if j.is_some() && !matches!(family, Family::A | Family::W) {
        return Err(Failure::Usage("--j applies only to families A and W".into()));
    }
    Ok(())
}

fn emit<T: Serialize + ToString>(out: &mut Out, item: &T, json: bool) -> Result<(), Failure> {
    if json {
        writeln!(out, "{}", serde_json::to_string(item)?)?;
    } else {
        writeln!(out, "{}", item.to_string())?;
    }
    Ok(())
}

fn emit_all<T: Serialize + ToString>(out: &mut Out, items: &[T], json: bool) -> Result<(), Failure> {
    for item in items {
        emit(out, item, json)?;
    }
    if json {
        writeln!(out, "{}", serde_json::json!({ "count": items.len() }))?;
    } else {
        writeln!(out, "count: {}", items.len())?;
    }
    Ok(())
}

fn keep(want: Option<usize>, got: usize) -> bool {
    want.is_none_or(|w| w == got)
}

fn strict_partitions(n: u64) -> Vec<Partition> {
    enumerate_partitions(n, &ConstraintSet::distinct()).collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_enum(
    out: &mut Out,
    family: Family,
    d: Option<u32>,
    n: u64,
    k: Option<usize>,
    l: Option<usize>,
    j: Option<usize>,
    json: bool,
) -> Result<(), Failure> {
    check_family_params(family, d, j)?;
    match family {
        Family::L => {
            let rules = LdRules::new(d.expect("checked"))?;
            let items: Vec<_> = rules
                .enumerate(n)
                .into_iter()
                .filter(|p| keep(k, p.red_count()) && keep(l, p.green_count()))
                .collect();
            emit_all(out, &items, json)
        }
        Family::A => emit_all(out, &enumerate_a(n, k, l, j), json),
        Family::B => {
            let items = match (k, l) {
                (Some(k), Some(l)) => enumerate_b(n, k, l),
                _ => enumerate_basis(n)
                    .into_iter()
                    .filter(|t| {
                        let s = basis_stats(t).expect("generated member");
                        keep(k, s.k) && keep(l, s.l)
                    })
                    .collect(),
            };
            emit_all(out, &items, json)
        }
        Family::D => {
            let items = match (k, l) {
                (Some(k), Some(l)) => enumerate_d(n, k, l),
                _ => strict_partitions(n)
                    .into_iter()
                    .filter(|p| {
                        let s = strict_stats(p).expect("strict");
                        keep(k, s.k) && keep(l, s.l)
                    })
                    .collect(),
            };
            emit_all(out, &items, json)
        }
        Family::W => emit_all(out, &enumerate_w(n, k, l, j), json),
    }
}

fn parse<T: std::str::FromStr<Err = twocolor::Error>>(input: &str) -> Result<T, Failure> {
    input.parse().map_err(Failure::from)
}

fn cmd_apply(out: &mut Out, map: Map, input: &str, json: bool) -> Result<(), Failure> {
    match map {
        Map::Phi => emit(out, &phi(&parse::<TwoColorPartition>(input)?)?, json),
        Map::PhiInv => emit(out, &phi_inverse(&parse::<ProfileWord>(input)?)?, json),
        Map::Psi => emit(out, &psi(&parse::<ProfileWord>(input)?)?, json),
        Map::PsiInv => emit(out, &psi_inverse(&parse::<PartitionPair>(input)?)?, json),
        Map::Eta => emit(out, &eta(&parse::<TwoColorPartition>(input)?)?, json),
        Map::EtaInv => emit(out, &eta_inverse(&parse::<TripleDecomposition>(input)?)?, json),
        Map::Theta => emit(out, &theta(&parse::<TwoColorPartition>(input)?)?, json),
        Map::ThetaInv => emit(out, &theta_inverse(&parse::<Partition>(input)?)?, json),
    }
}

fn cmd_verify(
    out: &mut Out,
    selector_name: &str,
    max_n: Option<u64>,
    order: Option<usize>,
    t_order: Option<u16>,
    mutate: Option<&str>,
    json: bool,
) -> Result<(), Failure> {
    let selector: Selector = selector_name
        .parse()
        .map_err(|e: twocolor::Error| Failure::Usage(e.to_string()))?;
    let mut params = VerifyParams::default();
    if selector.uses_order() {
        if max_n.is_some() {
            return Err(Failure::Usage(format!("{selector} is bounded by --order, not --max-n")));
        }
        params.order = order.unwrap_or(params.order);
    } else {
        if order.is_some() {
            return Err(Failure::Usage(format!("{selector} is bounded by --max-n, not --order")));
        }
        params.max_n = max_n.unwrap_or(params.max_n);
    }
    match (selector, t_order) {
        (Selector::QBinomial, Some(t)) => params.t_order = t,
        (Selector::QBinomial, None) => {}
        (_, Some(_)) => return Err(Failure::Usage("--t-order applies only to qbinomial".into())),
        _ => {}
    }
    if let Some(name) = mutate {
        let m = LdMutation::from_name(name).ok_or_else(|| {
            let names: Vec<_> = LdMutation::ALL.iter().map(|m| m.name()).collect();
            Failure::Usage(format!(
                "unknown mutation {name:?}; expected one of {}",
                names.join(", ")
            ))
        })?;
        if selector.gap_family().is_none() {
            return Err(Failure::Usage(format!("{selector} does not enumerate a gap family")));
        }
        params.mutation = Some(m);
    }

    let report = verify(selector, &params, &mut |line| eprintln!("{line}"))?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        for cell in &report.cells {
            let mark = if cell.matches() { "ok" } else { "MISMATCH" };
            writeln!(out, "cell {cell} {mark}")?;
        }
        match &report.first_mismatch {
            None => writeln!(out, "verify {selector}: pass ({} cells)", report.cells.len())?,
            Some(m) => writeln!(out, "verify {selector}: fail: {m}")?,
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

#[derive(Serialize)]
struct JsonTerm {
    q: usize,
    exponents: BTreeMap<char, u16>,
    coeff: i64,
}

fn series_json(s: &TruncatedSeries) -> serde_json::Value {
    let mut terms = Vec::new();
    for (q, poly) in s.coefficients().iter().enumerate() {
        for (m, &coeff) in poly.terms() {
            let exponents = Marker::ALL
                .iter()
                .filter(|&&mk| m.exponent(mk) > 0)
                .map(|&mk| (mk.symbol(), m.exponent(mk)))
                .collect();
            terms.push(JsonTerm { q, exponents, coeff });
        }
    }
    serde_json::json!({ "order": s.order(), "terms": terms })
}

fn cmd_qseries(out: &mut Out, builder: Builder, order: usize, t_order: Option<u16>, json: bool) -> Result<(), Failure> {
    if t_order.is_some() && !matches!(builder, Builder::Qbinomial) {
        return Err(Failure::Usage("--t-order applies only to qbinomial".into()));
    }
    let series_err = |e: twocolor::qseries::SeriesError| Failure::Domain(e.to_string());
    let sides: Vec<(&str, TruncatedSeries)> = match builder {
        Builder::Gf2 => vec![("", gf_l1_rhs(order).map_err(series_err)?)],
        Builder::Gf3 => vec![("", gf_a_rhs(order).map_err(series_err)?)],
        Builder::Gf8 => vec![("", gf_l2_rhs(order).map_err(series_err)?)],
        Builder::GfARef => vec![("", gf_a_refined_rhs(order).map_err(series_err)?)],
        Builder::Lebesgue | Builder::Sylvester | Builder::Qbinomial => {
            let (left, right) = match builder {
                Builder::Lebesgue => lebesgue_sides(order),
                Builder::Sylvester => sylvester_sides(order),
                _ => qbinomial_sides(order, t_order.unwrap_or(12)),
            }
            .map_err(series_err)?;
            vec![("left", left), ("right", right)]
        }
    };
    if json {
        let value = if sides.len() == 1 {
            series_json(&sides[0].1)
        } else {
            serde_json::json!({ "left": series_json(&sides[0].1), "right": series_json(&sides[1].1) })
        };
        writeln!(out, "{value}")?;
    } else {
        for (label, s) in &sides {
            if !label.is_empty() {
                writeln!(out, "# {label}")?;
            }
            write!(out, "{s}")?;
        }
    }
    Ok(())
}

fn cmd_table(out: &mut Out, family: Family, d: Option<u32>, max_n: u64, json: bool) -> Result<(), Failure> {
    check_family_params(family, d, None)?;
    let with_j = matches!(family, Family::A | Family::W);
    let mut rows: BTreeMap<(u64, usize, usize, usize), u64> = BTreeMap::new();
    for n in 0..=max_n {
        let mut add = |k: usize, l: usize, j: usize| *rows.entry((n, k, l, j)).or_insert(0) += 1;
        match family {
            Family::L => {
                for p in LdRules::new(d.expect("checked"))?.enumerate(n) {
                    add(p.red_count(), p.green_count(), 0);
                }
            }
            Family::A => {
                for p in enumerate_a(n, None, None, None) {
                    let s = is_in_a(&p).expect("generated member");
                    add(s.k, s.l, s.j.expect("A carries j"));
                }
            }
            Family::B => {
                for t in enumerate_basis(n) {
                    let s = basis_stats(&t).expect("generated member");
                    add(s.k, s.l, 0);
                }
            }
            Family::D => {
                for p in strict_partitions(n) {
                    let s = strict_stats(&p).expect("strict");
                    add(s.k, s.l, 0);
                }
            }
            Family::W => {
                for w in enumerate_w(n, None, None, None) {
                    let s = w.stats();
                    add(s.k, s.l, s.j.expect("words carry j"));
                }
            }
        }
    }
    if !json {
        writeln!(out, "{}", if with_j { "n\tk\tl\tj\tcount" } else { "n\tk\tl\tcount" })?;
    }
    for ((n, k, l, j), count) in rows {
        match (json, with_j) {
            (true, true) => writeln!(
                out,
                "{}",
                serde_json::json!({"n": n, "k": k, "l": l, "j": j, "count": count})
            )?,
            (true, false) => writeln!(out, "{}", serde_json::json!({"n": n, "k": k, "l": l, "count": count}))?,
            (false, true) => writeln!(out, "{n}\t{k}\t{l}\t{j}\t{count}")?,
            (false, false) => writeln!(out, "{n}\t{k}\t{l}\t{count}")?,
        }
    }
    Ok(())
}
