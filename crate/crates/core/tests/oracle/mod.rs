//! Counting oracles written independently of the library: knapsack DPs and a
//! small partition generator with its own Durfee and triple computations.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

/// `t[n][c]`: strict partitions of `n` into exactly `c` parts, each in `lo..=hi`.
pub fn strict_table(lo: u64, hi: u64, max_n: u64) -> Vec<Vec<u64>> {
    let n_max = max_n as usize;
    let mut t = vec![vec![0u64; n_max + 2]; n_max + 1];
    t[0][0] = 1;
    for v in lo.max(1)..=hi.min(max_n) {
        let v = v as usize;
        for n in (v..=n_max).rev() {
            for c in (1..=n_max + 1).rev() {
                t[n][c] += t[n - v][c - 1];
            }
        }
    }
    t
}

/// Coefficients of `prod_{i>=1} (1 + q^{step i})` up to `max_n`.
pub fn distinct_multiples(step: u64, max_n: u64) -> Vec<u64> {
    let n_max = max_n as usize;
    let mut c = vec![0u64; n_max + 1];
    c[0] = 1;
    let mut v = step as usize;
    while v <= n_max {
        for n in (v..=n_max).rev() {
            c[n] += c[n - v];
        }
        v += step as usize;
    }
    c
}

pub fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(a.len() - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `|L_d(n, k, l)|` by building parts from the smallest upward.
pub fn ld_counts(d: u64, n: u64) -> BTreeMap<(usize, usize), u64> {
    fn gap(d: u64, green: bool) -> u64 {
        if green {
            d + 1
        } else {
            d
        }
    }
    fn allowed(d: u64, v: u64, green: bool) -> bool {
        !green || (v != 1 && !(d >= 2 && v == d - 1))
    }
    fn grow(d: u64, remaining: u64, last: u64, reds: usize, greens: usize, out: &mut BTreeMap<(usize, usize), u64>) {
        if remaining == 0 {
            *out.entry((reds, greens)).or_insert(0) += 1;
            return;
        }
        for green in [false, true] {
            let lo = if last == 0 { 1 } else { last + gap(d, green) };
            for v in lo..=remaining {
                if allowed(d, v, green) {
                    let (r, g) = if green { (reds, greens + 1) } else { (reds + 1, greens) };
                    grow(d, remaining - v, v, r, g, out);
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    grow(d, n, 0, 0, 0, &mut out);
    out
}

/// `|A(n, k, l, j)|` for one `n`, from strict-partition tables.
pub fn a_counts(n: u64) -> BTreeMap<(usize, usize, usize), u64> {
    let halves = strict_table(1, n, n);
    let mut out = BTreeMap::new();
    for l in 0..=n as usize {
        let low = strict_table(1, l as u64, n);
        let high = strict_table(l as u64 + 1, n, n);
        for h in 0..=n / 2 {
            let greens = halves[h as usize][l];
            if greens == 0 {
                continue;
            }
            let rest = (n - 2 * h) as usize;
            for r_high in 0..=rest {
                for k in 0..=rest {
                    let hk = high[r_high][k];
                    if hk == 0 {
                        continue;
                    }
                    for j in 0..=l.min(rest) {
                        let lj = low[rest - r_high][j];
                        if lj > 0 {
                            *out.entry((k, l, j)).or_insert(0) += greens * hk * lj;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every partition of `n`, as non-increasing vectors.
pub fn all_partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rem: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=rem.min(max)).rev() {
            cur.push(v);
            go(rem - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn durfee(p: &[u64]) -> usize {
    p.iter().enumerate().take_while(|(i, &v)| v as usize > *i).count()
}

pub fn conjugate(p: &[u64]) -> Vec<u64> {
    let top = p.first().copied().unwrap_or(0);
    (1..=top)
        .map(|c| p.iter().filter(|&&v| v >= c).count() as u64)
        .collect()
}

/// `(n, k, l)` of a basis partition: `d = k + l` and `l` distinct values
/// below the Durfee square. `None` when the parts below the square and the
/// columns right of it share a value.
pub fn basis_cell(p: &[u64]) -> Option<(usize, usize)> {
    let d = durfee(p);
    let below = &p[d..];
    let right = &conjugate(p)[d.min(p.first().copied().unwrap_or(0) as usize)..];
    if below.iter().any(|v| right.contains(v)) {
        return None;
    }
    let mut vals = below.to_vec();
    vals.dedup();
    Some((d - vals.len(), vals.len()))
}

/// `(k, l)` of a strict partition with `k + 2l` parts and Durfee side `k + l`.
pub fn durfee_cell(p: &[u64]) -> Option<(usize, usize)> {
    if p.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let d = durfee(p);
    let parts = p.len();
    Some((2 * d - parts, parts - d))
}

pub fn tally<K: Ord>(keys: impl IntoIterator<Item = K>) -> BTreeMap<K, u64> {
    let mut out = BTreeMap::new();
    for k in keys {
        *out.entry(k).or_insert(0) += 1;
    }
    out
}
