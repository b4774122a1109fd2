//! Independent reference implementations used as test oracles.
//!
//! Nothing here calls the library's predicates or polynomial routines; each
//! oracle works straight from the definitions, trading speed for obviousness.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hooktab::mixed::{MixedEntry, MixedTableau, StrictnessFlags};
use hooktab::shape::{Cell, Partition, SkewShape};
use hooktab::TruncatedPolynomial;

pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Every partition of size at most `n`, generated from scratch.
pub fn partitions_up_to(n: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for p in 1..=rem.min(max) {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------- mixed

fn cells_of(t: &MixedTableau) -> Vec<(Cell, MixedEntry)> {
    t.entries().collect()
}

/// Pairwise form of γ-column-strict / γ-row-strict.
pub fn strict_pairwise(t: &MixedTableau, alpha: bool, by_column: bool) -> bool {
    let cells: Vec<(Cell, i64)> = cells_of(t)
        .into_iter()
        .filter(|(_, e)| e.is_alpha() == alpha)
        .map(|(c, e)| (c, e.index()))
        .collect();
    for &(c1, i) in &cells {
        for &(c2, j) in &cells {
            if c1 == c2 {
                continue;
            }
            if c1.row <= c2.row && c1.col <= c2.col && i < j {
                return false;
            }
            let same_line = if by_column { c1.col == c2.col } else { c1.row == c2.row };
            if same_line && i == j {
                return false;
            }
        }
    }
    true
}

pub fn totally_column_strict(t: &MixedTableau) -> bool {
    let map: BTreeMap<Cell, i64> = cells_of(t).into_iter().map(|(c, e)| (c, e.index())).collect();
    map.iter().all(|(&c, &r)| {
        let up = Cell::new(c.row + 1, c.col);
        let right = Cell::new(c.row, c.col + 1);
        map.get(&up).is_none_or(|&s| r > s) && map.get(&right).is_none_or(|&s| r >= s)
    })
}

/// Whether the `first`-kind cells are `ν/λ` for some `λ ⊆ ν ⊆ μ`, by trying
/// every candidate `ν`.
pub fn sorted_by_search(t: &MixedTableau, first_is_alpha: bool) -> bool {
    let shape = t.shape();
    let firsts: Vec<Cell> =
        cells_of(t).into_iter().filter(|(_, e)| e.is_alpha() == first_is_alpha).map(|(c, _)| c).collect();
    partitions_up_to(shape.outer().size()).into_iter().any(|nu| {
        let nu = part(&nu);
        if !(nu.contains(shape.inner()) && shape.outer().contains(&nu)) {
            return false;
        }
        let skew: Vec<Cell> = nu.cells().filter(|&c| !shape.inner().contains_cell(c)).collect();
        skew.len() == firsts.len() && skew.iter().all(|c| firsts.contains(c))
    })
}

pub fn flagged(t: &MixedTableau) -> bool {
    cells_of(t).into_iter().all(|(c, e)| match e {
        MixedEntry::Alpha(k) => k >= 1 && (k as usize) < c.col,
        MixedEntry::Beta(k) => k >= 1 && (k as usize) < c.row,
    })
}

pub fn classify_oracle(t: &MixedTableau) -> StrictnessFlags {
    StrictnessFlags {
        alpha_column_strict: strict_pairwise(t, true, true),
        alpha_row_strict: strict_pairwise(t, true, false),
        beta_column_strict: strict_pairwise(t, false, true),
        beta_row_strict: strict_pairwise(t, false, false),
        totally_column_strict: totally_column_strict(t),
        sorted_alpha_beta: sorted_by_search(t, true),
        sorted_beta_alpha: sorted_by_search(t, false),
        flagged_mixed: flagged(t),
    }
}

/// Calls `f` on every filling of `shape` by `symbols`.
pub fn for_each_filling(shape: &SkewShape, symbols: &[MixedEntry], mut f: impl FnMut(MixedTableau)) {
    let cells: Vec<Cell> = shape.cells().collect();
    let mut idx = vec![0usize; cells.len()];
    loop {
        let map: BTreeMap<Cell, MixedEntry> =
            cells.iter().zip(&idx).map(|(&c, &i)| (c, symbols[i])).collect();
        f(MixedTableau::new(shape.clone(), map).unwrap());
        let mut k = 0;
        loop {
            if k == idx.len() {
                return;
            }
            idx[k] += 1;
            if idx[k] < symbols.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

// ---------------------------------------------------------------- counting

/// Number of SSYT of shape `mu` with entries `<= n`, by the hook-content formula.
pub fn hook_content(mu: &[usize], n: u64) -> u128 {
    let conj = |j: usize| mu.iter().filter(|&&r| r >= j).count();
    let (mut num, mut den) = (1u128, 1u128);
    for (i, &len) in mu.iter().enumerate() {
        for j in 1..=len {
            let content = j as i64 - (i as i64 + 1);
            let factor = n as i64 + content;
            if factor <= 0 {
                return 0;
            }
            num *= factor as u128;
            den *= ((len - j) + (conj(j) - (i + 1)) + 1) as u128;
        }
    }
    assert_eq!(num % den, 0);
    num / den
}

/// Number of SSYT by direct backtracking over cells.
pub fn ssyt_brute_count(mu: &[usize], n: u32) -> u64 {
    fn go(n: u32, pos: usize, cells: &[(usize, usize)], fill: &mut BTreeMap<(usize, usize), u32>) -> u64 {
        let Some(&(r, c)) = cells.get(pos) else { return 1 };
        let lo_row = if c > 1 { fill[&(r, c - 1)] } else { 1 };
        let lo_col = if r > 1 { fill[&(r - 1, c)] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            fill.insert((r, c), v);
            total += go(n, pos + 1, cells, fill);
        }
        fill.remove(&(r, c));
        total
    }
    let cells: Vec<(usize, usize)> =
        mu.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j))).collect();
    go(n, 0, &cells, &mut BTreeMap::new())
}

// ---------------------------------------------------------------- polynomials in x only

/// Exponent vector of length `n` to integer coefficient.
pub type XPoly = BTreeMap<Vec<u32>, i64>;

/// The `x`-only part of a library polynomial; panics if any parameter
/// variable appears.
pub fn to_xpoly(p: &TruncatedPolynomial, n: u32) -> XPoly {
    let mut out = XPoly::new();
    for (m, c) in p.terms() {
        assert!(m.parameter_part().is_one(), "unexpected parameter in {m}");
        let mut e = vec![0u32; n as usize];
        for (&i, &k) in m.x_exp() {
            e[(i - 1) as usize] = k;
        }
        let c: i64 = c.try_into().unwrap();
        out.insert(e, c);
    }
    out
}

pub fn xpoly_mul(a: &XPoly, b: &XPoly) -> XPoly {
    let mut out = XPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // Inserting at `pos` passes over `len - pos` smaller elements.
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// The alternant `det(x_j^{e_i})`.
pub fn alternant(exps: &[u32]) -> XPoly {
    let n = exps.len();
    let mut out = XPoly::new();
    for (sigma, sign) in permutations(n) {
        let mut e = vec![0u32; n];
        for (i, &j) in sigma.iter().enumerate() {
            e[j] = exps[i];
        }
        *out.entry(e).or_insert(0) += sign;
    }
    out.retain(|_, c| *c != 0);
    out
}
