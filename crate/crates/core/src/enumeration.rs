//! Exhaustive generators for every tableau family at bounded parameters,
//! the bijection `Φ`, and the drivers that check the main theorems over
//! those finite sets.
//!
//! Generators return their output in canonical order: lexicographic on the
//! text serialization.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::hvt::{HookCell, HookValuedTableau};
use crate::mixed::{Greek, MixedEntry, MixedTableau};
use crate::shape::{Cell, Partition, SkewShape};
use crate::switching::{fully_switch, gg_jdt, gg_jdt_trace, is_biflagged, resume_switching, shuffle, Strategy};
use crate::uncrowding::{
    arm_uncrowd, bump, has_type, leg_uncrowd, uncrowd, uncrowd_canonical, BumpKind, CanonicalOrder,
    TypedWord, UncrowdWord,
};

/// Entries lie in `1..=max_entry`; total arm and leg count is at most `max_excess`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EnumBounds {
    pub max_entry: u32,
    pub max_excess: usize,
}

impl EnumBounds {
    pub fn new(max_entry: u32, max_excess: usize) -> Self {
        EnumBounds { max_entry, max_excess }
    }
}

fn sort_canonically<T: fmt::Display>(items: Vec<T>) -> Vec<T> {
    let mut keyed: Vec<(String, T)> = items.into_iter().map(|t| (t.to_string(), t)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    debug_assert!(keyed.windows(2).all(|w| w[0].0 < w[1].0), "generator produced a duplicate");
    keyed.into_iter().map(|(_, t)| t).collect()
}

/// All hook cells with entries `<= n` and at most `max_excess` arms plus legs.
fn hook_cells(n: u32, max_excess: usize) -> Vec<HookCell> {
    fn multisets(lo: u32, hi: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>, strict: bool) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        let start = if strict { cur.last().map_or(lo, |&x| x + 1) } else { cur.last().copied().unwrap_or(lo) };
        for v in start..=hi {
            cur.push(v);
            multisets(lo, hi, k - 1, cur, out, strict);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for h in 1..=n {
        for a in 0..=max_excess {
            let mut arm_lists = Vec::new();
            multisets(h, n, a, &mut Vec::new(), &mut arm_lists, false);
            for l in 0..=max_excess - a {
                let mut leg_lists = Vec::new();
                if h < n {
                    multisets(h + 1, n, l, &mut Vec::new(), &mut leg_lists, true);
                } else if l == 0 {
                    leg_lists.push(Vec::new());
                }
                for arms in &arm_lists {
                    for legs in &leg_lists {
                        out.push(HookCell::new(h, arms.clone(), legs.clone()));
                    }
                }
            }
        }
    }
    out
}

/// All hook-valued tableaux of shape `lambda` within `bounds`.
pub fn enum_hvt(lambda: &Partition, bounds: EnumBounds) -> Vec<HookValuedTableau> {
    let candidates = hook_cells(bounds.max_entry, bounds.max_excess);
    let cells: Vec<Cell> = lambda.cells().collect();
    let mut rows: Vec<Vec<HookCell>> = lambda.parts().iter().map(|&n| Vec::with_capacity(n)).collect();
    let mut out = Vec::new();

    fn go(
        idx: usize,
        budget: usize,
        cells: &[Cell],
        candidates: &[HookCell],
        rows: &mut Vec<Vec<HookCell>>,
        out: &mut Vec<HookValuedTableau>,
    ) {
        let Some(&cell) = cells.get(idx) else {
            out.push(HookValuedTableau::from_rows_unchecked(rows.clone()));
            return;
        };
        let left_max = (cell.col > 1).then(|| rows[cell.row - 1][cell.col - 2].max_entry());
        let below_max = (cell.row > 1).then(|| rows[cell.row - 2][cell.col - 1].max_entry());
        for hc in candidates {
            if hc.excess() > budget
                || left_max.is_some_and(|m| hc.hook < m)
                || below_max.is_some_and(|m| hc.hook <= m)
            {
                continue;
            }
            rows[cell.row - 1].push(hc.clone());
            go(idx + 1, budget - hc.excess(), cells, candidates, rows, out);
            rows[cell.row - 1].pop();
        }
    }

    go(0, bounds.max_excess, &cells, &candidates, &mut rows, &mut out);
    debug_assert!(out.iter().all(HookValuedTableau::is_valid));
    sort_canonically(out)
}

/// All semistandard tableaux of shape `mu` with entries in `1..=n`.
pub fn enum_ssyt(mu: &Partition, n: u32) -> Vec<HookValuedTableau> {
    enum_hvt(mu, EnumBounds::new(n, 0))
}

/// Backtracking over skew fillings; `candidates(cell)` lists allowed
/// symbols and `fits` checks a placement against the earlier cells.
/// A partial filling, cell by cell.
type Filling = BTreeMap<Cell, MixedEntry>;

fn enum_fillings(
    shape: &SkewShape,
    candidates: impl Fn(Cell) -> Vec<MixedEntry>,
    fits: impl Fn(&Filling, Cell, MixedEntry) -> bool,
) -> Vec<MixedTableau> {
    fn go(
        idx: usize,
        cells: &[Cell],
        cand: &[Vec<MixedEntry>],
        fits: &dyn Fn(&Filling, Cell, MixedEntry) -> bool,
        filled: &mut BTreeMap<Cell, MixedEntry>,
        shape: &SkewShape,
        out: &mut Vec<MixedTableau>,
    ) {
        let Some(&cell) = cells.get(idx) else {
            out.push(MixedTableau::new(shape.clone(), filled.clone()).expect("every cell filled"));
            return;
        };
        for &e in &cand[idx] {
            if fits(filled, cell, e) {
                filled.insert(cell, e);
                go(idx + 1, cells, cand, fits, filled, shape, out);
                filled.remove(&cell);
            }
        }
    }
    let cells: Vec<Cell> = shape.cells().collect();
    let cand: Vec<Vec<MixedEntry>> = cells.iter().map(|&c| candidates(c)).collect();
    let mut out = Vec::new();
    go(0, &cells, &cand, &fits, &mut BTreeMap::new(), shape, &mut out);
    out
}

fn flagged_candidates(cell: Cell) -> Vec<MixedEntry> {
    let alphas = (1..cell.col as u32).map(MixedEntry::Alpha);
    let betas = (1..cell.row as i32).map(MixedEntry::Beta);
    alphas.chain(betas).collect()
}

fn shifted_index(cell: Cell, e: MixedEntry) -> i64 {
    match e {
        MixedEntry::Alpha(k) => k as i64,
        MixedEntry::Beta(k) => k as i64 + cell.content(),
    }
}

/// All exquisite tableaux of shape `shape`.
pub fn enum_exquisite(shape: &SkewShape) -> Vec<MixedTableau> {
    // Row-major placement: the left and lower neighbours are already set,
    // which covers every adjacency of the totally column-strict condition.
    let out = enum_fillings(shape, flagged_candidates, |filled, cell, e| {
        let v = shifted_index(cell, e);
        let left_ok = cell.col < 2
            || filled.get(&Cell::new(cell.row, cell.col - 1)).is_none_or(|&l| {
                shifted_index(Cell::new(cell.row, cell.col - 1), l) >= v
            });
        let below_ok = cell.row < 2
            || filled.get(&Cell::new(cell.row - 1, cell.col)).is_none_or(|&b| {
                shifted_index(Cell::new(cell.row - 1, cell.col), b) > v
            });
        left_ok && below_ok
    });
    debug_assert!(out.iter().all(MixedTableau::is_exquisite));
    sort_canonically(out)
}

/// Placement check for `γ`-strictness against all earlier (weakly
/// southwest or same-line) cells.
fn strict_fits(filled: &BTreeMap<Cell, MixedEntry>, cell: Cell, e: MixedEntry) -> bool {
    filled.iter().all(|(&other, &f)| {
        if f.kind() != e.kind() {
            return true;
        }
        let same_line = match e.kind() {
            Greek::Alpha => other.col == cell.col,
            Greek::Beta => other.row == cell.row,
        };
        !(same_line && f.index() == e.index())
            && (!other.weakly_southwest_of(cell) || f.index() >= e.index())
    })
}

/// Sortedness as a placement check: within a row all `α` come before all
/// `β`, and an `α` may not sit above a `β`.
fn sorted_fits(filled: &BTreeMap<Cell, MixedEntry>, cell: Cell, e: MixedEntry) -> bool {
    if !e.is_alpha() {
        return true;
    }
    let left_beta = cell.col > 1
        && filled.get(&Cell::new(cell.row, cell.col - 1)).is_some_and(|l| l.is_beta());
    let below_beta = cell.row > 1
        && filled.get(&Cell::new(cell.row - 1, cell.col)).is_some_and(|b| b.is_beta());
    !left_beta && !below_beta
}

/// All biflagged tableaux of shape `shape`.
pub fn enum_biflagged(shape: &SkewShape) -> Vec<MixedTableau> {
    let out = enum_fillings(shape, flagged_candidates, |filled, cell, e| {
        sorted_fits(filled, cell, e) && strict_fits(filled, cell, e)
    });
    sort_canonically(out.into_iter().filter(is_biflagged).collect())
}

/// All `α`-column-strict, `β`-row-strict, `(α,β)`-sorted fillings of
/// `shape` with every index in `1..=max_index`.
pub fn enum_sorted_strict(shape: &SkewShape, max_index: u32) -> Vec<MixedTableau> {
    let candidates = |_: Cell| {
        let alphas = (1..=max_index).map(MixedEntry::Alpha);
        alphas.chain((1..=max_index as i32).map(MixedEntry::Beta)).collect()
    };
    let out = enum_fillings(shape, candidates, |filled, cell, e| {
        sorted_fits(filled, cell, e) && strict_fits(filled, cell, e)
    });
    debug_assert!(out.iter().all(|t| t.is_alpha_column_strict()
        && t.is_beta_row_strict()
        && t.is_sorted_alpha_beta()));
    sort_canonically(out)
}

/// `Φ(T) = (P, jdt_GG(Q))` where `(P, Q) = 𝒰_{ℒ^∞𝒜^∞}(T)`.
pub fn phi(t: &HookValuedTableau) -> (HookValuedTableau, MixedTableau) {
    let res = uncrowd_canonical(t, CanonicalOrder::LA);
    let e = gg_jdt(&res.recording).expect("canonical recording tableaux are sorted and strict");
    (res.insertion, e)
}

/// Every `T` of shape `shape(Q).inner` with entries `<= n` whose arm-only
/// uncrowding `𝒰_{𝒜^∞}` is exactly `(P, Q)`.
pub fn arm_only_preimages(
    p: &HookValuedTableau,
    q: &MixedTableau,
    n: u32,
) -> Vec<HookValuedTableau> {
    let lambda = q.shape().inner().clone();
    let excess = q.shape().size() + p.excess();
    enum_hvt(&lambda, EnumBounds::new(n, excess))
        .into_iter()
        .filter(|t| t.excess() == excess)
        .filter(|t| {
            let res = uncrowd(t, &UncrowdWord::legs_after_arms(t.arm_excess(), 0));
            res.insertion == *p && res.recording == *q
        })
        .collect()
}

/// Identifiers of the verification drivers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    /// The three commutation cases between `𝒜_b` and `ℒ_b`.
    CommuteLemma,
    /// Both canonical uncrowdings agree on `P`, and their `Q` differ by a shuffle.
    ShuffleTheorem,
    /// Single uncrowding steps add one cell and remove one arm or leg.
    UncrowdSteps,
    /// `𝒰_{ℒ^∞𝒜^∞}` is a weight-preserving bijection onto `SSYT × BFT`.
    UncrowdImage,
    /// `Φ` is a weight-preserving bijection onto `SSYT × EXQ`.
    PhiBijection,
    /// `jdt_GG` is a weight-preserving bijection `BFT(μ/λ) → EXQ(μ/λ)`.
    GgjdtBijection,
    /// Switching normal forms under random strategies, shuffle, and GG-jdt.
    SwitchConfluence,
}

impl CheckId {
    pub const ALL: [CheckId; 7] = [
        CheckId::CommuteLemma,
        CheckId::ShuffleTheorem,
        CheckId::UncrowdSteps,
        CheckId::UncrowdImage,
        CheckId::PhiBijection,
        CheckId::GgjdtBijection,
        CheckId::SwitchConfluence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::CommuteLemma => "commute_lemma",
            CheckId::ShuffleTheorem => "shuffle_theorem",
            CheckId::UncrowdSteps => "uncrowd_steps",
            CheckId::UncrowdImage => "uncrowd_image",
            CheckId::PhiBijection => "phi_bijection",
            CheckId::GgjdtBijection => "ggjdt_bijection",
            CheckId::SwitchConfluence => "switch_confluence",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownCheck(pub String);

impl fmt::Display for UnknownCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = CheckId::ALL.iter().map(|c| c.name()).collect();
        write!(f, "unknown check {:?}; expected one of {}", self.0, names.join(", "))
    }
}

impl std::error::Error for UnknownCheck {}

impl FromStr for CheckId {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, UnknownCheck> {
        CheckId::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportParameters {
    pub lambda: String,
    pub max_entry: u32,
    pub max_excess: usize,
    pub notes: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub check_id: String,
    pub parameters: ReportParameters,
    pub instances_checked: usize,
    /// Serialized counterexamples, sorted.
    pub failures: Vec<String>,
    pub passed: bool,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report without its timing, for byte comparison across runs.
    pub fn canonical_json(&self) -> String {
        VerificationReport { elapsed_ms: 0, ..self.clone() }.to_json()
    }
}

/// Number of random strategies tried per input by `switch_confluence`.
pub const CONFLUENCE_SEEDS: u64 = 100;

fn hvt_pair(p: &HookValuedTableau, q: &MixedTableau) -> String {
    format!("P = {p} ; Q = {q}")
}

fn skew_shapes(lambda: &Partition, extra: usize, max_rows: Option<usize>) -> Vec<SkewShape> {
    lambda
        .supersets(extra, max_rows)
        .into_iter()
        .map(|mu| SkewShape::new(mu, lambda.clone()).expect("superset"))
        .collect()
}

/// Runs `f` on every item in a pool of `jobs` threads and gathers the
/// failure messages in a schedule-independent order.
fn run_parallel<T: Sync>(items: &[T], jobs: usize, f: impl Fn(&T) -> Vec<String> + Sync) -> Vec<String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let mut failures: Vec<String> = pool.install(|| items.par_iter().flat_map_iter(&f).collect());
    failures.sort();
    failures
}

fn check_commute(t: &HookValuedTableau) -> Vec<String> {
    use BumpKind::{Arm as A, Leg as L};
    if t.arm_excess() == 0 || t.leg_excess() == 0 {
        return Vec::new();
    }
    let ty = |w: &[(BumpKind, u8)]| has_type(t, &TypedWord::new(w.to_vec()));
    let apply = |word: &[BumpKind]| word.iter().rev().fold(t.clone(), |cur, &k| bump(&cur, k).0);
    let mut out = Vec::new();
    if ty(&[(L, 1), (A, 1)]) && ty(&[(A, 0), (L, 1)]) {
        if !ty(&[(A, 1), (A, 0), (L, 1)]) {
            out.push(format!("case 1 type fails: {t}"));
        }
        if apply(&[L, A]) != apply(&[A, A, L]) {
            out.push(format!("case 1 LA != AAL: {t}"));
        }
    } else if ty(&[(L, 0), (A, 1)]) && ty(&[(A, 1), (L, 1)]) {
        if !ty(&[(L, 1), (L, 0), (A, 1)]) {
            out.push(format!("case 2 type fails: {t}"));
        }
        if apply(&[L, L, A]) != apply(&[A, L]) {
            out.push(format!("case 2 LLA != AL: {t}"));
        }
    } else {
        let a = bump(t, A).0;
        let y = (a.shape().size() - t.shape().size()) as u8;
        let x = (bump(&a, L).0.shape().size() - a.shape().size()) as u8;
        if !ty(&[(A, y), (L, x)]) {
            out.push(format!("case 3 type fails: {t}"));
        }
        if apply(&[L, A]) != apply(&[A, L]) {
            out.push(format!("case 3 LA != AL: {t}"));
        }
    }
    out
}

fn check_shuffle(t: &HookValuedTableau) -> Vec<String> {
    let mut out = Vec::new();
    let la = uncrowd_canonical(t, CanonicalOrder::LA);
    let al = uncrowd_canonical(t, CanonicalOrder::AL);
    if la.insertion != al.insertion {
        out.push(format!("insertion tableaux differ: {t}"));
    }
    match shuffle(&la.recording) {
        Ok(s) if s == al.recording => {}
        Ok(s) => out.push(format!("shuff(Q1) = {s} but Q2 = {} for {t}", al.recording)),
        Err(e) => out.push(format!("{e} for {t}")),
    }
    // The single-step version: one arm and one leg step in either order.
    if t.arm_excess() > 0 && t.leg_excess() > 0 {
        let one = uncrowd(t, &"LA".parse().expect("word"));
        let two = uncrowd(t, &"AL".parse().expect("word"));
        if one.insertion != two.insertion {
            out.push(format!("single-step insertion tableaux differ: {t}"));
        }
        if shuffle(&one.recording).ok().as_ref() != Some(&two.recording) {
            out.push(format!("single-step recordings not related by shuffle: {t}"));
        }
    }
    out
}

fn check_steps(t: &HookValuedTableau) -> Vec<String> {
    let mut out = Vec::new();
    let multiset = |x: &HookValuedTableau| {
        let mut v: Vec<u32> = x.cells().flat_map(|(_, hc)| hc.entries().collect::<Vec<_>>()).collect();
        v.sort_unstable();
        v
    };
    if t.arm_excess() > 0 {
        let (u, _) = arm_uncrowd(t);
        let ok = u.shape().size() == t.shape().size() + 1
            && u.arm_excess() + 1 == t.arm_excess()
            && u.leg_excess() == t.leg_excess()
            && multiset(&u) == multiset(t);
        if !ok {
            out.push(format!("arm uncrowding step: {t} -> {u}"));
        }
    }
    if t.leg_excess() > 0 {
        let (u, _) = leg_uncrowd(t);
        let ok = u.shape().size() == t.shape().size() + 1
            && u.leg_excess() + 1 == t.leg_excess()
            && u.arm_excess() == t.arm_excess()
            && multiset(&u) == multiset(t);
        if !ok {
            out.push(format!("leg uncrowding step: {t} -> {u}"));
        }
    }
    out
}

/// Compares an image set with the expected set and reports the
/// differences together with injectivity failures.
fn compare_images(
    images: Vec<(String, String)>,
    expected: BTreeSet<String>,
    failures: &mut Vec<String>,
) {
    let mut seen: BTreeMap<String, String> = BTreeMap::new();
    for (image, source) in images {
        if let Some(prev) = seen.insert(image.clone(), source.clone()) {
            failures.push(format!("not injective: {prev} and {source} both give {image}"));
        }
    }
    for image in seen.keys().filter(|k| !expected.contains(*k)) {
        failures.push(format!("unexpected image {image}"));
    }
    for missing in expected.iter().filter(|k| !seen.contains_key(*k)) {
        failures.push(format!("missing from image: {missing}"));
    }
}

fn expected_pairs(
    lambda: &Partition,
    bounds: EnumBounds,
    family: impl Fn(&SkewShape) -> Vec<MixedTableau>,
) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for shape in skew_shapes(lambda, bounds.max_excess, Some(bounds.max_entry as usize)) {
        let qs = family(&shape);
        if qs.is_empty() {
            continue;
        }
        for p in enum_ssyt(shape.outer(), bounds.max_entry) {
            for q in &qs {
                out.insert(hvt_pair(&p, q));
            }
        }
    }
    out
}

fn check_bijection(
    lambda: &Partition,
    bounds: EnumBounds,
    jobs: usize,
    map: impl Fn(&HookValuedTableau) -> (HookValuedTableau, MixedTableau) + Sync,
    in_family: impl Fn(&MixedTableau) -> bool + Sync,
    family: impl Fn(&SkewShape) -> Vec<MixedTableau>,
) -> (usize, Vec<String>) {
    let inputs = enum_hvt(lambda, bounds);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    let results: Vec<(String, String, Vec<String>)> = pool.install(|| {
        inputs
            .par_iter()
            .map(|t| {
                let (p, q) = map(t);
                let mut bad = Vec::new();
                if !p.is_ssyt() {
                    bad.push(format!("insertion tableau not semistandard: {t}"));
                }
                if !in_family(&q) {
                    bad.push(format!("recording tableau {q} outside the family for {t}"));
                }
                let product = q.weight().map(|w| p.weight().mul(&w));
                if product.as_ref() != Ok(&t.weight()) {
                    bad.push(format!("weight not preserved: {t}"));
                }
                if q.shape().size() != t.excess() {
                    bad.push(format!("added cells differ from excess: {t}"));
                }
                (hvt_pair(&p, &q), t.to_string(), bad)
            })
            .collect()
    });
    let mut failures = Vec::new();
    let mut images = Vec::with_capacity(results.len());
    for (image, source, bad) in results {
        failures.extend(bad);
        images.push((image, source));
    }
    compare_images(images, expected_pairs(lambda, bounds, family), &mut failures);
    failures.sort();
    (inputs.len(), failures)
}

fn check_ggjdt_shape(shape: &SkewShape) -> (usize, Vec<String>) {
    let bft = enum_biflagged(shape);
    let exq: BTreeSet<String> = enum_exquisite(shape).iter().map(ToString::to_string).collect();
    let mut failures = Vec::new();
    let mut images = Vec::new();
    for q in &bft {
        let e = match gg_jdt(q) {
            Ok(e) => e,
            Err(err) => {
                failures.push(format!("{err}"));
                continue;
            }
        };
        if !e.is_exquisite() {
            failures.push(format!("jdt({q}) = {e} is not exquisite"));
        }
        if e.weight() != q.weight() {
            failures.push(format!("jdt({q}) changes the weight"));
        }
        images.push((e.to_string(), q.to_string()));
    }
    compare_images(images, exq, &mut failures);
    (bft.len(), failures)
}

fn check_switching(t: &MixedTableau) -> Vec<String> {
    let mut out = Vec::new();
    let normal = match fully_switch(t, Strategy::Deterministic) {
        Ok(x) => x,
        Err(e) => return vec![e.to_string()],
    };
    for seed in 0..CONFLUENCE_SEEDS {
        let other = fully_switch(t, Strategy::Seeded(seed)).expect("precondition already checked");
        if other != normal {
            out.push(format!("seed {seed} gives {other}, default gives {normal} for {t}"));
            break;
        }
    }
    if !(normal.is_alpha_column_strict() && normal.is_beta_row_strict() && normal.is_sorted_beta_alpha())
    {
        out.push(format!("normal form {normal} is not strict and (β,α)-sorted for {t}"));
    }
    if shuffle(t).ok().as_ref() != Some(&normal) {
        out.push(format!("shuffle differs from the switching normal form for {t}"));
    }
    match gg_jdt_trace(t) {
        Ok(trace) => {
            let end = trace.last().map_or_else(|| t.clone(), |(_, x)| x.clone());
            for (_, step) in &trace {
                if !(step.is_alpha_column_strict() && step.is_beta_row_strict()) {
                    out.push(format!("GG-jdt step {step} not strict for {t}"));
                }
            }
            if resume_switching(&end, Strategy::Deterministic).ok().as_ref() != Some(&normal) {
                out.push(format!("GG-jdt result {end} does not switch to {normal} for {t}"));
            }
            let alphas = |x: &MixedTableau| {
                let mut v: Vec<MixedEntry> = x.entries().map(|(_, e)| e).collect();
                v.sort();
                v
            };
            if alphas(&end) != alphas(t) {
                out.push(format!("GG-jdt changed the entries of {t}"));
            }
        }
        Err(e) => out.push(e.to_string()),
    }
    out
}

/// Runs one verification driver.
///
/// Tableau-based checks iterate over `enum_hvt(lambda, bounds)`. The
/// shape-based checks (`ggjdt_bijection`, `switch_confluence`) iterate
/// over the skew shapes `μ/λ` with `|μ/λ| <= max_excess`; the confluence
/// check fills them with every sorted strict filling whose indices are at
/// most `max_entry`.
pub fn verify(check: CheckId, lambda: &Partition, bounds: EnumBounds, jobs: usize) -> VerificationReport {
    let start = Instant::now();
    let mut notes = String::new();
    let (instances, failures) = match check {
        CheckId::CommuteLemma | CheckId::ShuffleTheorem | CheckId::UncrowdSteps => {
            let inputs = enum_hvt(lambda, bounds);
            let f = match check {
                CheckId::CommuteLemma => check_commute,
                CheckId::ShuffleTheorem => check_shuffle,
                _ => check_steps,
            };
            (inputs.len(), run_parallel(&inputs, jobs, f))
        }
        CheckId::UncrowdImage => {
            notes = "image compared with SSYT(mu, n) x BFT(mu/lambda), |mu/lambda| <= excess".into();
            check_bijection(
                lambda,
                bounds,
                jobs,
                |t| {
                    let r = uncrowd_canonical(t, CanonicalOrder::LA);
                    (r.insertion, r.recording)
                },
                is_biflagged,
                enum_biflagged,
            )
        }
        CheckId::PhiBijection => {
            notes = "image compared with SSYT(mu, n) x EXQ(mu/lambda), |mu/lambda| <= excess".into();
            check_bijection(lambda, bounds, jobs, phi, MixedTableau::is_exquisite, enum_exquisite)
        }
        CheckId::GgjdtBijection => {
            notes = "all skew shapes mu/lambda with |mu/lambda| <= excess".into();
            let shapes = skew_shapes(lambda, bounds.max_excess, None);
            let pool =
                rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
            let per_shape: Vec<(usize, Vec<String>)> =
                pool.install(|| shapes.par_iter().map(check_ggjdt_shape).collect());
            let count = per_shape.iter().map(|(n, _)| n).sum();
            let mut failures: Vec<String> = per_shape.into_iter().flat_map(|(_, f)| f).collect();
            failures.sort();
            (count, failures)
        }
        CheckId::SwitchConfluence => {
            notes = format!(
                "sorted strict fillings of mu/lambda, |mu/lambda| <= excess, indices <= n; {CONFLUENCE_SEEDS} seeded strategies each"
            );
            let shapes = skew_shapes(lambda, bounds.max_excess, None);
            let mut inputs = Vec::new();
            let mut failures = Vec::new();
            for shape in &shapes {
                let fillings = enum_sorted_strict(shape, bounds.max_entry);
                // Distinct inputs of one shape must have distinct normal forms.
                let mut normal_forms: BTreeMap<String, String> = BTreeMap::new();
                for t in &fillings {
                    let x = fully_switch(t, Strategy::Deterministic).expect("sorted strict input");
                    if let Some(prev) = normal_forms.insert(x.to_string(), t.to_string()) {
                        failures.push(format!("{prev} and {t} share the normal form {x}"));
                    }
                }
                inputs.extend(fillings);
            }
            failures.extend(run_parallel(&inputs, jobs, check_switching));
            failures.sort();
            (inputs.len(), failures)
        }
    };
    VerificationReport {
        schema: 1,
        check_id: check.name().to_string(),
        parameters: ReportParameters {
            lambda: lambda.to_string(),
            max_entry: bounds.max_entry,
            max_excess: bounds.max_excess,
            notes,
        },
        instances_checked: instances,
        passed: failures.is_empty(),
        failures,
        elapsed_ms: start.elapsed().as_millis(),
    }
}
