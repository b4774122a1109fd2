//! Arm and leg bumping, single uncrowding steps and word-indexed uncrowding.
//!
//! Words are written in composition order: the word `LLAA` applies the
//! rightmost `A` first. Every operation here is a pure function of its
//! input tableau.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::hvt::{HookCell, HookValuedTableau};
use crate::mixed::{MixedEntry, MixedTableau};
use crate::shape::{Cell, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BumpKind {
    Arm,
    Leg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BumpRecord {
    pub op_kind: BumpKind,
    /// Cell that held the selected largest arm (or leg) entry.
    pub origin: Cell,
    /// The new cell, when the shape grew.
    pub created: Option<Cell>,
    pub moved_entry: u32,
}

impl BumpRecord {
    /// The symbol an uncrowding step with this record writes into `Q`.
    pub fn recorded_symbol(&self) -> MixedEntry {
        match self.op_kind {
            BumpKind::Arm => MixedEntry::Alpha(self.origin.col as u32),
            BumpKind::Leg => MixedEntry::Beta(self.origin.row as i32),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("uncrowding words use the letters A and L, or the forms LAinf / ALinf; got {0:?}")]
pub struct WordError(String);

/// A word `f_n ... f_1` over `{A, L}`; `letters[0]` is `f_n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UncrowdWord {
    pub letters: Vec<BumpKind>,
}

impl UncrowdWord {
    pub fn new(letters: Vec<BumpKind>) -> Self {
        UncrowdWord { letters }
    }

    /// `L^legs A^arms`, i.e. all arm steps first.
    pub fn legs_after_arms(arms: usize, legs: usize) -> Self {
        let mut letters = vec![BumpKind::Leg; legs];
        letters.extend(std::iter::repeat_n(BumpKind::Arm, arms));
        UncrowdWord { letters }
    }

    /// `A^arms L^legs`, i.e. all leg steps first.
    pub fn arms_after_legs(arms: usize, legs: usize) -> Self {
        let mut letters = vec![BumpKind::Arm; arms];
        letters.extend(std::iter::repeat_n(BumpKind::Leg, legs));
        UncrowdWord { letters }
    }
}

impl FromStr for UncrowdWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        s.chars()
            .map(|ch| match ch {
                'A' => Ok(BumpKind::Arm),
                'L' => Ok(BumpKind::Leg),
                _ => Err(WordError(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(UncrowdWord::new)
    }
}

impl fmt::Display for UncrowdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l {
                BumpKind::Arm => "A",
                BumpKind::Leg => "L",
            })?;
        }
        Ok(())
    }
}

/// A word `f_k^(ε_k) ... f_1^(ε_1)` of bumping operators; `letters[0]` is applied last.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TypedWord {
    pub letters: Vec<(BumpKind, u8)>,
}

impl TypedWord {
    pub fn new(letters: Vec<(BumpKind, u8)>) -> Self {
        TypedWord { letters }
    }
}

/// One single uncrowding step of [`uncrowd`], for traces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncrowdStep {
    pub letter: BumpKind,
    /// `None` when the step had nothing to move.
    pub record: Option<BumpRecord>,
    pub result: HookValuedTableau,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncrowdResult {
    pub insertion: HookValuedTableau,
    pub recording: MixedTableau,
    /// One record per effective step, in the order applied.
    pub records: Vec<BumpRecord>,
    pub steps: Vec<UncrowdStep>,
}

type Rows = Vec<Vec<HookCell>>;

fn cell_mut(rows: &mut Rows, cell: Cell) -> &mut HookCell {
    &mut rows[cell.row - 1][cell.col - 1]
}

fn col_height(rows: &Rows, col: usize) -> usize {
    rows.iter().take_while(|row| row.len() >= col).count()
}

fn merge_sorted(into: &mut Vec<u32>, extra: Vec<u32>) {
    into.extend(extra);
    into.sort_unstable();
}

fn finish(rows: Rows) -> HookValuedTableau {
    let t = HookValuedTableau::from_rows_unchecked(rows);
    debug_assert!(t.is_valid(), "bumping produced an invalid tableau: {t}");
    t
}

/// One arm-uncrowding bump `𝒜_b`.
pub fn arm_bump(t: &HookValuedTableau) -> (HookValuedTableau, Option<BumpRecord>) {
    let mut rows = t.clone().into_rows();
    let Some(c) = (1..=t.shape().row_len(1))
        .rev()
        .find(|&c| (1..=t.shape().col_len(c)).any(|r| !rows[r - 1][c - 1].arms.is_empty()))
    else {
        return (t.clone(), None);
    };
    // Largest arm in column c; equal maxima can only share one cell.
    let (r, a) = (1..=t.shape().col_len(c))
        .filter_map(|r| rows[r - 1][c - 1].arms.last().map(|&a| (r, a)))
        .max_by_key(|&(r, a)| (a, std::cmp::Reverse(r)))
        .expect("column c has an arm");
    debug_assert_eq!(
        (1..=t.shape().col_len(c)).filter(|&rr| rows[rr - 1][c - 1].arms.contains(&a)).count(),
        1,
        "copies of the largest arm lie in a single cell"
    );
    let origin = Cell::new(r, c);
    cell_mut(&mut rows, origin).arms.pop();

    let height = col_height(&rows, c + 1);
    // Column c+1 holds no arms, and its cells increase strictly upward, so
    // the smallest entry >= a sits in the lowest cell having one.
    let target = (1..=height).find(|&rr| rows[rr - 1][c].max_entry() >= a);
    let landed = match target {
        Some(rt) => {
            let hc = cell_mut(&mut rows, Cell::new(rt, c + 1));
            debug_assert!(hc.arms.is_empty());
            let k = if hc.hook >= a {
                std::mem::replace(&mut hc.hook, a)
            } else {
                let pos = hc.legs.iter().position(|&l| l >= a).expect("some leg is >= a");
                std::mem::replace(&mut hc.legs[pos], a)
            };
            hc.arms.push(k);
            Cell::new(rt, c + 1)
        }
        None => {
            let new_row = height + 1;
            if new_row > rows.len() {
                rows.push(Vec::new());
            }
            debug_assert_eq!(rows[new_row - 1].len(), c, "new cell extends its row");
            rows[new_row - 1].push(HookCell::single(a));
            Cell::new(new_row, c + 1)
        }
    };
    if landed.row == r {
        let origin_cell = cell_mut(&mut rows, origin);
        let split = origin_cell.legs.partition_point(|&l| l <= a);
        let moved = origin_cell.legs.split_off(split);
        merge_sorted(&mut cell_mut(&mut rows, landed).legs, moved);
    }
    let record = BumpRecord {
        op_kind: BumpKind::Arm,
        origin,
        created: target.is_none().then_some(landed),
        moved_entry: a,
    };
    (finish(rows), Some(record))
}

/// One leg-uncrowding bump `ℒ_b`.
///
/// When the bumped entry lands in the cell directly above its origin, the
/// origin's arms that are at least `ℓ` travel with it to that cell.
pub fn leg_bump(t: &HookValuedTableau) -> (HookValuedTableau, Option<BumpRecord>) {
    let mut rows = t.clone().into_rows();
    let Some(r) = (1..=rows.len()).rev().find(|&r| rows[r - 1].iter().any(|hc| !hc.legs.is_empty()))
    else {
        return (t.clone(), None);
    };
    // Row strictness makes the largest leg of a row unique.
    let (c, l) = rows[r - 1]
        .iter()
        .enumerate()
        .filter_map(|(c, hc)| hc.legs.last().map(|&l| (c + 1, l)))
        .max_by_key(|&(_, l)| l)
        .expect("row r has a leg");
    let origin = Cell::new(r, c);
    cell_mut(&mut rows, origin).legs.pop();

    let above_len = rows.get(r).map_or(0, Vec::len);
    // Row r+1 has no legs; the leftmost cell holding an entry > ℓ carries
    // the smallest such entry.
    let target = (1..=above_len).find(|&cc| rows[r][cc - 1].max_entry() > l);
    let landed = match target {
        Some(ct) => {
            let hc = cell_mut(&mut rows, Cell::new(r + 1, ct));
            debug_assert!(hc.legs.is_empty());
            let k = if hc.hook > l {
                std::mem::replace(&mut hc.hook, l)
            } else {
                let pos = hc.arms.iter().position(|&x| x > l).expect("some arm exceeds ℓ");
                std::mem::replace(&mut hc.arms[pos], l)
            };
            hc.legs.push(k);
            Cell::new(r + 1, ct)
        }
        None => {
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push(HookCell::single(l));
            Cell::new(r + 1, above_len + 1)
        }
    };
    if landed.col == c {
        let origin_cell = cell_mut(&mut rows, origin);
        let split = origin_cell.arms.partition_point(|&x| x < l);
        let moved = origin_cell.arms.split_off(split);
        merge_sorted(&mut cell_mut(&mut rows, landed).arms, moved);
    }
    let record = BumpRecord {
        op_kind: BumpKind::Leg,
        origin,
        created: target.is_none().then_some(landed),
        moved_entry: l,
    };
    (finish(rows), Some(record))
}

pub fn bump(t: &HookValuedTableau, kind: BumpKind) -> (HookValuedTableau, Option<BumpRecord>) {
    match kind {
        BumpKind::Arm => arm_bump(t),
        BumpKind::Leg => leg_bump(t),
    }
}

/// Iterates a bump until the shape grows. The record keeps the origin and
/// moved entry of the first bump and the cell created by the last.
fn single_uncrowd(t: &HookValuedTableau, kind: BumpKind) -> (HookValuedTableau, Option<BumpRecord>) {
    let (mut cur, first) = bump(t, kind);
    let Some(mut record) = first else {
        return (cur, None);
    };
    // Each bump pushes one entry strictly right (or up), so the number of
    // bumps is bounded by the perimeter of the shape plus one.
    let budget = t.shape().row_len(1) + t.shape().len() + 2;
    let mut steps = 1;
    while record.created.is_none() {
        let (next, rec) = bump(&cur, kind);
        let rec = rec.expect("the entry being uncrowded is still present");
        record.created = rec.created;
        cur = next;
        steps += 1;
        assert!(steps <= budget, "uncrowding did not grow the shape within {budget} bumps");
    }
    (cur, Some(record))
}

/// Single arm uncrowding `𝒜`.
pub fn arm_uncrowd(t: &HookValuedTableau) -> (HookValuedTableau, Option<BumpRecord>) {
    single_uncrowd(t, BumpKind::Arm)
}

/// Single leg uncrowding `ℒ`.
pub fn leg_uncrowd(t: &HookValuedTableau) -> (HookValuedTableau, Option<BumpRecord>) {
    single_uncrowd(t, BumpKind::Leg)
}

/// `𝒰_w(T)`: applies the letters of `w` from right to left, recording each
/// effective step in `Q`.
pub fn uncrowd(t: &HookValuedTableau, w: &UncrowdWord) -> UncrowdResult {
    let mut cur = t.clone();
    let mut filled: BTreeMap<Cell, MixedEntry> = BTreeMap::new();
    let mut records = Vec::new();
    let mut steps = Vec::with_capacity(w.letters.len());
    for &letter in w.letters.iter().rev() {
        let (next, record) = single_uncrowd(&cur, letter);
        if let Some(rec) = &record {
            let cell = rec.created.expect("uncrowding grows the shape");
            filled.insert(cell, rec.recorded_symbol());
            records.push(rec.clone());
        }
        steps.push(UncrowdStep { letter, record, result: next.clone() });
        cur = next;
    }
    let shape = SkewShape::new(cur.shape().clone(), t.shape().clone())
        .expect("uncrowding only adds cells");
    let recording = MixedTableau::new(shape, filled).expect("one symbol per new cell");
    UncrowdResult { insertion: cur, recording, records, steps }
}

/// The two canonical complete uncrowdings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalOrder {
    /// `𝒰_{ℒ^∞𝒜^∞}`: every arm first, then every leg.
    LA,
    /// `𝒰_{𝒜^∞ℒ^∞}`: every leg first, then every arm.
    AL,
}

pub fn uncrowd_canonical(t: &HookValuedTableau, order: CanonicalOrder) -> UncrowdResult {
    let (arms, legs) = (t.arm_excess(), t.leg_excess());
    let word = match order {
        CanonicalOrder::LA => UncrowdWord::legs_after_arms(arms, legs),
        CanonicalOrder::AL => UncrowdWord::arms_after_legs(arms, legs),
    };
    let result = uncrowd(t, &word);
    debug_assert!(result.insertion.is_ssyt());
    result
}

/// Whether each bump of `tw` (applied right to left) changes the number of
/// cells by exactly its `ε`.
pub fn has_type(t: &HookValuedTableau, tw: &TypedWord) -> bool {
    let mut cur = t.clone();
    for &(kind, eps) in tw.letters.iter().rev() {
        let before = cur.shape().size();
        cur = bump(&cur, kind).0;
        if cur.shape().size() != before + eps as usize {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_hvt, parse_mixed};

    fn h(s: &str) -> HookValuedTableau {
        parse_hvt(s).unwrap()
    }

    #[test]
    fn three_arm_bumps_into_a_new_column() {
        let t = h("1+1|1+2^2|3^5,6|7^8 / 2|3+4|9");
        let (t1, r1) = arm_bump(&t);
        assert_eq!(t1.to_string(), "1+1|1+2^2|3+5^4,6|7^8 / 2|3|9");
        assert_eq!(r1.unwrap().origin, Cell::new(2, 2));
        let (t2, _) = arm_bump(&t1);
        assert_eq!(t2.to_string(), "1+1|1+2^2|3^4|5+7^6,8 / 2|3|9");
        let (t3, r3) = arm_bump(&t2);
        assert_eq!(t3.to_string(), "1+1|1+2^2|3^4|5^6|7^8 / 2|3|9");
        assert_eq!(r3.unwrap().created, Some(Cell::new(1, 5)));
        let (u, rec) = arm_uncrowd(&t);
        assert_eq!(u, t3);
        let rec = rec.unwrap();
        assert_eq!(rec.origin.col, 2);
        assert_eq!(rec.created, Some(Cell::new(1, 5)));
    }

    #[test]
    fn two_leg_bumps_with_arm_migration() {
        let t = h("1^2|2+2,4^3|4+5 / 3+3|5+6 / 4");
        let (t1, r1) = leg_bump(&t);
        assert_eq!(t1.to_string(), "1^2|2+2|4+5 / 3+3|3+4,6^5 / 4");
        assert_eq!(r1.unwrap().created, None);
        let (t2, _) = leg_bump(&t1);
        assert_eq!(t2.to_string(), "1^2|2+2|4+5 / 3+3|3+4 / 4|5+6");
        let (u, rec) = leg_uncrowd(&t);
        assert_eq!(u, t2);
        let rec = rec.unwrap();
        assert_eq!((rec.origin.row, rec.created), (1, Some(Cell::new(3, 2))));
    }

    #[test]
    fn llaa_uncrowding_trace() {
        let t = h("1|1|1|3^5 / 2|2+4 / 3|5+7^6 / 4");
        let res = uncrowd(&t, &"LLAA".parse().unwrap());
        let mids: Vec<String> = res.steps.iter().map(|s| s.result.to_string()).collect();
        assert_eq!(
            mids,
            [
                "1|1|1|3^5 / 2|2+4|7 / 3|5^6 / 4",
                "1|1|1|3^5 / 2|2|4|7 / 3|5^6 / 4",
                "1|1|1|3^5 / 2|2|4|7 / 3|5 / 4|6",
                "1|1|1|3 / 2|2|4|5 / 3|5|7 / 4|6",
            ]
        );
        assert_eq!(res.recording, parse_mixed(".|.|.|. / .|.|a2|a2 / .|.|b1 / .|b3").unwrap());
        assert_eq!(res.records[0].created, Some(Cell::new(2, 3)));
        assert_eq!(res.records[2].origin.row, 3);
        assert_eq!(res.records[2].created, Some(Cell::new(4, 2)));
        assert_eq!(uncrowd_canonical(&t, CanonicalOrder::LA), res);
    }

    #[test]
    fn typed_word_cell_counts() {
        use BumpKind::{Arm, Leg};
        let t = h("1|1|2|2^3 / 2+2,2|2^3|3^4 / 4 / 5+5");
        let ty = |w: &[(BumpKind, u8)]| has_type(&t, &TypedWord::new(w.to_vec()));
        assert!(ty(&[(Arm, 1)]));
        assert!(ty(&[(Leg, 1)]));
        assert!(ty(&[(Leg, 0), (Arm, 1)]));
        assert!(ty(&[(Arm, 1), (Leg, 1)]));
        assert!(!ty(&[(Arm, 0)]));
        assert_eq!(arm_bump(&t).0.to_string(), "1|1|2|2^3 / 2+2,2|2^3|3^4 / 4|5 / 5");
    }

    #[test]
    fn leg_only_uncrowding_of_a_two_leg_tableau() {
        let p1 = h("1^2|2^3 / 3");
        let res = uncrowd_canonical(&p1, CanonicalOrder::LA);
        assert_eq!(res.insertion.to_string(), "1|2 / 2|3 / 3");
        assert_eq!(res.recording.to_string(), ".|. / .|b1 / b1");
    }

    #[test]
    fn ssyt_is_fixed() {
        let t = HookValuedTableau::from_entries(&[&[1, 1, 2], &[2, 3]]).unwrap();
        assert_eq!(arm_bump(&t), (t.clone(), None));
        assert_eq!(leg_bump(&t), (t.clone(), None));
        assert!(!has_type(&t, &TypedWord::new(vec![(BumpKind::Arm, 1)])));
        let res = uncrowd(&t, &"LALA".parse().unwrap());
        assert_eq!(res.insertion, t);
        assert_eq!(res.recording.shape().size(), 0);
        assert!(res.records.is_empty());
    }

    #[test]
    fn words_parse() {
        assert!("LAX".parse::<UncrowdWord>().is_err());
        assert_eq!(UncrowdWord::legs_after_arms(2, 1).to_string(), "LAA");
        assert_eq!(UncrowdWord::arms_after_legs(2, 1).to_string(), "AAL");
    }
}
