//! Switching `α`-entries past `β`-entries in mixed tableaux: single
//! switches, the fully switched normal form, the shuffle strategy and the
//! Goulden-Greene jeu de taquin.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::mixed::{MixedEntry, MixedTableau};
use crate::shape::Cell;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Up,
    Right,
}

/// Swap the `α` at `cell` with the neighbour in `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SwitchMove {
    pub cell: Cell,
    pub direction: Direction,
}

impl SwitchMove {
    pub fn target(self) -> Cell {
        match self.direction {
            Direction::Up => self.cell.above(),
            Direction::Right => self.cell.right(),
        }
    }
}

impl fmt::Display for SwitchMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.direction {
            Direction::Up => 'V',
            Direction::Right => 'H',
        };
        write!(f, "{tag}{}", self.cell)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwitchError {
    #[error("precondition violated: tableau {tableau} is not {requirement}")]
    PreconditionViolation { tableau: String, requirement: &'static str },
}

/// Which strategy [`fully_switch`] uses to pick the next switch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Rows top to bottom, columns left to right, upward before rightward.
    Deterministic,
    /// Uniformly among all available switches, from a seeded generator.
    Seeded(u64),
}

fn require(t: &MixedTableau, ok: bool, requirement: &'static str) -> Result<(), SwitchError> {
    if ok {
        Ok(())
    } else {
        Err(SwitchError::PreconditionViolation { tableau: t.to_string(), requirement })
    }
}

fn require_strict(t: &MixedTableau) -> Result<(), SwitchError> {
    require(
        t,
        t.is_alpha_column_strict() && t.is_beta_row_strict(),
        "α-column-strict and β-row-strict",
    )
}

fn require_sorted(t: &MixedTableau) -> Result<(), SwitchError> {
    require_strict(t)?;
    require(t, t.is_sorted_alpha_beta(), "(α,β)-sorted")
}

fn is_strict(t: &MixedTableau) -> bool {
    t.is_alpha_column_strict() && t.is_beta_row_strict()
}

fn switch_unchecked(t: &MixedTableau, mv: SwitchMove) -> Option<MixedTableau> {
    match (t.get(mv.cell), t.get(mv.target())) {
        (Some(MixedEntry::Alpha(_)), Some(MixedEntry::Beta(_))) => {
            let swapped = t.swapped(mv.cell, mv.target());
            is_strict(&swapped).then_some(swapped)
        }
        _ => None,
    }
}

/// Performs the switch `mv` if it is legal.
pub fn try_switch(t: &MixedTableau, mv: SwitchMove) -> Result<Option<MixedTableau>, SwitchError> {
    require_strict(t)?;
    Ok(switch_unchecked(t, mv))
}

fn moves_in_scan_order(t: &MixedTableau) -> Vec<SwitchMove> {
    let outer = t.shape().outer();
    let mut out = Vec::new();
    for r in (1..=outer.len()).rev() {
        for c in 1..=outer.row_len(r) {
            for direction in [Direction::Up, Direction::Right] {
                out.push(SwitchMove { cell: Cell::new(r, c), direction });
            }
        }
    }
    out
}

/// Every legal switch, in deterministic scan order.
pub fn available_switches(t: &MixedTableau) -> Vec<SwitchMove> {
    moves_in_scan_order(t).into_iter().filter(|&mv| switch_unchecked(t, mv).is_some()).collect()
}

fn budget(t: &MixedTableau) -> usize {
    2 * t.alpha_count() * t.shape().size() + 1
}

/// Switches until no switch applies, returning the moves made.
pub fn fully_switch_trace(
    t: &MixedTableau,
    strategy: Strategy,
) -> Result<Vec<(SwitchMove, MixedTableau)>, SwitchError> {
    require_sorted(t)?;
    Ok(switch_loop(t, strategy))
}

/// Keeps switching a partly switched tableau until no switch applies.
///
/// Unlike [`fully_switch`] the input need not be sorted, only
/// `α`-column-strict and `β`-row-strict, so this can pick up where
/// another sequence of switches (a GG-jdt run, say) stopped.
pub fn resume_switching(t: &MixedTableau, strategy: Strategy) -> Result<MixedTableau, SwitchError> {
    require_strict(t)?;
    let trace = switch_loop(t, strategy);
    Ok(trace.last().map_or_else(|| t.clone(), |(_, n)| n.clone()))
}

fn switch_loop(t: &MixedTableau, strategy: Strategy) -> Vec<(SwitchMove, MixedTableau)> {
    let mut rng = match strategy {
        Strategy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        Strategy::Deterministic => None,
    };
    let mut cur = t.clone();
    let mut trace = Vec::new();
    loop {
        let next = match rng.as_mut() {
            None => moves_in_scan_order(&cur)
                .into_iter()
                .find_map(|mv| switch_unchecked(&cur, mv).map(|n| (mv, n))),
            Some(rng) => {
                let moves = available_switches(&cur);
                moves.choose(rng).map(|&mv| (mv, switch_unchecked(&cur, mv).expect("available")))
            }
        };
        let Some((mv, n)) = next else { break };
        trace.push((mv, n.clone()));
        cur = n;
        assert!(trace.len() <= budget(t), "switching exceeded its step budget on {t}");
    }
    trace
}

/// The fully switched normal form; independent of `strategy`.
pub fn fully_switch(t: &MixedTableau, strategy: Strategy) -> Result<MixedTableau, SwitchError> {
    let trace = fully_switch_trace(t, strategy)?;
    Ok(trace.last().map_or_else(|| t.clone(), |(_, n)| n.clone()))
}

fn beta_at(t: &MixedTableau, cell: Cell) -> Option<i32> {
    match t.get(cell) {
        Some(MixedEntry::Beta(k)) => Some(k),
        _ => None,
    }
}

fn alpha_at(t: &MixedTableau, cell: Cell) -> Option<u32> {
    match t.get(cell) {
        Some(MixedEntry::Alpha(k)) => Some(k),
        _ => None,
    }
}

fn has_beta_neighbour(t: &MixedTableau, cell: Cell) -> bool {
    beta_at(t, cell.above()).is_some() || beta_at(t, cell.right()).is_some()
}

/// The shuffle, with every individual swap.
pub fn shuffle_trace(t: &MixedTableau) -> Result<Vec<(SwitchMove, MixedTableau)>, SwitchError> {
    require_sorted(t)?;
    let mut cur = t.clone();
    let mut trace = Vec::new();
    loop {
        // Smallest index first, then the rightmost such α.
        let pick = cur
            .entries()
            .filter_map(|(cell, e)| match e {
                MixedEntry::Alpha(k) if has_beta_neighbour(&cur, cell) => Some((k, cell)),
                _ => None,
            })
            .min_by_key(|&(k, cell)| (k, std::cmp::Reverse(cell.col)));
        let Some((_, mut cell)) = pick else { break };
        while has_beta_neighbour(&cur, cell) {
            let direction = match (beta_at(&cur, cell.above()), beta_at(&cur, cell.right())) {
                (Some(k), Some(j)) if k > j => Direction::Up,
                (Some(_), Some(_)) => Direction::Right,
                (Some(_), None) => Direction::Up,
                _ => Direction::Right,
            };
            let mv = SwitchMove { cell, direction };
            cur = cur.swapped(cell, mv.target());
            trace.push((mv, cur.clone()));
            cell = mv.target();
            assert!(trace.len() <= budget(t), "shuffle exceeded its step budget on {t}");
        }
    }
    Ok(trace)
}

/// `shuff(T)`.
pub fn shuffle(t: &MixedTableau) -> Result<MixedTableau, SwitchError> {
    let trace = shuffle_trace(t)?;
    Ok(trace.last().map_or_else(|| t.clone(), |(_, n)| n.clone()))
}

/// An `α`-entry that a GG-jdt slide can move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OutOfOrderWitness {
    pub cell: Cell,
    pub horizontal_applies: bool,
    pub vertical_applies: bool,
}

fn witness_at(t: &MixedTableau, cell: Cell) -> Option<OutOfOrderWitness> {
    let r = alpha_at(t, cell)? as i64;
    let (i, j) = (cell.row as i64, cell.col as i64);
    let horizontal_applies = beta_at(t, cell.right()).is_some_and(|s| r < s as i64 + (j + 1) - i);
    let vertical_applies = beta_at(t, cell.above()).is_some_and(|u| r <= u as i64 + j - (i + 1));
    (horizontal_applies || vertical_applies).then_some(OutOfOrderWitness {
        cell,
        horizontal_applies,
        vertical_applies,
    })
}

fn out_of_order(t: &MixedTableau) -> Vec<OutOfOrderWitness> {
    t.entries().filter_map(|(cell, _)| witness_at(t, cell)).collect()
}

/// All out-of-order `α`-entries, in row-major order.
pub fn gg_out_of_order(t: &MixedTableau) -> Result<Vec<OutOfOrderWitness>, SwitchError> {
    require_strict(t)?;
    Ok(out_of_order(t))
}

fn gg_slide(t: &MixedTableau, w: OutOfOrderWitness) -> SwitchMove {
    let direction = match (w.horizontal_applies, w.vertical_applies) {
        (true, true) => {
            let s = beta_at(t, w.cell.right()).expect("horizontal slide target");
            let u = beta_at(t, w.cell.above()).expect("vertical slide target");
            if u <= s {
                Direction::Right
            } else {
                Direction::Up
            }
        }
        (true, false) => Direction::Right,
        _ => Direction::Up,
    };
    SwitchMove { cell: w.cell, direction }
}

/// The GG-jdt map with each slide it performs.
pub fn gg_jdt_trace(t: &MixedTableau) -> Result<Vec<(SwitchMove, MixedTableau)>, SwitchError> {
    require_sorted(t)?;
    let mut cur = t.clone();
    let mut trace = Vec::new();
    loop {
        let witnesses = out_of_order(&cur);
        // Smallest α-index, then the rightmost cell holding it.
        let Some(&w) = witnesses.iter().min_by_key(|w| {
            (alpha_at(&cur, w.cell).expect("witness holds an α"), std::cmp::Reverse(w.cell.col))
        }) else {
            break;
        };
        let mv = gg_slide(&cur, w);
        cur = cur.swapped(mv.cell, mv.target());
        debug_assert!(is_strict(&cur), "GG-jdt slide broke strictness: {cur}");
        trace.push((mv, cur.clone()));
        assert!(trace.len() <= budget(t), "GG-jdt exceeded its step budget on {t}");
    }
    Ok(trace)
}

/// `jdt_GG(T)`.
pub fn gg_jdt(t: &MixedTableau) -> Result<MixedTableau, SwitchError> {
    let trace = gg_jdt_trace(t)?;
    Ok(trace.last().map_or_else(|| t.clone(), |(_, n)| n.clone()))
}

/// Strict, `(α,β)`-sorted, and flagged both before and after shuffling.
pub fn is_biflagged(t: &MixedTableau) -> bool {
    is_strict(t)
        && t.is_sorted_alpha_beta()
        && t.is_flagged_mixed()
        && shuffle(t).is_ok_and(|s| s.is_flagged_mixed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_mixed;

    fn m(s: &str) -> MixedTableau {
        parse_mixed(s).unwrap()
    }

    const LONG: &str = ".|a2|a2|a1|b5|b1 / a2|a1|b6|b2|b1 / b8|b6|b5|b2";
    const SHUFFLED_LONG: &str = ".|b6|b5|b2|b1|a1 / b8|b6|b5|b1|a2 / b2|a2|a2|a1";

    #[test]
    fn first_switch_of_the_long_tableau() {
        let q = m(LONG);
        let mv = SwitchMove { cell: Cell::new(1, 4), direction: Direction::Right };
        let next = try_switch(&q, mv).unwrap().unwrap();
        assert_eq!(next.to_string(), ".|a2|a2|b5|a1|b1 / a2|a1|b6|b2|b1 / b8|b6|b5|b2");
    }

    #[test]
    fn shuffle_and_normal_form_agree() {
        let q = m(LONG);
        assert_eq!(shuffle(&q).unwrap().to_string(), SHUFFLED_LONG);
        assert_eq!(fully_switch(&q, Strategy::Deterministic).unwrap().to_string(), SHUFFLED_LONG);
        for seed in 0..20 {
            assert_eq!(fully_switch(&q, Strategy::Seeded(seed)).unwrap().to_string(), SHUFFLED_LONG);
        }
        let done = m(SHUFFLED_LONG);
        assert!(available_switches(&done).is_empty());
    }

    #[test]
    fn switching_a_beta_does_nothing() {
        let q = m(LONG);
        let mv = SwitchMove { cell: Cell::new(1, 5), direction: Direction::Right };
        assert_eq!(try_switch(&q, mv).unwrap(), None);
    }

    #[test]
    fn precondition_is_checked() {
        let bad = m("a1 / a1");
        assert!(matches!(shuffle(&bad), Err(SwitchError::PreconditionViolation { .. })));
        assert!(matches!(gg_out_of_order(&bad), Err(SwitchError::PreconditionViolation { .. })));
    }

    #[test]
    fn gg_jdt_trace_on_the_tall_tableau() {
        let w8 = ".|.|.|.|.|.|.|.";
        let inner = [w8; 6].join(" / ");
        let q = m(&format!("{inner} / .|.|.|a2|a2|a1|b5|b1 / .|.|a2|a1|b6|b2|b1 / .|.|b8|b6|b5|b2"));
        let first = gg_out_of_order(&q).unwrap();
        assert!(first.iter().any(|w| w.cell == Cell::new(7, 6) && w.horizontal_applies));
        let trace = gg_jdt_trace(&q).unwrap();
        let moves: Vec<String> = trace.iter().map(|(mv, _)| mv.to_string()).collect();
        assert_eq!(
            moves,
            ["H(7,6)", "H(7,7)", "H(8,4)", "V(8,5)", "H(7,5)", "V(7,4)", "V(8,3)"]
        );
        let e = gg_jdt(&q).unwrap();
        let expected =
            format!("{inner} / .|.|.|b6|b5|a2|b1|a1 / .|.|b8|a2|b5|b2|b1 / .|.|a2|b6|a1|b2");
        assert_eq!(e.to_string(), expected);
        assert!(gg_out_of_order(&e).unwrap().is_empty());
        let shifted = e.c_beta_shift(crate::mixed::Sign::Plus);
        let expected_shift =
            format!("{inner} / .|.|.|b3|b3|a2|b1|a1 / .|.|b3|a2|b2|b0|b0 / .|.|a2|b1|a1|b-1");
        assert_eq!(shifted.to_string(), expected_shift);
        assert!(shifted.is_totally_column_strict());
    }

    #[test]
    fn biflagged_members_and_outsider() {
        for s in [
            ".|.|a2 / .|a1|b1 / b2",
            ".|.|a2 / .|a1|b1 / b1",
            ".|.|a2 / .|a1|a1 / b2",
            ".|.|a2 / .|a1|a1 / b1",
        ] {
            assert!(is_biflagged(&m(s)), "{s}");
        }
        let outsider = m(".|.|a1 / .|a1|b1 / b2");
        assert_eq!(shuffle(&outsider).unwrap().to_string(), ".|.|b1 / .|a1|a1 / b2");
        assert!(!is_biflagged(&outsider));
    }

    #[test]
    fn gg_jdt_preserves_listing_order() {
        let pairs = [
            (".|.|a2 / .|a1|b1 / b2", ".|.|a2 / .|b1|a1 / b2"),
            (".|.|a2 / .|a1|b1 / b1", ".|.|a2 / .|b1|a1 / b1"),
            (".|.|a2 / .|a1|a1 / b2", ".|.|a2 / .|a1|a1 / b2"),
            (".|.|a2 / .|a1|a1 / b1", ".|.|a2 / .|a1|a1 / b1"),
        ];
        for (b, e) in pairs {
            assert_eq!(gg_jdt(&m(b)).unwrap().to_string(), e);
        }
    }

    #[test]
    fn only_betas() {
        let q = m(".|b1 / b2");
        assert!(gg_out_of_order(&q).unwrap().is_empty());
        assert_eq!(gg_jdt(&q).unwrap(), q);
        assert_eq!(shuffle(&q).unwrap(), q);
        assert!(is_biflagged(&MixedTableau::empty_of(&crate::shape::Partition::empty())));
    }

    #[test]
    fn only_alphas_are_unchanged() {
        let q = m(".|a1|a1 / a2");
        assert_eq!(fully_switch(&q, Strategy::Deterministic).unwrap(), q);
    }

    #[test]
    fn non_adjacent_pair_is_unchanged() {
        let q = m(".|a1 / b1");
        assert_eq!(shuffle(&q).unwrap(), q);
        assert_eq!(fully_switch(&q, Strategy::Deterministic).unwrap(), q);
    }
}
