//! Mixed tableaux: skew fillings by symbols `α_k` (`k > 0`) and `β_k`
//! (`k` any integer), with the strictness, sortedness and flag predicates
//! used throughout the crate.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::poly::Monomial;
use crate::shape::{Cell, Partition, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Greek {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MixedEntry {
    /// `α_k`, `k >= 1`.
    Alpha(u32),
    /// `β_k`, any integer `k`.
    Beta(i32),
}

impl MixedEntry {
    pub fn kind(self) -> Greek {
        match self {
            MixedEntry::Alpha(_) => Greek::Alpha,
            MixedEntry::Beta(_) => Greek::Beta,
        }
    }

    pub fn index(self) -> i64 {
        match self {
            MixedEntry::Alpha(k) => k as i64,
            MixedEntry::Beta(k) => k as i64,
        }
    }

    pub fn is_alpha(self) -> bool {
        matches!(self, MixedEntry::Alpha(_))
    }

    pub fn is_beta(self) -> bool {
        matches!(self, MixedEntry::Beta(_))
    }
}

impl fmt::Display for MixedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MixedEntry::Alpha(k) => write!(f, "a{k}"),
            MixedEntry::Beta(k) => write!(f, "b{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MixedError {
    #[error("β{index} at {cell} has a nonpositive index")]
    NonpositiveBetaIndex { cell: Cell, index: i32 },
    #[error("filled cells do not match the skew shape {0}")]
    DomainMismatch(SkewShape),
    #[error("α indices must be positive (cell {0})")]
    ZeroAlphaIndex(Cell),
}

/// Results of every predicate of [`classify_mixed`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StrictnessFlags {
    pub alpha_column_strict: bool,
    pub alpha_row_strict: bool,
    pub beta_column_strict: bool,
    pub beta_row_strict: bool,
    pub totally_column_strict: bool,
    pub sorted_alpha_beta: bool,
    pub sorted_beta_alpha: bool,
    pub flagged_mixed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A filling of every cell of a skew shape by [`MixedEntry`] symbols.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedTableau {
    shape: SkewShape,
    // One vector per row of the outer shape; `None` exactly on inner cells.
    rows: Vec<Vec<Option<MixedEntry>>>,
}

impl MixedTableau {
    pub fn new(shape: SkewShape, entries: BTreeMap<Cell, MixedEntry>) -> Result<Self, MixedError> {
        if entries.len() != shape.size() || !entries.keys().all(|&c| shape.contains_cell(c)) {
            return Err(MixedError::DomainMismatch(shape));
        }
        if let Some((&cell, _)) = entries.iter().find(|(_, e)| **e == MixedEntry::Alpha(0)) {
            return Err(MixedError::ZeroAlphaIndex(cell));
        }
        let mut rows: Vec<Vec<Option<MixedEntry>>> =
            shape.outer().parts().iter().map(|&n| vec![None; n]).collect();
        for (cell, e) in entries {
            rows[cell.row - 1][cell.col - 1] = Some(e);
        }
        Ok(MixedTableau { shape, rows })
    }

    /// The empty filling of `shape / shape`.
    pub fn empty_of(shape: &Partition) -> Self {
        let skew = SkewShape::new(shape.clone(), shape.clone()).expect("a shape contains itself");
        MixedTableau::new(skew, BTreeMap::new()).expect("no cells to fill")
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn get(&self, cell: Cell) -> Option<MixedEntry> {
        *self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?)?
    }

    /// Skew cells with their entries, row-major from the bottom row.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, MixedEntry)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(c, e)| e.map(|e| (Cell::new(r + 1, c + 1), e)))
        })
    }

    pub fn alpha_count(&self) -> usize {
        self.entries().filter(|(_, e)| e.is_alpha()).count()
    }

    pub fn beta_count(&self) -> usize {
        self.entries().filter(|(_, e)| e.is_beta()).count()
    }

    /// Interchanges the entries of two skew cells.
    pub fn swapped(&self, a: Cell, b: Cell) -> MixedTableau {
        let mut out = self.clone();
        let ea = self.get(a).expect("cell a is filled");
        let eb = self.get(b).expect("cell b is filled");
        out.rows[a.row - 1][a.col - 1] = Some(eb);
        out.rows[b.row - 1][b.col - 1] = Some(ea);
        out
    }

    pub(crate) fn set(&mut self, cell: Cell, e: MixedEntry) {
        debug_assert!(self.shape.contains_cell(cell));
        self.rows[cell.row - 1][cell.col - 1] = Some(e);
    }

    /// Product of entries.
    pub fn weight(&self) -> Result<Monomial, MixedError> {
        let mut m = Monomial::one();
        for (cell, e) in self.entries() {
            m = match e {
                MixedEntry::Alpha(k) => m.times_alpha(k, 1),
                MixedEntry::Beta(k) if k > 0 => m.times_beta(k as u32, 1),
                MixedEntry::Beta(k) => {
                    return Err(MixedError::NonpositiveBetaIndex { cell, index: k });
                }
            };
        }
        Ok(m)
    }

    /// γ-column-strict (`by_column`) or γ-row-strict.
    ///
    /// Indices must weakly decrease towards the northeast: each γ-entry is
    /// compared against the maximum γ-index of its closed northeast
    /// quadrant, computed by a suffix-maximum sweep.
    pub fn is_strict(&self, kind: Greek, by_column: bool) -> bool {
        let height = self.rows.len();
        let width = self.shape.outer().row_len(1);
        let mut ne_max = vec![vec![i64::MIN; width + 2]; height + 2];
        for r in (1..=height).rev() {
            for c in (1..=width).rev() {
                let own = match self.get(Cell::new(r, c)) {
                    Some(e) if e.kind() == kind => e.index(),
                    _ => i64::MIN,
                };
                let beyond = ne_max[r + 1][c].max(ne_max[r][c + 1]);
                if own != i64::MIN && own < beyond {
                    return false;
                }
                ne_max[r][c] = own.max(beyond);
            }
        }
        let mut seen: BTreeMap<(usize, i64), ()> = BTreeMap::new();
        for (cell, e) in self.entries() {
            if e.kind() != kind {
                continue;
            }
            let line = if by_column { cell.col } else { cell.row };
            if seen.insert((line, e.index()), ()).is_some() {
                return false;
            }
        }
        true
    }

    pub fn is_alpha_column_strict(&self) -> bool {
        self.is_strict(Greek::Alpha, true)
    }

    pub fn is_beta_row_strict(&self) -> bool {
        self.is_strict(Greek::Beta, false)
    }

    /// Indices strictly decrease up columns and weakly decrease along rows.
    pub fn is_totally_column_strict(&self) -> bool {
        self.entries().all(|(cell, e)| {
            let up = self.get(cell.above()).is_none_or(|u| e.index() > u.index());
            let right = self.get(cell.right()).is_none_or(|v| e.index() >= v.index());
            up && right
        })
    }

    /// The `first`-kind cells form `ν/λ` and the rest `μ/ν` for a partition `ν`.
    pub fn is_sorted(&self, first: Greek) -> bool {
        let mut nu = Vec::with_capacity(self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            let start = self.shape.inner().row_len(r + 1);
            let run = row[start..].iter().take_while(|e| e.is_some_and(|e| e.kind() == first)).count();
            let rest_ok = row[start + run..].iter().all(|e| e.is_some_and(|e| e.kind() != first));
            if !rest_ok {
                return false;
            }
            nu.push(start + run);
        }
        nu.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_sorted_alpha_beta(&self) -> bool {
        self.is_sorted(Greek::Alpha)
    }

    pub fn is_sorted_beta_alpha(&self) -> bool {
        self.is_sorted(Greek::Beta)
    }

    /// `α_k` at `(i,j)` has `0 < k < j` and `β_k` at `(i,j)` has `0 < k < i`.
    pub fn is_flagged_mixed(&self) -> bool {
        self.entries().all(|(cell, e)| match e {
            MixedEntry::Alpha(k) => k > 0 && (k as usize) < cell.col,
            MixedEntry::Beta(k) => k > 0 && (k as usize) < cell.row,
        })
    }

    pub fn classify(&self) -> StrictnessFlags {
        StrictnessFlags {
            alpha_column_strict: self.is_strict(Greek::Alpha, true),
            alpha_row_strict: self.is_strict(Greek::Alpha, false),
            beta_column_strict: self.is_strict(Greek::Beta, true),
            beta_row_strict: self.is_strict(Greek::Beta, false),
            totally_column_strict: self.is_totally_column_strict(),
            sorted_alpha_beta: self.is_sorted(Greek::Alpha),
            sorted_beta_alpha: self.is_sorted(Greek::Beta),
            flagged_mixed: self.is_flagged_mixed(),
        }
    }

    /// Replaces each `β_r` at a cell of content `c` by `β_{r+c}` (`Plus`) or
    /// `β_{r-c}` (`Minus`).
    pub fn c_beta_shift(&self, sign: Sign) -> MixedTableau {
        let mut out = self.clone();
        for (cell, e) in self.entries() {
            if let MixedEntry::Beta(r) = e {
                let c = cell.content() as i32;
                let shifted = match sign {
                    Sign::Plus => r + c,
                    Sign::Minus => r - c,
                };
                out.set(cell, MixedEntry::Beta(shifted));
            }
        }
        out
    }

    /// Flagged-mixed, and totally column-strict after `c_β^+`.
    pub fn is_exquisite(&self) -> bool {
        self.is_flagged_mixed() && self.c_beta_shift(Sign::Plus).is_totally_column_strict()
    }
}

pub fn classify_mixed(t: &MixedTableau) -> StrictnessFlags {
    t.classify()
}

pub fn weight_mixed(t: &MixedTableau) -> Result<Monomial, MixedError> {
    t.weight()
}

pub fn c_beta_shift(t: &MixedTableau, sign: Sign) -> MixedTableau {
    t.c_beta_shift(sign)
}

pub fn is_exquisite(t: &MixedTableau) -> bool {
    t.is_exquisite()
}

impl fmt::Display for MixedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_mixed(self))
    }
}
