//! Hook-valued tableaux.
//!
//! Each cell of a partition holds a small semistandard tableau of hook
//! shape: a hook entry `h`, a weakly increasing arm `h <= A_1 <= ... <= A_k`
//! to its right and a strictly increasing leg `h < L_1 < ... < L_l` above
//! it. Between cells, rows are weakly increasing and columns strictly
//! increasing (every entry against every entry). A tableau with no arm or
//! leg entries is an ordinary semistandard Young tableau.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::poly::Monomial;
use crate::shape::{Cell, Partition};

/// The contents of one cell of a hook-valued tableau.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HookCell {
    pub hook: u32,
    pub arms: Vec<u32>,
    pub legs: Vec<u32>,
}

impl HookCell {
    pub fn single(hook: u32) -> Self {
        HookCell { hook, arms: Vec::new(), legs: Vec::new() }
    }

    pub fn new(hook: u32, arms: Vec<u32>, legs: Vec<u32>) -> Self {
        HookCell { hook, arms, legs }
    }

    pub fn min_entry(&self) -> u32 {
        self.hook
    }

    pub fn max_entry(&self) -> u32 {
        let a = self.arms.last().copied().unwrap_or(0);
        let l = self.legs.last().copied().unwrap_or(0);
        self.hook.max(a).max(l)
    }

    pub fn excess(&self) -> usize {
        self.arms.len() + self.legs.len()
    }

    /// All entries (hook, arms, legs) in no particular order.
    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        std::iter::once(self.hook).chain(self.arms.iter().copied()).chain(self.legs.iter().copied())
    }

    pub fn is_hook_shaped(&self) -> bool {
        self.hook >= 1
            && self.arms.first().is_none_or(|&a| a >= self.hook)
            && self.arms.windows(2).all(|w| w[0] <= w[1])
            && self.legs.first().is_none_or(|&l| l > self.hook)
            && self.legs.windows(2).all(|w| w[0] < w[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Error)]
pub enum HvtViolation {
    #[error("row condition fails between {0} and {1}")]
    RowViolation(Cell, Cell),
    #[error("column condition fails between {0} and {1}")]
    ColumnViolation(Cell, Cell),
    #[error("cell {0} is not a semistandard hook")]
    HookShapeViolation(Cell),
    #[error("filled cells do not match the shape")]
    DomainMismatch,
}

/// A hook-valued tableau of straight (partition) shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HookValuedTableau {
    shape: Partition,
    rows: Vec<Vec<HookCell>>,
}

/// Checks all three defining conditions and reports every violation.
pub fn validate_hvt(
    shape: Partition,
    raw_cells: BTreeMap<Cell, HookCell>,
) -> Result<HookValuedTableau, Vec<HvtViolation>> {
    let domain_ok =
        raw_cells.len() == shape.size() && raw_cells.keys().all(|&c| shape.contains_cell(c));
    if !domain_ok {
        return Err(vec![HvtViolation::DomainMismatch]);
    }
    let mut rows: Vec<Vec<HookCell>> = shape.parts().iter().map(|&n| Vec::with_capacity(n)).collect();
    for (cell, hc) in raw_cells {
        // BTreeMap order is row-major, so pushes land in column order.
        rows[cell.row - 1].push(hc);
    }
    let t = HookValuedTableau { shape, rows };
    let violations = t.violations();
    if violations.is_empty() {
        Ok(t)
    } else {
        Err(violations)
    }
}

impl HookValuedTableau {
    pub fn empty() -> Self {
        HookValuedTableau { shape: Partition::empty(), rows: Vec::new() }
    }

    /// Builds a tableau from rows (bottom row first) and validates it.
    pub fn from_rows(rows: Vec<Vec<HookCell>>) -> Result<Self, Vec<HvtViolation>> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| vec![HvtViolation::DomainMismatch])?;
        let cells = rows
            .into_iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.into_iter().enumerate().map(move |(c, hc)| (Cell::new(r + 1, c + 1), hc))
            })
            .collect();
        validate_hvt(shape, cells)
    }

    /// Builds an SSYT-valued tableau from plain entries, bottom row first.
    pub fn from_entries(rows: &[&[u32]]) -> Result<Self, Vec<HvtViolation>> {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&e| HookCell::single(e)).collect()).collect(),
        )
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<HookCell>>) -> Self {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .expect("rows form a partition shape");
        HookValuedTableau { shape, rows }
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<HookCell>> {
        self.rows
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Rows bottom to top.
    pub fn rows(&self) -> &[Vec<HookCell>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<&HookCell> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?)
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, &HookCell)> {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter().enumerate().map(move |(c, hc)| (Cell::new(r + 1, c + 1), hc))
        })
    }

    pub fn arm_excess(&self) -> usize {
        self.cells().map(|(_, hc)| hc.arms.len()).sum()
    }

    pub fn leg_excess(&self) -> usize {
        self.cells().map(|(_, hc)| hc.legs.len()).sum()
    }

    pub fn excess(&self) -> usize {
        self.arm_excess() + self.leg_excess()
    }

    pub fn is_ssyt(&self) -> bool {
        self.excess() == 0
    }

    pub fn max_entry(&self) -> u32 {
        self.cells().map(|(_, hc)| hc.max_entry()).max().unwrap_or(0)
    }

    pub fn violations(&self) -> Vec<HvtViolation> {
        let mut out = Vec::new();
        for (cell, hc) in self.cells() {
            if !hc.is_hook_shaped() {
                out.push(HvtViolation::HookShapeViolation(cell));
            }
        }
        for (cell, hc) in self.cells() {
            if let Some(right) = self.get(cell.right()) {
                if hc.max_entry() > right.min_entry() {
                    out.push(HvtViolation::RowViolation(cell, cell.right()));
                }
            }
            if let Some(above) = self.get(cell.above()) {
                if hc.max_entry() >= above.min_entry() {
                    out.push(HvtViolation::ColumnViolation(cell, cell.above()));
                }
            }
        }
        out.sort();
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// `Π α_col^{#arms} β_row^{#legs} x_i^{#i}`.
    pub fn weight(&self) -> Monomial {
        let mut m = Monomial::one();
        for (cell, hc) in self.cells() {
            m = m
                .times_alpha(cell.col as u32, hc.arms.len() as u32)
                .times_beta(cell.row as u32, hc.legs.len() as u32);
            for e in hc.entries() {
                m = m.times_x(e, 1);
            }
        }
        m
    }
}

/// Free-function form of [`HookValuedTableau::weight`].
pub fn weight_hvt(t: &HookValuedTableau) -> Monomial {
    t.weight()
}

impl fmt::Display for HookValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_hvt(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_hvt;

    const T1: &str = "1+1^2|3+3,4^4|4+4,5^9 / 3+3,5^4,6|6+7";
    const T2: &str = "1+2,2^3,4|3+4,5^5|5+6,7^7,8|7 / 4+4,5^7|7+8,9";

    #[test]
    fn t1_is_valid_with_expected_weight() {
        let t1 = parse_hvt(T1).unwrap();
        assert_eq!(t1.shape().parts(), &[3, 2]);
        let expected = Monomial::one()
            .times_alpha(1, 3)
            .times_alpha(2, 3)
            .times_alpha(3, 2)
            .times_beta(1, 3)
            .times_beta(2, 2)
            .times_x(1, 2)
            .times_x(2, 1)
            .times_x(3, 4)
            .times_x(4, 5)
            .times_x(5, 2)
            .times_x(6, 2)
            .times_x(7, 1)
            .times_x(9, 1);
        assert_eq!(t1.weight(), expected);
    }

    #[test]
    fn t2_reports_row_and_column_violations() {
        let (shape, cells) = crate::text::parse_hvt_cells(T2).unwrap();
        let errs = validate_hvt(shape, cells).unwrap_err();
        assert!(errs.contains(&HvtViolation::RowViolation(Cell::new(1, 1), Cell::new(1, 2))));
        assert!(errs.contains(&HvtViolation::RowViolation(Cell::new(1, 3), Cell::new(1, 4))));
        assert!(errs.contains(&HvtViolation::ColumnViolation(Cell::new(1, 1), Cell::new(2, 1))));
        assert_eq!(errs.len(), 3);
    }

    #[test]
    fn empty_tableau() {
        let t = validate_hvt(Partition::empty(), BTreeMap::new()).unwrap();
        assert_eq!(t.weight(), Monomial::one());
        assert!(t.is_ssyt());
    }

    #[test]
    fn domain_mismatch() {
        let mut cells = BTreeMap::new();
        cells.insert(Cell::new(1, 2), HookCell::single(1));
        let errs = validate_hvt(Partition::new(vec![1]).unwrap(), cells).unwrap_err();
        assert_eq!(errs, vec![HvtViolation::DomainMismatch]);
    }

    #[test]
    fn bad_hooks_are_flagged() {
        let t = HookValuedTableau::from_rows(vec![vec![HookCell::new(2, vec![1], vec![])]]);
        assert_eq!(t.unwrap_err(), vec![HvtViolation::HookShapeViolation(Cell::new(1, 1))]);
        let t = HookValuedTableau::from_rows(vec![vec![HookCell::new(2, vec![], vec![3, 3])]]);
        assert!(t.is_err());
        let t = HookValuedTableau::from_rows(vec![vec![HookCell::new(2, vec![], vec![2])]]);
        assert!(t.is_err());
    }

    #[test]
    fn insertion_tableau_weight() {
        let p = HookValuedTableau::from_entries(&[&[1, 1, 1, 3], &[2, 2, 4, 5], &[3, 5, 7], &[4, 6]])
            .unwrap();
        let expected = Monomial::one()
            .times_x(1, 3)
            .times_x(2, 2)
            .times_x(3, 2)
            .times_x(4, 2)
            .times_x(5, 2)
            .times_x(6, 1)
            .times_x(7, 1);
        assert_eq!(p.weight(), expected);
    }
}
