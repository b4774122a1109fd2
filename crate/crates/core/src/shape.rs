//! Partitions, skew shapes and cell coordinates.
//!
//! Everything uses French notation: row 1 is the bottom row and rows grow
//! upward. Cells are 1-based `(row, col)` pairs.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: Partition, inner: Partition },
}

/// A cell of a Young diagram, `row` counted from the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `col - row`.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// `self` is weakly southwest of `other`: no higher and no further right.
    pub fn weakly_southwest_of(self, other: Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }

    pub fn above(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn right(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive integers; `parts[0]` is the
/// length of the bottom row.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(ShapeError::NotAPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `row` (1-based); zero above the diagram.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// Height of column `col` (1-based).
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.0.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells in row-major order, bottom row first.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// Cells that can be added keeping a partition shape.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 1..=self.len() + 1 {
            let len = self.row_len(r);
            if r == 1 || self.row_len(r - 1) > len {
                out.push(Cell::new(r, len + 1));
            }
        }
        out
    }

    /// The partition obtained by adding `cell`; panics if that is not a partition.
    pub fn with_cell(&self, cell: Cell) -> Partition {
        let mut parts = self.0.clone();
        if cell.row == parts.len() + 1 {
            parts.push(0);
        }
        assert_eq!(parts[cell.row - 1] + 1, cell.col, "cell {cell} is not addable");
        parts[cell.row - 1] += 1;
        Partition::new(parts).expect("adding an addable cell keeps a partition")
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, by size.
    pub fn all_up_to_size(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions `mu` containing `self` with `|mu| - |self| <= extra`
    /// and at most `max_rows` rows (if given), sorted by size then reverse
    /// lexicographically.
    pub fn supersets(&self, extra: usize, max_rows: Option<usize>) -> Vec<Partition> {
        let mut out = Vec::new();
        let max_rows = max_rows.unwrap_or(usize::MAX);
        for k in 0..=extra {
            for mu in Partition::all_of_size(self.size() + k) {
                if mu.len() <= max_rows && mu.contains(self) {
                    out.push(mu);
                }
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if outer.contains(&inner) {
            Ok(SkewShape { outer, inner })
        } else {
            Err(ShapeError::NotContained { outer, inner })
        }
    }

    /// `shape / empty`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Skew cells in row-major order, bottom row first.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.outer.cells().filter(move |&c| !self.inner.contains_cell(c))
    }

    /// All skew shapes `mu / lambda` with `|mu| <= max_outer`.
    pub fn all_with_outer_at_most(max_outer: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for mu in Partition::all_up_to_size(max_outer) {
            for lambda in Partition::all_up_to_size(mu.size()) {
                if mu.contains(&lambda) {
                    out.push(SkewShape { outer: mu.clone(), inner: lambda });
                }
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}
