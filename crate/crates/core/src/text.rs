//! Plain-text serialization of tableaux.
//!
//! Rows are written bottom to top, separated by `" / "`; cells within a row
//! are separated by `"|"`.
//!
//! * Hook-valued cells are `h[+a1,a2,...][^l1,l2,...]`, e.g. `3|5+7^6`.
//! * Mixed cells are `aK` or `bK` (`K` may be negative for `β`); inner
//!   cells of a skew shape are written `.`.
//!
//! Parsing accepts arbitrary spaces around separators; formatting always
//! emits the canonical spacing, so `format(parse(s)) == s` for canonical `s`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::hvt::{validate_hvt, HookCell, HookValuedTableau, HvtViolation};
use crate::mixed::{MixedEntry, MixedError, MixedTableau};
use crate::shape::{Cell, Partition, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at line {line}, column {column}: expected {expected}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("not a hook-valued tableau: {}", join_violations(.0))]
    InvalidHvt(Vec<HvtViolation>),
    #[error(transparent)]
    InvalidMixed(#[from] MixedError),
}

fn join_violations(v: &[HvtViolation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

pub fn format_hvt(t: &HookValuedTableau) -> String {
    let rows: Vec<String> = t
        .rows()
        .iter()
        .map(|row| row.iter().map(format_hook_cell).collect::<Vec<_>>().join("|"))
        .collect();
    rows.join(" / ")
}

fn format_list(out: &mut String, sep: char, items: &[u32]) {
    if items.is_empty() {
        return;
    }
    out.push(sep);
    let joined: Vec<String> = items.iter().map(u32::to_string).collect();
    out.push_str(&joined.join(","));
}

pub fn format_hook_cell(hc: &HookCell) -> String {
    let mut s = hc.hook.to_string();
    format_list(&mut s, '+', &hc.arms);
    format_list(&mut s, '^', &hc.legs);
    s
}

pub fn format_mixed(t: &MixedTableau) -> String {
    let outer = t.shape().outer();
    let rows: Vec<String> = (1..=outer.len())
        .map(|r| {
            (1..=outer.row_len(r))
                .map(|c| match t.get(Cell::new(r, c)) {
                    Some(e) => e.to_string(),
                    None => ".".to_string(),
                })
                .collect::<Vec<_>>()
                .join("|")
        })
        .collect();
    rows.join(" / ")
}

/// Byte cursor that tracks line and column for error reporting.
struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src: src.as_bytes(), pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn error(&self, expected: &str) -> SyntaxError {
        let before = &self.src[..self.pos.min(self.src.len())];
        let line = 1 + before.iter().filter(|&&b| b == b'\n').count();
        let line_start = before.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
        SyntaxError { line, column: self.pos - line_start + 1, expected: expected.to_string() }
    }

    fn unsigned(&mut self) -> Option<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn positive(&mut self) -> Result<u32, SyntaxError> {
        let start = self.pos;
        match self.unsigned() {
            Some(v) if v >= 1 && v <= u32::MAX as u64 => Ok(v as u32),
            _ => {
                self.pos = start;
                Err(self.error("a positive integer"))
            }
        }
    }

    fn signed(&mut self) -> Result<i32, SyntaxError> {
        let start = self.pos;
        let neg = self.eat(b'-');
        match self.unsigned() {
            Some(v) if v <= i32::MAX as u64 => Ok(if neg { -(v as i32) } else { v as i32 }),
            _ => {
                self.pos = start;
                Err(self.error("an integer"))
            }
        }
    }
}

/// Splits the input into rows of cells, calling `cell` for each one.
fn parse_grid<T>(
    text: &str,
    mut cell: impl FnMut(&mut Cursor<'_>) -> Result<T, SyntaxError>,
) -> Result<Vec<Vec<T>>, SyntaxError> {
    let mut cur = Cursor::new(text);
    let mut rows = Vec::new();
    cur.skip_spaces();
    if cur.at_end() {
        return Ok(rows);
    }
    loop {
        let mut row = Vec::new();
        loop {
            cur.skip_spaces();
            row.push(cell(&mut cur)?);
            cur.skip_spaces();
            if !cur.eat(b'|') {
                break;
            }
        }
        rows.push(row);
        if cur.eat(b'/') {
            continue;
        }
        if cur.at_end() {
            return Ok(rows);
        }
        return Err(cur.error("'|', '/' or end of input"));
    }
}

fn int_list(cur: &mut Cursor<'_>) -> Result<Vec<u32>, SyntaxError> {
    let mut out = vec![cur.positive()?];
    while cur.eat(b',') {
        out.push(cur.positive()?);
    }
    Ok(out)
}

fn shape_of<T>(rows: &[Vec<T>], text: &str) -> Result<Partition, SyntaxError> {
    Partition::new(rows.iter().map(Vec::len).collect()).map_err(|_| SyntaxError {
        line: 1,
        column: text.len().max(1),
        expected: "rows of weakly decreasing length".to_string(),
    })
}

/// Parses a hook-valued filling without checking the tableau conditions.
pub fn parse_hvt_cells(text: &str) -> Result<(Partition, BTreeMap<Cell, HookCell>), SyntaxError> {
    let rows = parse_grid(text, |cur| {
        let hook = cur.positive()?;
        let arms = if cur.eat(b'+') { int_list(cur)? } else { Vec::new() };
        let legs = if cur.eat(b'^') { int_list(cur)? } else { Vec::new() };
        Ok(HookCell { hook, arms, legs })
    })?;
    let shape = shape_of(&rows, text)?;
    let cells = rows
        .into_iter()
        .enumerate()
        .flat_map(|(r, row)| {
            row.into_iter().enumerate().map(move |(c, hc)| (Cell::new(r + 1, c + 1), hc))
        })
        .collect();
    Ok((shape, cells))
}

pub fn parse_hvt(text: &str) -> Result<HookValuedTableau, TextError> {
    let (shape, cells) = parse_hvt_cells(text)?;
    validate_hvt(shape, cells).map_err(TextError::InvalidHvt)
}

pub fn parse_mixed(text: &str) -> Result<MixedTableau, TextError> {
    let rows = parse_grid(text, |cur| {
        if cur.eat(b'.') {
            Ok(None)
        } else if cur.eat(b'a') {
            Ok(Some(MixedEntry::Alpha(cur.positive()?)))
        } else if cur.eat(b'b') {
            Ok(Some(MixedEntry::Beta(cur.signed()?)))
        } else {
            Err(cur.error("'.', 'aK' or 'bK'"))
        }
    })?;
    let outer = shape_of(&rows, text)?;
    let mut inner_parts = Vec::new();
    let mut entries = BTreeMap::new();
    for (r, row) in rows.iter().enumerate() {
        let dots = row.iter().take_while(|e| e.is_none()).count();
        if row[dots..].iter().any(Option::is_none) {
            return Err(SyntaxError {
                line: 1,
                column: 1,
                expected: format!("inner cells '.' only at the start of row {}", r + 1),
            }
            .into());
        }
        if dots > 0 {
            inner_parts.push(dots);
        }
        for (c, e) in row.iter().enumerate().skip(dots) {
            entries.insert(Cell::new(r + 1, c + 1), e.expect("checked above"));
        }
    }
    // Rows with no inner cells must come after all rows with some.
    let inner_rows = rows.iter().take_while(|row| row.first().is_some_and(Option::is_none)).count();
    let inner = Partition::new(inner_parts.clone())
        .ok()
        .filter(|_| inner_rows == inner_parts.len())
        .ok_or_else(|| SyntaxError {
            line: 1,
            column: 1,
            expected: "inner cells forming a partition".to_string(),
        })?;
    let shape = SkewShape::new(outer, inner).map_err(|_| SyntaxError {
        line: 1,
        column: 1,
        expected: "inner shape inside the outer shape".to_string(),
    })?;
    Ok(MixedTableau::new(shape, entries)?)
}

/// Which tableau family a text should be read as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Hvt,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyTableau {
    Hvt(HookValuedTableau),
    Mixed(MixedTableau),
}

impl fmt::Display for AnyTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyTableau::Hvt(t) => t.fmt(f),
            AnyTableau::Mixed(t) => t.fmt(f),
        }
    }
}

pub fn parse_tableau(text: &str, family: Family) -> Result<AnyTableau, TextError> {
    match family {
        Family::Hvt => parse_hvt(text).map(AnyTableau::Hvt),
        Family::Mixed => parse_mixed(text).map(AnyTableau::Mixed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uncrowding_input_roundtrips() {
        let s = "1|1|1|3^5 / 2|2+4 / 3|5+7^6 / 4";
        let t = parse_hvt(s).unwrap();
        assert_eq!(t.shape().parts(), &[4, 2, 2, 1]);
        assert_eq!(t.get(Cell::new(3, 2)), Some(&HookCell::new(5, vec![7], vec![6])));
        assert_eq!(format_hvt(&t), s);
    }

    #[test]
    fn mixed_roundtrip_and_inner_shape() {
        let s = ".|.|.|. / .|.|a2|a2 / .|.|b1 / .|b3";
        let q = parse_mixed(s).unwrap();
        assert_eq!(q.shape().inner().parts(), &[4, 2, 2, 1]);
        assert_eq!(q.shape().outer().parts(), &[4, 4, 3, 2]);
        assert_eq!(format_mixed(&q), s);
    }

    #[test]
    fn single_row_mixed() {
        let q = parse_mixed(".|b3").unwrap();
        assert_eq!(q.shape().inner().parts(), &[1]);
        assert_eq!(q.get(Cell::new(1, 2)), Some(MixedEntry::Beta(3)));
    }

    #[test]
    fn negative_beta_indices() {
        let q = parse_mixed("b-1|b0").unwrap();
        assert_eq!(format_mixed(&q), "b-1|b0");
    }

    #[test]
    fn zero_entry_is_a_syntax_error() {
        let err = parse_hvt("1|0").unwrap_err();
        assert_eq!(
            err,
            TextError::Syntax(SyntaxError { line: 1, column: 3, expected: "a positive integer".into() })
        );
    }

    #[test]
    fn trailing_garbage_is_reported() {
        let err = parse_hvt_cells("1|2 x").unwrap_err();
        assert_eq!(err.column, 5);
        let err = parse_mixed("a1|c2").unwrap_err();
        assert!(matches!(err, TextError::Syntax(SyntaxError { column: 4, .. })));
    }

    #[test]
    fn misplaced_dots_rejected() {
        assert!(parse_mixed("a1|.").is_err());
        assert!(parse_mixed("a1 / .").is_err());
    }

    #[test]
    fn empty_text_is_empty_tableau() {
        let t = parse_hvt("").unwrap();
        assert_eq!(t, HookValuedTableau::empty());
        assert_eq!(format_hvt(&t), "");
    }

    #[test]
    fn spaces_are_tolerated() {
        let t = parse_hvt(" 1 | 2+2 /3 ").unwrap();
        assert_eq!(format_hvt(&t), "1|2+2 / 3");
    }
}
