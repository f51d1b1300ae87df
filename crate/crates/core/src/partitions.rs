//! Integer partitions, Young diagram cells, and the index sets that describe
//! adding a vertical or horizontal strip.
//!
//! Rows and columns are 1-indexed throughout. A partition never stores
//! trailing zeros; `part(k)` returns 0 for any `k` past the last row.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, `(row, col)`, both starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Strictly increasing set of positive indices (rows for `e_sets`, columns
/// for `h_sets`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct RowSet {
    indices: Vec<usize>,
}

impl RowSet {
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::NonPositiveEntry);
        }
        indices.sort_unstable();
        indices.dedup();
        Ok(RowSet { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.indices.binary_search(&k).is_ok()
    }
}

impl TryFrom<Vec<usize>> for RowSet {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        RowSet::new(v)
    }
}

impl From<RowSet> for Vec<usize> {
    fn from(s: RowSet) -> Self {
        s.indices
    }
}

impl fmt::Display for RowSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.indices.iter().join(","))
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `k`-th part (1-indexed), 0 past the end.
    pub fn part(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Cells with nothing to the right and nothing below.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.length())
            .filter(|&i| self.part(i + 1) < self.part(i))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    /// `true` when the diagram of `other` is a subset of this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `self / inner` has at most one cell in each row.
    pub fn is_vertical_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (1..=self.length()).all(|i| self.part(i) - inner.part(i) <= 1)
    }

    /// `self / inner` has at most one cell in each column.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        // interlacing: self_1 >= inner_1 >= self_2 >= inner_2 >= ...
        self.contains(inner) && (1..=self.length()).all(|i| inner.part(i) >= self.part(i + 1))
    }

    /// All index sets `K` of size `n` such that adding one cell to each row
    /// in `K` yields a partition, in lexicographic order.
    pub fn e_sets(&self, n: usize) -> Result<Vec<RowSet>> {
        if n == 0 {
            return Err(Error::EmptyStrip);
        }
        // A row past length+n would leave an empty row above it.
        let rows = 1..=self.length() + n;
        Ok(rows
            .combinations(n)
            .filter(|k| self.rows_added(k).is_some())
            .map(|indices| RowSet { indices })
            .collect())
    }

    /// The partition obtained by adding a cell to each row of `set`.
    pub fn apply_rows(&self, set: &RowSet) -> Result<Partition> {
        self.rows_added(set.indices()).ok_or_else(|| Error::InvalidRowSet {
            partition: self.clone(),
            set: set.clone(),
        })
    }

    /// Column analogue of [`Partition::e_sets`].
    pub fn h_sets(&self, m: usize) -> Result<Vec<RowSet>> {
        self.conjugate().e_sets(m)
    }

    /// Column analogue of [`Partition::apply_rows`].
    pub fn apply_cols(&self, set: &RowSet) -> Result<Partition> {
        self.conjugate()
            .apply_rows(set)
            .map(|p| p.conjugate())
            .map_err(|_| Error::InvalidRowSet {
                partition: self.clone(),
                set: set.clone(),
            })
    }

    fn rows_added(&self, rows: &[usize]) -> Option<Partition> {
        let height = rows.iter().copied().max().unwrap_or(0).max(self.length());
        let mut parts: Vec<usize> = (1..=height).map(|k| self.part(k)).collect();
        for &k in rows {
            if k == 0 {
                return None;
            }
            parts[k - 1] += 1;
        }
        Partition::new(parts).ok()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `outer`, smallest first.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &Partition, row: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > outer.length() {
            out.push(Partition::new(prefix.clone()).expect("bounded by predecessor"));
            return;
        }
        for p in 0..=outer.part(row).min(max) {
            prefix.push(p);
            go(outer, row + 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 1, usize::MAX, &mut Vec::new(), &mut out);
    out.sort_by_key(|p| (p.size(), p.clone()));
    out.dedup();
    out
}
