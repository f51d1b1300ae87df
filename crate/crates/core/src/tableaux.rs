//! Young tableaux over positive integers.
//!
//! Enumeration fills cells in row-major order, bounding each entry below by
//! its left and upper neighbours and above by the room the rest of its column
//! needs. Every partial filling therefore extends to at least one tableau, and
//! results come out in lexicographic order of their row-major entry sequence.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};

/// A filling of a straight shape; `rows[i][j]` is the entry in cell `(i+1, j+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

/// A filling of `outer / inner`; `rows[i]` holds only the skew cells of row `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SkewRepr", into = "SkewRepr")]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SkewRepr {
    shape: Partition,
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

/// Letter multiplicities; `counts[i]` is the number of `i+1`s. Equality and
/// hashing ignore trailing zeros.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector {
    counts: Vec<usize>,
}

impl WeightVector {
    pub fn new(counts: Vec<usize>) -> Self {
        WeightVector { counts }
    }

    pub fn of_letters(letters: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = Vec::new();
        for x in letters {
            if x > counts.len() {
                counts.resize(x, 0);
            }
            counts[x - 1] += 1;
        }
        WeightVector { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Multiplicity of letter `x` (1-indexed).
    pub fn count(&self, x: usize) -> usize {
        x.checked_sub(1).and_then(|i| self.counts.get(i)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn trimmed(&self) -> &[usize] {
        let end = self.counts.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
        &self.counts[..end]
    }

    /// The weight as a partition, if it is weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.trimmed().to_vec()).ok()
    }
}

impl PartialEq for WeightVector {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for WeightVector {}

impl std::hash::Hash for WeightVector {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl From<&Partition> for WeightVector {
    fn from(p: &Partition) -> Self {
        WeightVector::new(p.parts().to_vec())
    }
}

/// Shared behaviour of straight and skew fillings.
pub trait Filling {
    /// Entries of each row, top row first, skipping cells outside the filling.
    fn entry_rows(&self) -> &[Vec<usize>];

    /// Rows concatenated bottom row first, each row left to right.
    fn reading_word(&self) -> Word {
        Word(self.entry_rows().iter().rev().flatten().copied().collect())
    }

    fn weight(&self) -> WeightVector {
        WeightVector::of_letters(self.entry_rows().iter().flatten().copied())
    }

    fn max_entry(&self) -> usize {
        self.entry_rows().iter().flatten().copied().max().unwrap_or(0)
    }
}

impl Tableau {
    /// Builds a tableau from its rows; the shape is read off the row lengths.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lengths.clone()).map_err(|_| Error::RaggedRows(lengths))?;
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::NonPositiveEntry);
        }
        Ok(Tableau { shape, rows })
    }

    /// As [`Tableau::new`] but also rejects non-semistandard fillings.
    pub fn semistandard(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau::new(rows)?;
        if t.is_ssyt() {
            Ok(t)
        } else {
            Err(Error::NotSemistandard)
        }
    }

    pub fn empty() -> Self {
        Tableau { shape: Partition::empty(), rows: Vec::new() }
    }

    /// Single-row tableau.
    pub fn row(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Ok(Tableau::empty());
        }
        Tableau::new(vec![entries])
    }

    /// Single-column tableau, entries listed top to bottom.
    pub fn column(entries: Vec<usize>) -> Result<Self> {
        Tableau::new(entries.into_iter().map(|x| vec![x]).collect())
    }

    pub(crate) fn from_parts_unchecked(shape: Partition, rows: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(rows.iter().map(Vec::len).collect::<Vec<_>>(), shape.parts());
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?).copied()
    }

    /// Entries of column `j` (1-indexed), top to bottom.
    pub fn column_entries(&self, j: usize) -> Vec<usize> {
        self.rows.iter().map_while(|r| r.get(j - 1).copied()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_ssyt(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;

    fn try_from(r: TableauRepr) -> Result<Self> {
        let t = Tableau::new(r.rows)?;
        if t.shape != r.shape {
            return Err(Error::ShapeMismatch {
                declared: r.shape,
                actual: t.rows.iter().map(Vec::len).collect(),
            });
        }
        Ok(t)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr { shape: t.shape, rows: t.rows }
    }
}

impl Filling for Tableau {
    fn entry_rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let rows = self.rows.iter().map(|r| r.iter().join(" ")).join(" / ");
        write!(f, "{rows}")
    }
}

impl SkewTableau {
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        let mut rows = rows;
        rows.resize(outer.length(), Vec::new());
        let expected: Vec<usize> = (1..=outer.length()).map(|i| outer.part(i) - inner.part(i)).collect();
        let actual: Vec<usize> = rows.iter().map(Vec::len).collect();
        if expected != actual {
            return Err(Error::ShapeMismatch { declared: outer, actual });
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::NonPositiveEntry);
        }
        Ok(SkewTableau { outer, inner, rows })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at an absolute cell of the outer diagram, `None` inside `inner`.
    pub fn get(&self, cell: Cell) -> Option<usize> {
        let offset = self.inner.part(cell.row);
        if cell.col <= offset {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - offset - 1).copied()
    }

    pub fn is_skew_ssyt(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (2..=self.outer.length()).all(|i| {
            (self.inner.part(i) + 1..=self.outer.part(i)).all(|j| {
                match self.get(Cell::new(i - 1, j)) {
                    Some(above) => above < self.get(Cell::new(i, j)).expect("cell in skew shape"),
                    None => true,
                }
            })
        });
        rows_ok && cols_ok
    }
}

impl TryFrom<SkewRepr> for SkewTableau {
    type Error = Error;

    fn try_from(r: SkewRepr) -> Result<Self> {
        SkewTableau::new(r.shape, r.inner, r.rows)
    }
}

impl From<SkewTableau> for SkewRepr {
    fn from(t: SkewTableau) -> Self {
        SkewRepr { shape: t.outer, inner: t.inner, rows: t.rows }
    }
}

impl Filling for SkewTableau {
    fn entry_rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

/// Every semistandard tableau of `shape` with entries in `1..=n`, in
/// lexicographic order of the row-major entry sequence.
pub fn enumerate_ssyt(shape: &Partition, n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.length() > n {
        return out;
    }
    let empty = Partition::empty();
    fill_skew(shape, &empty, n, None, &mut |rows| {
        out.push(Tableau::from_parts_unchecked(shape.clone(), rows.to_vec()));
    });
    out
}

/// Every skew semistandard tableau of `outer / inner` over `1..=n`, optionally
/// restricted to a given weight.
pub fn enumerate_skew_ssyt(
    outer: &Partition,
    inner: &Partition,
    n: usize,
    weight: Option<&WeightVector>,
) -> Result<Vec<SkewTableau>> {
    if !outer.contains(inner) {
        return Err(Error::NotContained { outer: outer.clone(), inner: inner.clone() });
    }
    let mut out = Vec::new();
    if let Some(w) = weight {
        if w.total() != outer.size() - inner.size() || w.trimmed().len() > n {
            return Ok(out);
        }
    }
    fill_skew(outer, inner, n, weight, &mut |rows| {
        out.push(SkewTableau {
            outer: outer.clone(),
            inner: inner.clone(),
            rows: rows.to_vec(),
        });
    });
    Ok(out)
}

/// Row-major backtracking over the skew cells of `outer / inner`.
fn fill_skew(
    outer: &Partition,
    inner: &Partition,
    n: usize,
    weight: Option<&WeightVector>,
    emit: &mut dyn FnMut(&[Vec<usize>]),
) {
    let cells: Vec<Cell> = outer.cells().into_iter().filter(|c| !inner.contains_cell(*c)).collect();
    let conj = outer.conjugate();
    // Strict column below each cell needs this many larger letters.
    let room: Vec<usize> = cells.iter().map(|c| conj.part(c.col) - c.row).collect();
    if room.iter().any(|&r| r >= n) {
        return;
    }
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); outer.length()];
    let mut remaining: Vec<usize> = match weight {
        Some(w) => (1..=n).map(|x| w.count(x)).collect(),
        None => Vec::new(),
    };

    struct Ctx<'a> {
        cells: &'a [Cell],
        room: &'a [usize],
        inner: &'a Partition,
        n: usize,
        weighted: bool,
    }

    fn go(
        ctx: &Ctx<'_>,
        k: usize,
        rows: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let Some(&cell) = ctx.cells.get(k) else {
            emit(rows);
            return;
        };
        let row = cell.row - 1;
        let left = rows[row].last().copied().unwrap_or(1);
        let above = if cell.row > 1 && cell.col > ctx.inner.part(cell.row - 1) {
            rows[row - 1][cell.col - ctx.inner.part(cell.row - 1) - 1] + 1
        } else {
            1
        };
        let lo = left.max(above);
        let hi = ctx.n - ctx.room[k];
        for x in lo..=hi {
            if ctx.weighted {
                if remaining[x - 1] == 0 {
                    continue;
                }
                remaining[x - 1] -= 1;
            }
            rows[row].push(x);
            go(ctx, k + 1, rows, remaining, emit);
            rows[row].pop();
            if ctx.weighted {
                remaining[x - 1] += 1;
            }
        }
    }

    let ctx = Ctx { cells: &cells, room: &room, inner, n, weighted: weight.is_some() };
    go(&ctx, 0, &mut rows, &mut remaining, emit);
}

/// Every suffix of `w` contains at least as many `i`s as `(i+1)`s.
pub fn is_yamanouchi(w: &Word) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in w.0.iter().rev() {
        if x == 0 {
            return false;
        }
        if x > counts.len() {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
        if x > 1 && counts[x - 1] > counts[x - 2] {
            return false;
        }
    }
    true
}

/// Number of skew semistandard tableaux of shape `lambda / mu` and weight `nu`
/// whose reading word is Yamanouchi.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> usize {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let weight = WeightVector::from(nu);
    let alphabet = nu.length().max(1);
    enumerate_skew_ssyt(lambda, mu, alphabet, Some(&weight))
        .expect("containment checked")
        .iter()
        .filter(|t| is_yamanouchi(&t.reading_word()))
        .count()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::partitions::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// All fillings of the shape with letters 1..=n, filtered by `is_ssyt`.
    fn brute_force_ssyt(shape: &Partition, n: usize) -> Vec<Tableau> {
        let size = shape.size();
        let mut out = Vec::new();
        for code in 0..n.pow(size as u32) {
            let mut c = code;
            let mut flat = Vec::with_capacity(size);
            for _ in 0..size {
                flat.push(c % n + 1);
                c /= n;
            }
            flat.reverse();
            let mut it = flat.into_iter();
            let rows = shape.parts().iter().map(|&len| it.by_ref().take(len).collect()).collect();
            let tab = Tableau::new(rows).unwrap();
            if tab.is_ssyt() {
                out.push(tab);
            }
        }
        out
    }

    #[test]
    fn ssyt_predicate() {
        assert!(t(&[&[1, 1], &[2]]).is_ssyt());
        assert!(!t(&[&[1, 2], &[1]]).is_ssyt());
        assert!(!t(&[&[2, 1]]).is_ssyt());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_ssyt(&p(&[1, 1]), 2), vec![t(&[&[1], &[2]])]);
        assert_eq!(
            enumerate_ssyt(&p(&[2]), 2),
            vec![t(&[&[1, 1]]), t(&[&[1, 2]]), t(&[&[2, 2]])]
        );
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), 3).len(), 8);
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), 2).is_empty());
        assert_eq!(enumerate_ssyt(&Partition::empty(), 3), vec![Tableau::empty()]);
    }

    #[test]
    fn enumeration_matches_brute_force_in_order() {
        for size in 1..=5 {
            for shape in partitions_of(size) {
                for n in 1..=4 {
                    if size > 4 && n > 3 {
                        continue;
                    }
                    assert_eq!(enumerate_ssyt(&shape, n), brute_force_ssyt(&shape, n), "{shape} n={n}");
                }
            }
        }
    }

    #[test]
    fn truncations_are_nested() {
        for size in 1..=5 {
            for shape in partitions_of(size) {
                let mut previous: HashSet<Tableau> = HashSet::new();
                for n in 1..=5 {
                    let current: Vec<Tableau> = enumerate_ssyt(&shape, n);
                    let set: HashSet<Tableau> = current.iter().cloned().collect();
                    assert_eq!(set.len(), current.len(), "duplicates for {shape}");
                    assert!(current.iter().all(Tableau::is_ssyt));
                    assert!(previous.is_subset(&set));
                    previous = set;
                }
            }
        }
    }

    #[test]
    fn skew_enumeration_examples() {
        let one = p(&[1]);
        let filled = enumerate_skew_ssyt(&one, &one, 3, None).unwrap();
        assert_eq!(filled.len(), 1);
        assert!(filled[0].reading_word().0.is_empty());

        let w = WeightVector::new(vec![1, 1]);
        assert_eq!(enumerate_skew_ssyt(&p(&[2, 1]), &one, 2, Some(&w)).unwrap().len(), 2);

        let w = WeightVector::new(vec![2]);
        let row = enumerate_skew_ssyt(&p(&[2]), &Partition::empty(), 2, Some(&w)).unwrap();
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].rows(), &[vec![1, 1]]);

        assert!(matches!(
            enumerate_skew_ssyt(&one, &p(&[2]), 2, None),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn skew_enumeration_matches_filter() {
        let outer = p(&[3, 2, 1]);
        let inner = p(&[2, 1]);
        let all = enumerate_skew_ssyt(&outer, &inner, 3, None).unwrap();
        // three disconnected cells: 3^3 fillings, all valid
        assert_eq!(all.len(), 27);
        assert!(all.iter().all(SkewTableau::is_skew_ssyt));
        let w = WeightVector::new(vec![1, 1, 1]);
        let weighted = enumerate_skew_ssyt(&outer, &inner, 3, Some(&w)).unwrap();
        let filtered: Vec<_> = all.into_iter().filter(|s| s.weight() == w).collect();
        assert_eq!(weighted, filtered);
    }

    #[test]
    fn reading_word_of_skew_example() {
        let skew = SkewTableau::new(
            p(&[5, 3, 1]),
            p(&[1]),
            vec![vec![1, 1, 2, 3], vec![2, 2, 3], vec![3]],
        )
        .unwrap();
        assert!(skew.is_skew_ssyt());
        assert_eq!(skew.reading_word(), Word(vec![3, 2, 2, 3, 1, 1, 2, 3]));
        assert!(!is_yamanouchi(&skew.reading_word()));
    }

    #[test]
    fn reading_words_and_weights() {
        assert_eq!(t(&[&[1, 1], &[2]]).reading_word(), Word(vec![2, 1, 1]));
        assert_eq!(Tableau::empty().reading_word(), Word(vec![]));
        assert_eq!(t(&[&[1, 1], &[2]]).weight(), WeightVector::new(vec![2, 1]));
        assert_eq!(Tableau::empty().weight(), WeightVector::new(vec![]));
        assert_eq!(t(&[&[1, 2], &[2]]).weight(), WeightVector::new(vec![1, 2]));
        assert_eq!(WeightVector::new(vec![1, 2, 0]), WeightVector::new(vec![1, 2]));
    }

    #[test]
    fn yamanouchi_examples() {
        assert!(is_yamanouchi(&Word(vec![2, 1])));
        assert!(!is_yamanouchi(&Word(vec![1, 2])));
        assert!(!is_yamanouchi(&Word(vec![3, 2, 2, 3, 1, 1, 2, 3])));
        assert!(is_yamanouchi(&Word(vec![])));
        assert!(is_yamanouchi(&Word(vec![3, 2, 1, 2, 1, 1])));
    }

    /// Suffix condition checked literally for every `j` and every letter.
    fn yamanouchi_literal(w: &[usize]) -> bool {
        (0..w.len()).all(|j| {
            let suffix = &w[j..];
            (1..=4).all(|i| {
                suffix.iter().filter(|&&x| x == i).count() >= suffix.iter().filter(|&&x| x == i + 1).count()
            })
        })
    }

    #[test]
    fn yamanouchi_matches_literal_definition() {
        for len in 0..=6u32 {
            for code in 0..4usize.pow(len) {
                let mut c = code;
                let w: Vec<usize> = (0..len)
                    .map(|_| {
                        let x = c % 4 + 1;
                        c /= 4;
                        x
                    })
                    .collect();
                assert_eq!(is_yamanouchi(&Word(w.clone())), yamanouchi_literal(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), 0);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1, 1, 1])), 0);
    }

    #[test]
    fn lr_is_symmetric_and_counts_dimensions() {
        let shapes: Vec<Partition> = (1..=4).flat_map(partitions_of).collect();
        for mu in &shapes {
            for nu in &shapes {
                let total = mu.size() + nu.size();
                for lambda in partitions_of(total) {
                    assert_eq!(
                        lr_coefficient(mu, nu, &lambda),
                        lr_coefficient(nu, mu, &lambda),
                        "{mu} {nu} {lambda}"
                    );
                }
            }
        }
        for mu in shapes.iter().filter(|s| s.size() <= 3) {
            for nu in shapes.iter().filter(|s| s.size() <= 3) {
                for n in 1..=3 {
                    let lhs = enumerate_ssyt(mu, n).len() * enumerate_ssyt(nu, n).len();
                    let rhs: usize = partitions_of(mu.size() + nu.size())
                        .iter()
                        .map(|l| lr_coefficient(mu, nu, l) * enumerate_ssyt(l, n).len())
                        .sum();
                    assert_eq!(lhs, rhs, "{mu} {nu} n={n}");
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let tab = t(&[&[1, 1], &[2]]);
        let json = serde_json::to_string(&tab).unwrap();
        assert_eq!(json, r#"{"shape":[2,1],"rows":[[1,1],[2]]}"#);
        assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), tab);
        assert!(serde_json::from_str::<Tableau>(r#"{"shape":[2],"rows":[[1,1],[2]]}"#).is_err());

        let skew = SkewTableau::new(p(&[2, 1]), p(&[1]), vec![vec![1], vec![2]]).unwrap();
        let json = serde_json::to_string(&skew).unwrap();
        assert_eq!(json, r#"{"shape":[2,1],"inner":[1],"rows":[[1],[2]]}"#);
        assert_eq!(serde_json::from_str::<SkewTableau>(&json).unwrap(), skew);
    }
}
