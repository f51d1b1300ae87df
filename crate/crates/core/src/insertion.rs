//! Schensted row insertion `T ← x` and column insertion `x → T`, recording the
//! bumping route of every insertion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Cell;
use crate::tableaux::{Tableau, Word};

/// Cells visited by one insertion, one per row (row insertion) or one per
/// column (column insertion), ending at the newly created cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BumpingRoute {
    pub cells: Vec<Cell>,
}

impl BumpingRoute {
    pub fn new_cell(&self) -> Cell {
        *self.cells.last().expect("routes are never empty")
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Columns weakly decrease as the route moves down (row insertion).
    pub fn is_row_route(&self) -> bool {
        self.cells.iter().enumerate().all(|(k, c)| c.row == k + 1)
            && self.cells.windows(2).all(|w| w[0].col >= w[1].col)
    }

    /// Rows weakly decrease as the route moves right (column insertion).
    pub fn is_column_route(&self) -> bool {
        self.cells.iter().enumerate().all(|(k, c)| c.col == k + 1)
            && self.cells.windows(2).all(|w| w[0].row >= w[1].row)
    }

    /// `self` lies strictly left of `later` in every row `later` visits.
    pub fn strictly_left_of(&self, later: &BumpingRoute) -> bool {
        later.len() <= self.len()
            && self.cells.iter().zip(&later.cells).all(|(a, b)| a.row == b.row && a.col < b.col)
    }

    /// `self` lies strictly above `later` in every column `later` visits.
    pub fn strictly_above(&self, later: &BumpingRoute) -> bool {
        later.len() <= self.len()
            && self.cells.iter().zip(&later.cells).all(|(a, b)| a.col == b.col && a.row < b.row)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionResult {
    pub tableau: Tableau,
    pub route: BumpingRoute,
    pub new_cell: Cell,
}

/// Order in which the letters of a word are column-inserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColumnOrder {
    /// `w_n → (⋯ → (w_1 → T))`: the first letter goes in first.
    #[default]
    FirstLetterFirst,
    /// `w_1 → (⋯ → (w_n → T))`: the last letter goes in first.
    LastLetterFirst,
}

fn check(t: &Tableau, x: usize) -> Result<()> {
    if x == 0 {
        return Err(Error::NonPositiveEntry);
    }
    if !t.is_ssyt() {
        return Err(Error::NotSemistandard);
    }
    Ok(())
}

/// `T ← x`: each row receives a value and bumps its leftmost entry strictly
/// greater than it into the next row.
pub fn row_insert(t: &Tableau, x: usize) -> Result<InsertionResult> {
    check(t, x)?;
    Ok(row_insert_unchecked(t.rows().to_vec(), x))
}

fn row_insert_unchecked(mut rows: Vec<Vec<usize>>, mut x: usize) -> InsertionResult {
    let mut cells = Vec::new();
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let row = &mut rows[r];
        let j = row.partition_point(|&y| y <= x);
        cells.push(Cell::new(r + 1, j + 1));
        if j == row.len() {
            row.push(x);
            break;
        }
        x = std::mem::replace(&mut row[j], x);
        r += 1;
    }
    let tableau = Tableau::new(rows).expect("row insertion keeps a partition shape");
    let new_cell = *cells.last().expect("at least one row visited");
    InsertionResult { tableau, route: BumpingRoute { cells }, new_cell }
}

/// Row-inserts the letters of `w` left to right.
pub fn row_insert_word(t: &Tableau, w: &Word) -> Result<(Tableau, Vec<BumpingRoute>)> {
    if !t.is_ssyt() {
        return Err(Error::NotSemistandard);
    }
    if w.0.contains(&0) {
        return Err(Error::NonPositiveEntry);
    }
    let mut current = t.clone();
    let mut routes = Vec::with_capacity(w.0.len());
    for &x in &w.0 {
        let res = row_insert_unchecked(current.into_rows(), x);
        current = res.tableau;
        routes.push(res.route);
    }
    Ok((current, routes))
}

/// `x → T`: each column receives a value and bumps its topmost entry greater
/// than or equal to it into the next column.
pub fn column_insert(x: usize, t: &Tableau) -> Result<InsertionResult> {
    check(t, x)?;
    Ok(column_insert_unchecked(x, t.rows().to_vec()))
}

fn column_insert_unchecked(mut x: usize, mut rows: Vec<Vec<usize>>) -> InsertionResult {
    let mut cells = Vec::new();
    let mut c = 0;
    loop {
        let height = rows.iter().take_while(|r| r.len() > c).count();
        let i = (0..height).find(|&i| rows[i][c] >= x).unwrap_or(height);
        cells.push(Cell::new(i + 1, c + 1));
        if i == height {
            if i == rows.len() {
                rows.push(Vec::new());
            }
            rows[i].push(x);
            break;
        }
        x = std::mem::replace(&mut rows[i][c], x);
        c += 1;
    }
    let tableau = Tableau::new(rows).expect("column insertion keeps a partition shape");
    let new_cell = *cells.last().expect("at least one column visited");
    InsertionResult { tableau, route: BumpingRoute { cells }, new_cell }
}

/// Column-inserts the letters of `w` into `t`, first letter first.
pub fn column_insert_word(w: &Word, t: &Tableau) -> Result<(Tableau, Vec<BumpingRoute>)> {
    column_insert_word_ordered(w, t, ColumnOrder::FirstLetterFirst)
}

/// Column-inserts the letters of `w` into `t` in the given order. Routes are
/// returned in insertion order.
pub fn column_insert_word_ordered(
    w: &Word,
    t: &Tableau,
    order: ColumnOrder,
) -> Result<(Tableau, Vec<BumpingRoute>)> {
    if !t.is_ssyt() {
        return Err(Error::NotSemistandard);
    }
    if w.0.contains(&0) {
        return Err(Error::NonPositiveEntry);
    }
    let letters: Box<dyn Iterator<Item = &usize>> = match order {
        ColumnOrder::FirstLetterFirst => Box::new(w.0.iter()),
        ColumnOrder::LastLetterFirst => Box::new(w.0.iter().rev()),
    };
    let mut current = t.clone();
    let mut routes = Vec::with_capacity(w.0.len());
    for &x in letters {
        let res = column_insert_unchecked(x, current.into_rows());
        current = res.tableau;
        routes.push(res.route);
    }
    Ok((current, routes))
}
