use std::collections::{BTreeMap, HashSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};
use crate::zeta::scalar::Exponent;

/// Name of an exponent variable, e.g. `s_1_2` or `t_3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VarId(String);

impl VarId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.trim().is_empty() {
            return Err(Error::Precondition("variable names must be nonempty".into()));
        }
        Ok(VarId(name))
    }

    /// `{prefix}_{k}`.
    pub fn indexed(prefix: &str, k: usize) -> Self {
        VarId(format!("{prefix}_{k}"))
    }

    /// `{prefix}_{row}_{col}`.
    pub fn cell(prefix: &str, cell: Cell) -> Self {
        VarId(format!("{prefix}_{}_{}", cell.row, cell.col))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for VarId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        VarId::new(s)
    }
}

impl From<VarId> for String {
    fn from(v: VarId) -> Self {
        v.0
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `n` variables `{prefix}_1, ..., {prefix}_n`.
pub fn indexed_vars(prefix: &str, n: usize) -> Vec<VarId> {
    (1..=n).map(|k| VarId::indexed(prefix, k)).collect()
}

/// A Young diagram filled with distinct variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "VarTableauRepr", into = "VarTableauRepr")]
pub struct VarTableau {
    shape: Partition,
    rows: Vec<Vec<VarId>>,
}

#[derive(Serialize, Deserialize)]
struct VarTableauRepr {
    shape: Partition,
    rows: Vec<Vec<VarId>>,
}

impl VarTableau {
    pub fn new(rows: Vec<Vec<VarId>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lengths.clone()).map_err(|_| Error::RaggedRows(lengths))?;
        let rows: Vec<Vec<VarId>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let mut seen = HashSet::new();
        if let Some(dup) = rows.iter().flatten().find(|v| !seen.insert(*v)) {
            return Err(Error::DuplicateVariable(dup.to_string()));
        }
        Ok(VarTableau { shape, rows })
    }

    /// Fills each cell `(i,j)` with `{prefix}_{i}_{j}`.
    pub fn indexed(shape: &Partition, prefix: &str) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| (1..=len).map(|j| VarId::cell(prefix, Cell::new(i + 1, j))).collect())
            .collect();
        VarTableau { shape: shape.clone(), rows }
    }

    pub fn row(vars: Vec<VarId>) -> Result<Self> {
        VarTableau::new(vec![vars])
    }

    pub fn column(vars: Vec<VarId>) -> Result<Self> {
        VarTableau::new(vars.into_iter().map(|v| vec![v]).collect())
    }

    /// Places the given variables on the cells of `shape` in order.
    pub fn from_cells(shape: &Partition, placed: BTreeMap<Cell, VarId>) -> Result<Self> {
        if placed.len() != shape.size() || placed.keys().any(|c| !shape.contains_cell(*c)) {
            return Err(Error::VariableShape(shape.clone()));
        }
        let mut rows: Vec<Vec<VarId>> = vec![Vec::new(); shape.length()];
        for (cell, var) in placed {
            rows[cell.row - 1].push(var);
        }
        VarTableau::new(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<VarId>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<&VarId> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?)
    }

    /// Variables in row-major order.
    pub fn variables(&self) -> impl Iterator<Item = &VarId> {
        self.rows.iter().flatten()
    }
}

impl TryFrom<VarTableauRepr> for VarTableau {
    type Error = Error;

    fn try_from(r: VarTableauRepr) -> Result<Self> {
        let vt = VarTableau::new(r.rows)?;
        if vt.shape != r.shape {
            return Err(Error::VariableShape(r.shape));
        }
        Ok(vt)
    }
}

impl From<VarTableau> for VarTableauRepr {
    fn from(v: VarTableau) -> Self {
        VarTableauRepr { shape: v.shape, rows: v.rows }
    }
}

impl fmt::Display for VarTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows.iter().map(|r| r.iter().join(", ")).join(" / ");
        write!(f, "[{rows}]")
    }
}

/// Exponent values for variables. The exponent type fixes the evaluation
/// mode: `u32` for exact, `f64`/`f32` for floating.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment<E> {
    values: BTreeMap<VarId, E>,
}

impl<E> Default for Assignment<E> {
    fn default() -> Self {
        Assignment { values: BTreeMap::new() }
    }
}

impl<E: Exponent> Assignment<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I, V>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (V, E)>,
        V: Into<String>,
    {
        let mut a = Assignment::new();
        for (var, value) in pairs {
            a.insert(VarId::new(var)?, value)?;
        }
        Ok(a)
    }

    pub fn insert(&mut self, var: VarId, value: E) -> Result<()> {
        if let Some(reason) = value.check() {
            return Err(Error::InvalidExponent { var: var.to_string(), reason });
        }
        self.values.insert(var, value);
        Ok(())
    }

    pub fn get(&self, var: &VarId) -> Result<E> {
        self.values.get(var).copied().ok_or_else(|| Error::Unassigned(var.to_string()))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VarId, &E)> {
        self.values.iter()
    }

    /// Validates values read from an untrusted source.
    pub fn validated(self) -> Result<Self> {
        for (var, value) in &self.values {
            if let Some(reason) = value.check() {
                return Err(Error::InvalidExponent { var: var.to_string(), reason });
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> VarId {
        VarId::new(s).unwrap()
    }

    #[test]
    fn indexed_tableau() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        let vt = VarTableau::indexed(&shape, "s");
        assert_eq!(vt.rows(), &[vec![v("s_1_1"), v("s_1_2")], vec![v("s_2_1")]]);
        assert_eq!(vt.get(Cell::new(2, 1)), Some(&v("s_2_1")));
    }

    #[test]
    fn rejects_duplicates_and_ragged_rows() {
        assert!(matches!(
            VarTableau::new(vec![vec![v("a"), v("a")]]),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(matches!(
            VarTableau::new(vec![vec![v("a")], vec![v("b"), v("c")]]),
            Err(Error::RaggedRows(_))
        ));
    }

    #[test]
    fn exact_assignment_rejects_zero() {
        assert!(Assignment::<u32>::from_pairs([("s", 0)]).is_err());
        let a = Assignment::<u32>::from_pairs([("s", 2), ("t", 3)]).unwrap();
        assert_eq!(a.get(&v("t")).unwrap(), 3);
        assert!(matches!(a.get(&v("u")), Err(Error::Unassigned(_))));
    }

    #[test]
    fn json_shapes() {
        let vt = VarTableau::row(vec![v("s_1_1"), v("t_1")]).unwrap();
        let json = serde_json::to_string(&vt).unwrap();
        assert_eq!(json, r#"{"shape":[2],"rows":[["s_1_1","t_1"]]}"#);
        assert_eq!(serde_json::from_str::<VarTableau>(&json).unwrap(), vt);

        let a: Assignment<u32> = serde_json::from_str(r#"{"s_1_1":2,"t_1":3}"#).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"s_1_1":2,"t_1":3}"#);
        let bad: Assignment<u32> = serde_json::from_str(r#"{"s":0}"#).unwrap();
        assert!(bad.validated().is_err());
    }
}
