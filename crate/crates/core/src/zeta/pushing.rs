//! Variable fillings of the enlarged diagrams appearing on the right-hand
//! sides of the Pieri and Littlewood–Richardson identities.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition, RowSet};
use crate::zeta::vars::{VarId, VarTableau};

/// `u^J`: `t_k` goes to `(1, α_k)` where `α_k` is the `k`-th element of `J`;
/// `s_{ij}` stays at `(i,j)` when `j ∉ J` and moves down to `(i+1,j)` when
/// `j ∈ J`.
pub fn build_uj(lambda: &Partition, s: &VarTableau, t: &[VarId], j_set: &RowSet) -> Result<VarTableau> {
    if s.shape() != lambda {
        return Err(Error::VariableShape(lambda.clone()));
    }
    if t.len() != j_set.len() {
        return Err(Error::Precondition(format!(
            "{} column variables for a set of size {}",
            t.len(),
            j_set.len()
        )));
    }
    let shape = lambda.apply_cols(j_set)?;
    let mut placed = BTreeMap::new();
    for (var, &alpha) in t.iter().zip(j_set.indices()) {
        placed.insert(Cell::new(1, alpha), var.clone());
    }
    for cell in lambda.cells() {
        let var = s.get(cell).expect("cell of lambda").clone();
        let target = if j_set.contains(cell.col) { Cell::new(cell.row + 1, cell.col) } else { cell };
        placed.insert(target, var);
    }
    VarTableau::from_cells(&shape, placed)
}

/// `u_K`: `s_k` goes to `(β_k, 1)` where `β_k` is the `k`-th element of `K`;
/// `t_{ij}` stays at `(i,j)` when `i ∉ K` and moves right to `(i,j+1)` when
/// `i ∈ K`.
pub fn build_uk(lambda: &Partition, s: &[VarId], t: &VarTableau, k_set: &RowSet) -> Result<VarTableau> {
    if t.shape() != lambda {
        return Err(Error::VariableShape(lambda.clone()));
    }
    if s.len() != k_set.len() {
        return Err(Error::Precondition(format!(
            "{} row variables for a set of size {}",
            s.len(),
            k_set.len()
        )));
    }
    let shape = lambda.apply_rows(k_set)?;
    let mut placed = BTreeMap::new();
    for (var, &beta) in s.iter().zip(k_set.indices()) {
        placed.insert(Cell::new(beta, 1), var.clone());
    }
    for cell in lambda.cells() {
        let var = t.get(cell).expect("cell of lambda").clone();
        let target = if k_set.contains(cell.row) { Cell::new(cell.row, cell.col + 1) } else { cell };
        placed.insert(target, var);
    }
    VarTableau::from_cells(&shape, placed)
}

fn lr_variables(mu: &Partition, nu: &Partition) -> (Vec<VarId>, Vec<VarId>) {
    let s = mu.cells().into_iter().map(|c| VarId::cell("s", c)).collect();
    let t = nu.cells().into_iter().map(|c| VarId::cell("t", c)).collect();
    (s, t)
}

fn check_sizes(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<()> {
    if lambda.size() != mu.size() + nu.size() {
        return Err(Error::Precondition(format!(
            "|{lambda}| differs from |{mu}| + |{nu}|"
        )));
    }
    Ok(())
}

/// Row-major traversal of `λ`, placing the `s` variables of `μ` (row-major)
/// first and then the `t` variables of `ν`.
pub fn canonical_filling(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<VarTableau> {
    check_sizes(lambda, mu, nu)?;
    let (s, t) = lr_variables(mu, nu);
    let placed = lambda.cells().into_iter().zip(s.into_iter().chain(t)).collect();
    VarTableau::from_cells(lambda, placed)
}

/// Column-major traversal of `λ`, placing the `t` variables first and then
/// the `s` variables, each block in reverse row-major order.
pub fn reversed_filling(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<VarTableau> {
    check_sizes(lambda, mu, nu)?;
    let (s, t) = lr_variables(mu, nu);
    let mut cells = lambda.cells();
    cells.sort_by_key(|c| (c.col, c.row));
    let vars = t.into_iter().rev().chain(s.into_iter().rev());
    VarTableau::from_cells(lambda, cells.into_iter().zip(vars).collect())
}

/// How the diagrams on the right-hand side of the LR identity are filled.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FillingStrategy {
    #[default]
    RowMajor,
    Reversed,
    /// User fillings for some shapes; the rest fall back to row-major.
    Custom(BTreeMap<Partition, VarTableau>),
}

impl FillingStrategy {
    pub fn custom(fillings: impl IntoIterator<Item = VarTableau>) -> Self {
        FillingStrategy::Custom(fillings.into_iter().map(|vt| (vt.shape().clone(), vt)).collect())
    }

    pub fn filling(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<VarTableau> {
        match self {
            FillingStrategy::RowMajor => canonical_filling(lambda, mu, nu),
            FillingStrategy::Reversed => reversed_filling(lambda, mu, nu),
            FillingStrategy::Custom(map) => match map.get(lambda) {
                None => canonical_filling(lambda, mu, nu),
                Some(vt) => {
                    check_sizes(lambda, mu, nu)?;
                    let (s, t) = lr_variables(mu, nu);
                    let expected: BTreeSet<&VarId> = s.iter().chain(&t).collect();
                    let got: BTreeSet<&VarId> = vt.variables().collect();
                    if expected != got {
                        return Err(Error::Precondition(format!(
                            "filling for {lambda} must use exactly the variables of {mu} and {nu}"
                        )));
                    }
                    Ok(vt.clone())
                }
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::vars::indexed_vars;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn set(ix: &[usize]) -> RowSet {
        RowSet::new(ix.to_vec()).unwrap()
    }

    fn rows(vt: &VarTableau) -> Vec<Vec<&str>> {
        vt.rows().iter().map(|r| r.iter().map(VarId::as_str).collect()).collect()
    }

    #[test]
    fn uj_worked_example() {
        let lambda = p(&[3, 2, 1, 1]);
        let s = VarTableau::indexed(&lambda, "s");
        let u = build_uj(&lambda, &s, &indexed_vars("t", 3), &set(&[1, 3, 4])).unwrap();
        assert_eq!(
            rows(&u),
            vec![
                vec!["t_1", "s_1_2", "t_2", "t_3"],
                vec!["s_1_1", "s_2_2", "s_1_3"],
                vec!["s_2_1"],
                vec!["s_3_1"],
                vec!["s_4_1"],
            ]
        );
    }

    #[test]
    fn uk_worked_example() {
        let lambda = p(&[3, 2, 1, 1]);
        let t = VarTableau::indexed(&lambda, "t");
        let u = build_uk(&lambda, &indexed_vars("s", 4), &t, &set(&[1, 3, 5, 6])).unwrap();
        assert_eq!(
            rows(&u),
            vec![
                vec!["s_1", "t_1_1", "t_1_2", "t_1_3"],
                vec!["t_2_1", "t_2_2"],
                vec!["s_2", "t_3_1"],
                vec!["t_4_1"],
                vec!["s_3"],
                vec!["s_4"],
            ]
        );
    }

    #[test]
    fn single_cell_cases() {
        let one = p(&[1]);
        let s = VarTableau::indexed(&one, "s");
        let t = VarTableau::indexed(&one, "t");
        let tv = indexed_vars("t", 1);
        let sv = indexed_vars("s", 1);
        assert_eq!(rows(&build_uj(&one, &s, &tv, &set(&[2])).unwrap()), vec![vec!["s_1_1", "t_1"]]);
        assert_eq!(rows(&build_uj(&one, &s, &tv, &set(&[1])).unwrap()), vec![vec!["t_1"], vec!["s_1_1"]]);
        assert_eq!(rows(&build_uk(&one, &sv, &t, &set(&[2])).unwrap()), vec![vec!["t_1_1"], vec!["s_1"]]);
        assert_eq!(rows(&build_uk(&one, &sv, &t, &set(&[1])).unwrap()), vec![vec!["s_1", "t_1_1"]]);
    }

    #[test]
    fn every_admissible_set_builds() {
        let lambda = p(&[3, 1]);
        let s = VarTableau::indexed(&lambda, "s");
        let t = VarTableau::indexed(&lambda, "t");
        for m in 1..=3 {
            for j in lambda.h_sets(m).unwrap() {
                let u = build_uj(&lambda, &s, &indexed_vars("t", m), &j).unwrap();
                assert!(u.shape().is_horizontal_strip_over(&lambda));
            }
            for k in lambda.e_sets(m).unwrap() {
                let u = build_uk(&lambda, &indexed_vars("s", m), &t, &k).unwrap();
                assert!(u.shape().is_vertical_strip_over(&lambda));
            }
        }
    }

    #[test]
    fn inadmissible_sets_are_rejected() {
        let lambda = p(&[1]);
        let s = VarTableau::indexed(&lambda, "s");
        assert!(matches!(
            build_uj(&lambda, &s, &indexed_vars("t", 1), &set(&[3])),
            Err(Error::InvalidRowSet { .. })
        ));
        assert!(build_uj(&lambda, &s, &indexed_vars("t", 2), &set(&[2])).is_err());
    }

    #[test]
    fn canonical_fillings() {
        assert_eq!(rows(&canonical_filling(&p(&[2]), &p(&[1]), &p(&[1])).unwrap()), vec![vec!["s_1_1", "t_1_1"]]);
        assert_eq!(
            rows(&canonical_filling(&p(&[1, 1]), &p(&[1]), &p(&[1])).unwrap()),
            vec![vec!["s_1_1"], vec!["t_1_1"]]
        );
        assert_eq!(
            rows(&canonical_filling(&p(&[2, 1]), &p(&[1, 1]), &p(&[1])).unwrap()),
            vec![vec!["s_1_1", "s_2_1"], vec!["t_1_1"]]
        );
        assert!(canonical_filling(&p(&[2]), &p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn reversed_filling_differs() {
        let (l, m, n) = (p(&[2, 1]), p(&[1, 1]), p(&[1]));
        let a = canonical_filling(&l, &m, &n).unwrap();
        let b = reversed_filling(&l, &m, &n).unwrap();
        assert_ne!(a, b);
        assert_eq!(rows(&b), vec![vec!["t_1_1", "s_1_1"], vec!["s_2_1"]]);
    }

    #[test]
    fn custom_filling_must_use_the_right_variables() {
        let (l, m, n) = (p(&[2]), p(&[1]), p(&[1]));
        let good = VarTableau::row(vec![VarId::new("t_1_1").unwrap(), VarId::new("s_1_1").unwrap()]).unwrap();
        let strategy = FillingStrategy::custom([good.clone()]);
        assert_eq!(strategy.filling(&l, &m, &n).unwrap(), good);
        let bad = VarTableau::row(vec![VarId::new("x").unwrap(), VarId::new("s_1_1").unwrap()]).unwrap();
        assert!(FillingStrategy::custom([bad]).filling(&l, &m, &n).is_err());
        // shapes without an override fall back to row-major
        assert_eq!(
            strategy.filling(&p(&[1, 1]), &m, &n).unwrap(),
            canonical_filling(&p(&[1, 1]), &m, &n).unwrap()
        );
    }
}
