//! Truncated Schur multiple zeta functions
//! `ζ^{(N)}_λ(s) = Σ_{M ∈ SSYT(λ), entries ≤ N} 1 / M^s`, where
//! `M^s = ∏ m_{ij}^{s_{ij}}`, and the symmetrized identities they satisfy.
//!
//! The shape `(1^d)` gives the strict sums `Σ_{m_1 < ⋯ < m_d}` and the shape
//! `(d)` the weak ones `Σ_{m_1 ≤ ⋯ ≤ m_d}`, following the semistandard
//! convention of strict columns and weak rows.

mod pushing;
mod scalar;
mod symmetrize;
mod transfer;
mod vars;
mod verify;

use num_traits::Float;
use serde::{Deserialize, Serialize};

pub use pushing::{build_uj, build_uk, canonical_filling, reversed_filling, FillingStrategy};
pub use scalar::{format_rational, parse_rational, Exponent, ZetaScalar};
pub use symmetrize::{
    e_sym_spec, h_sym_spec, sym_sum, SymOptions, SymSpec, ZetaTerm, DEFAULT_FACTORIAL_CAP,
};
pub use transfer::Transfer;
pub use vars::{indexed_vars, Assignment, VarId, VarTableau};
pub use verify::{
    lemma_pairs, verify_lemma_term, verify_lemma_with_insertion, verify_lr, verify_pieri_e, verify_pieri_h, IdentityReport,
    LemmaReport, PieriMode,
};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableaux::{enumerate_ssyt, Tableau};

fn check_shape(shape: &Partition, vt: &VarTableau) -> Result<()> {
    if vt.shape() != shape {
        return Err(Error::VariableShape(shape.clone()));
    }
    Ok(())
}

fn cell_exponents<E: Exponent>(vt: &VarTableau, a: &Assignment<E>) -> Result<Vec<E>> {
    vt.variables().map(|v| a.get(v)).collect()
}

/// `1 / M^s` with `s` read off `vt` through `a`.
pub fn monomial<S: ZetaScalar>(m: &Tableau, vt: &VarTableau, a: &Assignment<S::Exponent>) -> Result<S> {
    check_shape(m.shape(), vt)?;
    let exps = cell_exponents(vt, a)?;
    Ok(S::reciprocal_monomial(m.entries().zip(&exps)))
}

/// `ζ^{(N)}_λ` by enumerating every SSYT with entries at most `n`.
pub fn eval_zeta_truncated<S: ZetaScalar>(
    shape: &Partition,
    vt: &VarTableau,
    a: &Assignment<S::Exponent>,
    n: usize,
) -> Result<S> {
    check_shape(shape, vt)?;
    if n == 0 {
        return Err(Error::Precondition("truncation level must be at least 1".into()));
    }
    let exps = cell_exponents(vt, a)?;
    Ok(enumerate_ssyt(shape, n)
        .iter()
        .map(|t| S::reciprocal_monomial(t.entries().zip(&exps)))
        .fold(S::zero(), |acc, x| acc + x))
}

/// Every exponent is at least 1 and every corner exponent exceeds 1.
pub fn in_convergence_domain<E: Exponent>(shape: &Partition, vt: &VarTableau, a: &Assignment<E>) -> Result<bool> {
    check_shape(shape, vt)?;
    let value = |c| -> Result<f64> { Ok(a.get(vt.get(c).expect("cell of shape"))?.to_f64()) };
    for c in shape.cells() {
        let v = value(c)?;
        if v.is_nan() || v < 1.0 {
            return Ok(false);
        }
    }
    for c in shape.corners() {
        let v = value(c)?;
        if v.is_nan() || v <= 1.0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of [`eval_zeta_limit`]. The increment is a heuristic stopping
/// signal, not an error bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitEstimate<S> {
    pub value: S,
    /// Truncation level of `value`.
    pub n: usize,
    /// Difference from the value at `n / 2`.
    pub last_increment: S,
    pub converged: bool,
}

pub const DEFAULT_MAX_LEVEL: usize = 1 << 27;

/// Evaluates at `N = 1, 2, 4, …` until the change between successive levels
/// drops below `tol`.
pub fn eval_zeta_limit<S: ZetaScalar + Float>(
    shape: &Partition,
    vt: &VarTableau,
    a: &Assignment<S::Exponent>,
    tol: S,
) -> Result<LimitEstimate<S>> {
    eval_zeta_limit_capped(shape, vt, a, tol, DEFAULT_MAX_LEVEL)
}

/// [`eval_zeta_limit`] giving up at truncation level `max_n`.
pub fn eval_zeta_limit_capped<S: ZetaScalar + Float>(
    shape: &Partition,
    vt: &VarTableau,
    a: &Assignment<S::Exponent>,
    tol: S,
    max_n: usize,
) -> Result<LimitEstimate<S>> {
    if tol.is_nan() || tol <= S::zero() {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    if !in_convergence_domain(shape, vt, a)? {
        return Err(Error::OutsideConvergenceDomain);
    }
    let exps = cell_exponents(vt, a)?;
    let cells = shape.cells();
    let mut transfer = Transfer::<S>::new(shape, |c| exps[cells.iter().position(|&d| d == c).expect("cell")]);
    // the first level at which every row of the shape can be filled
    let mut n = shape.length().max(1).next_power_of_two();
    transfer.advance_to(n);
    let mut previous = transfer.value();
    loop {
        let next = n.saturating_mul(2);
        if next > max_n.max(n) {
            return Ok(LimitEstimate { value: previous, n, last_increment: S::infinity(), converged: false });
        }
        transfer.advance_to(next);
        let value = transfer.value();
        let increment = value - previous;
        n = next;
        if increment < tol {
            return Ok(LimitEstimate { value, n, last_increment: increment, converged: true });
        }
        previous = value;
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn exact(vt: &VarTableau, values: &[u32]) -> Assignment<u32> {
        Assignment::from_pairs(vt.variables().map(|v| v.to_string()).zip(values.iter().copied())).unwrap()
    }

    fn float(vt: &VarTableau, values: &[f64]) -> Assignment<f64> {
        Assignment::from_pairs(vt.variables().map(|v| v.to_string()).zip(values.iter().copied())).unwrap()
    }

    #[test]
    fn monomial_examples() {
        let vt = VarTableau::indexed(&p(&[1]), "s");
        let m = Tableau::new(vec![vec![2]]).unwrap();
        assert_eq!(monomial::<BigRational>(&m, &vt, &exact(&vt, &[2])).unwrap(), q(1, 4));

        let vt = VarTableau::indexed(&p(&[1, 1]), "s");
        let m = Tableau::new(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(monomial::<BigRational>(&m, &vt, &exact(&vt, &[1, 2])).unwrap(), q(1, 4));

        let vt = VarTableau::indexed(&p(&[2, 1]), "s");
        let m = Tableau::new(vec![vec![1, 2], vec![2]]).unwrap();
        assert_eq!(monomial::<BigRational>(&m, &vt, &exact(&vt, &[1, 1, 1])).unwrap(), q(1, 4));

        let wrong = VarTableau::indexed(&p(&[2]), "s");
        assert!(matches!(
            monomial::<BigRational>(&m, &wrong, &exact(&wrong, &[1, 1])),
            Err(Error::VariableShape(_))
        ));
    }

    #[test]
    fn truncated_examples() {
        let vt = VarTableau::indexed(&p(&[1]), "s");
        let got: BigRational = eval_zeta_truncated(&p(&[1]), &vt, &exact(&vt, &[2]), 3).unwrap();
        assert_eq!(got, q(49, 36));

        let vt = VarTableau::indexed(&p(&[1, 1]), "s");
        let got: BigRational = eval_zeta_truncated(&p(&[1, 1]), &vt, &exact(&vt, &[1, 2]), 3).unwrap();
        assert_eq!(got, q(5, 12));

        let shape = p(&[2, 1]);
        let vt = VarTableau::indexed(&shape, "s");
        let a = exact(&vt, &[2, 3, 5]);
        let got: BigRational = eval_zeta_truncated(&shape, &vt, &a, 2).unwrap();
        let by_hand = [[1usize, 1, 2], [1, 2, 2]]
            .iter()
            .map(|e| q(1, (e[0].pow(2) * e[1].pow(3) * e[2].pow(5)) as i64))
            .fold(q(0, 1), |x, y| x + y);
        assert_eq!(got, by_hand);

        let got: BigRational = eval_zeta_truncated(&p(&[1, 1]), &VarTableau::indexed(&p(&[1, 1]), "s"), &exact(&VarTableau::indexed(&p(&[1, 1]), "s"), &[1, 1]), 1).unwrap();
        assert_eq!(got, q(0, 1));
    }

    #[test]
    fn strict_and_weak_sums() {
        let n = 5;
        let (s, t) = (2u32, 3u32);
        let col = VarTableau::indexed(&p(&[1, 1]), "s");
        let row = VarTableau::indexed(&p(&[2]), "s");
        let mut strict = q(0, 1);
        let mut weak = q(0, 1);
        for a in 1..=n as i64 {
            for b in a..=n as i64 {
                let term = q(1, a.pow(s) * b.pow(t));
                if a < b {
                    strict += term.clone();
                }
                weak += term;
            }
        }
        assert_eq!(eval_zeta_truncated::<BigRational>(&p(&[1, 1]), &col, &exact(&col, &[s, t]), n).unwrap(), strict);
        assert_eq!(eval_zeta_truncated::<BigRational>(&p(&[2]), &row, &exact(&row, &[s, t]), n).unwrap(), weak);
    }

    #[test]
    fn truncation_is_monotone() {
        let shape = p(&[2, 1]);
        let vt = VarTableau::indexed(&shape, "s");
        let a = float(&vt, &[1.0, 1.5, 1.25]);
        let values: Vec<f64> = (1..=7).map(|n| eval_zeta_truncated(&shape, &vt, &a, n).unwrap()).collect();
        assert!(values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn convergence_domain() {
        let shape = p(&[2, 1]);
        let vt = VarTableau::indexed(&shape, "s");
        assert!(in_convergence_domain(&shape, &vt, &float(&vt, &[1.0, 2.0, 2.0])).unwrap());
        let one = VarTableau::indexed(&p(&[1]), "s");
        assert!(!in_convergence_domain(&p(&[1]), &one, &float(&one, &[1.0])).unwrap());
        let row = VarTableau::indexed(&p(&[2]), "s");
        assert!(in_convergence_domain(&p(&[2]), &row, &float(&row, &[1.0, 1.5])).unwrap());
        assert!(!in_convergence_domain(&p(&[2]), &row, &float(&row, &[0.5, 1.5])).unwrap());
        assert!(in_convergence_domain(&p(&[1]), &one, &exact(&one, &[2])).unwrap());
    }

    #[test]
    fn limit_rejects_divergent_exponents() {
        let one = VarTableau::indexed(&p(&[1]), "s");
        assert!(matches!(
            eval_zeta_limit(&p(&[1]), &one, &float(&one, &[1.0]), 1e-6),
            Err(Error::OutsideConvergenceDomain)
        ));
    }

    #[test]
    fn limit_of_weak_double_sum() {
        // Σ_{m<=n} 1/(m²n²) = (ζ(2)² + ζ(4)) / 2
        let pi = std::f64::consts::PI;
        let z2 = pi.powi(2) / 6.0;
        let z4 = pi.powi(4) / 90.0;
        let row = VarTableau::indexed(&p(&[2]), "s");
        let est = eval_zeta_limit(&p(&[2]), &row, &float(&row, &[2.0, 2.0]), 1e-7).unwrap();
        assert!(est.converged);
        assert!((est.value - (z2 * z2 + z4) / 2.0).abs() < 1e-6, "{est:?}");
    }

    #[test]
    fn limit_cap_reports_non_convergence() {
        let one = VarTableau::indexed(&p(&[1]), "s");
        let est = eval_zeta_limit_capped(&p(&[1]), &one, &float(&one, &[1.01]), 1e-12, 64).unwrap();
        assert!(!est.converged);
        assert_eq!(est.n, 64);
    }

    #[test]
    fn limit_in_single_precision() {
        let one = VarTableau::indexed(&p(&[1]), "s");
        let a: Assignment<f32> = Assignment::from_pairs([("s_1_1", 3.0f32)]).unwrap();
        let est = eval_zeta_limit(&p(&[1]), &one, &a, 1e-5f32).unwrap();
        assert!((est.value - 1.202_057).abs() < 1e-4);
    }
}
