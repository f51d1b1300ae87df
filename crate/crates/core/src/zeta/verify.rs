//! Exact checks of the symmetrized Pieri and Littlewood–Richardson identities
//! at a fixed truncation level, and of their term-by-term refinements.

use num_rational::BigRational;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::insertion::{column_insert_word, row_insert_word};
use crate::partitions::{partitions_of, Partition, RowSet};
use crate::tableaux::{enumerate_ssyt, lr_coefficient, Filling, Tableau, WeightVector, Word};
use crate::zeta::pushing::{build_uj, build_uk, FillingStrategy};
use crate::zeta::scalar::format_rational;
use crate::zeta::symmetrize::{
    base_exponents, e_sym_spec, guard, h_sym_spec, permutation_sum, prepare_zeta_terms, slot_layout, PreparedSum,
    Summand, SymOptions, SymSpec, ZetaTerm,
};
use crate::zeta::vars::{indexed_vars, Assignment, VarTableau};

fn as_text<S: Serializer>(q: &BigRational, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&format_rational(q))
}

fn from_text<'de, D: serde::Deserializer<'de>>(de: D) -> std::result::Result<BigRational, D::Error> {
    let s = String::deserialize(de)?;
    crate::zeta::scalar::parse_rational(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
}

/// Both sides of a symmetrized identity, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    #[serde(serialize_with = "as_text", deserialize_with = "from_text")]
    pub lhs: BigRational,
    #[serde(serialize_with = "as_text", deserialize_with = "from_text")]
    pub rhs: BigRational,
    pub equal: bool,
    /// Permutations summed on each side.
    pub permutations: u128,
    /// Distinct terms on the right-hand side.
    pub terms: usize,
    pub warnings: Vec<String>,
}

fn evaluate(
    lhs: &[ZetaTerm],
    rhs: &[ZetaTerm],
    spec: &SymSpec,
    a: &Assignment<u32>,
    n: usize,
    opts: &SymOptions,
    warnings: Vec<String>,
) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::Precondition("truncation level must be at least 1".into()));
    }
    let left = prepare_zeta_terms(lhs, spec, n)?;
    let right = prepare_zeta_terms(rhs, spec, n)?;
    guard(spec, opts)?;
    let base = base_exponents(spec, a)?;
    let k = spec.symmetrized().len();
    let lhs: BigRational = permutation_sum(&left, &base, k, opts);
    let rhs: BigRational = permutation_sum(&right, &base, k, opts);
    Ok(IdentityReport {
        equal: lhs == rhs,
        lhs,
        rhs,
        permutations: spec.permutation_count(),
        terms: right.terms.len(),
        warnings,
    })
}

fn row_vars(prefix: &str, n: usize) -> Result<VarTableau> {
    VarTableau::row(indexed_vars(prefix, n))
}

fn column_vars(prefix: &str, n: usize) -> Result<VarTableau> {
    VarTableau::column(indexed_vars(prefix, n))
}

/// Row-strip Pieri identity:
/// `Σ_sym ζ_λ(s) ζ_{(m)}(t) = Σ_sym Σ_J ζ_{λ^J}(u^J)`.
pub fn verify_pieri_h(
    lambda: &Partition,
    m: usize,
    a: &Assignment<u32>,
    n: usize,
    opts: &SymOptions,
) -> Result<IdentityReport> {
    let spec = h_sym_spec(lambda, m, false)?;
    let s = VarTableau::indexed(lambda, "s");
    let t = indexed_vars("t", m);
    let lhs = [ZetaTerm::new(1, vec![s.clone(), row_vars("t", m)?])];
    let rhs = lambda
        .h_sets(m)?
        .iter()
        .map(|j| Ok(ZetaTerm::single(build_uj(lambda, &s, &t, j)?)))
        .collect::<Result<Vec<_>>>()?;
    evaluate(&lhs, &rhs, &spec, a, n, opts, Vec::new())
}

/// Column-strip Pieri identity:
/// `Σ_sym ζ_{(1^n)}(s) ζ_λ(t) = Σ_sym Σ_K ζ_{λ_K}(u_K)`.
pub fn verify_pieri_e(
    lambda: &Partition,
    strip: usize,
    a: &Assignment<u32>,
    n: usize,
    opts: &SymOptions,
) -> Result<IdentityReport> {
    let spec = e_sym_spec(lambda, strip, false)?;
    let t = VarTableau::indexed(lambda, "t");
    let s = indexed_vars("s", strip);
    let lhs = [ZetaTerm::new(1, vec![column_vars("s", strip)?, t.clone()])];
    let rhs = lambda
        .e_sets(strip)?
        .iter()
        .map(|k| Ok(ZetaTerm::single(build_uk(lambda, &s, &t, k)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut warnings = Vec::new();
    if n < strip {
        warnings.push(format!(
            "truncation level {n} is below the strip length {strip}; both sides vanish"
        ));
    }
    evaluate(&lhs, &rhs, &spec, a, n, opts, warnings)
}

/// Littlewood–Richardson identity:
/// `Σ_sym ζ_μ(s) ζ_ν(t) = Σ_sym Σ_λ c^λ_{μν} ζ_λ(u_λ)`, every variable
/// symmetrized.
pub fn verify_lr(
    mu: &Partition,
    nu: &Partition,
    a: &Assignment<u32>,
    n: usize,
    filling: &FillingStrategy,
    opts: &SymOptions,
) -> Result<IdentityReport> {
    let s = VarTableau::indexed(mu, "s");
    let t = VarTableau::indexed(nu, "t");
    let spec = SymSpec::all(s.variables().chain(t.variables()).cloned())?;
    let lhs = [ZetaTerm::new(1, vec![s, t])];
    let mut rhs = Vec::new();
    for lambda in partitions_of(mu.size() + nu.size()) {
        let c = lr_coefficient(mu, nu, &lambda);
        if c > 0 {
            rhs.push(ZetaTerm::new(c, vec![filling.filling(&lambda, mu, nu)?]));
        }
    }
    evaluate(&lhs, &rhs, &spec, a, n, opts, Vec::new())
}

/// Which Pieri identity a lemma-level check refines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PieriMode {
    /// `L` has shape `λ`, `M` is a row; `T = L ← M`.
    H,
    /// `L` is a column, `M` has shape `λ`; `T = L → M`.
    E,
}

/// One pair `(L, M)` checked against its insertion tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub insertion: Tableau,
    /// `J` (mode H) or `K` (mode E) read off the new cells.
    pub set: RowSet,
    pub report: IdentityReport,
}

/// Checks `Σ_sym 1/(L^s M^t) = Σ_sym 1/T^{u}` where `T` is the insertion
/// tableau of the pair and `u` the pushing filling for the set of columns
/// (mode H) or rows (mode E) it grew in.
pub fn verify_lemma_term(
    l: &Tableau,
    m: &Tableau,
    mode: PieriMode,
    a: &Assignment<u32>,
    opts: &SymOptions,
) -> Result<LemmaReport> {
    check_lemma_pair(l, m, mode)?;
    let t = match mode {
        PieriMode::H => row_insert_word(l, &Word(m.rows()[0].clone()))?.0,
        PieriMode::E => column_insert_word(&Word(l.column_entries(1)), m)?.0,
    };
    debug_assert_eq!(t.weight(), WeightVector::of_letters(l.entries().chain(m.entries())));
    verify_lemma_with_insertion(l, m, mode, a, opts, t)
}

fn check_lemma_pair(l: &Tableau, m: &Tableau, mode: PieriMode) -> Result<()> {
    match mode {
        PieriMode::H if m.shape().length() != 1 => Err(Error::Precondition("M must be a single row".into())),
        PieriMode::E if l.shape().part(1) != 1 => Err(Error::Precondition("L must be a single column".into())),
        _ if !l.is_ssyt() || !m.is_ssyt() => Err(Error::NotSemistandard),
        _ => Ok(()),
    }
}

/// [`verify_lemma_term`] with the insertion tableau `t` supplied by the
/// caller.
pub fn verify_lemma_with_insertion(
    l: &Tableau,
    m: &Tableau,
    mode: PieriMode,
    a: &Assignment<u32>,
    opts: &SymOptions,
    t: Tableau,
) -> Result<LemmaReport> {
    check_lemma_pair(l, m, mode)?;
    let (spec, s_vt, t_vt, set, u) = match mode {
        PieriMode::H => {
            let lambda = l.shape();
            let strip = m.shape().size();
            let grown = strip_set(&lambda.conjugate(), &t.shape().conjugate(), strip)
                .filter(|_| t.shape().is_horizontal_strip_over(lambda))
                .ok_or_else(|| Error::LemmaShape { base: lambda.clone(), shape: t.shape().clone() })?;
            let s_vt = VarTableau::indexed(lambda, "s");
            let u = build_uj(lambda, &s_vt, &indexed_vars("t", strip), &grown)?;
            (h_sym_spec(lambda, strip, false)?, s_vt, row_vars("t", strip)?, grown, u)
        }
        PieriMode::E => {
            let lambda = m.shape();
            let strip = l.shape().size();
            let grown = strip_set(lambda, t.shape(), strip)
                .filter(|_| t.shape().is_vertical_strip_over(lambda))
                .ok_or_else(|| Error::LemmaShape { base: lambda.clone(), shape: t.shape().clone() })?;
            let t_vt = VarTableau::indexed(lambda, "t");
            let u = build_uk(lambda, &indexed_vars("s", strip), &t_vt, &grown)?;
            (e_sym_spec(lambda, strip, false)?, column_vars("s", strip)?, t_vt, grown, u)
        }
    };

    guard(&spec, opts)?;
    let slot_of = slot_layout(&spec);
    let left = PreparedSum {
        terms: vec![(1, vec![Summand::single(l, &s_vt, &slot_of)?, Summand::single(m, &t_vt, &slot_of)?])],
    };
    let right = PreparedSum { terms: vec![(1, vec![Summand::single(&t, &u, &slot_of)?])] };
    let base = base_exponents(&spec, a)?;
    let k = spec.symmetrized().len();
    let lhs: BigRational = permutation_sum(&left, &base, k, opts);
    let rhs: BigRational = permutation_sum(&right, &base, k, opts);
    Ok(LemmaReport {
        insertion: t,
        set,
        report: IdentityReport {
            equal: lhs == rhs,
            lhs,
            rhs,
            permutations: spec.permutation_count(),
            terms: 1,
            warnings: Vec::new(),
        },
    })
}

/// Rows in which `outer` exceeds `inner`, if they number `count` and each
/// grew by one cell.
fn strip_set(inner: &Partition, outer: &Partition, count: usize) -> Option<RowSet> {
    let rows = outer.length().max(inner.length());
    let mut grown = Vec::new();
    for k in 1..=rows {
        match outer.part(k).checked_sub(inner.part(k))? {
            0 => {}
            1 => grown.push(k),
            _ => return None,
        }
    }
    (grown.len() == count).then(|| RowSet::new(grown).ok()).flatten()
}

/// Every pair `(L, M)` with entries at most `n` for the given mode: `L` of
/// shape `λ` and `M` a row of length `strip` (mode H), or `L` a column of
/// length `strip` and `M` of shape `λ` (mode E).
pub fn lemma_pairs(lambda: &Partition, strip: usize, mode: PieriMode, n: usize) -> Result<Vec<(Tableau, Tableau)>> {
    let line = match mode {
        PieriMode::H => Partition::new(vec![strip])?,
        PieriMode::E => Partition::new(vec![1; strip])?,
    };
    let (ls, ms) = match mode {
        PieriMode::H => (enumerate_ssyt(lambda, n), enumerate_ssyt(&line, n)),
        PieriMode::E => (enumerate_ssyt(&line, n), enumerate_ssyt(lambda, n)),
    };
    Ok(ls.iter().flat_map(|l| ms.iter().map(move |m| (l.clone(), m.clone()))).collect())
}
