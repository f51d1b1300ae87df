//! Sums over all permutations of a designated set of exponent variables.
//!
//! Permutations are split into blocks by their first image; blocks run in
//! parallel and are reduced in block order, so the result does not depend on
//! the number of workers.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableaux::{enumerate_ssyt, Tableau};
use crate::zeta::scalar::{Exponent, ZetaScalar};
use crate::zeta::vars::{indexed_vars, Assignment, VarId, VarTableau};

pub const DEFAULT_FACTORIAL_CAP: usize = 8;

/// Which variables are permuted and which are held fixed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymSpec {
    symmetrized: Vec<VarId>,
    fixed: BTreeSet<VarId>,
}

impl SymSpec {
    pub fn new(symmetrized: Vec<VarId>, fixed: impl IntoIterator<Item = VarId>) -> Result<Self> {
        let fixed: BTreeSet<VarId> = fixed.into_iter().collect();
        let mut seen = BTreeSet::new();
        for v in &symmetrized {
            if !seen.insert(v) {
                return Err(Error::DuplicateVariable(v.to_string()));
            }
            if fixed.contains(v) {
                return Err(Error::OverlappingSpec(v.to_string()));
            }
        }
        Ok(SymSpec { symmetrized, fixed })
    }

    /// Every variable permuted.
    pub fn all(vars: impl IntoIterator<Item = VarId>) -> Result<Self> {
        SymSpec::new(vars.into_iter().collect(), [])
    }

    pub fn symmetrized(&self) -> &[VarId] {
        &self.symmetrized
    }

    pub fn fixed(&self) -> &BTreeSet<VarId> {
        &self.fixed
    }

    pub fn contains(&self, v: &VarId) -> bool {
        self.fixed.contains(v) || self.symmetrized.contains(v)
    }

    pub fn permutation_count(&self) -> u128 {
        (1..=self.symmetrized.len() as u128).product()
    }
}

/// Symmetrization set for the row-strip Pieri identity: `t_1..t_r` with
/// `r = λ_1`, then `s_{i,1}` for `i <= λ'_2`, then `s_{i,j}` for `j = 2..r`
/// and `i <= λ'_j`. Everything else is fixed.
///
/// `m < λ_1` is refused unless `allow_short` is set, in which case only
/// `t_1..t_m` are permuted.
pub fn h_sym_spec(lambda: &Partition, m: usize, allow_short: bool) -> Result<SymSpec> {
    let r = lambda.part(1);
    if m < r && !allow_short {
        return Err(Error::Precondition(format!("m = {m} is smaller than λ_1 = {r}")));
    }
    let conj = lambda.conjugate();
    let s = |i, j| VarId::cell("s", crate::partitions::Cell::new(i, j));
    let t = indexed_vars("t", m);

    let mut sym: Vec<VarId> = t.iter().take(r.min(m)).cloned().collect();
    sym.extend((1..=conj.part(2)).map(|i| s(i, 1)));
    for j in 2..=r {
        sym.extend((1..=conj.part(j)).map(|i| s(i, j)));
    }
    let mut fixed: Vec<VarId> = (conj.part(2) + 1..=conj.part(1)).map(|i| s(i, 1)).collect();
    fixed.extend(t.into_iter().skip(r.min(m)));
    SymSpec::new(sym, fixed)
}

/// Column-strip mirror of [`h_sym_spec`]: `s_1..s_ℓ` with `ℓ = l(λ)`, then
/// `t_{1,j}` for `j <= λ_2`, then `t_{i,j}` for `i = 2..ℓ` and `j <= λ_i`.
pub fn e_sym_spec(lambda: &Partition, n: usize, allow_short: bool) -> Result<SymSpec> {
    let len = lambda.length();
    if n < len && !allow_short {
        return Err(Error::Precondition(format!("n = {n} is smaller than l(λ) = {len}")));
    }
    let t = |i, j| VarId::cell("t", crate::partitions::Cell::new(i, j));
    let s = indexed_vars("s", n);

    let mut sym: Vec<VarId> = s.iter().take(len.min(n)).cloned().collect();
    sym.extend((1..=lambda.part(2)).map(|j| t(1, j)));
    for i in 2..=len {
        sym.extend((1..=lambda.part(i)).map(|j| t(i, j)));
    }
    let mut fixed: Vec<VarId> = (lambda.part(2) + 1..=lambda.part(1)).map(|j| t(1, j)).collect();
    fixed.extend(s.into_iter().skip(len.min(n)));
    SymSpec::new(sym, fixed)
}

/// `coefficient · ∏ ζ^{(N)}_{shape}(vars)` over the factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaTerm {
    pub coefficient: usize,
    pub factors: Vec<VarTableau>,
}

impl ZetaTerm {
    pub fn new(coefficient: usize, factors: Vec<VarTableau>) -> Self {
        ZetaTerm { coefficient, factors }
    }

    pub fn single(factor: VarTableau) -> Self {
        ZetaTerm { coefficient: 1, factors: vec![factor] }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymOptions {
    /// Largest symmetrized set accepted without `allow_large`.
    pub cap: usize,
    pub allow_large: bool,
    /// Worker count; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SymOptions {
    fn default() -> Self {
        SymOptions { cap: DEFAULT_FACTORIAL_CAP, allow_large: false, jobs: None }
    }
}

/// A finite set of integer fillings of one variable tableau; evaluates to
/// `Σ_M ∏_cells 1 / m^{exponent}`.
#[derive(Clone, Debug)]
pub(crate) struct Summand {
    cell_count: usize,
    /// Row-major entries of every filling, concatenated.
    entries: Vec<usize>,
    /// Slot of the variable sitting in each cell.
    slots: Vec<usize>,
}

impl Summand {
    fn new(fillings: &[Tableau], vt: &VarTableau, slot_of: &HashMap<&VarId, usize>) -> Result<Self> {
        let slots = vt
            .variables()
            .map(|v| slot_of.get(v).copied().ok_or_else(|| Error::UncoveredVariable(v.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let mut entries = Vec::with_capacity(fillings.len() * slots.len());
        for t in fillings {
            if t.shape() != vt.shape() {
                return Err(Error::VariableShape(t.shape().clone()));
            }
            entries.extend(t.entries());
        }
        Ok(Summand { cell_count: slots.len(), entries, slots })
    }

    pub(crate) fn single(t: &Tableau, vt: &VarTableau, slot_of: &HashMap<&VarId, usize>) -> Result<Self> {
        Summand::new(std::slice::from_ref(t), vt, slot_of)
    }

    pub(crate) fn eval<S: ZetaScalar>(&self, exps: &[S::Exponent]) -> S {
        if self.cell_count == 0 {
            // the empty shape has exactly one (empty) filling
            return S::one();
        }
        self.entries
            .chunks_exact(self.cell_count)
            .map(|m| S::reciprocal_monomial(m.iter().zip(&self.slots).map(|(&b, &slot)| (b, &exps[slot]))))
            .fold(S::zero(), |acc, x| acc + x)
    }

    fn key<E: Exponent>(&self, exps: &[E]) -> Vec<u64> {
        self.slots.iter().map(|&s| exps[s].key()).collect()
    }
}

/// Terms with their factors already prepared against a slot layout.
pub(crate) struct PreparedSum {
    pub(crate) terms: Vec<(usize, Vec<Summand>)>,
}

impl PreparedSum {
    pub(crate) fn eval<S: ZetaScalar>(&self, exps: &[S::Exponent], cache: &mut [HashMap<Vec<u64>, S>]) -> S {
        let mut total = S::zero();
        let mut flat = 0;
        for (coefficient, factors) in &self.terms {
            let mut product = S::from_count(*coefficient);
            for f in factors {
                let key = f.key(exps);
                let value = cache[flat].entry(key).or_insert_with(|| f.eval::<S>(exps)).clone();
                product = product * value;
                flat += 1;
            }
            total = total + product;
        }
        total
    }

    fn factor_count(&self) -> usize {
        self.terms.iter().map(|(_, f)| f.len()).sum()
    }
}

/// Slot layout: symmetrized variables take slots `0..k`, fixed ones follow.
pub(crate) fn slot_layout(spec: &SymSpec) -> HashMap<&VarId, usize> {
    spec.symmetrized().iter().chain(spec.fixed()).enumerate().map(|(k, v)| (v, k)).collect()
}

pub(crate) fn base_exponents<E: Exponent>(spec: &SymSpec, a: &Assignment<E>) -> Result<Vec<E>> {
    spec.symmetrized().iter().chain(spec.fixed()).map(|v| a.get(v)).collect()
}

pub(crate) fn guard(spec: &SymSpec, opts: &SymOptions) -> Result<()> {
    let count = spec.symmetrized().len();
    if count > opts.cap && !opts.allow_large {
        return Err(Error::FactorialGuard { count, cap: opts.cap });
    }
    Ok(())
}

/// `Σ_σ prepared(σ ∘ base)` over all permutations `σ` of the first `k` slots.
pub(crate) fn permutation_sum<S: ZetaScalar>(
    prepared: &PreparedSum,
    base: &[S::Exponent],
    k: usize,
    opts: &SymOptions,
) -> S {
    let factors = prepared.factor_count();
    let block = |first: usize| -> S {
        let mut cache: Vec<HashMap<Vec<u64>, S>> = vec![HashMap::new(); factors];
        let mut exps = base.to_vec();
        let rest: Vec<usize> = (0..k).filter(|&x| x != first).collect();
        let mut total = S::zero();
        for perm in rest.iter().copied().permutations(k - 1) {
            exps[0] = base[first];
            for (slot, &src) in perm.iter().enumerate() {
                exps[slot + 1] = base[src];
            }
            total = total + prepared.eval(&exps, &mut cache);
        }
        total
    };

    if k == 0 {
        let mut cache = vec![HashMap::new(); factors];
        return prepared.eval(base, &mut cache);
    }
    let run = || -> Vec<S> { (0..k).into_par_iter().map(block).collect() };
    let blocks = match opts.jobs {
        Some(1) => (0..k).map(block).collect(),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        },
        None => run(),
    };
    blocks.into_iter().fold(S::zero(), |acc, x| acc + x)
}

/// `Σ_σ Σ_terms coefficient · ∏_factors ζ^{(N)}(σ ∘ a)` where `σ` ranges over
/// all bijections of the symmetrized variables' values.
pub fn sym_sum<S: ZetaScalar>(
    terms: &[ZetaTerm],
    spec: &SymSpec,
    a: &Assignment<S::Exponent>,
    n: usize,
    opts: &SymOptions,
) -> Result<S> {
    let prepared = prepare_zeta_terms(terms, spec, n)?;
    guard(spec, opts)?;
    let base = base_exponents(spec, a)?;
    Ok(permutation_sum(&prepared, &base, spec.symmetrized().len(), opts))
}

pub(crate) fn prepare_zeta_terms(terms: &[ZetaTerm], spec: &SymSpec, n: usize) -> Result<PreparedSum> {
    let slot_of = slot_layout(spec);
    let mut cache: HashMap<Partition, Vec<Tableau>> = HashMap::new();
    let terms = terms
        .iter()
        .map(|term| {
            let factors = term
                .factors
                .iter()
                .map(|vt| {
                    let fillings = cache.entry(vt.shape().clone()).or_insert_with(|| enumerate_ssyt(vt.shape(), n));
                    Summand::new(fillings, vt, &slot_of)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((term.coefficient, factors))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PreparedSum { terms })
}
