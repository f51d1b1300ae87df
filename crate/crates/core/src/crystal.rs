//! The standard GL(N) crystal 𝔹 of single letters and its tensor powers.
//!
//! A tensor word `x_1 ⊗ x_2 ⊗ ... ⊗ x_k` is bracketed right-combed,
//! `x_1 ⊗ (x_2 ⊗ (...))`, and the operators follow the tensor rule
//!
//! ```text
//! f_i(x ⊗ y) = f_i(x) ⊗ y   if φ_i(y) <= ε_i(x),   x ⊗ f_i(y) otherwise
//! e_i(x ⊗ y) = e_i(x) ⊗ y   if φ_i(y) <  ε_i(x),   x ⊗ e_i(y) otherwise
//! φ_i(x ⊗ y) = max(φ_i(x), φ_i(y) + <wt(x), α_i>)
//! ε_i(x ⊗ y) = max(ε_i(y), ε_i(x) - <wt(y), α_i>)
//! ```
//!
//! with `α_i = e_i - e_{i+1}`. `None` plays the role of the zero element.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt::{self, Debug, Write as _};
use std::hash::Hash;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::insertion;
use crate::partitions::Partition;
use crate::tableaux::{enumerate_ssyt, Filling, Tableau};

/// Alphabet size `N`; the operator indices are `1..N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrystalConfig {
    n: usize,
}

impl CrystalConfig {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if n > u8::MAX as usize {
            return Err(Error::Precondition(format!("alphabet size {n} exceeds 255")));
        }
        Ok(CrystalConfig { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Checked operator index.
    pub fn arrow(&self, i: usize) -> Result<Arrow> {
        if i == 0 || i >= self.n {
            return Err(Error::ArrowOutOfRange { index: i, n: self.n });
        }
        Ok(Arrow(i))
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> {
        (1..self.n).map(Arrow)
    }

    pub fn letter(&self, value: usize) -> Result<Letter> {
        if value == 0 || value > self.n {
            return Err(Error::LetterOutOfRange { letter: value, n: self.n });
        }
        Ok(Letter(value as u8))
    }

    pub fn word(&self, letters: &[usize]) -> Result<TensorWord> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        let letters = letters
            .iter()
            .map(|&x| self.letter(x).map(|l| l.0))
            .collect::<Result<Vec<u8>>>()?;
        Ok(TensorWord { letters })
    }

    /// Every element of 𝔹^{⊗k}, in lexicographic order.
    pub fn tensor_power(&self, k: usize) -> Vec<TensorWord> {
        if k == 0 {
            return Vec::new();
        }
        (0..k)
            .map(|_| 1..=self.n as u8)
            .multi_cartesian_product()
            .map(|letters| TensorWord { letters })
            .collect()
    }
}

/// A crystal operator index `i ∈ {1, ..., N-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow(usize);

impl Arrow {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    pub fn value(self) -> usize {
        self.0 as usize
    }

    pub fn f(self, i: Arrow) -> Option<Letter> {
        (self.value() == i.0).then_some(Letter(self.0 + 1))
    }

    pub fn e(self, i: Arrow) -> Option<Letter> {
        (self.value() == i.0 + 1).then_some(Letter(self.0 - 1))
    }

    pub fn phi(self, i: Arrow) -> i64 {
        i64::from(self.value() == i.0)
    }

    pub fn eps(self, i: Arrow) -> i64 {
        i64::from(self.value() == i.0 + 1)
    }

    /// `<wt, α_i>` for this letter.
    fn pairing(self, i: Arrow) -> i64 {
        self.phi(i) - self.eps(i)
    }
}

/// An element of 𝔹^{⊗k}; leftmost letter is the first tensor factor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>")]
pub struct TensorWord {
    letters: Vec<u8>,
}

impl TensorWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        self.letters.iter().map(|&x| Letter(x))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.letters.iter().map(|&x| x as usize).collect()
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &TensorWord) -> TensorWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        TensorWord { letters }
    }

    /// Space-separated letters, as used for graph labels.
    pub fn label(&self) -> String {
        self.letters.iter().join(" ")
    }

    /// `(φ_i, ε_i)` of each suffix `x_p ⊗ ... ⊗ x_k`, index `p` from 0.
    fn suffix_strings(&self, i: Arrow) -> Vec<(i64, i64)> {
        let mut out = vec![(0, 0); self.letters.len()];
        let mut acc: Option<(i64, i64, i64)> = None; // (phi, eps, pairing of suffix weight)
        for (p, l) in self.letters().enumerate().rev() {
            let next = match acc {
                None => (l.phi(i), l.eps(i), l.pairing(i)),
                Some((phi_y, eps_y, pair_y)) => {
                    let phi = l.phi(i).max(phi_y + l.pairing(i));
                    let eps = eps_y.max(l.eps(i) - pair_y);
                    (phi, eps, pair_y + l.pairing(i))
                }
            };
            out[p] = (next.0, next.1);
            acc = Some(next);
        }
        out
    }

    /// Position of the factor the tensor rule sends `f_i` (or `e_i`) to.
    fn acting_position(&self, i: Arrow, lowering: bool) -> usize {
        let strings = self.suffix_strings(i);
        let k = self.letters.len();
        for p in 0..k - 1 {
            let x = Letter(self.letters[p]);
            let phi_rest = strings[p + 1].0;
            let eps_x = x.eps(i);
            let left = if lowering { phi_rest <= eps_x } else { phi_rest < eps_x };
            if left {
                return p;
            }
        }
        k - 1
    }

    fn apply(&self, i: Arrow, lowering: bool) -> Option<TensorWord> {
        let p = self.acting_position(i, lowering);
        let x = Letter(self.letters[p]);
        let moved = if lowering { x.f(i) } else { x.e(i) }?;
        let mut letters = self.letters.clone();
        letters[p] = moved.0;
        Some(TensorWord { letters })
    }
}

impl Debug for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters.iter().map(|x| format!("⟦{x}⟧")).join("⊗"))
    }
}

impl From<TensorWord> for Vec<usize> {
    fn from(w: TensorWord) -> Self {
        w.to_vec()
    }
}

/// The interface the axiom checker and component search work against.
pub trait Crystal {
    type Element: Clone + Eq + Hash + Ord + Debug;

    fn config(&self) -> CrystalConfig;
    /// Weight as a length-`N` integer vector.
    fn wt(&self, x: &Self::Element) -> Vec<i64>;
    fn e(&self, i: Arrow, x: &Self::Element) -> Option<Self::Element>;
    fn f(&self, i: Arrow, x: &Self::Element) -> Option<Self::Element>;
    fn eps(&self, i: Arrow, x: &Self::Element) -> i64;
    fn phi(&self, i: Arrow, x: &Self::Element) -> i64;
}

/// 𝔹^{⊗k} for every `k` at once.
#[derive(Clone, Copy, Debug)]
pub struct GlCrystal {
    cfg: CrystalConfig,
}

impl GlCrystal {
    pub fn new(cfg: CrystalConfig) -> Self {
        GlCrystal { cfg }
    }

    pub fn with_rank(n: usize) -> Result<Self> {
        Ok(GlCrystal { cfg: CrystalConfig::new(n)? })
    }
}

impl Crystal for GlCrystal {
    type Element = TensorWord;

    fn config(&self) -> CrystalConfig {
        self.cfg
    }

    fn wt(&self, x: &TensorWord) -> Vec<i64> {
        let mut w = vec![0; self.cfg.n];
        for l in x.letters() {
            w[l.value() - 1] += 1;
        }
        w
    }

    fn e(&self, i: Arrow, x: &TensorWord) -> Option<TensorWord> {
        x.apply(i, false)
    }

    fn f(&self, i: Arrow, x: &TensorWord) -> Option<TensorWord> {
        x.apply(i, true)
    }

    fn eps(&self, i: Arrow, x: &TensorWord) -> i64 {
        x.suffix_strings(i)[0].1
    }

    fn phi(&self, i: Arrow, x: &TensorWord) -> i64 {
        x.suffix_strings(i)[0].0
    }
}

/// `<w, α_i>` for `α_i = e_i - e_{i+1}`.
pub fn pairing(w: &[i64], i: Arrow) -> i64 {
    w[i.0 - 1] - w[i.0]
}

/// Row reading of a semistandard tableau: rows bottom to top, each left to
/// right, as a tensor word.
pub fn rr(t: &Tableau, cfg: CrystalConfig) -> Result<TensorWord> {
    if !t.is_ssyt() {
        return Err(Error::NotSemistandard);
    }
    cfg.word(&t.reading_word().0)
}

/// Closure of `{x}` under every `e_i` and `f_i`, sorted.
pub fn connected_component<C: Crystal>(crystal: &C, x: &C::Element) -> Vec<C::Element> {
    let cfg = crystal.config();
    let mut seen: HashSet<C::Element> = HashSet::from([x.clone()]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for i in cfg.arrows() {
            for z in [crystal.e(i, &y), crystal.f(i, &y)].into_iter().flatten() {
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// Elements killed by every raising operator.
pub fn highest_weight_elements<'a, C: Crystal>(
    crystal: &C,
    elements: impl IntoIterator<Item = &'a C::Element>,
) -> Vec<C::Element>
where
    C::Element: 'a,
{
    let cfg = crystal.config();
    elements
        .into_iter()
        .filter(|x| cfg.arrows().all(|i| crystal.e(i, x).is_none()))
        .cloned()
        .collect()
}

/// Decomposes `𝓑_μ ⊗ 𝓑_ν` by locating its highest-weight elements; returns
/// each highest weight with its multiplicity.
pub fn decompose_product(
    mu: &Partition,
    nu: &Partition,
    cfg: CrystalConfig,
) -> Result<BTreeMap<Partition, usize>> {
    for p in [mu, nu] {
        if p.length() > cfg.n() {
            return Err(Error::TooManyRows { partition: p.clone(), n: cfg.n() });
        }
    }
    let crystal = GlCrystal::new(cfg);
    let left: Vec<TensorWord> = enumerate_ssyt(mu, cfg.n()).iter().map(|t| rr(t, cfg)).try_collect()?;
    let right: Vec<TensorWord> = enumerate_ssyt(nu, cfg.n()).iter().map(|t| rr(t, cfg)).try_collect()?;
    let mut out = BTreeMap::new();
    for l in &left {
        for m in &right {
            let word = l.tensor(m);
            if cfg.arrows().all(|i| crystal.e(i, &word).is_none()) {
                let w = crystal.wt(&word);
                let parts: Vec<usize> = w.iter().map(|&c| c as usize).collect();
                let lambda = Partition::new(parts).map_err(|_| Error::WeightNotDominant(w))?;
                *out.entry(lambda).or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

/// Number of pairs `(L, M)` whose insertion tableau `L ← reading_word(M)` has
/// each shape.
pub fn insertion_fibers(mu: &Partition, nu: &Partition, n: usize) -> BTreeMap<Partition, usize> {
    let rights: Vec<_> = enumerate_ssyt(nu, n).iter().map(|m| m.reading_word()).collect();
    let mut out = BTreeMap::new();
    for l in enumerate_ssyt(mu, n) {
        for w in &rights {
            let (t, _) = insertion::row_insert_word(&l, w).expect("enumerated tableaux are semistandard");
            *out.entry(t.shape().clone()).or_insert(0) += 1;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomKind {
    /// `e_i(x) = y` without `f_i(y) = x`, or the converse.
    A1Inverse,
    /// Weight, ε or φ failed to shift as required along an edge.
    A1Increment,
    A2,
    Seminormal,
    /// An operator left the supplied set.
    NotClosed,
}

#[derive(Clone, Debug)]
pub struct Violation<E> {
    pub kind: AxiomKind,
    pub arrow: usize,
    pub element: E,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct AxiomReport<E> {
    pub checked: usize,
    pub violations: Vec<Violation<E>>,
}

impl<E> AxiomReport<E> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks A1, A2 and seminormality on every element of `elements`.
pub fn verify_crystal_axioms<C: Crystal>(crystal: &C, elements: &[C::Element]) -> AxiomReport<C::Element> {
    let cfg = crystal.config();
    let members: HashSet<&C::Element> = elements.iter().collect();
    // a string longer than the set means a cycle
    let bound = elements.len() + 1;
    let mut violations = Vec::new();
    let mut flag = |kind, i: Arrow, x: &C::Element, detail: String| {
        violations.push(Violation { kind, arrow: i.0, element: x.clone(), detail });
    };

    for x in elements {
        let wx = crystal.wt(x);
        for i in cfg.arrows() {
            let (eps_x, phi_x) = (crystal.eps(i, x), crystal.phi(i, x));

            if let Some(y) = crystal.e(i, x) {
                if !members.contains(&y) {
                    flag(AxiomKind::NotClosed, i, x, format!("e_{} leaves the set: {y:?}", i.0));
                }
                if crystal.f(i, &y).as_ref() != Some(x) {
                    flag(AxiomKind::A1Inverse, i, x, format!("e_{}(x) = {y:?} but f_{}(y) != x", i.0, i.0));
                }
                let wy = crystal.wt(&y);
                let shifted = wy.iter().zip(&wx).enumerate().all(|(k, (a, b))| {
                    let root = i64::from(k + 1 == i.0) - i64::from(k == i.0);
                    *a == *b + root
                });
                if !shifted || crystal.eps(i, &y) != eps_x - 1 || crystal.phi(i, &y) != phi_x + 1 {
                    flag(AxiomKind::A1Increment, i, x, format!("bad increments along e_{}", i.0));
                }
            }
            if let Some(y) = crystal.f(i, x) {
                if !members.contains(&y) {
                    flag(AxiomKind::NotClosed, i, x, format!("f_{} leaves the set: {y:?}", i.0));
                }
                if crystal.e(i, &y).as_ref() != Some(x) {
                    flag(AxiomKind::A1Inverse, i, x, format!("f_{}(x) = {y:?} but e_{}(y) != x", i.0, i.0));
                }
            }

            if phi_x != pairing(&wx, i) + eps_x {
                flag(
                    AxiomKind::A2,
                    i,
                    x,
                    format!("φ = {phi_x}, <wt, α> + ε = {}", pairing(&wx, i) + eps_x),
                );
            }

            let f_len = string_length(|y| crystal.f(i, y), x, bound);
            let e_len = string_length(|y| crystal.e(i, y), x, bound);
            if f_len != Some(phi_x) || e_len != Some(eps_x) {
                flag(
                    AxiomKind::Seminormal,
                    i,
                    x,
                    format!("φ = {phi_x}, ε = {eps_x}, strings {f_len:?} / {e_len:?}"),
                );
            }
        }
    }
    AxiomReport { checked: elements.len(), violations }
}

fn string_length<E: Clone>(step: impl Fn(&E) -> Option<E>, x: &E, bound: usize) -> Option<i64> {
    let mut cur = x.clone();
    let mut k: i64 = 0;
    while let Some(next) = step(&cur) {
        k += 1;
        if k as usize > bound {
            return None;
        }
        cur = next;
    }
    Some(k)
}

/// Graphviz rendering of a set of elements with its `f_i` edges.
pub fn to_dot<C: Crystal>(
    crystal: &C,
    elements: &[C::Element],
    label: impl Fn(&C::Element) -> String,
) -> String {
    let index: BTreeMap<&C::Element, usize> = elements.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let mut out = String::from("digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n");
    for (k, x) in elements.iter().enumerate() {
        let _ = writeln!(out, "  n{k} [label=\"{}\"];", label(x).replace('"', "\\\""));
    }
    for (k, x) in elements.iter().enumerate() {
        for i in crystal.config().arrows() {
            if let Some(target) = crystal.f(i, x).and_then(|y| index.get(&y).copied()) {
                let _ = writeln!(out, "  n{k} -> n{target} [label=\"{}\"];", i.0);
            }
        }
    }
    out.push_str("}\n");
    out
}

/// DOT graph of `rr(𝓑_λ)` with nodes labelled by tableaux.
pub fn shape_graph_dot(shape: &Partition, cfg: CrystalConfig) -> Result<String> {
    if shape.length() > cfg.n() {
        return Err(Error::TooManyRows { partition: shape.clone(), n: cfg.n() });
    }
    if shape.is_empty() {
        return Err(Error::EmptyWord);
    }
    let tableaux = enumerate_ssyt(shape, cfg.n());
    let words: Vec<TensorWord> = tableaux.iter().map(|t| rr(t, cfg)).try_collect()?;
    let by_word: BTreeMap<TensorWord, &Tableau> = words.iter().cloned().zip(&tableaux).collect();
    let mut elements = words;
    elements.sort();
    Ok(to_dot(&GlCrystal::new(cfg), &elements, |w| {
        by_word.get(w).map_or_else(|| w.label(), |t| t.to_string())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::tableaux::lr_coefficient;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cfg(n: usize) -> CrystalConfig {
        CrystalConfig::new(n).unwrap()
    }

    fn w(n: usize, letters: &[usize]) -> TensorWord {
        cfg(n).word(letters).unwrap()
    }

    #[test]
    fn weights() {
        let b = GlCrystal::with_rank(3).unwrap();
        assert_eq!(b.wt(&w(3, &[2])), vec![0, 1, 0]);
        let b2 = GlCrystal::with_rank(2).unwrap();
        assert_eq!(b2.wt(&w(2, &[1, 1])), vec![2, 0]);
        assert!(matches!(cfg(2).word(&[]), Err(Error::EmptyWord)));
        assert!(cfg(2).word(&[3]).is_err());
    }

    #[test]
    fn operator_examples() {
        let b = GlCrystal::with_rank(2).unwrap();
        let one = cfg(2).arrow(1).unwrap();
        assert_eq!(b.f(one, &w(2, &[1])), Some(w(2, &[2])));
        assert_eq!(b.f(one, &w(2, &[2])), None);
        assert_eq!(b.f(one, &w(2, &[1, 1])), Some(w(2, &[1, 2])));
        assert_eq!(b.e(one, &w(2, &[1, 2])), Some(w(2, &[1, 1])));
        assert!(cfg(2).arrow(2).is_err());
        assert!(cfg(2).arrow(0).is_err());
        assert!(cfg(1).arrows().next().is_none());
    }

    #[test]
    fn letter_overloads_agree_with_words() {
        let c = cfg(4);
        for i in c.arrows() {
            for v in 1..=4 {
                let l = c.letter(v).unwrap();
                let b = GlCrystal::new(c);
                let x = w(4, &[v]);
                assert_eq!(l.f(i).map(|y| y.value()), b.f(i, &x).map(|y| y.to_vec()[0]));
                assert_eq!(l.e(i).map(|y| y.value()), b.e(i, &x).map(|y| y.to_vec()[0]));
                assert_eq!(l.phi(i), b.phi(i, &x));
                assert_eq!(l.eps(i), b.eps(i, &x));
            }
        }
    }

    #[test]
    fn string_examples() {
        let b = GlCrystal::with_rank(2).unwrap();
        let one = cfg(2).arrow(1).unwrap();
        assert_eq!((b.phi(one, &w(2, &[1])), b.eps(one, &w(2, &[1]))), (1, 0));
        assert_eq!(b.phi(one, &w(2, &[1, 1])), 2);
        let b4 = GlCrystal::with_rank(4).unwrap();
        let three = cfg(4).arrow(3).unwrap();
        let x = w(4, &[1, 2, 2, 1]);
        assert_eq!((b4.eps(three, &x), b4.phi(three, &x)), (0, 0));
    }

    /// Binary tensor rule applied literally to `x ⊗ y` with `x` a prefix of
    /// arbitrary length, used to check that the bracketing does not matter.
    fn f_left_combed(i: Arrow, word: &[usize], n: usize) -> Option<Vec<usize>> {
        let b = GlCrystal::with_rank(n).unwrap();
        if word.len() == 1 {
            return b.f(i, &w(n, word)).map(|t| t.to_vec());
        }
        let (x, y) = word.split_at(word.len() - 1);
        let (xw, yw) = (w(n, x), w(n, y));
        if b.phi(i, &yw) <= b.eps(i, &xw) {
            f_left_combed(i, x, n).map(|mut v| {
                v.extend_from_slice(y);
                v
            })
        } else {
            b.f(i, &yw).map(|t| {
                let mut v = x.to_vec();
                v.extend(t.to_vec());
                v
            })
        }
    }

    #[test]
    fn bracketing_does_not_matter() {
        let c = cfg(3);
        let b = GlCrystal::new(c);
        for x in c.tensor_power(4) {
            for i in c.arrows() {
                assert_eq!(b.f(i, &x).map(|t| t.to_vec()), f_left_combed(i, &x.to_vec(), 3), "{x:?}");
            }
        }
    }

    #[test]
    fn rr_examples() {
        let t = Tableau::new(vec![vec![1, 1, 2], vec![2, 3], vec![4]]).unwrap();
        assert_eq!(rr(&t, cfg(4)).unwrap(), w(4, &[4, 2, 3, 1, 1, 2]));
        assert_eq!(rr(&Tableau::new(vec![vec![1]]).unwrap(), cfg(1)).unwrap(), w(1, &[1]));
        assert_eq!(rr(&Tableau::column(vec![1, 2]).unwrap(), cfg(2)).unwrap(), w(2, &[2, 1]));
        assert!(matches!(
            rr(&Tableau::new(vec![vec![2, 1]]).unwrap(), cfg(2)),
            Err(Error::NotSemistandard)
        ));
    }

    #[test]
    fn component_examples() {
        let b3 = GlCrystal::with_rank(3).unwrap();
        assert_eq!(
            connected_component(&b3, &w(3, &[1])),
            vec![w(3, &[1]), w(3, &[2]), w(3, &[3])]
        );
        let b2 = GlCrystal::with_rank(2).unwrap();
        assert_eq!(
            connected_component(&b2, &w(2, &[1, 1])),
            vec![w(2, &[1, 1]), w(2, &[1, 2]), w(2, &[2, 2])]
        );
        assert_eq!(connected_component(&b2, &w(2, &[2, 1])), vec![w(2, &[2, 1])]);
    }

    #[test]
    fn highest_weight_examples() {
        let c = cfg(2);
        let b = GlCrystal::new(c);
        let all = c.tensor_power(2);
        assert_eq!(highest_weight_elements(&b, &all), vec![w(2, &[1, 1]), w(2, &[2, 1])]);
        let single = [w(5, &[1])];
        assert_eq!(highest_weight_elements(&GlCrystal::with_rank(5).unwrap(), &single), single.to_vec());
    }

    #[test]
    fn shape_components_have_one_highest_weight() {
        let c = cfg(3);
        let b = GlCrystal::new(c);
        for size in 1..=4 {
            for shape in partitions_of(size).into_iter().filter(|s| s.length() <= 3) {
                let words: Vec<TensorWord> =
                    enumerate_ssyt(&shape, 3).iter().map(|t| rr(t, c).unwrap()).collect();
                let hw = highest_weight_elements(&b, &words);
                assert_eq!(hw.len(), 1, "{shape}");
                let weight: Vec<usize> = b.wt(&hw[0]).iter().map(|&x| x as usize).collect();
                assert_eq!(Partition::new(weight).unwrap(), shape);
                let mut sorted = words.clone();
                sorted.sort();
                assert_eq!(connected_component(&b, &hw[0]), sorted);
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let one = p(&[1]);
        assert_eq!(
            decompose_product(&one, &one, cfg(2)).unwrap(),
            BTreeMap::from([(p(&[1, 1]), 1), (p(&[2]), 1)])
        );
        assert_eq!(decompose_product(&one, &one, cfg(1)).unwrap(), BTreeMap::from([(p(&[2]), 1)]));
        let d = decompose_product(&p(&[2, 1]), &p(&[2, 1]), cfg(4)).unwrap();
        assert_eq!(d[&p(&[3, 2, 1])], 2);
        assert!(matches!(
            decompose_product(&p(&[1, 1]), &one, cfg(1)),
            Err(Error::TooManyRows { .. })
        ));
    }

    #[test]
    fn decomposition_matches_lr_and_component_sizes() {
        let c = cfg(3);
        let b = GlCrystal::new(c);
        let shapes: Vec<Partition> =
            (1..=3).flat_map(partitions_of).filter(|s| s.length() <= 3).collect();
        for mu in &shapes {
            for nu in &shapes {
                let d = decompose_product(mu, nu, c).unwrap();
                for lambda in partitions_of(mu.size() + nu.size()).iter().filter(|l| l.length() <= 3) {
                    assert_eq!(d.get(lambda).copied().unwrap_or(0), lr_coefficient(mu, nu, lambda));
                }
            }
        }
        // component of a highest-weight word has |𝓑_λ| elements
        for x in c.tensor_power(4) {
            if c.arrows().all(|i| b.e(i, &x).is_none()) {
                let weight: Vec<usize> = b.wt(&x).iter().map(|&v| v as usize).collect();
                let lambda = Partition::new(weight).unwrap();
                assert_eq!(connected_component(&b, &x).len(), enumerate_ssyt(&lambda, 3).len());
            }
        }
    }

    #[test]
    fn axioms_hold_on_small_powers() {
        for n in 1..=3 {
            let c = cfg(n);
            for k in 1..=3 {
                let report = verify_crystal_axioms(&GlCrystal::new(c), &c.tensor_power(k));
                assert!(report.passed(), "N={n} k={k}: {:?}", report.violations.first());
            }
        }
        let c = cfg(2);
        assert!(verify_crystal_axioms(&GlCrystal::new(c), &c.tensor_power(1)).passed());
    }

    /// 𝔹 with `f_1(⟦1⟧)` rewired to `⟦1⟧`.
    struct Faulty(GlCrystal);

    impl Crystal for Faulty {
        type Element = TensorWord;
        fn config(&self) -> CrystalConfig {
            self.0.config()
        }
        fn wt(&self, x: &TensorWord) -> Vec<i64> {
            self.0.wt(x)
        }
        fn e(&self, i: Arrow, x: &TensorWord) -> Option<TensorWord> {
            self.0.e(i, x)
        }
        fn f(&self, i: Arrow, x: &TensorWord) -> Option<TensorWord> {
            if i.index() == 1 && x.to_vec() == [1] {
                return Some(x.clone());
            }
            self.0.f(i, x)
        }
        fn eps(&self, i: Arrow, x: &TensorWord) -> i64 {
            self.0.eps(i, x)
        }
        fn phi(&self, i: Arrow, x: &TensorWord) -> i64 {
            self.0.phi(i, x)
        }
    }

    #[test]
    fn fault_injection_is_reported() {
        let c = cfg(2);
        let report = verify_crystal_axioms(&Faulty(GlCrystal::new(c)), &c.tensor_power(1));
        assert!(report.violations.iter().any(|v| v.kind == AxiomKind::A1Inverse));
        assert!(report.violations.iter().any(|v| v.kind == AxiomKind::Seminormal));
    }

    #[test]
    fn not_closed_is_reported() {
        let c = cfg(2);
        let report = verify_crystal_axioms(&GlCrystal::new(c), &[w(2, &[1])]);
        assert!(report.violations.iter().any(|v| v.kind == AxiomKind::NotClosed));
    }

    #[test]
    fn dot_export() {
        let dot = shape_graph_dot(&p(&[1]), cfg(2)).unwrap();
        assert_eq!(
            dot,
            "digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n  n0 [label=\"1\"];\n  \
             n1 [label=\"2\"];\n  n0 -> n1 [label=\"1\"];\n}\n"
        );
        let dot = shape_graph_dot(&p(&[2, 1]), cfg(3)).unwrap();
        assert_eq!(dot.matches("label=\"").count(), 8 + 8);
        assert!(dot.contains("\"1 1 / 2\""));
    }
}
