//! Truncated sums by a transfer recursion over subdiagrams.
//!
//! The cells of an SSYT holding entries `<= v` form a subdiagram `μ_v`, and
//! `μ_v / μ_{v-1}` is a horizontal strip. Summing over chains of strips, one
//! letter at a time, costs a number of operations linear in `N` for a fixed
//! shape, which makes large truncation levels practical.

use crate::partitions::{subpartitions, Cell, Partition};
use crate::zeta::scalar::ZetaScalar;

/// One transfer step into a state: the source state and the strip cells
/// (as indices into the exponent table).
#[derive(Clone, Debug)]
struct Edge {
    from: usize,
    cells: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Transfer<S: ZetaScalar> {
    exponents: Vec<S::Exponent>,
    /// Incoming edges per state, states sorted by size.
    incoming: Vec<Vec<Edge>>,
    state: Vec<S>,
    level: usize,
}

impl<S: ZetaScalar> Transfer<S> {
    /// `exponent(cell)` gives the exponent attached to each cell of `shape`.
    pub fn new(shape: &Partition, mut exponent: impl FnMut(Cell) -> S::Exponent) -> Self {
        let cells = shape.cells();
        let exponents: Vec<S::Exponent> = cells.iter().map(|&c| exponent(c)).collect();
        let index_of = |c: Cell| cells.iter().position(|&d| d == c).expect("cell of shape");

        let states = subpartitions(shape);
        let incoming = states
            .iter()
            .map(|nu| {
                states
                    .iter()
                    .enumerate()
                    .filter(|(_, mu)| *mu != nu && nu.is_horizontal_strip_over(mu))
                    .map(|(from, mu)| Edge {
                        from,
                        cells: nu.cells().into_iter().filter(|c| !mu.contains_cell(*c)).map(index_of).collect(),
                    })
                    .collect()
            })
            .collect();
        let mut state = vec![S::zero(); states.len()];
        state[0] = S::one();
        Transfer { exponents, incoming, state, level: 0 }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// The truncated sum at the current level.
    pub fn value(&self) -> S {
        self.state.last().cloned().unwrap_or_else(S::one)
    }

    /// Admits the next letter.
    pub fn step(&mut self) {
        self.level += 1;
        let v = self.level;
        // every source is strictly smaller than its target, so updating the
        // largest states first only reads values from the previous level
        for target in (0..self.state.len()).rev() {
            let mut acc = self.state[target].clone();
            for edge in &self.incoming[target] {
                let w = S::reciprocal_monomial(edge.cells.iter().map(|&c| (v, &self.exponents[c])));
                acc = acc + self.state[edge.from].clone() * w;
            }
            self.state[target] = acc;
        }
    }

    pub fn advance_to(&mut self, n: usize) {
        while self.level < n {
            self.step();
        }
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::tableaux::enumerate_ssyt;
    use crate::zeta::scalar::ZetaScalar;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn brute<S: ZetaScalar>(shape: &Partition, n: usize, exp: impl Fn(Cell) -> S::Exponent) -> S {
        let cells = shape.cells();
        let exps: Vec<S::Exponent> = cells.iter().map(|&c| exp(c)).collect();
        enumerate_ssyt(shape, n)
            .iter()
            .map(|t| S::reciprocal_monomial(cells.iter().zip(&exps).map(|(&c, e)| (t.get(c).unwrap(), e))))
            .fold(S::zero(), |a, b| a + b)
    }

    #[test]
    fn exact_agreement_with_enumeration() {
        let exp = |c: Cell| (c.row * 2 + c.col) as u32 % 4 + 1;
        for shape in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])] {
            let mut tr = Transfer::<BigRational>::new(&shape, exp);
            for n in 1..=4 {
                tr.advance_to(n);
                assert_eq!(tr.value(), brute::<BigRational>(&shape, n, exp), "{shape} N={n}");
            }
        }
    }

    #[test]
    fn float_agreement_with_enumeration() {
        let exp = |c: Cell| 1.0 + 0.25 * (c.row + c.col) as f64;
        let shape = p(&[3, 2]);
        let mut tr = Transfer::<f64>::new(&shape, exp);
        tr.advance_to(5);
        let direct = brute::<f64>(&shape, 5, exp);
        assert!((tr.value() - direct).abs() < 1e-12 * direct);
    }

    #[test]
    fn empty_shape_is_one() {
        let mut tr = Transfer::<f64>::new(&Partition::empty(), |_| 2.0);
        tr.advance_to(10);
        assert_eq!(tr.value(), 1.0);
    }

    #[test]
    fn too_long_shapes_vanish_until_enough_letters() {
        let mut tr = Transfer::<BigRational>::new(&p(&[1, 1, 1]), |_| 1);
        tr.advance_to(2);
        assert_eq!(tr.value(), BigRational::from_count(0));
        tr.advance_to(3);
        assert_eq!(tr.value(), BigRational::new(1.into(), 6.into()));
    }
}
