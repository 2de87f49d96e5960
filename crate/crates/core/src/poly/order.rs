use std::cmp::Ordering;

use super::monomial::{Monomial, WeightVector};
use crate::error::{Error, Result};

/// A global monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Compare ω-degrees, then the last nonzero entry of `α − β`: negative
    /// means `α` is larger.
    WeightedDegRevLex(WeightVector),
    /// Elimination order: the first `split` variables under `first`, ties
    /// broken by the remaining variables under `second`.
    Block { split: usize, first: Box<MonomialOrder>, second: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn degrevlex(n: usize) -> Self {
        MonomialOrder::WeightedDegRevLex(WeightVector::standard(n))
    }

    pub fn weighted(w: WeightVector) -> Self {
        MonomialOrder::WeightedDegRevLex(w)
    }

    pub fn block(first: MonomialOrder, second: MonomialOrder) -> Self {
        MonomialOrder::Block { split: first.nvars(), first: Box::new(first), second: Box::new(second) }
    }

    pub fn nvars(&self) -> usize {
        match self {
            MonomialOrder::WeightedDegRevLex(w) => w.len(),
            MonomialOrder::Block { split, second, .. } => split + second.nvars(),
        }
    }

    /// Weights of the order when it is a plain weighted degrevlex.
    pub fn weights(&self) -> Option<&WeightVector> {
        match self {
            MonomialOrder::WeightedDegRevLex(w) => Some(w),
            MonomialOrder::Block { .. } => None,
        }
    }

    /// Compares two exponent vectors of length `self.nvars()`.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_slices(a.exps(), b.exps())
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::WeightedDegRevLex(w) => wdrl(a, b, w.as_slice()),
            MonomialOrder::Block { split, first, second } => first
                .cmp_slices(&a[..*split], &b[..*split])
                .then_with(|| second.cmp_slices(&a[*split..], &b[*split..])),
        }
    }
}

fn wdrl(a: &[u32], b: &[u32], w: &[u64]) -> Ordering {
    // u128 cannot overflow for u32 exponents and u64 weights at any sane n.
    let deg = |v: &[u32]| v.iter().zip(w).map(|(&e, &wi)| e as u128 * wi as u128).sum::<u128>();
    deg(a).cmp(&deg(b)).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // last nonzero entry of a - b negative means a is bigger
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// `>_ω` on raw exponent vectors.
pub fn cmp_weighted_degrevlex(a: &Monomial, b: &Monomial, w: &WeightVector) -> Result<Ordering> {
    if a.nvars() != w.len() {
        return Err(Error::DimensionMismatch { expected: w.len(), found: a.nvars() });
    }
    if b.nvars() != w.len() {
        return Err(Error::DimensionMismatch { expected: w.len(), found: b.nvars() });
    }
    Ok(wdrl(a.exps(), b.exps(), w.as_slice()))
}
