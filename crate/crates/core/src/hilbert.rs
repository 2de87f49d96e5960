//! Rational Hilbert series and staircase-count oracles.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, MonomialIdeal};
use crate::poly::{Monomial, WeightVector};

/// `numerator / Π (1 − t_var^exp)` with integer numerator coefficients in
/// `nvars` series variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    nvars: usize,
    numerator: BTreeMap<Vec<u64>, i64>,
    denominator: Vec<(usize, u64)>,
}

impl HilbertSeries {
    pub fn new(nvars: usize, numerator: impl IntoIterator<Item = (Vec<u64>, i64)>, denominator: Vec<(usize, u64)>) -> Result<Self> {
        let mut num: BTreeMap<Vec<u64>, i64> = BTreeMap::new();
        for (e, c) in numerator {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: e.len() });
            }
            *num.entry(e).or_insert(0) += c;
        }
        num.retain(|_, c| *c != 0);
        for &(v, w) in &denominator {
            if v >= nvars || w == 0 {
                return Err(Error::OutOfRange(format!("denominator factor ({v}, {w})")));
            }
        }
        Ok(HilbertSeries { nvars, numerator: num, denominator })
    }

    /// Univariate series `Σ t^{a} − Σ t^{b}` over `Π (1 − t^{w})`.
    pub fn univariate(plus: &[u64], minus: &[u64], denominator: &[u64]) -> Self {
        let num = plus.iter().map(|&s| (vec![s], 1)).chain(minus.iter().map(|&s| (vec![s], -1)));
        HilbertSeries::new(1, num, denominator.iter().map(|&w| (0, w)).collect()).expect("valid univariate data")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn numerator(&self) -> &BTreeMap<Vec<u64>, i64> {
        &self.numerator
    }

    pub fn denominator(&self) -> &[(usize, u64)] {
        &self.denominator
    }

    /// Dense univariate numerator coefficients, index = degree.
    pub fn numerator_coefficients(&self) -> Vec<i64> {
        let top = self.numerator.keys().map(|e| e[0]).max().unwrap_or(0);
        let mut out = vec![0; top as usize + 1];
        for (e, c) in &self.numerator {
            out[e[0] as usize] += c;
        }
        out
    }

    /// Power-series coefficients of all exponent vectors of total degree `≤ n`.
    pub fn expand_multi(&self, n: u64) -> BTreeMap<Vec<u64>, i64> {
        let mut cur: BTreeMap<Vec<u64>, i64> =
            self.numerator.iter().filter(|(e, _)| e.iter().sum::<u64>() <= n).map(|(e, c)| (e.clone(), *c)).collect();
        for &(v, w) in &self.denominator {
            // multiply by 1 / (1 − t_v^w): processing keys in increasing t_v
            // order lets each coefficient absorb the already-updated one below it
            let mut keys: Vec<Vec<u64>> = Vec::new();
            for e in cur.keys() {
                let mut f = e.clone();
                while f.iter().sum::<u64>() <= n {
                    keys.push(f.clone());
                    f[v] += w;
                }
            }
            keys.sort();
            keys.dedup();
            keys.sort_by_key(|e| e[v]);
            let mut next: BTreeMap<Vec<u64>, i64> = BTreeMap::new();
            for e in keys {
                let own = cur.get(&e).copied().unwrap_or(0);
                let below = if e[v] >= w {
                    let mut f = e.clone();
                    f[v] -= w;
                    next.get(&f).copied().unwrap_or(0)
                } else {
                    0
                };
                next.insert(e, own + below);
            }
            next.retain(|_, c| *c != 0);
            cur = next;
        }
        cur
    }

    /// Univariate expansion `h(0..=n)`.
    pub fn expand(&self, n: u64) -> Result<Vec<i64>> {
        if self.nvars != 1 {
            return Err(Error::DimensionMismatch { expected: 1, found: self.nvars });
        }
        let mut out = vec![0; n as usize + 1];
        for (e, c) in self.expand_multi(n) {
            out[e[0] as usize] = c;
        }
        Ok(out)
    }

    /// Collapses a multigraded series by `t_i ↦ t^{g_i}` (with all
    /// denominator factors then univariate).
    pub fn collapse(&self, g: &[u64]) -> Result<HilbertSeries> {
        if g.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: g.len() });
        }
        let num = self.numerator.iter().map(|(e, &c)| (vec![e.iter().zip(g).map(|(a, b)| a * b).sum()], c));
        HilbertSeries::new(1, num, self.denominator.iter().map(|&(v, w)| (0, w * g[v])).collect())
    }
}

impl fmt::Display for HilbertSeries {
    /// e.g. `(1 + t^3 - t^8)/((1 - t^2)^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |i: usize| if self.nvars == 1 { "t".to_string() } else { format!("t{}", i + 1) };
        let mono = |e: &[u64]| {
            let parts: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { var(i) } else { format!("{}^{}", var(i), x) })
                .collect();
            parts.join("*")
        };
        let mut num = String::new();
        // ascending total degree, then lexicographic
        let mut terms: Vec<(&Vec<u64>, &i64)> = self.numerator.iter().collect();
        terms.sort_by_key(|(e, _)| (e.iter().sum::<u64>(), (*e).clone()));
        for (k, (e, &c)) in terms.iter().enumerate() {
            let m = mono(e);
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    num.push('-');
                }
            } else {
                num.push_str(&format!(" {sign} "));
            }
            let a = c.unsigned_abs();
            match (a, m.is_empty()) {
                (_, true) => num.push_str(&a.to_string()),
                (1, false) => num.push_str(&m),
                (_, false) => num.push_str(&format!("{a}*{m}")),
            }
        }
        if num.is_empty() {
            num.push('0');
        }
        let mut groups: BTreeMap<(usize, u64), usize> = BTreeMap::new();
        for &fac in &self.denominator {
            *groups.entry(fac).or_insert(0) += 1;
        }
        let den: Vec<String> = groups
            .iter()
            .map(|(&(v, w), &k)| {
                let base = if w == 1 { format!("(1 - {})", var(v)) } else { format!("(1 - {}^{})", var(v), w) };
                if k == 1 {
                    base
                } else {
                    format!("{base}^{k}")
                }
            })
            .collect();
        if den.is_empty() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", den.join("*"))
        }
    }
}

/// Number of monomials of each ω-degree `0..=n` outside `mi`.
pub fn staircase_counts(mi: &MonomialIdeal, w: &WeightVector, n: u64) -> Result<Vec<u64>> {
    let nv = mi.nvars();
    if w.len() != nv {
        return Err(Error::DimensionMismatch { expected: nv, found: w.len() });
    }
    let mut counts = vec![0u64; n as usize + 1];
    if mi.is_unit() {
        return Ok(counts);
    }
    let mut cur = vec![0u32; nv];
    fn rec(k: usize, deg: u64, n: u64, w: &WeightVector, mi: &MonomialIdeal, cur: &mut Vec<u32>, counts: &mut [u64]) {
        if k == cur.len() {
            counts[deg as usize] += 1;
            return;
        }
        let mut d = deg;
        loop {
            rec(k + 1, d, n, w, mi, cur, counts);
            d += w.get(k);
            if d > n {
                break;
            }
            cur[k] += 1;
            if mi.contains(&Monomial::new(cur.clone())) {
                break;
            }
        }
        cur[k] = 0;
    }
    rec(0, 0, n, w, mi, &mut cur, &mut counts);
    Ok(counts)
}

/// `H_{R/I}(s)` for `s = 0..=n` by counting standard monomials of `in(I)`.
pub fn hilbert_function_oracle(g: &GroebnerBasis, w: &WeightVector, n: u64) -> Result<Vec<u64>> {
    staircase_counts(&g.initial_ideal(), w, n)
}

/// Hilbert function of the polynomial ring in variables of weights `w`.
pub fn free_hilbert_function(w: &[u64], n: u64) -> Vec<u64> {
    let mut h = vec![0u64; n as usize + 1];
    h[0] = 1;
    for &wi in w {
        for s in wi as usize..=n as usize {
            h[s] += h[s - wi as usize];
        }
    }
    h
}
