use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a monomial in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `x_i^e` with `i` zero-based.
    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exps(self) -> Vec<u32> {
        self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// `Σ ω_i α_i`, failing on overflow.
    pub fn weighted_degree(&self, w: &WeightVector) -> Result<u64> {
        if w.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: w.len() });
        }
        self.0.iter().zip(w.as_slice()).try_fold(0u64, |acc, (&e, &wi)| {
            (e as u64).checked_mul(wi).and_then(|t| acc.checked_add(t)).ok_or(Error::DegreeOverflow)
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(&a, &b)| a.checked_sub(b)).collect::<Option<Vec<_>>>().map(Monomial)
    }

    /// Set the exponents of the given variables to zero.
    pub fn drop_vars(&self, vars: &[usize]) -> Monomial {
        let mut v = self.0.clone();
        for &i in vars {
            v[i] = 0;
        }
        Monomial(v)
    }

    pub fn involves_any(&self, vars: &[usize]) -> bool {
        vars.iter().any(|&i| self.0[i] > 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Positive integer weights `ω_1..ω_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(w: Vec<u64>) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::InvalidWeights("empty weight vector".into()));
        }
        if let Some(i) = w.iter().position(|&x| x == 0) {
            return Err(Error::InvalidWeights(format!("weight {} is zero", i + 1)));
        }
        Ok(WeightVector(w))
    }

    pub fn standard(n: usize) -> Self {
        WeightVector(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }

    /// The common value when all weights agree.
    pub fn constant_value(&self) -> Option<u64> {
        let w0 = self.0[0];
        self.0.iter().all(|&w| w == w0).then_some(w0)
    }
}
