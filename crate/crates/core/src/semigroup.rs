//! Simplicial affine semigroups `𝒮 = ℕ{a_1, …, a_n} ⊂ ℕ^d` whose last `d`
//! generators are `ω_{n−d+i} e_i`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::ideal::ToricData;

pub type Vector = Vec<u64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialSemigroup {
    d: usize,
    gens: Vec<Vector>,
}

impl SimplicialSemigroup {
    pub fn new(gens: Vec<Vector>) -> Result<Self> {
        let Some(first) = gens.first() else {
            return Err(Error::InvalidSemigroup("no generators".into()));
        };
        let d = first.len();
        if d == 0 || gens.len() < d {
            return Err(Error::InvalidSemigroup(format!("{} generators cannot contain {} axis vectors", gens.len(), d)));
        }
        for (i, g) in gens.iter().enumerate() {
            if g.len() != d {
                return Err(Error::DimensionMismatch { expected: d, found: g.len() });
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::InvalidSemigroup(format!("generator {} is zero", i + 1)));
            }
        }
        let n = gens.len();
        for i in 0..d {
            let a = &gens[n - d + i];
            if a.iter().enumerate().any(|(j, &x)| (j == i) != (x > 0)) {
                return Err(Error::InvalidSemigroup(format!(
                    "generator {} must be a positive multiple of e{}",
                    n - d + i + 1,
                    i + 1
                )));
            }
        }
        Ok(SimplicialSemigroup { d, gens })
    }

    pub fn from_toric(t: &ToricData) -> Result<Self> {
        SimplicialSemigroup::new(t.rows().to_vec())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Vector] {
        &self.gens
    }

    /// `a_1, …, a_{n−d}`.
    pub fn non_axis(&self) -> &[Vector] {
        &self.gens[..self.gens.len() - self.d]
    }

    /// `ω_{n−d+1}, …, ω_n`.
    pub fn axis_weights(&self) -> Vec<u64> {
        (0..self.d).map(|i| self.gens[self.gens.len() - self.d + i][i]).collect()
    }

    fn residue(&self, s: &[u64]) -> Vector {
        s.iter().zip(self.axis_weights()).map(|(&x, w)| x % w).collect()
    }

    /// Membership with a witness `(coefficients of a_1..a_n)` when `s ∈ 𝒮`.
    pub fn membership(&self, s: &[i64]) -> Result<Option<Vec<u64>>> {
        if s.len() != self.d {
            return Err(Error::DimensionMismatch { expected: self.d, found: s.len() });
        }
        if s.iter().any(|&x| x < 0) {
            return Ok(None);
        }
        let s: Vector = s.iter().map(|&x| x as u64).collect();
        let mut memo = HashMap::new();
        if !self.member_rec(&s, &mut memo) {
            return Ok(None);
        }
        // follow the memoized choices
        let n = self.n();
        let w = self.axis_weights();
        let mut coeffs = vec![0u64; n];
        let mut cur = s;
        loop {
            if cur.iter().zip(&w).all(|(x, w)| x % w == 0) {
                for i in 0..self.d {
                    coeffs[n - self.d + i] = cur[i] / w[i];
                }
                break;
            }
            let j = self
                .non_axis()
                .iter()
                .position(|a| le(a, &cur) && memo.get(&sub(&cur, a)).copied() == Some(true))
                .expect("memo records a successful branch");
            coeffs[j] += 1;
            cur = sub(&cur, &self.gens[j]);
        }
        Ok(Some(coeffs))
    }

    pub fn contains(&self, s: &[u64]) -> bool {
        let mut memo = HashMap::new();
        s.len() == self.d && self.member_rec(s, &mut memo)
    }

    fn member_rec(&self, s: &[u64], memo: &mut HashMap<Vector, bool>) -> bool {
        if let Some(&b) = memo.get(s) {
            return b;
        }
        let w = self.axis_weights();
        let ok = s.iter().zip(&w).all(|(x, w)| x % w == 0)
            || self.non_axis().iter().any(|a| le(a, s) && self.member_rec(&sub(s, a), memo));
        memo.insert(s.to_vec(), ok);
        ok
    }

    /// `𝒮_0 = {s ∈ 𝒮 : s − ω_i e_i ∉ 𝒮 for all i}`, lexicographically sorted.
    pub fn compute_s0(&self) -> Vec<Vector> {
        // Every element of 𝒮_0 is a sum of non-axis generators, and if s ∉ 𝒮_0
        // then no s + a_j is in 𝒮_0, so only 𝒮_0 elements get expanded.
        let mut memo = HashMap::new();
        let w = self.axis_weights();
        let mut heap = BinaryHeap::new();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        heap.push(Reverse((0u64, vec![0u64; self.d])));
        seen.insert(vec![0u64; self.d]);
        while let Some(Reverse((_, s))) = heap.pop() {
            let reducible = (0..self.d).any(|i| {
                s[i] >= w[i] && {
                    let mut t = s.clone();
                    t[i] -= w[i];
                    self.member_rec(&t, &mut memo)
                }
            });
            if reducible {
                continue;
            }
            for a in self.non_axis() {
                let t = add(&s, a);
                if seen.insert(t.clone()) {
                    heap.push(Reverse((t.iter().sum(), t)));
                }
            }
            out.push(s);
        }
        out.sort();
        out
    }

    /// `[ℤ^d : ℤ𝒮]` via a Hermite normal form determinant.
    pub fn lattice_index(&self) -> u128 {
        lattice_determinant(&self.gens, self.d)
    }

    /// `D = Π ω_{n−d+i} / [ℤ^d : ℤ𝒮]`.
    pub fn lattice_index_d(&self) -> u64 {
        let prod: u128 = self.axis_weights().iter().map(|&w| w as u128).product();
        (prod / self.lattice_index()) as u64
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.compute_s0().len() as u64 == self.lattice_index_d()
    }
}

fn le(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn sub(a: &[u64], b: &[u64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[u64], b: &[u64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Absolute determinant of the rank-`d` lattice spanned by `rows`.
pub fn lattice_determinant(rows: &[Vector], d: usize) -> u128 {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut det: i128 = 1;
    let mut top = 0;
    for col in 0..d {
        // Euclid on column `col` among rows top.. until one nonzero remains
        loop {
            let mut pivot: Option<usize> = None;
            for r in top..m.len() {
                if m[r][col] != 0 && pivot.is_none_or(|p| m[r][col].abs() < m[p][col].abs()) {
                    pivot = Some(r);
                }
            }
            let Some(p) = pivot else {
                return 0;
            };
            m.swap(top, p);
            let mut done = true;
            for r in top + 1..m.len() {
                if m[r][col] != 0 {
                    let q = m[r][col] / m[top][col];
                    for c in 0..d {
                        m[r][c] -= q * m[top][c];
                    }
                    if m[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        det *= m[top][col];
        top += 1;
    }
    det.unsigned_abs()
}

/// Fast membership once `𝒮_0` is known: `s ∈ 𝒮` iff some `b ∈ 𝒮_0` satisfies
/// `b ≤ s` and `b ≡ s` modulo the axis weights.
#[derive(Debug, Clone)]
pub struct S0Index {
    weights: Vec<u64>,
    by_class: HashMap<Vector, Vec<Vector>>,
}

impl S0Index {
    pub fn new(s: &SimplicialSemigroup, s0: &[Vector]) -> Self {
        S0Index::from_parts(s.axis_weights(), s0)
    }

    pub fn from_parts(weights: Vec<u64>, s0: &[Vector]) -> Self {
        let mut by_class: HashMap<Vector, Vec<Vector>> = HashMap::new();
        for b in s0 {
            let key = b.iter().zip(&weights).map(|(x, w)| x % w).collect();
            by_class.entry(key).or_default().push(b.clone());
        }
        S0Index { weights, by_class }
    }

    pub fn contains(&self, s: &[u64]) -> bool {
        let key: Vector = s.iter().zip(&self.weights).map(|(x, w)| x % w).collect();
        self.by_class.get(&key).is_some_and(|bs| bs.iter().any(|b| le(b, s)))
    }

    pub fn contains_signed(&self, s: &[i64]) -> bool {
        s.iter().all(|&x| x >= 0) && self.contains(&s.iter().map(|&x| x as u64).collect::<Vec<_>>())
    }
}

/// One column of ψ1 in the multigraded setting: `t^{left_factor} e_left −
/// t^{right_factor} e_right`, both of degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyColumn {
    pub degree: Vector,
    pub left: Vector,
    pub left_factor: Vec<u64>,
    pub right: Vector,
    pub right_factor: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigradedResolution {
    pub weights: Vec<u64>,
    pub s0: Vec<Vector>,
    pub s1: Vec<Vector>,
    pub psi1: Vec<SyzygyColumn>,
}

impl MultigradedResolution {
    pub fn compute(s: &SimplicialSemigroup) -> Result<Self> {
        let s0 = s.compute_s0();
        let (s1, psi1) = if s0.len() as u64 == s.lattice_index_d() {
            (Vec::new(), Vec::new())
        } else if s.d() == 2 {
            let s1 = delta_from_s0(s, &s0);
            let psi1 = s1.iter().map(|x| syzygy_column(s, &s0, x)).collect::<Result<_>>()?;
            (s1, psi1)
        } else {
            return Err(Error::UnsupportedDimension(s.d()));
        };
        Ok(MultigradedResolution { weights: s.axis_weights(), s0, s1, psi1 })
    }

    /// Builds the resolution from externally known degree sets (sorted on
    /// entry); ψ1 columns are recovered from `s0`.
    pub fn from_degrees(s: &SimplicialSemigroup, mut s0: Vec<Vector>, mut s1: Vec<Vector>) -> Result<Self> {
        s0.sort();
        s1.sort();
        if !s1.is_empty() && s.d() != 2 {
            return Err(Error::UnsupportedDimension(s.d()));
        }
        let psi1 = s1.iter().map(|x| syzygy_column(s, &s0, x)).collect::<Result<_>>()?;
        Ok(MultigradedResolution { weights: s.axis_weights(), s0, s1, psi1 })
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        let d = self.weights.len();
        let num = self.s0.iter().map(|v| (v.clone(), 1)).chain(self.s1.iter().map(|v| (v.clone(), -1)));
        HilbertSeries::new(d, num, self.weights.iter().enumerate().map(|(i, &w)| (i, w)).collect())
            .expect("consistent dimensions")
    }

    /// Standard-graded shifts `(b_1 + … + b_d)/g` of both steps and the
    /// regularity `max{s_0, s_1 − 1}`.
    pub fn to_standard_grading(&self, g: u64) -> Result<StandardGraded> {
        let conv = |v: &Vector| {
            let t: u64 = v.iter().sum();
            if g == 0 || !t.is_multiple_of(g) {
                Err(Error::NotHomogeneous(format!("degree {v:?} is not a multiple of {g}")))
            } else {
                Ok(t / g)
            }
        };
        let mut shifts0 = self.s0.iter().map(conv).collect::<Result<Vec<_>>>()?;
        let mut shifts1 = self.s1.iter().map(conv).collect::<Result<Vec<_>>>()?;
        shifts0.sort();
        shifts1.sort();
        let reg = shifts0
            .iter()
            .map(|&s| s as i64)
            .chain(shifts1.iter().map(|&s| s as i64 - 1))
            .max()
            .unwrap_or(0);
        Ok(StandardGraded { shifts0, shifts1, regularity: reg })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardGraded {
    pub shifts0: Vec<u64>,
    pub shifts1: Vec<u64>,
    pub regularity: i64,
}

pub fn multigraded_hilbert_series(s: &SimplicialSemigroup) -> Result<HilbertSeries> {
    if s.d() != 2 {
        return Err(Error::UnsupportedDimension(s.d()));
    }
    Ok(MultigradedResolution::compute(s)?.hilbert_series())
}

/// `Δ = {s ∈ 𝒮 : s − a_{n−1}, s − a_n ∈ 𝒮, s − a_{n−1} − a_n ∉ 𝒮}` for `d = 2`,
/// lexicographically sorted.
pub fn compute_s1_delta(s: &SimplicialSemigroup) -> Result<Vec<Vector>> {
    if s.d() != 2 {
        return Err(Error::UnsupportedDimension(s.d()));
    }
    Ok(delta_from_s0(s, &s.compute_s0()))
}

fn delta_from_s0(s: &SimplicialSemigroup, s0: &[Vector]) -> Vec<Vector> {
    let idx = S0Index::new(s, s0);
    let w = s.axis_weights();
    let mx = s0.iter().map(|v| v[0]).max().unwrap_or(0);
    let my = s0.iter().map(|v| v[1]).max().unwrap_or(0);
    let mut out = Vec::new();
    // elements of Δ never exceed the S0 maxima coordinatewise
    for x in w[0]..=mx {
        for y in w[1]..=my {
            let v = [x, y];
            if idx.contains(&[x - w[0], y]) && idx.contains(&[x, y - w[1]]) && !idx.contains(&[x - w[0], y - w[1]]) {
                out.push(v.to_vec());
            }
        }
    }
    out
}

fn syzygy_column(s: &SimplicialSemigroup, s0: &[Vector], deg: &Vector) -> Result<SyzygyColumn> {
    let w = s.axis_weights();
    let same_class = |b: &Vector| b.iter().zip(deg).zip(&w).all(|((x, y), w)| x % w == y % w) && le(b, deg);
    let left = s0.iter().find(|b| same_class(b) && b[1] == deg[1]);
    let right = s0.iter().find(|b| same_class(b) && b[0] == deg[0]);
    match (left, right) {
        (Some(l), Some(r)) => Ok(SyzygyColumn {
            degree: deg.clone(),
            left: l.clone(),
            left_factor: vec![(deg[0] - l[0]) / w[0], 0],
            right: r.clone(),
            right_factor: vec![0, (deg[1] - r[1]) / w[1]],
        }),
        _ => Err(Error::VerificationFailed(format!("no S0 pair for second-step degree {deg:?}"))),
    }
}

/// Partition of `𝒮_0` into residue classes with componentwise minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Macaulayfication {
    /// Classes sorted by their minimum; members lexicographically sorted.
    pub classes: Vec<Vec<Vector>>,
    /// `𝔅`, aligned with `classes`.
    pub minima: Vec<Vector>,
    /// Minimal generators of `𝒮' = 𝔅 + ℕ{axis}`: non-axis ones sorted
    /// lexicographically, then the axis generators.
    pub generators: Vec<Vector>,
}

impl Macaulayfication {
    pub fn semigroup(&self) -> SimplicialSemigroup {
        SimplicialSemigroup::new(self.generators.clone()).expect("axis generators kept last")
    }
}

pub fn macaulayfication(s: &SimplicialSemigroup) -> Macaulayfication {
    let s0 = s.compute_s0();
    let mut classes: BTreeMap<Vector, Vec<Vector>> = BTreeMap::new();
    for b in &s0 {
        classes.entry(s.residue(b)).or_default().push(b.clone());
    }
    let mut pairs: Vec<(Vector, Vec<Vector>)> = classes
        .into_values()
        .map(|members| {
            let min = (0..s.d()).map(|k| members.iter().map(|m| m[k]).min().expect("nonempty")).collect();
            (min, members)
        })
        .collect();
    pairs.sort();
    let minima: Vec<Vector> = pairs.iter().map(|(m, _)| m.clone()).collect();
    let classes = pairs.into_iter().map(|(_, c)| c).collect();

    let n = s.n();
    let axis: Vec<Vector> = s.generators()[n - s.d()..].to_vec();
    let generators = minimal_generators(&minima, &axis);
    Macaulayfication { classes, minima, generators }
}

/// Minimal generating set of the semigroup spanned by `cand ∪ axis`, with
/// the axis vectors (assumed irreducible) kept last.
pub fn minimal_generators(cand: &[Vector], axis: &[Vector]) -> Vec<Vector> {
    let mut cand: Vec<Vector> = cand.iter().filter(|b| b.iter().any(|&x| x > 0) && !axis.contains(b)).cloned().collect();
    cand.sort();
    cand.dedup();
    let mut k = 0;
    while k < cand.len() {
        let others: Vec<Vector> = cand.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, v)| v.clone()).chain(axis.iter().cloned()).collect();
        if in_span(&cand[k], &others) {
            cand.remove(k);
        } else {
            k += 1;
        }
    }
    cand.extend(axis.iter().cloned());
    cand
}

/// Whether `s` is a non-negative integer combination of `gens`.
pub fn in_span(s: &[u64], gens: &[Vector]) -> bool {
    fn rec(s: &[u64], gens: &[Vector], memo: &mut HashMap<Vector, bool>) -> bool {
        if s.iter().all(|&x| x == 0) {
            return true;
        }
        if let Some(&b) = memo.get(s) {
            return b;
        }
        let ok = gens.iter().any(|g| g.iter().any(|&x| x > 0) && le(g, s) && rec(&sub(s, g), gens, memo));
        memo.insert(s.to_vec(), ok);
        ok
    }
    rec(s, gens, &mut HashMap::new())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayficationReport {
    pub closure: bool,
    pub cohen_macaulay: bool,
    pub dimension: bool,
    /// `𝒮' ∖ 𝒮`, enumerated for `d = 2`.
    pub gaps: Option<Vec<Vector>>,
}

/// Checks the construction: closure of `𝔅` under sums, `|𝔅| = D = |(𝒮')_0|`,
/// and per-class monomial ideals with a generator avoiding each variable.
pub fn verify_macaulayfication(s: &SimplicialSemigroup, m: &Macaulayfication) -> Result<MacaulayficationReport> {
    let w = s.axis_weights();
    let idx_new = S0Index::from_parts(w.clone(), &m.minima);
    for a in &m.minima {
        for b in &m.minima {
            if !idx_new.contains(&add(a, b)) {
                return Err(Error::VerificationFailed(format!("closure: {a:?} + {b:?} leaves the new semigroup")));
            }
        }
    }
    let d_index = s.lattice_index_d();
    let mut new_s0 = m.semigroup().compute_s0();
    new_s0.sort();
    let mut minima = m.minima.clone();
    minima.sort();
    if minima.len() as u64 != d_index || new_s0 != minima {
        return Err(Error::VerificationFailed(format!(
            "Cohen-Macaulay: |B| = {}, D = {}, S'_0 has {} elements",
            minima.len(),
            d_index,
            new_s0.len()
        )));
    }
    for (class, b) in m.classes.iter().zip(&m.minima) {
        let gens: Vec<Vec<u64>> = class.iter().map(|s| s.iter().zip(b).zip(&w).map(|((x, y), w)| (x - y) / w).collect()).collect();
        for var in 0..s.d() {
            if !gens.iter().any(|g| g[var] == 0) {
                return Err(Error::VerificationFailed(format!(
                    "dimension: class with minimum {b:?} has every generator divisible by y{}",
                    var + 1
                )));
            }
        }
    }
    let gaps = if s.d() == 2 {
        let s0 = s.compute_s0();
        let idx_old = S0Index::new(s, &s0);
        let mx = s0.iter().map(|v| v[0]).max().unwrap_or(0);
        let my = s0.iter().map(|v| v[1]).max().unwrap_or(0);
        let mut gaps = Vec::new();
        for x in 0..=mx + w[0] {
            for y in 0..=my + w[1] {
                let v = [x, y];
                if idx_new.contains(&v) && !idx_old.contains(&v) {
                    if x > mx || y > my {
                        return Err(Error::VerificationFailed(format!("gap {v:?} beyond the S0 bounding box")));
                    }
                    gaps.push(v.to_vec());
                }
            }
        }
        Some(gaps)
    } else {
        None
    };
    Ok(MacaulayficationReport { closure: true, cohen_macaulay: true, dimension: true, gaps })
}
