//! Projective monomial curves, numerical semigroups, regularity bounds and
//! closed forms for arithmetic sequences and their canonical projections.

use std::collections::{BTreeSet, BinaryHeap};
use std::cmp::Reverse;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::semigroup::{
    compute_s1_delta, macaulayfication, MultigradedResolution, S0Index, SimplicialSemigroup, StandardGraded, Vector,
};

fn gcd_all(v: &[u64]) -> u64 {
    v.iter().fold(0, |g, &x| g.gcd(&x))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
}

impl NumericalSemigroup {
    pub fn new(mut gens: Vec<u64>) -> Result<Self> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(Error::InvalidSequence("generators must be positive and nonempty".into()));
        }
        if gcd_all(&gens) != 1 {
            return Err(Error::InvalidSequence(format!("gcd of {gens:?} is not 1")));
        }
        gens.sort();
        gens.dedup();
        Ok(NumericalSemigroup { gens })
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    /// Smallest element in each residue class mod `m` (Dijkstra on ℤ/m).
    fn class_minima(&self, m: u64) -> Vec<u64> {
        let mut dist = vec![u64::MAX; m as usize];
        dist[0] = 0;
        let mut heap = BinaryHeap::from([Reverse((0u64, 0u64))]);
        while let Some(Reverse((dv, r))) = heap.pop() {
            if dv > dist[r as usize] {
                continue;
            }
            for &g in &self.gens {
                let t = (r + g) % m;
                if dv + g < dist[t as usize] {
                    dist[t as usize] = dv + g;
                    heap.push(Reverse((dv + g, t)));
                }
            }
        }
        dist
    }

    pub fn contains(&self, x: u64) -> bool {
        let m = self.gens[0];
        x >= self.class_minima(m)[(x % m) as usize]
    }

    /// `Ap(ℛ, m)` indexed by residue: entry `i` is the element `≡ i mod m`.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 || !self.contains(m) {
            return Err(Error::OutOfRange(format!("{m} is not a nonzero element of the semigroup")));
        }
        Ok(self.class_minima(m))
    }

    /// Largest integer outside the semigroup; −1 for ℕ.
    pub fn frobenius_number(&self) -> i64 {
        let m = self.gens[0];
        *self.class_minima(m).iter().max().expect("m ≥ 1") as i64 - m as i64
    }
}

/// `m_1 < … < m_n` with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialCurve {
    m: Vec<u64>,
}

impl MonomialCurve {
    pub fn new(m: Vec<u64>) -> Result<Self> {
        if m.len() < 2 {
            return Err(Error::InvalidSequence("need at least two entries".into()));
        }
        if m[0] == 0 || m.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(format!("{m:?} is not a strictly increasing positive sequence")));
        }
        if gcd_all(&m) != 1 {
            return Err(Error::InvalidSequence(format!("gcd of {m:?} is not 1")));
        }
        Ok(MonomialCurve { m })
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn sequence(&self) -> &[u64] {
        &self.m
    }

    /// 1-based `m_i`.
    pub fn m(&self, i: usize) -> u64 {
        self.m[i - 1]
    }

    fn mn(&self) -> u64 {
        *self.m.last().expect("n ≥ 2")
    }

    /// `a_i = (m_i, m_n − m_i)` for `i < n`, then `(m_n, 0)`, `(0, m_n)`.
    pub fn generators(&self) -> Vec<Vector> {
        let mn = self.mn();
        let mut g: Vec<Vector> = self.m[..self.n() - 1].iter().map(|&x| vec![x, mn - x]).collect();
        g.push(vec![mn, 0]);
        g.push(vec![0, mn]);
        g
    }

    pub fn semigroup(&self) -> SimplicialSemigroup {
        SimplicialSemigroup::new(self.generators()).expect("valid curve semigroup")
    }

    /// `ℛ = ⟨m_1, …, m_n⟩`.
    pub fn numerical_semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::new(self.m.clone()).expect("gcd 1")
    }

    /// `ℛ' = ⟨m_n − m_{n−1}, …, m_n − m_1, m_n⟩`.
    pub fn dual_numerical_semigroup(&self) -> NumericalSemigroup {
        let mn = self.mn();
        let mut g: Vec<u64> = self.m[..self.n() - 1].iter().map(|&x| mn - x).collect();
        g.push(mn);
        NumericalSemigroup::new(g).expect("gcd 1")
    }

    /// Regularity computed from the multigraded resolution of the semigroup.
    pub fn exact_regularity(&self) -> Result<i64> {
        let res = MultigradedResolution::compute(&self.semigroup())?;
        Ok(res.to_standard_grading(self.mn())?.regularity)
    }

    fn check_tau(&self, tau: usize) -> Result<u64> {
        let n = self.n() as u64;
        if tau == 0 || tau > self.n() || self.m(tau) < n {
            return Err(Error::BoundInapplicable(format!("τ = {tau} needs 1 ≤ τ ≤ n and m_τ ≥ {n}")));
        }
        Ok(self.m(tau))
    }

    /// `2 m_n ⌊m_τ/n⌋ − m_τ`.
    pub fn selmer_bound(&self, tau: usize) -> Result<i64> {
        let mt = self.check_tau(tau)? as i64;
        Ok(2 * self.mn() as i64 * (mt / self.n() as i64) - mt)
    }

    /// `⌊(2 m_n ⌊m_τ/n⌋ − m_τ + m_n) / m_1⌋`, valid for Cohen–Macaulay curves.
    pub fn reg_bound_cm(&self, tau: usize) -> Result<i64> {
        let a = self.selmer_bound(tau)? + self.mn() as i64;
        Ok(a.div_euclid(self.m(1) as i64))
    }

    /// `⌊m_n(2/n + 1/m_1) − 1⌋`, needs `m_1 ≥ n`.
    pub fn reg_bound_cm_simplified(&self) -> Result<i64> {
        let (n, m1, mn) = (self.n() as i64, self.m(1) as i64, self.mn() as i64);
        if m1 < n {
            return Err(Error::BoundInapplicable(format!("m_1 = {m1} < n = {n}")));
        }
        Ok((mn * (2 * m1 + n)).div_euclid(n * m1) - 1)
    }

    /// The general bound for a choice of `τ` (`m_τ ≥ n`) and `λ`
    /// (`m_n − m_λ ≥ n`).
    pub fn reg_bound_general(&self, tau: usize, lambda: usize) -> Result<i64> {
        let n = self.n() as i64;
        let mn = self.mn() as i64;
        let a = self.selmer_bound(tau)? + mn;
        if lambda == 0 || lambda > self.n() || mn - (self.m(lambda) as i64) < n {
            return Err(Error::BoundInapplicable(format!("λ = {lambda} needs m_n − m_λ ≥ {n}")));
        }
        let ml = self.m(lambda) as i64;
        let c = 2 * mn * ((mn - ml) / n) + ml;
        let m1 = self.m(1) as i64;
        let gap = mn - self.m(self.n() - 1) as i64;
        Ok((a * gap + c * m1).div_euclid(m1 * gap) - 2)
    }

    /// Minimum of [`Self::reg_bound_general`] over all admissible `(τ, λ)`.
    pub fn best_reg_bound_general(&self) -> Result<i64> {
        let mut best: Option<i64> = None;
        for tau in 1..=self.n() {
            for lambda in 1..=self.n() {
                if let Ok(b) = self.reg_bound_general(tau, lambda) {
                    best = Some(best.map_or(b, |x| x.min(b)));
                }
            }
        }
        best.ok_or_else(|| Error::BoundInapplicable("no λ with m_n − m_λ ≥ n".into()))
    }

    /// `⌊m_n(4/n + 1/m_1 + 1/(m_n − m_{n−1}))⌋ − 4`, needs `m_1 ≥ n` and
    /// `m_n − m_{n−1} ≥ n`.
    pub fn reg_bound_simplified(&self) -> Result<i64> {
        let (n, m1, mn) = (self.n() as i64, self.m(1) as i64, self.mn() as i64);
        let gap = mn - self.m(self.n() - 1) as i64;
        if m1 < n || gap < n {
            return Err(Error::BoundInapplicable(format!("needs m_1 ≥ n and m_n − m_(n−1) ≥ n (n = {n})")));
        }
        Ok((mn * (4 * m1 * gap + n * gap + n * m1)).div_euclid(n * m1 * gap) - 4)
    }

    /// `max_{i<j} (m_i − m_{i−1} + m_j − m_{j−1}) − 1` with `m_0 = 0`.
    pub fn lvovsky_bound(&self) -> i64 {
        let mut gaps: Vec<i64> = Vec::with_capacity(self.n());
        let mut prev = 0;
        for &x in &self.m {
            gaps.push(x as i64 - prev);
            prev = x as i64;
        }
        gaps.sort_unstable_by(|a, b| b.cmp(a));
        gaps[0] + gaps[1] - 1
    }

    /// `m_n − n + 1`.
    pub fn glp_bound(&self) -> i64 {
        self.mn() as i64 - self.n() as i64 + 1
    }
}

/// `m_i = m_1 + (i − 1) d`, `gcd(m_1, d) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArithCurve {
    m1: u64,
    d: u64,
    n: usize,
}

impl ArithCurve {
    pub fn new(m1: u64, d: u64, n: usize) -> Result<Self> {
        if m1 == 0 || d == 0 || n < 2 {
            return Err(Error::InvalidSequence(format!("(m1, d, n) = ({m1}, {d}, {n})")));
        }
        if m1.gcd(&d) != 1 {
            return Err(Error::InvalidSequence(format!("gcd({m1}, {d}) ≠ 1")));
        }
        Ok(ArithCurve { m1, d, n })
    }

    /// Recognizes an arithmetic sequence.
    pub fn from_sequence(m: &[u64]) -> Option<Self> {
        if m.len() < 2 || m[1] <= m[0] {
            return None;
        }
        let d = m[1] - m[0];
        if m.windows(2).any(|w| w[1] <= w[0] || w[1] - w[0] != d) {
            return None;
        }
        ArithCurve::new(m[0], d, m.len()).ok()
    }

    pub fn m1(&self) -> u64 {
        self.m1
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self, i: usize) -> u64 {
        self.m1 + (i as u64 - 1) * self.d
    }

    pub fn mn(&self) -> u64 {
        self.m(self.n)
    }

    pub fn sequence(&self) -> Vec<u64> {
        (1..=self.n).map(|i| self.m(i)).collect()
    }

    pub fn curve(&self) -> MonomialCurve {
        MonomialCurve::new(self.sequence()).expect("gcd(m1, d) = 1")
    }

    /// `⌊(m_1 − 1)/(n − 1)⌋`.
    pub fn q(&self) -> u64 {
        (self.m1 - 1) / (self.n as u64 - 1)
    }

    /// `m_1 − q(n − 1)`, in `1..=n−1`.
    pub fn l(&self) -> u64 {
        self.m1 - self.q() * (self.n as u64 - 1)
    }

    /// 1-based generator `a_i` of the curve semigroup (`i ≤ n + 1`).
    pub fn a(&self, i: usize) -> Vector {
        let mn = self.mn();
        match i {
            _ if i == self.n => vec![mn, 0],
            _ if i == self.n + 1 => vec![0, mn],
            _ => vec![self.m(i), mn - self.m(i)],
        }
    }

    /// `s_λ = (⌈λ/(n−1)⌉ m_n − λd, λd)`.
    pub fn s_lambda(&self, lambda: u64) -> Vector {
        let k = lambda.div_ceil(self.n as u64 - 1);
        vec![k * self.mn() - lambda * self.d, lambda * self.d]
    }

    /// Closed-form `𝒮_0`, lexicographically sorted.
    pub fn arith_s0(&self) -> Vec<Vector> {
        let mut v: Vec<Vector> = (0..self.mn()).map(|j| self.s_lambda(j)).collect();
        v.sort();
        v
    }

    /// `⌈(m_n − 1)/(n − 1)⌉`.
    pub fn regularity(&self) -> i64 {
        (self.mn() - 1).div_ceil(self.n as u64 - 1) as i64
    }

    /// `(q + d + 1, q + 1, q, l)` with the two minima re-derived by search.
    pub fn lemma_min_values(&self) -> Result<LemmaMinValues> {
        let vals = LemmaMinValues { q_d_1: self.q() + self.d + 1, q_1: self.q() + 1, q: self.q(), l: self.l() };
        let seq = self.sequence();
        let first = min_multiple_in(seq[0], &seq[1..], vals.q_d_1);
        let last = min_multiple_in(self.mn(), &seq[..self.n - 1], vals.q_1);
        if first != Some(vals.q_d_1) {
            return Err(Error::ClosedFormMismatch(format!("min b with b·m1 in ⟨m2..mn⟩: {first:?} vs {}", vals.q_d_1)));
        }
        if last != Some(vals.q_1) {
            return Err(Error::ClosedFormMismatch(format!("min b with b·mn in ⟨m1..m(n−1)⟩: {last:?} vs {}", vals.q_1)));
        }
        Ok(vals)
    }

    /// Whether `m_r` lies in the span of the other `m_i` (closed form `r > m_1`).
    pub fn m_r_redundant(&self, r: usize) -> bool {
        r as u64 > self.m1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaMinValues {
    pub q_d_1: u64,
    pub q_1: u64,
    pub q: u64,
    pub l: u64,
}

/// Whether `x` is a non-negative integer combination of `gens`.
pub fn in_numerical_span(x: u64, gens: &[u64]) -> bool {
    let mut reach = vec![false; x as usize + 1];
    reach[0] = true;
    for v in 1..=x as usize {
        reach[v] = gens.iter().any(|&g| g as usize <= v && g > 0 && reach[v - g as usize]);
    }
    reach[x as usize]
}

/// Least `b ≥ 1` (up to `limit`) with `b·x ∈ ⟨gens⟩`.
pub fn min_multiple_in(x: u64, gens: &[u64], limit: u64) -> Option<u64> {
    (1..=limit).find(|&b| in_numerical_span(b * x, gens))
}

/// `base + Σ k_i·dir_i` with each `k_i ∈ 0..=max_i` (unbounded when `None`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFamily {
    pub base: Vector,
    pub rays: Vec<(Vector, Option<u64>)>,
}

/// Finite union of [`LinearFamily`] sets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GapSet {
    pub families: Vec<LinearFamily>,
}

impl GapSet {
    pub fn is_finite(&self) -> bool {
        self.families.iter().all(|f| f.rays.iter().all(|(_, m)| m.is_some()))
    }

    /// All members with every coordinate `≤ bound[k]`.
    pub fn enumerate_within(&self, bound: &[u64]) -> BTreeSet<Vector> {
        fn rec(p: Vector, rays: &[(Vector, Option<u64>)], bound: &[u64], out: &mut BTreeSet<Vector>) {
            if p.iter().zip(bound).any(|(x, b)| x > b) {
                return;
            }
            let Some(((dir, max), rest)) = rays.split_first() else {
                out.insert(p);
                return;
            };
            let mut cur = p;
            let mut k = 0;
            loop {
                if cur.iter().zip(bound).any(|(x, b)| x > b) {
                    break;
                }
                rec(cur.clone(), rest, bound, out);
                k += 1;
                if max.is_some_and(|m| k > m) || dir.iter().all(|&x| x == 0) {
                    break;
                }
                cur = cur.iter().zip(dir).map(|(a, b)| a + b).collect();
            }
        }
        let mut out = BTreeSet::new();
        for f in &self.families {
            rec(f.base.clone(), &f.rays, bound, &mut out);
        }
        out
    }
}

impl fmt::Display for GapSet {
    /// e.g. `{(3,4) + i·(1,6) [i ≤ 1] + j·(0,7) [j ≥ 0]}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vec = |v: &Vector| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        let names = ["i", "j", "k"];
        let parts: Vec<String> = self
            .families
            .iter()
            .map(|fam| {
                let mut s = vec(&fam.base);
                for (k, (dir, max)) in fam.rays.iter().enumerate() {
                    let v = names.get(k).copied().unwrap_or("c");
                    let range = match max {
                        Some(m) => format!("{v} ≤ {m}"),
                        None => format!("{v} ≥ 0"),
                    };
                    s.push_str(&format!(" + {v}·{} [{range}]", vec(dir)));
                }
                s
            })
            .collect();
        write!(f, "{{{}}}", parts.join(" ∪ "))
    }
}

/// Case label for the projection closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjectionCase {
    /// `r ≤ m_1`, `r = 2`
    A1,
    /// `r ≤ m_1`, `3 ≤ r ≤ n−2`
    A2,
    /// `r ≤ m_1`, `r = n−1`
    A3,
    /// `r > m_1`, `r = 2`
    B1,
    /// `r > m_1`, `3 ≤ r ≤ n−2`
    B2,
    /// `r > m_1`, `r = n−1`
    B3,
}

impl fmt::Display for ProjectionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ProjectionCase::A1 => "a.1",
            ProjectionCase::A2 => "a.2",
            ProjectionCase::A3 => "a.3",
            ProjectionCase::B1 => "b.1",
            ProjectionCase::B2 => "b.2",
            ProjectionCase::B3 => "b.3",
        };
        f.write_str(s)
    }
}

/// The curve obtained by dropping coordinate `r` of an arithmetic curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProjectedCurve {
    base: ArithCurve,
    r: usize,
}

impl ProjectedCurve {
    pub fn new(base: ArithCurve, r: usize) -> Result<Self> {
        if base.n() < 4 {
            return Err(Error::OutOfRange(format!("projections need n ≥ 4, got {}", base.n())));
        }
        if r < 2 || r > base.n() - 1 {
            return Err(Error::OutOfRange(format!("r = {r} not in 2..={}", base.n() - 1)));
        }
        Ok(ProjectedCurve { base, r })
    }

    pub fn base(&self) -> &ArithCurve {
        &self.base
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `𝒜 ∖ {a_r}`.
    pub fn generators(&self) -> Vec<Vector> {
        (1..=self.base.n() + 1).filter(|&i| i != self.r).map(|i| self.base.a(i)).collect()
    }

    pub fn semigroup(&self) -> SimplicialSemigroup {
        SimplicialSemigroup::new(self.generators()).expect("axis generators kept")
    }

    pub fn case(&self) -> ProjectionCase {
        let n = self.base.n();
        let low = self.r as u64 <= self.base.m1();
        match (low, self.r) {
            (true, 2) => ProjectionCase::A1,
            (true, r) if r == n - 1 => ProjectionCase::A3,
            (true, _) => ProjectionCase::A2,
            (false, 2) => ProjectionCase::B1,
            (false, r) if r == n - 1 => ProjectionCase::B3,
            (false, _) => ProjectionCase::B2,
        }
    }

    /// 1 when `l = n − 1`, else 0.
    fn epsilon(&self) -> u64 {
        (self.base.l() == self.base.n() as u64 - 1) as u64
    }

    /// Closed-form analysis record.
    pub fn analyze(&self) -> Result<ProjectionAnalysis> {
        let c = &self.base;
        let (n, r, d) = (c.n(), self.r, c.d());
        let q = c.q();
        let eps = self.epsilon();
        let an = c.a(n);
        let an1 = c.a(n + 1);
        let add = |x: &Vector, y: &Vector| -> Vector { x.iter().zip(y).map(|(a, b)| a + b).collect() };
        let scale = |k: u64, x: &Vector| -> Vector { x.iter().map(|a| a * k).collect() };
        let t = |mu: u64| add(&scale(mu, &c.a(1)), &c.a(2));
        let case = self.case();

        let fam = |base: Vector, rays: Vec<(Vector, Option<u64>)>| LinearFamily { base, rays };
        let gaps = match case {
            ProjectionCase::A1 => GapSet { families: vec![fam(c.a(2), vec![(c.a(1), Some(q + d - 1 + eps)), (an1.clone(), None)])] },
            ProjectionCase::A2 => GapSet { families: vec![fam(c.a(r), vec![(an1.clone(), None)])] },
            ProjectionCase::A3 => {
                let mut families = Vec::new();
                if q + eps >= 1 {
                    families.push(fam(c.a(n - 1), vec![(an.clone(), Some(q + eps - 1)), (an1.clone(), None)]));
                }
                families.push(fam(c.a(n - 1), vec![(an.clone(), None), (an1.clone(), Some(d - 1))]));
                GapSet { families }
            }
            ProjectionCase::B1 => GapSet { families: vec![fam(c.a(2), vec![(c.a(1), Some(d - 1)), (an1.clone(), Some(d - 1))])] },
            ProjectionCase::B2 => GapSet { families: vec![fam(c.a(r), vec![(an1.clone(), Some(d - 1))])] },
            ProjectionCase::B3 => GapSet { families: vec![fam(c.a(n - 1), vec![(an.clone(), None), (an1.clone(), Some(d - 1))])] },
        };

        // first-step degrees from the t_μ description
        let s0_full = c.arith_s0();
        let (removed, added): (Vec<Vector>, Vec<Vector>) = match case {
            ProjectionCase::A1 => {
                let ts: Vec<Vector> = (0..q + d + eps).map(t).collect();
                let plus = ts.iter().map(|x| add(x, &an)).collect();
                (ts, plus)
            }
            ProjectionCase::A2 => (vec![c.a(r)], vec![add(&c.a(r), &an)]),
            ProjectionCase::A3 => {
                let top = add(&add(&c.a(n - 1), &scale(q + eps, &an)), &scale(d, &an1));
                (vec![c.a(n - 1)], vec![top])
            }
            ProjectionCase::B1 => {
                let ts: Vec<Vector> = (0..d).map(t).collect();
                let plus = ts.iter().flat_map(|x| [add(x, &an), add(x, &scale(d, &an1))]).collect();
                (ts, plus)
            }
            ProjectionCase::B2 => (vec![c.a(r)], vec![add(&c.a(r), &an), add(&c.a(r), &scale(d, &an1))]),
            ProjectionCase::B3 => (vec![c.a(n - 1)], vec![add(&c.a(n - 1), &scale(d, &an1))]),
        };
        let mut s0: Vec<Vector> = s0_full.into_iter().filter(|x| !removed.contains(x)).chain(added).collect();
        s0.sort();

        let mut s1: Vec<Vector> = match case {
            ProjectionCase::B1 => (0..d).map(|mu| add(&add(&t(mu), &an), &scale(d, &an1))).collect(),
            ProjectionCase::B2 => vec![add(&add(&c.a(r), &an), &scale(d, &an1))],
            _ => Vec::new(),
        };
        s1.sort();

        let cohen_macaulay = r as u64 <= c.m1() || r == n - 1;
        let macaulayfication_generators = if cohen_macaulay { self.generators() } else { c.curve().generators() };

        // resolution in the s_λ / Λ description
        let mut lambda_set = None;
        let (res0, res1): (Vec<Vector>, Vec<Vector>) = {
            let step = n as u64 - 1;
            let all = |skip: &[u64]| (0..c.mn()).filter(|l| !skip.contains(l)).map(|l| c.s_lambda(l)).collect::<Vec<_>>();
            match case {
                ProjectionCase::A1 => {
                    let lam: Vec<u64> = (1..=q + d + eps).map(|mu| mu * step - 1).collect();
                    let mut v = all(&lam);
                    v.extend(lam.iter().map(|&l| add(&c.s_lambda(l), &an)));
                    lambda_set = Some(lam);
                    (v, vec![])
                }
                ProjectionCase::A2 => {
                    let mut v = all(&[(n - r) as u64]);
                    v.push(add(&c.a(r), &an));
                    (v, vec![])
                }
                ProjectionCase::A3 => {
                    let mut v = all(&[1]);
                    v.push(add(&add(&c.a(n - 1), &scale(q + eps, &an)), &scale(d, &an1)));
                    (v, vec![])
                }
                ProjectionCase::B1 => {
                    let lam: Vec<u64> = (1..=d).map(|mu| mu * step - 1).collect();
                    let mut v = all(&lam);
                    v.extend(lam.iter().map(|&l| add(&c.s_lambda(l), &an)));
                    v.extend(lam.iter().map(|&l| add(&c.s_lambda(l), &scale(d, &an1))));
                    let w = lam.iter().map(|&l| add(&add(&c.s_lambda(l), &an), &scale(d, &an1))).collect();
                    lambda_set = Some(lam);
                    (v, w)
                }
                ProjectionCase::B2 => {
                    let mut v = all(&[(n - r) as u64]);
                    v.push(add(&c.a(r), &an));
                    v.push(add(&c.a(r), &scale(d, &an1)));
                    (v, vec![add(&add(&c.a(r), &an), &scale(d, &an1))])
                }
                ProjectionCase::B3 => {
                    let mut v = all(&[1]);
                    v.push(add(&c.a(n - 1), &scale(d, &an1)));
                    (v, vec![])
                }
            }
        };
        let resolution = MultigradedResolution::from_degrees(&self.semigroup(), res0, res1)?;
        let standard = resolution.to_standard_grading(c.mn())?;

        let base_reg = c.regularity();
        let regularity_formula = match case {
            ProjectionCase::A1 | ProjectionCase::A3 => base_reg + 1,
            ProjectionCase::B1 => 2 * d as i64,
            ProjectionCase::A2 | ProjectionCase::B2 | ProjectionCase::B3 => base_reg,
        };

        Ok(ProjectionAnalysis {
            curve: *self,
            case,
            q,
            l: c.l(),
            gaps,
            s0,
            s1,
            cohen_macaulay,
            macaulayfication: macaulayfication_generators,
            lambda: lambda_set,
            resolution,
            standard,
            regularity_formula,
        })
    }
}

/// Closed-form description of a projected arithmetic curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionAnalysis {
    pub curve: ProjectedCurve,
    pub case: ProjectionCase,
    pub q: u64,
    pub l: u64,
    /// `𝒮 ∖ 𝒫_r`.
    pub gaps: GapSet,
    /// `(𝒫_r)_0`, lexicographically sorted.
    pub s0: Vec<Vector>,
    /// `(𝒫_r)_1`, lexicographically sorted.
    pub s1: Vec<Vector>,
    pub cohen_macaulay: bool,
    /// Minimal generators of the Macaulayfication.
    pub macaulayfication: Vec<Vector>,
    /// `Λ_1` or `Λ_2` when the resolution uses one.
    pub lambda: Option<Vec<u64>>,
    pub resolution: MultigradedResolution,
    /// Shifts and regularity read off `resolution`.
    pub standard: StandardGraded,
    /// The case-wise closed-form regularity.
    pub regularity_formula: i64,
}

/// One closed-form-versus-engine comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub agree: bool,
    pub closed_form: String,
    pub engine: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub checks: Vec<Check>,
}

impl CrossCheck {
    pub fn all_agree(&self) -> bool {
        self.checks.iter().all(|c| c.agree)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Turns the first disagreement into an error.
    pub fn into_result(self) -> Result<()> {
        match self.checks.into_iter().find(|c| !c.agree) {
            None => Ok(()),
            Some(c) => Err(Error::ClosedFormMismatch(format!("{}: closed form {}, engine {}", c.name, c.closed_form, c.engine))),
        }
    }
}

impl ProjectionAnalysis {
    /// Compares every closed form with the general semigroup computations.
    pub fn cross_check(&self) -> Result<CrossCheck> {
        let p = self.curve.semigroup();
        let base = self.curve.base().curve().semigroup();
        let mut checks = Vec::new();
        let mut push = |name: &'static str, closed: String, engine: String| {
            checks.push(Check { name, agree: closed == engine, closed_form: closed, engine });
        };

        let engine = MultigradedResolution::compute(&p)?;
        push("S0", format!("{:?}", self.s0), format!("{:?}", engine.s0));
        push("resolution S0", format!("{:?}", self.resolution.s0), format!("{:?}", engine.s0));
        let delta = compute_s1_delta(&p)?;
        push("S1", format!("{:?}", self.s1), format!("{delta:?}"));
        push("resolution S1", format!("{:?}", self.resolution.s1), format!("{:?}", engine.s1));
        let d_index = p.lattice_index_d();
        push("|S1| = |S0| - D", delta.len().to_string(), (engine.s0.len() as u64 - d_index).to_string());
        let cm = engine.s0.len() as u64 == d_index;
        push("Cohen-Macaulay", self.cohen_macaulay.to_string(), cm.to_string());
        let mac = macaulayfication(&p);
        push("Macaulayfication", format!("{:?}", self.macaulayfication), format!("{:?}", mac.generators));
        push("Hilbert series", self.resolution.hilbert_series().to_string(), engine.hilbert_series().to_string());
        let reg = engine.to_standard_grading(self.curve.base().mn())?.regularity;
        push("regularity (from resolution)", self.standard.regularity.to_string(), reg.to_string());
        push("regularity (case formula)", self.regularity_formula.to_string(), reg.to_string());

        // gaps, compared inside a box that covers both S0 sets plus slack
        let base_s0 = base.compute_s0();
        let top = base_s0.iter().chain(&engine.s0).flat_map(|v| v.iter().copied()).max().unwrap_or(0);
        let bound = top + 3 * self.curve.base().mn();
        let idx_s = S0Index::new(&base, &base_s0);
        let idx_p = S0Index::new(&p, &engine.s0);
        let mut gaps = BTreeSet::new();
        for x in 0..=bound {
            for y in 0..=bound {
                if idx_s.contains(&[x, y]) && !idx_p.contains(&[x, y]) {
                    gaps.insert(vec![x, y]);
                }
            }
        }
        let closed = self.gaps.enumerate_within(&[bound, bound]);
        push("gap set", format!("{closed:?}"), format!("{gaps:?}"));
        Ok(CrossCheck { checks })
    }
}

/// Closed-form analysis of the projection of `c` dropping coordinate `r`.
pub fn project(c: &ArithCurve, r: usize) -> Result<ProjectionAnalysis> {
    ProjectedCurve::new(*c, r)?.analyze()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::verify_macaulayfication;

    fn sieve(gens: &[u64], upto: u64) -> Vec<bool> {
        let mut r = vec![false; upto as usize + 1];
        r[0] = true;
        for v in 1..=upto as usize {
            r[v] = gens.iter().any(|&g| g as usize <= v && r[v - g as usize]);
        }
        r
    }

    #[test]
    fn numerical_semigroup_basics() {
        let r = NumericalSemigroup::new(vec![1]).unwrap();
        assert_eq!(r.apery_set(5).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(r.frobenius_number(), -1);
        assert_eq!(NumericalSemigroup::new(vec![2, 3]).unwrap().frobenius_number(), 1);
        let r = NumericalSemigroup::new(vec![3, 5, 7]).unwrap();
        assert_eq!(r.frobenius_number(), 4);
        let ap = r.apery_set(7).unwrap();
        let s = sieve(&[3, 5, 7], 21);
        for (i, &a) in ap.iter().enumerate() {
            assert_eq!(a % 7, i as u64);
            assert!(s[a as usize] && (a < 7 || !s[a as usize - 7]));
        }
        assert!(r.apery_set(4).is_err());
        assert!(NumericalSemigroup::new(vec![4, 6]).is_err());
    }

    #[test]
    fn sequence_validation() {
        assert!(MonomialCurve::new(vec![3]).is_err());
        assert!(MonomialCurve::new(vec![2, 4]).is_err());
        assert!(MonomialCurve::new(vec![3, 2]).is_err());
        assert!(ArithCurve::new(2, 4, 4).is_err());
        assert_eq!(ArithCurve::from_sequence(&[1, 3, 5, 7]), Some(ArithCurve::new(1, 2, 4).unwrap()));
        assert_eq!(ArithCurve::from_sequence(&[1, 3, 6]), None);
    }

    #[test]
    fn bounds_on_small_curves() {
        let c = MonomialCurve::new(vec![2, 3]).unwrap();
        assert_eq!(c.reg_bound_cm(2).unwrap(), 3);
        assert!(c.exact_regularity().unwrap() <= 3);
        assert!(MonomialCurve::new(vec![1, 3]).unwrap().reg_bound_cm(1).is_err());
        let c = MonomialCurve::new(vec![1, 2]).unwrap();
        assert_eq!(c.selmer_bound(2).unwrap(), 2);
        assert_eq!(c.glp_bound(), 1);
        assert!(c.reg_bound_general(2, 1).is_err());
    }

    #[test]
    fn bound_family_values() {
        // m_i = n + i, m_n = 3n
        for n in 6..=10u64 {
            let mut m: Vec<u64> = (1..n).map(|i| n + i).collect();
            m.push(3 * n);
            let c = MonomialCurve::new(m).unwrap();
            // 2(8n − 1)/(n + 1) floored, minus 2
            let exact = (2 * (8 * n - 1)) / (n + 1) - 2;
            assert_eq!(c.reg_bound_general(1, n as usize - 1).unwrap(), exact as i64);
            assert_eq!(c.reg_bound_simplified().unwrap(), 13);
            assert_eq!(c.lvovsky_bound(), 2 * n as i64 + 1);
            assert!(c.exact_regularity().unwrap() <= exact as i64);
        }
    }

    #[test]
    fn arithmetic_closed_forms() {
        let c = ArithCurve::new(1, 2, 4).unwrap();
        let listed: Vec<Vector> = (0..7).map(|j| c.s_lambda(j)).collect();
        assert_eq!(listed, vec![vec![0, 0], vec![5, 2], vec![3, 4], vec![1, 6], vec![6, 8], vec![4, 10], vec![2, 12]]);
        assert_eq!(c.arith_s0(), c.curve().semigroup().compute_s0());
        assert_eq!(c.regularity(), 2);
        assert_eq!(c.curve().exact_regularity().unwrap(), 2);
        assert_eq!(c.lemma_min_values().unwrap(), LemmaMinValues { q_d_1: 3, q_1: 1, q: 0, l: 1 });
    }

    #[test]
    fn projection_example() {
        let c = ArithCurve::new(1, 2, 4).unwrap();
        let a = project(&c, 2).unwrap();
        assert_eq!(a.case, ProjectionCase::B1);
        assert_eq!(a.lambda, Some(vec![2, 5]));
        let mut want: Vec<Vector> =
            [[0, 0], [1, 6], [5, 2], [2, 12], [6, 8], [10, 4], [3, 18], [11, 10], [4, 24]].iter().map(|v| v.to_vec()).collect();
        want.sort();
        assert_eq!(a.s0, want);
        assert_eq!(a.s1, vec![vec![10, 18], vec![11, 24]]);
        assert_eq!(a.standard.shifts0, vec![0, 1, 1, 2, 2, 2, 3, 3, 4]);
        assert_eq!(a.standard.shifts1, vec![4, 5]);
        assert_eq!(a.regularity_formula, 4);
        assert_eq!(a.standard.regularity, 4);
        assert!(!a.cohen_macaulay);
        assert!(a.gaps.is_finite());
        assert!(a.cross_check().unwrap().all_agree());
        let m = macaulayfication(&a.curve.semigroup());
        let report = verify_macaulayfication(&a.curve.semigroup(), &m).unwrap();
        let gaps: BTreeSet<Vector> = report.gaps.unwrap().into_iter().collect();
        assert_eq!(gaps, a.gaps.enumerate_within(&[100, 100]));
    }

    #[test]
    fn projection_range() {
        let c = ArithCurve::new(1, 2, 4).unwrap();
        assert!(project(&c, 1).is_err());
        assert!(project(&c, 4).is_err());
        assert!(project(&ArithCurve::new(1, 2, 3).unwrap(), 2).is_err());
    }

    #[test]
    fn gap_set_enumeration() {
        let g = GapSet {
            families: vec![LinearFamily { base: vec![1, 1], rays: vec![(vec![1, 0], Some(2)), (vec![0, 5], None)] }],
        };
        assert!(!g.is_finite());
        let e = g.enumerate_within(&[10, 11]);
        assert_eq!(e.len(), 9);
        assert!(e.contains(&vec![3, 11]));
        assert_eq!(g.to_string(), "{(1,1) + i·(1,0) [i ≤ 2] + j·(0,5) [j ≥ 0]}");
    }
}
