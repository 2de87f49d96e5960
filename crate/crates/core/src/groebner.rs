//! Division, Buchberger's algorithm and monomial ideals.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{FieldElement, Monomial, MonomialOrder, Polynomial, Ring, WeightVector};

/// Monomial ideal stored by its minimal generators, sorted lexicographically
/// by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: g.nvars() });
            }
            all.push(g);
        }
        all.sort_by_key(|m| m.total_degree());
        all.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for m in all {
            if !min.iter().any(|g| g.divides(&m)) {
                min.push(m);
            }
        }
        min.sort();
        Ok(MonomialIdeal { nvars, gens: min })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self + (x_i : i ∈ vars)`.
    pub fn with_vars(&self, vars: &[usize]) -> MonomialIdeal {
        let extra = vars.iter().map(|&i| Monomial::var(self.nvars, i, 1));
        MonomialIdeal::new(self.nvars, self.gens.iter().cloned().chain(extra)).expect("same arity")
    }

    /// Image under `x_i ↦ 1` for `i ∈ vars`.
    pub fn dehomogenize(&self, vars: &[usize]) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.drop_vars(vars))).expect("same arity")
    }

    /// Smallest `e` with `x_i^e` a generator, if any.
    pub fn pure_power(&self, i: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| g.exps().iter().enumerate().all(|(j, &e)| j == i || e == 0) && g.exp(i) > 0)
            .map(|g| g.exp(i))
            .min()
    }

    /// Smallest `δ ≥ 0` with `m · x_i^δ ∈ self`, or `None` if no power works.
    pub fn min_power_into(&self, m: &Monomial, i: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| g.exps().iter().enumerate().all(|(j, &e)| j == i || e <= m.exp(j)))
            .map(|g| g.exp(i).saturating_sub(m.exp(i)))
            .min()
    }
}

/// A Gröbner basis together with its ring (and hence its order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps generators already known to form a reduced basis.
    pub(crate) fn from_reduced(ring: Arc<Ring>, generators: Vec<Polynomial>) -> Self {
        GroebnerBasis { ring, generators, reduced: true }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.leading_monomial().is_some_and(Monomial::is_one))
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        initial_ideal(self)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.generators.is_empty() {
            f.same_ring(&Polynomial::zero(&self.ring))?;
            return Ok(f.clone());
        }
        normal_form(f, &self.generators)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks Buchberger's criterion directly on every pair.
    pub fn is_groebner(&self) -> Result<bool> {
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                let s = s_polynomial(&self.generators[i], &self.generators[j])?;
                if !normal_form(&s, &self.generators)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `lcm/LT(f) · f − lcm/LT(g) · g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.same_ring(g)?;
    let (cf, mf) = f.leading_term()?;
    let (cg, mg) = g.leading_term()?;
    let l = mf.lcm(mg);
    let a = f.mul_term(&cf.inv().expect("nonzero"), &l.div(mf).expect("divides"));
    Ok(a.sub_mul_term(&cg.inv().expect("nonzero"), &l.div(mg).expect("divides"), g))
}

fn check_divisors(f: &Polynomial, gs: &[Polynomial]) -> Result<()> {
    if gs.is_empty() {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    for g in gs {
        f.same_ring(g)?;
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    Ok(())
}

/// Remainder of `f` on division by `gs`: repeatedly reduce the largest
/// reducible monomial by the first generator whose leading monomial divides it.
pub fn normal_form(f: &Polynomial, gs: &[Polynomial]) -> Result<Polynomial> {
    Ok(divide(f, gs)?.1)
}

/// Quotients and remainder with `f = Σ q_i g_i + r`.
pub fn divide(f: &Polynomial, gs: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
    check_divisors(f, gs)?;
    let ring = f.ring().clone();
    let lts: Vec<(FieldElement, Monomial)> = gs
        .iter()
        .map(|g| {
            let (c, m) = g.leading_term().expect("nonzero");
            (c.inv().expect("nonzero"), m.clone())
        })
        .collect();
    let mut quotients: Vec<Vec<(Monomial, FieldElement)>> = vec![Vec::new(); gs.len()];
    let mut rem = Vec::new();
    let mut p = f.clone();
    while let Ok((c, m)) = p.leading_term() {
        let (c, m) = (c.clone(), m.clone());
        match lts.iter().position(|(_, lm)| lm.divides(&m)) {
            Some(k) => {
                let q = m.div(&lts[k].1).expect("divides");
                let qc = &c * &lts[k].0;
                p = p.sub_mul_term(&qc, &q, &gs[k]);
                quotients[k].push((q, qc));
            }
            None => {
                rem.push((m.clone(), c));
                p = p.sub(&Polynomial::term(&ring, p.leading_term()?.0.clone(), m))?;
            }
        }
    }
    let quotients = quotients.into_iter().map(|t| Polynomial::from_terms(&ring, t)).collect::<Result<_>>()?;
    // remainder terms were produced in descending order
    Ok((quotients, Polynomial::from_terms(&ring, rem)?))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

fn grading_degree(m: &Monomial, w: &WeightVector) -> u64 {
    m.exps().iter().zip(w.as_slice()).map(|(&e, &x)| e as u64 * x).sum()
}

/// Reduced Gröbner basis of the ideal generated by `fs` under the ring's
/// order. Pairs are selected by smallest sugar degree; for a weighted
/// degrevlex ring the sugar grading is the order's own weight vector, which
/// makes this the normal strategy on homogeneous input.
pub fn buchberger(fs: &[Polynomial]) -> Result<GroebnerBasis> {
    let Some(first) = fs.first() else {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    };
    let grading = match first.ring().order().weights() {
        Some(w) => w.clone(),
        None => WeightVector::standard(first.ring().nvars()),
    };
    buchberger_graded(fs, &grading)
}

/// As [`buchberger`], with an explicit positive grading for the sugar.
pub fn buchberger_graded(fs: &[Polynomial], grading: &WeightVector) -> Result<GroebnerBasis> {
    let Some(first) = fs.first() else {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    };
    let ring = first.ring().clone();
    if grading.len() != ring.nvars() {
        return Err(Error::DimensionMismatch { expected: ring.nvars(), found: grading.len() });
    }
    for f in fs {
        f.same_ring(first)?;
    }
    let ord = ring.order().clone();

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugar: Vec<u64> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let add = |h: Polynomial, s: u64, basis: &mut Vec<Polynomial>, sugar: &mut Vec<u64>, pairs: &mut Vec<Pair>, pending: &mut BTreeSet<(usize, usize)>| {
        let k = basis.len();
        let lk = h.leading_monomial().expect("nonzero").clone();
        for (i, g) in basis.iter().enumerate() {
            let li = g.leading_monomial().expect("nonzero");
            let lcm = li.lcm(&lk);
            if li.gcd_is_one(&lk) {
                continue;
            }
            let si = sugar[i] + grading_degree(&lcm.div(li).expect("divides"), grading);
            let sk = s + grading_degree(&lcm.div(&lk).expect("divides"), grading);
            pairs.push(Pair { i, j: k, lcm, sugar: si.max(sk) });
            pending.insert((i, k));
        }
        basis.push(h);
        sugar.push(s);
    };

    let mut inputs: Vec<&Polynomial> = fs.iter().filter(|f| !f.is_zero()).collect();
    inputs.sort_by(|a, b| ord.cmp(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero")));
    for f in inputs {
        let h = if basis.is_empty() { f.clone() } else { normal_form(f, &basis)? };
        if h.is_zero() {
            continue;
        }
        let s = h.terms().iter().map(|(m, _)| grading_degree(m, grading)).max().expect("nonzero");
        add(h.monic(), s, &mut basis, &mut sugar, &mut pairs, &mut pending);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar.cmp(&q.sugar).then_with(|| ord.cmp(&p.lcm, &q.lcm)).then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .expect("nonempty");
        let Pair { i, j, lcm, sugar: s } = pairs.swap_remove(best);
        pending.remove(&(i, j));

        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().expect("nonzero").divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let sp = s_polynomial(&basis[i], &basis[j])?;
        let h = normal_form(&sp, &basis)?;
        if !h.is_zero() {
            add(h.monic(), s, &mut basis, &mut sugar, &mut pairs, &mut pending);
        }
    }

    Ok(GroebnerBasis { generators: interreduce(basis, &ord)?, ring, reduced: true })
}

/// Minimal, tail-reduced, monic, sorted by ascending leading monomial.
fn interreduce(basis: Vec<Polynomial>, ord: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let lh = h.leading_monomial().expect("nonzero");
            l != k && lh.divides(lg) && (lh != lg || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, g)| g.clone()).collect();
        let r = if others.is_empty() { minimal[k].clone() } else { normal_form(&minimal[k], &others)? };
        out.push(r.monic());
    }
    out.sort_by(|a, b| ord.cmp(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero")));
    Ok(out)
}

pub fn initial_ideal(g: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(g.ring.nvars(), g.generators.iter().filter_map(|p| p.leading_monomial().cloned()))
        .expect("same arity")
}

/// Monomials in the variables `vars` lying outside `mi`, sorted ascending by
/// `(ω-degree, >_ω)`. Without a bound the staircase must be finite; with a
/// bound only monomials of ω-degree at most `bound` are listed.
pub fn standard_monomials_below(
    mi: &MonomialIdeal,
    vars: &[usize],
    w: &WeightVector,
    bound: Option<u64>,
) -> Result<Vec<Monomial>> {
    let n = mi.nvars();
    if w.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: w.len() });
    }
    if mi.is_unit() {
        return Ok(Vec::new());
    }
    // Only generators supported in `vars` matter for monomials in `vars`.
    let local: Vec<&Monomial> = mi.gens().iter().filter(|g| !g.involves_any(&complement(vars, n))).collect();
    let mut caps: Vec<u64> = Vec::with_capacity(vars.len());
    for &v in vars {
        let pure = local
            .iter()
            .filter(|g| g.exps().iter().enumerate().all(|(j, &e)| j == v || e == 0))
            .map(|g| g.exp(v) as u64)
            .min();
        match (pure, bound) {
            (Some(p), Some(b)) => caps.push((p - 1).min(b / w.get(v))),
            (Some(p), None) => caps.push(p - 1),
            (None, Some(b)) => caps.push(b / w.get(v)),
            (None, None) => return Err(Error::NotZeroDimensional(v + 1)),
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(
        k: usize,
        deg: u64,
        vars: &[usize],
        caps: &[u64],
        w: &WeightVector,
        bound: Option<u64>,
        local: &[&Monomial],
        cur: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if k == vars.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        let v = vars[k];
        for e in 0..=caps[k] {
            let d = deg + e * w.get(v);
            if bound.is_some_and(|b| d > b) {
                break;
            }
            cur[v] = e as u32;
            let m = Monomial::new(cur.clone());
            if local.iter().any(|g| g.divides(&m)) {
                break;
            }
            rec(k + 1, d, vars, caps, w, bound, local, cur, out);
        }
        cur[v] = 0;
    }
    rec(0, 0, vars, &caps, w, bound, &local, &mut cur, &mut out);
    sort_by_degree_then_order(&mut out, w);
    Ok(out)
}

pub(crate) fn sort_by_degree_then_order(ms: &mut [Monomial], w: &WeightVector) {
    let ord = MonomialOrder::weighted(w.clone());
    ms.sort_by(|a, b| ord.cmp(a, b));
}

fn complement(vars: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|i| !vars.contains(i)).collect()
}

/// Ascending comparison used for deterministic output of monomial lists.
pub fn cmp_in_ring(ring: &Ring, a: &Monomial, b: &Monomial) -> Ordering {
    ring.order().cmp(a, b)
}
