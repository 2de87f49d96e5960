//! Noether resolutions of weighted-homogeneous ideals over the Noether
//! normalization `A = K[x_{n−d+1}, …, x_n]`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, standard_monomials_below, GroebnerBasis};
use crate::hilbert::{free_hilbert_function, HilbertSeries};
use crate::ideal::check_homogeneous;
use crate::poly::{Field, FieldElement, Monomial, MonomialOrder, Polynomial, Ring, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct B0Entry {
    pub monomial: Monomial,
    pub shift: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct B1Entry {
    pub monomial: Monomial,
    pub delta: u32,
    pub shift: u64,
}

/// `0 → ⊕_{B1} A(−s_1) --ψ1--> ⊕_{B0} A(−s_0) → R/I → 0`.
///
/// `psi1[row][col]` lives in [`NoetherResolution::a_ring`], whose variables
/// are the last `d` variables of the ambient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoetherResolution {
    pub d: usize,
    pub weights: WeightVector,
    pub b0: Vec<B0Entry>,
    pub b1: Vec<B1Entry>,
    pub psi1: Vec<Vec<Polynomial>>,
    /// Coordinate change `x_n ← x_n + τ x_{n−1}` applied before resolving.
    pub tau: u64,
    pub basis: GroebnerBasis,
    a_ring: Arc<Ring>,
}

impl NoetherResolution {
    pub fn a_ring(&self) -> &Arc<Ring> {
        &self.a_ring
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.b1.is_empty()
    }

    pub fn shifts0(&self) -> Vec<u64> {
        self.b0.iter().map(|e| e.shift).collect()
    }

    pub fn shifts1(&self) -> Vec<u64> {
        self.b1.iter().map(|e| e.shift).collect()
    }

    /// Column `k` of ψ1 as the element `Σ_v ψ1[v][k] · v` of the ambient ring.
    pub fn column_image(&self, k: usize) -> Result<Polynomial> {
        let ring = self.basis.ring();
        let n = ring.nvars();
        let map: Vec<Option<usize>> = (n - self.d..n).map(Some).collect();
        let mut acc = Polynomial::zero(ring);
        for (row, e) in self.b0.iter().enumerate() {
            let entry = self.psi1[row][k].embed(ring, &map)?;
            acc = acc.add(&entry.mul(&Polynomial::monomial(ring, e.monomial.clone()))?)?;
        }
        Ok(acc)
    }

    /// ψ0 ∘ ψ1 = 0: every column maps into the ideal.
    pub fn verify_complex(&self) -> Result<bool> {
        for k in 0..self.b1.len() {
            if !self.basis.normal_form(&self.column_image(k)?)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Entries are ω-homogeneous of degree (column shift) − (row shift).
    pub fn verify_degrees(&self) -> Result<bool> {
        let wa = WeightVector::new(self.weights.as_slice()[self.weights.len() - self.d..].to_vec())?;
        for (row, e0) in self.b0.iter().enumerate() {
            for (col, e1) in self.b1.iter().enumerate() {
                for (m, _) in self.psi1[row][col].terms() {
                    if e0.shift + m.weighted_degree(&wa)? != e1.shift {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        let den: Vec<u64> = self.weights.as_slice()[self.weights.len() - self.d..].to_vec();
        HilbertSeries::univariate(&self.shifts0(), &self.shifts1(), &den)
    }

    /// `Σ_{B0} h_A(s − s_0) − Σ_{B1} h_A(s − s_1)` for `s = 0..=n`.
    pub fn hilbert_function(&self, n: u64) -> Vec<i64> {
        let h = free_hilbert_function(&self.weights.as_slice()[self.weights.len() - self.d..], n);
        let mut out = vec![0i64; n as usize + 1];
        for s in 0..=n {
            for e in &self.b0 {
                if e.shift <= s {
                    out[s as usize] += h[(s - e.shift) as usize] as i64;
                }
            }
            for e in &self.b1 {
                if e.shift <= s {
                    out[s as usize] -= h[(s - e.shift) as usize] as i64;
                }
            }
        }
        out
    }

    /// `max{s_0/c, s_1/c − 1}` for a constant grading `ω = (c, …, c)`.
    pub fn regularity(&self) -> Result<i64> {
        regularity(self)
    }
}

fn weights_of(g: &GroebnerBasis) -> Result<WeightVector> {
    match g.order() {
        MonomialOrder::WeightedDegRevLex(w) => Ok(w.clone()),
        MonomialOrder::Block { .. } => Err(Error::InvalidWeights("basis is not for a weighted degrevlex order".into())),
    }
}

fn last_vars(n: usize, d: usize) -> Vec<usize> {
    (n - d..n).collect()
}

fn check_dim(g: &GroebnerBasis, d: usize) -> Result<usize> {
    let n = g.ring().nvars();
    if d > n {
        return Err(Error::UnsupportedDimension(d));
    }
    if g.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(n)
}

/// Standard monomials of `in(I) + (x_{n−d+1}, …, x_n)` with their ω-degrees,
/// ascending by (degree, `>_ω`).
pub fn compute_b0(g: &GroebnerBasis, d: usize) -> Result<Vec<B0Entry>> {
    let n = check_dim(g, d)?;
    let w = weights_of(g)?;
    let mi = g.initial_ideal().with_vars(&last_vars(n, d));
    let first: Vec<usize> = (0..n - d).collect();
    let ms = standard_monomials_below(&mi, &first, &w, None).map_err(|e| match e {
        Error::NotZeroDimensional(_) => Error::NotNoetherNormalization(d),
        other => other,
    })?;
    ms.into_iter()
        .map(|m| Ok(B0Entry { shift: m.weighted_degree(&w)?, monomial: m }))
        .collect()
}

/// No minimal generator of `in(I)` involves the last `d` variables.
pub fn is_cohen_macaulay(g: &GroebnerBasis, d: usize) -> Result<bool> {
    let n = check_dim(g, d)?;
    let last = last_vars(n, d);
    Ok(!g.initial_ideal().gens().iter().any(|m| m.involves_any(&last)))
}

/// True iff `x_n` divides no minimal generator of `in(I)`; for ω-homogeneous
/// ideals this is equivalent to `x_n` being a nonzero divisor on `R/I`.
pub fn last_variable_is_nzd(g: &GroebnerBasis) -> bool {
    let n = g.ring().nvars();
    !g.initial_ideal().gens().iter().any(|m| m.exp(n - 1) > 0)
}

/// Makes `x_n` a nonzero divisor, trying `x_n ← x_n + τ x_{n−1}` for
/// `τ = 1, 2, …` when needed. Returns the (possibly new) basis and `τ`.
pub fn ensure_nzd_last_variable(g: &GroebnerBasis, tau_max: u64) -> Result<(GroebnerBasis, u64)> {
    let n = g.ring().nvars();
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    if last_variable_is_nzd(g) {
        return Ok((g.clone(), 0));
    }
    let w = weights_of(g)?;
    if w.get(n - 2) != w.get(n - 1) {
        return Err(Error::NonzeroDivisorNotFound { tried: 0 });
    }
    let ring = g.ring().clone();
    let limit = match ring.field() {
        Field::Rational => tau_max,
        Field::Prime(p) => tau_max.min(p as u64 - 1),
    };
    let mut tried = 0;
    for tau in 1..=limit {
        tried += 1;
        let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&ring, i)).collect();
        images[n - 1] = images[n - 1].add(&Polynomial::var(&ring, n - 2).scale(&ring.field().from_i64(tau as i64)))?;
        let changed = g.generators().iter().map(|f| f.substitute(&images)).collect::<Result<Vec<_>>>()?;
        let h = buchberger(&changed)?;
        if last_variable_is_nzd(&h) {
            return Ok((h, tau));
        }
    }
    Err(Error::NonzeroDivisorNotFound { tried })
}

fn a_ring_for(g: &GroebnerBasis, d: usize, w: &WeightVector) -> Result<Arc<Ring>> {
    let n = g.ring().nvars();
    let names = g.ring().names()[n - d..].to_vec();
    let wa = if d == 0 { None } else { Some(WeightVector::new(w.as_slice()[n - d..].to_vec())?) };
    match wa {
        Some(wa) => Ring::with_names(g.ring().field(), MonomialOrder::weighted(wa), names),
        // K itself: a one-variable ring that never uses its variable
        None => Ring::with_names(g.ring().field(), MonomialOrder::degrevlex(0), names),
    }
}

/// Shared second step: `B1 = B0 ∩ χ(in(I))` with `χ` setting the A-variables
/// to 1, pivot variable `p`, columns `x_p^δ e_u − Σ f_uv e_v` read off from
/// the remainder of `u · x_p^δ`.
fn second_step(g: &GroebnerBasis, d: usize, pivot: usize, b0: &[B0Entry], w: &WeightVector) -> Result<(Vec<B1Entry>, Vec<Vec<Polynomial>>, Arc<Ring>)> {
    let n = g.ring().nvars();
    let last = last_vars(n, d);
    let ini = g.initial_ideal();
    let chi = ini.dehomogenize(&last);
    let a_ring = a_ring_for(g, d, w)?;
    let mut b1 = Vec::new();
    let mut cols: Vec<Vec<Polynomial>> = Vec::new();
    let ring = g.ring().clone();
    let to_a = |m: &Monomial| Monomial::new(m.exps()[n - d..].to_vec());
    for e in b0 {
        if !chi.contains(&e.monomial) {
            continue;
        }
        let delta = ini.min_power_into(&e.monomial, pivot).ok_or({
            Error::NonzeroDivisorNotFound { tried: 0 }
        })?;
        let lifted = e.monomial.mul(&Monomial::var(n, pivot, delta));
        let r = g.normal_form(&Polynomial::monomial(&ring, lifted))?;
        let mut col: Vec<Vec<(Monomial, FieldElement)>> = vec![Vec::new(); b0.len()];
        let row_u = b0.iter().position(|v| v.monomial == e.monomial).expect("u in B0");
        col[row_u].push((to_a(&Monomial::var(n, pivot, delta)), ring.field().one()));
        for (m, c) in r.terms() {
            let v = m.drop_vars(&last);
            let row = b0.iter().position(|x| x.monomial == v).ok_or_else(|| {
                Error::VerificationFailed(format!("remainder monomial {m} has B0-part {v} outside B0"))
            })?;
            col[row].push((to_a(m), -c));
        }
        let col = col.into_iter().map(|t| Polynomial::from_terms(&a_ring, t)).collect::<Result<Vec<_>>>()?;
        b1.push(B1Entry { shift: e.shift + delta as u64 * w.get(pivot), delta, monomial: e.monomial.clone() });
        cols.push(col);
    }
    // transpose to rows × columns
    let psi1 = (0..b0.len()).map(|row| cols.iter().map(|c| c[row].clone()).collect()).collect();
    Ok((b1, psi1, a_ring))
}

fn check_input(g: &GroebnerBasis) -> Result<WeightVector> {
    let w = weights_of(g)?;
    if !check_homogeneous(g.generators(), &w)? {
        return Err(Error::NotHomogeneous("Gröbner basis generators are not ω-homogeneous".into()));
    }
    Ok(w)
}

/// Two-dimensional case; `x_n` must already be a nonzero divisor.
pub fn noether_resolution_dim2(g: &GroebnerBasis) -> Result<NoetherResolution> {
    let w = check_input(g)?;
    let n = check_dim(g, 2)?;
    if !last_variable_is_nzd(g) {
        return Err(Error::NonzeroDivisorNotFound { tried: 0 });
    }
    let b0 = compute_b0(g, 2)?;
    let (b1, psi1, a_ring) = second_step(g, 2, n - 2, &b0, &w)?;
    Ok(NoetherResolution { d: 2, weights: w, b0, b1, psi1, tau: 0, basis: g.clone(), a_ring })
}

/// One-dimensional case.
pub fn noether_resolution_dim1(g: &GroebnerBasis) -> Result<NoetherResolution> {
    let w = check_input(g)?;
    let n = check_dim(g, 1)?;
    let b0 = compute_b0(g, 1)?;
    let (b1, psi1, a_ring) = second_step(g, 1, n - 1, &b0, &w)?;
    Ok(NoetherResolution { d: 1, weights: w, b0, b1, psi1, tau: 0, basis: g.clone(), a_ring })
}

/// Dispatch on `d`. For `d = 2` a coordinate change is attempted when `x_n`
/// is a zero divisor; for `d ∉ {1, 2}` only Cohen–Macaulay inputs resolve.
pub fn noether_resolution(g: &GroebnerBasis, d: usize, tau_max: u64) -> Result<NoetherResolution> {
    check_dim(g, d)?;
    match d {
        1 => noether_resolution_dim1(g),
        2 => {
            let (h, tau) = ensure_nzd_last_variable(g, tau_max)?;
            let mut res = noether_resolution_dim2(&h)?;
            res.tau = tau;
            Ok(res)
        }
        _ => {
            let w = check_input(g)?;
            let b0 = compute_b0(g, d)?;
            if !is_cohen_macaulay(g, d)? {
                return Err(Error::UnsupportedDimension(d));
            }
            let a_ring = a_ring_for(g, d, &w)?;
            let psi1 = vec![Vec::new(); b0.len()];
            Ok(NoetherResolution { d, weights: w, b0, b1: Vec::new(), psi1, tau: 0, basis: g.clone(), a_ring })
        }
    }
}

/// Regularity from the resolution shifts under a constant grading `(c, …, c)`.
pub fn regularity(res: &NoetherResolution) -> Result<i64> {
    let c = res.weights.constant_value().ok_or(Error::RegularityUndefined)?;
    let mut reg = i64::MIN;
    for s in res.shifts0() {
        reg = reg.max((s / c) as i64);
    }
    for s in res.shifts1() {
        reg = reg.max((s / c) as i64 - 1);
    }
    Ok(reg)
}

/// Hilbert series with denominator `Π_{i>n−d} (1 − t^{ω_i})`.
pub fn hilbert_series_weighted(res: &NoetherResolution) -> HilbertSeries {
    res.hilbert_series()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_function_oracle;
    use crate::ideal::{implicitize, ParametrizationMap};
    use crate::poly::parse_polynomial;

    fn surface(field: Field) -> GroebnerBasis {
        let map = ParametrizationMap::parse("t1^3 + t1^2*t2\nt2^4 + t1*t2^3\nt1^2\nt2^2\n", field).unwrap();
        implicitize(&map, &WeightVector::new(vec![3, 4, 2, 2]).unwrap()).unwrap()
    }

    fn ideal(src: &[&str], w: Vec<u64>) -> GroebnerBasis {
        let r = Ring::weighted(Field::Rational, WeightVector::new(w).unwrap());
        let fs: Vec<Polynomial> = src.iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
        buchberger(&fs).unwrap()
    }

    #[test]
    fn surface_char0_resolution() {
        let g = surface(Field::Rational);
        assert!(!is_cohen_macaulay(&g, 2).unwrap());
        let res = noether_resolution(&g, 2, 100).unwrap();
        assert_eq!(res.tau, 0);
        assert_eq!(res.shifts0(), vec![0, 3, 4, 6, 7, 9]);
        // x1*x2 also lies in B0 ∩ χ(in(I)); the staircase count below confirms
        // the extra second-step generator in degree 11
        let b1: Vec<(Monomial, u32, u64)> = res.b1.iter().map(|e| (e.monomial.clone(), e.delta, e.shift)).collect();
        assert_eq!(b1, vec![(Monomial::new(vec![0, 1, 0, 0]), 2, 8), (Monomial::new(vec![1, 1, 0, 0]), 2, 11)]);
        assert!(res.verify_complex().unwrap());
        assert!(res.verify_degrees().unwrap());
        let a = res.a_ring().clone();
        let col: Vec<Polynomial> = res.psi1.iter().map(|r| r[0].clone()).collect();
        let want: Vec<Polynomial> = ["1/2*x3^3*x4 - 1/2*x3^2*x4^2", "0", "x3^2", "-1/2*x4", "0", "0"]
            .iter()
            .map(|s| parse_polynomial(s, &a).unwrap())
            .collect();
        assert_eq!(col, want);
        assert_eq!(res.hilbert_series().to_string(), "(1 + t^3 + t^4 + t^6 + t^7 - t^8 + t^9 - t^11)/((1 - t^2)^2)");
        let oracle: Vec<i64> = hilbert_function_oracle(&g, &res.weights, 20).unwrap().into_iter().map(|x| x as i64).collect();
        assert_eq!(res.hilbert_series().expand(20).unwrap(), oracle);
        assert_eq!(res.hilbert_function(20), oracle);
        assert_eq!(res.regularity(), Err(Error::RegularityUndefined));
    }

    #[test]
    fn surface_char2_is_cm() {
        let g = surface(Field::Prime(2));
        assert!(is_cohen_macaulay(&g, 2).unwrap());
        let res = noether_resolution(&g, 2, 100).unwrap();
        let b0: Vec<Monomial> = res.b0.iter().map(|e| e.monomial.clone()).collect();
        let m = |v: [u32; 4]| Monomial::new(v.to_vec());
        assert_eq!(b0, vec![m([0, 0, 0, 0]), m([1, 0, 0, 0]), m([0, 1, 0, 0]), m([1, 1, 0, 0])]);
        assert!(res.b1.is_empty());
        assert_eq!(res.hilbert_series().to_string(), "(1 + t^3 + t^4 + t^7)/((1 - t^2)^2)");
    }

    #[test]
    fn monomial_dim1_depth0() {
        let g = ideal(&["x1^2", "x1*x2"], vec![1, 1]);
        let res = noether_resolution(&g, 1, 100).unwrap();
        assert_eq!(res.shifts0(), vec![0, 1]);
        assert_eq!(res.b1.len(), 1);
        assert_eq!(res.b1[0].monomial, Monomial::new(vec![1, 0]));
        assert_eq!(res.b1[0].delta, 1);
        assert_eq!(res.shifts1(), vec![2]);
        let a = res.a_ring().clone();
        assert_eq!(res.psi1[0][0], Polynomial::zero(&a));
        assert_eq!(res.psi1[1][0], parse_polynomial("x2", &a).unwrap());
        assert!(res.verify_complex().unwrap());
        assert_eq!(res.regularity(), Ok(1));
    }

    #[test]
    fn numerical_curve_dim1_is_cm() {
        // affine cusp t ↦ (t^2, t^3) weighted by (2, 3) with x2 as the parameter: use x1 last
        let g = ideal(&["x1^2 - x2^3"], vec![3, 2]);
        let res = noether_resolution(&g, 1, 100).unwrap();
        assert!(res.b1.is_empty());
        assert_eq!(res.shifts0(), vec![0, 3]);
    }

    #[test]
    fn trivial_cases() {
        let g = ideal(&["x1"], vec![1, 1, 1]);
        let res = noether_resolution(&g, 2, 100).unwrap();
        assert_eq!(res.shifts0(), vec![0]);
        assert!(res.b1.is_empty());
        assert_eq!(res.regularity(), Ok(0));
        let unit = ideal(&["x1 - x1 + 1"], vec![1, 1]);
        assert_eq!(noether_resolution(&unit, 1, 100).unwrap_err(), Error::UnitIdeal);
        let not_nn = ideal(&["x1*x2"], vec![1, 1, 1]);
        assert_eq!(compute_b0(&not_nn, 1).unwrap_err(), Error::NotNoetherNormalization(1));
    }

    #[test]
    fn zero_divisor_toy() {
        let g = ideal(&["x1*x3"], vec![1, 1, 1]);
        assert!(!last_variable_is_nzd(&g));
        match ensure_nzd_last_variable(&g, 100) {
            Ok((h, tau)) => {
                assert_ne!(tau, 0);
                assert!(last_variable_is_nzd(&h));
            }
            Err(e) => assert!(matches!(e, Error::NonzeroDivisorNotFound { .. })),
        }
        // unequal weights on the last two variables forbid the change
        let g = ideal(&["x1*x3^2"], vec![1, 2, 1]);
        assert_eq!(ensure_nzd_last_variable(&g, 100).unwrap_err(), Error::NonzeroDivisorNotFound { tried: 0 });
    }
}
