use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::{Field, FieldElement};
use super::monomial::{Monomial, WeightVector};
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// Ambient ring: variable count, coefficient field, active order and the
/// variable names used for parsing and printing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: usize,
    field: Field,
    order: MonomialOrder,
    names: Vec<String>,
}

impl Ring {
    /// Ring in `x1..xn`.
    pub fn new(field: Field, order: MonomialOrder) -> Arc<Ring> {
        let n = order.nvars();
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        Arc::new(Ring { nvars: n, field, order, names })
    }

    pub fn with_names(field: Field, order: MonomialOrder, names: Vec<String>) -> Result<Arc<Ring>> {
        if names.len() != order.nvars() {
            return Err(Error::DimensionMismatch { expected: order.nvars(), found: names.len() });
        }
        Ok(Arc::new(Ring { nvars: names.len(), field, order, names }))
    }

    /// `K[x1..xn]` under `>_ω`.
    pub fn weighted(field: Field, w: WeightVector) -> Arc<Ring> {
        Ring::new(field, MonomialOrder::weighted(w))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Ring>> {
        Ring::with_names(self.field, order, self.names.clone())
    }
}

/// Sparse polynomial; terms are nonzero and sorted descending under the
/// ring's order.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, FieldElement)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: FieldElement) -> Self {
        Polynomial::term(ring, c, Monomial::one(ring.nvars))
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::constant(ring, ring.field.one())
    }

    pub fn term(ring: &Arc<Ring>, c: FieldElement, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars, "monomial arity");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Polynomial::term(ring, ring.field.one(), m)
    }

    /// `x_i`, zero-based.
    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Polynomial::monomial(ring, Monomial::var(ring.nvars, i, 1))
    }

    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<(Monomial, FieldElement)>) -> Result<Self> {
        for (m, c) in &terms {
            if m.nvars() != ring.nvars {
                return Err(Error::DimensionMismatch { expected: ring.nvars, found: m.nvars() });
            }
            if c.field() != ring.field {
                return Err(Error::RingMismatch);
            }
        }
        terms.sort_by(|a, b| ring.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Ok(Polynomial { ring: ring.clone(), terms: out })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn leading_term(&self) -> Result<(&FieldElement, &Monomial)> {
        self.terms.first().map(|(m, c)| (c, m)).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElement> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Leading term under an order other than the ring's, by linear scan.
    pub fn leading_term_under(&self, ord: &MonomialOrder) -> Result<(&FieldElement, &Monomial)> {
        if ord.nvars() != self.ring.nvars {
            return Err(Error::DimensionMismatch { expected: self.ring.nvars, found: ord.nvars() });
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .map(|(m, c)| (c, m))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms
            .binary_search_by(|(tm, _)| self.ring.order.cmp(m, tm))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    fn merge(&self, other: &Polynomial, sign: bool) -> Polynomial {
        let ord = &self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if sign { b[j].1.clone() } else { -&b[j].1 };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if sign { &a[i].1 + &b[j].1 } else { &a[i].1 - &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if sign { c.clone() } else { -c })));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.merge(&big.mul_term(c, m), true);
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// `c · m · self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: &FieldElement, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars))
    }

    /// `self − c · m · g`.
    pub fn sub_mul_term(&self, c: &FieldElement, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.merge(&g.mul_term(c, m), false)
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Reinterprets the polynomial in a ring with the same variables and
    /// field but possibly another order.
    pub fn into_ring(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        if ring.nvars != self.ring.nvars || ring.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        Polynomial::from_terms(ring, self.terms.clone())
    }

    /// Renames variables: variable `i` of `self` becomes variable `map[i]` of
    /// `ring`. Every variable that occurs must be mapped.
    pub fn embed(&self, ring: &Arc<Ring>, map: &[Option<usize>]) -> Result<Polynomial> {
        if ring.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0; ring.nvars];
            for (i, &x) in m.exps().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map.get(i).copied().flatten() {
                    Some(j) => e[j] += x,
                    None => return Err(Error::RingMismatch),
                }
            }
            terms.push((Monomial::new(e), c.clone()));
        }
        Polynomial::from_terms(ring, terms)
    }

    /// `self(images)`, with all images in one common ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars {
            return Err(Error::DimensionMismatch { expected: self.ring.nvars, found: images.len() });
        }
        let Some(target) = images.first().map(|p| p.ring.clone()) else {
            return Ok(self.clone());
        };
        for p in images {
            p.same_ring(&images[0])?;
        }
        if target.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        // cache powers per variable
        let maxexp: Vec<u32> = (0..self.ring.nvars)
            .map(|i| self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<Polynomial>> = images
            .iter()
            .zip(&maxexp)
            .map(|(p, &e)| {
                let mut v = vec![Polynomial::one(&target)];
                for k in 0..e as usize {
                    let next = v[k].mul(p).expect("same ring");
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize])?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// True when all terms share one ω-degree.
    pub fn is_homogeneous(&self, w: &WeightVector) -> Result<bool> {
        let mut deg = None;
        for (m, _) in &self.terms {
            let d = m.weighted_degree(w)?;
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return Ok(false),
                _ => {}
            }
        }
        Ok(true)
    }

    /// Largest ω-degree of a term.
    pub fn weighted_degree(&self, w: &WeightVector) -> Result<Option<u64>> {
        let mut best = None;
        for (m, _) in &self.terms {
            let d = m.weighted_degree(w)?;
            best = Some(best.map_or(d, |b: u64| b.max(d)));
        }
        Ok(best)
    }

    /// Indices of variables that occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars).filter(|&i| self.terms.iter().any(|(m, _)| m.exp(i) > 0)).collect()
    }
}

impl fmt::Display for Polynomial {
    /// Prints in the input grammar, e.g. `2*x2*x3^2 - x1^2*x4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut parts = Vec::new();
            if !abs.is_one() || m.is_one() {
                parts.push(abs.to_string());
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.ring.names[i].clone()),
                    _ => parts.push(format!("{}^{}", self.ring.names[i], e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_polynomial;
    use proptest::prelude::*;

    fn ring4(field: Field) -> Arc<Ring> {
        Ring::weighted(field, WeightVector::new(vec![3, 4, 2, 2]).unwrap())
    }

    #[test]
    fn additive_inverse() {
        let r = ring4(Field::Rational);
        let f = parse_polynomial("2*x2*x3^2 - x1^2*x4 + x3^3*x4 - x3^2*x4^2", &r).unwrap();
        assert!(f.add(&f.neg()).unwrap().is_zero());
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = ring4(Field::Prime(2));
        let f = parse_polynomial("x1 + x3", &r).unwrap();
        assert_eq!(f.pow(2), parse_polynomial("x1^2 + x3^2", &r).unwrap());
    }

    #[test]
    fn leading_term_of_surface_generator() {
        let r = ring4(Field::Rational);
        let g1 = parse_polynomial("2*x2*x3^2 - x1^2*x4 + x3^3*x4 - x3^2*x4^2", &r).unwrap();
        let (c, m) = g1.leading_term().unwrap();
        assert_eq!(m, &Monomial::new(vec![0, 1, 2, 0]));
        assert_eq!(c.to_string(), "2");
        assert_eq!(Polynomial::zero(&r).leading_term(), Err(Error::ZeroPolynomial));
        let single = parse_polynomial("5*x1*x4", &r).unwrap();
        assert_eq!(single.leading_term().unwrap().1, &Monomial::new(vec![1, 0, 0, 1]));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = ring4(Field::Rational);
        let b = ring4(Field::Prime(5));
        let f = Polynomial::var(&a, 0);
        let g = Polynomial::var(&b, 0);
        assert_eq!(f.add(&g), Err(Error::RingMismatch));
        assert_eq!(f.mul(&g), Err(Error::RingMismatch));
    }

    #[test]
    fn substitution() {
        let t = Ring::new(Field::Rational, MonomialOrder::degrevlex(2));
        let x = ring4(Field::Rational);
        let g = parse_polynomial("x1^2 - x2", &x).unwrap();
        let s = Polynomial::var(&t, 0);
        let u = Polynomial::var(&t, 1);
        let imgs = vec![s.clone(), s.mul(&s).unwrap(), u.clone(), u];
        assert!(g.substitute(&imgs).unwrap().is_zero());
    }

    #[test]
    fn display_roundtrip() {
        let r = ring4(Field::Rational);
        let f = parse_polynomial("-x1^2*x4 + 1/2*x3^3*x4 - 3", &r).unwrap();
        assert_eq!(f.to_string(), "-x1^2*x4 + 1/2*x3^3*x4 - 3");
        assert_eq!(parse_polynomial(&f.to_string(), &r).unwrap(), f);
    }

    fn arb_poly(r: Arc<Ring>) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..4, 4), -9i64..10), 0..8).prop_map(move |ts| {
            let terms = ts.into_iter().map(|(e, c)| (Monomial::new(e), r.field().from_i64(c))).collect();
            Polynomial::from_terms(&r, terms).unwrap()
        })
    }

    /// Coefficient map by naive expansion, independent of term ordering.
    fn naive_product(f: &Polynomial, g: &Polynomial) -> std::collections::BTreeMap<Vec<u32>, FieldElement> {
        let mut out: std::collections::BTreeMap<Vec<u32>, FieldElement> = Default::default();
        for (a, c) in f.terms() {
            for (b, d) in g.terms() {
                let e = a.mul(b).into_exps();
                let v = &c.clone() * d;
                let entry = out.entry(e).or_insert_with(|| f.ring().field().zero());
                *entry = &*entry + &v;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(ring4(Field::Rational)), g in arb_poly(ring4(Field::Rational)), h in arb_poly(ring4(Field::Rational))) {
            let lhs = f.add(&g).unwrap().mul(&h).unwrap();
            let rhs = f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            let direct: std::collections::BTreeMap<_, _> = lhs.terms().iter().map(|(m, c)| (m.exps().to_vec(), c.clone())).collect();
            prop_assert_eq!(direct, naive_product(&f.add(&g).unwrap(), &h));
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(f.add(&g).unwrap().add(&h).unwrap(), f.add(&g.add(&h).unwrap()).unwrap());
            prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
            if let Ok((_, lm)) = f.leading_term() {
                let scan = f.leading_term_under(f.ring().order()).unwrap().1;
                prop_assert_eq!(lm, scan);
            }
        }

        #[test]
        fn distributive_mod_p(f in arb_poly(ring4(Field::Prime(7))), g in arb_poly(ring4(Field::Prime(7))), h in arb_poly(ring4(Field::Prime(7)))) {
            let lhs = f.add(&g).unwrap().mul(&h).unwrap();
            let rhs = f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
