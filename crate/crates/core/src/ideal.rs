//! Input ideals: kernels of parametrizations and toric ideals.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{buchberger_graded, GroebnerBasis};
use crate::poly::{parse_polynomial_lines, Field, Monomial, MonomialOrder, Polynomial, Ring, WeightVector};

/// `x_i ↦ f_i(t_1..t_d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametrizationMap {
    source: Arc<Ring>,
    images: Vec<Polynomial>,
}

impl ParametrizationMap {
    pub fn new(images: Vec<Polynomial>) -> Result<Self> {
        let Some(first) = images.first() else {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        };
        let source = first.ring().clone();
        for f in &images {
            f.same_ring(first)?;
            if f.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        Ok(ParametrizationMap { source, images })
    }

    /// Ring `K[t1..td]` ordered by degrevlex.
    pub fn parameter_ring(field: Field, d: usize) -> Arc<Ring> {
        let names = (1..=d).map(|i| format!("t{i}")).collect();
        Ring::with_names(field, MonomialOrder::degrevlex(d), names).expect("matching arity")
    }

    /// One image per line, in variables `t1..td`; `d` is the largest index used.
    pub fn parse(src: &str, field: Field) -> Result<Self> {
        let d = max_var_index(src, 't').max(1);
        let ring = ParametrizationMap::parameter_ring(field, d);
        ParametrizationMap::new(parse_polynomial_lines(src, &ring)?)
    }

    pub fn d(&self) -> usize {
        self.source.nvars()
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }
}

/// Largest `k` such that `<prefix>k` occurs as a token.
pub fn max_var_index(src: &str, prefix: char) -> usize {
    let bytes: Vec<char> = src.chars().collect();
    let mut best = 0;
    for i in 0..bytes.len() {
        let boundary = i == 0 || !bytes[i - 1].is_ascii_alphanumeric();
        if bytes[i] == prefix && boundary {
            let digits: String = bytes[i + 1..].iter().take_while(|c| c.is_ascii_digit()).collect();
            if let Ok(k) = digits.parse::<usize>() {
                best = best.max(k);
            }
        }
    }
    best
}

/// Reduced Gröbner basis of `ker(x_i ↦ f_i)` under `>_ω`, by elimination
/// with the block order (degrevlex on t) ≫ (`>_ω` on x).
pub fn implicitize(map: &ParametrizationMap, w: &WeightVector) -> Result<GroebnerBasis> {
    let (d, n) = (map.d(), map.n());
    if w.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: w.len() });
    }
    let field = map.source.field();
    let names: Vec<String> = (1..=d).map(|i| format!("t{i}")).chain((1..=n).map(|i| format!("x{i}"))).collect();
    let order = MonomialOrder::block(MonomialOrder::degrevlex(d), MonomialOrder::weighted(w.clone()));
    let elim = Ring::with_names(field, order, names)?;
    let t_map: Vec<Option<usize>> = (0..d).map(Some).collect();

    let mut gens = Vec::with_capacity(n);
    // sugar grading: t has weight 1 and x_i the t-degree of f_i
    let mut grading = vec![1u64; d];
    for (i, f) in map.images.iter().enumerate() {
        let fi = f.embed(&elim, &t_map)?;
        gens.push(Polynomial::var(&elim, d + i).sub(&fi)?);
        grading.push(f.terms().iter().map(|(m, _)| m.total_degree()).max().unwrap_or(1).max(1));
    }
    let gb = buchberger_graded(&gens, &WeightVector::new(grading)?)?;

    let target = Ring::weighted(field, w.clone());
    let x_map: Vec<Option<usize>> = (0..d).map(|_| None).chain((0..n).map(Some)).collect();
    let kept: Vec<Polynomial> = gb
        .generators()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exps()[..d].iter().all(|&e| e == 0)))
        .map(|g| g.embed(&target, &x_map))
        .collect::<Result<_>>()?;
    Ok(GroebnerBasis::from_reduced(target, kept))
}

/// Integer matrix `𝒜 ⊂ ℕ^d`, one generator per row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ToricData {
    rows: Vec<Vec<u64>>,
}

impl ToricData {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::InvalidSemigroup("no generators".into()));
        };
        let d = first.len();
        if d == 0 {
            return Err(Error::InvalidSemigroup("generators have no coordinates".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != d {
                return Err(Error::DimensionMismatch { expected: d, found: r.len() });
            }
            if r.iter().all(|&x| x == 0) {
                return Err(Error::InvalidSemigroup(format!("row {} is zero", i + 1)));
            }
        }
        Ok(ToricData { rows })
    }

    /// Rows of space-separated non-negative integers; `#` starts a comment.
    pub fn parse(src: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut offset = 0;
        for line in src.split_inclusive('\n') {
            let body = line.split('#').next().unwrap_or("");
            if !body.trim().is_empty() {
                let row = body
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse::<u64>().map_err(|_| {
                            let pos = offset + body.find(tok).unwrap_or(0);
                            Error::parse(pos, format!("expected a non-negative integer, found '{tok}'"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                rows.push(row);
            }
            offset += line.len();
        }
        ToricData::new(rows)
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn d(&self) -> usize {
        self.rows[0].len()
    }

    /// `ω_i = Σ_j a_ij`.
    pub fn weights(&self) -> WeightVector {
        WeightVector::new(self.rows.iter().map(|r| r.iter().sum()).collect()).expect("rows are nonzero")
    }

    pub fn parametrization(&self, field: Field) -> Result<ParametrizationMap> {
        let ring = ParametrizationMap::parameter_ring(field, self.d());
        let images = self
            .rows
            .iter()
            .map(|r| {
                let exps = r.iter().map(|&x| u32::try_from(x).map_err(|_| Error::DegreeOverflow)).collect::<Result<_>>()?;
                Ok(Polynomial::monomial(&ring, Monomial::new(exps)))
            })
            .collect::<Result<Vec<_>>>()?;
        ParametrizationMap::new(images)
    }
}

/// Reduced Gröbner basis of `I_𝒜` under `>_ω` with `ω` the row sums.
pub fn toric_ideal(t: &ToricData, field: Field) -> Result<GroebnerBasis> {
    implicitize(&t.parametrization(field)?, &t.weights())
}

/// True iff every one of the first `n − d` variables has a pure power in
/// `in(I) + (x_{n−d+1}, …, x_n)`.
pub fn check_noether_normalization(g: &GroebnerBasis, d: usize) -> bool {
    let n = g.ring().nvars();
    if d > n {
        return false;
    }
    let last: Vec<usize> = (n - d..n).collect();
    let mi = g.initial_ideal().with_vars(&last);
    (0..n - d).all(|i| mi.pure_power(i).is_some() || mi.is_unit())
}

/// True iff each polynomial is ω-homogeneous.
pub fn check_homogeneous(fs: &[Polynomial], w: &WeightVector) -> Result<bool> {
    for f in fs {
        if !f.is_homogeneous(w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn surface_map(field: Field) -> ParametrizationMap {
        ParametrizationMap::parse("t1^3 + t1^2*t2\nt2^4 + t1*t2^3\nt1^2\nt2^2\n", field).unwrap()
    }

    #[test]
    fn surface_kernel_char0() {
        let w = WeightVector::new(vec![3, 4, 2, 2]).unwrap();
        let gb = implicitize(&surface_map(Field::Rational), &w).unwrap();
        assert_eq!(gb.len(), 4);
        assert!(gb.is_groebner().unwrap());
        assert!(check_homogeneous(gb.generators(), &w).unwrap());
        let r = gb.ring().clone();
        let g1 = parse_polynomial("2*x2*x3^2 - x1^2*x4 + x3^3*x4 - x3^2*x4^2", &r).unwrap();
        assert!(gb.contains(&g1).unwrap());
        assert!(check_homogeneous(&[g1], &w).unwrap());
        assert!(check_noether_normalization(&gb, 2));
        // every generator vanishes on the parametrization
        let map = surface_map(Field::Rational);
        for g in gb.generators() {
            assert!(g.substitute(map.images()).unwrap().is_zero());
        }
    }

    #[test]
    fn surface_kernel_char2() {
        let w = WeightVector::new(vec![3, 4, 2, 2]).unwrap();
        let gb = implicitize(&surface_map(Field::Prime(2)), &w).unwrap();
        let r = gb.ring().clone();
        let want = [parse_polynomial("x1^2 + x3^3 + x3^2*x4", &r).unwrap(),
            parse_polynomial("x2^2 + x3*x4^3 + x4^4", &r).unwrap()];
        assert_eq!(gb.generators(), &want[..]);
    }

    #[test]
    fn identity_map_has_zero_kernel() {
        let map = ParametrizationMap::parse("t1\nt2\nt3", Field::Rational).unwrap();
        let gb = implicitize(&map, &WeightVector::standard(3)).unwrap();
        assert!(gb.is_empty());
        assert!(!check_noether_normalization(&gb, 2));
        let toric = ToricData::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(toric_ideal(&toric, Field::Rational).unwrap().is_empty());
    }

    #[test]
    fn toric_matrix_parsing() {
        let t = ToricData::parse("# A\n1 9\n4 6\n5 5\n10 0\n0 10\n").unwrap();
        assert_eq!(t.n(), 5);
        assert_eq!(t.weights().as_slice(), &[10, 10, 10, 10, 10]);
        assert!(matches!(ToricData::parse("1 2\n0 0\n"), Err(Error::InvalidSemigroup(_))));
        assert!(matches!(ToricData::parse("1 2\n3\n"), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(ToricData::parse("1 x\n"), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn toric_ideal_is_binomial_and_homogeneous() {
        let t = ToricData::parse("1 9\n4 6\n5 5\n10 0\n0 10\n").unwrap();
        let gb = toric_ideal(&t, Field::Rational).unwrap();
        assert!(!gb.is_empty());
        for g in gb.generators() {
            assert_eq!(g.len(), 2);
            let (a, b) = (&g.terms()[0].0, &g.terms()[1].0);
            assert!(a.gcd_is_one(b));
        }
        assert!(check_homogeneous(gb.generators(), &t.weights()).unwrap());
        assert!(check_noether_normalization(&gb, 2));
    }

    #[test]
    fn inhomogeneous_detected() {
        let r = Ring::weighted(Field::Rational, WeightVector::standard(2));
        assert!(!check_homogeneous(&[parse_polynomial("x1 + 1", &r).unwrap()], &WeightVector::standard(2)).unwrap());
    }

    #[test]
    fn var_index_scan() {
        assert_eq!(max_var_index("t1^2 + t3*x12", 't'), 3);
        assert_eq!(max_var_index("x12 - 5", 'x'), 12);
        assert_eq!(max_var_index("at2", 't'), 0);
    }
}
