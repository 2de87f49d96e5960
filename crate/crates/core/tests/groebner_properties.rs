use std::sync::Arc;

use noether::groebner::{buchberger, MonomialIdeal};
use noether::hilbert::hilbert_function_oracle;
use noether::ideal::check_noether_normalization;
use noether::resolution::noether_resolution;
use noether::{Field, Monomial, Polynomial, Ring, WeightVector};
use proptest::prelude::*;

/// All monomials of `w`-degree exactly `deg`.
fn monomials_of_degree(w: &[u64], deg: u64) -> Vec<Monomial> {
    fn go(w: &[u64], deg: u64, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == w.len() {
            if deg == 0 {
                out.push(Monomial::new(prefix.clone()));
            }
            return;
        }
        let wi = w[prefix.len()];
        for e in 0..=deg / wi {
            prefix.push(e as u32);
            go(w, deg - e * wi, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(w, deg, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone)]
struct Spec {
    weights: Vec<u64>,
    p: Option<u32>,
    /// (degree, picks into the degree's monomial list, coefficients)
    polys: Vec<(u64, Vec<usize>, Vec<i64>)>,
    powers: Vec<u32>,
}

fn arb_spec() -> impl Strategy<Value = Spec> {
    (3usize..=4, prop::option::of(prop::sample::select(vec![2u32, 3, 101])))
        .prop_flat_map(|(n, p)| {
            let poly = (2u64..=4, prop::collection::vec(any::<usize>(), 2..=3), prop::collection::vec(-3i64..=3, 3));
            (
                prop::collection::vec(1u64..=3, n),
                Just(p),
                prop::collection::vec(poly, 1..=3),
                prop::collection::vec(2u32..=4, n - 2),
            )
        })
        .prop_map(|(weights, p, polys, powers)| Spec { weights, p, polys, powers })
}

fn build(spec: &Spec, with_powers: bool) -> Vec<Polynomial> {
    let field = spec.p.map_or(Field::Rational, Field::Prime);
    let w = WeightVector::new(spec.weights.clone()).unwrap();
    let ring: Arc<Ring> = Ring::weighted(field, w);
    let n = spec.weights.len();
    let mut out = Vec::new();
    for (deg, picks, coeffs) in &spec.polys {
        let monos = monomials_of_degree(&spec.weights, *deg);
        if monos.is_empty() {
            continue;
        }
        let terms = picks
            .iter()
            .zip(coeffs)
            .map(|(&i, &c)| (monos[i % monos.len()].clone(), field.from_i64(if c == 0 { 1 } else { c })))
            .collect();
        let f = Polynomial::from_terms(&ring, terms).unwrap();
        if !f.is_zero() {
            out.push(f);
        }
    }
    if with_powers {
        for (i, &e) in spec.powers.iter().enumerate() {
            out.push(Polynomial::monomial(&ring, Monomial::var(n, i, e)));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_basis_properties(spec in arb_spec(), seed in any::<u64>()) {
        let fs = build(&spec, false);
        prop_assume!(!fs.is_empty());
        let g = buchberger(&fs).unwrap();
        prop_assert!(g.is_groebner().unwrap());
        prop_assert!(g.is_reduced());
        for f in &fs {
            prop_assert!(g.contains(f).unwrap());
        }
        let mut shuffled = fs.clone();
        let k = shuffled.len();
        shuffled.rotate_left((seed as usize) % k);
        if seed % 2 == 1 {
            shuffled.reverse();
        }
        let h = buchberger(&shuffled).unwrap();
        prop_assert_eq!(h.generators(), g.generators());
    }

    #[test]
    fn last_variables_commute_with_initial_ideal(spec in arb_spec(), d in 1usize..=2) {
        let fs = build(&spec, false);
        prop_assume!(!fs.is_empty());
        let ring = fs[0].ring().clone();
        let n = ring.nvars();
        let g = buchberger(&fs).unwrap();
        let mut ext = fs.clone();
        ext.extend((n - d..n).map(|i| Polynomial::var(&ring, i)));
        let lhs = buchberger(&ext).unwrap().initial_ideal();
        let init = g.initial_ideal();
        let rhs = MonomialIdeal::new(n, init.gens().iter().cloned().chain((n - d..n).map(|i| Monomial::var(n, i, 1)))).unwrap();
        prop_assert_eq!(lhs.gens(), rhs.gens());
    }

    #[test]
    fn resolution_series_matches_staircase(spec in arb_spec()) {
        let fs = build(&spec, true);
        let g = buchberger(&fs).unwrap();
        prop_assume!(!g.is_unit() && check_noether_normalization(&g, 2));
        // no nonzero divisor exists when the maximal ideal is associated
        let Ok(res) = noether_resolution(&g, 2, 10) else { return Ok(()) };
        prop_assert!(res.verify_complex().unwrap());
        let oracle: Vec<i64> = hilbert_function_oracle(&res.basis, &res.weights, 20).unwrap().into_iter().map(|x| x as i64).collect();
        prop_assert_eq!(res.hilbert_series().expand(20).unwrap(), oracle.clone());
        prop_assert_eq!(res.hilbert_function(20), oracle);
    }
}
