use std::sync::Arc;

use noether::curves::{project, ArithCurve};
use noether::hilbert::hilbert_function_oracle;
use noether::ideal::{implicitize, toric_ideal, ParametrizationMap, ToricData};
use noether::poly::parse_polynomial;
use noether::resolution::{is_cohen_macaulay, noether_resolution};
use noether::semigroup::{MultigradedResolution, SimplicialSemigroup};
use noether::{Field, Monomial, Ring, WeightVector};

const SURFACE: &str = "t1^3 + t1^2*t2\nt2^4 + t1*t2^3\nt1^2\nt2^2\n";
const P4_CURVE: &str = "t1^3*t2^5 - t1*t2^7\nt1^7*t2\nt1^4*t2^4\nt1^8\nt2^8\n";

fn mono(ring: &Arc<Ring>, s: &str) -> Monomial {
    parse_polynomial(s, ring).unwrap().leading_monomial().unwrap().clone()
}

fn surface(field: Field) -> noether::groebner::GroebnerBasis {
    let map = ParametrizationMap::parse(SURFACE, field).unwrap();
    implicitize(&map, &WeightVector::new(vec![3, 4, 2, 2]).unwrap()).unwrap()
}

#[test]
fn surface_char0_resolution() {
    let g = surface(Field::Rational);
    let ring = g.ring().clone();
    let res = noether_resolution(&g, 2, 100).unwrap();
    assert_eq!(res.tau, 0);
    assert_eq!(res.shifts0(), vec![0, 3, 4, 6, 7, 9]);
    let b1: Vec<(Monomial, u32, u64)> = res.b1.iter().map(|e| (e.monomial.clone(), e.delta, e.shift)).collect();
    assert_eq!(b1, vec![(mono(&ring, "x2"), 2, 8), (mono(&ring, "x1*x2"), 2, 11)]);
    assert!(res.verify_complex().unwrap());
    assert!(res.verify_degrees().unwrap());
    assert_eq!(res.hilbert_series().to_string(), "(1 + t^3 + t^4 + t^6 + t^7 - t^8 + t^9 - t^11)/((1 - t^2)^2)");
    let oracle: Vec<i64> = hilbert_function_oracle(&g, &res.weights, 30).unwrap().into_iter().map(|x| x as i64).collect();
    assert_eq!(res.hilbert_series().expand(30).unwrap(), oracle);
    assert_eq!(oracle[11], 9);
    assert!(!is_cohen_macaulay(&g, 2).unwrap());
}

#[test]
fn surface_char0_psi_column_for_x2() {
    let g = surface(Field::Rational);
    let res = noether_resolution(&g, 2, 100).unwrap();
    let a = res.a_ring().clone();
    let want: Vec<_> = ["1/2*x3^3*x4 - 1/2*x3^2*x4^2", "0", "x3^2", "-1/2*x4", "0", "0"]
        .iter()
        .map(|s| parse_polynomial(s, &a).unwrap())
        .collect();
    let col: Vec<_> = res.psi1.iter().map(|row| row[0].clone()).collect();
    assert_eq!(col, want);
}

#[test]
fn surface_char2_is_cohen_macaulay() {
    let g = surface(Field::Prime(2));
    let ring = g.ring().clone();
    assert_eq!(g.len(), 2);
    assert!(is_cohen_macaulay(&g, 2).unwrap());
    let res = noether_resolution(&g, 2, 100).unwrap();
    assert!(res.b1.is_empty());
    let b0: Vec<Monomial> = res.b0.iter().map(|e| e.monomial.clone()).collect();
    assert_eq!(b0, ["1", "x1", "x2", "x1*x2"].map(|s| mono(&ring, s)));
    assert_eq!(res.hilbert_series().to_string(), "(1 + t^3 + t^4 + t^7)/((1 - t^2)^2)");
}

#[test]
fn p4_curve() {
    let map = ParametrizationMap::parse(P4_CURVE, Field::Rational).unwrap();
    let g = implicitize(&map, &WeightVector::standard(5)).unwrap();
    assert_eq!(g.len(), 10);
    let res = noether_resolution(&g, 2, 100).unwrap();
    assert_eq!(res.b0.len(), 12);
    let mut s1 = res.shifts1();
    s1.sort();
    assert_eq!(s1, vec![3, 4, 4, 4]);
    assert_eq!(res.b1.iter().filter(|e| e.delta == 2).count(), 1);
    assert_eq!(res.hilbert_series().to_string(), "(1 + 3*t + 5*t^2 + 2*t^3 - 3*t^4)/((1 - t)^2)");
    assert_eq!(res.regularity().unwrap(), 3);
    assert!(res.verify_complex().unwrap());
}

#[test]
fn semigroup_example_via_toric_ideal() {
    // the multigraded path and the Gröbner path agree on shifts and regularity
    for rows in [
        vec![vec![1, 9], vec![4, 6], vec![5, 5], vec![10, 0], vec![0, 10]],
        vec![vec![1, 6], vec![5, 2], vec![7, 0], vec![0, 7]],
    ] {
        let s = SimplicialSemigroup::new(rows.clone()).unwrap();
        let deg = rows[0].iter().sum::<u64>();
        let multi = MultigradedResolution::compute(&s).unwrap();
        let std = multi.to_standard_grading(deg).unwrap();
        let g = toric_ideal(&ToricData::new(rows).unwrap(), Field::Rational).unwrap();
        let res = noether_resolution(&g, 2, 100).unwrap();
        let mut s0: Vec<u64> = res.shifts0().iter().map(|s| s / deg).collect();
        let mut s1: Vec<u64> = res.shifts1().iter().map(|s| s / deg).collect();
        s0.sort();
        s1.sort();
        assert_eq!(s0, std.shifts0);
        assert_eq!(s1, std.shifts1);
        assert_eq!(res.b1.is_empty(), s.is_cohen_macaulay());
        assert_eq!(multi.hilbert_series().collapse(&[1, 1]).unwrap().expand(40).unwrap(), res.hilbert_series().expand(40).unwrap());
    }
}

#[test]
fn projection_regularity_matches_groebner_path() {
    for (m1, d, n) in [(1, 1, 4), (2, 1, 4), (1, 2, 4), (3, 2, 5)] {
        let c = ArithCurve::new(m1, d, n).unwrap();
        for r in 2..n {
            let a = project(&c, r).unwrap();
            let t = ToricData::new(a.curve.generators()).unwrap();
            let g = toric_ideal(&t, Field::Rational).unwrap();
            let res = noether_resolution(&g, 2, 100).unwrap();
            let mn = c.mn();
            let reg = res
                .shifts0()
                .iter()
                .map(|&s| (s / mn) as i64)
                .chain(res.shifts1().iter().map(|&s| (s / mn) as i64 - 1))
                .max()
                .unwrap();
            assert_eq!(reg, a.standard.regularity, "m1={m1} d={d} n={n} r={r}");
        }
    }
}
