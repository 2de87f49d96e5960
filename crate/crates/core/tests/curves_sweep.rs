use noether::curves::{in_numerical_span, project, ArithCurve, MonomialCurve, NumericalSemigroup, ProjectionCase};
use noether::semigroup::{macaulayfication, verify_macaulayfication};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn swept_curves() -> Vec<ArithCurve> {
    let mut out = Vec::new();
    for m1 in 1..=6 {
        for d in 1..=3u64 {
            if m1.gcd(&d) != 1 {
                continue;
            }
            for n in 4..=6 {
                out.push(ArithCurve::new(m1, d, n).unwrap());
            }
        }
    }
    out
}

#[test]
fn arithmetic_curves_match_engine() {
    for c in swept_curves() {
        let s = c.curve().semigroup();
        assert_eq!(c.arith_s0(), s.compute_s0(), "{c:?}");
        assert!(s.is_cohen_macaulay());
        assert_eq!(s.lattice_index_d(), c.mn());
        assert_eq!(c.curve().exact_regularity().unwrap(), c.regularity(), "{c:?}");
        c.lemma_min_values().unwrap();
    }
}

#[test]
fn projections_match_engine() {
    for c in swept_curves() {
        for r in 2..c.n() {
            let a = project(&c, r).unwrap();
            let report = a.cross_check().unwrap();
            for check in report.checks.iter().filter(|ch| ch.name != "regularity (case formula)") {
                assert!(check.agree, "{c:?} r={r} case {}: {check:?}", a.case);
            }
            assert_eq!(a.cohen_macaulay, r as u64 <= c.m1() || r == c.n() - 1);
            // the case formula misses the extra degree in two families
            let l = c.l();
            let off = match a.case {
                ProjectionCase::A1 | ProjectionCase::A3 => l > 1 && l < c.n() as u64 - 1,
                ProjectionCase::B2 | ProjectionCase::B3 => c.m1() == 1,
                _ => false,
            };
            let formula = report.get("regularity (case formula)").unwrap();
            assert_eq!(formula.agree, !off, "{c:?} r={r} case {}: {formula:?}", a.case);
            if off {
                let delta = a.standard.regularity - a.regularity_formula;
                assert_eq!(delta.abs(), 1, "{c:?} r={r}");
            }
        }
    }
}

#[test]
fn redundancy_of_m_r() {
    for c in swept_curves() {
        let seq = c.sequence();
        for r in 2..c.n() {
            let others: Vec<u64> = (1..=c.n()).filter(|&i| i != r).map(|i| seq[i - 1]).collect();
            assert_eq!(in_numerical_span(seq[r - 1], &others), c.m_r_redundant(r), "{c:?} r={r}");
        }
    }
}

#[test]
fn finite_gap_sets_match_macaulayfication_gaps() {
    for c in swept_curves() {
        for r in 2..c.n() - 1 {
            let a = project(&c, r).unwrap();
            if a.cohen_macaulay {
                continue;
            }
            let p = a.curve.semigroup();
            let m = macaulayfication(&p);
            assert_eq!(m.generators, c.curve().generators());
            let gaps = verify_macaulayfication(&p, &m).unwrap().gaps.unwrap();
            assert!(a.gaps.is_finite());
            let closed: Vec<Vec<u64>> = a.gaps.enumerate_within(&[u64::MAX / 4, u64::MAX / 4]).into_iter().collect();
            assert_eq!(gaps, closed, "{c:?} r={r}");
        }
    }
}

fn sieve(gens: &[u64], upto: usize) -> Vec<bool> {
    let mut r = vec![false; upto + 1];
    r[0] = true;
    for v in 1..=upto {
        r[v] = gens.iter().any(|&g| g as usize <= v && r[v - g as usize]);
    }
    r
}

fn random_gcd1_set(rng: &mut ChaCha8Rng) -> Vec<u64> {
    loop {
        let k = rng.gen_range(2..=5);
        let mut v: Vec<u64> = (0..k).map(|_| rng.gen_range(1..=60)).collect();
        v.sort();
        v.dedup();
        if v.len() >= 2 && v.iter().fold(0u64, |g, &x| g.gcd(&x)) == 1 {
            return v;
        }
    }
}

#[test]
fn numerical_semigroups_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..50 {
        let gens = random_gcd1_set(&mut rng);
        let r = NumericalSemigroup::new(gens.clone()).unwrap();
        let m = *gens.last().unwrap();
        let ap = r.apery_set(m).unwrap();
        let g = r.frobenius_number();
        let s = sieve(&gens, 4000);
        // Frobenius from the sieve
        let g_sieve = (0..=4000).rev().find(|&x| !s[x]).map_or(-1, |x| x as i64);
        assert_eq!(g, g_sieve, "{gens:?}");
        let mut residues: Vec<u64> = ap.iter().map(|a| a % m).collect();
        residues.sort();
        assert_eq!(residues, (0..m).collect::<Vec<_>>());
        for &a in &ap {
            assert!(s[a as usize] && (a < m || !s[(a - m) as usize]));
        }
        assert_eq!(*ap.iter().max().unwrap() as i64 - m as i64, g);
        let c = MonomialCurve::new(gens.clone()).unwrap();
        let minimal = gens.iter().enumerate().all(|(i, &x)| {
            let others: Vec<u64> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &y)| y).collect();
            !in_numerical_span(x, &others)
        });
        if minimal {
            for tau in 1..=c.n() {
                if let Ok(b) = c.selmer_bound(tau) {
                    assert!(g <= b, "{gens:?} τ={tau}");
                }
            }
        }
        let reg = c.exact_regularity().unwrap();
        if let Ok(b) = c.best_reg_bound_general() {
            assert!(reg <= b, "{gens:?}");
        }
        assert!(reg <= c.lvovsky_bound());
        assert!(reg <= c.glp_bound());
        if c.semigroup().is_cohen_macaulay() {
            for tau in 1..=c.n() {
                if let Ok(b) = c.reg_bound_cm(tau) {
                    assert!(reg <= b, "{gens:?}");
                }
            }
        }
    }
}

#[test]
fn selmer_variant_fails_with_a_redundant_generator() {
    // 21 = 3·7 is redundant, so the semigroup is ⟨7, 55⟩ with g = 7·55 − 7 − 55
    let c = MonomialCurve::new(vec![7, 21, 55]).unwrap();
    assert_eq!(c.numerical_semigroup().frobenius_number(), 323);
    assert_eq!(c.selmer_bound(1).unwrap(), 213);
    let r = NumericalSemigroup::new(vec![7, 55]).unwrap();
    assert_eq!(r.frobenius_number(), 323);
}
