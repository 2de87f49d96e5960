use noether::curves::{project, ArithCurve, MonomialCurve};
use noether::groebner::{buchberger, GroebnerBasis};
use noether::hilbert::hilbert_function_oracle;
use noether::ideal::{check_homogeneous, implicitize as implicitize_map, max_var_index, toric_ideal, ParametrizationMap, ToricData};
use noether::poly::parse_polynomial_lines;
use noether::resolution::noether_resolution;
use noether::semigroup::{
    macaulayfication, multigraded_hilbert_series, verify_macaulayfication, MultigradedResolution, SimplicialSemigroup,
};
use noether::{Ring, WeightVector};
use serde_json::{json, Value};

use crate::report::{self, join, vectors, Report};
use crate::{parse_field, CliError, Opts, SemigroupOp};

const DEFAULT_BOUND: u64 = 20;

fn weights_for(o: &Opts, n: usize) -> Result<WeightVector, CliError> {
    match &o.weights {
        None => Ok(WeightVector::standard(n)),
        Some(w) if w.len() != n => Err(CliError::Validation(format!("--weights has {} entries for {n} variables", w.len()))),
        Some(w) => Ok(WeightVector::new(w.clone())?),
    }
}

/// Reduced basis of a `.ideal` file; the variable count is the largest
/// index used or the length of --weights.
fn ideal_basis(src: &str, o: &Opts) -> Result<GroebnerBasis, CliError> {
    let field = parse_field(&o.field)?;
    let used = max_var_index(src, 'x');
    let n = o.weights.as_ref().map_or(used, |w| w.len().max(used)).max(1);
    let w = weights_for(o, n)?;
    let ring = Ring::weighted(field, w);
    let fs = parse_polynomial_lines(src, &ring)?;
    if fs.is_empty() {
        return Err(CliError::Validation("no polynomials in input".into()));
    }
    Ok(buchberger(&fs)?)
}

fn toric_basis(src: &str, o: &Opts) -> Result<(ToricData, GroebnerBasis), CliError> {
    let t = ToricData::parse(src)?;
    if o.weights.is_some() {
        return Err(CliError::Usage("--weights does not apply to a .mat input (weights are the row sums)".into()));
    }
    let g = toric_ideal(&t, parse_field(&o.field)?)?;
    Ok((t, g))
}

fn basis_report(rep: &mut Report, g: &GroebnerBasis) {
    let w = g.order().weights().map(|w| w.as_slice().to_vec());
    if let Some(w) = &w {
        rep.field("weights", json!(w), join(w, ","));
    }
    rep.field("field", json!(g.ring().field().to_string()), g.ring().field().to_string());
    rep.field("groebner_basis", report::polys(g.generators()), report::poly_lines(g.generators()));
    let init = g.initial_ideal();
    rep.field(
        "initial_ideal",
        Value::Array(init.gens().iter().map(report::exps).collect()),
        format!("({})", join(init.gens(), ", ")),
    );
}

pub fn gb(src: &str, o: &Opts) -> Result<Report, CliError> {
    let g = ideal_basis(src, o)?;
    let mut rep = Report::default();
    basis_report(&mut rep, &g);
    let hom = check_homogeneous(g.generators(), g.order().weights().expect("weighted order"))?;
    rep.field("homogeneous", json!(hom), hom.to_string());
    Ok(rep)
}

pub fn implicitize(src: &str, o: &Opts) -> Result<Report, CliError> {
    let map = ParametrizationMap::parse(src, parse_field(&o.field)?)?;
    let w = weights_for(o, map.n())?;
    let g = implicitize_map(&map, &w)?;
    let mut rep = Report::default();
    rep.field("parameters", json!(map.d()), map.d().to_string());
    basis_report(&mut rep, &g);
    Ok(rep)
}

pub fn toric(src: &str, o: &Opts) -> Result<Report, CliError> {
    let (t, g) = toric_basis(src, o)?;
    let mut rep = Report::default();
    rep.field("matrix", json!(t.rows()), vectors(t.rows()));
    basis_report(&mut rep, &g);
    Ok(rep)
}

/// Basis and dimension for the resolution commands.
fn load_basis(src: &str, is_mat: bool, o: &Opts) -> Result<(GroebnerBasis, usize), CliError> {
    if is_mat {
        let (t, g) = toric_basis(src, o)?;
        if o.dim.is_some_and(|d| d != t.d()) {
            return Err(CliError::Validation(format!("--dim {} differs from the matrix rank {}", o.dim.unwrap(), t.d())));
        }
        Ok((g, t.d()))
    } else {
        let d = o.dim.ok_or_else(|| CliError::Usage("--dim is required for polynomial input".into()))?;
        Ok((ideal_basis(src, o)?, d))
    }
}

pub fn noether(src: &str, is_mat: bool, o: &Opts) -> Result<Report, CliError> {
    let (g, d) = load_basis(src, is_mat, o)?;
    let res = noether_resolution(&g, d, o.tau_max)?;
    let mut rep = Report::default();
    rep.field("dim", json!(d), d.to_string());
    rep.field("weights", json!(res.weights.as_slice()), join(res.weights.as_slice(), ","));
    rep.field("tau", json!(res.tau), res.tau.to_string());
    if res.tau != 0 {
        rep.field("groebner_basis", report::polys(res.basis.generators()), report::poly_lines(res.basis.generators()));
    }
    rep.field(
        "b0",
        Value::Array(res.b0.iter().map(|e| json!({ "monomial": e.monomial.exps(), "shift": e.shift })).collect()),
        res.b0.iter().map(|e| format!("\n  {}  shift {}", e.monomial, e.shift)).collect::<String>(),
    );
    rep.field(
        "b1",
        Value::Array(
            res.b1.iter().map(|e| json!({ "monomial": e.monomial.exps(), "delta": e.delta, "shift": e.shift })).collect(),
        ),
        res.b1.iter().map(|e| format!("\n  {}  delta {}  shift {}", e.monomial, e.delta, e.shift)).collect::<String>(),
    );
    rep.field("shifts0", json!(res.shifts0()), join(&res.shifts0(), ","));
    rep.field("shifts1", json!(res.shifts1()), join(&res.shifts1(), ","));
    let a_vars = res.a_ring().names().to_vec();
    rep.hidden("psi1_variables", json!(a_vars));
    rep.field(
        "psi1",
        Value::Array(res.psi1.iter().map(|row| report::polys(row)).collect()),
        res.psi1.iter().map(|row| format!("\n  [ {} ]", join(row, ", "))).collect::<String>(),
    );
    rep.field("cohen_macaulay", json!(res.is_cohen_macaulay()), res.is_cohen_macaulay().to_string());
    let hs = res.hilbert_series();
    rep.field("hilbert_series", report::hilbert(&hs), hs.to_string());
    match res.regularity() {
        Ok(r) => rep.field("regularity", json!(r), r.to_string()),
        Err(_) => rep.field("regularity", Value::Null, "undefined (non-constant weights)"),
    }
    let ok = res.verify_complex()?;
    rep.field("complex_verified", json!(ok), ok.to_string());
    Ok(rep)
}

fn semigroup_of(src: &str) -> Result<SimplicialSemigroup, CliError> {
    Ok(SimplicialSemigroup::from_toric(&ToricData::parse(src)?)?)
}

pub fn hilbert(src: &str, is_mat: bool, o: &Opts) -> Result<Report, CliError> {
    let mut rep = Report::default();
    if is_mat {
        let s = semigroup_of(src)?;
        let hs = MultigradedResolution::compute(&s)?.hilbert_series();
        rep.field("grading", json!("multigraded"), "multigraded");
        rep.field("hilbert_series", report::hilbert(&hs), hs.to_string());
        let ones = vec![1; s.d()];
        let total = hs.collapse(&ones)?;
        rep.field("total_degree_series", report::hilbert(&total), total.to_string());
        return Ok(rep);
    }
    let (g, d) = load_basis(src, false, o)?;
    let res = noether_resolution(&g, d, o.tau_max)?;
    let bound = o.bound.unwrap_or(DEFAULT_BOUND);
    let hs = res.hilbert_series();
    rep.field("grading", json!("weighted"), "weighted");
    rep.field("hilbert_series", report::hilbert(&hs), hs.to_string());
    let h = res.hilbert_function(bound);
    rep.field("hilbert_function", json!(h), join(&h, ","));
    let oracle = hilbert_function_oracle(&res.basis, &res.weights, bound)?;
    let agrees = oracle.iter().zip(&h).all(|(&a, &b)| a as i64 == b);
    rep.field("oracle_agrees", json!(agrees), agrees.to_string());
    if !agrees {
        return Err(CliError::Compute("resolution disagrees with the staircase count".into()));
    }
    Ok(rep)
}

/// Common row sum of a matrix, if any.
fn constant_degree(s: &SimplicialSemigroup) -> Option<u64> {
    let sums: Vec<u64> = s.generators().iter().map(|g| g.iter().sum()).collect();
    sums.iter().all(|&x| x == sums[0]).then_some(sums[0])
}

pub fn reg(src: &str, is_mat: bool, o: &Opts) -> Result<Report, CliError> {
    let mut rep = Report::default();
    if is_mat {
        let s = semigroup_of(src)?;
        let c = constant_degree(&s).ok_or_else(|| CliError::Validation("matrix rows must have a common sum".into()))?;
        let std = MultigradedResolution::compute(&s)?.to_standard_grading(c)?;
        rep.field("shifts0", json!(std.shifts0), join(&std.shifts0, ","));
        rep.field("shifts1", json!(std.shifts1), join(&std.shifts1, ","));
        rep.field("regularity", json!(std.regularity), std.regularity.to_string());
        return Ok(rep);
    }
    let (g, d) = load_basis(src, false, o)?;
    let res = noether_resolution(&g, d, o.tau_max)?;
    let r = res.regularity()?;
    rep.field("regularity", json!(r), r.to_string());
    Ok(rep)
}

pub fn semigroup(op: SemigroupOp, src: &str) -> Result<Report, CliError> {
    let s = semigroup_of(src)?;
    let mut rep = Report::default();
    rep.field("generators", json!(s.generators()), vectors(s.generators()));
    match op {
        SemigroupOp::S0 => {
            let s0 = s.compute_s0();
            rep.field("size", json!(s0.len()), s0.len().to_string());
            rep.field("s0", json!(s0), vectors(&s0));
        }
        SemigroupOp::S1 => {
            let res = MultigradedResolution::compute(&s)?;
            rep.field("s1", json!(res.s1), vectors(&res.s1));
            let cols: Vec<Value> = res
                .psi1
                .iter()
                .map(|c| {
                    json!({
                        "degree": c.degree,
                        "left": c.left, "left_factor": c.left_factor,
                        "right": c.right, "right_factor": c.right_factor,
                    })
                })
                .collect();
            let text: String = res
                .psi1
                .iter()
                .map(|c| {
                    format!(
                        "\n  degree ({}): t^({}) e({}) - t^({}) e({})",
                        join(&c.degree, ","),
                        join(&c.left_factor, ","),
                        join(&c.left, ","),
                        join(&c.right_factor, ","),
                        join(&c.right, ",")
                    )
                })
                .collect();
            rep.field("psi1", Value::Array(cols), text);
        }
        SemigroupOp::Cm => {
            let s0 = s.compute_s0().len();
            let d = s.lattice_index_d();
            rep.field("s0_size", json!(s0), s0.to_string());
            rep.field("D", json!(d), d.to_string());
            rep.field("cohen_macaulay", json!(s0 as u64 == d), (s0 as u64 == d).to_string());
        }
        SemigroupOp::Index => {
            let idx = s.lattice_index();
            let idx_json = u64::try_from(idx).map_or_else(|_| json!(idx.to_string()), |v| json!(v));
            rep.field("lattice_index", idx_json, idx.to_string());
            rep.field("D", json!(s.lattice_index_d()), s.lattice_index_d().to_string());
        }
        SemigroupOp::Macaulayfy => {
            let m = macaulayfication(&s);
            rep.field("minima", json!(m.minima), vectors(&m.minima));
            rep.field("macaulayfication", json!(m.generators), vectors(&m.generators));
        }
        SemigroupOp::Verify => {
            let m = macaulayfication(&s);
            let v = verify_macaulayfication(&s, &m)?;
            rep.field("macaulayfication", json!(m.generators), vectors(&m.generators));
            rep.field("closure", json!(v.closure), v.closure.to_string());
            rep.field("cohen_macaulay", json!(v.cohen_macaulay), v.cohen_macaulay.to_string());
            rep.field("dimension", json!(v.dimension), v.dimension.to_string());
            match &v.gaps {
                Some(g) => rep.field("gaps", json!(g), vectors(g)),
                None => rep.field("gaps", Value::Null, "not enumerated (d > 2)"),
            }
        }
        SemigroupOp::Hilbert2 => {
            let hs = multigraded_hilbert_series(&s)?;
            rep.field("hilbert_series", report::hilbert(&hs), hs.to_string());
        }
    }
    Ok(rep)
}

fn bound_value(b: noether::Result<i64>) -> (Value, String) {
    match b {
        Ok(v) => (json!(v), v.to_string()),
        Err(e) => (Value::Null, format!("n/a ({e})")),
    }
}

pub fn curve(o: &Opts) -> Result<Report, CliError> {
    let seq = o.seq.clone().expect("checked by caller");
    let c = MonomialCurve::new(seq.clone())?;
    let mut rep = Report::default();
    rep.field("sequence", json!(seq), join(&seq, ","));
    rep.field("generators", json!(c.generators()), vectors(&c.generators()));
    let ns = c.numerical_semigroup();
    let mn = *seq.last().expect("n >= 2");
    let ap = ns.apery_set(mn)?;
    rep.field("apery_set", json!(ap), join(&ap, ","));
    rep.field("frobenius", json!(ns.frobenius_number()), ns.frobenius_number().to_string());
    let cm = c.semigroup().is_cohen_macaulay();
    rep.field("cohen_macaulay", json!(cm), cm.to_string());
    let reg = c.exact_regularity()?;
    rep.field("regularity", json!(reg), reg.to_string());

    let mut bounds = serde_json::Map::new();
    let mut text = String::new();
    let mut put = |name: &str, b: noether::Result<i64>| {
        let (v, t) = bound_value(b);
        bounds.insert(name.to_string(), v);
        text.push_str(&format!("\n  {name}: {t}"));
    };
    for tau in 1..=c.n() {
        put(&format!("selmer_tau{tau}"), c.selmer_bound(tau));
    }
    if cm {
        for tau in 1..=c.n() {
            put(&format!("cm_tau{tau}"), c.reg_bound_cm(tau));
        }
        put("cm_simplified", c.reg_bound_cm_simplified());
    }
    put("general", c.best_reg_bound_general());
    put("general_simplified", c.reg_bound_simplified());
    put("lvovsky", Ok(c.lvovsky_bound()));
    put("glp", Ok(c.glp_bound()));
    rep.field("bounds", Value::Object(bounds), text);

    let arith = ArithCurve::from_sequence(&seq);
    if let Some(a) = &arith {
        let lm = a.lemma_min_values()?;
        rep.field(
            "arithmetic",
            json!({
                "m1": a.m1(), "d": a.d(), "n": a.n(), "q": a.q(), "l": a.l(),
                "regularity": a.regularity(),
                "q_plus_d_plus_1": lm.q_d_1, "q_plus_1": lm.q_1,
            }),
            format!("m1={} d={} n={} q={} l={} regularity={}", a.m1(), a.d(), a.n(), a.q(), a.l(), a.regularity()),
        );
    }
    if let Some(r) = o.project {
        let a = arith.ok_or_else(|| CliError::Validation("--project needs an arithmetic sequence".into()))?;
        let p = project(&a, r)?;
        rep.field("projection", projection_json(&p)?, format!("r = {r}"));
        projection_text(&mut rep, &p)?;
    }
    Ok(rep)
}

fn projection_json(p: &noether::curves::ProjectionAnalysis) -> Result<Value, CliError> {
    let cc = p.cross_check()?;
    let gaps = if p.gaps.is_finite() {
        json!(p.gaps.enumerate_within(&[u64::MAX / 4, u64::MAX / 4]).into_iter().collect::<Vec<_>>())
    } else {
        Value::Null
    };
    Ok(json!({
        "r": p.curve.r(),
        "case": p.case.to_string(),
        "q": p.q,
        "l": p.l,
        "generators": p.curve.generators(),
        "gaps": { "description": p.gaps.to_string(), "finite": p.gaps.is_finite(), "elements": gaps },
        "s0": p.s0,
        "s1": p.s1,
        "cohen_macaulay": p.cohen_macaulay,
        "macaulayfication": p.macaulayfication,
        "lambda": p.lambda,
        "shifts0": p.standard.shifts0,
        "shifts1": p.standard.shifts1,
        "regularity": p.standard.regularity,
        "regularity_formula": p.regularity_formula,
        "cross_check": cc.checks.iter().map(|c| json!({
            "name": c.name, "agree": c.agree, "closed_form": c.closed_form, "engine": c.engine,
        })).collect::<Vec<_>>(),
        "all_agree": cc.all_agree(),
    }))
}

fn projection_text(rep: &mut Report, p: &noether::curves::ProjectionAnalysis) -> Result<(), CliError> {
    rep.line(format!("  case: {}", p.case));
    rep.line(format!("  generators: {}", vectors(&p.curve.generators())));
    rep.line(format!("  gaps: {}", p.gaps));
    rep.line(format!("  s0: {}", vectors(&p.s0)));
    rep.line(format!("  s1: {}", vectors(&p.s1)));
    rep.line(format!("  cohen_macaulay: {}", p.cohen_macaulay));
    rep.line(format!("  macaulayfication: {}", vectors(&p.macaulayfication)));
    rep.line(format!("  shifts0: {}", join(&p.standard.shifts0, ",")));
    rep.line(format!("  shifts1: {}", join(&p.standard.shifts1, ",")));
    rep.line(format!("  regularity: {}", p.standard.regularity));
    rep.line(format!("  regularity (case formula): {}", p.regularity_formula));
    rep.line("  cross-check:");
    for c in p.cross_check()?.checks {
        let mark = if c.agree { "ok  " } else { "DIFF" };
        rep.line(format!("    {mark} {}: closed form {} / engine {}", c.name, c.closed_form, c.engine));
    }
    Ok(())
}
