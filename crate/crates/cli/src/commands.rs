use std::collections::{BTreeMap, BTreeSet};

use anyhow::{anyhow, bail, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use iwahori_core::action::{act_t_gamma, act_t_omega1, act_word, composite_table, window_basis};
use iwahori_core::explorer::{corollary_certificate, find_transporter, translators, Verdict};
use iwahori_core::hecke::relations;
use iwahori_core::lattice::{
    classify, entry_exponent, is_proper, partition_report, s_omega_contains, table_n3_mismatches,
};
use iwahori_core::oracle::sample::{random_i1, random_k};
use iwahori_core::oracle::{
    classify_kzti1, entry_exponent_bruteforce, hecke_action_bruteforce_trivial, s_omega_bruteforce, verify_claims,
    GMat, TrivialOp, CLAIMS_Q2,
};
use iwahori_core::{
    BasisFunction, CharacterCase, LatticeVec, ModuleVector, OperatorWord, PrimeField, WeightConfig, WeylElem,
    WindowSpec,
};

use crate::config::{c_label, RunConfig};
use crate::report::{Check, Report};

/// Number of seeded coset-invariance samples in the oracle suite.
pub const SPOT_CHECKS: usize = 16;

/// Run `f` over `items` and stop at the first counterexample or error.
fn check_each<T>(name: String, items: &[T], mut f: impl FnMut(&T) -> iwahori_core::Result<Option<String>>) -> Check {
    for it in items {
        match f(it) {
            Ok(None) => {}
            Ok(Some(d)) => return Check::fail(name, items.len(), d),
            Err(e) => return Check::error(name, items.len(), e.to_string()),
        }
    }
    Check::pass(name, items.len())
}

fn weight(case: CharacterCase, field: PrimeField, c: Option<i64>) -> Result<WeightConfig> {
    Ok(WeightConfig::new(case, field, c.unwrap_or(0))?)
}

fn basis_vector(a: &LatticeVec, field: PrimeField) -> iwahori_core::Result<ModuleVector> {
    Ok(ModuleVector::basis(
        BasisFunction::new(WeylElem::identity(3), a.clone())?,
        field,
    ))
}

fn word_text(w: &OperatorWord) -> String {
    w.to_string()
}

pub fn cmd_partition(cfg: &RunConfig, n: usize) -> Result<Report> {
    if n < 2 {
        bail!("rank must be at least 2, got {n}");
    }
    let window = cfg.window(5)?;
    let rep = partition_report(window, n);
    let mut checks = vec![
        Check::from_outcome(
            "disjoint cover",
            rep.points,
            rep.violations
                .first()
                .map(|(a, ws)| format!("{a} lies in {} sets", ws.len())),
        ),
        Check::from_outcome(
            "classify",
            rep.points,
            rep.classify_mismatches
                .first()
                .map(|a| format!("classify{a} = {}", classify(a).one_line())),
        ),
    ];
    if n == 3 {
        let bad = table_n3_mismatches(window);
        checks.push(Check::from_outcome(
            "printed inequalities",
            rep.points * 6,
            bad.first().map(|(w, a)| format!("S_{} at {a}", w.one_line())),
        ));
    }
    let group = WeylElem::all(n);
    let pts = window.points(n);
    checks.push(check_each("exponent antisymmetry".into(), &pts, |a| {
        for w in &group {
            for i in 1..=n {
                for j in (1..=n).filter(|&j| j != i) {
                    let s = entry_exponent(w, a, i, j)? + entry_exponent(w, a, j, i)?;
                    if s != 1 {
                        return Ok(Some(format!("l_{i}{j} + l_{j}{i} = {s} for {} at {a}", w.one_line())));
                    }
                }
            }
        }
        Ok(None)
    }));
    let sizes: BTreeMap<String, usize> = rep.class_sizes.iter().map(|(w, c)| (w.one_line(), *c)).collect();
    let data = json!({
        "rank": n,
        "points": rep.points,
        "classes": rep.nonempty_classes(),
        "class_sizes": sizes,
        "violations": rep.violations.len(),
    });
    Ok(Report::new("partition", cfg.echo(&[window]), checks, data))
}

pub fn cmd_act(cfg: &RunConfig, word: &str, basis: &str) -> Result<Report> {
    let case = cfg.case.ok_or_else(|| anyhow!("act needs --case"))?;
    let field = cfg.field();
    let wc = weight(case, field, cfg.c)?;
    let w = OperatorWord::parse(case, word)?;
    let v = ModuleVector::parse(field, basis)?;
    let out = act_word(&w, &v, &wc)?;
    let checks = vec![Check::pass("act", 1).with_detail(out.to_string())];
    let data = json!({
        "case": case.as_str(),
        "word": word_text(&w),
        "input": v.to_string(),
        "output": out.to_string(),
    });
    Ok(Report::new("act", cfg.echo(&[]), checks, data))
}

pub fn cmd_relations(cfg: &RunConfig) -> Result<Report> {
    let window = cfg.window(6)?;
    let field = cfg.field();
    let mut checks = Vec::new();
    for case in cfg.cases() {
        let basis = window_basis(case, &window);
        for c in cfg.c_values(case) {
            let wc = weight(case, field, c)?;
            for rule in relations(case).rules {
                let lhs = OperatorWord::new(case, rule.lhs.clone())?;
                let rhs = OperatorWord::new(case, rule.rhs.clone())?;
                let s = field.from_i64(rule.scalar);
                let name = format!("{case}{}: {rule}", c_label(c));
                checks.push(check_each(name, &basis, |f| {
                    let v = ModuleVector::basis(f.clone(), field);
                    let l = act_word(&lhs, &v, &wc)?;
                    let r = act_word(&rhs, &v, &wc)?.scale(s);
                    Ok((l != r).then(|| format!("{f}: {l} vs {r}")))
                }));
            }
            if case != CharacterCase::Iwahori {
                continue;
            }
            for region in WeylElem::all(3) {
                let pts: Vec<&BasisFunction> = basis.iter().filter(|f| f.omega == region).collect();
                for comp in composite_table(&region)? {
                    let name = format!(
                        "{case}{}: {} on S_{} translates by {}",
                        c_label(c),
                        comp.word,
                        region.one_line(),
                        comp.translation
                    );
                    checks.push(check_each(name, &pts, |f| {
                        let out = act_word(&comp.word, &ModuleVector::basis((*f).clone(), field), &wc)?;
                        let target = BasisFunction::new(region.clone(), f.a.add(&comp.translation))?;
                        let want = ModuleVector::basis(target, field);
                        Ok((out != want).then(|| format!("{f}: got {out}, want {want}")))
                    }));
                }
            }
        }
    }
    let data = json!({
        "basis_sizes": cfg.cases().iter().map(|&c| (c.as_str(), window_basis(c, &window).len())).collect::<BTreeMap<_, _>>(),
    });
    Ok(Report::new("relations", cfg.echo(&[window]), checks, data))
}

/// Points of the window reachable from `a` by the two `S_Id` translators,
/// following only exact single-term images.
fn reachable(a: &LatticeVec, wc: &WeightConfig, window: &WindowSpec) -> iwahori_core::Result<BTreeSet<LatticeVec>> {
    let steps = translators(wc.case);
    let id = WeylElem::identity(3);
    let mut seen = BTreeSet::from([a.clone()]);
    let mut stack = vec![a.clone()];
    while let Some(x) = stack.pop() {
        for t in &steps {
            let out = act_word(t, &basis_vector(&x, wc.field)?, wc)?;
            let mut terms = out.terms();
            if let (Some((k, 1)), None) = (terms.next(), terms.next()) {
                if k.omega == id && window.contains(&k.a) && seen.insert(k.a.clone()) {
                    stack.push(k.a.clone());
                }
            }
        }
    }
    Ok(seen)
}

pub fn cmd_theorem(cfg: &RunConfig, pair: Option<(LatticeVec, LatticeVec)>) -> Result<Report> {
    let field = cfg.field();
    let id = WeylElem::identity(3);
    if let Some((a, a_star)) = pair {
        let mut checks = Vec::new();
        let mut words = BTreeMap::new();
        for case in cfg.cases() {
            let word = find_transporter(&a, &a_star, case)?;
            let wc = weight(case, field, cfg.c)?;
            let out = act_word(&word, &basis_vector(&a, field)?, &wc)?;
            let want = basis_vector(&a_star, field)?;
            let name = format!("{case}: {a} -> {a_star}");
            let check = if out == want {
                Check::pass(name, 1)
            } else {
                Check::fail(name, 1, format!("got {out}"))
            };
            checks.push(check.with_detail(word_text(&word)));
            words.insert(case.as_str(), word_text(&word));
        }
        let data = json!({ "from": a.to_string(), "to": a_star.to_string(), "words": words });
        return Ok(Report::new("theorem", cfg.echo(&[]), checks, data));
    }

    let window = cfg.window(6)?;
    let pts: Vec<LatticeVec> = window
        .points(3)
        .into_iter()
        .filter(|a| s_omega_contains(&id, a))
        .collect();
    let mut proper: Vec<(LatticeVec, LatticeVec)> = Vec::new();
    for a in &pts {
        for b in &pts {
            if is_proper(&id, b, a)? {
                proper.push((a.clone(), b.clone()));
            }
        }
    }
    let mut checks = Vec::new();
    let mut runs = Vec::new();
    for case in cfg.cases() {
        for c in cfg.c_values(case) {
            let wc = weight(case, field, c)?;
            let mut empty = 0;
            checks.push(check_each(
                format!("{case}{}: transporters", c_label(c)),
                &proper,
                |(a, b)| {
                    let word = find_transporter(a, b, case)?;
                    empty += word.is_empty() as usize;
                    let out = act_word(&word, &basis_vector(a, field)?, &wc)?;
                    let want = basis_vector(b, field)?;
                    Ok((out != want).then(|| format!("{a} -> {b} by {word}: got {out}")))
                },
            ));
            checks.push(check_each(
                format!("{case}{}: reachability is properness", c_label(c)),
                &pts,
                |a| {
                    let reach = reachable(a, &wc, &window)?;
                    for b in &pts {
                        if reach.contains(b) != is_proper(&id, b, a)? {
                            return Ok(Some(format!("{a} -> {b}: reachable {}", reach.contains(b))));
                        }
                    }
                    Ok(None)
                },
            ));
            runs.push(json!({
                "case": case.as_str(),
                "c": c.map(|c| field.from_i64(c)),
                "empty_words": empty,
            }));
        }
    }
    let data = json!({
        "points": pts.len(),
        "pairs": pts.len() * pts.len(),
        "proper_pairs": proper.len(),
        "runs": runs,
    });
    Ok(Report::new("theorem", cfg.echo(&[window]), checks, data))
}

pub fn cmd_corollary(cfg: &RunConfig, a: &LatticeVec) -> Result<Report> {
    let field = cfg.field();
    let mut windows = cfg.windows_or(&[8])?;
    windows.sort_by_key(|w| w.bound);
    windows.dedup();
    let mut checks = Vec::new();
    let mut reports = Vec::new();
    for case in cfg.cases() {
        for c in cfg.c_values(case) {
            let wc = weight(case, field, c)?;
            let mut series = Vec::new();
            for &w in &windows {
                let r = corollary_certificate(a, &wc, w)?;
                let name = format!("{case}{} B={}", c_label(c), w.bound);
                let detail = format!(
                    "dim M = {}, dim M'' = {} (expected {}), dim M∩M'' = {}",
                    r.dim_m, r.dim_m2, r.expected_dim_m2, r.dim_intersection
                );
                checks.push(match r.verdict {
                    Verdict::Pass => Check::pass(name, 1).with_detail(detail),
                    Verdict::Fail => Check::fail(name, 1, detail),
                });
                series.push((r.dim_m2, r.dim_intersection));
                reports.push(serde_json::to_value(&r)?);
            }
            if windows.len() > 1 {
                let grows = series.windows(2).all(|p| p[1].0 > p[0].0);
                let disjoint = series.iter().all(|s| s.1 == 0);
                let dims: Vec<String> = series.iter().map(|s| s.0.to_string()).collect();
                let name = format!("{case}{}: dim M'' grows, M∩M'' stays 0", c_label(c));
                let detail = format!("dim M'' = {}", dims.join(", "));
                checks.push(if grows && disjoint {
                    Check::pass(name, series.len()).with_detail(detail)
                } else {
                    Check::fail(name, series.len(), detail)
                });
            }
        }
    }
    let data = json!({ "generator": a.to_string(), "reports": reports });
    Ok(Report::new("corollary", cfg.echo(&windows), checks, data))
}

fn claim_checks(text: &str, q: u32, d: usize) -> Vec<Check> {
    verify_claims(text, q, d)
        .into_iter()
        .map(|r| {
            let name = format!("claim line {}: {}", r.line, r.claim);
            match (&r.error, r.pass) {
                (Some(e), _) => Check::error(name, 1, e.clone()),
                (None, true) => Check::pass(name, 1),
                (None, false) => Check::fail(
                    name,
                    1,
                    format!(
                        "expected {}, observed {}",
                        r.expected.as_deref().unwrap_or("?"),
                        r.observed.as_deref().unwrap_or("?")
                    ),
                ),
            }
        })
        .collect()
}

/// With a claim file, verify only its claims. Otherwise run the full suite:
/// sets `S_w` and entry exponents against explicit matrices, the trivial
/// weight Hecke action against the closed forms, seeded coset-invariance
/// samples and the bundled claim corpus.
pub fn cmd_oracle(cfg: &RunConfig, claims: Option<&str>) -> Result<Report> {
    let q = cfg.q;
    let d = cfg.precision;
    if let Some(text) = claims {
        let checks = claim_checks(text, q, d);
        let data = json!({ "claims": checks.len() });
        return Ok(Report::new("oracle", cfg.echo(&[]), checks, data));
    }
    let window = cfg.oracle_window()?;
    let fq = PrimeField::new(q)?;
    let pts = window.points(3);
    let mut checks = Vec::new();

    for w in WeylElem::all(3) {
        checks.push(check_each(format!("S_{} membership", w.one_line()), &pts, |a| {
            let brute = s_omega_bruteforce(&w, a, q, d)?;
            let closed = s_omega_contains(&w, a);
            Ok((brute != closed).then(|| format!("{a}: matrices say {brute}, inequalities say {closed}")))
        }));
    }
    for w in WeylElem::all(3) {
        checks.push(check_each(format!("S_{} entry exponents", w.one_line()), &pts, |a| {
            for i in 1..=3 {
                for j in (1..=3).filter(|&j| j != i) {
                    let brute = entry_exponent_bruteforce(&w, a, i, j, q)?;
                    let closed = entry_exponent(&w, a, i, j)?;
                    if brute != closed {
                        return Ok(Some(format!("{a} ({i},{j}): {brute} vs {closed}")));
                    }
                }
            }
            Ok(None)
        }));
    }

    let basis = window_basis(CharacterCase::Iwahori, &window);
    let wc = WeightConfig::new(CharacterCase::Iwahori, fq, 0)?;
    for op in [TrivialOp::Omega1, TrivialOp::Gamma] {
        checks.push(check_each(
            format!("hecke {} trivial weight", op.as_str()),
            &basis,
            |f| {
                let bound = 2 * f.a.max_abs() + 2;
                let brute = hecke_action_bruteforce_trivial(op, f, q, bound, d)?;
                let v = ModuleVector::basis(f.clone(), fq);
                let closed = match op {
                    TrivialOp::Omega1 => act_t_omega1(&v, &wc)?,
                    TrivialOp::Gamma => act_t_gamma(&v, &wc)?,
                };
                Ok((brute != closed).then(|| format!("{f}: coset sum {brute}, closed form {closed}")))
            },
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let samples: Vec<(LatticeVec, GMat)> = (0..SPOT_CHECKS)
        .map(|_| {
            let a = pts[rng.gen_range(0..pts.len())].clone();
            let z = rng.gen_range(-2..=2);
            let g = random_k(&mut rng, fq, 3, 2)
                .mul(&GMat::t_diag(&a, fq).shift(z))
                .mul(&random_i1(&mut rng, fq, 3, 2));
            (a, g)
        })
        .collect();
    checks.push(check_each(
        format!("coset invariance seed {}", cfg.seed),
        &samples,
        |(a, g)| {
            let found = classify_kzti1(g, window.bound, d)?;
            Ok((&found != a).then(|| format!("k z t_{a} i classified as {found}")))
        },
    ));

    let corpus = claim_checks(CLAIMS_Q2, q, d);
    let n_claims = corpus.len();
    checks.extend(corpus);
    let data = json!({
        "points": pts.len(),
        "basis": basis.len(),
        "spot_checks": SPOT_CHECKS,
        "claims": n_claims,
    });
    Ok(Report::new("oracle", cfg.echo(&[window]), checks, data))
}

/// Everything at its defaults, in a fixed order.
pub fn full_suite(cfg: &RunConfig) -> Result<Vec<Report>> {
    Ok(vec![
        cmd_partition(cfg, 3)?,
        cmd_relations(cfg)?,
        cmd_theorem(cfg, None)?,
        cmd_corollary(cfg, &LatticeVec(vec![-3, -2]))?,
        cmd_oracle(cfg, None)?,
    ])
}

pub fn parse_point(s: &str) -> Result<LatticeVec> {
    let a: LatticeVec = s.parse()?;
    if a.dim() != 2 {
        bail!("expected a point (a1,a2), got {s}");
    }
    Ok(a)
}
