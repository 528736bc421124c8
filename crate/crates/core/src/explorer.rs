//! Windowed linear algebra over `F_p` on the isotypic module: spans of
//! Hecke-generated submodules, transporter words between basis functions,
//! and the certificate that a cyclic submodule misses an infinite family of
//! basis functions.
//!
//! Submodules are infinite dimensional, so every span is truncated to a
//! [`WindowSpec`]. Orbit vectors whose support leaves the window are kept in
//! an out-of-window ledger instead of the echelon basis; enlarging the window
//! can only add vectors.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::action::{act_word, BasisFunction, ModuleVector, WeightConfig};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::hecke::{CharacterCase, Generator, OperatorWord};
use crate::lattice::{is_proper, s_omega_contains, LatticeVec, WindowSpec};
use crate::weyl::WeylElem;

/// A subspace in reduced row-echelon form, rows keyed by their pivot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanBasis {
    window: WindowSpec,
    field: PrimeField,
    rows: BTreeMap<BasisFunction, ModuleVector>,
    out_of_window: Vec<ModuleVector>,
}

impl SpanBasis {
    pub fn new(window: WindowSpec, field: PrimeField) -> Self {
        Self {
            window,
            field,
            rows: BTreeMap::new(),
            out_of_window: Vec::new(),
        }
    }

    pub fn window(&self) -> WindowSpec {
        self.window
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &ModuleVector> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &BasisFunction> {
        self.rows.keys()
    }

    pub fn out_of_window(&self) -> &[ModuleVector] {
        &self.out_of_window
    }

    fn check_window(&self, v: &ModuleVector) -> Result<()> {
        if v.within(&self.window) {
            Ok(())
        } else {
            Err(Error::OutsideWindow(v.to_string()))
        }
    }

    fn reduce(&self, v: &ModuleVector) -> ModuleVector {
        let mut r = v.clone();
        // rows are fully reduced, so clearing pivots in any order terminates
        loop {
            let hit = r
                .terms()
                .find(|(k, _)| self.rows.contains_key(*k))
                .map(|(k, c)| (k.clone(), c));
            match hit {
                None => return r,
                Some((k, c)) => r = r.sub(&self.rows[&k].scale(c)),
            }
        }
    }

    /// Add `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &ModuleVector) -> Result<bool> {
        self.check_window(v)?;
        let r = self.reduce(v);
        if r.is_zero() {
            return Ok(false);
        }
        let r = r.monic();
        let pivot = r.leading().unwrap().0.clone();
        for row in self.rows.values_mut() {
            let c = row.coefficient(&pivot);
            if c != 0 {
                *row = row.sub(&r.scale(c));
            }
        }
        self.rows.insert(pivot, r);
        Ok(true)
    }

    fn record_outside(&mut self, v: ModuleVector) {
        self.out_of_window.push(v);
    }
}

/// Whether `v` lies in the span; `v` must be supported inside the window.
pub fn membership(v: &ModuleVector, s: &SpanBasis) -> Result<bool> {
    s.check_window(v)?;
    Ok(s.reduce(v).is_zero())
}

/// `dim(A ∩ B)` for two spans over the same window.
pub fn intersection_dim(a: &SpanBasis, b: &SpanBasis) -> Result<usize> {
    let mut sum = a.clone();
    for row in b.rows() {
        sum.insert(row)?;
    }
    Ok(a.dim() + b.dim() - sum.dim())
}

/// The two words realizing the translations `(-1, 0)` and `(-1, -1)` on
/// `S_Id` in each case.
pub fn translators(case: CharacterCase) -> [OperatorWord; 2] {
    use Generator::*;
    let w = |letters: &[Generator]| OperatorWord::new(case, letters.to_vec()).unwrap();
    match case {
        CharacterCase::Iwahori => [
            w(&[Gamma, Omega1, Gamma, Omega1]),
            w(&[Gamma, Omega1, Gamma, Gamma, Omega1, Gamma]),
        ],
        CharacterCase::SemiRegular => [w(&[Omega1T0m1, Omega1]), w(&[Omega1T0m1, Omega1T0m1])],
        CharacterCase::Regular => [w(&[Tm10]), w(&[Tm1m1])],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureMode {
    /// Words in the two `S_Id` translators of the case.
    Composite,
    /// Words in the raw generators of the case.
    RawWords,
}

impl ClosureMode {
    pub fn default_for(case: CharacterCase) -> Self {
        match case {
            CharacterCase::Iwahori => Self::Composite,
            _ => Self::RawWords,
        }
    }
}

fn alphabet(case: CharacterCase, mode: ClosureMode) -> Vec<OperatorWord> {
    match mode {
        ClosureMode::Composite => translators(case).to_vec(),
        ClosureMode::RawWords => case
            .alphabet()
            .iter()
            .map(|&g| OperatorWord::new(case, vec![g]).unwrap())
            .collect(),
    }
}

/// Span of `{g | w}` over generators `g` and words `w` of at most `max_len`
/// letters, truncated to the window. Uses [`ClosureMode::default_for`].
pub fn span_closure(
    gens: &[ModuleVector],
    cfg: &WeightConfig,
    window: WindowSpec,
    max_len: usize,
) -> Result<SpanBasis> {
    span_closure_with_mode(gens, cfg, window, max_len, ClosureMode::default_for(cfg.case))
}

pub fn span_closure_with_mode(
    gens: &[ModuleVector],
    cfg: &WeightConfig,
    window: WindowSpec,
    max_len: usize,
    mode: ClosureMode,
) -> Result<SpanBasis> {
    if max_len < 1 {
        return Err(Error::Domain("max_len must be at least 1".into()));
    }
    let letters = alphabet(cfg.case, mode);
    let mut span = SpanBasis::new(window, cfg.field);
    let mut seen: BTreeSet<ModuleVector> = BTreeSet::new();
    let mut frontier = Vec::new();

    let mut visit = |v: ModuleVector, span: &mut SpanBasis, frontier: &mut Vec<ModuleVector>| -> Result<()> {
        if v.is_zero() {
            return Ok(());
        }
        let m = v.monic();
        if seen.insert(m.clone()) {
            if m.within(&window) {
                span.insert(&m)?;
            } else {
                span.record_outside(m.clone());
            }
            frontier.push(m);
        }
        Ok(())
    };

    for g in gens {
        visit(g.clone(), &mut span, &mut frontier)?;
    }
    for _ in 0..max_len {
        let mut next = Vec::new();
        for v in &frontier {
            for w in &letters {
                visit(act_word(w, v, cfg)?, &mut span, &mut next)?;
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(span)
}

/// A word sending `f_{Id,a}` to `f_{Id,a*}` for `a*` proper to `a` in `S_Id`:
/// `m` copies of the `(-1, 0)` translator followed by `n` copies of the
/// `(-1, -1)` translator.
pub fn find_transporter(a: &LatticeVec, a_star: &LatticeVec, case: CharacterCase) -> Result<OperatorWord> {
    if a.rank() != 3 || a_star.rank() != 3 {
        return Err(Error::UnsupportedRank(a.rank().max(a_star.rank())));
    }
    let id = WeylElem::identity(3);
    if !is_proper(&id, a_star, a)? {
        return Err(Error::Domain(format!("{a_star} is not proper to {a} in S_Id")));
    }
    let m = (a_star.0[1] - a_star.0[0]) - (a.0[1] - a.0[0]);
    let n = a.0[1] - a_star.0[1];
    debug_assert!(m >= 0 && n >= 0);
    let [t1, t2] = translators(case);
    Ok(t1.pow(m as usize).then(&t2.pow(n as usize)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

pub const COROLLARY_SCHEMA: &str = "corollary-report/v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub schema: &'static str,
    pub generator: LatticeVec,
    pub case: CharacterCase,
    /// `c_{sigma,Id}` as an integer mod p, where the case has one.
    pub c: Option<u32>,
    pub p: u32,
    pub window: i64,
    pub mode: ClosureMode,
    pub max_len: usize,
    pub dim_m: usize,
    pub dim_m2: usize,
    pub dim_intersection: usize,
    pub expected_dim_m2: usize,
    pub verdict: Verdict,
}

/// Certificate that the cyclic submodule `M` generated by `f_{Id,a}` meets
/// `M'' = span{f_{Id,(x, a2+1)} : x <= a2+1}` trivially inside the window.
pub fn corollary_certificate(a: &LatticeVec, cfg: &WeightConfig, window: WindowSpec) -> Result<CorollaryReport> {
    corollary_certificate_with_mode(a, cfg, window, ClosureMode::default_for(cfg.case))
}

pub fn corollary_certificate_with_mode(
    a: &LatticeVec,
    cfg: &WeightConfig,
    window: WindowSpec,
    mode: ClosureMode,
) -> Result<CorollaryReport> {
    if a.rank() != 3 {
        return Err(Error::UnsupportedRank(a.rank()));
    }
    let id = WeylElem::identity(3);
    let (a1, a2) = (a.0[0], a.0[1]);
    if !s_omega_contains(&id, a) || a1 >= a2 || a2 >= -1 {
        return Err(Error::Domain(format!(
            "generator {a} must satisfy a1 < a2 < -1 (in S_Id)"
        )));
    }
    if !window.contains(a) {
        return Err(Error::Domain(format!("generator {a} lies outside the window")));
    }
    let max_len = match mode {
        ClosureMode::Composite => 4 * window.bound as usize,
        // the longest translator has six letters
        ClosureMode::RawWords => 12 * window.bound as usize,
    }
    .max(1);
    let gen = ModuleVector::basis(BasisFunction::new(id.clone(), a.clone())?, cfg.field);
    let m = span_closure_with_mode(&[gen], cfg, window, max_len, mode)?;

    let mut m2 = SpanBasis::new(window, cfg.field);
    for x in -window.bound..=a2 + 1 {
        let f = BasisFunction::new(id.clone(), LatticeVec(vec![x, a2 + 1]))?;
        m2.insert(&ModuleVector::basis(f, cfg.field))?;
    }
    let dim_intersection = intersection_dim(&m, &m2)?;
    let expected = (window.bound + a2 + 2).max(0) as usize;
    let verdict = if dim_intersection == 0 && m2.dim() == expected {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(CorollaryReport {
        schema: COROLLARY_SCHEMA,
        generator: a.clone(),
        case: cfg.case,
        c: cfg.constants().get(&id).copied(),
        p: cfg.field.characteristic(),
        window: window.bound,
        mode,
        max_len,
        dim_m: m.dim(),
        dim_m2: m2.dim(),
        dim_intersection,
        expected_dim_m2: expected,
        verdict,
    })
}
