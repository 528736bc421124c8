//! The basis `f_{w,a}` of the pro-p-Iwahori invariants of the compact
//! induction and the right action of the Hecke generators on it (rank 3).
//!
//! All actions are monomial: a basis function goes to a scalar multiple of a
//! basis function or to zero. Sparse vectors keep their keys in the canonical
//! order `(w in one-line notation, a_1, a_2)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::hecke::{CharacterCase, Generator, HeckeElement, OperatorWord};
use crate::lattice::{s_omega_contains, LatticeVec, WindowSpec};
use crate::weyl::WeylElem;

const RANK: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisFunction {
    pub omega: WeylElem,
    pub a: LatticeVec,
}

impl BasisFunction {
    pub fn new(omega: WeylElem, a: LatticeVec) -> Result<Self> {
        if omega.rank() != a.rank() {
            return Err(Error::RankMismatch {
                expected: omega.rank(),
                found: a.rank(),
            });
        }
        if !s_omega_contains(&omega, &a) {
            return Err(Error::Domain(format!("{a} is not in S_{omega}")));
        }
        Ok(Self { omega, a })
    }

    /// The basis function supported on `KZ t_a I_1` in the Weyl class of `a`.
    pub fn at(a: LatticeVec) -> Self {
        Self {
            omega: crate::lattice::classify(&a),
            a,
        }
    }

    pub fn a1(&self) -> i64 {
        self.a.0[0]
    }

    pub fn a2(&self) -> i64 {
        self.a.0[1]
    }
}

impl fmt::Display for BasisFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.omega, self.a)
    }
}

impl std::str::FromStr for BasisFunction {
    type Err = Error;

    /// `213:(-1,-3)` or just `(-1,-3)` (Weyl part inferred).
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((w, a)) => Self::new(w.parse()?, a.parse()?),
            None => Ok(Self::at(s.parse()?)),
        }
    }
}

/// Internal constructor for action outputs; a failed membership check means
/// a closed form is wrong.
fn output_key(omega: WeylElem, a: LatticeVec) -> Result<BasisFunction> {
    if s_omega_contains(&omega, &a) {
        Ok(BasisFunction { omega, a })
    } else {
        Err(Error::Consistency {
            key: format!("{omega}:{a}"),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ModuleVector {
    field: PrimeField,
    terms: BTreeMap<BasisFunction, u32>,
}

impl ModuleVector {
    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(f: BasisFunction, field: PrimeField) -> Self {
        let mut v = Self::zero(field);
        v.add_term(f, 1);
        v
    }

    pub fn from_terms(field: PrimeField, terms: impl IntoIterator<Item = (BasisFunction, i64)>) -> Self {
        let mut v = Self::zero(field);
        for (k, c) in terms {
            v.add_term(k, field.from_i64(c));
        }
        v
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisFunction, u32)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coefficient(&self, key: &BasisFunction) -> u32 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&BasisFunction, u32)> {
        self.terms.iter().next().map(|(k, &c)| (k, c))
    }

    pub fn add_term(&mut self, key: BasisFunction, coeff: u32) {
        let f = self.field;
        let c = f.add(self.coefficient(&key), coeff);
        if c == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "adding vectors over different fields");
        let mut out = self.clone();
        for (k, &c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.field.minus_one()))
    }

    pub fn scale(&self, s: u32) -> Self {
        let f = self.field;
        let mut out = Self::zero(f);
        if !s.is_multiple_of(f.characteristic()) {
            for (k, &c) in &self.terms {
                out.terms.insert(k.clone(), f.mul(c, s));
            }
        }
        out
    }

    /// Scaled so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(c).unwrap()),
        }
    }

    pub fn within(&self, window: &WindowSpec) -> bool {
        self.terms.keys().all(|k| window.contains(&k.a))
    }

    /// Apply a monomial map to every basis key, extending linearly.
    fn map_monomial<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&BasisFunction) -> Result<Option<(i64, BasisFunction)>>,
    {
        let mut out = Self::zero(self.field);
        for (k, &c) in &self.terms {
            if let Some((s, key)) = f(k)? {
                out.add_term(key, self.field.mul(c, self.field.from_i64(s)));
            }
        }
        Ok(out)
    }

    /// Parse the canonical text form (`0`, or `c*w:(a1,a2) + ...`).
    pub fn parse(field: PrimeField, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = Self::zero(field);
        if s == "0" || s.is_empty() {
            return Ok(v);
        }
        for part in s.split(" + ") {
            let (c, key) = match part.split_once('*') {
                Some((c, key)) => (
                    c.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("bad coefficient in {part:?}: {e}")))?,
                    key,
                ),
                None => (1, part),
            };
            v.add_term(key.trim().parse()?, field.from_i64(c));
        }
        Ok(v)
    }
}

impl fmt::Display for ModuleVector {
    /// Canonical text form: terms in key order, coefficients in `1..p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("{c}*{k}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The weight-dependent data: the case and the constants `c_{sigma,w}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightConfig {
    pub case: CharacterCase,
    pub field: PrimeField,
    c_map: BTreeMap<WeylElem, u32>,
}

impl WeightConfig {
    /// Every relevant constant set to `c`, which must be 0 or -1.
    pub fn new(case: CharacterCase, field: PrimeField, c: i64) -> Result<Self> {
        let mut cfg = Self {
            case,
            field,
            c_map: BTreeMap::new(),
        };
        let relevant = match case {
            CharacterCase::Iwahori => vec![WeylElem::identity(RANK), WeylElem::omega2(RANK).pow(2)],
            CharacterCase::SemiRegular => vec![WeylElem::identity(RANK)],
            CharacterCase::Regular => vec![],
        };
        for w in relevant {
            cfg = cfg.with_constant(w, c)?;
        }
        Ok(cfg)
    }

    pub fn with_constant(mut self, omega: WeylElem, c: i64) -> Result<Self> {
        let v = self.field.from_i64(c);
        if v != 0 && v != self.field.minus_one() {
            return Err(Error::InvalidCoefficient {
                value: c,
                reason: "c must be 0 or -1".into(),
            });
        }
        self.c_map.insert(omega, v);
        Ok(self)
    }

    pub fn constant(&self, omega: &WeylElem) -> Result<u32> {
        self.c_map
            .get(omega)
            .copied()
            .ok_or_else(|| Error::Domain(format!("no constant c configured for {omega}")))
    }

    pub fn constants(&self) -> &BTreeMap<WeylElem, u32> {
        &self.c_map
    }
}

fn require_case(cfg: &WeightConfig, allowed: &[CharacterCase], op: &str) -> Result<()> {
    if allowed.contains(&cfg.case) {
        Ok(())
    } else {
        Err(Error::Undefined {
            operator: op.into(),
            case: cfg.case.to_string(),
        })
    }
}

fn require_rank3(k: &BasisFunction) -> Result<()> {
    if k.omega.rank() != RANK {
        return Err(Error::UnsupportedRank(k.omega.rank()));
    }
    Ok(())
}

fn require_isotypic(k: &BasisFunction, case: CharacterCase) -> Result<()> {
    require_rank3(k)?;
    if case.stabilizer(RANK).contains(&k.omega) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{k} is outside the {case} isotypic basis")))
    }
}

/// Left translation by `gamma`: `f_{w,a} -> f_{w w2^{-1}, a^gamma}`.
pub fn act_gamma_left(f: &BasisFunction) -> Result<BasisFunction> {
    require_rank3(f)?;
    let (a1, a2) = (f.a1(), f.a2());
    output_key(
        f.omega.compose(&WeylElem::omega2(RANK).inverse()),
        LatticeVec(vec![1 + a2 - a1, 1 - a1]),
    )
}

/// `f_{w,a} | T_gamma = f_{w w2, (1 - a2, a1 - a2)}`.
pub fn act_t_gamma(v: &ModuleVector, cfg: &WeightConfig) -> Result<ModuleVector> {
    require_case(cfg, &[CharacterCase::Iwahori], "Tg")?;
    v.map_monomial(|k| {
        require_rank3(k)?;
        let key = output_key(
            k.omega.compose(&WeylElem::omega2(RANK)),
            LatticeVec(vec![1 - k.a2(), k.a1() - k.a2()]),
        )?;
        Ok(Some((1, key)))
    })
}

/// `T_{w1}`: swap when `a1 > a2`, the constant `c` when equal, `-1` otherwise.
pub fn act_t_omega1(v: &ModuleVector, cfg: &WeightConfig) -> Result<ModuleVector> {
    require_case(cfg, &[CharacterCase::Iwahori, CharacterCase::SemiRegular], "Tw1")?;
    v.map_monomial(|k| {
        require_isotypic(k, cfg.case)?;
        let (a1, a2) = (k.a1(), k.a2());
        Ok(match a1.cmp(&a2) {
            std::cmp::Ordering::Greater => Some((
                1,
                output_key(k.omega.compose(&WeylElem::omega1(RANK)), LatticeVec(vec![a2, a1]))?,
            )),
            std::cmp::Ordering::Equal => {
                let c = cfg.constant(&k.omega)?;
                (c != 0).then(|| (c as i64, k.clone()))
            }
            std::cmp::Ordering::Less => Some((-1, k.clone())),
        })
    })
}

/// `T_{w1 t_(0,-1)}`: `(a1, a2) -> (a2, a1 - 1)`, alternating `Id <-> w1`.
pub fn act_t_omega1_t0m1(v: &ModuleVector, cfg: &WeightConfig) -> Result<ModuleVector> {
    require_case(cfg, &[CharacterCase::SemiRegular], "Tw1t(0,-1)")?;
    let candidates = CharacterCase::SemiRegular.stabilizer(RANK);
    v.map_monomial(|k| {
        require_isotypic(k, cfg.case)?;
        let b = LatticeVec(vec![k.a2(), k.a1() - 1]);
        let hits: Vec<&WeylElem> = candidates.iter().filter(|w| s_omega_contains(w, &b)).collect();
        if hits.len() != 1 {
            return Err(Error::Consistency {
                key: format!("{b} lies in {} of S_Id, S_w1", hits.len()),
            });
        }
        Ok(Some((1, output_key(hits[0].clone(), b)?)))
    })
}

/// `T_{w1 t_(1,0)}` vanishes on the semi-regular isotypic space.
pub fn act_t_omega1_t10(v: &ModuleVector, cfg: &WeightConfig) -> Result<ModuleVector> {
    require_case(cfg, &[CharacterCase::SemiRegular], "Tw1t(1,0)")?;
    for (k, _) in v.terms() {
        require_isotypic(k, cfg.case)?;
    }
    Ok(ModuleVector::zero(v.field()))
}

/// The six regular-case generators: `T_{t(-1,0)}` and `T_{t(-1,-1)}`
/// translate, the other four vanish.
pub fn act_regular_generator(g: Generator, v: &ModuleVector, cfg: &WeightConfig) -> Result<ModuleVector> {
    require_case(cfg, &[CharacterCase::Regular], g.symbol())?;
    let shift = match g {
        Generator::Tm10 => Some([-1, 0]),
        Generator::Tm1m1 => Some([-1, -1]),
        Generator::T10 | Generator::T01 | Generator::T0m1 | Generator::T11 => None,
        other => {
            return Err(Error::Undefined {
                operator: other.to_string(),
                case: cfg.case.to_string(),
            })
        }
    };
    v.map_monomial(|k| {
        require_isotypic(k, cfg.case)?;
        match shift {
            None => Ok(None),
            Some(d) => Ok(Some((
                1,
                output_key(k.omega.clone(), k.a.add(&LatticeVec(d.to_vec())))?,
            ))),
        }
    })
}

pub fn act_generator(g: Generator, v: &ModuleVector, cfg: &WeightConfig) -> Result<ModuleVector> {
    if !g.belongs_to(cfg.case) {
        return Err(Error::Undefined {
            operator: g.to_string(),
            case: cfg.case.to_string(),
        });
    }
    match g {
        Generator::Gamma => act_t_gamma(v, cfg),
        Generator::Omega1 => act_t_omega1(v, cfg),
        Generator::Omega1T0m1 => act_t_omega1_t0m1(v, cfg),
        Generator::Omega1T10 => act_t_omega1_t10(v, cfg),
        _ => act_regular_generator(g, v, cfg),
    }
}

/// Right action of a word: the leftmost letter acts first.
pub fn act_word(w: &OperatorWord, v: &ModuleVector, cfg: &WeightConfig) -> Result<ModuleVector> {
    if w.case() != cfg.case {
        return Err(Error::Domain(format!(
            "word of the {} case applied with a {} configuration",
            w.case(),
            cfg.case
        )));
    }
    w.letters().iter().try_fold(v.clone(), |acc, &g| {
        if acc.is_zero() {
            Ok(acc)
        } else {
            act_generator(g, &acc, cfg)
        }
    })
}

pub fn act_element(e: &HeckeElement, v: &ModuleVector, cfg: &WeightConfig) -> Result<ModuleVector> {
    let mut out = ModuleVector::zero(v.field());
    for (w, c) in e.terms() {
        out = out.add(&act_word(&w, v, cfg)?.scale(c));
    }
    Ok(out)
}

/// The basis of the `(IZ, chi)`-isotypic space restricted to the window.
pub fn window_basis(case: CharacterCase, window: &WindowSpec) -> Vec<BasisFunction> {
    let weyl = case.stabilizer(RANK);
    let mut out: Vec<BasisFunction> = window
        .points(RANK)
        .into_iter()
        .filter_map(|a| {
            let f = BasisFunction::at(a);
            weyl.contains(&f.omega).then_some(f)
        })
        .collect();
    out.sort();
    out
}

/// A word of the Iwahori presentation together with the translation it
/// realizes on its region `S_w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Composite {
    pub region: WeylElem,
    pub word: OperatorWord,
    pub translation: LatticeVec,
}

/// The two translation composites attached to each of the six regions.
pub fn composite_table(region: &WeylElem) -> Result<Vec<Composite>> {
    use Generator::{Gamma as G, Omega1 as W};
    if region.rank() != RANK {
        return Err(Error::UnsupportedRank(region.rank()));
    }
    let sq = |letters: &[Generator]| {
        OperatorWord::new(CharacterCase::Iwahori, letters.to_vec())
            .unwrap()
            .pow(2)
    };
    let g_w = sq(&[G, W]);
    let g_w_g = sq(&[G, W, G]);
    let w_g = sq(&[W, G]);
    let w_gg = sq(&[W, G, G]);
    let gg_w_gg = sq(&[G, G, W, G, G]);
    let gg_w = sq(&[G, G, W]);
    let pairs: Vec<(OperatorWord, [i64; 2])> = match region.one_line().as_str() {
        "123" => vec![(g_w, [-1, 0]), (g_w_g, [-1, -1])],
        "213" => vec![(w_g, [0, -1]), (g_w_g, [-1, -1])],
        "321" => vec![(w_gg, [1, 0]), (gg_w_gg, [1, 1])],
        "132" => vec![(g_w, [-1, 0]), (gg_w, [0, 1])],
        "312" => vec![(w_gg, [1, 0]), (w_g, [0, -1])],
        "231" => vec![(gg_w, [0, 1]), (gg_w_gg, [1, 1])],
        _ => return Err(Error::UnknownRegion(region.clone())),
    };
    Ok(pairs
        .into_iter()
        .map(|(word, t)| Composite {
            region: region.clone(),
            word,
            translation: LatticeVec(t.to_vec()),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn key(w: &str, a1: i64, a2: i64) -> BasisFunction {
        BasisFunction::new(w.parse().unwrap(), LatticeVec(vec![a1, a2])).unwrap()
    }

    fn vec1(k: BasisFunction, p: u32) -> ModuleVector {
        ModuleVector::basis(k, fp(p))
    }

    fn iwahori(c: i64) -> WeightConfig {
        WeightConfig::new(CharacterCase::Iwahori, fp(5), c).unwrap()
    }

    #[test]
    fn gamma_left_examples() {
        assert_eq!(act_gamma_left(&key("id", -2, -1)).unwrap(), key("w2^2", 2, 3));
        assert_eq!(act_gamma_left(&key("id", 0, 0)).unwrap(), key("w2^2", 1, 1));
        let f = key("w1", -1, -3);
        let back = act_gamma_left(&act_gamma_left(&act_gamma_left(&f).unwrap()).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn t_gamma_examples() {
        let cfg = iwahori(0);
        let out = act_t_gamma(&vec1(key("id", -2, -1), 5), &cfg).unwrap();
        assert_eq!(out, vec1(key("w2", 2, -1), 5));
        let out = act_t_gamma(&vec1(key("id", 0, 0), 5), &cfg).unwrap();
        assert_eq!(out, vec1(key("w2", 1, 0), 5));
        let reg = WeightConfig::new(CharacterCase::Regular, fp(5), 0).unwrap();
        assert!(matches!(
            act_t_gamma(&vec1(key("id", 0, 0), 5), &reg),
            Err(Error::Undefined { .. })
        ));
    }

    #[test]
    fn t_omega1_branches() {
        let cfg = iwahori(0);
        let out = act_t_omega1(&vec1(key("w2", 2, -1), 5), &cfg).unwrap();
        assert_eq!(out, vec1(key("w2w1", -1, 2), 5));
        let out = act_t_omega1(&vec1(key("id", -2, -1), 5), &cfg).unwrap();
        assert_eq!(out, vec1(key("id", -2, -1), 5).scale(4));
        assert!(act_t_omega1(&vec1(key("id", -1, -1), 5), &cfg).unwrap().is_zero());
        let out = act_t_omega1(&vec1(key("id", -1, -1), 5), &iwahori(-1)).unwrap();
        assert_eq!(out, vec1(key("id", -1, -1), 5).scale(4));
        let reg = WeightConfig::new(CharacterCase::Regular, fp(5), 0).unwrap();
        assert!(act_t_omega1(&vec1(key("id", 0, 0), 5), &reg).is_err());
    }

    #[test]
    fn semi_regular_translator() {
        let cfg = WeightConfig::new(CharacterCase::SemiRegular, fp(3), 0).unwrap();
        let v = vec1(key("id", -2, -1), 3);
        let once = act_t_omega1_t0m1(&v, &cfg).unwrap();
        assert_eq!(once, vec1(key("w1", -1, -3), 3));
        let twice = act_t_omega1_t0m1(&once, &cfg).unwrap();
        assert_eq!(twice, vec1(key("id", -3, -2), 3));
        let three = v.add(&vec1(key("id", 0, 0), 3)).add(&vec1(key("w1", 0, -1), 3));
        assert!(act_t_omega1_t10(&three, &cfg).unwrap().is_zero());
        assert!(act_t_omega1_t10(&ModuleVector::zero(fp(3)), &cfg).unwrap().is_zero());
        // keys outside {Id, w1} are rejected
        assert!(act_t_omega1_t0m1(&vec1(key("w2", 1, 0), 3), &cfg).is_err());
    }

    #[test]
    fn regular_generators() {
        let cfg = WeightConfig::new(CharacterCase::Regular, fp(7), 0).unwrap();
        let v = vec1(key("id", -2, -1), 7);
        let out = act_regular_generator(Generator::Tm10, &v, &cfg).unwrap();
        assert_eq!(out, vec1(key("id", -3, -1), 7));
        assert!(act_regular_generator(Generator::T11, &v, &cfg).unwrap().is_zero());
        let out = act_regular_generator(Generator::Tm1m1, &vec1(key("id", 0, 0), 7), &cfg).unwrap();
        assert_eq!(out, vec1(key("id", -1, -1), 7));
        assert!(act_regular_generator(Generator::Gamma, &v, &cfg).is_err());
    }

    #[test]
    fn words() {
        let cfg = iwahori(0);
        let w = OperatorWord::parse(CharacterCase::Iwahori, "[Tg Tw1]^2").unwrap();
        let out = act_word(&w, &vec1(key("id", -3, -1), 5), &cfg).unwrap();
        assert_eq!(out, vec1(key("id", -4, -1), 5));
        let w = OperatorWord::parse(CharacterCase::Iwahori, "[Tg Tw1 Tg]^2").unwrap();
        let out = act_word(&w, &vec1(key("id", -3, -1), 5), &cfg).unwrap();
        assert_eq!(out, vec1(key("id", -4, -2), 5));
        let v = vec1(key("w1", 0, -2), 5);
        assert_eq!(
            act_word(&OperatorWord::identity(CharacterCase::Iwahori), &v, &cfg).unwrap(),
            v
        );
        let reg = OperatorWord::identity(CharacterCase::Regular);
        assert!(act_word(&reg, &v, &cfg).is_err());
    }

    #[test]
    fn composite_table_examples() {
        let id = composite_table(&"id".parse().unwrap()).unwrap();
        assert_eq!(id[0].word.to_string(), "Tg.Tw1.Tg.Tw1");
        assert_eq!(id[0].translation, LatticeVec(vec![-1, 0]));
        assert_eq!(id[1].translation, LatticeVec(vec![-1, -1]));
        let r = composite_table(&"w2w1".parse().unwrap()).unwrap();
        assert_eq!(r[1].word.to_string(), "Tg.Tg.Tw1.Tg.Tg.Tw1");
        assert_eq!(r[1].translation, LatticeVec(vec![0, 1]));
        let r = composite_table(&"w2".parse().unwrap()).unwrap();
        assert_eq!(r[0].word.to_string(), "Tw1.Tg.Tg.Tw1.Tg.Tg");
        assert!(composite_table(&WeylElem::identity(4)).is_err());
    }

    #[test]
    fn canonical_text() {
        let f = fp(5);
        let v = ModuleVector::from_terms(f, [(key("w1", 0, -1), 2), (key("id", -2, -1), -1)]);
        let s = v.to_string();
        assert_eq!(s, "4*123:(-2,-1) + 2*213:(0,-1)");
        assert_eq!(ModuleVector::parse(f, &s).unwrap(), v);
        assert_eq!(ModuleVector::zero(f).to_string(), "0");
        assert!(ModuleVector::parse(f, "1*123:(1,0)").is_err());
    }

    #[test]
    fn weight_config_validates_constants() {
        assert!(WeightConfig::new(CharacterCase::Iwahori, fp(5), 1).is_err());
        assert!(WeightConfig::new(CharacterCase::Iwahori, fp(5), 4).is_ok());
        let cfg = WeightConfig::new(CharacterCase::SemiRegular, fp(5), -1).unwrap();
        assert_eq!(cfg.constant(&WeylElem::identity(3)).unwrap(), 4);
    }

    #[test]
    fn window_basis_sizes() {
        let w = WindowSpec::new(2).unwrap();
        assert_eq!(window_basis(CharacterCase::Iwahori, &w).len(), 25);
        // S_Id: a1 <= a2 <= 0 within |a_i| <= 2
        assert_eq!(window_basis(CharacterCase::Regular, &w).len(), 6);
        // S_w1: a2 + 1 <= a1 <= 0
        assert_eq!(window_basis(CharacterCase::SemiRegular, &w).len(), 9);
    }
}
