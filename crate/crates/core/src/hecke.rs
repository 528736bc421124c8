//! Presentations of the Hecke algebras `H(IZ, chi)` for the three shapes of
//! character: generator alphabets, oriented relations, and normal forms of
//! operator words.
//!
//! Equality of [`HeckeElement`]s is decided only up to the listed rules (plus
//! commutativity in the regular case). The authoritative equality test is the
//! action on module vectors, see [`crate::action::act_element`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::weyl::WeylElem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharacterCase {
    /// `W(chi) = W_0`.
    Iwahori,
    /// `W(chi) = {Id, w1}`.
    SemiRegular,
    /// `W(chi)` trivial.
    Regular,
}

impl CharacterCase {
    pub const ALL: [CharacterCase; 3] = [Self::Iwahori, Self::SemiRegular, Self::Regular];

    pub fn stabilizer(&self, n: usize) -> Vec<WeylElem> {
        match self {
            Self::Iwahori => WeylElem::all(n),
            Self::SemiRegular => vec![WeylElem::identity(n), WeylElem::omega1(n)],
            Self::Regular => vec![WeylElem::identity(n)],
        }
    }

    pub fn alphabet(&self) -> &'static [Generator] {
        use Generator::*;
        match self {
            Self::Iwahori => &[Gamma, Omega1],
            Self::SemiRegular => &[Omega1, Omega1T10, Omega1T0m1],
            Self::Regular => &[T10, Tm10, T01, T0m1, T11, Tm1m1],
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Iwahori => "iwahori",
            Self::SemiRegular => "semi-regular",
            Self::Regular => "regular",
        }
    }
}

impl fmt::Display for CharacterCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CharacterCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "iwahori" | "trivial" => Ok(Self::Iwahori),
            "semi-regular" | "semiregular" | "semi_regular" => Ok(Self::SemiRegular),
            "regular" => Ok(Self::Regular),
            other => Err(Error::Parse(format!("unknown character case {other:?}"))),
        }
    }
}

/// Whether `T_{w t_a}` exists, i.e. `w` lies in `W(chi)`.
pub fn generator_defined(case: CharacterCase, w: &WeylElem) -> bool {
    case.stabilizer(w.rank()).contains(w)
}

/// Hecke generators across all three cases. The declaration order is the
/// fixed symbol order used when sorting commutative words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    Gamma,
    Omega1,
    Omega1T10,
    Omega1T0m1,
    T10,
    Tm10,
    T01,
    T0m1,
    T11,
    Tm1m1,
}

impl Generator {
    pub const ALL: [Generator; 10] = [
        Self::Gamma,
        Self::Omega1,
        Self::Omega1T10,
        Self::Omega1T0m1,
        Self::T10,
        Self::Tm10,
        Self::T01,
        Self::T0m1,
        Self::T11,
        Self::Tm1m1,
    ];

    pub fn symbol(&self) -> &'static str {
        match self {
            Self::Gamma => "Tg",
            Self::Omega1 => "Tw1",
            Self::Omega1T10 => "Tw1t(1,0)",
            Self::Omega1T0m1 => "Tw1t(0,-1)",
            Self::T10 => "Tt(1,0)",
            Self::Tm10 => "Tt(-1,0)",
            Self::T01 => "Tt(0,1)",
            Self::T0m1 => "Tt(0,-1)",
            Self::T11 => "Tt(1,1)",
            Self::Tm1m1 => "Tt(-1,-1)",
        }
    }

    /// Translation `a` of a regular-case generator `T_{t_a}`.
    pub fn translation(&self) -> Option<[i64; 2]> {
        Some(match self {
            Self::T10 => [1, 0],
            Self::Tm10 => [-1, 0],
            Self::T01 => [0, 1],
            Self::T0m1 => [0, -1],
            Self::T11 => [1, 1],
            Self::Tm1m1 => [-1, -1],
            _ => return None,
        })
    }

    pub fn belongs_to(&self, case: CharacterCase) -> bool {
        case.alphabet().contains(self)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let alias = match s {
            "Tgamma" => Some(Self::Gamma),
            "Tomega1" => Some(Self::Omega1),
            _ => None,
        };
        alias
            .or_else(|| Self::ALL.iter().copied().find(|g| g.symbol() == s))
            .ok_or_else(|| Error::Parse(format!("unknown generator {s:?}")))
    }
}

/// A word of generators of one case; acts on the right, leftmost letter first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OperatorWord {
    case: CharacterCase,
    letters: Vec<Generator>,
}

impl OperatorWord {
    pub fn new(case: CharacterCase, letters: Vec<Generator>) -> Result<Self> {
        if let Some(g) = letters.iter().find(|g| !g.belongs_to(case)) {
            return Err(Error::Undefined {
                operator: g.to_string(),
                case: case.to_string(),
            });
        }
        Ok(Self { case, letters })
    }

    pub fn identity(case: CharacterCase) -> Self {
        Self {
            case,
            letters: Vec::new(),
        }
    }

    pub fn case(&self) -> CharacterCase {
        self.case
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.case, other.case, "concatenating words of different cases");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            case: self.case,
            letters,
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.case), |acc, _| acc.then(self))
    }

    /// Parse a word such as `Tg.Tw1.Tg`, `[Tg Tw1]^2` or `Tt(-1,0)^3`.
    /// The empty string and `1` denote the identity.
    pub fn parse(case: CharacterCase, s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let letters = parse_seq(&chars, &mut pos, false)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("unexpected {:?} in word {s:?}", chars[pos])));
        }
        Self::new(case, letters)
    }
}

fn parse_exponent(chars: &[char], pos: &mut usize) -> Result<usize> {
    if *pos < chars.len() && chars[*pos] == '^' {
        *pos += 1;
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        let digits: String = chars[start..*pos].iter().collect();
        digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent {digits:?}")))
    } else {
        Ok(1)
    }
}

fn parse_seq(chars: &[char], pos: &mut usize, nested: bool) -> Result<Vec<Generator>> {
    let mut out = Vec::new();
    while *pos < chars.len() {
        let c = chars[*pos];
        if c.is_whitespace() || c == '.' || c == '*' {
            *pos += 1;
        } else if c == '[' {
            *pos += 1;
            let inner = parse_seq(chars, pos, true)?;
            if *pos >= chars.len() || chars[*pos] != ']' {
                return Err(Error::Parse("unbalanced '['".into()));
            }
            *pos += 1;
            let k = parse_exponent(chars, pos)?;
            for _ in 0..k {
                out.extend_from_slice(&inner);
            }
        } else if c == ']' {
            if nested {
                return Ok(out);
            }
            return Err(Error::Parse("unbalanced ']'".into()));
        } else if c == '1' && out.is_empty() && chars.len() == 1 {
            *pos += 1;
        } else {
            let start = *pos;
            let mut depth = 0i32;
            while *pos < chars.len() {
                let d = chars[*pos];
                if d == '(' {
                    depth += 1;
                } else if d == ')' {
                    depth -= 1;
                } else if depth == 0 && (d.is_whitespace() || matches!(d, '.' | '*' | '[' | ']' | '^')) {
                    break;
                }
                *pos += 1;
            }
            let sym: String = chars[start..*pos].iter().collect();
            let g: Generator = sym.parse()?;
            let k = parse_exponent(chars, pos)?;
            out.extend(std::iter::repeat_n(g, k));
        }
    }
    if nested {
        return Err(Error::Parse("unbalanced '['".into()));
    }
    Ok(out)
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<&str> = self.letters.iter().map(|g| g.symbol()).collect();
        f.write_str(&parts.join("."))
    }
}

/// `lhs -> scalar * rhs`; a zero scalar means `lhs -> 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteRule {
    pub lhs: Vec<Generator>,
    pub scalar: i64,
    pub rhs: Vec<Generator>,
}

impl RewriteRule {
    fn to(lhs: Vec<Generator>, scalar: i64, rhs: Vec<Generator>) -> Self {
        Self { lhs, scalar, rhs }
    }

    fn zero(lhs: Vec<Generator>) -> Self {
        Self {
            lhs,
            scalar: 0,
            rhs: Vec::new(),
        }
    }

    pub fn is_zero_rule(&self) -> bool {
        self.scalar == 0
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: &[Generator]| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|g| g.symbol()).collect::<Vec<_>>().join(".")
            }
        };
        match self.scalar {
            0 => write!(f, "{} -> 0", show(&self.lhs)),
            1 => write!(f, "{} -> {}", show(&self.lhs), show(&self.rhs)),
            -1 => write!(f, "{} -> -{}", show(&self.lhs), show(&self.rhs)),
            s => write!(f, "{} -> {s}*{}", show(&self.lhs), show(&self.rhs)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationSet {
    pub case: CharacterCase,
    pub rules: Vec<RewriteRule>,
    /// Letters commute (words are sorted by the fixed symbol order).
    pub commutative: bool,
}

/// The zero products of the regular-case presentation.
pub const REGULAR_ZERO_PAIRS: [(Generator, Generator); 9] = {
    use Generator::*;
    [
        (T10, Tm10),
        (T10, T01),
        (T10, Tm1m1),
        (T01, T0m1),
        (T01, Tm1m1),
        (T11, Tm1m1),
        (T11, T0m1),
        (T11, Tm10),
        (Tm10, T0m1),
    ]
};

/// Oriented relations of the rank-3 presentations.
pub fn relations(case: CharacterCase) -> RelationSet {
    use Generator::*;
    let rules = match case {
        CharacterCase::Iwahori => vec![
            RewriteRule::to(vec![Gamma, Gamma, Gamma], 1, vec![]),
            RewriteRule::to(vec![Omega1, Omega1], -1, vec![Omega1]),
        ],
        CharacterCase::SemiRegular => vec![
            RewriteRule::to(vec![Omega1, Omega1], -1, vec![Omega1]),
            RewriteRule::zero(vec![Omega1T10, Omega1T0m1]),
            RewriteRule::zero(vec![Omega1T0m1, Omega1T10]),
        ],
        CharacterCase::Regular => REGULAR_ZERO_PAIRS
            .iter()
            .map(|&(x, y)| RewriteRule::zero(vec![x, y]))
            .collect(),
    };
    RelationSet {
        case,
        rules,
        commutative: case == CharacterCase::Regular,
    }
}

fn contains_multiset(word: &[Generator], lhs: &[Generator]) -> bool {
    let mut counts: BTreeMap<Generator, i64> = BTreeMap::new();
    for g in word {
        *counts.entry(*g).or_default() += 1;
    }
    lhs.iter().all(|g| {
        let c = counts.entry(*g).or_default();
        *c -= 1;
        *c >= 0
    })
}

/// Rewrite a single monomial to normal form: `Some((scalar, word))` or `None`
/// when the monomial vanishes.
fn normalize_word(rels: &RelationSet, word: &[Generator]) -> Option<(i64, Vec<Generator>)> {
    let mut scalar = 1i64;
    let mut word = word.to_vec();
    if rels.commutative {
        word.sort();
        if rels
            .rules
            .iter()
            .any(|r| r.is_zero_rule() && contains_multiset(&word, &r.lhs))
        {
            return None;
        }
        return Some((scalar, word));
    }
    'outer: loop {
        for start in 0..word.len() {
            for rule in &rels.rules {
                let end = start + rule.lhs.len();
                if end <= word.len() && word[start..end] == rule.lhs[..] {
                    if rule.is_zero_rule() {
                        return None;
                    }
                    scalar *= rule.scalar;
                    word.splice(start..end, rule.rhs.iter().copied());
                    continue 'outer;
                }
            }
        }
        return Some((scalar, word));
    }
}

/// A finite `F_p`-combination of operator words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeckeElement {
    case: CharacterCase,
    field: PrimeField,
    terms: BTreeMap<Vec<Generator>, u32>,
}

impl HeckeElement {
    pub fn zero(case: CharacterCase, field: PrimeField) -> Self {
        Self {
            case,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(word: &OperatorWord, field: PrimeField) -> Self {
        let mut e = Self::zero(word.case(), field);
        e.add_term(word.letters().to_vec(), 1);
        e
    }

    pub fn case(&self) -> CharacterCase {
        self.case
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (OperatorWord, u32)> + '_ {
        self.terms.iter().map(|(w, &c)| {
            (
                OperatorWord {
                    case: self.case,
                    letters: w.clone(),
                },
                c,
            )
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, word: Vec<Generator>, coeff: u32) {
        let f = self.field;
        let entry = self.terms.entry(word).or_insert(0);
        *entry = f.add(*entry, coeff);
        self.terms.retain(|_, c| *c != 0);
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.case, self.field), (other.case, other.field));
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, s: u32) -> Self {
        let mut out = Self::zero(self.case, self.field);
        for (w, &c) in &self.terms {
            out.add_term(w.clone(), self.field.mul(c, s));
        }
        out
    }

    /// Product `self * other` (concatenation of words), not normalized.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.case, self.field), (other.case, other.field));
        let mut out = Self::zero(self.case, self.field);
        for (w1, &c1) in &self.terms {
            for (w2, &c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, self.field.mul(c1, c2));
            }
        }
        out
    }

    pub fn normalize(&self) -> Self {
        let rels = relations(self.case);
        let mut out = Self::zero(self.case, self.field);
        for (w, &c) in &self.terms {
            if let Some((s, nw)) = normalize_word(&rels, w) {
                out.add_term(nw, self.field.mul(c, self.field.from_i64(s)));
            }
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().map(|(w, c)| format!("{c}*{w}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn word(case: CharacterCase, letters: &[Generator]) -> HeckeElement {
        HeckeElement::from_word(&OperatorWord::new(case, letters.to_vec()).unwrap(), f5())
    }

    #[test]
    fn relation_counts() {
        assert_eq!(relations(CharacterCase::Iwahori).rules.len(), 2);
        assert_eq!(relations(CharacterCase::SemiRegular).rules.len(), 3);
        let reg = relations(CharacterCase::Regular);
        assert_eq!(reg.rules.len(), 9);
        assert!(reg.rules.iter().all(|r| r.is_zero_rule()));
        assert!(reg.commutative);
    }

    #[test]
    fn normalize_examples() {
        let e = word(CharacterCase::Regular, &[T10, Tm10]).normalize();
        assert!(e.is_zero());
        let e = word(CharacterCase::Iwahori, &[Omega1, Omega1]).normalize();
        assert_eq!(e, word(CharacterCase::Iwahori, &[Omega1]).scale(4));
        let e = word(CharacterCase::Iwahori, &[]).normalize();
        assert_eq!(e, word(CharacterCase::Iwahori, &[]));
        let e = word(CharacterCase::Iwahori, &[Gamma, Gamma, Gamma]).normalize();
        assert_eq!(e, word(CharacterCase::Iwahori, &[]));
        // the product order in the semi-regular zero rules is irrelevant
        assert!(word(CharacterCase::SemiRegular, &[Omega1T0m1, Omega1T10])
            .normalize()
            .is_zero());
        // commutative rule applies to non-adjacent letters after sorting
        assert!(word(CharacterCase::Regular, &[Tm10, T11, T11, Tm10])
            .normalize()
            .is_zero());
    }

    #[test]
    fn omega1_power_collapses() {
        // T^k = (-1)^{k-1} T
        for k in 1..7 {
            let e = word(CharacterCase::Iwahori, &vec![Omega1; k]).normalize();
            let sign = if k % 2 == 1 { 1 } else { 4 };
            assert_eq!(e, word(CharacterCase::Iwahori, &[Omega1]).scale(sign));
        }
    }

    #[test]
    fn words_validate_alphabet() {
        assert!(OperatorWord::new(CharacterCase::Regular, vec![Gamma]).is_err());
        assert!(OperatorWord::new(CharacterCase::SemiRegular, vec![Omega1, Omega1T0m1]).is_ok());
    }

    #[test]
    fn parse_words() {
        let w = OperatorWord::parse(CharacterCase::Iwahori, "[Tg Tw1]^2").unwrap();
        assert_eq!(w.letters(), &[Gamma, Omega1, Gamma, Omega1]);
        let w = OperatorWord::parse(CharacterCase::Regular, "Tt(-1,0).Tt(-1,-1)^2").unwrap();
        assert_eq!(w.letters(), &[Tm10, Tm1m1, Tm1m1]);
        assert!(OperatorWord::parse(CharacterCase::Iwahori, "").unwrap().is_empty());
        assert!(OperatorWord::parse(CharacterCase::Iwahori, "1").unwrap().is_empty());
        assert!(OperatorWord::parse(CharacterCase::Iwahori, "[Tg").is_err());
        assert!(OperatorWord::parse(CharacterCase::Iwahori, "Tq").is_err());
        let w = OperatorWord::parse(CharacterCase::Iwahori, "[Tg.Tw1.Tg]^2").unwrap();
        assert_eq!(OperatorWord::parse(CharacterCase::Iwahori, &w.to_string()).unwrap(), w);
    }

    #[test]
    fn defined_generators() {
        let w1 = WeylElem::omega1(3);
        assert!(!generator_defined(CharacterCase::Regular, &w1));
        assert!(generator_defined(CharacterCase::SemiRegular, &w1));
        for case in CharacterCase::ALL {
            assert!(generator_defined(case, &WeylElem::identity(3)));
        }
        assert!(!generator_defined(CharacterCase::SemiRegular, &WeylElem::omega2(3)));
    }
}
