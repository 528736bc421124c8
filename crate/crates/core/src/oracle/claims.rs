//! Coset-membership claims about explicit group elements, checked with the
//! `KZ t_a I_1` classifier.
//!
//! Claim files are line oriented, `#` starts a comment:
//!
//! ```text
//! kind; omega; a1,a2; name=value, ...; expected
//! ```
//!
//! `omega` is `-` or a Weyl element (when given, `a` must lie in `S_omega`),
//! values are series literals over `F_q`, and `expected` is either a lattice
//! point `b1,b2` (the claim is `g ∈ KZ t_b I_1`) or `true`/`false`.
//!
//! | kind | element `g` | entries |
//! |---|---|---|
//! | `gl2_identity` | 2x2 identity `w u(s) = u(1/s) diag(-1/s, s) l(1/s)` | `s` |
//! | `t_omega1_case1` | `t_{(a2,a1)} u(s) w1` | `s` |
//! | `t_omega1_case2` | `t_a u(s) w1` | `s` |
//! | `semi_regular` | `t_{(a2,a1-1)} (1 + s E23) t_{(0,1)} w1` | `s` |
//! | `regular` | `t_{(a1-1,a2)} (1 + t1 E12 + t2 E13) t_{(1,0)}` | `t1`, `t2` |
//! | `regular_reduced` | `t_{(a2+1,a1-1)} (1 + t^-1 t2 E13)` | `t2` |
//! | `iwasawa` | `t_a i`, `i` the product of `1 + x E_rc` | `x12`, `x21`, ... |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::lattice::{s_omega_contains, LatticeVec};
use crate::weyl::WeylElem;

use super::decompose::decompose_kzti1;
use super::matrix::GMat;
use super::series::TruncSeries;
use super::subgroup::{SubgroupSpec, SubgroupTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    Gl2Identity,
    TOmega1Case1,
    TOmega1Case2,
    SemiRegular,
    Regular,
    RegularReduced,
    Iwasawa,
}

impl ClaimKind {
    pub const ALL: [ClaimKind; 7] = [
        Self::Gl2Identity,
        Self::TOmega1Case1,
        Self::TOmega1Case2,
        Self::SemiRegular,
        Self::Regular,
        Self::RegularReduced,
        Self::Iwasawa,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Gl2Identity => "gl2_identity",
            Self::TOmega1Case1 => "t_omega1_case1",
            Self::TOmega1Case2 => "t_omega1_case2",
            Self::SemiRegular => "semi_regular",
            Self::Regular => "regular",
            Self::RegularReduced => "regular_reduced",
            Self::Iwasawa => "iwasawa",
        }
    }
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown claim kind {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Expected {
    Target(LatticeVec),
    Truth(bool),
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Target(b) => write!(f, "{b}"),
            Self::Truth(t) => write!(f, "{t}"),
        }
    }
}

/// A parsed claim; entry values stay textual until a field is chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub kind: ClaimKind,
    pub omega: Option<WeylElem>,
    pub a: Option<LatticeVec>,
    pub entries: BTreeMap<String, String>,
    pub expected: Expected,
}

fn parse_pair(s: &str) -> Result<LatticeVec> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("expected a1,a2, got {s:?}")));
    }
    let v = parts
        .iter()
        .map(|p| p.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Error::Parse(format!("bad lattice point {s:?}: {e}")))?;
    Ok(LatticeVec(v))
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split(';').map(str::trim).collect();
        if fields.len() != 5 {
            return Err(Error::Parse(format!("claim needs 5 ';'-separated fields: {line:?}")));
        }
        let kind: ClaimKind = fields[0].parse()?;
        let omega: Option<WeylElem> = match fields[1] {
            "-" | "" => None,
            w => Some(w.parse()?),
        };
        let a = match fields[2] {
            "-" | "" => None,
            s => Some(parse_pair(s)?),
        };
        let mut entries = BTreeMap::new();
        if !matches!(fields[3], "-" | "") {
            for kv in fields[3].split(',') {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("entry {kv:?} is not name=value")))?;
                entries.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        let expected = match fields[4] {
            "true" => Expected::Truth(true),
            "false" => Expected::Truth(false),
            s => Expected::Target(parse_pair(s)?),
        };
        if let (Some(w), Some(a)) = (&omega, &a) {
            if w.rank() != a.rank() {
                return Err(Error::RankMismatch {
                    expected: w.rank(),
                    found: a.rank(),
                });
            }
        }
        Ok(Self {
            kind,
            omega,
            a,
            entries,
            expected,
        })
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let omega = self.omega.as_ref().map_or("-".to_string(), |w| w.to_string());
        let a = self
            .a
            .as_ref()
            .map_or("-".to_string(), |a| format!("{},{}", a.0[0], a.0[1]));
        let entries = if self.entries.is_empty() {
            "-".to_string()
        } else {
            self.entries
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        let expected = match &self.expected {
            Expected::Target(b) => format!("{},{}", b.0[0], b.0[1]),
            Expected::Truth(t) => t.to_string(),
        };
        write!(f, "{}; {omega}; {a}; {entries}; {expected}", self.kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

struct Ctx<'a> {
    claim: &'a Claim,
    field: PrimeField,
}

impl Ctx<'_> {
    fn entry(&self, name: &str) -> Result<TruncSeries> {
        match self.claim.entries.get(name) {
            Some(s) => TruncSeries::parse(self.field, s),
            None => Err(Error::Parse(format!("{} claim needs entry {name:?}", self.claim.kind))),
        }
    }

    fn entry_or_zero(&self, name: &str) -> Result<TruncSeries> {
        match self.claim.entries.get(name) {
            Some(s) => TruncSeries::parse(self.field, s),
            None => Ok(TruncSeries::zero(self.field)),
        }
    }

    fn a(&self) -> Result<(i64, i64)> {
        let a = self
            .claim
            .a
            .as_ref()
            .ok_or_else(|| Error::Parse(format!("{} claim needs a", self.claim.kind)))?;
        if a.dim() != 2 {
            return Err(Error::UnsupportedRank(a.rank()));
        }
        Ok((a.0[0], a.0[1]))
    }

    fn t(&self, a1: i64, a2: i64) -> GMat {
        GMat::t_diag(&LatticeVec(vec![a1, a2]), self.field)
    }

    fn w1(&self) -> GMat {
        GMat::perm(&WeylElem::omega1(3), self.field)
    }

    fn u12(&self, s: TruncSeries) -> GMat {
        GMat::elementary(3, 0, 1, s)
    }
}

fn gl2_identity(ctx: &Ctx, d: usize) -> Result<bool> {
    let f = ctx.field;
    let s = ctx.entry("s")?;
    let si = s.inv(d)?;
    let zero = TruncSeries::zero(f);
    let one = TruncSeries::one(f);
    let m = |a: &TruncSeries, b: &TruncSeries, c: &TruncSeries, e: &TruncSeries| {
        GMat::from_fn(2, |i, j| [[a, b], [c, e]][i][j].clone())
    };
    let lhs = m(&zero, &one, &one, &zero).mul(&m(&one, &s, &zero, &one));
    let rhs = m(&one, &si, &zero, &one)
        .mul(&m(&si.neg(), &zero, &zero, &s))
        .mul(&m(&one, &zero, &si, &one));
    // equal at every digit both sides know
    Ok(lhs
        .sub(&rhs)
        .entries()
        .all(|(_, _, x)| x.val_lower_bound() == x.precision().unwrap_or(i64::MAX)))
}

/// The element whose double coset a claim is about.
pub fn claim_element(claim: &Claim, field: PrimeField) -> Result<GMat> {
    let ctx = Ctx { claim, field };
    let (a1, a2) = ctx.a()?;
    if let (Some(w), Some(a)) = (&claim.omega, &claim.a) {
        if !s_omega_contains(w, a) {
            return Err(Error::Domain(format!("{a} is not in S_{w}")));
        }
    }
    let g = match claim.kind {
        ClaimKind::Gl2Identity => return Err(Error::Domain("gl2_identity has no group element".into())),
        ClaimKind::TOmega1Case1 => ctx.t(a2, a1).mul(&ctx.u12(ctx.entry("s")?)).mul(&ctx.w1()),
        ClaimKind::TOmega1Case2 => ctx.t(a1, a2).mul(&ctx.u12(ctx.entry("s")?)).mul(&ctx.w1()),
        ClaimKind::SemiRegular => ctx
            .t(a2, a1 - 1)
            .mul(&GMat::elementary(3, 1, 2, ctx.entry("s")?))
            .mul(&ctx.t(0, 1))
            .mul(&ctx.w1()),
        ClaimKind::Regular => {
            let mut i = ctx.u12(ctx.entry_or_zero("t1")?);
            let cur = i.get(0, 2).add(&ctx.entry_or_zero("t2")?);
            i.set(0, 2, cur);
            ctx.t(a1 - 1, a2).mul(&i).mul(&ctx.t(1, 0))
        }
        ClaimKind::RegularReduced => {
            let x = ctx.entry("t2")?.shift(-1);
            ctx.t(a2 + 1, a1 - 1).mul(&GMat::elementary(3, 0, 2, x))
        }
        ClaimKind::Iwasawa => {
            let mut i = GMat::identity(3, field);
            for (name, value) in &claim.entries {
                let idx: Vec<usize> = name
                    .strip_prefix('x')
                    .map(|s| s.chars().filter_map(|c| c.to_digit(10).map(|d| d as usize)).collect())
                    .unwrap_or_default();
                if idx.len() != 2 || !(1..=3).contains(&idx[0]) || !(1..=3).contains(&idx[1]) {
                    return Err(Error::Parse(format!("iwasawa entry {name:?} must be x<r><c>")));
                }
                let x = TruncSeries::parse(field, value)?;
                i = i.mul(&GMat::elementary(3, idx[0] - 1, idx[1] - 1, x));
            }
            if !SubgroupSpec::new(SubgroupTag::I1, 0).contains(&i)? {
                return Err(Error::Domain("iwasawa factor is not in I1".into()));
            }
            ctx.t(a1, a2).mul(&i)
        }
    };
    Ok(g)
}

/// Evaluate one claim over `F_q` with working precision `d`.
pub fn verify_coset_claim(claim: &Claim, q: u32, d: usize) -> Result<ClaimOutcome> {
    let field = PrimeField::new(q)?;
    let ctx = Ctx { claim, field };
    if claim.kind == ClaimKind::Gl2Identity {
        let holds = gl2_identity(&ctx, d)?;
        let pass = match claim.expected {
            Expected::Truth(t) => t == holds,
            Expected::Target(_) => return Err(Error::Parse("gl2_identity expects true/false".into())),
        };
        return Ok(ClaimOutcome {
            expected: claim.expected.to_string(),
            observed: holds.to_string(),
            pass,
        });
    }
    let g = claim_element(claim, field)?;
    let b = decompose_kzti1(&g, d)?.lattice();
    let pass = match &claim.expected {
        Expected::Target(t) => *t == b,
        Expected::Truth(_) => return Err(Error::Parse(format!("{} expects a target point", claim.kind))),
    };
    Ok(ClaimOutcome {
        expected: claim.expected.to_string(),
        observed: b.to_string(),
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub line: usize,
    pub claim: String,
    pub kind: Option<ClaimKind>,
    pub expected: Option<String>,
    pub observed: Option<String>,
    pub pass: bool,
    pub error: Option<String>,
}

/// Verify every claim of a claim file; malformed lines become failed records.
pub fn verify_claims(text: &str, q: u32, d: usize) -> Vec<ClaimRecord> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut rec = ClaimRecord {
            line: n + 1,
            claim: line.to_string(),
            kind: None,
            expected: None,
            observed: None,
            pass: false,
            error: None,
        };
        match line.parse::<Claim>() {
            Err(e) => rec.error = Some(e.to_string()),
            Ok(claim) => {
                rec.kind = Some(claim.kind);
                rec.expected = Some(claim.expected.to_string());
                match verify_coset_claim(&claim, q, d) {
                    Ok(o) => {
                        rec.observed = Some(o.observed);
                        rec.pass = o.pass;
                    }
                    Err(e) => rec.error = Some(e.to_string()),
                }
            }
        }
        out.push(rec);
    }
    out
}

/// The bundled corpus of claims over `F_2`.
pub const CLAIMS_Q2: &str = include_str!("../../data/claims_q2.txt");
