//! Membership in the compact open subgroups `K`, `K_1`, `I`, `I_1`, `B ∩ K`
//! and in `KZ`, decided entrywise on truncated matrices.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

use super::matrix::GMat;
use super::series::TruncSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SubgroupTag {
    K,
    K1,
    I,
    I1,
    /// Upper-triangular elements of `K`.
    BK,
}

impl SubgroupTag {
    pub const ALL: [SubgroupTag; 5] = [Self::K, Self::K1, Self::I, Self::I1, Self::BK];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::K => "K",
            Self::K1 => "K1",
            Self::I => "I",
            Self::I1 => "I1",
            Self::BK => "B∩K",
        }
    }
}

impl fmt::Display for SubgroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SubgroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" => Ok(Self::K),
            "K1" => Ok(Self::K1),
            "I" => Ok(Self::I),
            "I1" => Ok(Self::I1),
            "BK" | "B∩K" => Ok(Self::BK),
            _ => Err(Error::Parse(format!("unknown subgroup {s:?}"))),
        }
    }
}

/// A subgroup seen modulo `1 + t^depth M_N(o)`: the only constraint that
/// depends on the depth is the vanishing of the lower entries of `B ∩ K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubgroupSpec {
    pub tag: SubgroupTag,
    pub depth: usize,
}

impl SubgroupSpec {
    pub fn new(tag: SubgroupTag, depth: usize) -> Self {
        Self { tag, depth }
    }

    /// Minimal entry valuation required at `(i, j)`.
    fn entry_floor(&self, i: usize, j: usize) -> i64 {
        use SubgroupTag::*;
        match self.tag {
            K => 0,
            K1 => (i != j) as i64,
            I | I1 => (i > j) as i64,
            BK if i > j => self.depth as i64,
            BK => 0,
        }
    }

    pub fn contains(&self, g: &GMat) -> Result<bool> {
        let f = g.field();
        for (i, j, x) in g.entries() {
            if !x.has_val_at_least(self.entry_floor(i, j))? {
                return Ok(false);
            }
        }
        // diagonal congruences
        if matches!(self.tag, SubgroupTag::K1 | SubgroupTag::I1) {
            let one = TruncSeries::one(f);
            for i in 0..g.n() {
                if !g.get(i, i).sub(&one).has_val_at_least(1)? {
                    return Ok(false);
                }
            }
        }
        unit_det(g)
    }
}

fn unit_det(g: &GMat) -> Result<bool> {
    let d = g.det();
    Ok(d.val()? == Some(0))
}

/// Whether `g` lies in `KZ`: some `t^m g` lies in `K`.
pub fn in_kz(g: &GMat) -> Result<bool> {
    let Some(m) = g.min_val()? else {
        return Ok(false);
    };
    let h = g.shift(-m);
    unit_det(&h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::lattice::LatticeVec;
    use crate::weyl::WeylElem;

    #[test]
    fn named_elements() {
        let f = PrimeField::new(2).unwrap();
        let d = 6;
        let i = SubgroupSpec::new(SubgroupTag::I, d);
        let i1 = SubgroupSpec::new(SubgroupTag::I1, d);
        let k = SubgroupSpec::new(SubgroupTag::K, d);
        let w1 = GMat::perm(&WeylElem::omega1(3), f);
        assert!(k.contains(&w1).unwrap());
        assert!(!i.contains(&w1).unwrap());
        let lower = GMat::parse_rows(f, &[&["1", "0", "0"], &["t", "1", "0"], &["0", "0", "1"]]).unwrap();
        assert!(i1.contains(&lower).unwrap());
        assert!(!SubgroupSpec::new(SubgroupTag::BK, d).contains(&lower).unwrap());
        let upper = GMat::parse_rows(f, &[&["1", "1", "0"], &["0", "1", "0"], &["0", "0", "1"]]).unwrap();
        assert!(i1.contains(&upper).unwrap());
        assert!(!SubgroupSpec::new(SubgroupTag::K1, d).contains(&upper).unwrap());
        let t = GMat::t_diag(&LatticeVec(vec![1, 0]), f);
        assert!(!k.contains(&t).unwrap());
        assert!(in_kz(&t.shift(3)).is_ok_and(|b| !b));
        assert!(in_kz(&w1.shift(-2)).unwrap());
    }

    #[test]
    fn torus_in_i_not_i1() {
        let f = PrimeField::new(3).unwrap();
        let d = GMat::parse_rows(f, &[&["2", "0", "0"], &["0", "1", "0"], &["0", "0", "1"]]).unwrap();
        assert!(SubgroupSpec::new(SubgroupTag::I, 4).contains(&d).unwrap());
        assert!(!SubgroupSpec::new(SubgroupTag::I1, 4).contains(&d).unwrap());
        assert!(SubgroupSpec::new(SubgroupTag::BK, 4).contains(&d).unwrap());
    }
}
