//! Definitional checks computed with explicit matrices: the sets `S_w`, the
//! entry exponents, properness, and the Hecke action for the trivial weight.

use serde::Serialize;

use crate::action::{BasisFunction, ModuleVector};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::lattice::{s_omega_contains, LatticeVec, WindowSpec};
use crate::weyl::WeylElem;

use super::decompose::decompose_kzti1;
use super::matrix::GMat;
use super::series::TruncSeries;
use super::subgroup::{SubgroupSpec, SubgroupTag};

/// `w t_a` and its inverse, both exact.
fn omega_t(w: &WeylElem, a: &LatticeVec, field: PrimeField) -> (GMat, GMat) {
    let neg = LatticeVec(a.0.iter().map(|x| -x).collect());
    let h = GMat::perm(w, field).mul(&GMat::t_diag(a, field));
    let h_inv = GMat::t_diag(&neg, field).mul(&GMat::perm(&w.inverse(), field));
    (h, h_inv)
}

/// Topological generators of `I` modulo depth `d`: root elements
/// `1 + c t^e E_ij` (`e >= [i > j]`, `e <= d`) and the torus elements
/// `diag(.., c, ..)`, `diag(.., 1 + t, ..)`.
fn iwahori_generators(n: usize, field: PrimeField, d: i64) -> Vec<GMat> {
    let q = field.characteristic() as i64;
    let mut out = Vec::new();
    for i in 0..n {
        for c in 1..q {
            let mut m = GMat::identity(n, field);
            m.set(i, i, TruncSeries::constant(field, c));
            out.push(m);
        }
        let mut m = GMat::identity(n, field);
        m.set(i, i, TruncSeries::parse(field, "1 + t").unwrap());
        out.push(m);
        for j in (0..n).filter(|&j| j != i) {
            for e in (i > j) as i64..=d {
                for c in 1..q {
                    out.push(GMat::elementary(n, i, j, TruncSeries::monomial(field, c, e)));
                }
            }
        }
    }
    out
}

fn check_depth(a: &LatticeVec, d: usize) -> Result<()> {
    if (d as i64) <= 2 * a.max_abs() + 2 {
        return Err(Error::Domain(format!("depth {d} must exceed 2*max|a_i| + 2 for {a}")));
    }
    Ok(())
}

/// Whether `(w t_a I (w t_a)^{-1}) ∩ K ⊆ I`, tested on conjugated
/// generators of `I` over `F_q((t))`.
pub fn s_omega_bruteforce(w: &WeylElem, a: &LatticeVec, q: u32, d: usize) -> Result<bool> {
    check_depth(a, d)?;
    let field = PrimeField::new(q)?;
    let (h, h_inv) = omega_t(w, a, field);
    let k = SubgroupSpec::new(SubgroupTag::K, d);
    let i = SubgroupSpec::new(SubgroupTag::I, d);
    for x in iwahori_generators(w.rank(), field, d as i64) {
        let y = h.mul(&x).mul(&h_inv);
        if k.contains(&y)? && !i.contains(&y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The valuation of the `(i, j)` entries (1-based) of `w t_a I (w t_a)^{-1}`,
/// read off the conjugate of the root element that lands there.
pub fn entry_exponent_bruteforce(w: &WeylElem, a: &LatticeVec, i: usize, j: usize, q: u32) -> Result<i64> {
    let n = w.rank();
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::InvalidIndex { i, j, n });
    }
    let field = PrimeField::new(q)?;
    let (h, h_inv) = omega_t(w, a, field);
    for k in 0..n {
        for l in (0..n).filter(|&l| l != k) {
            let x = GMat::elementary(n, k, l, TruncSeries::t_pow(field, (k > l) as i64));
            let y = h.mul(&x).mul(&h_inv);
            if let Some(v) = y.get(i - 1, j - 1).val()? {
                return Ok(v);
            }
        }
    }
    Err(Error::Internal(format!(
        "no root element conjugates to entry ({i},{j})"
    )))
}

/// Whether `(w t_b I (w t_b)^{-1}) ∩ K ⊆ (w t_a I (w t_a)^{-1}) ∩ K`, tested
/// on generators of the left side.
pub fn is_proper_bruteforce(w: &WeylElem, b: &LatticeVec, a: &LatticeVec, q: u32, d: usize) -> Result<bool> {
    for x in [a, b] {
        if !s_omega_contains(w, x) {
            return Err(Error::Domain(format!("{x} is not in S_{w}")));
        }
        check_depth(x, d)?;
    }
    let field = PrimeField::new(q)?;
    let (hb, hb_inv) = omega_t(w, b, field);
    let (ha, ha_inv) = omega_t(w, a, field);
    let k = SubgroupSpec::new(SubgroupTag::K, d);
    let i = SubgroupSpec::new(SubgroupTag::I, d);
    for x in iwahori_generators(w.rank(), field, d as i64) {
        let y = hb.mul(&x).mul(&hb_inv);
        if k.contains(&y)? && !i.contains(&ha_inv.mul(&y).mul(&ha))? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TrivialOp {
    Omega1,
    Gamma,
}

impl TrivialOp {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Omega1 => "w1",
            Self::Gamma => "gamma",
        }
    }
}

/// `f | T_g` for the trivial weight (`q` prime, coefficients in `F_q`):
/// `(f|T_g)(t_b) = sum_i f(t_b i g^{-1})` over `i ∈ I_1 / (I_1 ∩ g^{-1} I_1 g)`,
/// read off at every `t_b` with `|b_i| <= bound`. `f_{w,a}` is the indicator of
/// `KZ t_a I_1`. Requires `bound >= 2 max|a_i| + 2` so the support of the
/// result lies in the box.
pub fn hecke_action_bruteforce_trivial(
    op: TrivialOp,
    f: &BasisFunction,
    q: u32,
    bound: i64,
    d: usize,
) -> Result<ModuleVector> {
    if f.a.rank() != 3 {
        return Err(Error::UnsupportedRank(f.a.rank()));
    }
    if bound < 2 * f.a.max_abs() + 2 {
        return Err(Error::Domain(format!("bound {bound} too small for the support of {f}")));
    }
    let field = PrimeField::new(q)?;
    let g_inv = match op {
        TrivialOp::Omega1 => GMat::perm(&WeylElem::omega1(3), field),
        TrivialOp::Gamma => GMat::gamma(3, field).inv(d)?,
    };
    let reps: Vec<GMat> = match op {
        TrivialOp::Omega1 => (0..q as i64)
            .map(|s| GMat::elementary(3, 0, 1, TruncSeries::constant(field, s)))
            .collect(),
        TrivialOp::Gamma => vec![GMat::identity(3, field)],
    };
    let value = |x: &GMat| -> Result<u32> {
        let mut v = 0;
        for i in &reps {
            if decompose_kzti1(&x.mul(i).mul(&g_inv), d)?.lattice() == f.a {
                v = field.add(v, 1);
            }
        }
        Ok(v)
    };
    let probes = [
        GMat::elementary(3, 0, 1, TruncSeries::one(field)),
        GMat::elementary(3, 1, 2, TruncSeries::one(field)),
        GMat::elementary(3, 0, 2, TruncSeries::one(field)),
        GMat::elementary(3, 1, 0, TruncSeries::t_pow(field, 1)),
        GMat::elementary(3, 2, 1, TruncSeries::t_pow(field, 1)),
    ];
    let mut out = ModuleVector::zero(field);
    for b in WindowSpec::new(bound)?.points(3) {
        let tb = GMat::t_diag(&b, field);
        let v = value(&tb)?;
        // I_1-invariance at the sample points: the sum must be a function
        // of the coset alone
        for p in &probes {
            let w = value(&tb.mul(p))?;
            if w != v {
                return Err(Error::NonBasisAligned(format!(
                    "value at t_{b} is {v} but {w} at a translate"
                )));
            }
        }
        if v != 0 {
            out.add_term(BasisFunction::at(b), v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: i64, b: i64) -> LatticeVec {
        LatticeVec(vec![a, b])
    }

    #[test]
    fn s_omega_examples() {
        assert!(s_omega_bruteforce(&WeylElem::identity(3), &v(-1, 0), 2, 6).unwrap());
        assert!(!s_omega_bruteforce(&WeylElem::omega2(3), &v(0, 0), 2, 6).unwrap());
        assert!(s_omega_bruteforce(&WeylElem::omega1(3), &v(0, -1), 2, 6).unwrap());
        assert!(s_omega_bruteforce(&WeylElem::omega1(3), &v(0, -3), 2, 6).is_err());
    }

    #[test]
    fn entry_exponent_examples() {
        let id = WeylElem::identity(3);
        assert_eq!(entry_exponent_bruteforce(&id, &v(-2, -1), 2, 1, 2).unwrap(), 2);
        assert_eq!(
            entry_exponent_bruteforce(&WeylElem::omega1(3), &v(0, -1), 2, 1, 2).unwrap(),
            1
        );
    }

    #[test]
    fn proper_examples() {
        let id = WeylElem::identity(3);
        assert!(is_proper_bruteforce(&id, &v(-3, -2), &v(-1, 0), 2, 9).unwrap());
        assert!(!is_proper_bruteforce(&id, &v(-1, -1), &v(-2, -1), 2, 9).unwrap());
    }

    #[test]
    fn trivial_weight_examples() {
        let f = |w: &str, a: LatticeVec| BasisFunction::new(w.parse().unwrap(), a).unwrap();
        let r = hecke_action_bruteforce_trivial(TrivialOp::Omega1, &f("123", v(-2, -1)), 2, 6, 8).unwrap();
        assert_eq!(r.to_string(), "1*123:(-2,-1)");
        let r = hecke_action_bruteforce_trivial(TrivialOp::Omega1, &f("123", v(-1, -1)), 2, 4, 8).unwrap();
        assert!(r.is_zero());
        let r = hecke_action_bruteforce_trivial(TrivialOp::Gamma, &f("123", v(0, 0)), 2, 2, 8).unwrap();
        assert_eq!(r.to_string(), "1*312:(1,0)");
    }
}
