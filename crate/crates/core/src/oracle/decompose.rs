//! Double-coset classification `G = ⊔ KZ t_a I_1` and `G = ⊔ IZ w t_a I`.
//!
//! Both use elimination: rows are cleared by left multiplication (by `K`,
//! resp. `I`), columns by right multiplication by `I_1`, pivoting on the
//! entry of least weight so every operation stays inside its group. The
//! resulting factorization is re-multiplied and checked entrywise before
//! any answer is returned.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{s_omega_contains, LatticeVec};
use crate::weyl::WeylElem;

use super::matrix::GMat;
use super::series::TruncSeries;
use super::subgroup::{in_kz, SubgroupSpec, SubgroupTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LeftGroup {
    K,
    I,
}

/// `left * g * right = P diag(u_c t^{e_c}) (1 + X)`, with `left` in `K`
/// (resp. `I`), `right` and `1 + X` in `I_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// `P e_c = e_{omega(c)}`.
    pub omega: WeylElem,
    /// Pivot valuations `e_c`.
    pub exponents: Vec<i64>,
    pub left: GMat,
    pub right: GMat,
}

impl Decomposition {
    /// `(e_1 - e_N, ..., e_{N-1} - e_N)`.
    pub fn lattice(&self) -> LatticeVec {
        let n = self.exponents.len();
        LatticeVec((0..n - 1).map(|c| self.exponents[c] - self.exponents[n - 1]).collect())
    }
}

fn weight(left: LeftGroup, n: usize, v: i64, r: usize, c: usize) -> i64 {
    let base = n as i64 * v + c as i64;
    match left {
        LeftGroup::K => base,
        LeftGroup::I => base - r as i64,
    }
}

fn eliminate(g: &GMat, left: LeftGroup, d: usize) -> Result<Decomposition> {
    let n = g.n();
    let field = g.field();
    let mut m = g.clone();
    let mut l = GMat::identity(n, field);
    let mut rt = GMat::identity(n, field);
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let mut pivot_row = vec![0usize; n];
    let mut exps = vec![0i64; n];

    for _ in 0..n {
        let mut best: Option<(i64, usize, usize, i64)> = None;
        for &r in &rows {
            for &c in &cols {
                if let Ok(Some(v)) = m.get(r, c).val() {
                    let w = weight(left, n, v, r, c);
                    if best.is_none_or(|b| w < b.0) {
                        best = Some((w, r, c, v));
                    }
                }
            }
        }
        let Some((bw, r, c, v)) = best else {
            return Err(Error::NotInvertible);
        };
        for &r2 in &rows {
            for &c2 in &cols {
                let x = m.get(r2, c2);
                if x.val().is_err() && weight(left, n, x.val_lower_bound(), r2, c2) <= bw {
                    return Err(Error::PrecisionExceeded(format!("pivot search at entry ({r2},{c2})")));
                }
            }
        }
        let p_inv = m.get(r, c).inv(d)?;
        for &r2 in &rows {
            if r2 == r {
                continue;
            }
            let x = m.get(r2, c).mul(&p_inv);
            if x.is_exact_zero() {
                continue;
            }
            for j in 0..n {
                let nv = m.get(r2, j).sub(&x.mul(m.get(r, j)));
                m.set(r2, j, nv);
                let nl = l.get(r2, j).sub(&x.mul(l.get(r, j)));
                l.set(r2, j, nl);
            }
        }
        for &c2 in &cols {
            if c2 == c {
                continue;
            }
            let y = p_inv.mul(m.get(r, c2));
            if y.is_exact_zero() {
                continue;
            }
            for i in 0..n {
                let nv = m.get(i, c2).sub(&m.get(i, c).mul(&y));
                m.set(i, c2, nv);
                let nr = rt.get(i, c2).sub(&rt.get(i, c).mul(&y));
                rt.set(i, c2, nr);
            }
        }
        rows.retain(|&x| x != r);
        cols.retain(|&x| x != c);
        pivot_row[c] = r;
        exps[c] = v;
    }

    let omega = WeylElem::from_images(&pivot_row.iter().map(|&r| r + 1).collect::<Vec<_>>())?;
    let dec = Decomposition {
        omega,
        exponents: exps,
        left: l,
        right: rt,
    };
    certify(g, &dec, left, d)?;
    Ok(dec)
}

fn certify(g: &GMat, dec: &Decomposition, left: LeftGroup, d: usize) -> Result<()> {
    let fail = |what: &str| Err(Error::Internal(format!("decomposition certificate failed: {what}")));
    let left_tag = match left {
        LeftGroup::K => SubgroupTag::K,
        LeftGroup::I => SubgroupTag::I,
    };
    if !SubgroupSpec::new(left_tag, d).contains(&dec.left)? {
        return fail("left factor");
    }
    if !SubgroupSpec::new(SubgroupTag::I1, d).contains(&dec.right)? {
        return fail("right factor");
    }
    let prod = dec.left.mul(g).mul(&dec.right);
    let n = g.n();
    for c in 0..n {
        let r = dec.omega.apply(c + 1) - 1;
        let e = dec.exponents[c];
        if prod.get(r, c).val()? != Some(e) {
            return fail("pivot valuation");
        }
        for c2 in (0..n).filter(|&c2| c2 != c) {
            if !prod.get(r, c2).has_val_at_least(e + (c2 < c) as i64)? {
                return fail("off-pivot entry");
            }
        }
    }
    Ok(())
}

/// The full `KZ t_a I_1` decomposition of `g`, without a bound.
pub fn decompose_kzti1(g: &GMat, d: usize) -> Result<Decomposition> {
    eliminate(g, LeftGroup::K, d)
}

/// The `a` with `g ∈ KZ t_a I_1`.
pub fn classify_kzti1(g: &GMat, bound: i64, d: usize) -> Result<LatticeVec> {
    let a = decompose_kzti1(g, d)?.lattice();
    if a.max_abs() > bound {
        return Err(Error::BoundTooSmall { bound, found: a });
    }
    Ok(a)
}

/// The `(w, a)` with `g ∈ IZ w t_a I`.
pub fn classify_izti(g: &GMat, bound: i64, d: usize) -> Result<(WeylElem, LatticeVec)> {
    let dec = eliminate(g, LeftGroup::I, d)?;
    let a = dec.lattice();
    if a.max_abs() > bound {
        return Err(Error::BoundTooSmall { bound, found: a });
    }
    Ok((dec.omega, a))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationResult {
    pub representatives: usize,
    pub hits: usize,
}

/// Rank 3, `a ∈ S_Id`: count the representatives `i` of
/// `(t_a^{-1} K t_a ∩ I_1) \ I_1` with `g i^{-1} t_a^{-1} ∈ KZ`, using the
/// upper unipotent set with entries in `o/p^{a2-a1}`, `o/p^{-a1}`, `o/p^{-a2}`.
/// Exactly one hit means `g ∈ KZ t_a I_1`; none means it is not.
pub fn enumerate_kzti1_s_id(g: &GMat, a: &LatticeVec, max_reps: usize) -> Result<EnumerationResult> {
    if g.n() != 3 || a.rank() != 3 {
        return Err(Error::UnsupportedRank(g.n()));
    }
    if !s_omega_contains(&WeylElem::identity(3), a) {
        return Err(Error::Domain(format!("{a} is not in S_Id")));
    }
    let field = g.field();
    let q = field.characteristic() as usize;
    let (a1, a2) = (a.0[0], a.0[1]);
    let lens = [(a2 - a1) as u32, (-a1) as u32, (-a2) as u32];
    let total: u32 = lens.iter().sum();
    let count = q
        .checked_pow(total)
        .filter(|&c| c <= max_reps)
        .ok_or_else(|| Error::Domain(format!("enumeration of q^{total} representatives exceeds {max_reps}")))?;
    let t_inv = GMat::t_diag(&LatticeVec(vec![-a1, -a2]), field);
    let poly = |mut idx: usize, len: u32| -> (TruncSeries, usize) {
        let mut digits = Vec::with_capacity(len as usize);
        for _ in 0..len {
            digits.push((idx % q) as i64);
            idx /= q;
        }
        (TruncSeries::from_digits(field, 0, &digits), idx)
    };
    let mut hits = 0;
    for idx in 0..count {
        let (x, rest) = poly(idx, lens[0]);
        let (y, rest) = poly(rest, lens[1]);
        let (z, _) = poly(rest, lens[2]);
        let zero = TruncSeries::zero(field);
        let one = TruncSeries::one(field);
        let i_inv = GMat::from_fn(3, |r, c| match (r, c) {
            (r, c) if r == c => one.clone(),
            (0, 1) => x.neg(),
            (0, 2) => x.mul(&z).sub(&y),
            (1, 2) => z.neg(),
            _ => zero.clone(),
        });
        if in_kz(&g.mul(&i_inv).mul(&t_inv))? {
            hits += 1;
        }
    }
    Ok(EnumerationResult {
        representatives: count,
        hits,
    })
}
