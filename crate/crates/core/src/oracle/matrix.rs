//! Square matrices over [`TruncSeries`] and the named group elements.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::lattice::LatticeVec;
use crate::weyl::WeylElem;

use super::series::TruncSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMat {
    n: usize,
    entries: Vec<TruncSeries>,
}

impl GMat {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> TruncSeries) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn zero(n: usize, field: PrimeField) -> Self {
        Self::from_fn(n, |_, _| TruncSeries::zero(field))
    }

    pub fn identity(n: usize, field: PrimeField) -> Self {
        Self::from_fn(n, |i, j| TruncSeries::constant(field, (i == j) as i64))
    }

    /// Rows of series literals, see [`TruncSeries::parse`].
    pub fn parse_rows(field: PrimeField, rows: &[&[&str]]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("matrix must be square".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for r in rows {
            for s in r.iter() {
                entries.push(TruncSeries::parse(field, s)?);
            }
        }
        Ok(Self { n, entries })
    }

    /// `t_a = diag(t^a_1, ..., t^a_{N-1}, 1)`.
    pub fn t_diag(a: &LatticeVec, field: PrimeField) -> Self {
        let n = a.rank();
        Self::from_fn(n, |i, j| {
            if i == j {
                TruncSeries::t_pow(field, a.coord(i + 1))
            } else {
                TruncSeries::zero(field)
            }
        })
    }

    /// Permutation matrix with `P e_j = e_{pi(j)}`.
    pub fn perm(w: &WeylElem, field: PrimeField) -> Self {
        Self::from_fn(w.rank(), |i, j| {
            TruncSeries::constant(field, (w.apply(j + 1) == i + 1) as i64)
        })
    }

    /// `gamma = omega_2 diag(t, 1, ..., 1)`.
    pub fn gamma(n: usize, field: PrimeField) -> Self {
        let mut a = vec![0; n - 1];
        a[0] = 1;
        Self::perm(&WeylElem::omega2(n), field).mul(&Self::t_diag(&LatticeVec(a), field))
    }

    /// `1 + x E_ij` (0-based indices).
    pub fn elementary(n: usize, i: usize, j: usize, x: TruncSeries) -> Self {
        let field = x.field();
        let mut m = Self::identity(n, field);
        let cur = m.get(i, j).clone();
        m.set(i, j, cur.add(&x));
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.entries[0].field()
    }

    pub fn get(&self, i: usize, j: usize) -> &TruncSeries {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: TruncSeries) {
        self.entries[i * self.n + j] = x;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &TruncSeries)> {
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, x)| (k / self.n, k % self.n, x))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let field = self.field();
        Self::from_fn(self.n, |i, j| {
            (0..self.n).fold(TruncSeries::zero(field), |acc, k| {
                acc.add(&self.get(i, k).mul(other.get(k, j)))
            })
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    /// Multiply every entry by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j).shift(e))
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n - 1;
        Self::from_fn(n, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self.get(si, sj).clone()
        })
    }

    /// Laplace expansion; fine for the small sizes used here.
    pub fn det(&self) -> TruncSeries {
        let field = self.field();
        match self.n {
            1 => self.get(0, 0).clone(),
            2 => self
                .get(0, 0)
                .mul(self.get(1, 1))
                .sub(&self.get(0, 1).mul(self.get(1, 0))),
            n => (0..n).fold(TruncSeries::zero(field), |acc, j| {
                let term = self.get(0, j).mul(&self.minor(0, j).det());
                if j % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                }
            }),
        }
    }

    /// Adjugate over determinant, with relative precision `d` for the
    /// determinant inverse.
    pub fn inv(&self, d: usize) -> Result<Self> {
        let det_inv = self.det().inv(d)?;
        if self.n == 1 {
            return Ok(Self::from_fn(1, |_, _| det_inv.clone()));
        }
        Ok(Self::from_fn(self.n, |i, j| {
            let c = self.minor(j, i).det();
            let c = if (i + j) % 2 == 0 { c } else { c.neg() };
            c.mul(&det_inv)
        }))
    }

    /// Whether every entry of `self - other` lies in `t^k o`.
    pub fn agrees_to(&self, other: &Self, k: i64) -> Result<bool> {
        let diff = self.sub(other);
        for (_, _, x) in diff.entries() {
            if !x.has_val_at_least(k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimum entry valuation; errors if some unknown entry could be lower.
    pub fn min_val(&self) -> Result<Option<i64>> {
        let mut best: Option<i64> = None;
        for (_, _, x) in self.entries() {
            if let Ok(Some(v)) = x.val() {
                best = Some(best.map_or(v, |b| b.min(v)));
            }
        }
        for (_, _, x) in self.entries() {
            if x.val().is_err() && best.is_none_or(|b| x.val_lower_bound() <= b) {
                return Err(Error::PrecisionExceeded(format!(
                    "minimum valuation of a matrix with entry {x}"
                )));
            }
        }
        Ok(best)
    }
}

impl fmt::Display for GMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            f.write_str(&row.join(", "))?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn permutation_matrices_multiply_like_permutations() {
        let f = f2();
        for a in WeylElem::all(3) {
            for b in WeylElem::all(3) {
                assert_eq!(GMat::perm(&a, f).mul(&GMat::perm(&b, f)), GMat::perm(&(&a * &b), f));
            }
        }
    }

    #[test]
    fn gamma_cubed_is_central() {
        let f = f2();
        let g = GMat::gamma(3, f);
        let g3 = g.mul(&g).mul(&g);
        assert_eq!(g3, GMat::identity(3, f).shift(1));
    }

    #[test]
    fn inverse_round_trip() {
        let f = PrimeField::new(3).unwrap();
        let m = GMat::parse_rows(f, &[&["1 + t", "2", "t^-1"], &["0", "1", "t"], &["t", "0", "1"]]).unwrap();
        let mi = m.inv(10).unwrap();
        assert!(m.mul(&mi).agrees_to(&GMat::identity(3, f), 8).unwrap());
    }

    #[test]
    fn det_of_diag() {
        let f = f2();
        let d = GMat::t_diag(&LatticeVec(vec![-2, 3]), f).det();
        assert_eq!(d, TruncSeries::t_pow(f, 1));
    }
}
