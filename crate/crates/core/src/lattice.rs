//! Lattice points `a = (a_1, ..., a_{N-1})`, the exponent functions
//! `l^w_ij`, the sets `S_w` and the partition of `Z^{N-1}` they form.
//!
//! The implicit last coordinate `a_N = 0` is applied inside the operations and
//! never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::WeylElem;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticeVec(pub Vec<i64>);

impl LatticeVec {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Rank `N` of the group this point belongs to.
    pub fn rank(&self) -> usize {
        self.0.len() + 1
    }

    /// Coordinate `a_k` for 1-based `k`, with `a_N = 0`.
    pub fn coord(&self, k: usize) -> i64 {
        if k == self.rank() {
            0
        } else {
            self.0[k - 1]
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(x, y)| x - y).collect())
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl From<[i64; 2]> for LatticeVec {
    fn from(a: [i64; 2]) -> Self {
        Self(a.to_vec())
    }
}

impl fmt::Display for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for LatticeVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        inner
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self)
            .map_err(|e| Error::Parse(format!("bad lattice point {s:?}: {e}")))
    }
}

/// The closed box `|a_i| <= bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WindowSpec {
    pub bound: i64,
}

impl Default for WindowSpec {
    fn default() -> Self {
        Self { bound: 8 }
    }
}

impl WindowSpec {
    pub fn new(bound: i64) -> Result<Self> {
        if bound < 0 {
            return Err(Error::Domain(format!("window bound must be >= 0, got {bound}")));
        }
        Ok(Self { bound })
    }

    pub fn contains(&self, a: &LatticeVec) -> bool {
        a.0.iter().all(|x| x.abs() <= self.bound)
    }

    /// All points of the box in `Z^{N-1}`, lexicographically ordered.
    pub fn points(&self, n: usize) -> Vec<LatticeVec> {
        let dim = n - 1;
        let side = (2 * self.bound + 1) as usize;
        let total = side.pow(dim as u32);
        (0..total)
            .map(|mut idx| {
                let mut coords = vec![0; dim];
                for k in (0..dim).rev() {
                    coords[k] = (idx % side) as i64 - self.bound;
                    idx /= side;
                }
                LatticeVec(coords)
            })
            .collect()
    }
}

fn check_rank(w: &WeylElem, a: &LatticeVec) {
    assert_eq!(
        w.rank(),
        a.rank(),
        "Weyl element {w} and lattice point {a} have different ranks"
    );
}

fn step(r: usize, s: usize) -> i64 {
    (r > s) as i64
}

fn exponent_unchecked(w: &WeylElem, a: &LatticeVec, i: usize, j: usize) -> i64 {
    let inv = w.inverse();
    let (r, s) = (inv.apply(i), inv.apply(j));
    a.coord(r) - a.coord(s) + step(r, s)
}

/// The exponent `l^w_ij(a)`: the `(i, j)` entries of `w t_a I (w t_a)^{-1}`
/// fill the ideal `p^{l}`.
pub fn entry_exponent(w: &WeylElem, a: &LatticeVec, i: usize, j: usize) -> Result<i64> {
    let n = w.rank();
    if a.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: a.rank(),
        });
    }
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::InvalidIndex { i, j, n });
    }
    Ok(exponent_unchecked(w, a, i, j))
}

/// Whether `a` lies in `S_w`: every strictly lower exponent is at least 1.
pub fn s_omega_contains(w: &WeylElem, a: &LatticeVec) -> bool {
    check_rank(w, a);
    let n = w.rank();
    (1..=n).all(|i| (1..i).all(|j| exponent_unchecked(w, a, i, j) >= 1))
}

/// The Weyl element `w` with `a` in `S_w`.
///
/// Selection procedure on the diagonal `(a_1, ..., a_{N-1}, 0)`: at each step
/// the rightmost maximal entry among the unsorted positions is moved to the
/// last unsorted position, the entries in between shifting left by one. The
/// shift keeps equal entries in their original order, which membership in
/// `S_w` requires; see [`classify_by_transpositions`] for the swap variant.
pub fn classify(a: &LatticeVec) -> WeylElem {
    let n = a.rank();
    let mut diag: Vec<i64> = (1..=n).map(|k| a.coord(k)).collect();
    let mut w = WeylElem::identity(n);
    for i in 0..n - 1 {
        let last = n - i;
        let max = *diag[..last].iter().max().unwrap();
        let j = (1..=last).rev().find(|&m| diag[m - 1] == max).unwrap();
        if j != last {
            let x = diag.remove(j - 1);
            diag.insert(last - 1, x);
            // position m -> m for m < j, j -> last, m -> m - 1 for j < m <= last
            let images: Vec<usize> = (1..=n)
                .map(|m| match m {
                    m if m == j => last,
                    m if m > j && m <= last => m - 1,
                    m => m,
                })
                .collect();
            w = WeylElem::from_images(&images).unwrap().compose(&w);
        }
    }
    w
}

/// The same selection procedure with each step realized by the transposition
/// of the selected position and the last unsorted one. When two coordinates
/// of `(a, 0)` tie this can return `w` with `a` outside `S_w` (e.g. `(1, 0)`),
/// so it is kept only for comparison with [`classify`].
pub fn classify_by_transpositions(a: &LatticeVec) -> WeylElem {
    let n = a.rank();
    let mut diag: Vec<i64> = (1..=n).map(|k| a.coord(k)).collect();
    let mut w = WeylElem::identity(n);
    for i in 0..n - 1 {
        let last = n - i;
        let max = *diag[..last].iter().max().unwrap();
        let j = (1..=last).rev().find(|&m| diag[m - 1] == max).unwrap();
        if j != last {
            diag.swap(j - 1, last - 1);
            w = WeylElem::transposition(n, j, last).compose(&w);
        }
    }
    w
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub rank: usize,
    pub window: WindowSpec,
    pub points: usize,
    /// Number of window points in each `S_w` (every element of `W_0` listed).
    pub class_sizes: BTreeMap<WeylElem, usize>,
    /// Points covered zero or several times, with the covering elements.
    pub violations: Vec<(LatticeVec, Vec<WeylElem>)>,
    /// Points where `classify` disagrees with the unique covering element.
    pub classify_mismatches: Vec<LatticeVec>,
}

impl PartitionReport {
    pub fn nonempty_classes(&self) -> usize {
        self.class_sizes.values().filter(|&&c| c > 0).count()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.classify_mismatches.is_empty()
    }
}

pub fn partition_report(window: WindowSpec, n: usize) -> PartitionReport {
    let group = WeylElem::all(n);
    let mut class_sizes: BTreeMap<WeylElem, usize> = group.iter().map(|w| (w.clone(), 0)).collect();
    let mut violations = Vec::new();
    let mut classify_mismatches = Vec::new();
    let pts = window.points(n);
    for a in &pts {
        let covering: Vec<WeylElem> = group.iter().filter(|w| s_omega_contains(w, a)).cloned().collect();
        if covering.len() == 1 {
            *class_sizes.get_mut(&covering[0]).unwrap() += 1;
            if classify(a) != covering[0] {
                classify_mismatches.push(a.clone());
            }
        } else {
            violations.push((a.clone(), covering));
        }
    }
    PartitionReport {
        rank: n,
        window,
        points: pts.len(),
        class_sizes,
        violations,
        classify_mismatches,
    }
}

/// Assign every window point to its unique `S_w`.
pub fn partition_window(window: WindowSpec, n: usize) -> Result<BTreeMap<LatticeVec, WeylElem>> {
    let group = WeylElem::all(n);
    let mut out = BTreeMap::new();
    for a in window.points(n) {
        let covering: Vec<&WeylElem> = group.iter().filter(|w| s_omega_contains(w, &a)).collect();
        if covering.len() != 1 {
            return Err(Error::PartitionViolation {
                point: a,
                count: covering.len(),
            });
        }
        let w = covering[0].clone();
        if classify(&a) != w {
            return Err(Error::Consistency {
                key: format!("classify{a} != {w}"),
            });
        }
        out.insert(a, w);
    }
    Ok(out)
}

/// The printed rank-3 inequality systems for the six sets `S_w`.
#[allow(clippy::int_plus_one)]
pub fn table_n3_contains(w: &WeylElem, a: &LatticeVec) -> Result<bool> {
    if w.rank() != 3 || a.rank() != 3 {
        return Err(Error::UnsupportedRank(w.rank().max(a.rank())));
    }
    let (a1, a2) = (a.0[0], a.0[1]);
    Ok(match w.one_line().as_str() {
        "123" => a1 <= a2 && a2 <= 0,
        "213" => a2 + 1 <= a1 && a1 <= 0,
        "321" => a1 >= a2 + 1 && a2 + 1 >= 2,
        "132" => a1 <= 0 && a2 >= 1,
        "312" => a1 >= 1 && a2 <= 0,
        "231" => a2 >= a1 && a1 >= 1,
        _ => unreachable!(),
    })
}

/// Points of the window where [`s_omega_contains`] and the printed table
/// disagree, as `(w, a)`.
pub fn table_n3_mismatches(window: WindowSpec) -> Vec<(WeylElem, LatticeVec)> {
    let mut out = Vec::new();
    for a in window.points(3) {
        for w in WeylElem::all(3) {
            if table_n3_contains(&w, &a).unwrap() != s_omega_contains(&w, &a) {
                out.push((w, a.clone()));
            }
        }
    }
    out
}

/// Whether `b` is proper to `a` inside `S_w`: the entry ideals of the
/// intersected conjugate for `b` are all contained in those for `a`.
pub fn is_proper(w: &WeylElem, b: &LatticeVec, a: &LatticeVec) -> Result<bool> {
    for (name, x) in [("b", b), ("a", a)] {
        if x.rank() != w.rank() {
            return Err(Error::RankMismatch {
                expected: w.rank(),
                found: x.rank(),
            });
        }
        if !s_omega_contains(w, x) {
            return Err(Error::Domain(format!("{name} = {x} is not in S_{w}")));
        }
    }
    let n = w.rank();
    Ok((1..=n).all(|i| {
        (1..=n)
            .filter(|&j| j != i)
            .all(|j| exponent_unchecked(w, b, i, j).max(0) >= exponent_unchecked(w, a, i, j).max(0))
    }))
}
