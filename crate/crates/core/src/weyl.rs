//! The finite Weyl group of `GL_N`, realized as permutation matrices.
//!
//! A [`WeylElem`] stores the permutation `pi` with `P e_j = e_{pi(j)}`, so
//! multiplication of elements is composition `(s * t)(j) = s(t(j))` and agrees
//! with the matrix product.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeylElem {
    /// 0-based images.
    images: Vec<u8>,
}

impl WeylElem {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// Build from 1-based images `pi(1), ..., pi(N)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    /// The transposition exchanging 1 and 2.
    pub fn omega1(n: usize) -> Self {
        let mut e = Self::identity(n);
        e.images.swap(0, 1);
        e
    }

    /// The matrix `[[0, I_{N-1}], [1, 0]]`: `e_1 -> e_N`, `e_{j+1} -> e_j`.
    pub fn omega2(n: usize) -> Self {
        let images = (0..n).map(|j| if j == 0 { n - 1 } else { j - 1 } as u8).collect();
        Self { images }
    }

    /// Transposition of positions `i` and `j` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut e = Self::identity(n);
        e.images.swap(i - 1, j - 1);
        e
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// `pi(j)` for 1-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "composing Weyl elements of different rank");
        Self {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.rank()];
        for (j, &i) in self.images.iter().enumerate() {
            images[i as usize] = j as u8;
        }
        Self { images }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.rank()), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &i)| j == i as usize)
    }

    pub fn order(&self) -> u32 {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.compose(self);
            k += 1;
        }
        k
    }

    /// All `N!` elements in lexicographic order of their one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<WeylElem>) {
            if prefix.len() == used.len() {
                out.push(WeylElem { images: prefix.clone() });
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v as u8);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    /// One-line notation, e.g. `213` for `omega1` in rank 3. Ranks above 9
    /// are comma separated.
    pub fn one_line(&self) -> String {
        if self.rank() <= 9 {
            self.images.iter().map(|&x| char::from(b'1' + x)).collect()
        } else {
            self.images()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Rank-3 name in terms of the generators, if any.
    pub fn name(&self) -> Option<&'static str> {
        if self.rank() != 3 {
            return None;
        }
        Some(match self.one_line().as_str() {
            "123" => "id",
            "213" => "w1",
            "312" => "w2",
            "321" => "w1w2",
            "132" => "w2w1",
            "231" => "w2^2",
            _ => unreachable!(),
        })
    }
}

impl Mul for &WeylElem {
    type Output = WeylElem;

    fn mul(self, rhs: &WeylElem) -> WeylElem {
        self.compose(rhs)
    }
}

impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

impl FromStr for WeylElem {
    type Err = Error;

    /// Accepts one-line notation (`213`, or `2,1,3`) and the rank-3 names
    /// `id`, `w1`, `w2`, `w1w2`, `w2w1`, `w2^2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let named = match s {
            "id" => Some("123"),
            "w1" => Some("213"),
            "w2" => Some("312"),
            "w1w2" => Some("321"),
            "w2w1" => Some("132"),
            "w2^2" | "w2w2" => Some("231"),
            _ => None,
        };
        let s = named.unwrap_or(s);
        let images: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse(format!("bad permutation {s:?}: {e}")))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse(format!("bad permutation {s:?}")))?
        };
        Self::from_images(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_orders() {
        for n in 3..=6 {
            assert_eq!(WeylElem::omega1(n).order(), 2);
            assert_eq!(WeylElem::omega2(n).order(), n as u32);
        }
    }

    #[test]
    fn rank3_matrices_match_named_elements() {
        let w1 = WeylElem::omega1(3);
        let w2 = WeylElem::omega2(3);
        // columns of the displayed permutation matrices
        assert_eq!(w2.images(), vec![3, 1, 2]);
        assert_eq!((&w1 * &w2).images(), vec![3, 2, 1]);
        assert_eq!((&w2 * &w1).images(), vec![1, 3, 2]);
        assert_eq!(w2.pow(2).images(), vec![2, 3, 1]);
        assert_eq!(w2.pow(2), w2.inverse());
    }

    #[test]
    fn generators_generate() {
        for n in 3..=5 {
            let gens = [WeylElem::omega1(n), WeylElem::omega2(n)];
            let mut seen = std::collections::BTreeSet::new();
            let mut frontier = vec![WeylElem::identity(n)];
            seen.insert(WeylElem::identity(n));
            while let Some(x) = frontier.pop() {
                for g in &gens {
                    let y = x.compose(g);
                    if seen.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
            assert_eq!(seen.len(), WeylElem::all(n).len());
        }
    }

    #[test]
    fn parse_round_trip() {
        for w in WeylElem::all(3) {
            assert_eq!(w.one_line().parse::<WeylElem>().unwrap(), w);
            assert_eq!(w.name().unwrap().parse::<WeylElem>().unwrap(), w);
        }
        assert!("112".parse::<WeylElem>().is_err());
        assert!("x".parse::<WeylElem>().is_err());
    }
}
