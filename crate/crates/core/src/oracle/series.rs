//! Truncated Laurent series in `F_q((t))`, `q` prime.
//!
//! A value is a Laurent polynomial plus an optional error term `O(t^prec)`.
//! Exact values (no error term) stay exact under ring operations; only
//! inversion of a non-monomial introduces truncation. Every result carries the
//! precision that is actually guaranteed, and predicates that would need a
//! digit beyond it fail with [`Error::PrecisionExceeded`].

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    field: PrimeField,
    /// Exponent of `digits[0]`; meaningless when `digits` is empty.
    start: i64,
    /// Leading and trailing digits are nonzero.
    digits: Vec<u32>,
    /// Absolute precision; `None` for exact values.
    prec: Option<i64>,
}

impl TruncSeries {
    fn normalized(field: PrimeField, mut start: i64, mut digits: Vec<u32>, prec: Option<i64>) -> Self {
        if let Some(p) = prec {
            let keep = (p - start).clamp(0, digits.len() as i64) as usize;
            digits.truncate(keep);
        }
        while digits.last() == Some(&0) {
            digits.pop();
        }
        let lead = digits.iter().take_while(|&&d| d == 0).count();
        digits.drain(..lead);
        start += lead as i64;
        if digits.is_empty() {
            start = 0;
        }
        Self {
            field,
            start,
            digits,
            prec,
        }
    }

    pub fn zero(field: PrimeField) -> Self {
        Self::normalized(field, 0, Vec::new(), None)
    }

    /// The unknown element `O(t^prec)`.
    pub fn big_o(field: PrimeField, prec: i64) -> Self {
        Self::normalized(field, 0, Vec::new(), Some(prec))
    }

    pub fn one(field: PrimeField) -> Self {
        Self::monomial(field, 1, 0)
    }

    pub fn constant(field: PrimeField, c: i64) -> Self {
        Self::monomial(field, c, 0)
    }

    /// `c * t^e`.
    pub fn monomial(field: PrimeField, c: i64, e: i64) -> Self {
        Self::normalized(field, e, vec![field.from_i64(c)], None)
    }

    pub fn t_pow(field: PrimeField, e: i64) -> Self {
        Self::monomial(field, 1, e)
    }

    /// `sum digits[k] t^(start+k)`, exact.
    pub fn from_digits(field: PrimeField, start: i64, digits: &[i64]) -> Self {
        let digits = digits.iter().map(|&d| field.from_i64(d)).collect();
        Self::normalized(field, start, digits, None)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    pub fn precision(&self) -> Option<i64> {
        self.prec
    }

    /// Forget every digit at or beyond `prec`.
    pub fn truncate(&self, prec: i64) -> Self {
        let p = self.prec.map_or(prec, |q| q.min(prec));
        Self::normalized(self.field, self.start, self.digits.clone(), Some(p))
    }

    pub fn is_exact_zero(&self) -> bool {
        self.digits.is_empty() && self.prec.is_none()
    }

    /// Valuation; `None` for the exact zero.
    pub fn val(&self) -> Result<Option<i64>> {
        match (self.digits.is_empty(), self.prec) {
            (false, _) => Ok(Some(self.start)),
            (true, None) => Ok(None),
            (true, Some(p)) => Err(Error::PrecisionExceeded(format!("valuation of O(t^{p})"))),
        }
    }

    /// Largest `k` such that the value is certainly in `t^k o`
    /// (`i64::MAX` for the exact zero).
    pub fn val_lower_bound(&self) -> i64 {
        match (self.digits.is_empty(), self.prec) {
            (false, _) => self.start,
            (true, None) => i64::MAX,
            (true, Some(p)) => p,
        }
    }

    /// Whether the value lies in `t^k o`; undecidable when the first known
    /// digit is missing.
    pub fn has_val_at_least(&self, k: i64) -> Result<bool> {
        if !self.digits.is_empty() && self.start < k {
            return Ok(false);
        }
        if self.val_lower_bound() >= k {
            Ok(true)
        } else {
            Err(Error::PrecisionExceeded(format!(
                "deciding membership in t^{k}o for {self}"
            )))
        }
    }

    /// Digit of `t^k`.
    pub fn coeff(&self, k: i64) -> Result<u32> {
        if let Some(p) = self.prec {
            if k >= p {
                return Err(Error::PrecisionExceeded(format!("digit {k} of {self}")));
            }
        }
        let idx = k - self.start;
        if self.digits.is_empty() || idx < 0 || idx >= self.digits.len() as i64 {
            Ok(0)
        } else {
            Ok(self.digits[idx as usize])
        }
    }

    /// Leading digit; errors when the value is unknown or zero.
    pub fn leading_digit(&self) -> Result<u32> {
        match self.val()? {
            Some(_) => Ok(self.digits[0]),
            None => Err(Error::NotInvertible),
        }
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.field, other.field, "series over different fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_field(other);
        let prec = match (self.prec, other.prec) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if self.digits.is_empty() {
            return Self::normalized(self.field, other.start, other.digits.clone(), prec);
        }
        if other.digits.is_empty() {
            return Self::normalized(self.field, self.start, self.digits.clone(), prec);
        }
        let start = self.start.min(other.start);
        let end = (self.start + self.digits.len() as i64).max(other.start + other.digits.len() as i64);
        let mut digits = vec![0u32; (end - start) as usize];
        for (k, &d) in self.digits.iter().enumerate() {
            let i = (self.start - start) as usize + k;
            digits[i] = self.field.add(digits[i], d);
        }
        for (k, &d) in other.digits.iter().enumerate() {
            let i = (other.start - start) as usize + k;
            digits[i] = self.field.add(digits[i], d);
        }
        Self::normalized(self.field, start, digits, prec)
    }

    pub fn neg(&self) -> Self {
        let digits = self.digits.iter().map(|&d| self.field.neg(d)).collect();
        Self::normalized(self.field, self.start, digits, self.prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiply by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self::normalized(
            self.field,
            self.start + e,
            self.digits.clone(),
            self.prec.map(|p| p + e),
        )
    }

    pub fn scale(&self, c: u32) -> Self {
        let digits = self.digits.iter().map(|&d| self.field.mul(d, c)).collect();
        Self::normalized(self.field, self.start, digits, self.prec)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_field(other);
        if self.is_exact_zero() || other.is_exact_zero() {
            return Self::zero(self.field);
        }
        // (x + O(t^px)) (y + O(t^py)) = xy + O(t^min(v(x)+py, v(y)+px))
        let prec = match (self.prec, other.prec) {
            (None, None) => None,
            (Some(px), None) => Some(px + other.val_lower_bound()),
            (None, Some(py)) => Some(py + self.val_lower_bound()),
            (Some(px), Some(py)) => Some((px + other.val_lower_bound()).min(py + self.val_lower_bound())),
        };
        if self.digits.is_empty() || other.digits.is_empty() {
            return Self::normalized(self.field, 0, Vec::new(), prec);
        }
        let start = self.start + other.start;
        let mut len = self.digits.len() + other.digits.len() - 1;
        if let Some(p) = prec {
            len = len.min((p - start).max(0) as usize);
        }
        let mut digits = vec![0u32; len];
        for (i, &a) in self.digits.iter().enumerate() {
            if i >= len {
                break;
            }
            for (j, &b) in other.digits.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                digits[i + j] = self.field.add(digits[i + j], self.field.mul(a, b));
            }
        }
        Self::normalized(self.field, start, digits, prec)
    }

    /// Inverse with relative precision at most `d`. Monomials invert exactly.
    pub fn inv(&self, d: usize) -> Result<Self> {
        let v = match self.val()? {
            Some(v) => v,
            None => return Err(Error::NotInvertible),
        };
        let f = self.field;
        let u0_inv = f.inv(self.digits[0]).unwrap();
        if self.digits.len() == 1 && self.prec.is_none() {
            return Ok(Self::normalized(f, -v, vec![u0_inv], None));
        }
        let rel = match self.prec {
            None => d as i64,
            Some(p) => (d as i64).min(p - v),
        };
        let rel = rel.max(1) as usize;
        let u = |k: usize| self.digits.get(k).copied().unwrap_or(0);
        let mut b = vec![0u32; rel];
        b[0] = u0_inv;
        for k in 1..rel {
            let mut s = 0;
            for j in 1..=k {
                s = f.add(s, f.mul(u(j), b[k - j]));
            }
            b[k] = f.neg(f.mul(u0_inv, s));
        }
        Ok(Self::normalized(f, -v, b, Some(-v + rel as i64)))
    }

    /// Parse sums of terms `c`, `c*t^e`, `t^e`, `t`, and an optional
    /// `O(t^k)`, e.g. `1 + 2*t^-1 + O(t^5)`.
    pub fn parse(field: PrimeField, s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad series literal {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        // split into signed terms, keeping the sign of exponents intact
        let bytes: Vec<char> = compact.chars().collect();
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, &ch) in bytes.iter().enumerate() {
            let after_caret = i > 0 && bytes[i - 1] == '^';
            if (ch == '+' || ch == '-') && !after_caret && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);

        let mut acc = Self::zero(field);
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            if let Some(inner) = body.strip_prefix("O(").and_then(|b| b.strip_suffix(')')) {
                let k = parse_power(inner).ok_or_else(err)?;
                acc = acc.add(&Self::big_o(field, k));
                continue;
            }
            let (c, e) = match body.split_once('*') {
                Some((c, p)) => (c.parse::<i64>().map_err(|_| err())?, parse_power(p).ok_or_else(err)?),
                None => match body.parse::<i64>() {
                    Ok(c) => (c, 0),
                    Err(_) => (1, parse_power(body).ok_or_else(err)?),
                },
            };
            let c = if neg { -c } else { c };
            acc = acc.add(&Self::monomial(field, c, e));
        }
        Ok(acc)
    }
}

fn parse_power(s: &str) -> Option<i64> {
    if s == "t" {
        return Some(1);
    }
    s.strip_prefix("t^")?.parse().ok()
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, &d) in self.digits.iter().enumerate() {
            if d == 0 {
                continue;
            }
            let e = self.start + k as i64;
            parts.push(match (d, e) {
                (_, 0) => d.to_string(),
                (1, 1) => "t".to_string(),
                (1, _) => format!("t^{e}"),
                (_, 1) => format!("{d}*t"),
                _ => format!("{d}*t^{e}"),
            });
        }
        if let Some(p) = self.prec {
            parts.push(format!("O(t^{p})"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}
