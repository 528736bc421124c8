use anyhow::{bail, Result};
use serde_json::{json, Value};

use iwahori_core::{CharacterCase, PrimeField, WindowSpec};

/// Settings shared by every command. Unset fields fall back to per-command
/// defaults: all cases, both values of `c`, and a command-specific window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Coefficient characteristic.
    pub p: u32,
    /// Residue field order of the oracle.
    pub q: u32,
    pub case: Option<CharacterCase>,
    pub c: Option<i64>,
    pub windows: Vec<i64>,
    /// Oracle precision `d`.
    pub precision: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            p: 2,
            q: 2,
            case: None,
            c: None,
            windows: Vec::new(),
            precision: 8,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        PrimeField::new(self.p)?;
        PrimeField::new(self.q)?;
        if let Some(c) = self.c {
            if c != 0 && c != -1 {
                bail!("c must be 0 or -1, got {c}");
            }
        }
        for &b in &self.windows {
            WindowSpec::new(b)?;
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("validated")
    }

    pub fn cases(&self) -> Vec<CharacterCase> {
        match self.case {
            Some(c) => vec![c],
            None => CharacterCase::ALL.to_vec(),
        }
    }

    /// The values of `c` to run for a case; the regular case has none.
    pub fn c_values(&self, case: CharacterCase) -> Vec<Option<i64>> {
        match (case, self.c) {
            (CharacterCase::Regular, _) => vec![None],
            (_, Some(c)) => vec![Some(c)],
            (_, None) => vec![Some(0), Some(-1)],
        }
    }

    /// The single window of a command, `default` when none was given.
    pub fn window(&self, default: i64) -> Result<WindowSpec> {
        match self.windows.as_slice() {
            [] => Ok(WindowSpec::new(default)?),
            [b] => Ok(WindowSpec::new(*b)?),
            _ => bail!("this command takes a single window, got {:?}", self.windows),
        }
    }

    pub fn windows_or(&self, default: &[i64]) -> Result<Vec<WindowSpec>> {
        let src = if self.windows.is_empty() {
            default
        } else {
            &self.windows
        };
        Ok(src
            .iter()
            .map(|&b| WindowSpec::new(b))
            .collect::<iwahori_core::Result<_>>()?)
    }

    /// The oracle window, checked against the precision: `d > 2B + 2`.
    pub fn oracle_window(&self) -> Result<WindowSpec> {
        let w = self.window(2)?;
        if self.precision as i64 <= 2 * w.bound + 2 {
            bail!(
                "precision {} must exceed 2*B + 2 = {} for window {}",
                self.precision,
                2 * w.bound + 2,
                w.bound
            );
        }
        Ok(w)
    }

    /// The configuration as echoed in reports; `c` is reduced mod `p`.
    pub fn echo(&self, windows: &[WindowSpec]) -> Value {
        json!({
            "p": self.p,
            "q": self.q,
            "case": self.case.map(|c| c.as_str()),
            "c": self.c.map(|c| self.field().from_i64(c)),
            "window": windows.iter().map(|w| w.bound).collect::<Vec<_>>(),
            "precision": self.precision,
            "seed": self.seed,
        })
    }
}

pub fn c_label(c: Option<i64>) -> String {
    match c {
        Some(c) => format!(" c={c}"),
        None => String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(RunConfig::default().validate().is_ok());
        assert!(RunConfig {
            p: 4,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(RunConfig {
            c: Some(1),
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(RunConfig {
            windows: vec![-1],
            ..Default::default()
        }
        .validate()
        .is_err());
    }

    #[test]
    fn oracle_precision_invariant() {
        let cfg = RunConfig {
            windows: vec![3],
            ..Default::default()
        };
        assert!(cfg.oracle_window().is_err());
        let cfg = RunConfig {
            windows: vec![3],
            precision: 9,
            ..Default::default()
        };
        assert_eq!(cfg.oracle_window().unwrap().bound, 3);
        assert_eq!(RunConfig::default().oracle_window().unwrap().bound, 2);
    }

    #[test]
    fn defaults_expand() {
        let cfg = RunConfig::default();
        assert_eq!(cfg.cases().len(), 3);
        assert_eq!(cfg.c_values(CharacterCase::Iwahori), vec![Some(0), Some(-1)]);
        assert_eq!(cfg.c_values(CharacterCase::Regular), vec![None]);
        assert!(RunConfig {
            windows: vec![1, 2],
            ..Default::default()
        }
        .window(5)
        .is_err());
        assert_eq!(cfg.echo(&[]).get("c"), Some(&Value::Null));
        let cfg = RunConfig {
            p: 5,
            c: Some(-1),
            ..Default::default()
        };
        assert_eq!(cfg.echo(&[])["c"], 4);
    }
}
