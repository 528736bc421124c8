use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

pub const REPORT_SCHEMA: &str = "iwahori-report/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Number of instances examined.
    pub instances: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, instances: usize) -> Self {
        Self {
            name: name.into(),
            status: Status::Pass,
            instances,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, instances: usize, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Fail,
            instances,
            detail: Some(detail.into()),
        }
    }

    pub fn error(name: impl Into<String>, instances: usize, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Error,
            instances,
            detail: Some(detail.into()),
        }
    }

    /// Pass when `first_failure` is `None`.
    pub fn from_outcome(name: impl Into<String>, instances: usize, first_failure: Option<String>) -> Self {
        match first_failure {
            None => Self::pass(name, instances),
            Some(d) => Self::fail(name, instances, d),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub config: Value,
    pub checks: Vec<Check>,
    pub data: Value,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: &'static str, config: Value, checks: Vec<Check>, data: Value) -> Self {
        let mut summary = Summary {
            total: checks.len(),
            ..Summary::default()
        };
        for c in &checks {
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Error => summary.errors += 1,
            }
        }
        Self {
            schema: REPORT_SCHEMA,
            command,
            config,
            checks,
            data,
            summary,
        }
    }

    pub fn ok(&self) -> bool {
        self.summary.failed == 0 && self.summary.errors == 0
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["command", "check", "status", "instances", "detail"])?;
                for c in &self.checks {
                    w.write_record([
                        self.command,
                        &c.name,
                        c.status.as_str(),
                        &c.instances.to_string(),
                        c.detail.as_deref().unwrap_or(""),
                    ])?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
            Format::Text => {
                let mut out = format!(
                    "{} {}: {}/{} checks passed\n",
                    self.schema, self.command, self.summary.passed, self.summary.total
                );
                for c in &self.checks {
                    out += &format!("{:<5} {} [{}]", c.status.as_str().to_uppercase(), c.name, c.instances);
                    if let Some(d) = &c.detail {
                        out += &format!(" {d}");
                    }
                    out.push('\n');
                }
                Ok(out)
            }
        }
    }
}
