//! Verification reports: `{check, instance, N, status, witness?}`.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub instance: String,
    #[serde(rename = "N")]
    pub n: u32,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Report {
    pub fn pass(check: &str, instance: &str, n: u32) -> Self {
        Report {
            check: check.to_string(),
            instance: instance.to_string(),
            n,
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(check: &str, instance: &str, n: u32, witness: impl Into<String>) -> Self {
        Report {
            check: check.to_string(),
            instance: instance.to_string(),
            n,
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    /// Passes unless `first_failure` carries a witness.
    pub fn from_witness(check: &str, instance: &str, n: u32, first_failure: Option<String>) -> Self {
        match first_failure {
            None => Report::pass(check, instance, n),
            Some(w) => Report::fail(check, instance, n, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        write!(f, "{} [{}, N={}]: {}", self.check, self.instance, self.n, status)?;
        if let Some(w) = &self.witness {
            write!(f, " ({w})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema() {
        let r = Report::pass("check_bialgebra", "weyl", 8);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"check":"check_bialgebra","instance":"weyl","N":8,"status":"pass"}"#
        );
        let f = Report::fail("c", "i", 0, "w");
        let back: Report = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }
}
