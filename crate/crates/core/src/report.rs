//! Outcomes of individual verification checks.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Location and value of the first coefficient that violates a check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Matrix entry (row, column), if the check is matrix-valued.
    pub entry: Option<(usize, usize)>,
    /// Exponent of the spectral variable.
    pub s: Option<i64>,
    /// Exponent of the second spectral variable for bivariate checks.
    pub s2: Option<i64>,
    /// Exponent of `h`.
    pub l: Option<usize>,
    pub value: String,
}

impl Witness {
    pub fn series(s: i64, l: usize, value: impl fmt::Display) -> Self {
        Self {
            s: Some(s),
            l: Some(l),
            value: value.to_string(),
            ..Self::default()
        }
    }

    pub fn at_entry(mut self, row: usize, col: usize) -> Self {
        self.entry = Some((row, col));
        self
    }

    pub fn message(value: impl fmt::Display) -> Self {
        Self {
            value: value.to_string(),
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub status: Status,
    pub witness: Option<Witness>,
    pub detail: String,
}

impl CheckOutcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        Self {
            status: Status::Pass,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn fail(witness: Witness, detail: impl Into<String>) -> Self {
        Self {
            status: Status::Fail,
            witness: Some(witness),
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Combines sub-checks: the first failure wins.
    pub fn all(parts: impl IntoIterator<Item = (String, CheckOutcome)>) -> Self {
        let mut names = Vec::new();
        for (name, o) in parts {
            if o.status == Status::Fail {
                return Self {
                    detail: format!("{name}: {}", o.detail),
                    ..o
                };
            }
            names.push(name);
        }
        Self::pass(names.join(", "))
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.status, self.detail)?;
        if let Some(w) = &self.witness {
            write!(f, " [witness {w:?}]")?;
        }
        Ok(())
    }
}
