use serde::{Deserialize, Serialize};

/// Outcome of a report-valued check.
///
/// Serialized as `{ "pass": bool, "violations": [...] }`; violations are
/// listed in the deterministic order in which they were found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub pass: bool,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cell: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
}

impl Violation {
    pub fn new(check: impl Into<String>) -> Self {
        Violation { check: check.into(), cell: None, k: None, lhs: None, rhs: None }
    }

    pub fn cell(mut self, cell: impl Into<String>) -> Self {
        self.cell = Some(cell.into());
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn sides(mut self, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        self.lhs = Some(lhs.into());
        self.rhs = Some(rhs.into());
        self
    }
}

impl Default for Report {
    fn default() -> Self {
        Report { pass: true, violations: Vec::new() }
    }
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, violation: Violation) {
        self.pass = false;
        self.violations.push(violation);
    }

    pub fn merge(&mut self, other: Report) {
        self.pass &= other.pass;
        self.violations.extend(other.violations);
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    /// One-line description of the first violation, for error messages.
    pub fn summary(&self) -> String {
        match self.first() {
            None => "pass".to_string(),
            Some(v) => {
                let mut s = v.check.clone();
                if let Some(c) = &v.cell {
                    s.push_str(&format!(" at `{c}`"));
                }
                if let Some(k) = v.k {
                    s.push_str(&format!(" (k = {k})"));
                }
                if let (Some(l), Some(r)) = (&v.lhs, &v.rhs) {
                    s.push_str(&format!(": {l} ≠ {r}"));
                }
                s
            }
        }
    }
}
