use std::fmt;

use serde::Serialize;

/// A named pass/fail outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn pass(name: impl Into<String>) -> Self {
        Self { name: name.into(), passed: true, detail: None }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: false, detail: Some(detail.into()) }
    }

    pub fn from_bool(name: impl Into<String>, passed: bool, detail_on_fail: impl FnOnce() -> String) -> Self {
        if passed {
            Self::pass(name)
        } else {
            Self::fail(name, detail_on_fail())
        }
    }
}

/// An ordered list of named verdicts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    /// Appends every verdict of `other`, prefixing names with `prefix/`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut v in other.verdicts {
            v.name = format!("{prefix}/{}", v.name);
            self.verdicts.push(v);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.get(name).map(|v| v.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            let tag = if v.passed { "PASS" } else { "FAIL" };
            match &v.detail {
                Some(d) => writeln!(f, "{tag} {} ({d})", v.name)?,
                None => writeln!(f, "{tag} {}", v.name)?,
            }
        }
        Ok(())
    }
}
