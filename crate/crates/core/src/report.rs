//! Validation reports: one entry per checked identity, in a fixed order.

use std::fmt;

use serde::{Deserialize, Serialize};

/// The first basis input on which two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Flat index into the domain basis.
    pub input: usize,
    /// Per-factor basis indices of `input`.
    pub multi_index: Vec<usize>,
    /// Rendered values of the two sides (or a free-form description).
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "input #{} {:?}: lhs = {}, rhs = {}", self.input, self.multi_index, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub axiom: String,
    pub tier: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub subject: String,
    pub entries: Vec<CheckEntry>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            entries: Vec::new(),
        }
    }

    /// Records the outcome of one identity.
    pub fn record(&mut self, tier: &str, axiom: &str, witness: Option<Witness>) {
        self.entries.push(CheckEntry {
            axiom: axiom.to_string(),
            tier: tier.to_string(),
            passed: witness.is_none(),
            witness,
            detail: None,
        });
    }

    /// Records a yes/no fact with an optional explanation.
    pub fn record_flag(&mut self, tier: &str, axiom: &str, passed: bool, detail: Option<String>) {
        self.entries.push(CheckEntry {
            axiom: axiom.to_string(),
            tier: tier.to_string(),
            passed,
            witness: None,
            detail,
        });
    }

    /// Appends every entry of `other`, prefixing the tiers with `prefix`.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for mut e in other.entries {
            if !prefix.is_empty() {
                e.tier = format!("{prefix}/{}", e.tier);
            }
            self.entries.push(e);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    /// True iff every entry in `tier` passed (and the tier is non-empty).
    pub fn tier_passed(&self, tier: &str) -> bool {
        let mut any = false;
        for e in self.entries.iter().filter(|e| e.tier == tier) {
            any = true;
            if !e.passed {
                return false;
            }
        }
        any
    }

    pub fn entry(&self, axiom: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    /// Whether the named entry exists and passed.
    pub fn passed(&self, axiom: &str) -> bool {
        self.entry(axiom).is_some_and(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.failures().map(|e| e.axiom.as_str()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for e in &self.entries {
            let mark = if e.passed { "PASS" } else { "FAIL" };
            write!(f, "  {mark} [{}] {}", e.tier, e.axiom)?;
            if let Some(d) = &e.detail {
                write!(f, " ({d})")?;
            }
            if let Some(w) = &e.witness {
                write!(f, "\n       witness {w}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "  {} checks, {} failed", self.entries.len(), failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiers_and_lookup() {
        let mut r = ValidationReport::new("x");
        r.record("a", "one", None);
        r.record(
            "b",
            "two",
            Some(Witness {
                input: 3,
                multi_index: vec![1, 1],
                lhs: "0".into(),
                rhs: "e1".into(),
            }),
        );
        assert!(r.tier_passed("a"));
        assert!(!r.tier_passed("b"));
        assert!(!r.tier_passed("missing"));
        assert_eq!(r.failed_axioms(), vec!["two"]);
        assert!(r.passed("one") && !r.passed("two") && !r.passed("three"));
        let text = r.to_string();
        assert!(text.contains("FAIL [b] two") && text.contains("input #3"));
        let back: ValidationReport = serde_json::from_value(r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
