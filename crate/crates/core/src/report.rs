//! Structured axiom-check results shared by every checker.

use std::collections::BTreeMap;
use std::fmt;

/// Violations kept per law before further ones are only counted.
pub const VIOLATION_CAP: usize = 100;

/// One failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Stable law name, e.g. `bicategory.pentagon`.
    pub law: String,
    /// The cells witnessing the failure, outermost first.
    pub at: Vec<String>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.law, self.at.join(","))?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    violations: Vec<Violation>,
    per_law: BTreeMap<String, usize>,
    suppressed: BTreeMap<String, usize>,
    /// Number of axiom instances evaluated.
    pub instances: u64,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Violations beyond [`VIOLATION_CAP`] that were counted but not stored.
    pub fn suppressed(&self) -> &BTreeMap<String, usize> {
        &self.suppressed
    }

    pub fn total_violations(&self) -> usize {
        self.violations.len() + self.suppressed.values().sum::<usize>()
    }

    pub fn laws_violated(&self) -> Vec<&str> {
        self.per_law.keys().map(String::as_str).collect()
    }

    pub fn has_violation(&self, law: &str) -> bool {
        self.per_law.contains_key(law)
    }

    pub fn has_violation_at(&self, law: &str, at: &[&str]) -> bool {
        self.violations
            .iter()
            .any(|v| v.law == law && v.at.iter().map(String::as_str).eq(at.iter().copied()))
    }

    pub fn push(&mut self, law: &str, at: Vec<String>, detail: impl Into<String>) {
        let n = self.per_law.entry(law.to_string()).or_insert(0);
        if *n >= VIOLATION_CAP {
            *self.suppressed.entry(law.to_string()).or_insert(0) += 1;
            return;
        }
        *n += 1;
        self.violations.push(Violation {
            law: law.to_string(),
            at,
            detail: detail.into(),
        });
    }

    /// Record one evaluated instance; push a violation if `ok` is false.
    pub fn expect(&mut self, ok: bool, law: &str, at: impl FnOnce() -> Vec<String>) {
        self.instances += 1;
        if !ok {
            self.push(law, at(), "");
        }
    }

    /// Fold another report in, prefixing its witnesses with `context`.
    pub fn absorb(&mut self, other: Report, context: &str) {
        self.instances += other.instances;
        for v in other.violations {
            let mut at = Vec::with_capacity(v.at.len() + 1);
            if !context.is_empty() {
                at.push(context.to_string());
            }
            at.extend(v.at);
            self.push(&v.law, at, v.detail);
        }
        for (law, n) in other.suppressed {
            *self.suppressed.entry(law).or_insert(0) += n;
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "PASS ({} instances checked)", self.instances);
        }
        writeln!(
            f,
            "FAIL ({} violations, {} instances checked)",
            self.total_violations(),
            self.instances
        )?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        for (law, n) in &self.suppressed {
            writeln!(f, "  ... {n} more {law} violations suppressed")?;
        }
        Ok(())
    }
}
