//! Timing and reporting for acceptance criteria.

use std::io::Write;
use std::time::{Duration, Instant};

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub elapsed: Duration,
    pub limit: Duration,
    pub note: String,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {}  {}  ({:.2} s, limit {} s){}{}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            if self.note.is_empty() { "" } else { ": " },
            self.note
        )
    }
}

/// Run `f`, time it against `limit`, and write one line straight to stderr
/// so the result is visible even when test output is captured.
pub fn criterion(id: u32, title: &str, limit_secs: u64, f: impl FnOnce() -> Result<String, String>) -> Outcome {
    let out = evaluate(id, title, limit_secs, f);
    let _ = writeln!(std::io::stderr().lock(), "{}", out.line());
    out
}

/// Run `f` and time it against `limit` without reporting.
pub fn evaluate(id: u32, title: &str, limit_secs: u64, f: impl FnOnce() -> Result<String, String>) -> Outcome {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_secs);
    let (ok, mut note) = match result {
        Ok(n) => (true, n),
        Err(n) => (false, n),
    };
    if elapsed > limit {
        note = format!("over time; {note}");
    }
    Outcome { id, title: title.to_string(), passed: ok && elapsed <= limit, elapsed, limit, note }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_respects_the_limit() {
        let o = evaluate(0, "trivial", 5, || Ok(String::new()));
        assert!(o.passed);
        let o = evaluate(0, "refused", 5, || Err("no".into()));
        assert!(!o.passed);
        assert!(o.line().contains("FAIL"));
        let o = evaluate(0, "slow", 0, || {
            std::thread::sleep(Duration::from_millis(5));
            Ok(String::new())
        });
        assert!(!o.passed && o.note.starts_with("over time"));
    }
}
