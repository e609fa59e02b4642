//! Machine-readable verification reports: a fixed-schema JSON document
//! listing one verdict per claim, plus stable exit-code mapping.
//!
//! Reports are fully deterministic: claim order is the order of insertion
//! (suites insert in a fixed order), serialization uses ordered struct
//! fields, and no timing or host information is recorded.

use serde::Serialize;

pub use crate::chartab::Verdict;

/// Schema identifier pinned into every report.
pub const SCHEMA: &str = "szk-report-v1";

/// One checked claim.
#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    /// Stable kebab-case identifier, unique within a suite.
    pub id: String,
    /// What is being checked, in plain language.
    pub claim: String,
    pub verdict: Verdict,
    /// Witness, counts, or counterexample.
    pub detail: String,
}

/// A suite run over one group (or a fixed list of groups).
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub toolkit_version: &'static str,
    pub suite: String,
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub verdict: Verdict,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn new(suite: &str, group: &str, field: Option<String>) -> Self {
        Report {
            schema: SCHEMA,
            toolkit_version: env!("CARGO_PKG_VERSION"),
            suite: suite.to_string(),
            group: group.to_string(),
            field,
            verdict: Verdict::Pass,
            claims: Vec::new(),
        }
    }

    /// Append a claim and fold its verdict into the overall one
    /// (fail dominates inconclusive dominates pass).
    pub fn push(&mut self, id: &str, claim: &str, verdict: Verdict, detail: String) {
        self.claims.push(Claim {
            id: id.to_string(),
            claim: claim.to_string(),
            verdict,
            detail,
        });
        self.verdict = match (self.verdict, verdict) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
            _ => Verdict::Pass,
        };
    }

    /// Convenience: pass/fail from a boolean.
    pub fn push_bool(&mut self, id: &str, claim: &str, ok: bool, detail: String) {
        self.push(
            id,
            claim,
            if ok { Verdict::Pass } else { Verdict::Fail },
            detail,
        );
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for cl in &self.claims {
            match cl.verdict {
                Verdict::Pass => c.0 += 1,
                Verdict::Fail => c.1 += 1,
                Verdict::Inconclusive => c.2 += 1,
            }
        }
        c
    }

    /// Deterministic pretty JSON (trailing newline included).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// Process exit code: 0 all-pass, 1 any failure (inconclusive counts
    /// as failure only under `strict`).
    pub fn exit_code(&self, strict: bool) -> i32 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => {
                if strict {
                    1
                } else {
                    0
                }
            }
        }
    }

    /// One human-readable line per claim plus a summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {} on {}\n", self.suite, self.group));
        for c in &self.claims {
            let tag = match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Inconclusive => "inconclusive",
            };
            out.push_str(&format!("  [{tag}] {} — {}\n", c.id, c.detail));
        }
        let (p, f, i) = self.counts();
        out.push_str(&format!(
            "  {p} passed, {f} failed, {i} inconclusive\n"
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_folding_and_exit_codes() {
        let mut r = Report::new("demo", "A(m=3,l=1)", None);
        r.push("a", "first", Verdict::Pass, "ok".into());
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.exit_code(false), 0);
        r.push("b", "second", Verdict::Inconclusive, "maybe".into());
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert_eq!(r.exit_code(false), 0);
        assert_eq!(r.exit_code(true), 1);
        r.push("c", "third", Verdict::Fail, "bad".into());
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.exit_code(false), 1);
        assert_eq!(r.counts(), (1, 1, 1));
    }

    #[test]
    fn json_is_deterministic_and_schema_pinned() {
        let mut r = Report::new("demo", "sz(8)", Some("gf(m=3,poly=0xb)".into()));
        r.push_bool("x", "sample", true, "65 conjugates".into());
        let a = r.to_json();
        let b = r.to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": \"szk-report-v1\""));
        assert!(a.ends_with('\n'));
        let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed["verdict"], "pass");
        assert_eq!(parsed["claims"][0]["id"], "x");
    }
}
