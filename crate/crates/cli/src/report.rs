use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "sphere-forge/report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Informational command with nothing to check.
    Info,
    Budget,
    Error,
}

impl Verdict {
    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Info => "INFO",
            Verdict::Budget => "BUDGET",
            Verdict::Error => "ERROR",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub index: usize,
    pub line: usize,
    pub command: String,
    pub verdict: Verdict,
    /// Short outcome word, e.g. `smooth`, `true`, `isomorphic`.
    pub outcome: String,
    pub expected: Option<String>,
    pub detail: Value,
    pub budget: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_file: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub settings: Value,
    pub entries: Vec<Entry>,
    /// Set when execution stopped early; the remaining statements did not run.
    pub aborted: Option<String>,
    pub total: Duration,
}

impl Report {
    fn count(&self, v: Verdict) -> usize {
        self.entries.iter().filter(|e| e.verdict == v).count()
    }

    /// 3 if any statement errored, else 2 if any budget ran out, else 1 if
    /// any check failed, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.count(Verdict::Error) > 0 {
            3
        } else if self.count(Verdict::Budget) > 0 {
            2
        } else if self.count(Verdict::Fail) > 0 {
            1
        } else {
            0
        }
    }

    fn summary(&self) -> Value {
        json!({
            "commands": self.entries.len(),
            "passed": self.count(Verdict::Pass),
            "info": self.count(Verdict::Info),
            "failed": self.count(Verdict::Fail),
            "budget_exhausted": self.count(Verdict::Budget),
            "errors": self.count(Verdict::Error),
            "aborted": self.aborted,
            "exit_code": self.exit_code(),
        })
    }

    /// The part of the report that depends only on the script and budgets.
    pub fn deterministic_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "settings": self.settings,
            "results": self.entries,
            "summary": self.summary(),
        })
    }

    pub fn to_json(&self) -> String {
        let timing = json!({
            "total_seconds": self.total.as_secs_f64(),
            "commands": self.entries.iter().map(|e| json!({"index": e.index, "seconds": e.elapsed.as_secs_f64()})).collect::<Vec<_>>(),
        });
        let doc = json!({ "report": self.deterministic_json(), "timing": timing });
        serde_json::to_string_pretty(&doc).expect("report is valid JSON") + "\n"
    }

    pub fn to_text(&self) -> String {
        let rows: Vec<[String; 6]> = self
            .entries
            .iter()
            .map(|e| {
                let outcome = match (&e.expected, e.verdict) {
                    (Some(x), Verdict::Fail) => format!("{} (expected {x})", e.outcome),
                    _ => e.outcome.clone(),
                };
                [
                    e.index.to_string(),
                    e.line.to_string(),
                    e.command.clone(),
                    e.verdict.label().to_string(),
                    outcome,
                    format!("{:.3}s", e.elapsed.as_secs_f64()),
                ]
            })
            .collect();
        let head = ["#", "line", "command", "verdict", "outcome", "time"].map(String::from);
        let mut width = head.each_ref().map(|h| h.len());
        for r in &rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        for r in std::iter::once(&head).chain(&rows) {
            let mut line = String::new();
            for (i, (c, w)) in r.iter().zip(width).enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                let pad = w - c.chars().count();
                if i < 2 {
                    line.push_str(&" ".repeat(pad));
                    line.push_str(c);
                } else {
                    line.push_str(c);
                    line.push_str(&" ".repeat(pad));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        for e in &self.entries {
            if matches!(e.verdict, Verdict::Error | Verdict::Budget) {
                if let Some(msg) = e.detail.get("message").and_then(Value::as_str) {
                    let _ = writeln!(out, "[{}] {msg}", e.index);
                }
            }
        }
        if let Some(why) = &self.aborted {
            let _ = writeln!(out, "aborted: {why}");
        }
        let _ = writeln!(
            out,
            "{} commands: {} passed, {} info, {} failed, {} budget, {} errors; exit {}",
            self.entries.len(),
            self.count(Verdict::Pass),
            self.count(Verdict::Info),
            self.count(Verdict::Fail),
            self.count(Verdict::Budget),
            self.count(Verdict::Error),
            self.exit_code()
        );
        out
    }
}
