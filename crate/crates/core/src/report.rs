//! Check records and their JSON / Markdown renderings.

use std::fmt::Write;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    /// `<suite>/<name>`
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
    /// extra Markdown line, not serialized
    #[serde(skip)]
    pub note: Option<String>,
}

impl CheckRecord {
    /// Passes when the rendered values coincide.
    pub fn eq(id: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = Status::from_bool(expected == actual);
        CheckRecord {
            id: id.into(),
            expected,
            actual,
            status,
            note: None,
        }
    }

    pub fn with_status(
        id: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        ok: bool,
    ) -> Self {
        CheckRecord {
            id: id.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            status: Status::from_bool(ok),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn suite(&self) -> &str {
        self.id.split('/').next().unwrap_or("")
    }

    pub fn name(&self) -> &str {
        self.id.split_once('/').map_or(self.id.as_str(), |(_, n)| n)
    }
}

/// One line of the catalog table: a space and its antipodal sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub space: String,
    /// (set name, expected, actual)
    pub sets: Vec<(String, usize, usize)>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub status: Status,
    #[serde(skip)]
    pub table: Vec<TableRow>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let status = Status::from_bool(checks.iter().all(CheckRecord::passed));
        VerificationReport {
            suite: suite.into(),
            checks,
            status,
            table: Vec::new(),
        }
    }

    pub fn empty() -> Self {
        Self::new("", Vec::new())
    }

    /// Concatenates reports; the suite names are joined with commas.
    pub fn merge(reports: Vec<VerificationReport>) -> Self {
        let suite = reports
            .iter()
            .map(|r| r.suite.as_str())
            .filter(|s| !s.is_empty())
            .collect::<Vec<_>>()
            .join(",");
        let mut checks = Vec::new();
        let mut table = Vec::new();
        for r in reports {
            checks.extend(r.checks);
            table.extend(r.table);
        }
        let mut out = Self::new(suite, checks);
        out.table = table;
        out
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# verify: {}", if self.suite.is_empty() { "-" } else { &self.suite }).unwrap();
        let mut current = None;
        for c in &self.checks {
            if current != Some(c.suite()) {
                current = Some(c.suite());
                writeln!(out, "\n## {}\n", c.suite()).unwrap();
            }
            writeln!(
                out,
                "{}: expected {}, actual {} [{}]",
                c.name(),
                c.expected,
                c.actual,
                c.status.as_str()
            )
            .unwrap();
            if let Some(n) = &c.note {
                writeln!(out, "{}", n).unwrap();
            }
        }
        if !self.table.is_empty() {
            writeln!(out, "\n## catalog table\n").unwrap();
            writeln!(out, "| Space | Sets | Expected | Actual | Status |").unwrap();
            writeln!(out, "|---|---|---|---|---|").unwrap();
            for row in &self.table {
                let join = |f: &dyn Fn(&(String, usize, usize)) -> String| {
                    row.sets.iter().map(f).collect::<Vec<_>>().join(", ")
                };
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    row.space,
                    join(&|s| s.0.clone()),
                    join(&|s| s.1.to_string()),
                    join(&|s| s.2.to_string()),
                    row.status.as_str()
                )
                .unwrap();
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        writeln!(
            out,
            "\n{} of {} checks passed: {}",
            passed,
            self.checks.len(),
            self.status.as_str()
        )
        .unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_json() {
        assert_eq!(
            VerificationReport::empty().to_json(),
            r#"{"suite":"","checks":[],"status":"pass"}"#
        );
    }

    #[test]
    fn records_sorted_and_status_rolled_up() {
        let r = VerificationReport::new(
            "x",
            vec![
                CheckRecord::eq("x/b", 1, 1),
                CheckRecord::eq("x/a", 1, 2),
            ],
        );
        assert_eq!(r.checks[0].id, "x/a");
        assert_eq!(r.status, Status::Fail);
        assert!(r.to_markdown().contains("a: expected 1, actual 2 [fail]"));
    }
}
