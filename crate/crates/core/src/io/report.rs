//! Deterministic run reports, rendered as text or as one JSON document.

use crate::rep_theory::AuditStatus;
use serde::Serialize;
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "AUDIT-AGREE")]
    AuditAgree,
    #[serde(rename = "AUDIT-DISAGREE")]
    AuditDisagree,
}

impl Status {
    pub fn check(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl From<AuditStatus> for Status {
    fn from(s: AuditStatus) -> Self {
        match s {
            AuditStatus::Agree => Status::AuditAgree,
            AuditStatus::Disagree => Status::AuditDisagree,
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::AuditAgree => "AUDIT-AGREE",
            Status::AuditDisagree => "AUDIT-DISAGREE",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Datum {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub name: String,
    pub entries: Vec<Entry>,
    pub data: Vec<Datum>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            entries: Vec::new(),
            data: Vec::new(),
        }
    }

    pub fn entry(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) -> &mut Entry {
        self.entries.push(Entry {
            name: name.into(),
            status,
            detail: detail.into(),
            residual: None,
            witness: None,
        });
        self.entries.last_mut().expect("just pushed")
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) -> &mut Entry {
        self.entry(name, Status::check(ok), detail)
    }

    /// Pass/fail on a residual against a tolerance.
    pub fn residual(&mut self, name: impl Into<String>, residual: f64, tol: f64) -> &mut Entry {
        let e = self.entry(name, Status::check(residual < tol), format!("tolerance {}", sci(tol)));
        e.residual = Some(residual);
        e
    }

    pub fn datum(&mut self, key: impl Into<String>, value: impl ToString) {
        self.data.push(Datum {
            key: key.into(),
            value: value.to_string(),
        });
    }
}

impl Entry {
    pub fn with_witness(&mut self, w: Option<String>) -> &mut Self {
        self.witness = w;
        self
    }

    pub fn with_residual(&mut self, r: f64) -> &mut Self {
        self.residual = Some(r);
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: String,
    pub command: String,
    pub seed: String,
    pub inputs: Vec<String>,
    pub sections: Vec<Section>,
}

/// Fixed-width scientific notation used for every residual in text output.
pub fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64, inputs: Vec<String>) -> Self {
        Self {
            tool: "kacforge".into(),
            command: command.into(),
            seed: format!("{seed:#x}"),
            inputs,
            sections: Vec::new(),
        }
    }

    pub fn push(&mut self, s: Section) {
        self.sections.push(s);
    }

    pub fn entries(&self) -> impl Iterator<Item = &Entry> {
        self.sections.iter().flat_map(|s| s.entries.iter())
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries().filter(|e| e.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    /// 0 when nothing failed, 2 on a tolerance or check failure.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            2
        }
    }

    pub fn find(&self, section: &str, name: &str) -> Option<&Entry> {
        self.sections
            .iter()
            .filter(|s| s.name == section)
            .flat_map(|s| s.entries.iter())
            .find(|e| e.name == name)
    }

    pub fn datum(&self, section: &str, key: &str) -> Option<&str> {
        self.sections
            .iter()
            .filter(|s| s.name == section)
            .flat_map(|s| s.data.iter())
            .find(|d| d.key == key)
            .map(|d| d.value.as_str())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.tool, self.command);
        let _ = writeln!(out, "seed: {}", self.seed);
        if !self.inputs.is_empty() {
            let _ = writeln!(out, "inputs: {}", self.inputs.join(", "));
        }
        for s in &self.sections {
            let _ = writeln!(out, "\n[{}]", s.name);
            for e in &s.entries {
                let _ = write!(out, "  {:<14} {}", e.status.to_string(), e.name);
                if let Some(r) = e.residual {
                    let _ = write!(out, "  residual {}", sci(r));
                }
                if !e.detail.is_empty() {
                    let _ = write!(out, "  ({})", e.detail);
                }
                out.push('\n');
                if let Some(w) = &e.witness {
                    let _ = writeln!(out, "      witness: {w}");
                }
            }
            for d in &s.data {
                if d.value.contains('\n') {
                    let _ = writeln!(out, "  {}:", d.key);
                    for line in d.value.lines() {
                        let _ = writeln!(out, "    {line}");
                    }
                } else {
                    let _ = writeln!(out, "  {}: {}", d.key, d.value);
                }
            }
        }
        let _ = writeln!(
            out,
            "\nsummary: {} PASS, {} FAIL, {} AUDIT-AGREE, {} AUDIT-DISAGREE",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::AuditAgree),
            self.count(Status::AuditDisagree)
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
