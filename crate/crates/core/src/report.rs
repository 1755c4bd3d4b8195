//! Run reports with a stable line grammar, as plain text or one JSON record per line.

use std::fmt::Write as _;

use serde::Serialize;

use crate::complex::{Check, Diagnostics, HomologyReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Record {
    Command { line: String },
    Input { path: String, sha256: String },
    Check { name: String, pass: bool, detail: String },
    Homology { degree: i32, rank: usize, torsion: Vec<String> },
    Value { name: String, value: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunReport {
    pub records: Vec<Record>,
    /// Wall-clock time; never part of the determinism contract.
    pub elapsed_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            records: vec![Record::Command {
                line: command.into(),
            }],
            elapsed_ms: None,
        }
    }

    pub fn input(&mut self, path: impl Into<String>, sha256: impl Into<String>) {
        self.records.push(Record::Input {
            path: path.into(),
            sha256: sha256.into(),
        });
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.records.push(Record::Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn add_check(&mut self, c: &Check) {
        self.check(c.name.clone(), c.pass, c.detail.clone());
    }

    pub fn add_diagnostics(&mut self, d: &Diagnostics) {
        for c in &d.checks {
            self.add_check(c);
        }
    }

    pub fn value(&mut self, name: impl Into<String>, value: impl ToString) {
        self.records.push(Record::Value {
            name: name.into(),
            value: value.to_string(),
        });
    }

    pub fn homology(&mut self, h: &HomologyReport) {
        for g in &h.groups {
            self.records.push(Record::Homology {
                degree: g.degree,
                rank: g.rank,
                torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
            });
        }
    }

    pub fn all_pass(&self) -> bool {
        self.records
            .iter()
            .all(|r| !matches!(r, Record::Check { pass: false, .. }))
    }

    /// 0 when every check passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            match r {
                Record::Command { line } => writeln!(out, "COMMAND {line}"),
                Record::Input { path, sha256 } => writeln!(out, "INPUT {path} sha256 {sha256}"),
                Record::Check { name, pass, detail } => writeln!(
                    out,
                    "CHECK {name} {} {detail}",
                    if *pass { "PASS" } else { "FAIL" }
                ),
                Record::Homology {
                    degree,
                    rank,
                    torsion,
                } => writeln!(out, "H{degree}: rank {rank} torsion [{}]", torsion.join(",")),
                Record::Value { name, value } => writeln!(out, "VALUE {name} = {value}"),
            }
            .expect("writing to a string");
        }
        if let Some(ms) = self.elapsed_ms {
            writeln!(out, "TIME {ms} ms").expect("writing to a string");
        }
        writeln!(out, "EXIT {}", self.exit_code()).expect("writing to a string");
        out
    }

    pub fn to_structured(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        if let Some(ms) = self.elapsed_ms {
            writeln!(out, r#"{{"kind":"time","ms":{ms}}}"#).expect("writing to a string");
        }
        writeln!(out, r#"{{"kind":"exit","code":{}}}"#, self.exit_code()).expect("writing to a string");
        out
    }
}
