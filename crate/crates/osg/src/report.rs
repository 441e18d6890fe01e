//! JSON-lines verification reports.
//!
//! A report is one `header` row, one `result` row per check run, and a
//! trailing `summary` row. Result rows carry no run metadata, so two runs
//! over the same corpus and flags differ at most in the header.

use std::io::{self, BufRead, Write};

use osg_core::outcome::{Binding, CheckResult, Direction, Status, Value, Witness};
use osg_core::verifier::Tally;
use osg_core::{Conventions, Potency, Subset};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("report line {line}: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("report line {line}: {message}")]
    Shape { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub tool: String,
    pub version: String,
    /// `verify` or `conjecture`.
    pub command: String,
    pub corpus: String,
    pub corpus_sha256: String,
    pub structures: usize,
    pub potencies: Vec<u32>,
    pub checks: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conjecture: Option<String>,
    pub strict_bi_interior: bool,
    pub exempt_singletons: bool,
}

impl Header {
    pub fn conventions(&self) -> Conventions {
        Conventions {
            strict_bi_interior: self.strict_bi_interior,
            exempt_singletons: self.exempt_singletons,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessValue {
    /// Bit string, character `i` for element `i`.
    Subset(String),
    Element(usize),
    Potency(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub var: String,
    #[serde(flatten)]
    pub value: WitnessValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRow {
    pub structure: String,
    pub check: String,
    pub m: u32,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<WitnessEntry>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub direction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub check: String,
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub results: usize,
    pub checks: Vec<CheckTally>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Row {
    Header(Header),
    Result(ResultRow),
    Summary(Summary),
}

impl From<&CheckResult> for ResultRow {
    fn from(r: &CheckResult) -> Self {
        let witness = r.witness.as_ref().map(|w| {
            w.iter()
                .map(|b| WitnessEntry {
                    var: b.var.clone(),
                    value: match b.value {
                        Value::Subset(s) => WitnessValue::Subset(s.to_bit_string()),
                        Value::Element(a) => WitnessValue::Element(a),
                        Value::Potency(k) => WitnessValue::Potency(k.get() as u32),
                    },
                })
                .collect()
        });
        ResultRow {
            structure: r.structure.clone(),
            check: r.check.clone(),
            m: r.m.get() as u32,
            status: r.status.as_str().into(),
            witness,
            direction: r.direction.map(|d| d.as_str().into()),
            error: match &r.status {
                Status::Error(e) => Some(e.clone()),
                _ => None,
            },
        }
    }
}

impl ResultRow {
    /// Rebuilds the in-memory result; subsets keep the width they were
    /// written with, so a mismatched corpus is caught at replay.
    pub fn to_result(&self) -> Result<CheckResult, String> {
        let m = Potency::new(self.m).map_err(|e| e.to_string())?;
        let status = match self.status.as_str() {
            "holds" => Status::Holds,
            "fails" => Status::Fails,
            "skipped" => Status::Skipped,
            "error" => Status::Error(self.error.clone().unwrap_or_default()),
            other => return Err(format!("unknown status `{other}`")),
        };
        let witness = match &self.witness {
            None => None,
            Some(entries) => Some(
                entries
                    .iter()
                    .map(|e| {
                        let value = match &e.value {
                            WitnessValue::Subset(bits) => Value::Subset(
                                Subset::from_bit_string(bits).map_err(|e| e.to_string())?,
                            ),
                            WitnessValue::Element(a) => Value::Element(*a),
                            WitnessValue::Potency(k) => {
                                Value::Potency(Potency::new(*k).map_err(|e| e.to_string())?)
                            }
                        };
                        Ok(Binding::new(e.var.clone(), value))
                    })
                    .collect::<Result<Witness, String>>()?,
            ),
        };
        let direction = match &self.direction {
            None => None,
            Some(d) => Some(Direction::parse(d).ok_or_else(|| format!("unknown direction `{d}`"))?),
        };
        Ok(CheckResult {
            structure: self.structure.clone(),
            check: self.check.clone(),
            m,
            status,
            witness,
            direction,
        })
    }
}

pub fn corpus_hash(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Counts per check, in `checks` order.
pub fn summarize(checks: &[String], results: &[CheckResult]) -> Summary {
    let tallies = checks
        .iter()
        .map(|c| {
            let mut t = Tally::default();
            for r in results.iter().filter(|r| &r.check == c) {
                match r.status {
                    Status::Holds => t.holds += 1,
                    Status::Fails => t.fails += 1,
                    Status::Skipped => t.skipped += 1,
                    Status::Error(_) => t.errors += 1,
                }
            }
            CheckTally {
                check: c.clone(),
                holds: t.holds,
                fails: t.fails,
                skipped: t.skipped,
                errors: t.errors,
            }
        })
        .collect();
    Summary {
        results: results.len(),
        checks: tallies,
    }
}

pub fn write_report<W: Write>(
    mut w: W,
    header: &Header,
    results: &[CheckResult],
) -> io::Result<Summary> {
    let mut line = |row: &Row| -> io::Result<()> {
        serde_json::to_writer(&mut w, row)?;
        w.write_all(b"\n")
    };
    line(&Row::Header(header.clone()))?;
    for r in results {
        line(&Row::Result(r.into()))?;
    }
    let summary = summarize(&header.checks, results);
    line(&Row::Summary(summary.clone()))?;
    w.flush()?;
    Ok(summary)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub header: Header,
    pub results: Vec<ResultRow>,
    pub summary: Option<Summary>,
}

pub fn read_report<R: BufRead>(r: R) -> Result<Report, ReportError> {
    let mut header = None;
    let mut results = Vec::new();
    let mut summary = None;
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        let n = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let row: Row =
            serde_json::from_str(&line).map_err(|source| ReportError::Json { line: n, source })?;
        let shape = |message: &str| ReportError::Shape {
            line: n,
            message: message.into(),
        };
        match row {
            Row::Header(h) if header.is_none() && n == 1 => header = Some(h),
            Row::Header(_) => return Err(shape("header must be the first row and appear once")),
            Row::Result(_) | Row::Summary(_) if header.is_none() => {
                return Err(shape("missing header row"))
            }
            Row::Result(_) | Row::Summary(_) if summary.is_some() => {
                return Err(shape("rows after the summary"))
            }
            Row::Result(row) => results.push(row),
            Row::Summary(s) => summary = Some(s),
        }
    }
    let header = header.ok_or(ReportError::Shape {
        line: 1,
        message: "empty report".into(),
    })?;
    Ok(Report {
        header,
        results,
        summary,
    })
}
