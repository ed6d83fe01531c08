//! Line-oriented text records for labelings and verification results.
//!
//! Records are single lines of space-separated `key=value` tokens with a
//! fixed key order, so identical inputs always serialize identically.
//! Labels are comma-separated values in vertex-index order; −1 is written
//! as the two characters `-1` (0 is not a legal value, so the sign is
//! unambiguous).

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::{write_graph6, Graph6Error};
use crate::srdf::{verify, Labeling, VerificationReport};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecordError {
    #[error("empty labels list")]
    EmptyLabels,
    #[error("bad label token {token:?} at position {index}")]
    BadLabelToken { index: usize, token: String },
    #[error("label value {value} at position {index} is not one of -1, 1, 2")]
    IllegalLabelValue { index: usize, value: i64 },
    #[error("not a labeling record: expected leading 'record=labeling'")]
    NotALabelingRecord,
    #[error("missing field {0}")]
    MissingField(&'static str),
    #[error("malformed token {token:?}: expected key=value")]
    MalformedToken { token: String },
    #[error("bad value {value:?} for field {field}")]
    BadFieldValue { field: &'static str, value: String },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

/// Serializes labels as `v1,v2,...` in vertex-index order.
pub fn format_labels(f: &Labeling) -> String {
    let mut out = String::new();
    for (i, v) in f.values().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{v}");
    }
    out
}

/// Parses a comma-separated label list.
pub fn parse_labels(text: &str) -> Result<Labeling, RecordError> {
    if text.is_empty() {
        return Err(RecordError::EmptyLabels);
    }
    let mut values = Vec::new();
    for (index, token) in text.split(',').enumerate() {
        let value: i64 = token.parse().map_err(|_| RecordError::BadLabelToken {
            index,
            token: token.to_string(),
        })?;
        if !matches!(value, -1 | 1 | 2) {
            return Err(RecordError::IllegalLabelValue { index, value });
        }
        values.push(value as i32);
    }
    Ok(Labeling::from_values(&values).expect("values validated above"))
}

/// One labeling with its provenance, as printed by `solve` and `construct`.
/// `weight` and `valid` are derived from the graph and labels at
/// construction time, never supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingRecord {
    /// graph6 encoding of the graph.
    pub graph6: String,
    /// Family descriptor when the graph came from a generator.
    pub family: Option<String>,
    pub labeling: Labeling,
    pub weight: i32,
    pub valid: bool,
    /// Exact gamma when known for this graph.
    pub gamma: Option<i32>,
    /// Producer tag, e.g. `solver/exhaustive` or `construction/wheel`.
    pub source: String,
}

impl LabelingRecord {
    /// Builds a record, deriving `graph6`, `weight`, and `valid` from the
    /// graph and labeling.
    pub fn derive(
        graph: &Graph,
        labeling: Labeling,
        family: Option<String>,
        gamma: Option<i32>,
        source: impl Into<String>,
    ) -> Result<Self, RecordError> {
        let graph6 = write_graph6(graph)?;
        let report = verify(graph, &labeling).expect("record labeling matches graph order");
        Ok(LabelingRecord {
            graph6,
            family,
            weight: report.weight,
            valid: report.valid,
            labeling,
            gamma,
            source: source.into(),
        })
    }

    pub fn to_line(&self) -> String {
        let mut line = format!("record=labeling graph={}", self.graph6);
        if let Some(family) = &self.family {
            let _ = write!(line, " family={family}");
        }
        let _ = write!(
            line,
            " labels={} weight={} valid={}",
            format_labels(&self.labeling),
            self.weight,
            self.valid
        );
        if let Some(gamma) = self.gamma {
            let _ = write!(line, " gamma={gamma}");
        }
        let _ = write!(line, " source={}", self.source);
        line
    }

    /// Parses one record line as printed by [`LabelingRecord::to_line`].
    pub fn parse(line: &str) -> Result<Self, RecordError> {
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("record=labeling") {
            return Err(RecordError::NotALabelingRecord);
        }
        let mut graph6 = None;
        let mut family = None;
        let mut labels = None;
        let mut weight = None;
        let mut valid = None;
        let mut gamma = None;
        let mut source = None;
        for token in tokens {
            let (key, value) =
                token
                    .split_once('=')
                    .ok_or_else(|| RecordError::MalformedToken {
                        token: token.to_string(),
                    })?;
            match key {
                "graph" => graph6 = Some(value.to_string()),
                "family" => family = Some(value.to_string()),
                "labels" => labels = Some(parse_labels(value)?),
                "weight" => {
                    weight = Some(
                        value
                            .parse::<i32>()
                            .map_err(|_| RecordError::BadFieldValue {
                                field: "weight",
                                value: value.to_string(),
                            })?,
                    )
                }
                "valid" => {
                    valid = Some(
                        value
                            .parse::<bool>()
                            .map_err(|_| RecordError::BadFieldValue {
                                field: "valid",
                                value: value.to_string(),
                            })?,
                    )
                }
                "gamma" => {
                    gamma = Some(
                        value
                            .parse::<i32>()
                            .map_err(|_| RecordError::BadFieldValue {
                                field: "gamma",
                                value: value.to_string(),
                            })?,
                    )
                }
                "source" => source = Some(value.to_string()),
                _ => {
                    return Err(RecordError::BadFieldValue {
                        field: "record",
                        value: key.to_string(),
                    })
                }
            }
        }
        Ok(LabelingRecord {
            graph6: graph6.ok_or(RecordError::MissingField("graph"))?,
            family,
            labeling: labels.ok_or(RecordError::MissingField("labels"))?,
            weight: weight.ok_or(RecordError::MissingField("weight"))?,
            valid: valid.ok_or(RecordError::MissingField("valid"))?,
            gamma,
            source: source.ok_or(RecordError::MissingField("source"))?,
        })
    }
}

/// Formats a verification report as one record line.
pub fn verification_line(graph6: &str, f: &Labeling, report: &VerificationReport) -> String {
    let csv = |xs: &[usize]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let sums = report
        .per_vertex_closed_sums
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "record=verification graph={} labels={} weight={} valid={} condition-a-failures={} condition-b-failures={} closed-sums={}",
        graph6,
        format_labels(f),
        report.weight,
        report.valid,
        csv(&report.condition_a_failures),
        csv(&report.condition_b_failures),
        sums,
    )
}
