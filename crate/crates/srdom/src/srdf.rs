//! Signed Roman dominating functions: vertex labelings over {−1, 1, 2},
//! their weight, and the two-condition verifier.
//!
//! A labeling is a signed Roman dominating function (SRDF) when
//! (a) every closed-neighborhood sum is at least 1, and
//! (b) every vertex labeled −1 has a neighbor labeled 2.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("illegal label value {value} at position {index}; allowed values are -1, 1, 2")]
    IllegalValue { index: usize, value: i32 },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("labeling has {labels} values but the graph has {order} vertices")]
    LengthMismatch { labels: usize, order: usize },
}

/// One vertex label. 0 is not a legal value, so the type has exactly three
/// inhabitants; `Ord` follows the numeric order −1 < 1 < 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    MinusOne,
    One,
    Two,
}

impl Label {
    /// All labels in ascending value order.
    pub const ALL: [Label; 3] = [Label::MinusOne, Label::One, Label::Two];

    pub fn value(self) -> i32 {
        match self {
            Label::MinusOne => -1,
            Label::One => 1,
            Label::Two => 2,
        }
    }

    pub fn from_value(value: i32) -> Option<Label> {
        match value {
            -1 => Some(Label::MinusOne),
            1 => Some(Label::One),
            2 => Some(Label::Two),
            _ => None,
        }
    }
}

/// A vertex labeling f: V → {−1, 1, 2}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    values: Vec<Label>,
}

impl Labeling {
    pub fn new(values: Vec<Label>) -> Self {
        Labeling { values }
    }

    /// Builds a labeling from raw integers, rejecting anything outside
    /// {−1, 1, 2}.
    pub fn from_values(values: &[i32]) -> Result<Self, LabelingError> {
        let labels = values
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                Label::from_value(value).ok_or(LabelingError::IllegalValue { index, value })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Labeling { values: labels })
    }

    pub fn all_ones(n: usize) -> Self {
        Labeling {
            values: vec![Label::One; n],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> Label {
        self.values[v]
    }

    pub fn set(&mut self, v: usize, label: Label) {
        self.values[v] = label;
    }

    pub fn labels(&self) -> &[Label] {
        &self.values
    }

    pub fn values(&self) -> impl Iterator<Item = i32> + '_ {
        self.values.iter().map(|l| l.value())
    }

    /// Total weight w(f) = Σ f(v); equals 2|V_2| + |V_1| − |V_{−1}|.
    pub fn weight(&self) -> i32 {
        self.values.iter().map(|l| l.value()).sum()
    }

    /// Sizes of the induced partition (|V_{−1}|, |V_1|, |V_2|).
    pub fn partition_counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for l in &self.values {
            match l {
                Label::MinusOne => counts.0 += 1,
                Label::One => counts.1 += 1,
                Label::Two => counts.2 += 1,
            }
        }
        counts
    }

    /// Vertices carrying the given label, ascending.
    pub fn vertices_with(&self, label: Label) -> impl Iterator<Item = usize> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(move |(_, &l)| l == label)
            .map(|(v, _)| v)
    }
}

/// Outcome of checking both SRDF conditions on every vertex. The verifier
/// never short-circuits: all violations are collected so a broken
/// construction can be diagnosed in one pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub weight: i32,
    /// Vertices x with f(N[x]) < 1.
    pub condition_a_failures: Vec<usize>,
    /// Vertices x with f(x) = −1 and no neighbor labeled 2.
    pub condition_b_failures: Vec<usize>,
    /// f(N[x]) for every vertex x, in index order.
    pub per_vertex_closed_sums: Vec<i32>,
}

/// Sum of f over the closed neighborhood N[v].
///
/// Panics if `v` is out of range or the labeling length differs from the
/// graph order.
pub fn closed_sum(g: &Graph, f: &Labeling, v: usize) -> i32 {
    assert!(v < g.order(), "vertex index {v} out of range");
    assert_eq!(f.len(), g.order(), "labeling length mismatch");
    f.get(v).value()
        + g.neighbors(v)
            .iter()
            .map(|&u| f.get(u).value())
            .sum::<i32>()
}

/// Checks both SRDF conditions for every vertex and reports all violations.
pub fn verify(g: &Graph, f: &Labeling) -> Result<VerificationReport, VerifyError> {
    if f.len() != g.order() {
        return Err(VerifyError::LengthMismatch {
            labels: f.len(),
            order: g.order(),
        });
    }
    let n = g.order();
    let mut condition_a_failures = Vec::new();
    let mut condition_b_failures = Vec::new();
    let mut per_vertex_closed_sums = Vec::with_capacity(n);
    for v in 0..n {
        let sum = closed_sum(g, f, v);
        per_vertex_closed_sums.push(sum);
        if sum < 1 {
            condition_a_failures.push(v);
        }
        if f.get(v) == Label::MinusOne && !g.neighbors(v).iter().any(|&u| f.get(u) == Label::Two) {
            condition_b_failures.push(v);
        }
    }
    Ok(VerificationReport {
        valid: condition_a_failures.is_empty() && condition_b_failures.is_empty(),
        weight: f.weight(),
        condition_a_failures,
        condition_b_failures,
        per_vertex_closed_sums,
    })
}
