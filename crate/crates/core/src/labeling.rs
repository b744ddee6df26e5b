//! Vertex labelings, the induced arc labeling `g(u -> v) = f(v) - f(u)`,
//! and the `(alpha, beta, gamma)` arc-label counts.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::digraph::{Digraph, DigraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("vertex {vertex} has label {label}; labels must be 0 or 1")]
pub struct InvalidLabel {
    pub vertex: usize,
    pub label: u8,
}

/// A `{0,1}` labeling of the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct VertexLabeling(Vec<u8>);

impl TryFrom<Vec<u8>> for VertexLabeling {
    type Error = InvalidLabel;

    fn try_from(labels: Vec<u8>) -> Result<Self, InvalidLabel> {
        Self::new(labels)
    }
}

impl From<VertexLabeling> for Vec<u8> {
    fn from(f: VertexLabeling) -> Self {
        f.0
    }
}

impl VertexLabeling {
    pub fn new(labels: Vec<u8>) -> Result<Self, InvalidLabel> {
        if let Some((vertex, &label)) = labels.iter().enumerate().find(|(_, &l)| l > 1) {
            return Err(InvalidLabel { vertex, label });
        }
        Ok(Self(labels))
    }

    /// Builds a labeling from booleans (`true` is label 1).
    pub fn from_bools(bits: impl IntoIterator<Item = bool>) -> Self {
        Self(bits.into_iter().map(u8::from).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[u8] {
        &self.0
    }

    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&l| l == 1).count()
    }

    pub fn zeros(&self) -> usize {
        self.0.len() - self.ones()
    }

    /// Counts of zeros and ones differ by at most one.
    pub fn is_friendly(&self) -> bool {
        self.zeros().abs_diff(self.ones()) <= 1
    }

    /// Swaps every 0 and 1.
    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|&l| 1 - l).collect())
    }
}

impl fmt::Display for VertexLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Counts of arcs labeled 1, -1 and 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Deserialize)]
#[serde(from = "[usize; 3]")]
pub struct LambdaTriple {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
}

impl LambdaTriple {
    pub const fn new(alpha: usize, beta: usize, gamma: usize) -> Self {
        Self { alpha, beta, gamma }
    }

    pub fn total(&self) -> usize {
        self.alpha + self.beta + self.gamma
    }

    /// Pairwise differences among the three counts are all at most one.
    pub fn is_friendly(&self) -> bool {
        let hi = self.alpha.max(self.beta).max(self.gamma);
        let lo = self.alpha.min(self.beta).min(self.gamma);
        hi - lo <= 1
    }

    /// `(beta, alpha, gamma)`, the effect of reversal or complementation.
    pub fn swapped(&self) -> Self {
        Self::new(self.beta, self.alpha, self.gamma)
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.alpha, self.beta, self.gamma]
    }

    fn record(&mut self, label: i8) {
        match label {
            1 => self.alpha += 1,
            -1 => self.beta += 1,
            _ => self.gamma += 1,
        }
    }
}

impl From<[usize; 3]> for LambdaTriple {
    fn from([alpha, beta, gamma]: [usize; 3]) -> Self {
        Self { alpha, beta, gamma }
    }
}

impl Serialize for LambdaTriple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(3))?;
        for x in self.as_array() {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}

impl fmt::Display for LambdaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// Outcome of a cordiality decision. A witness and its triple are present
/// exactly when the digraph is cordial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CordialityResult {
    pub cordial: bool,
    pub witness: Option<VertexLabeling>,
    pub lambda: Option<LambdaTriple>,
}

impl CordialityResult {
    pub fn not_cordial() -> Self {
        Self {
            cordial: false,
            witness: None,
            lambda: None,
        }
    }

    pub fn with_witness(witness: VertexLabeling, lambda: LambdaTriple) -> Self {
        Self {
            cordial: true,
            witness: Some(witness),
            lambda: Some(lambda),
        }
    }
}

fn check_len(d: &Digraph, f: &VertexLabeling) -> Result<(), DigraphError> {
    if f.len() != d.vertex_count() {
        return Err(DigraphError::LengthMismatch {
            expected: d.vertex_count(),
            found: f.len(),
        });
    }
    Ok(())
}

/// Per-arc labels `f(v) - f(u)`, aligned with `d.arcs()`.
pub fn induce_arc_labels(d: &Digraph, f: &VertexLabeling) -> Result<Vec<i8>, DigraphError> {
    check_len(d, f)?;
    Ok(d.arcs()
        .iter()
        .map(|&(u, v)| f.get(v) as i8 - f.get(u) as i8)
        .collect())
}

pub fn lambda(d: &Digraph, f: &VertexLabeling) -> Result<LambdaTriple, DigraphError> {
    let mut t = LambdaTriple::default();
    for g in induce_arc_labels(d, f)? {
        t.record(g);
    }
    Ok(t)
}

/// True when `f` is friendly and induces a friendly arc labeling on `d`.
pub fn is_cordial_labeling(d: &Digraph, f: &VertexLabeling) -> Result<bool, DigraphError> {
    Ok(f.is_friendly() && lambda(d, f)?.is_friendly())
}
