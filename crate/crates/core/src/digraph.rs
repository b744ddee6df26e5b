//! Loop-free, digon-free digraphs on `0..n` and their plain-text format.
//!
//! The text format is line oriented:
//!
//! ```text
//! # directed 3-path
//! 3 2
//! 0 1
//! 1 2
//! ```
//!
//! The first non-comment line holds the vertex count and the arc count, and
//! each following line `u v` is the arc `u -> v`. Lines starting with `#` and
//! blank lines are ignored.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A vertex index, `0..n`.
pub type Vertex = usize;

/// An arc `(u, v)` meaning `u -> v`.
pub type Arc = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("arc ({0}, {0}) is a loop")]
    LoopArc(Vertex),
    #[error("arc ({0}, {1}) forms a digon with ({1}, {0})")]
    DigonPair(Vertex, Vertex),
    #[error("arc ({0}, {1}) appears more than once")]
    DuplicateArc(Vertex, Vertex),
    #[error("arc ({u}, {v}) has an endpoint outside 0..{n}")]
    IndexOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("labeling has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// A subgraph of a tournament: no loops, no digons, no repeated arcs.
///
/// Arcs keep their insertion order, and every per-arc sequence produced by
/// this crate (induced labels, DOT output) follows that order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<Arc>) -> Result<Self, DigraphError> {
        let mut seen = HashSet::with_capacity(arcs.len());
        for &(u, v) in &arcs {
            if u >= n || v >= n {
                return Err(DigraphError::IndexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(DigraphError::LoopArc(u));
            }
            if seen.contains(&(v, u)) {
                return Err(DigraphError::DigonPair(u, v));
            }
            if !seen.insert((u, v)) {
                return Err(DigraphError::DuplicateArc(u, v));
            }
        }
        Ok(Self { n, arcs })
    }

    /// The digraph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            arcs: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// `D^R`: every arc flipped, order preserved.
    pub fn reverse(&self) -> Self {
        Self {
            n: self.n,
            arcs: self.arcs.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, _) in &self.arcs {
            deg[u] += 1;
        }
        deg
    }

    /// Same vertex count and the same arc set, ignoring arc order.
    pub fn same_arcs(&self, other: &Digraph) -> bool {
        if self.n != other.n || self.arcs.len() != other.arcs.len() {
            return false;
        }
        let mine: HashSet<_> = self.arcs.iter().collect();
        other.arcs.iter().all(|a| mine.contains(a))
    }

    /// Serializes to the text format read by [`Digraph::from_str`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.arcs.len());
        for (u, v) in &self.arcs {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, (u, v)) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Digraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(ParseError {
            line: 1,
            message: "missing header \"n m\"".into(),
        })?;
        let (n, m) = parse_pair(header_line, header)?;

        let mut arcs = Vec::with_capacity(m);
        let mut last_line = header_line;
        for (line, text) in lines {
            if arcs.len() == m {
                return Err(ParseError {
                    line,
                    message: format!("more arcs than the {m} declared"),
                });
            }
            arcs.push(parse_pair(line, text)?);
            last_line = line;
        }
        if arcs.len() != m {
            return Err(ParseError {
                line: last_line,
                message: format!("expected {m} arcs, found {}", arcs.len()),
            });
        }

        // Attribute a validation error to the line holding the offending arc.
        Digraph::new(n, arcs.clone()).map_err(|e| {
            let offending = match e {
                DigraphError::LoopArc(u) => Some((u, u)),
                DigraphError::DigonPair(u, v)
                | DigraphError::DuplicateArc(u, v)
                | DigraphError::IndexOutOfRange { u, v, .. } => Some((u, v)),
                DigraphError::LengthMismatch { .. } => None,
            };
            let line = offending
                .and_then(|arc| arcs.iter().rposition(|&a| a == arc))
                .and_then(|idx| arc_line(s, idx))
                .unwrap_or(header_line);
            ParseError {
                line,
                message: e.to_string(),
            }
        })
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(ParseError {
            line,
            message: format!("expected two integers, found {:?}", text),
        });
    }
    let parse = |f: &str| {
        f.parse::<usize>().map_err(|_| ParseError {
            line,
            message: format!("not a nonnegative integer: {f:?}"),
        })
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

/// 1-based line number of the `idx`-th arc line.
fn arc_line(s: &str, idx: usize) -> Option<usize> {
    s.lines()
        .enumerate()
        .filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#')
        })
        .nth(idx + 1)
        .map(|(i, _)| i + 1)
}
