//! Labeled orientations of the 5-, 6- and 7-paths.
//!
//! The bundled fixtures list the published rows verbatim, one per line, as
//! `0>1<1>0>0`: vertex labels separated by `>` (arc to the right) or `<`
//! (arc to the left). Validation treats these rows as claims under test and
//! reports every row that fails, without correcting it.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::{join, CampaignReport, Failure, ReportBuilder};
use crate::digraph::Digraph;
use crate::enumeration::code_bits;
use crate::labeling::{lambda, LambdaTriple, VertexLabeling};
use crate::search::find_cordial_labeling;

const P5: &str = include_str!("../../data/appendix_p5.txt");
const P6: &str = include_str!("../../data/appendix_p6.txt");
const P7: &str = include_str!("../../data/appendix_p7.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AppendixError {
    #[error("appendix tables cover n = 5, 6, 7; got {0}")]
    UnsupportedLength(usize),
    #[error("malformed row {text:?}: {detail}")]
    Malformed { text: String, detail: String },
    #[error("P{n} row {row} ({text}): {detail}")]
    FixtureMismatch {
        n: usize,
        row: usize,
        text: String,
        detail: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arrow {
    Forward,
    Backward,
}

impl Arrow {
    fn symbol(self) -> char {
        match self {
            Arrow::Forward => '>',
            Arrow::Backward => '<',
        }
    }
}

/// One labeled orientation of a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixRow {
    pub arrows: Vec<Arrow>,
    pub labels: VertexLabeling,
    pub lambda: LambdaTriple,
}

/// The path `0 .. n-1` with arc `i` pointing as `arrows[i]` says.
pub fn path_from_arrows(arrows: &[Arrow]) -> Digraph {
    let arcs = arrows
        .iter()
        .enumerate()
        .map(|(i, a)| match a {
            Arrow::Forward => (i, i + 1),
            Arrow::Backward => (i + 1, i),
        })
        .collect();
    Digraph::new(arrows.len() + 1, arcs).expect("path arcs are valid")
}

pub fn arrow_string(arrows: &[Arrow]) -> String {
    arrows.iter().map(|a| a.symbol()).collect()
}

impl AppendixRow {
    pub fn digraph(&self) -> Digraph {
        path_from_arrows(&self.arrows)
    }

    /// Labels friendly, triple friendly, and the triple matches a recount.
    pub fn is_valid(&self) -> bool {
        self.labels.is_friendly()
            && self.lambda.is_friendly()
            && lambda(&self.digraph(), &self.labels).ok() == Some(self.lambda)
    }
}

impl fmt::Display for AppendixRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.labels.labels().iter().enumerate() {
            if i > 0 {
                write!(f, "{}", self.arrows[i - 1].symbol())?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `0>1<1`; the triple is recomputed from the parsed orientation.
pub fn parse_row(text: &str) -> Result<AppendixRow, AppendixError> {
    let malformed = |detail: &str| AppendixError::Malformed {
        text: text.to_string(),
        detail: detail.to_string(),
    };
    let chars: Vec<char> = text.trim().chars().collect();
    if chars.is_empty() || chars.len().is_multiple_of(2) {
        return Err(malformed("expected labels separated by single arrows"));
    }
    let mut labels = Vec::new();
    let mut arrows = Vec::new();
    for (i, c) in chars.iter().enumerate() {
        match (i % 2, c) {
            (0, '0') => labels.push(0),
            (0, '1') => labels.push(1),
            (1, '>') => arrows.push(Arrow::Forward),
            (1, '<') => arrows.push(Arrow::Backward),
            (0, _) => return Err(malformed(&format!("bad label {c:?} at {i}"))),
            _ => return Err(malformed(&format!("bad arrow {c:?} at {i}"))),
        }
    }
    let labels = VertexLabeling::new(labels).expect("binary");
    let lambda = lambda(&path_from_arrows(&arrows), &labels).expect("lengths match");
    Ok(AppendixRow {
        arrows,
        labels,
        lambda,
    })
}

fn fixture_text(n: usize) -> Result<&'static str, AppendixError> {
    match n {
        5 => Ok(P5),
        6 => Ok(P6),
        7 => Ok(P7),
        _ => Err(AppendixError::UnsupportedLength(n)),
    }
}

/// The bundled rows for `P_n`, verbatim.
pub fn fixture_rows(n: usize) -> Result<Vec<&'static str>, AppendixError> {
    Ok(fixture_text(n)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect())
}

/// Checks one fixture row; `row` is 1-based.
pub fn check_fixture_row(n: usize, row: usize, text: &str) -> Result<AppendixRow, AppendixError> {
    let mismatch = |detail: String| AppendixError::FixtureMismatch {
        n,
        row,
        text: text.to_string(),
        detail,
    };
    let parsed = parse_row(text).map_err(|e| mismatch(e.to_string()))?;
    if parsed.labels.len() != n {
        return Err(mismatch(format!("has {} vertices", parsed.labels.len())));
    }
    if !parsed.labels.is_friendly() {
        return Err(mismatch(format!(
            "vertex labels not friendly ({} zeros, {} ones)",
            parsed.labels.zeros(),
            parsed.labels.ones()
        )));
    }
    if !parsed.lambda.is_friendly() {
        return Err(mismatch(format!(
            "arc counts {} not friendly",
            parsed.lambda
        )));
    }
    Ok(parsed)
}

/// A cordial labeling for every orientation of `P_n`, in direction-bit order.
pub fn reproduce_appendix(n: usize) -> Result<Vec<AppendixRow>, AppendixError> {
    fixture_text(n)?;
    let m = n - 1;
    (0..1u64 << m)
        .map(|code| {
            let arrows: Vec<Arrow> = code_bits(code, m)
                .into_iter()
                .map(|b| if b { Arrow::Backward } else { Arrow::Forward })
                .collect();
            let d = path_from_arrows(&arrows);
            let result = find_cordial_labeling(&d);
            match (result.witness, result.lambda) {
                (Some(labels), Some(lambda)) => Ok(AppendixRow {
                    arrows,
                    labels,
                    lambda,
                }),
                _ => Err(AppendixError::FixtureMismatch {
                    n,
                    row: code as usize + 1,
                    text: arrow_string(&arrows),
                    detail: "orientation has no cordial labeling".into(),
                }),
            }
        })
        .collect()
}

/// Validates every bundled row of `P_n` and checks that the rows cover each
/// of the `2^(n-1)` orientations exactly once.
pub fn validate_appendix(n: usize) -> Result<CampaignReport, AppendixError> {
    let rows = fixture_rows(n)?;
    let mut report = ReportBuilder::new("appendix").param("n", n);
    let mut coverage: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    let mut valid = 0;
    for (i, text) in rows.iter().enumerate() {
        let row = i + 1;
        report.checked(1);
        match check_fixture_row(n, row, text) {
            Ok(parsed) => {
                valid += 1;
                coverage
                    .entry(arrow_string(&parsed.arrows))
                    .or_default()
                    .push(row);
            }
            Err(e) => {
                if let Ok(parsed) = parse_row(text) {
                    coverage
                        .entry(arrow_string(&parsed.arrows))
                        .or_default()
                        .push(row);
                }
                let detail = match e {
                    AppendixError::FixtureMismatch { detail, .. } => detail,
                    other => other.to_string(),
                };
                report.fail(Failure::new(format!("P{n} row {row:02} {text}"), detail));
            }
        }
    }
    let m = n - 1;
    let mut missing = Vec::new();
    for code in 0..1u64 << m {
        let arrows: Vec<Arrow> = code_bits(code, m)
            .into_iter()
            .map(|b| if b { Arrow::Backward } else { Arrow::Forward })
            .collect();
        let key = arrow_string(&arrows);
        match coverage.get(&key).map(Vec::as_slice) {
            None => {
                missing.push(key.clone());
                report.fail(Failure::new(
                    format!("P{n} orientation {key}"),
                    "not listed in any row",
                ));
            }
            Some([_]) => {}
            Some(rows) => report.fail(Failure::new(
                format!("P{n} orientation {key}"),
                format!("listed in rows {}", join(rows, ", ")),
            )),
        }
    }
    report.observe("rows", rows.len());
    report.observe("valid rows", valid);
    report.observe("orientations", 1u64 << m);
    report.observe("distinct orientations listed", coverage.len());
    if !missing.is_empty() {
        report.observe("missing orientations", missing.join(" "));
    }
    Ok(report.finish())
}
