use std::collections::BTreeSet;

use itertools::Itertools;

use super::{check_size, orientations, EnumerationError, UndirectedGraph, MAX_TOURNAMENT_VERTICES};
use crate::digraph::Digraph;

/// Largest order `canonical_form` accepts; `n (n - 1)` bits must fit a `u64`.
pub const MAX_CANONICAL_VERTICES: usize = 8;

/// Lexicographically least off-diagonal adjacency bit string over all
/// vertex relabelings, row-major, first pair in the most significant bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

fn pair_bit(n: usize, u: usize, v: usize) -> u32 {
    // Index of (u, v) among off-diagonal pairs in row-major order.
    let idx = u * (n - 1) + if v > u { v - 1 } else { v };
    (n * (n - 1) - 1 - idx) as u32
}

impl CanonicalForm {
    /// The relabeled digraph this form describes, arcs in row-major order.
    pub fn to_digraph(&self) -> Digraph {
        let n = self.n;
        let arcs = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .filter(|&(u, v)| (self.code >> pair_bit(n, u, v)) & 1 == 1)
            .collect();
        Digraph::new(n, arcs).expect("canonical code of a digon-free digraph")
    }
}

/// Brute force over all `n!` relabelings.
pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm, EnumerationError> {
    let n = d.vertex_count();
    check_size("canonical form", n, 0, MAX_CANONICAL_VERTICES)?;
    if n == 0 {
        return Ok(CanonicalForm { n, code: 0 });
    }
    let code = (0..n)
        .permutations(n)
        .map(|perm| {
            d.arcs().iter().fold(0u64, |acc, &(u, v)| {
                acc | 1 << pair_bit(n, perm[u], perm[v])
            })
        })
        .min()
        .expect("at least one permutation");
    Ok(CanonicalForm { n, code })
}

/// One representative per isomorphism class of tournaments on `n`
/// vertices, in ascending canonical order.
pub fn tournaments(n: usize) -> Result<Vec<Digraph>, EnumerationError> {
    check_size("tournaments", n, 2, MAX_TOURNAMENT_VERTICES)?;
    let complete = UndirectedGraph::complete(n);
    let classes: BTreeSet<CanonicalForm> = orientations(&complete)
        .map(|d| canonical_form(&d).expect("n within cap"))
        .collect();
    Ok(classes.iter().map(CanonicalForm::to_digraph).collect())
}
