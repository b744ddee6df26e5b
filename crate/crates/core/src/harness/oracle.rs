//! A deliberately naive cordiality check used to cross-examine the search.
//!
//! It walks all `2^n` bit strings, filters friendly ones, evaluates every arc
//! through [`crate::labeling::lambda`], and never stops early. It shares no
//! code with the pruned search beyond the value types.

use crate::digraph::Digraph;
use crate::labeling::{lambda, VertexLabeling};

/// All cordial labelings of `d`, in lexicographic order.
pub fn naive_cordial_labelings(d: &Digraph) -> Vec<VertexLabeling> {
    let n = d.vertex_count();
    assert!(n < 32, "naive oracle is for small digraphs");
    let mut witnesses = Vec::new();
    for bits in 0u64..(1 << n) {
        let labels: Vec<u8> = (0..n).map(|v| ((bits >> (n - 1 - v)) & 1) as u8).collect();
        let f = VertexLabeling::new(labels).expect("binary");
        if !f.is_friendly() {
            continue;
        }
        if lambda(d, &f).expect("lengths match").is_friendly() {
            witnesses.push(f);
        }
    }
    witnesses
}

/// Decision and least witness from the naive enumeration.
pub fn naive_decision(d: &Digraph) -> (bool, Option<VertexLabeling>) {
    let all = naive_cordial_labelings(d);
    (!all.is_empty(), all.into_iter().min())
}
