//! Free trees up to isomorphism.
//!
//! A tree's canonical string is the least AHU parenthesis encoding over its
//! center(s). The string determines the tree, so representatives are rebuilt
//! from it with vertices numbered in preorder.

use std::collections::BTreeSet;

use super::{check_size, EnumerationError, UndirectedGraph, MAX_TREE_VERTICES};
use crate::digraph::Vertex;

fn rooted_encoding(adj: &[Vec<Vertex>], v: Vertex, parent: Option<Vertex>) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_encoding(adj, w, Some(v)))
        .collect();
    children.sort_unstable();
    let mut out = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    out.push('(');
    children.iter().for_each(|c| out.push_str(c));
    out.push(')');
    out
}

/// The one or two central vertices, found by stripping leaves.
fn centers(adj: &[Vec<Vertex>]) -> Vec<Vertex> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Canonical string of a tree; equal strings iff isomorphic trees.
///
/// The caller must pass a tree (connected, `n - 1` edges).
pub fn tree_canonical_string(g: &UndirectedGraph) -> String {
    let adj = g.neighbors();
    centers(&adj)
        .into_iter()
        .map(|c| rooted_encoding(&adj, c, None))
        .min()
        .unwrap_or_default()
}

/// Parses a parenthesis encoding into a tree numbered in preorder.
fn tree_from_encoding(code: &str) -> UndirectedGraph {
    let mut edges = Vec::new();
    let mut stack: Vec<Vertex> = Vec::new();
    let mut next = 0;
    for ch in code.chars() {
        match ch {
            '(' => {
                if let Some(&parent) = stack.last() {
                    edges.push((parent, next));
                }
                stack.push(next);
                next += 1;
            }
            _ => {
                stack.pop();
            }
        }
    }
    UndirectedGraph::new(next, edges).expect("encoding describes a tree")
}

/// One tree per isomorphism class on `n` vertices, `1 <= n <= 12`, ordered
/// by canonical string.
pub fn free_trees(n: usize) -> Result<Vec<UndirectedGraph>, EnumerationError> {
    check_size("free trees", n, 1, MAX_TREE_VERTICES)?;
    let mut layer: BTreeSet<String> = BTreeSet::from(["()".to_string()]);
    for size in 1..n {
        layer = layer
            .iter()
            .flat_map(|code| {
                let base = tree_from_encoding(code);
                (0..size).map(move |v| {
                    let grown = UndirectedGraph::new(
                        size + 1,
                        base.edges().iter().copied().chain([(v, size)]),
                    )
                    .expect("adding a leaf keeps a tree");
                    tree_canonical_string(&grown)
                })
            })
            .collect();
    }
    Ok(layer.iter().map(|code| tree_from_encoding(code)).collect())
}
