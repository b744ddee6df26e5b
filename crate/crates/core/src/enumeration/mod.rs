//! The finite universes the verification campaigns sweep: orientations of a
//! fixed skeleton, free trees, path orientations up to symmetry, and small
//! tournaments.

mod canonical;
mod trees;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::digraph::{Digraph, Vertex};

pub use canonical::{canonical_form, tournaments, CanonicalForm, MAX_CANONICAL_VERTICES};
pub use trees::{free_trees, tree_canonical_string};

/// Largest tree order `free_trees` generates.
pub const MAX_TREE_VERTICES: usize = 12;
/// Largest tournament order `tournaments` generates.
pub const MAX_TOURNAMENT_VERTICES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("{what}: n = {requested} is outside the supported range {min}..={max}")]
    SizeCap {
        what: &'static str,
        requested: usize,
        min: usize,
        max: usize,
    },
    #[error("edge {{{0}, {1}}} is invalid: {2}")]
    InvalidEdge(Vertex, Vertex, &'static str),
}

pub(crate) fn check_size(
    what: &'static str,
    n: usize,
    min: usize,
    max: usize,
) -> Result<(), EnumerationError> {
    if n < min || n > max {
        return Err(EnumerationError::SizeCap {
            what,
            requested: n,
            min,
            max,
        });
    }
    Ok(())
}

/// A simple undirected graph. Edges are stored as `(u, v)` with `u < v`,
/// sorted lexicographically, which fixes the meaning of direction bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl UndirectedGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, EnumerationError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(EnumerationError::InvalidEdge(u, v, "endpoint out of range"));
            }
            if u == v {
                return Err(EnumerationError::InvalidEdge(u, v, "loop"));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(EnumerationError::InvalidEdge(u, v, "duplicate"));
            }
        }
        Ok(Self {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn star(n: usize) -> Self {
        Self::new(n, (1..n).map(|p| (0, p))).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn neighbors(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}

/// Δ(G); zero for a graph without edges.
pub fn max_degree(g: &UndirectedGraph) -> usize {
    g.degrees().into_iter().max().unwrap_or(0)
}

/// An assignment of directions to the skeleton's edges. Bit `false` keeps
/// the stored `(u, v)` with `u < v` as `u -> v`; `true` flips it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    skeleton: UndirectedGraph,
    direction_bits: Vec<bool>,
}

impl Orientation {
    pub fn new(skeleton: UndirectedGraph, direction_bits: Vec<bool>) -> Option<Self> {
        (direction_bits.len() == skeleton.edge_count()).then_some(Self {
            skeleton,
            direction_bits,
        })
    }

    /// Direction bits read from `code`, edge 0 in the most significant place.
    pub fn from_code(skeleton: UndirectedGraph, code: u64) -> Self {
        let m = skeleton.edge_count();
        let direction_bits = (0..m).map(|i| (code >> (m - 1 - i)) & 1 == 1).collect();
        Self {
            skeleton,
            direction_bits,
        }
    }

    pub fn skeleton(&self) -> &UndirectedGraph {
        &self.skeleton
    }

    pub fn direction_bits(&self) -> &[bool] {
        &self.direction_bits
    }

    pub fn to_digraph(&self) -> Digraph {
        orient(&self.skeleton, &self.direction_bits)
    }
}

fn orient(skeleton: &UndirectedGraph, bits: &[bool]) -> Digraph {
    let arcs = skeleton
        .edges
        .iter()
        .zip(bits)
        .map(|(&(u, v), &flip)| if flip { (v, u) } else { (u, v) })
        .collect();
    Digraph::new(skeleton.n, arcs).expect("an orientation of a simple graph is digon-free")
}

/// Direction bits for `code` over `m` edges, edge 0 most significant.
pub fn code_bits(code: u64, m: usize) -> Vec<bool> {
    (0..m).map(|i| (code >> (m - 1 - i)) & 1 == 1).collect()
}

/// All `2^m` orientations in direction-bit lexicographic order.
pub fn orientations(g: &UndirectedGraph) -> impl Iterator<Item = Digraph> + '_ {
    let m = g.edge_count();
    assert!(m < 64, "too many edges to enumerate orientations");
    (0..1u64 << m).map(move |code| orient(g, &code_bits(code, m)))
}

/// `>` for an arc `i -> i+1`, `<` for `i+1 -> i`.
pub fn arrow_pattern(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '<' } else { '>' }).collect()
}

/// The path automorphism `i -> n-1-i` composed with reversal of every arc:
/// the direction bits read backwards.
fn reflect_bits(code: u64, m: usize) -> u64 {
    (0..m).fold(0, |acc, i| acc | (((code >> i) & 1) << (m - 1 - i)))
}

/// The path automorphism `i -> n-1-i` alone: bits backwards and flipped.
fn mirror_bits(code: u64, m: usize) -> u64 {
    let mask = if m == 0 { 0 } else { u64::MAX >> (64 - m) };
    reflect_bits(code, m) ^ mask
}

fn path_classes(n: usize, images: impl Fn(u64, usize) -> Vec<u64>) -> Vec<Digraph> {
    let m = n.saturating_sub(1);
    let skeleton = UndirectedGraph::path(n);
    (0..1u64 << m)
        .filter(|&code| images(code, m).into_iter().all(|img| code <= img))
        .map(|code| orient(&skeleton, &code_bits(code, m)))
        .collect()
}

/// One orientation of `P_n` per class under reading the path end to end
/// (vertex order reversed and every arc reversed), represented by its least
/// direction-bit vector. Classes have size 1 or 2.
pub fn path_orientations_up_to_reversal(n: usize) -> Vec<Digraph> {
    path_classes(n, |c, m| vec![reflect_bits(c, m)])
}

/// One orientation of `P_n` per class under path isomorphism together with
/// reversal of all arcs. These are the classes behind the counts "two
/// orientations of the 3-path" and "three orientations of the 4-path".
pub fn path_orientation_classes(n: usize) -> Vec<Digraph> {
    path_classes(n, |c, m| {
        let flip = if m == 0 { 0 } else { u64::MAX >> (64 - m) };
        vec![reflect_bits(c, m), mirror_bits(c, m), c ^ flip]
    })
}

/// Out-degrees in ascending order.
pub fn score_vector(d: &Digraph) -> Vec<usize> {
    let mut s = d.out_degrees();
    s.sort_unstable();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_counts() {
        assert_eq!(orientations(&UndirectedGraph::path(8)).count(), 128);
        assert_eq!(orientations(&UndirectedGraph::path(9)).count(), 256);
        assert_eq!(orientations(&UndirectedGraph::path(2)).count(), 2);
        assert_eq!(orientations(&UndirectedGraph::path(1)).count(), 1);
    }

    #[test]
    fn orientation_order_and_bits() {
        let g = UndirectedGraph::path(3);
        let all: Vec<_> = orientations(&g).collect();
        assert_eq!(all[0].arcs(), &[(0, 1), (1, 2)]);
        assert_eq!(all[1].arcs(), &[(0, 1), (2, 1)]);
        assert_eq!(all[2].arcs(), &[(1, 0), (1, 2)]);
        assert_eq!(all[3].arcs(), &[(1, 0), (2, 1)]);
        let o = Orientation::from_code(g.clone(), 1);
        assert_eq!(o.direction_bits(), &[false, true]);
        assert_eq!(o.to_digraph(), all[1]);
        assert_eq!(arrow_pattern(o.direction_bits()), "><");
        assert!(Orientation::new(g, vec![true]).is_none());
    }

    #[test]
    fn reflection_classes() {
        assert_eq!(path_orientations_up_to_reversal(4).len(), 6);
        assert_eq!(path_orientations_up_to_reversal(3).len(), 3);
        assert_eq!(path_orientations_up_to_reversal(2).len(), 2);
        assert_eq!(path_orientations_up_to_reversal(1).len(), 1);
    }

    #[test]
    fn isomorphism_and_reversal_classes() {
        assert_eq!(path_orientation_classes(2).len(), 1);
        assert_eq!(path_orientation_classes(3).len(), 2);
        assert_eq!(path_orientation_classes(4).len(), 3);
    }

    #[test]
    fn degrees() {
        assert_eq!(max_degree(&UndirectedGraph::star(5)), 4);
        assert_eq!(max_degree(&UndirectedGraph::path(5)), 2);
        assert_eq!(max_degree(&UndirectedGraph::path(1)), 0);
    }

    #[test]
    fn skeleton_normalizes_edges() {
        let g = UndirectedGraph::new(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(UndirectedGraph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(UndirectedGraph::new(3, [(1, 1)]).is_err());
        assert!(UndirectedGraph::new(3, [(1, 3)]).is_err());
    }

    #[test]
    fn scores() {
        let cyc = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(score_vector(&cyc), vec![1, 1, 1]);
        let trans = Digraph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(score_vector(&trans), vec![0, 1, 2]);
    }
}
