//! Exhaustive search over friendly vertex labelings.
//!
//! Labelings are walked in lexicographic order as bit codes where vertex 0 is
//! the most significant bit, so numeric order on codes is lexicographic order
//! on label sequences. Only codes with the right population count are
//! visited (Gosper's successor), never all `2^n` strings.
//!
//! Complementing a labeling swaps `alpha` and `beta` and preserves both
//! friendliness checks, so the labelings starting with 0 form a complete set
//! of representatives. They are also a prefix of the full lexicographic
//! order, which makes the pruned search return the same least witness as
//! the unpruned one.

use crate::digraph::Digraph;
use crate::labeling::{CordialityResult, LambdaTriple, VertexLabeling};

/// Largest vertex count the search accepts (codes are `u64`).
pub const MAX_SEARCH_VERTICES: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub labelings_examined: u64,
    pub witnesses_found: u64,
    pub pruned_by_complement: u64,
}

/// Next integer above `x` with the same number of set bits.
fn gosper_next(x: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

/// Iterator over friendly label codes in ascending order.
#[derive(Debug, Clone)]
pub(crate) struct FriendlyCodes {
    limit: u64,
    heads: [Option<u64>; 2],
}

impl FriendlyCodes {
    pub(crate) fn new(n: usize, fix_first_zero: bool) -> Self {
        assert!(
            n <= MAX_SEARCH_VERTICES,
            "search supports at most {MAX_SEARCH_VERTICES} vertices, got {n}"
        );
        let full = 1u64 << n;
        let limit = if fix_first_zero && n >= 1 {
            full >> 1
        } else {
            full
        };
        let first = |ones: usize| {
            let code = (1u64 << ones) - 1;
            (code < limit).then_some(code)
        };
        let lo = n / 2;
        let hi = n.div_ceil(2);
        let heads = if lo == hi {
            [first(lo), None]
        } else {
            [first(lo), first(hi)]
        };
        Self { limit, heads }
    }
}

impl Iterator for FriendlyCodes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let pick = match self.heads {
            [Some(a), Some(b)] => usize::from(b < a),
            [Some(_), None] => 0,
            [None, Some(_)] => 1,
            [None, None] => return None,
        };
        let code = self.heads[pick]?;
        self.heads[pick] = gosper_next(code).filter(|&c| c < self.limit);
        Some(code)
    }
}

fn code_to_labeling(n: usize, code: u64) -> VertexLabeling {
    VertexLabeling::from_bools((0..n).map(|v| (code >> (n - 1 - v)) & 1 == 1))
}

/// Every friendly labeling of `n` vertices in lexicographic order. With
/// `fix_first_zero`, only those whose first entry is 0.
pub fn friendly_labelings(n: usize, fix_first_zero: bool) -> impl Iterator<Item = VertexLabeling> {
    FriendlyCodes::new(n, fix_first_zero).map(move |code| code_to_labeling(n, code))
}

/// Number of friendly labelings of `n` vertices.
pub fn friendly_count(n: usize) -> u64 {
    let binom = |k: usize| (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64);
    if n.is_multiple_of(2) {
        binom(n / 2)
    } else {
        2 * binom(n / 2)
    }
}

/// Arc shifts precomputed for fast triple evaluation on codes.
struct ArcShifts(Vec<(u32, u32)>);

impl ArcShifts {
    fn new(d: &Digraph) -> Self {
        let n = d.vertex_count();
        Self(
            d.arcs()
                .iter()
                .map(|&(u, v)| ((n - 1 - u) as u32, (n - 1 - v) as u32))
                .collect(),
        )
    }

    fn lambda(&self, code: u64) -> LambdaTriple {
        let mut t = LambdaTriple::default();
        for &(su, sv) in &self.0 {
            let fu = (code >> su) & 1;
            let fv = (code >> sv) & 1;
            match (fu, fv) {
                (0, 1) => t.alpha += 1,
                (1, 0) => t.beta += 1,
                _ => t.gamma += 1,
            }
        }
        t
    }
}

/// Search with complement pruning toggled. Both settings return the same
/// result; the unpruned form exists as a cross-check.
pub fn find_cordial_labeling_with(d: &Digraph, prune: bool) -> CordialityResult {
    let n = d.vertex_count();
    let shifts = ArcShifts::new(d);
    FriendlyCodes::new(n, prune)
        .find_map(|code| {
            let t = shifts.lambda(code);
            t.is_friendly().then_some((code, t))
        })
        .map_or_else(CordialityResult::not_cordial, |(code, t)| {
            CordialityResult::with_witness(code_to_labeling(n, code), t)
        })
}

/// Decides cordiality. The witness, if any, is the lexicographically least
/// cordial labeling over all friendly labelings.
///
/// Panics if `d` has more than [`MAX_SEARCH_VERTICES`] vertices.
pub fn find_cordial_labeling(d: &Digraph) -> CordialityResult {
    find_cordial_labeling_with(d, true)
}

pub fn is_23_cordial(d: &Digraph) -> bool {
    find_cordial_labeling(d).cordial
}

/// Counts cordial labelings over the full friendly space.
pub fn count_cordial_labelings(d: &Digraph) -> u64 {
    let shifts = ArcShifts::new(d);
    FriendlyCodes::new(d.vertex_count(), false)
        .filter(|&code| shifts.lambda(code).is_friendly())
        .count() as u64
}

/// Full scan of the pruned space (no early exit), reporting counters.
pub fn search_stats(d: &Digraph) -> SearchStats {
    let n = d.vertex_count();
    let shifts = ArcShifts::new(d);
    let mut stats = SearchStats::default();
    for code in FriendlyCodes::new(n, true) {
        stats.labelings_examined += 1;
        if shifts.lambda(code).is_friendly() {
            stats.witnesses_found += 1;
        }
    }
    stats.pruned_by_complement = friendly_count(n) - stats.labelings_examined;
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::lambda;

    fn lab(v: &[u8]) -> VertexLabeling {
        VertexLabeling::new(v.to_vec()).unwrap()
    }

    #[test]
    fn friendly_counts() {
        assert_eq!(friendly_labelings(4, false).count(), 6);
        assert_eq!(friendly_labelings(3, false).count(), 6);
        assert_eq!(friendly_labelings(4, true).count(), 3);
        assert_eq!(friendly_labelings(0, false).count(), 1);
        assert_eq!(friendly_labelings(0, true).count(), 1);
        assert_eq!(friendly_labelings(1, false).count(), 2);
        assert_eq!(friendly_labelings(1, true).count(), 1);
        for n in 0..=14 {
            assert_eq!(
                friendly_labelings(n, false).count() as u64,
                friendly_count(n)
            );
        }
    }

    #[test]
    fn friendly_order_is_lexicographic() {
        for n in 0..=9 {
            let all: Vec<_> = friendly_labelings(n, false).collect();
            assert!(all.windows(2).all(|w| w[0] < w[1]), "n={n}");
            assert!(all.iter().all(VertexLabeling::is_friendly));
            // The pruned stream is a prefix of the full one.
            let pruned: Vec<_> = friendly_labelings(n, true).collect();
            assert_eq!(&all[..pruned.len()], &pruned[..]);
            if n > 0 {
                assert_eq!(pruned.len() * 2, all.len());
                assert!(pruned.iter().all(|f| f.get(0) == 0));
            }
        }
    }

    #[test]
    fn n3_lists_both_zero_counts() {
        let got: Vec<String> = friendly_labelings(3, false)
            .map(|f| f.to_string())
            .collect();
        assert_eq!(got, ["001", "010", "011", "100", "101", "110"]);
    }

    #[test]
    fn directed_3_path() {
        let d = Digraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let r = find_cordial_labeling(&d);
        assert!(r.cordial);
        let w = r.witness.unwrap();
        assert!(w.is_friendly());
        assert!(lambda(&d, &w).unwrap().is_friendly());
        // The figure labeling is a witness too.
        assert!(lambda(&d, &lab(&[0, 1, 0])).unwrap().is_friendly());
        assert_eq!(w, lab(&[0, 0, 1]));
        assert_eq!(r.lambda, Some(LambdaTriple::new(1, 0, 1)));
    }

    #[test]
    fn out_star_is_not_cordial() {
        let d = Digraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(find_cordial_labeling(&d), CordialityResult::not_cordial());
        assert_eq!(count_cordial_labelings(&d), 0);
    }

    #[test]
    fn single_arc() {
        let d = Digraph::new(2, vec![(0, 1)]).unwrap();
        let r = find_cordial_labeling(&d);
        assert_eq!(r.witness, Some(lab(&[0, 1])));
        assert_eq!(r.lambda, Some(LambdaTriple::new(1, 0, 0)));
        assert_eq!(count_cordial_labelings(&d), 2);
    }

    #[test]
    fn decision_examples() {
        let cycle3 = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(is_23_cordial(&cycle3));
        let p4 = Digraph::new(4, vec![(0, 1), (1, 2), (3, 2)]).unwrap();
        assert!(!is_23_cordial(&p4));
        assert!(is_23_cordial(&Digraph::empty(1)));
        assert!(is_23_cordial(&Digraph::empty(0)));
    }

    #[test]
    fn count_on_directed_3_path() {
        // By hand: 001->(1,0,1), 010->(1,1,0), 011->(1,0,1),
        // 100->(0,1,1), 101->(1,1,0), 110->(0,1,1). All friendly.
        let d = Digraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(count_cordial_labelings(&d), 6);
    }

    #[test]
    fn stats() {
        let p4 = Digraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = search_stats(&p4);
        assert!(s.labelings_examined <= 6);
        assert_eq!(s.labelings_examined, 3);
        assert_eq!(s.pruned_by_complement, 3);
        assert!(s.labelings_examined >= s.witnesses_found);
        assert_eq!(s.witnesses_found * 2, count_cordial_labelings(&p4));

        let e = search_stats(&Digraph::empty(0));
        assert_eq!(e.labelings_examined, 1);
        assert_eq!(e.witnesses_found, 1);
    }

    #[test]
    fn pruned_and_unpruned_agree_on_small_digraph() {
        let d = Digraph::new(5, vec![(0, 1), (2, 1), (1, 3), (4, 3)]).unwrap();
        assert_eq!(
            find_cordial_labeling_with(&d, true),
            find_cordial_labeling_with(&d, false)
        );
    }
}
