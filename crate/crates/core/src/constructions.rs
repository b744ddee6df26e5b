//! Explicit cordial labelings: directed cycles, directed paths, stars, and
//! the small labeled trees used as regression fixtures.

use thiserror::Error;

use crate::digraph::Digraph;
use crate::labeling::{lambda, LambdaTriple, VertexLabeling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("a directed cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
}

/// `0 -> 1 -> ... -> n-1 -> 0`.
pub fn directed_cycle(n: usize) -> Result<Digraph, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::CycleTooShort(n));
    }
    let arcs = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Digraph::new(n, arcs).expect("cycle arcs are valid"))
}

/// `0 -> 1 -> ... -> n-1`.
pub fn directed_path(n: usize) -> Digraph {
    let arcs = (1..n).map(|i| (i - 1, i)).collect();
    Digraph::new(n, arcs).expect("path arcs are valid")
}

/// Labels for the directed `n`-cycle with `t = floor((n + 1) / 3)` runs of
/// ones: the first `2t` vertices alternate 0,1, then the remaining ones,
/// then the remaining zeros. On a cycle `alpha = beta = t` and
/// `gamma = n - 2t`. For `n = 6l` this is the alternating-then-runs
/// pattern with `l` ones followed by `l` zeros, giving `(n/3, n/3, n/3)`.
fn cycle_labels(n: usize) -> Vec<u8> {
    let runs = (n + 1) / 3;
    let ones = n / 2;
    let zeros = n - ones;
    let mut labels = Vec::with_capacity(n);
    for _ in 0..runs {
        labels.extend([0, 1]);
    }
    labels.extend(std::iter::repeat_n(1, ones - runs));
    labels.extend(std::iter::repeat_n(0, zeros - runs));
    labels
}

/// The directed `n`-cycle with a cordial labeling.
pub fn construct_directed_cycle_labeling(
    n: usize,
) -> Result<(Digraph, VertexLabeling), ConstructionError> {
    let d = directed_cycle(n)?;
    let f = VertexLabeling::new(cycle_labels(n)).expect("labels are binary");
    debug_assert!(crate::labeling::is_cordial_labeling(&d, &f).unwrap());
    Ok((d, f))
}

/// The directed path on `n` vertices with a cordial labeling.
///
/// For `n >= 3` this opens the cycle labeling at an arc whose label is one of
/// the most frequent, trying the closing arc `n-1 -> 0` first.
pub fn construct_directed_path_labeling(n: usize) -> (Digraph, VertexLabeling) {
    let path = directed_path(n);
    let labels = match n {
        0 => vec![],
        1 => vec![0],
        2 => vec![0, 1],
        _ => {
            let cycle = cycle_labels(n);
            (0..n)
                .map(|start| {
                    let mut rotated = cycle.clone();
                    rotated.rotate_left(start);
                    rotated
                })
                .find(|labels| {
                    let f = VertexLabeling::new(labels.clone()).expect("binary");
                    lambda(&path, &f).expect("lengths match").is_friendly()
                })
                .expect("some opening of a cordial cycle labeling is cordial")
        }
    };
    (
        path,
        VertexLabeling::new(labels).expect("labels are binary"),
    )
}

/// Star with center 0 and every arc leaving the center.
pub fn make_out_star(n: usize) -> Digraph {
    Digraph::new(n, (1..n).map(|p| (0, p)).collect()).expect("star arcs are valid")
}

/// Star with center 0 and every arc entering the center.
pub fn make_in_star(n: usize) -> Digraph {
    Digraph::new(n, (1..n).map(|p| (p, 0)).collect()).expect("star arcs are valid")
}

/// Star with center 0 whose first `inward` pendants point at the center and
/// the rest point away.
pub fn star_with_inward(n: usize, inward: usize) -> Digraph {
    let arcs = (1..n)
        .map(|p| if p <= inward { (p, 0) } else { (0, p) })
        .collect();
    Digraph::new(n, arcs).expect("star arcs are valid")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarReport {
    pub n: usize,
    pub exists: bool,
    /// `n = 2k` or `n = 2k + 1`; absent for `n <= 3`.
    pub k: Option<usize>,
    /// `n - 1 = 3l + r`; absent for `n <= 3`.
    pub ell: Option<usize>,
    pub orientation: Option<Digraph>,
    pub labeling: Option<VertexLabeling>,
    pub lambda: Option<LambdaTriple>,
    pub case_tag: String,
}

/// Whether the star on `n` vertices has some cordial orientation.
pub fn star_has_cordial_orientation(n: usize) -> bool {
    n <= 11 && n != 10
}

fn star_case(n: usize) -> (String, Option<usize>, Option<usize>) {
    match n {
        0 | 1 => ("n = 1: vacuous".into(), None, None),
        2 | 3 => ("n <= 3: every orientation".into(), None, None),
        _ => {
            let (case, k) = if n.is_multiple_of(2) {
                (1, n / 2)
            } else {
                (2, (n - 1) / 2)
            };
            let arcs = n - 1;
            let sub = ['a', 'b', 'c'][arcs % 3];
            (
                format!("Case {case}, subcase {sub}"),
                Some(k),
                Some(arcs / 3),
            )
        }
    }
}

/// Center labeled 0: pendants labeled 0 give arcs labeled 0 whichever way
/// they point, and pendants labeled 1 give +1 when the arc leaves the center
/// and -1 when it enters. Splitting the 1-labeled pendants evenly is the
/// only freedom, so try both friendly zero counts.
fn build_star(n: usize) -> Option<(Digraph, VertexLabeling, LambdaTriple)> {
    if n == 0 {
        return Some((
            Digraph::empty(0),
            VertexLabeling::from_bools([]),
            LambdaTriple::default(),
        ));
    }
    let pendants = n - 1;
    [n / 2, n.div_ceil(2)].into_iter().find_map(|zeros| {
        let zero_pendants = zeros.checked_sub(1)?;
        let one_pendants = pendants - zero_pendants;
        let out_ones = one_pendants.div_ceil(2);
        let triple = LambdaTriple::new(out_ones, one_pendants - out_ones, zero_pendants);
        if !triple.is_friendly() {
            return None;
        }
        // Pendants 1..=in_ones are 1-labeled and inward; the rest point out.
        let in_ones = one_pendants - out_ones;
        let d = star_with_inward(n, in_ones);
        let labels = std::iter::once(0)
            .chain((1..n).map(|p| u8::from(p <= one_pendants)))
            .collect();
        let f = VertexLabeling::new(labels).expect("binary");
        Some((d, f, triple))
    })
}

pub fn analyze_star(n: usize) -> StarReport {
    let (case_tag, k, ell) = star_case(n);
    let exists = star_has_cordial_orientation(n);
    let built = if exists { build_star(n) } else { None };
    debug_assert_eq!(built.is_some(), exists);
    let (orientation, labeling, lambda) = match built {
        Some((d, f, t)) => (Some(d), Some(f), Some(t)),
        None => (None, None, None),
    };
    StarReport {
        n,
        exists,
        k,
        ell,
        orientation,
        labeling,
        lambda,
        case_tag,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub digraph: Digraph,
    pub labeling: Option<VertexLabeling>,
}

fn fixture(
    name: &'static str,
    n: usize,
    arcs: &[(usize, usize)],
    labels: Option<&[u8]>,
) -> Fixture {
    Fixture {
        name,
        digraph: Digraph::new(n, arcs.to_vec()).expect("fixture arcs are valid"),
        labeling: labels.map(|l| VertexLabeling::new(l.to_vec()).expect("binary")),
    }
}

/// Labeled 3-paths, labeled 4-trees, and the two non-cordial 4-trees.
pub fn small_tree_fixtures() -> Vec<Fixture> {
    vec![
        fixture("path3-forward", 3, &[(0, 1), (1, 2)], Some(&[0, 1, 0])),
        fixture("path3-inward", 3, &[(0, 1), (2, 1)], Some(&[0, 1, 1])),
        fixture(
            "path4-forward",
            4,
            &[(0, 1), (1, 2), (2, 3)],
            Some(&[0, 1, 1, 0]),
        ),
        fixture(
            "path4-alternating",
            4,
            &[(0, 1), (2, 1), (2, 3)],
            Some(&[0, 1, 1, 0]),
        ),
        fixture(
            "star4-mixed",
            4,
            &[(1, 0), (2, 0), (0, 3)],
            Some(&[1, 0, 1, 0]),
        ),
        fixture("path4-not-cordial", 4, &[(0, 1), (1, 2), (3, 2)], None),
        fixture("in-star4", 4, &[(1, 0), (2, 0), (3, 0)], None),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::is_cordial_labeling;
    use crate::search::is_23_cordial;

    fn check(d: &Digraph, f: &VertexLabeling) -> LambdaTriple {
        assert!(f.is_friendly(), "{d} {f}");
        let t = lambda(d, f).unwrap();
        assert!(t.is_friendly(), "{d} {f} {t}");
        t
    }

    #[test]
    fn cycle_too_short() {
        assert_eq!(
            construct_directed_cycle_labeling(2).unwrap_err(),
            ConstructionError::CycleTooShort(2)
        );
    }

    #[test]
    fn cycle_examples() {
        let (d, f) = construct_directed_cycle_labeling(6).unwrap();
        assert_eq!(check(&d, &f), LambdaTriple::new(2, 2, 2));
        let (d, f) = construct_directed_cycle_labeling(3).unwrap();
        assert_eq!(check(&d, &f), LambdaTriple::new(1, 1, 1));
        let (d, f) = construct_directed_cycle_labeling(4).unwrap();
        let mut t = check(&d, &f).as_array();
        t.sort();
        assert_eq!(t, [1, 1, 2]);
    }

    #[test]
    fn cycle_pattern_for_multiples_of_six() {
        // l = 2: alternate over 8 vertices, then 2 ones, then 2 zeros.
        let (_, f) = construct_directed_cycle_labeling(12).unwrap();
        assert_eq!(f.labels(), &[0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 0]);
        for n in (6..=60).step_by(6) {
            let (d, f) = construct_directed_cycle_labeling(n).unwrap();
            assert_eq!(check(&d, &f), LambdaTriple::new(n / 3, n / 3, n / 3));
        }
    }

    #[test]
    fn cycles_and_paths_up_to_60() {
        for n in 3..=60 {
            let (d, f) = construct_directed_cycle_labeling(n).unwrap();
            assert_eq!(d.arc_count(), n);
            check(&d, &f);
        }
        for n in 1..=60 {
            let (d, f) = construct_directed_path_labeling(n);
            assert_eq!(d.arc_count(), n - 1);
            check(&d, &f);
        }
    }

    #[test]
    fn path_examples() {
        let (d, f) = construct_directed_path_labeling(3);
        assert_eq!(f.labels(), &[0, 1, 0]);
        assert_eq!(lambda(&d, &f).unwrap(), LambdaTriple::new(1, 1, 0));
        let (d, f) = construct_directed_path_labeling(4);
        assert_eq!(f.labels(), &[0, 1, 1, 0]);
        assert_eq!(lambda(&d, &f).unwrap(), LambdaTriple::new(1, 1, 1));
        let (d, f) = construct_directed_path_labeling(1);
        assert_eq!(lambda(&d, &f).unwrap(), LambdaTriple::default());
    }

    #[test]
    fn stars() {
        assert!(!analyze_star(10).exists);
        assert!(!analyze_star(12).exists);
        let r = analyze_star(8);
        assert!(r.exists);
        assert_eq!((r.k, r.ell), (Some(4), Some(2)));
        assert_eq!(r.case_tag, "Case 1, subcase b");
        assert_eq!(analyze_star(4).case_tag, "Case 1, subcase a");
        assert_eq!(analyze_star(6).case_tag, "Case 1, subcase c");
        assert_eq!(analyze_star(5).case_tag, "Case 2, subcase b");
        assert_eq!(analyze_star(7).case_tag, "Case 2, subcase a");
        assert_eq!(analyze_star(9).case_tag, "Case 2, subcase c");
        assert_eq!(analyze_star(11).case_tag, "Case 2, subcase b");
    }

    #[test]
    fn star_construction_matches_closed_form() {
        for n in 0..=40 {
            let r = analyze_star(n);
            assert_eq!(r.exists, build_star(n).is_some(), "n={n}");
            if let (Some(d), Some(f)) = (&r.orientation, &r.labeling) {
                assert!(d.arcs().iter().all(|&(u, v)| u == 0 || v == 0));
                assert!(f.is_empty() || f.get(0) == 0);
                assert_eq!(Some(check(d, f)), r.lambda);
            }
        }
    }

    #[test]
    fn in_and_out_stars() {
        assert_eq!(make_out_star(4).arcs(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(make_out_star(5).reverse(), make_in_star(5));
        for n in 4..=9 {
            assert!(!is_23_cordial(&make_out_star(n)));
        }
    }

    #[test]
    fn fixtures_match_figures() {
        let fx = small_tree_fixtures();
        assert_eq!(fx.len(), 7);
        for f in &fx {
            match &f.labeling {
                Some(l) => assert!(is_cordial_labeling(&f.digraph, l).unwrap(), "{}", f.name),
                None => assert!(!is_23_cordial(&f.digraph), "{}", f.name),
            }
        }
        let star = fx.iter().find(|f| f.name == "star4-mixed").unwrap();
        assert_eq!(
            lambda(&star.digraph, star.labeling.as_ref().unwrap()).unwrap(),
            LambdaTriple::new(1, 1, 1)
        );
    }
}
