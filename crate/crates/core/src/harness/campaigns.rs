use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::oracle::naive_decision;
use super::{join, Failure, HarnessError, ReportBuilder, Workers};
use crate::constructions::{analyze_star, star_with_inward};
use crate::digraph::Digraph;
use crate::enumeration::{
    arrow_pattern, check_size, code_bits, free_trees, max_degree, orientations, score_vector,
    tournaments, UndirectedGraph, MAX_TREE_VERTICES,
};
use crate::labeling::{is_cordial_labeling, lambda, LambdaTriple, VertexLabeling};
use crate::search::{
    count_cordial_labelings, find_cordial_labeling, find_cordial_labeling_with, is_23_cordial,
};
use crate::CampaignReport;

/// The orientations of `P_4` without a cordial labeling, in direction-bit
/// order.
pub const P4_NON_CORDIAL: [&str; 4] = [">><", "><<", "<>>", "<<>"];

/// Largest path order `verify_path_conjecture` accepts.
pub const MAX_PATH_CONJECTURE: usize = 16;

/// Star existence by brute force. Pendants are interchangeable, so the
/// orientations of the `n`-star fall into `n` classes by in-arc count.
/// Returns the number of cordial labelings in each class.
pub fn star_witness_counts(n: usize) -> Vec<u64> {
    (0..n.max(1))
        .map(|inward| count_cordial_labelings(&star_with_inward(n, inward)))
        .collect()
}

pub fn verify_star_lemma(max_n: usize, workers: Workers) -> CampaignReport {
    let mut report = ReportBuilder::new("star-lemma").param("max_n", max_n);
    let ns: Vec<usize> = (2..=max_n).collect();
    let counts: Vec<Vec<u64>> =
        workers.install(|| ns.par_iter().map(|&n| star_witness_counts(n)).collect());

    let mut cordial = Vec::new();
    let mut not_cordial = Vec::new();
    for (&n, per_class) in ns.iter().zip(&counts) {
        report.checked(1);
        let witnesses: u64 = per_class.iter().sum();
        let brute = witnesses > 0;
        let star = analyze_star(n);
        if brute {
            cordial.push(n);
        } else {
            not_cordial.push(n);
        }
        report.observe(
            format!("n={n}"),
            format!(
                "exists={brute} classes={} witnesses={witnesses} case={}",
                per_class.len(),
                star.case_tag
            ),
        );
        let instance = format!("star n={n:02}");
        if brute != star.exists {
            report.fail(Failure::new(
                &instance,
                format!("brute force says {brute}, closed form says {}", star.exists),
            ));
        }
        if let (Some(d), Some(f)) = (&star.orientation, &star.labeling) {
            let is_star = d.arcs().iter().all(|&(u, v)| u == 0 || v == 0);
            if !is_star || !is_cordial_labeling(d, f).unwrap_or(false) {
                report.fail(Failure::new(
                    &instance,
                    format!("construction {d} with {f} is not cordial"),
                ));
            }
        }
    }
    report.observe("cordial", join(&cordial, ","));
    report.observe("not cordial", join(&not_cordial, ","));
    report.finish()
}

fn path_descriptor(n: usize, pattern: &str) -> String {
    if pattern.is_empty() {
        format!("P{n:02} (no arcs)")
    } else {
        format!("P{n:02} {pattern}")
    }
}

/// Patterns of all non-cordial orientations of `P_n`, in direction-bit order.
pub fn non_cordial_path_patterns(n: usize, workers: Workers) -> Vec<String> {
    let m = n.saturating_sub(1);
    let skeleton = UndirectedGraph::path(n);
    workers.install(|| {
        (0..1u64 << m)
            .into_par_iter()
            .filter_map(|code| {
                let bits = code_bits(code, m);
                let d =
                    crate::enumeration::Orientation::from_code(skeleton.clone(), code).to_digraph();
                (!is_23_cordial(&d)).then(|| arrow_pattern(&bits))
            })
            .collect()
    })
}

/// Checks every orientation of `P_n` for `n` in `ns` against `expected`,
/// the set of patterns that should be non-cordial for that `n`.
fn check_paths(
    mut report: ReportBuilder,
    ns: RangeInclusive<usize>,
    expected: impl Fn(usize) -> BTreeSet<String>,
    workers: Workers,
) -> CampaignReport {
    for n in ns {
        let m = n.saturating_sub(1);
        report.checked(1 << m);
        let found = non_cordial_path_patterns(n, workers);
        let found_set: BTreeSet<String> = found.iter().cloned().collect();
        let want = expected(n);
        for p in found_set.difference(&want) {
            report.fail(Failure::new(path_descriptor(n, p), "no cordial labeling"));
        }
        for p in want.difference(&found_set) {
            report.fail(Failure::new(
                path_descriptor(n, p),
                "expected non-cordial, but a witness exists",
            ));
        }
        if !found.is_empty() {
            let reflected: BTreeSet<String> = found
                .iter()
                .map(|p| {
                    let rev: String = p.chars().rev().collect();
                    p.clone().min(rev)
                })
                .collect();
            report.observe(
                format!("P{n} non-cordial"),
                format!(
                    "{} ({} orientations, {} end-to-end classes)",
                    join(&found, " "),
                    found.len(),
                    reflected.len()
                ),
            );
        }
    }
    report.finish()
}

fn path_lemma_exceptions(n: usize) -> BTreeSet<String> {
    if n == 4 {
        P4_NON_CORDIAL.iter().map(|s| s.to_string()).collect()
    } else {
        BTreeSet::new()
    }
}

/// Every orientation of `P_n` is cordial except the four `P_4` patterns.
pub fn verify_path_lemma(ns: RangeInclusive<usize>, workers: Workers) -> CampaignReport {
    let report = ReportBuilder::new("path-lemma")
        .param("n_min", ns.start())
        .param("n_max", ns.end());
    check_paths(report, ns, path_lemma_exceptions, workers)
}

/// Every orientation of `P_n` is cordial for each `n` in `ns`; any
/// non-cordial orientation is reported by its arrow pattern.
pub fn verify_paths_all_cordial(ns: RangeInclusive<usize>, workers: Workers) -> CampaignReport {
    let report = ReportBuilder::new("paths-all-cordial")
        .param("n_min", ns.start())
        .param("n_max", ns.end());
    check_paths(report, ns, |_| BTreeSet::new(), workers)
}

/// Every orientation of `P_n` is cordial for `5 <= n <= max_n`.
pub fn verify_path_conjecture(
    max_n: usize,
    workers: Workers,
) -> Result<CampaignReport, HarnessError> {
    check_size("path conjecture", max_n, 5, MAX_PATH_CONJECTURE)?;
    let report = ReportBuilder::new("path-conjecture")
        .param("n_min", 5)
        .param("n_max", max_n);
    Ok(check_paths(report, 5..=max_n, |_| BTreeSet::new(), workers))
}

/// First orientation (in direction-bit order) of `tree` admitting a cordial
/// labeling. Reversal preserves cordiality, so only orientations whose first
/// edge keeps its stored direction are tried.
pub fn first_cordial_orientation(tree: &UndirectedGraph) -> Option<(Digraph, VertexLabeling)> {
    let m = tree.edge_count();
    let half = if m == 0 { 1 } else { 1u64 << (m - 1) };
    orientations(tree).take(half as usize).find_map(|d| {
        let r = find_cordial_labeling(&d);
        r.witness.map(|w| (d, w))
    })
}

fn tree_descriptor(t: &UndirectedGraph) -> String {
    let edges = join(t.edges().iter().map(|(u, v)| format!("{u}-{v}")), ",");
    format!("T{:02} [{edges}]", t.vertex_count())
}

/// Every free tree on at most `max_n` vertices with maximum degree at most
/// `max_degree` (unbounded when `None`) has a cordial orientation. Trees
/// above the degree bound are checked too and listed when they have none.
pub fn verify_tree_conjecture(
    max_n: usize,
    max_degree_bound: Option<usize>,
    workers: Workers,
) -> Result<CampaignReport, HarnessError> {
    check_size("tree conjecture", max_n, 1, MAX_TREE_VERTICES)?;
    let bound = max_degree_bound.unwrap_or(usize::MAX);
    let mut report = ReportBuilder::new("tree-conjecture")
        .param("max_n", max_n)
        .param(
            "max_degree",
            max_degree_bound.map_or("unbounded".to_string(), |d| d.to_string()),
        );

    let mut all = Vec::new();
    let mut counts = Vec::new();
    let mut in_scope = Vec::new();
    for n in 1..=max_n {
        let trees = free_trees(n)?;
        counts.push(trees.len());
        in_scope.push(trees.iter().filter(|t| max_degree(t) <= bound).count());
        all.extend(trees);
    }
    let found: Vec<bool> = workers.install(|| {
        all.par_iter()
            .map(|t| first_cordial_orientation(t).is_some())
            .collect()
    });

    let mut contrast = Vec::new();
    for (tree, &ok) in all.iter().zip(&found) {
        let delta = max_degree(tree);
        if delta <= bound {
            report.checked(1);
            if !ok {
                report.fail(Failure::new(
                    tree_descriptor(tree),
                    format!("no orientation admits a cordial labeling (max degree {delta})"),
                ));
            }
        } else if !ok {
            contrast.push(format!("{} (max degree {delta})", tree_descriptor(tree)));
        }
    }
    report.observe("trees per n", join(&counts, ","));
    report.observe("trees within degree bound per n", join(&in_scope, ","));
    report.observe(
        "above bound without cordial orientation",
        if contrast.is_empty() {
            "none".to_string()
        } else {
            contrast.join("; ")
        },
    );
    Ok(report.finish())
}

/// Both 3-tournaments are cordial; exactly three of the four 4-tournaments
/// are, and the exception has score vector (1,1,1,3).
pub fn verify_tournaments(workers: Workers) -> Result<CampaignReport, HarnessError> {
    let mut report = ReportBuilder::new("tournaments").param("n", "3,4");
    for (n, want_cordial) in [(3usize, 2usize), (4, 3)] {
        let classes = tournaments(n)?;
        let verdicts: Vec<bool> =
            workers.install(|| classes.par_iter().map(is_23_cordial).collect());
        report.checked(classes.len() as u64);
        let cordial = verdicts.iter().filter(|&&c| c).count();
        let failing: Vec<String> = classes
            .iter()
            .zip(&verdicts)
            .filter(|(_, &c)| !c)
            .map(|(t, _)| format!("({})", join(score_vector(t), ",")))
            .collect();
        report.observe(
            format!("n={n}"),
            format!("{cordial}/{} cordial", classes.len()),
        );
        if !failing.is_empty() {
            report.observe(
                format!("n={n} non-cordial score vectors"),
                failing.join(" "),
            );
        }
        if cordial != want_cordial {
            report.fail(Failure::new(
                format!("tournaments n={n}"),
                format!(
                    "{cordial} of {} cordial, expected {want_cordial}",
                    classes.len()
                ),
            ));
        }
        if n == 4 && failing != ["(1,1,1,3)"] {
            report.fail(Failure::new(
                "tournaments n=4",
                format!("non-cordial score vectors {failing:?}, expected [(1,1,1,3)]"),
            ));
        }
    }
    Ok(report.finish())
}

/// A random digon-free digraph on at most `max_n` vertices with its arcs in
/// random order, plus a random friendly labeling.
fn random_instance(rng: &mut StdRng, max_n: usize) -> (Digraph, VertexLabeling) {
    let n = rng.random_range(0..=max_n);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            match rng.random_range(0..3) {
                0 => arcs.push((u, v)),
                1 => arcs.push((v, u)),
                _ => {}
            }
        }
    }
    arcs.shuffle(rng);
    let ones = if n % 2 == 1 && rng.random_bool(0.5) {
        n / 2 + 1
    } else {
        n / 2
    };
    let mut labels: Vec<u8> = (0..n).map(|i| u8::from(i < ones)).collect();
    labels.shuffle(rng);
    let d = Digraph::new(n, arcs).expect("one arc per pair at most");
    (d, VertexLabeling::new(labels).expect("binary"))
}

fn lambda_identity_failures(d: &Digraph, f: &VertexLabeling) -> Vec<String> {
    let base = lambda(d, f).expect("lengths match");
    let rev = lambda(&d.reverse(), f).expect("lengths match");
    let comp = lambda(d, &f.complement()).expect("lengths match");
    let both = lambda(&d.reverse(), &f.complement()).expect("lengths match");
    let mut out = Vec::new();
    let mut expect = |name: &str, got: LambdaTriple, want: LambdaTriple| {
        if got != want {
            out.push(format!("{name}: got {got}, expected {want}"));
        }
    };
    expect("reversal", rev, base.swapped());
    expect("complement", comp, base.swapped());
    expect("reversal+complement", both, base);
    if base.total() != d.arc_count() {
        out.push(format!("counts {base} do not sum to {}", d.arc_count()));
    }
    if base.is_friendly() != base.swapped().is_friendly() {
        out.push("friendliness not symmetric under swap".into());
    }
    out
}

/// Checks the three reversal/complement identities on `samples` random
/// pairs drawn from a fixed seed.
pub fn verify_lambda_identities(
    samples: usize,
    max_n: usize,
    seed: u64,
    workers: Workers,
) -> CampaignReport {
    let mut report = ReportBuilder::new("lambda-identities")
        .param("samples", samples)
        .param("max_n", max_n)
        .param("seed", seed);
    let mut rng = StdRng::seed_from_u64(seed);
    let instances: Vec<_> = (0..samples)
        .map(|_| random_instance(&mut rng, max_n))
        .collect();
    let results: Vec<Vec<String>> = workers.install(|| {
        instances
            .par_iter()
            .map(|(d, f)| lambda_identity_failures(d, f))
            .collect()
    });
    for (i, ((d, f), problems)) in instances.iter().zip(results).enumerate() {
        report.checked(1);
        for p in problems {
            report.fail(Failure::new(format!("sample {i:04} {d} f={f}"), p));
        }
    }
    report.finish()
}

/// Pruned search, unpruned search, and the naive oracle agree on decision
/// and least witness over every orientation of every tree with at most
/// `max_n` vertices.
pub fn verify_oracle_equivalence(
    max_n: usize,
    workers: Workers,
) -> Result<CampaignReport, HarnessError> {
    check_size("oracle equivalence", max_n, 1, MAX_TREE_VERTICES)?;
    let mut report = ReportBuilder::new("oracle-equivalence").param("max_n", max_n);
    let mut digraphs = Vec::new();
    for n in 1..=max_n {
        for t in free_trees(n)? {
            digraphs.extend(orientations(&t));
        }
    }
    let disagreements: Vec<Option<String>> = workers.install(|| {
        digraphs
            .par_iter()
            .map(|d| {
                let pruned = find_cordial_labeling_with(d, true);
                let unpruned = find_cordial_labeling_with(d, false);
                let (naive, naive_witness) = naive_decision(d);
                if pruned != unpruned {
                    Some(format!("pruned {pruned:?} vs unpruned {unpruned:?}"))
                } else if pruned.cordial != naive || pruned.witness != naive_witness {
                    Some(format!(
                        "search {:?} vs oracle {naive_witness:?}",
                        pruned.witness
                    ))
                } else {
                    None
                }
            })
            .collect()
    });
    report.checked(digraphs.len() as u64);
    let mut cordial = 0;
    for (d, problem) in digraphs.iter().zip(disagreements) {
        if let Some(p) = problem {
            report.fail(Failure::new(d.to_string(), p));
        }
        cordial += usize::from(is_23_cordial(d));
    }
    report.observe(
        "cordial orientations",
        format!("{cordial}/{}", digraphs.len()),
    );
    Ok(report.finish())
}
