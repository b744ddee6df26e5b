//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cordial::constructions::{construct_directed_cycle_labeling, make_in_star, make_out_star};
use cordial::harness::appendix::{reproduce_appendix, validate_appendix};
use cordial::harness::campaigns::{
    verify_lambda_identities, verify_oracle_equivalence, verify_path_conjecture, verify_path_lemma,
    verify_star_lemma, verify_tournaments, verify_tree_conjecture, P4_NON_CORDIAL,
};
use cordial::harness::WORKERS_ENV;
use cordial::{is_23_cordial, lambda, CampaignReport, LambdaTriple, Workers};

const LAMBDA_SEED: u64 = 0x23c0_7d1a;

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
    /// Everything the criterion produced, minus timing.
    report: String,
}

fn failures_of(reports: &[&CampaignReport]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| {
            r.failures
                .iter()
                .map(|f| format!("{}: {}", f.instance, f.detail))
        })
        .collect()
}

fn within(elapsed: Duration, limit: Duration, summary: &mut String) -> bool {
    let ok = elapsed < limit;
    summary.push_str(&format!(
        " [{:.2}s, limit {}s]",
        elapsed.as_secs_f64(),
        limit.as_secs()
    ));
    ok
}

fn star_lemma(w: Workers) -> Outcome {
    let start = Instant::now();
    let r = verify_star_lemma(13, w);
    let elapsed = start.elapsed();
    let want_yes = "2,3,4,5,6,7,8,9,11";
    let want_no = "10,12,13";
    let got_yes = r.observation("cordial").unwrap_or("");
    let got_no = r.observation("not cordial").unwrap_or("");
    let mut summary = format!("star orientations cordial for n={got_yes}; none for n={got_no}");
    let timed = within(elapsed, Duration::from_secs(10), &mut summary);
    Outcome {
        pass: r.pass() && got_yes == want_yes && got_no == want_no && timed,
        summary,
        details: failures_of(&[&r]),
        report: r.to_json(),
    }
}

fn path_lemma(w: Workers) -> Outcome {
    let start = Instant::now();
    let r = verify_path_lemma(1..=9, w);
    let elapsed = start.elapsed();
    let p4 = r
        .observation("P4 non-cordial")
        .unwrap_or("none")
        .to_string();
    let exact = p4.starts_with(&P4_NON_CORDIAL.join(" "));
    let mut summary = format!(
        "{} orientations of P1..P9; P4 exceptions: {p4}",
        r.instances_checked
    );
    let timed = within(elapsed, Duration::from_secs(30), &mut summary);
    Outcome {
        pass: r.pass() && exact && timed,
        summary,
        details: failures_of(&[&r]),
        report: r.to_json(),
    }
}

fn path_conjecture(w: Workers) -> Outcome {
    let start = Instant::now();
    let r = verify_path_conjecture(12, w).expect("12 is within the cap");
    let elapsed = start.elapsed();
    let mut summary = format!(
        "{} orientations of P5..P12, {} non-cordial",
        r.instances_checked,
        r.failures.len()
    );
    let timed = within(elapsed, Duration::from_secs(300), &mut summary);
    Outcome {
        pass: r.pass() && timed,
        summary,
        details: failures_of(&[&r]),
        report: r.to_json(),
    }
}

fn cycles(_: Workers) -> Outcome {
    let mut details = Vec::new();
    let mut rows = Vec::new();
    for k in 3..=30usize {
        let (d, f) = construct_directed_cycle_labeling(k).expect("k >= 3");
        let t = lambda(&d, &f).expect("lengths match");
        if d.vertex_count() != k || d.arc_count() != k {
            details.push(format!("C{k}: construction has wrong size"));
        }
        if !f.is_friendly() {
            details.push(format!("C{k}: labels {f} not friendly"));
        }
        if !t.is_friendly() {
            details.push(format!("C{k}: lambda {t} not friendly"));
        }
        if k % 6 == 0 && t != LambdaTriple::new(k / 3, k / 3, k / 3) {
            details.push(format!("C{k}: lambda {t}, want ({0}, {0}, {0})", k / 3));
        }
        rows.push(serde_json::json!({"k": k, "labels": f, "lambda": t}));
    }
    Outcome {
        pass: details.is_empty(),
        summary: "directed cycles k=3..30".into(),
        details,
        report: serde_json::Value::Array(rows).to_string(),
    }
}

fn directed_stars(_: Workers) -> Outcome {
    let mut details = Vec::new();
    let mut rows = Vec::new();
    for n in 2..=9usize {
        let want = n <= 3;
        let out = is_23_cordial(&make_out_star(n));
        let inn = is_23_cordial(&make_in_star(n));
        if out != want {
            details.push(format!("out-star n={n}: cordial={out}, want {want}"));
        }
        if inn != want {
            details.push(format!("in-star n={n}: cordial={inn}, want {want}"));
        }
        rows.push(serde_json::json!({"n": n, "out": out, "in": inn}));
    }
    Outcome {
        pass: details.is_empty(),
        summary: "out- and in-stars n=2..9".into(),
        details,
        report: serde_json::Value::Array(rows).to_string(),
    }
}

fn tournaments(w: Workers) -> Outcome {
    let r = verify_tournaments(w).expect("sizes are fixed");
    let summary = format!(
        "n=3: {}; n=4: {}; non-cordial n=4 score vectors: {}",
        r.observation("n=3").unwrap_or("?"),
        r.observation("n=4").unwrap_or("?"),
        r.observation("n=4 non-cordial score vectors")
            .unwrap_or("none"),
    );
    Outcome {
        pass: r.pass(),
        summary,
        details: failures_of(&[&r]),
        report: r.to_json(),
    }
}

fn appendix(_: Workers) -> Outcome {
    let reports: Vec<CampaignReport> = (5..=7)
        .map(|n| validate_appendix(n).expect("bundled sizes"))
        .collect();
    let mut details = failures_of(&reports.iter().collect::<Vec<_>>());
    let mut reproduced = Vec::new();
    for n in 5..=7usize {
        let rows = reproduce_appendix(n).expect("bundled sizes");
        if rows.len() != 1 << (n - 1) {
            details.push(format!(
                "P{n}: reproduced {} rows, want {}",
                rows.len(),
                1 << (n - 1)
            ));
        }
        for row in rows.iter().filter(|r| !r.is_valid()) {
            details.push(format!("P{n}: reproduced row {row} is not cordial"));
        }
        reproduced.extend(rows.iter().map(ToString::to_string));
    }
    let counts: Vec<String> = reports
        .iter()
        .map(|r| format!("{} rows/{} problems", r.instances_checked, r.failures.len()))
        .collect();
    Outcome {
        pass: details.is_empty(),
        summary: format!("appendix P5, P6, P7: {}", counts.join(", ")),
        details,
        report: format!(
            "{}\n{}",
            reports
                .iter()
                .map(CampaignReport::to_json)
                .collect::<Vec<_>>()
                .join("\n"),
            reproduced.join("\n")
        ),
    }
}

fn lambda_identities(w: Workers) -> Outcome {
    let r = verify_lambda_identities(1000, 10, LAMBDA_SEED, w);
    Outcome {
        pass: r.pass() && r.instances_checked == 1000,
        summary: format!(
            "{} random pairs, {} failures",
            r.instances_checked,
            r.failures.len()
        ),
        details: failures_of(&[&r]),
        report: r.to_json(),
    }
}

fn oracle_equivalence(w: Workers) -> Outcome {
    let r = verify_oracle_equivalence(6, w).expect("6 is within the cap");
    Outcome {
        pass: r.pass(),
        summary: format!(
            "{} tree orientations n<=6, {} disagreements",
            r.instances_checked,
            r.failures.len()
        ),
        details: failures_of(&[&r]),
        report: r.to_json(),
    }
}

fn tree_conjecture(w: Workers) -> Outcome {
    let start = Instant::now();
    let r = verify_tree_conjecture(10, Some(3), w).expect("10 is within the cap");
    let elapsed = start.elapsed();
    let counts = r.observation("trees per n").unwrap_or("");
    let counts_ok = counts == "1,1,1,2,3,6,11,23,47,106";
    let mut summary = format!(
        "trees per n {counts}; {} with max degree <= 3, {} without a cordial orientation",
        r.instances_checked,
        r.failures.len()
    );
    let timed = within(elapsed, Duration::from_secs(600), &mut summary);
    let mut details = failures_of(&[&r]);
    if !counts_ok {
        details.push(format!(
            "tree counts {counts}, want 1,1,1,2,3,6,11,23,47,106"
        ));
    }
    Outcome {
        pass: r.pass() && counts_ok && timed,
        summary,
        details,
        report: r.to_json(),
    }
}

type Criterion = fn(Workers) -> Outcome;

const CRITERIA: [Criterion; 10] = [
    star_lemma,
    path_lemma,
    path_conjecture,
    cycles,
    directed_stars,
    tournaments,
    appendix,
    lambda_identities,
    oracle_equivalence,
    tree_conjecture,
];

fn run_all(workers: &str) -> Vec<Outcome> {
    std::env::set_var(WORKERS_ENV, workers);
    CRITERIA.iter().map(|c| c(Workers::from_env())).collect()
}

fn print_line(k: usize, pass: bool, summary: &str, details: &[String]) {
    println!(
        "criterion {k}: {} {summary}",
        if pass { "PASS" } else { "FAIL" }
    );
    if !pass {
        for d in details {
            println!("    {d}");
        }
    }
}

fn main() -> ExitCode {
    let single = run_all("1");
    let mut all_pass = true;
    for (i, o) in single.iter().enumerate() {
        print_line(i + 1, o.pass, &o.summary, &o.details);
        all_pass &= o.pass;
    }

    let eight = run_all("8");
    let differing: Vec<String> = single
        .iter()
        .zip(&eight)
        .enumerate()
        .filter(|(_, (a, b))| a.report != b.report)
        .map(|(i, _)| format!("criterion {} report differs between 1 and 8 workers", i + 1))
        .collect();
    let deterministic = differing.is_empty();
    print_line(
        11,
        deterministic,
        "reports of criteria 1-10 identical with 1 and 8 workers",
        &differing,
    );
    all_pass &= deterministic;

    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
