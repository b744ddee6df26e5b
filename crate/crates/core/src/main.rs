use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use cordial::constructions::construct_directed_cycle_labeling;
use cordial::enumeration::{
    arrow_pattern, code_bits, path_orientation_classes, path_orientations_up_to_reversal,
    UndirectedGraph,
};
use cordial::harness::appendix::{reproduce_appendix, validate_appendix};
use cordial::harness::campaigns::{
    verify_path_conjecture, verify_path_lemma, verify_star_lemma, verify_tournaments,
    verify_tree_conjecture,
};
use cordial::harness::dot::to_dot;
use cordial::search::MAX_SEARCH_VERTICES;
use cordial::{
    count_cordial_labelings, find_cordial_labeling, CampaignReport, Digraph, LambdaTriple,
    VertexLabeling, Workers,
};

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Decide and verify (2,3)-cordiality of digon-free digraphs.
#[derive(Parser)]
#[command(name = "cordial", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Emit a JSON report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[group(multiple = false)]
struct PathMode {
    /// List every orientation of P_N with a witness or a verdict (default).
    #[arg(long)]
    all: bool,
    /// Check every orientation of P_1..P_N against the known exceptions.
    #[arg(long)]
    lemma: bool,
    /// Check that every orientation of P_5..P_N is cordial.
    #[arg(long)]
    conjecture: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide cordiality of a digraph in the text format.
    Check {
        file: PathBuf,
        /// Also count all cordial labelings.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Orientations of the path on N vertices.
    Paths {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        mode: PathMode,
        #[command(flatten)]
        out: Output,
    },
    /// Compare brute-force star existence with the closed form for n = 2..=N.
    Stars {
        #[arg(long = "max-n")]
        max_n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Construct and verify a cordial labeling of the directed N-cycle.
    Cycles {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check that every free tree within the degree bound has a cordial orientation.
    Trees {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long = "max-degree", default_value_t = 3)]
        max_degree: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Check cordiality of the tournaments on 3 and 4 vertices.
    Tournaments {
        #[command(flatten)]
        out: Output,
    },
    /// Print cordial labelings of every orientation of P_N, or validate the bundled table.
    Appendix {
        #[arg(long, value_parser = clap::value_parser!(u8).range(5..=7))]
        n: u8,
        #[arg(long)]
        validate: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Write a digraph as Graphviz DOT.
    Export {
        file: PathBuf,
        #[arg(long)]
        dot: PathBuf,
        /// Annotate vertices and arcs with the least cordial labeling, if any.
        #[arg(long)]
        witness: bool,
    },
}

#[derive(Serialize)]
struct CheckOutput {
    cordial: bool,
    witness: Option<VertexLabeling>,
    lambda: Option<LambdaTriple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<u64>,
}

#[derive(Serialize)]
struct CycleOutput {
    n: usize,
    labels: VertexLabeling,
    lambda: LambdaTriple,
    cordial: bool,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn read_digraph(path: &PathBuf) -> Result<Digraph, UsageError> {
    let text =
        fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let d: Digraph = text
        .parse()
        .map_err(|e| UsageError(format!("{}:{e}", path.display())))?;
    if d.vertex_count() > MAX_SEARCH_VERTICES {
        return Err(UsageError(format!(
            "{}: {} vertices exceeds the search limit of {MAX_SEARCH_VERTICES}",
            path.display(),
            d.vertex_count()
        )));
    }
    Ok(d)
}

fn exit_for(ok: bool) -> u8 {
    if ok {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn emit(report: &CampaignReport, out: &Output) -> u8 {
    if out.json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
        eprintln!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
    }
    exit_for(report.pass())
}

fn labels_text(f: &VertexLabeling) -> String {
    f.labels()
        .iter()
        .map(u8::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn list_paths(n: usize, json: bool) -> u8 {
    let m = n.saturating_sub(1);
    let skeleton = UndirectedGraph::path(n);
    let mut rows = Vec::new();
    let mut all_cordial = true;
    for code in 0..1u64 << m {
        let pattern = arrow_pattern(&code_bits(code, m));
        let d = cordial::enumeration::Orientation::from_code(skeleton.clone(), code).to_digraph();
        let result = find_cordial_labeling(&d);
        all_cordial &= result.cordial;
        rows.push((pattern, result));
    }
    if json {
        let items: Vec<_> = rows
            .iter()
            .map(|(p, r)| serde_json::json!({"pattern": p, "cordial": r.cordial, "witness": r.witness, "lambda": r.lambda}))
            .collect();
        println!("{}", serde_json::Value::Array(items));
    } else {
        for (pattern, r) in &rows {
            match (&r.witness, &r.lambda) {
                (Some(w), Some(t)) => println!("{pattern:<width$}  {w}  {t}", width = m),
                _ => println!("{pattern:<width$}  not cordial", width = m),
            }
        }
        let bad = rows.iter().filter(|(_, r)| !r.cordial).count();
        println!(
            "P{n}: {} orientations, {bad} not cordial; {} end-to-end classes, {} classes up to isomorphism and reversal",
            rows.len(),
            path_orientations_up_to_reversal(n).len(),
            path_orientation_classes(n).len()
        );
    }
    exit_for(all_cordial)
}

fn run(command: Command) -> Result<u8, UsageError> {
    let workers = Workers::from_env();
    match command {
        Command::Check { file, count, json } => {
            let d = read_digraph(&file)?;
            let r = find_cordial_labeling(&d);
            let out = CheckOutput {
                cordial: r.cordial,
                witness: r.witness,
                lambda: r.lambda,
                count: count.then(|| count_cordial_labelings(&d)),
            };
            if json {
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!("cordial: {}", if out.cordial { "yes" } else { "no" });
                if let (Some(w), Some(t)) = (&out.witness, &out.lambda) {
                    println!("witness: {}", labels_text(w));
                    println!("lambda: {} {} {}", t.alpha, t.beta, t.gamma);
                }
                if let Some(c) = out.count {
                    println!("cordial labelings: {c}");
                }
            }
            Ok(exit_for(out.cordial))
        }
        Command::Paths { n, mode, out } => {
            if mode.lemma {
                Ok(emit(&verify_path_lemma(1..=n, workers), &out))
            } else if mode.conjecture {
                Ok(emit(&verify_path_conjecture(n, workers)?, &out))
            } else {
                if n > MAX_SEARCH_VERTICES {
                    return Err(UsageError(format!("--n {n} exceeds {MAX_SEARCH_VERTICES}")));
                }
                Ok(list_paths(n, out.json))
            }
        }
        Command::Stars { max_n, out } => {
            if !(2..=MAX_SEARCH_VERTICES).contains(&max_n) {
                return Err(UsageError(format!(
                    "--max-n must be in 2..={MAX_SEARCH_VERTICES}"
                )));
            }
            Ok(emit(&verify_star_lemma(max_n, workers), &out))
        }
        Command::Cycles { n, json } => {
            let (d, f) = construct_directed_cycle_labeling(n)?;
            let t = cordial::lambda(&d, &f)?;
            let ok = f.is_friendly() && t.is_friendly();
            if json {
                let out = CycleOutput {
                    n,
                    labels: f,
                    lambda: t,
                    cordial: ok,
                };
                println!("{}", serde_json::to_string(&out)?);
            } else {
                println!("directed {n}-cycle");
                println!("labels: {}", labels_text(&f));
                println!("lambda: {} {} {}", t.alpha, t.beta, t.gamma);
                println!("verdict: {}", if ok { "PASS" } else { "FAIL" });
            }
            Ok(exit_for(ok))
        }
        Command::Trees {
            max_n,
            max_degree,
            out,
        } => Ok(emit(
            &verify_tree_conjecture(max_n, Some(max_degree), workers)?,
            &out,
        )),
        Command::Tournaments { out } => Ok(emit(&verify_tournaments(workers)?, &out)),
        Command::Appendix { n, validate, out } => {
            let n = usize::from(n);
            if validate {
                return Ok(emit(&validate_appendix(n)?, &out));
            }
            let rows = reproduce_appendix(n)?;
            if out.json {
                let items: Vec<_> = rows
                    .iter()
                    .map(|r| serde_json::json!({"row": r.to_string(), "lambda": r.lambda}))
                    .collect();
                println!("{}", serde_json::Value::Array(items));
            } else {
                for r in &rows {
                    println!("{r}  {}", r.lambda);
                }
            }
            Ok(exit_for(rows.iter().all(|r| r.is_valid())))
        }
        Command::Export { file, dot, witness } => {
            let d = read_digraph(&file)?;
            let labeling = if witness {
                find_cordial_labeling(&d).witness
            } else {
                None
            };
            let text = to_dot(&d, labeling.as_ref())?;
            fs::write(&dot, text).map_err(|e| UsageError(format!("{}: {e}", dot.display())))?;
            Ok(EXIT_PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
