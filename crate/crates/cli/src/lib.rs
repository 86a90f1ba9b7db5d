//! The `bary` command line. Every subcommand reads JSON files, runs one
//! library operation and prints JSON.
//!
//! Exit codes: 0 for success or a true answer, 1 for a well-formed false
//! answer, 2 for malformed input or any other error. Errors print one line
//! `error: kind=<kind> message=<text>` to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use bary::derived::{
    alexander_dual, barycentric_subdivision, complement_complex, facet_ideal_generators, stanley_reisner_generators,
};
use bary::graphs::comparability_graph;
use bary::io::{
    bijection_to_json, complex_from_json, complex_to_json, graph_from_json, graph_to_json, labeling_to_json,
    report_to_json, sets_to_json,
};
use bary::reconstruct::{reconstruct_from_comparability_graph, reconstruct_from_subdivision, ReconstructionReport};
use bary::verify::{verify_equivalences, verify_subdivision_rigidity};
use bary::{are_isomorphic, SimplicialComplex};
use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "bary",
    version,
    about = "Simplicial complexes, barycentric subdivisions and comparability graphs"
)]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Barycentric subdivision, iterated K times.
    Subdivide {
        complex: PathBuf,
        #[arg(short, default_value_t = 1)]
        k: usize,
        /// Also write the face labeling of the last subdivision step.
        #[arg(long, value_name = "PATH")]
        labels: Option<PathBuf>,
    },
    /// Alexander dual.
    Dual { complex: PathBuf },
    /// Complement complex (complements of the facets).
    Complement { complex: PathBuf },
    /// Comparability graph, labeled by faces.
    CompGraph { complex: PathBuf },
    /// The I-skeleton.
    Skeleton {
        complex: PathBuf,
        #[arg(short, allow_negative_numbers = true)]
        i: i64,
    },
    /// Minimal non-faces.
    Nonfaces { complex: PathBuf },
    /// Supports of the Stanley–Reisner ideal generators.
    SrGens { complex: PathBuf },
    /// Supports of the facet ideal generators.
    FacetGens { complex: PathBuf },
    /// Euler characteristic.
    Euler { complex: PathBuf },
    /// Prints an isomorphism witness, or `null` with exit code 1.
    Iso { a: PathBuf, b: PathBuf },
    /// Rebuilds a complex from a comparability graph.
    Reconstruct {
        graph: PathBuf,
        /// Print the full report even on success.
        #[arg(long)]
        report: bool,
    },
    /// Rebuilds a complex from its barycentric subdivision.
    ReconstructSub {
        complex: PathBuf,
        #[arg(long)]
        report: bool,
    },
    /// Decides whether a graph is the comparability graph of a complex.
    CheckComparability { graph: PathBuf },
    /// Exhaustive verification over all complexes on up to N vertices.
    Verify {
        #[arg(long, value_name = "N")]
        max_vertices: usize,
        /// 2.2: subdivision rigidity and reconstruction; 2.3: agreement of the isomorphism invariants.
        #[arg(long, default_value = "2.2", value_parser = ["2.2", "2.3"])]
        theorem: String,
    },
}

#[derive(Debug)]
struct Failure {
    kind: &'static str,
    message: String,
}

impl From<bary::Error> for Failure {
    fn from(e: bary::Error) -> Self {
        Failure {
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        kind: "io",
        message: format!("{}: {e}", path.display()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    Ok(complex_from_json(&read(path)?)?)
}

/// What a subcommand printed and the exit code it chose.
struct Answer {
    text: String,
    code: i32,
}

impl Answer {
    fn ok(text: String) -> Self {
        Answer { text, code: 0 }
    }
}

/// Failures that are mathematical answers rather than errors.
fn is_negative_answer(kind: &str) -> bool {
    matches!(
        kind,
        "not_orientable" | "not_face_poset" | "not_flag" | "conflicting_reconstructions"
    )
}

fn reconstruction_answer(report: ReconstructionReport, full: bool) -> Result<Answer, Failure> {
    match (&report.result, full) {
        (Ok(r), false) => Ok(Answer::ok(complex_to_json(&r.complex))),
        (Ok(_), true) => Ok(Answer::ok(report_to_json(&report))),
        (Err(e), _) if is_negative_answer(e.kind()) => Ok(Answer {
            text: report_to_json(&report),
            code: 1,
        }),
        (Err(_), _) => Err(report.result.unwrap_err().into()),
    }
}

fn execute(command: Command) -> Result<Answer, Failure> {
    match command {
        Command::Subdivide { complex, k, labels } => {
            if k == 0 {
                return Err(bary::Error::InvalidArgument("k must be at least 1".into()).into());
            }
            let mut current = read_complex(&complex)?;
            let mut labeling = None;
            for _ in 0..k {
                let sub = barycentric_subdivision(&current)?;
                current = sub.complex;
                labeling = Some(sub.labeling);
            }
            if let (Some(path), Some(labeling)) = (labels, labeling) {
                std::fs::write(&path, labeling_to_json(&labeling) + "\n").map_err(|e| io_failure(&path, e))?;
            }
            Ok(Answer::ok(complex_to_json(&current)))
        }
        Command::Dual { complex } => Ok(Answer::ok(complex_to_json(&alexander_dual(&read_complex(&complex)?)))),
        Command::Complement { complex } => Ok(Answer::ok(complex_to_json(&complement_complex(&read_complex(
            &complex,
        )?)))),
        Command::CompGraph { complex } => Ok(Answer::ok(graph_to_json(&comparability_graph(&read_complex(
            &complex,
        )?)?))),
        Command::Skeleton { complex, i } => Ok(Answer::ok(complex_to_json(&read_complex(&complex)?.skeleton(i)?))),
        Command::Nonfaces { complex } => Ok(Answer::ok(sets_to_json(&read_complex(&complex)?.minimal_nonfaces()))),
        Command::SrGens { complex } => Ok(Answer::ok(sets_to_json(&stanley_reisner_generators(&read_complex(
            &complex,
        )?)))),
        Command::FacetGens { complex } => Ok(Answer::ok(sets_to_json(&facet_ideal_generators(&read_complex(
            &complex,
        )?)))),
        Command::Euler { complex } => Ok(Answer::ok(read_complex(&complex)?.euler_characteristic().to_string())),
        Command::Iso { a, b } => {
            let (a, b) = (read_complex(&a)?, read_complex(&b)?);
            Ok(match are_isomorphic(&a, &b) {
                Some(w) => Answer::ok(bijection_to_json(&w)),
                None => Answer {
                    text: "null".into(),
                    code: 1,
                },
            })
        }
        Command::Reconstruct { graph, report } => {
            let graph = graph_from_json(&read(&graph)?)?;
            reconstruction_answer(reconstruct_from_comparability_graph(&graph), report)
        }
        Command::ReconstructSub { complex, report } => {
            reconstruction_answer(reconstruct_from_subdivision(&read_complex(&complex)?), report)
        }
        Command::CheckComparability { graph } => {
            let graph = graph_from_json(&read(&graph)?)?;
            reconstruction_answer(reconstruct_from_comparability_graph(&graph), true)
        }
        Command::Verify { max_vertices, theorem } => {
            let report = match theorem.as_str() {
                "2.2" => verify_subdivision_rigidity(max_vertices)?,
                _ => verify_equivalences(max_vertices)?,
            };
            let code = if report.passed() { 0 } else { 1 };
            Ok(Answer {
                text: serde_json::to_string(&report).expect("serializable"),
                code,
            })
        }
    }
}

fn one_line(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Runs the command line with explicit streams; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let message = e.render().to_string();
            let first = message.lines().next().unwrap_or_default().trim_start_matches("error: ");
            let _ = writeln!(err, "error: kind=usage message={}", one_line(first));
            return 2;
        }
    };
    let result = execute(cli.command).and_then(|answer| {
        let text = answer.text + "\n";
        match &cli.output {
            Some(path) => std::fs::write(path, &text).map_err(|e| io_failure(path, e))?,
            None => out.write_all(text.as_bytes()).map_err(|e| Failure {
                kind: "io",
                message: e.to_string(),
            })?,
        }
        Ok(answer.code)
    });
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: kind={} message={}", f.kind, one_line(&f.message));
            2
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
