use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use slopedraw::auto::draw_auto;
use slopedraw::cubic::draw_cubic_basic;
use slopedraw::drawing::Drawing;
use slopedraw::gen::random_cubic;
use slopedraw::graph::Graph;
use slopedraw::io::{drawing_from_json, drawing_to_json, fmax_table, parse_edge_list, parse_graph6_lines, render_svg};
use slopedraw::matching::draw_four_slopes;
use slopedraw::verify::verify_drawing;

const EXIT_FAILED: u8 = 1;
const EXIT_FALLBACK: u8 = 3;
const EXIT_INPUT: u8 = 4;

/// Straight-line drawings of graphs of maximum degree three with at most
/// four slopes, checked by an exact verifier.
///
/// Exit status: 0 when every drawing verified, 1 when a drawing failed or
/// could not be produced, 3 when basic mode fell back and nothing failed,
/// 4 on unreadable input.
#[derive(Parser, Debug)]
#[command(name = "slopedraw", version)]
struct Args {
    /// Graph files (edge list, or graph6 with one graph per line). In verify
    /// mode, drawing JSON files.
    inputs: Vec<PathBuf>,

    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    mode: Mode,

    /// SVG output: a file for a single graph, otherwise a directory.
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,

    /// JSON output: a file for a single graph, otherwise a directory. With
    /// a single graph and no path, the JSON goes to stdout.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Print a table instead of drawing.
    #[arg(long, value_enum)]
    table: Option<Table>,

    /// Largest even order in the table.
    #[arg(long, default_value_t = 42, requires = "table")]
    max: usize,

    /// Also read every .g6 and .txt file in this directory.
    #[arg(long, value_name = "DIR")]
    corpus: Option<PathBuf>,

    /// Draw random connected cubic graphs of this order.
    #[arg(long, value_name = "N")]
    random_cubic: Option<usize>,

    /// How many random graphs to draw.
    #[arg(long, default_value_t = 10, requires = "random_cubic")]
    count: usize,

    /// Seed for the random graphs.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Only print the summary line.
    #[arg(long, short)]
    quiet: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    /// Basic slopes when possible, otherwise four slopes.
    Auto,
    /// Basic slopes only; graphs without a construction are reported as fallback.
    Basic,
    /// The matching construction; needs a connected, bridgeless, triangle-free cubic graph.
    Four,
    /// Check drawing JSON files.
    Verify,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Table {
    /// Supercycle bound table.
    Fmax,
}

enum Outcome {
    Pass { drawing: Drawing, mode: &'static str },
    Failed(String),
    Fallback(String),
}

struct Job {
    name: String,
    graph: Graph,
    drawing: Option<Drawing>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(Table::Fmax) = args.table {
        print!("{}", fmax_table(args.max));
        return ExitCode::SUCCESS;
    }
    let jobs = match collect_jobs(&args) {
        Ok(jobs) => jobs,
        Err(msg) => {
            eprintln!("slopedraw: {msg}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    if jobs.is_empty() {
        eprintln!("slopedraw: no input graphs");
        return ExitCode::from(EXIT_INPUT);
    }
    let single = jobs.len() == 1;
    let (mut passed, mut failed, mut fallback) = (0usize, 0usize, 0usize);
    for job in &jobs {
        let outcome = run(args.mode, job);
        let line = match &outcome {
            Outcome::Pass { drawing, mode } => {
                passed += 1;
                format!("{}: pass mode={mode} slopes={} n={}", job.name, drawing.slopes.len(), job.graph.n())
            }
            Outcome::Failed(msg) => {
                failed += 1;
                format!("{}: FAIL {msg}", job.name)
            }
            Outcome::Fallback(msg) => {
                fallback += 1;
                format!("{}: fallback {msg}", job.name)
            }
        };
        if !args.quiet {
            eprintln!("{line}");
        }
        if let Outcome::Pass { drawing, mode } = &outcome {
            if args.mode != Mode::Verify {
                if let Err(e) = emit(&args, job, drawing, mode, single) {
                    eprintln!("slopedraw: {e}");
                    return ExitCode::from(EXIT_INPUT);
                }
            }
        }
    }
    eprintln!("{} graphs: {passed} passed, {failed} failed, {fallback} fallback", jobs.len());
    if failed > 0 {
        ExitCode::from(EXIT_FAILED)
    } else if fallback > 0 {
        ExitCode::from(EXIT_FALLBACK)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(mode: Mode, job: &Job) -> Outcome {
    let g = &job.graph;
    let (drawing, label) = match mode {
        Mode::Auto => match draw_auto(g) {
            Ok((d, m)) => (d, m.as_str()),
            Err(e) => return Outcome::Failed(e.to_string()),
        },
        Mode::Basic => match draw_cubic_basic(g) {
            Ok(d) => (d, "basic"),
            Err(f) => return Outcome::Fallback(f.reason),
        },
        Mode::Four => match draw_four_slopes(g) {
            Ok(d) => (d, "four"),
            Err(e) => return Outcome::Failed(e.to_string()),
        },
        Mode::Verify => (job.drawing.clone().expect("verify jobs carry a drawing"), "verify"),
    };
    match verify_drawing(g, &drawing.points, &drawing.slopes) {
        Ok(()) => Outcome::Pass { drawing, mode: label },
        Err(v) => Outcome::Failed(format!("{}: {v}", v.clause())),
    }
}

fn collect_jobs(args: &Args) -> Result<Vec<Job>, String> {
    let mut files = args.inputs.clone();
    if let Some(dir) = &args.corpus {
        let mut found: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(|e| format!("{}: {e}", dir.display()))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("g6" | "txt")))
            .collect();
        found.sort();
        files.extend(found);
    }
    let mut jobs = Vec::new();
    for path in &files {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("graph").to_string();
        if args.mode == Mode::Verify {
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            let (graph, drawing, _) = drawing_from_json(&value).map_err(|e| format!("{}: {e}", path.display()))?;
            jobs.push(Job { name: stem, graph, drawing: Some(drawing) });
            continue;
        }
        let graphs = parse_file(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let many = graphs.len() > 1;
        for (k, graph) in graphs.into_iter().enumerate() {
            let name = if many { format!("{stem}_{:04}", k + 1) } else { stem.clone() };
            jobs.push(Job { name, graph, drawing: None });
        }
    }
    if let Some(n) = args.random_cubic {
        if n < 4 || n % 2 == 1 {
            return Err(format!("--random-cubic needs an even order of at least 4, got {n}"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        for k in 0..args.count {
            jobs.push(Job { name: format!("random{n}_{:04}", k + 1), graph: random_cubic(n, &mut rng), drawing: None });
        }
    }
    Ok(jobs)
}

/// An edge list if the first content line has two fields, else graph6
/// lines.
fn parse_file(text: &str) -> Result<Vec<Graph>, slopedraw::io::ParseError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.split_whitespace().count() == 2 => Ok(vec![parse_edge_list(text)?]),
        _ => parse_graph6_lines(text),
    }
}

fn emit(args: &Args, job: &Job, d: &Drawing, mode: &str, single: bool) -> Result<(), String> {
    let json = serde_json::to_string_pretty(&drawing_to_json(&job.graph, d, mode)).expect("JSON values serialize");
    match &args.json {
        Some(path) => write_output(path, single, &job.name, "json", &json)?,
        None if single => match writeln!(std::io::stdout().lock(), "{json}") {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(format!("stdout: {e}")),
            _ => {}
        },
        None => {}
    }
    if let Some(path) = &args.svg {
        write_output(path, single, &job.name, "svg", &render_svg(&job.graph, d))?;
    }
    Ok(())
}

/// Writes to `path` for a single graph, or into the directory `path`
/// otherwise, through a temporary file and a rename.
fn write_output(path: &Path, single: bool, name: &str, ext: &str, body: &str) -> Result<(), String> {
    let target = if single {
        path.to_path_buf()
    } else {
        fs::create_dir_all(path).map_err(|e| format!("{}: {e}", path.display()))?;
        path.join(format!("{name}.{ext}"))
    };
    let tmp = target.with_extension(format!("{ext}.tmp"));
    let mut f = fs::File::create(&tmp).map_err(|e| format!("{}: {e}", tmp.display()))?;
    let tail: &[u8] = if body.ends_with('\n') { b"" } else { b"\n" };
    f.write_all(body.as_bytes()).and_then(|_| f.write_all(tail)).map_err(|e| format!("{}: {e}", tmp.display()))?;
    fs::rename(&tmp, &target).map_err(|e| format!("{}: {e}", target.display()))
}
