//! Command-line front end: oracles, constructions, witness search,
//! verification suites and rendering.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pseudotri::constructive::{
    empty_5pt_triangular, empty_6pt_triangular, empty_7pt_triangular, standard_7pt_triangular,
};
use pseudotri::extremal::{bft_construct, witness_search, BFTParams, Claim};
use pseudotri::harness::{
    default_fixture_dir, run_property, table_report, verify_lower, verify_upper, ClaimKind,
    ClaimSpec, Family, VerificationReport, PROPERTY_NAMES,
};
use pseudotri::io::{format_point_set, read_point_set, Witness};
use pseudotri::search::{find_convex_kgon, find_empty_pseudo_triangle, find_k_hole};
use pseudotri::svg::witness_svg;
use pseudotri::{Construction, PointSet};

const EXIT_NOT_FOUND: u8 = 3;

#[derive(Parser)]
#[command(
    name = "pseudotri",
    about = "Exact search, construction and verification of holes, convex polygons \
             and empty pseudo-triangles in planar point sets",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run structure oracles on a point-set file.
    ///
    /// Prints every requested structure found as JSON; exits 3 when none of
    /// the requested structures exist.
    Check {
        /// Point-set file: one "x y" pair per line, # comments allowed.
        file: PathBuf,
        /// Look for a k-hole (or convex k-gon with --no-empty).
        #[arg(long)]
        k: Option<usize>,
        /// Look for a pseudo-triangle with this many vertices.
        #[arg(long)]
        l: Option<usize>,
        /// Require structures to be empty in the set (default).
        #[arg(long, conflicts_with = "no_empty")]
        empty: bool,
        /// Allow structures that enclose other points of the set.
        #[arg(long)]
        no_empty: bool,
    },
    /// Emit a certified configuration from a generator family.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Randomized hunt for a set satisfying a list of claims.
    SearchWitness {
        /// Number of points (1 to 20).
        #[arg(long)]
        n: usize,
        /// Comma-separated claims, e.g. "no-5-hole,no-empty-6-pt,lambda<=2,hull=3".
        #[arg(long)]
        claims: String,
        /// Trial budget.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the result here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Run a constructive operation and dump its descent trace.
    Trace {
        /// Point-set file the construction runs on.
        file: PathBuf,
        /// One of: empty5pt, empty6pt, standard7pt, empty7pt.
        #[arg(long)]
        op: String,
    },
    /// Render a witness JSON file to a static SVG.
    Render {
        witness: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Layered concave-column configuration: no convex k-gon, convexity
    /// level at most `level`, with (k-3)(level+1)+2 points.
    Bft {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Sampled check of an upper bound: random n-point sets must contain
    /// the cell's structure disjunction.
    Upper {
        /// Bound family: e (k-hole / empty pseudo-triangle) or
        /// f (convex k-gon / pseudo-triangle).
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        /// Sample size (the claimed threshold).
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Certified check of a lower bound against a witness configuration.
    Lower {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        /// Witness file; omitted means a generated layered configuration.
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Expected witness size (0 = don't check).
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Run one named structural property.
    Property {
        /// Property name; see --list.
        name: Option<String>,
        /// List registered property names.
        #[arg(long)]
        list: bool,
        #[arg(long, default_value = None)]
        fixtures: Option<PathBuf>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Run the full two-table verification suite.
    Tables {
        #[arg(long, default_value = None)]
        fixtures: Option<PathBuf>,
        #[command(flatten)]
        report: ReportArgs,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    match s.to_ascii_lowercase().as_str() {
        "e" => Ok(Family::E),
        "f" => Ok(Family::F),
        other => Err(format!("unknown family {other:?}, expected e or f")),
    }
}

fn parse_claims(spec: &str) -> Result<Vec<Claim>, String> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Claim>().map_err(|e| e.to_string()))
        .collect()
}

fn emit_report(report: &VerificationReport, json: bool) -> ExitCode {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
    } else {
        print!("{}", report.render_text());
        eprintln!("wall time: {:.2?}", report.wall);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::FAILURE
}

fn load_set(path: &PathBuf) -> Result<PointSet, pseudotri::Error> {
    Ok(read_point_set::<i64>(path)?.points)
}

fn run_check(
    file: PathBuf,
    k: Option<usize>,
    l: Option<usize>,
    no_empty: bool,
) -> ExitCode {
    let set = match load_set(&file) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    if k.is_none() && l.is_none() {
        return fail("nothing to check: pass --k and/or --l");
    }
    let mut found = Vec::new();
    if let Some(k) = k {
        let hit = if no_empty {
            find_convex_kgon(&set, k).map(|v| Witness::convex_gon(v, &set))
        } else {
            find_k_hole(&set, k).map(|v| Witness::hole(v, &set))
        };
        match hit {
            Some(w) => found.push(w),
            None => eprintln!(
                "no {} with {k} vertices",
                if no_empty { "convex polygon" } else { "hole" }
            ),
        }
    }
    if let Some(l) = l {
        match find_empty_pseudo_triangle(&set, l, !no_empty) {
            Some(pt) => found.push(Witness::pseudo_triangle(&pt, &set)),
            None => eprintln!(
                "no {}pseudo-triangle with {l} vertices",
                if no_empty { "" } else { "empty " }
            ),
        }
    }
    if found.is_empty() {
        return ExitCode::from(EXIT_NOT_FOUND);
    }
    println!("{}", serde_json::to_string_pretty(&found).expect("witnesses serialize"));
    ExitCode::SUCCESS
}

fn write_or_print(text: &str, output: Option<&PathBuf>) -> ExitCode {
    match output {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => {
                eprintln!("wrote {}", path.display());
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        None => {
            print!("{text}");
            ExitCode::SUCCESS
        }
    }
}

fn run_trace(file: PathBuf, op: &str) -> ExitCode {
    let set = match load_set(&file) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let run: fn(&PointSet) -> pseudotri::Result<Construction> = match op {
        "empty5pt" => empty_5pt_triangular,
        "empty6pt" => empty_6pt_triangular,
        "standard7pt" => standard_7pt_triangular,
        "empty7pt" => empty_7pt_triangular,
        other => {
            return fail(format!(
                "unknown op {other:?}; expected empty5pt, empty6pt, standard7pt or empty7pt"
            ))
        }
    };
    match run(&set) {
        Ok(c) => {
            let witness = Witness::pseudo_triangle(&c.result, &set).with_trace(c.trace);
            println!("{}", serde_json::to_string_pretty(&witness).expect("witness serializes"));
            ExitCode::SUCCESS
        }
        Err(e) => fail(e),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Check { file, k, l, empty: _, no_empty } => run_check(file, k, l, no_empty),
        Command::Construct(ConstructCmd::Bft { k, level, seed, output }) => {
            let params = BFTParams { jitter_seed: seed, ..BFTParams::new(k, level) };
            match bft_construct::<i64>(&params) {
                Ok(cfg) => write_or_print(
                    &format_point_set(cfg.points.points(), &cfg.certificates),
                    output.as_ref(),
                ),
                Err(e) => fail(e),
            }
        }
        Command::SearchWitness { n, claims, budget, seed, output } => {
            let claims = match parse_claims(&claims) {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            match witness_search::<i64>(n, &claims, budget, seed) {
                Ok(Some(cfg)) => write_or_print(
                    &format_point_set(cfg.points.points(), &cfg.certificates),
                    output.as_ref(),
                ),
                Ok(None) => {
                    eprintln!("no witness within {budget} trials");
                    ExitCode::from(EXIT_NOT_FOUND)
                }
                Err(e) => fail(e),
            }
        }
        Command::Verify(cmd) => match cmd {
            VerifyCmd::Upper { family, k, l, n, report } => {
                let family = match parse_family(&family) {
                    Ok(f) => f,
                    Err(e) => return fail(e),
                };
                let spec = ClaimSpec {
                    kind: if family == Family::E { ClaimKind::EUpper } else { ClaimKind::FUpper },
                    k,
                    l,
                    n,
                    trials: report.trials,
                    seed: report.seed,
                    fixture: None,
                };
                emit_report(&verify_upper(&spec), report.json)
            }
            VerifyCmd::Lower { family, k, l, fixture, n, report } => {
                let family = match parse_family(&family) {
                    Ok(f) => f,
                    Err(e) => return fail(e),
                };
                let spec = ClaimSpec {
                    kind: if family == Family::E { ClaimKind::ELower } else { ClaimKind::FLower },
                    k,
                    l,
                    n,
                    trials: 1,
                    seed: report.seed,
                    fixture,
                };
                match verify_lower(&spec) {
                    Ok(r) => emit_report(&r, report.json),
                    Err(e) => fail(e),
                }
            }
            VerifyCmd::Property { name, list, fixtures, report } => {
                if list {
                    for name in PROPERTY_NAMES {
                        println!("{name}");
                    }
                    return ExitCode::SUCCESS;
                }
                let Some(name) = name else {
                    return fail("property name required (or --list)");
                };
                let dir = fixtures.unwrap_or_else(default_fixture_dir);
                match run_property(&name, report.trials, report.seed, &dir) {
                    Ok(r) => emit_report(&r, report.json),
                    Err(e) => fail(e),
                }
            }
            VerifyCmd::Tables { fixtures, report } => {
                let dir = fixtures.unwrap_or_else(default_fixture_dir);
                emit_report(&table_report(&dir, report.trials, report.seed), report.json)
            }
        },
        Command::Trace { file, op } => run_trace(file, &op),
        Command::Render { witness, output } => {
            let text = match std::fs::read_to_string(&witness) {
                Ok(t) => t,
                Err(e) => return fail(format!("{}: {e}", witness.display())),
            };
            let parsed: Witness<i64> = match serde_json::from_str(&text) {
                Ok(w) => w,
                Err(e) => return fail(format!("invalid witness JSON: {e}")),
            };
            match std::fs::write(&output, witness_svg(&parsed)) {
                Ok(()) => {
                    eprintln!("wrote {}", output.display());
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
    }
}
