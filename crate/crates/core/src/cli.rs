//! Batch driver: one subcommand per computation, one JSON object per result
//! line, and a closing summary line `{command, count, elapsed_seconds, ..}`.
//!
//! Exit status: 0 on success, 1 on invalid arguments or input, 2 when
//! `--expect` does not match the count or a verified record fails a check.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::lattes::{lattes_profile, sharpness_failures};
use crate::partition::Partition;
use crate::perm::verify_dn_partition;
use crate::ramification::{
    enumerate_degree6_pairs, enumerate_exceptional_tuples, family_profile, profile_pair_ram_degrees,
    solve_trivalent_dynkin, Family, RamificationProfile, S2Bound,
};
use crate::search::{
    dn_witness_search, run_case, s10_count, s10_search, verify_solution, CaseId, RunOptions, SolutionRecord,
    XReading,
};

#[derive(Debug, Parser)]
#[command(name = "ramsearch", version, about = "Searches and certificates for genus-zero fibre products")]
pub struct Cli {
    /// Worker threads for the e6/e7/e8 searches.
    #[arg(long, global = true, env = "RAMSEARCH_WORKERS", default_value_t = 1,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: u32,
    /// Exit with status 2 unless exactly this many result lines are produced.
    #[arg(long, global = true)]
    pub expect: Option<u64>,
    /// Write the JSON lines here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Constraint tuples (l, m, R1, R2, S1, S2, a1, a2, b1, b2) outside the generic case.
    Tuples {
        /// Allow S2 = m/3 instead of S2 < m/3.
        #[arg(long)]
        s2_inclusive: bool,
    },
    /// Degree-6 profile pairs with enough ramification of the fibre product.
    M6,
    /// Triples 2 <= r3 <= r4 <= r5 with 1/r3 + 1/r4 + 1/r5 > 1.
    Dynkin {
        #[arg(long, default_value_t = 10)]
        n_max: u32,
    },
    /// Profiles and Riemann–Hurwitz sums of the four families.
    Family {
        /// e6, e7, e8 or dn:N; defaults to dn:2..dn:5, e6, e7, e8.
        families: Vec<String>,
    },
    /// Tuple searches.
    Search {
        #[arg(value_enum)]
        case: SearchTarget,
        /// s10 only: reading of the first type 1^8 x.
        #[arg(long, value_enum, default_value_t = XArg::Both)]
        x_reading: XArg,
        /// e6 only: disable the component pruning.
        #[arg(long)]
        no_prune: bool,
        /// e6/e7/e8: keep only g1 with <g1, g2> transitive.
        #[arg(long)]
        g1g2_transitive_only: bool,
        /// dn only: the parameter n (2 or 3).
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Lattès maps on torsion models.
    Lattes {
        #[command(subcommand)]
        what: LattesCommand,
    },
    /// Re-check solution records (JSON lines; other lines are skipped).
    VerifySolution {
        /// Input file; stdin if absent.
        input: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchTarget {
    E6,
    E7,
    E8,
    S10,
    Dn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum XArg {
    #[value(name = "2")]
    Two,
    Trivial,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum LattesCommand {
    /// Ramification of <n> over the four branch points.
    Profile {
        /// Values of n; defaults to 2..=8.
        n: Vec<u32>,
    },
    /// The torsion lifting check for (l, m); defaults to all 3 <= l < m <= 7.
    Sharpness { l: Option<u32>, m: Option<u32> },
}

/// Result lines plus summary extras.
struct Report {
    command: String,
    lines: Vec<Value>,
    extra: serde_json::Map<String, Value>,
    /// A check that does not depend on `--expect` failed.
    check_failed: bool,
}

impl Report {
    fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            lines: Vec::new(),
            extra: serde_json::Map::new(),
            check_failed: false,
        }
    }
}

fn types_json(p: &RamificationProfile) -> Vec<String> {
    p.branch_types().iter().map(Partition::to_string).collect()
}

fn cycles(ps: &[&crate::perm::Permutation]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn execute(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Tuples { s2_inclusive } => {
            let bound = if *s2_inclusive { S2Bound::Inclusive } else { S2Bound::Strict };
            let mut r = Report::new("tuples");
            for t in enumerate_exceptional_tuples(bound) {
                r.lines.push(json!({ "tuple": t.as_array(), "text": t.to_string() }));
            }
            r.extra.insert("s2_inclusive".into(), json!(s2_inclusive));
            Ok(r)
        }
        Command::M6 => {
            let mut r = Report::new("m6");
            for (pl, pm) in enumerate_degree6_pairs() {
                let (e, f) = profile_pair_ram_degrees(&pl, &pm)?;
                r.lines.push(json!({
                    "pi_l": types_json(&pl),
                    "pi_m": types_json(&pm),
                    "sum_e": e,
                    "sum_f": f,
                }));
            }
            Ok(r)
        }
        Command::Dynkin { n_max } => {
            let mut r = Report::new("dynkin");
            for (a, b, c) in solve_trivalent_dynkin(*n_max) {
                r.lines.push(json!({ "triple": [a, b, c] }));
            }
            Ok(r)
        }
        Command::Family { families } => {
            let fams: Vec<Family> = if families.is_empty() {
                (2..=5).map(Family::Dn).chain([Family::E6, Family::E7, Family::E8]).collect()
            } else {
                families.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
            };
            let mut r = Report::new("family");
            for fam in fams {
                let (pl, pm) = family_profile(fam)?;
                let (l, m) = (pl.degree(), pm.degree());
                let (e, f) = profile_pair_ram_degrees(&pl, &pm)?;
                let (sr, ss) = (pl.total_ram_degree(), pm.total_ram_degree());
                let holds = sr == 2 * l - 2 && ss == 2 * m - 2 && e == 2 * m - 2 && f == 2 * l - 2;
                r.check_failed |= !holds;
                r.lines.push(json!({
                    "family": fam.to_string(),
                    "degree": l,
                    "pi_l": types_json(&pl),
                    "pi_m": types_json(&pm),
                    "sum_r": sr,
                    "sum_s": ss,
                    "sum_e": e,
                    "sum_f": f,
                    "identities_hold": holds,
                }));
            }
            Ok(r)
        }
        Command::Search {
            case,
            x_reading,
            no_prune,
            g1g2_transitive_only,
            n,
        } => match case {
            SearchTarget::E6 | SearchTarget::E7 | SearchTarget::E8 => {
                let id = match case {
                    SearchTarget::E6 => CaseId::E6,
                    SearchTarget::E7 => CaseId::E7,
                    _ => CaseId::E8,
                };
                if *no_prune && id != CaseId::E6 {
                    return Err(Error::InvalidArgument("--no-prune is only available for e6".into()));
                }
                let opts = RunOptions {
                    workers: cli.workers as usize,
                    prune: !no_prune,
                    g1_g2_transitive_only: *g1g2_transitive_only,
                    ..Default::default()
                };
                let (sols, stats) = run_case(id, opts)?;
                let mut r = Report::new(format!("search {id}"));
                for s in &sols {
                    r.lines.push(serde_json::to_value(s.to_record()).expect("serializable"));
                }
                r.extra.insert("stats".into(), serde_json::to_value(stats).expect("serializable"));
                Ok(r)
            }
            SearchTarget::S10 => {
                let readings: &[XReading] = match x_reading {
                    XArg::Two => &[XReading::Two],
                    XArg::Trivial => &[XReading::Trivial],
                    XArg::Both => &XReading::ALL,
                };
                let mut r = Report::new("search s10");
                let mut per = Vec::new();
                for &reading in readings {
                    let found = s10_search(reading);
                    for t in &found {
                        r.lines.push(json!({
                            "x_reading": reading.to_string(),
                            "h": cycles(&t.iter().collect::<Vec<_>>()),
                        }));
                    }
                    per.push(json!({
                        "x_reading": reading.to_string(),
                        "transitive": found.len(),
                        "without_transitivity": s10_count(reading, false),
                    }));
                }
                r.extra.insert("readings".into(), Value::Array(per));
                Ok(r)
            }
            SearchTarget::Dn => {
                let mut r = Report::new(format!("search dn:{n}"));
                for [g1, g2, g3, g4] in dn_witness_search(*n)? {
                    let split = verify_dn_partition(&g1, &g2, &g3, &g4, *n)?;
                    r.check_failed |= split.is_none();
                    let one = |v: &[usize]| v.iter().map(|x| x + 1).collect::<Vec<_>>();
                    r.lines.push(json!({
                        "n": n,
                        "g": cycles(&[&g1, &g2, &g3, &g4]),
                        "y": split.as_ref().map(|s| one(&s.y)),
                        "z": split.as_ref().map(|s| one(&s.z)),
                    }));
                }
                Ok(r)
            }
        },
        Command::Lattes { what } => match what {
            LattesCommand::Profile { n } => {
                let ns: Vec<u32> = if n.is_empty() { (2..=8).collect() } else { n.clone() };
                let mut r = Report::new("lattes profile");
                for n in ns {
                    let p = lattes_profile(n)?;
                    let total = p.total_ram_degree();
                    r.lines.push(json!({
                        "n": n,
                        "degree": p.degree(),
                        "branch_types": types_json(&p),
                        "ram_total": total,
                        "riemann_hurwitz": total == 2 * n * n - 2,
                    }));
                }
                Ok(r)
            }
            LattesCommand::Sharpness { l, m } => {
                let pairs: Vec<(u32, u32)> = match (l, m) {
                    (Some(l), Some(m)) => vec![(*l, *m)],
                    (None, None) => (3..=7).flat_map(|l| (l + 1..=7).map(move |m| (l, m))).collect(),
                    _ => return Err(Error::InvalidArgument("give both l and m, or neither".into())),
                };
                let mut r = Report::new("lattes sharpness");
                for (l, m) in pairs {
                    if l < 3 || m < 3 {
                        return Err(Error::InvalidArgument(format!("need l, m >= 3, got ({l}, {m})")));
                    }
                    let fails = sharpness_failures(l, m, 1);
                    r.lines.push(json!({
                        "l": l,
                        "m": m,
                        "holds": fails.is_empty(),
                        "counterexample": fails.first().map(|(p, q)| json!({
                            "p": [p.a, p.b],
                            "q": [q.a, q.b],
                            "modulus": p.modulus,
                        })),
                    }));
                }
                Ok(r)
            }
        },
        Command::VerifySolution { input } => {
            let reader: Box<dyn BufRead> = match input {
                Some(path) => Box::new(BufReader::new(
                    File::open(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?,
                )),
                None => Box::new(BufReader::new(io::stdin())),
            };
            let mut r = Report::new("verify-solution");
            let mut skipped = 0;
            for line in reader.lines() {
                let line = line.map_err(|e| Error::InvalidArgument(format!("reading input: {e}")))?;
                if line.trim().is_empty() {
                    continue;
                }
                let Ok(record) = serde_json::from_str::<SolutionRecord>(&line) else {
                    skipped += 1;
                    continue;
                };
                let report = verify_solution(&record)?;
                r.check_failed |= !report.ok();
                r.lines.push(json!({
                    "case": record.case,
                    "g1": record.g1,
                    "ok": report.ok(),
                    "failures": report.failures,
                }));
            }
            r.extra.insert("skipped_lines".into(), json!(skipped));
            Ok(r)
        }
    }
}

/// Parses `args` (including the program name), runs, and writes to `stdout`
/// unless `--out` is given. Returns the exit status.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let start = Instant::now();
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let count = report.lines.len() as u64;
    let mut summary = serde_json::Map::new();
    summary.insert("command".into(), json!(report.command));
    summary.insert("count".into(), json!(count));
    summary.insert("elapsed_seconds".into(), json!(start.elapsed().as_secs_f64()));
    if let Some(k) = cli.expect {
        summary.insert("expected".into(), json!(k));
    }
    summary.extend(report.extra);

    let mut file;
    let sink: &mut dyn Write = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(f) => {
                file = io::BufWriter::new(f);
                &mut file
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: {}: {e}", path.display());
                return 1;
            }
        },
        None => stdout,
    };
    let written = report
        .lines
        .iter()
        .chain(std::iter::once(&Value::Object(summary)))
        .try_for_each(|v| writeln!(sink, "{v}"))
        .and_then(|_| sink.flush());
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: writing output: {e}");
        return 1;
    }
    if let Some(k) = cli.expect {
        if k != count {
            let _ = writeln!(stderr, "expected {k} results, got {count}");
            return 2;
        }
    }
    if report.check_failed {
        let _ = writeln!(stderr, "a check failed; see the result lines");
        return 2;
    }
    0
}

/// Entry point for the binary.
pub fn main_with_env() -> i32 {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    run_with(std::env::args_os(), &mut out, &mut io::stderr())
}
