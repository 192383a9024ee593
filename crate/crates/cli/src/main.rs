//! Command-line front end: family tables, object enumeration dumps,
//! operator/grammar expansions and the cross-check runner.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 check failure, 2 usage or parse error.

use std::io::Write;
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use stirperm::families;
use stirperm::grammar::Grammar;
use stirperm::identities::{self, CheckReport};
use stirperm::poly::{var, Monomial, Polynomial};
use stirperm::signed::{self, cycle_stats};
use stirperm::stirling::{self, MultisetSpec, StatRecord};
use stirperm::tableaux;
use stirperm::weyl;

/// Exact combinatorics of Stirling permutations, second-order Eulerian
/// polynomials, signed permutations and Young tableaux.
#[derive(Parser)]
#[command(name = "stirperm", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a polynomial (or integer) family, one row per index
    Seq {
        family: Family,
        /// Largest index to print
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Stream combinatorial objects, one per line
    Enumerate {
        object: ObjectKind,
        /// Object size (letters, rank, cells or ground-set size)
        #[arg(long)]
        n: Option<u32>,
        /// Explicit multiplicity list for Stirling words, e.g. 1,2,2
        #[arg(long, value_delimiter = ',')]
        mult: Option<Vec<u16>>,
        /// Keep only tableau shapes with at most this many columns
        #[arg(long)]
        max_columns: Option<usize>,
        /// Enumerate plain permutations instead of signed ones
        #[arg(long)]
        no_negatives: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print an operator or grammar expansion
    Expand {
        #[command(subcommand)]
        kind: ExpandKind,
    },
    /// Parse a rule set and print its canonical form
    Grammar {
        /// Semicolon-separated rules, e.g. "a->a*b; b->a*b"
        #[arg(long)]
        rules: String,
    },
    /// Run registered cross-checks, streaming one JSON report per line
    Verify {
        /// Check name, or "all"
        #[arg(long, default_value = "all")]
        check: String,
        /// Override the default bound
        #[arg(long)]
        n_max: Option<u32>,
        /// Seed for the randomized checks
        #[arg(long)]
        seed: Option<u64>,
        /// Number of checks to run in parallel
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Stop after the first failure
        #[arg(long)]
        fail_fast: bool,
        /// List the registered checks and exit
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum ExpandKind {
    /// Expansion of (cD)^n applied to f or c
    Cd {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CdTargetArg::F)]
        target: CdTargetArg,
    },
    /// Iterated grammar derivative of a start expression
    Grammar {
        #[arg(long)]
        rules: String,
        #[arg(long)]
        start: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CdTargetArg {
    F,
    C,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Eulerian polynomials A_n(x)
    Eulerian,
    /// Second-order Eulerian polynomials C_n(x)
    SecondEulerian,
    /// Trivariate ascent/descent/plateau polynomials C_n(x,y,z)
    Trivariate,
    /// Plateau/descent/ascent polynomials E_n(x,y,z) over restricted words
    EPoly,
    /// Type B Eulerian polynomials B_n(x)
    TypeB,
    /// (p,q) type B Eulerian polynomials B_n(x,p,q)
    Bpq,
    /// (p,q) Eulerian polynomials A_n(x,p,q)
    Apq,
    /// Derangement polynomials d_n(x)
    DerangementA,
    /// Type B derangement polynomials d_n^B(x)
    DerangementB,
    /// Ascent-plateau polynomials M_n(x)
    AscentPlateau,
    /// Left ascent-plateau polynomials W_n(x)
    LeftAscentPlateau,
    /// Series-reduced labeled tree counts a_n = 2^n C_n(1/2)
    SeriesReduced,
    /// Change-of-grammar polynomials in u, v, w
    Gamma,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjectKind {
    /// Stirling permutations of a multiset (default: two of each letter)
    Stirling,
    /// Restricted Stirling permutations over {1,2,2,...,n,n}
    Restricted,
    /// Signed permutations
    Signed,
    /// Standard Young tableaux
    Syt,
    /// Ordered weak set partitions from box sorting
    Owp,
    /// Integer partitions
    Partitions,
}

struct AppError(String);

impl<E: std::fmt::Display> From<E> for AppError {
    fn from(e: E) -> AppError {
        AppError(e.to_string())
    }
}

type AppResult<T> = Result<T, AppError>;

/// Writes one data line; a closed pipe on the reader side ends the stream
/// cleanly instead of erroring.
fn write_line(out: &mut impl Write, line: &str) -> AppResult<bool> {
    match writeln!(out, "{line}") {
        Ok(()) => Ok(true),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(false),
        Err(e) => Err(AppError(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(AppError(msg)) => {
            eprintln!("stirperm: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> AppResult<ExitCode> {
    match command {
        Command::Seq {
            family,
            n_max,
            format,
        } => cmd_seq(family, n_max, format),
        Command::Enumerate {
            object,
            n,
            mult,
            max_columns,
            no_negatives,
            format,
        } => cmd_enumerate(object, n, mult, max_columns, no_negatives, format),
        Command::Expand { kind } => cmd_expand(kind),
        Command::Grammar { rules } => {
            println!("{}", Grammar::parse(&rules)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            check,
            n_max,
            seed,
            jobs,
            fail_fast,
            list,
        } => cmd_verify(&check, n_max, seed, jobs, fail_fast, list),
    }
}

// ---------------------------------------------------------------------------
// seq
// ---------------------------------------------------------------------------

/// Cap for the recurrence-built families, which have no enumeration bound of
/// their own.
const MAX_SEQ_N: u32 = 30;

enum Row {
    Poly(Polynomial),
    Int(BigInt),
}

fn family_row(family: Family, n: u32) -> AppResult<Row> {
    let n = n as usize;
    Ok(match family {
        Family::Eulerian => Row::Poly(families::eulerian_poly(n)),
        Family::SecondEulerian => Row::Poly(families::second_eulerian_poly(n)),
        Family::Trivariate => Row::Poly(families::trivariate_second_eulerian(n)),
        Family::EPoly => Row::Poly(families::e_poly(n)),
        Family::TypeB => Row::Poly(signed::type_b_poly(n)?),
        Family::Bpq => Row::Poly(signed::bpq_poly(n)?),
        Family::Apq => Row::Poly(signed::apq_poly(n)?),
        Family::DerangementA => Row::Poly(signed::derangement_poly(n, false)?),
        Family::DerangementB => Row::Poly(signed::derangement_poly(n, true)?),
        Family::AscentPlateau => Row::Poly(stirling::gen_poly(
            &MultisetSpec::classical(n),
            &[(stirling::Stat::Ap, var("x"))],
        )?),
        Family::LeftAscentPlateau => Row::Poly(stirling::gen_poly(
            &MultisetSpec::classical(n),
            &[(stirling::Stat::Lap, var("x"))],
        )?),
        Family::SeriesReduced => Row::Int(families::series_reduced_count(n)),
        Family::Gamma => {
            let h = Grammar::parse("w->v*w; u->3*w; v->2*u*w").expect("static rules");
            Row::Poly(h.derivative_n(&Polynomial::var(var("w")), n - 1))
        }
    })
}

/// First defined index of a family (`E_n` and the u,v,w family start at 1).
fn family_min_n(family: Family) -> u32 {
    match family {
        Family::EPoly | Family::Gamma => 1,
        _ => 0,
    }
}

/// Families whose rows are polynomials in the single variable x.
fn family_is_univariate(family: Family) -> bool {
    matches!(
        family,
        Family::Eulerian
            | Family::SecondEulerian
            | Family::TypeB
            | Family::DerangementA
            | Family::DerangementB
            | Family::AscentPlateau
            | Family::LeftAscentPlateau
    )
}

fn univariate_csv_coeffs(p: &Polynomial) -> Vec<BigInt> {
    let deg = p.degree().unwrap_or(0);
    (0..=deg)
        .map(|d| p.coeff(&Monomial::from_exps([(var("x"), d as u32)])))
        .collect()
}

fn cmd_seq(family: Family, n_max: u32, format: Format) -> AppResult<ExitCode> {
    if n_max > MAX_SEQ_N {
        return Err(format!("--n-max {n_max} exceeds the family cap {MAX_SEQ_N}").into());
    }
    if format == Format::Csv && !(family_is_univariate(family) || family == Family::SeriesReduced) {
        return Err(AppError(
            "csv output is only defined for univariate families".into(),
        ));
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for n in family_min_n(family)..=n_max {
        let row = family_row(family, n)?;
        let line: String = match (&row, format) {
            (Row::Poly(p), Format::Text) => format!("{n}\t{p}"),
            (Row::Int(v), Format::Text) => format!("{n}\t{v}"),
            (Row::Poly(p), Format::Json) => {
                serde_json::json!({ "n": n, "poly": p.to_json() }).to_string()
            }
            (Row::Int(v), Format::Json) => {
                serde_json::json!({ "n": n, "value": v.to_string() }).to_string()
            }
            (Row::Poly(p), Format::Csv) => {
                let mut cells = vec![n.to_string()];
                cells.extend(univariate_csv_coeffs(p).iter().map(|c| c.to_string()));
                cells.join(",")
            }
            (Row::Int(v), Format::Csv) => format!("{n},{v}"),
        };
        if !write_line(&mut out, &line)? {
            break;
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

fn require_n(n: Option<u32>) -> AppResult<usize> {
    n.map(|v| v as usize)
        .ok_or_else(|| AppError("--n is required for this object".into()))
}

fn cmd_enumerate(
    object: ObjectKind,
    n: Option<u32>,
    mult: Option<Vec<u16>>,
    max_columns: Option<usize>,
    no_negatives: bool,
    format: Format,
) -> AppResult<ExitCode> {
    if format == Format::Csv {
        return Err(AppError(
            "csv output is not defined for object enumeration".into(),
        ));
    }
    let json = format == Format::Json;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();

    match object {
        ObjectKind::Stirling | ObjectKind::Restricted => {
            let spec = match (object, mult, n) {
                (ObjectKind::Restricted, None, n) => MultisetSpec::restricted(require_n(n)?),
                (_, Some(m), None) => MultisetSpec::new(m),
                (_, None, n) => MultisetSpec::classical(require_n(n)?),
                (_, Some(_), Some(_)) => {
                    return Err(AppError("--n and --mult are mutually exclusive".into()))
                }
            };
            for w in stirling::enumerate(&spec)? {
                let line = if json {
                    let rec = StatRecord::compute_full(w.word());
                    serde_json::json!({ "word": w.word(), "stats": rec.to_json() }).to_string()
                } else {
                    w.to_string()
                };
                if !write_line(&mut out, &line)? {
                    break;
                }
            }
        }
        ObjectKind::Signed => {
            for p in signed::enumerate(require_n(n)?, !no_negatives)? {
                let line = if json {
                    let s = cycle_stats(&p);
                    serde_json::json!({
                        "perm": p.vals(),
                        "stats": {
                            "exc": s.exc, "aexc": s.aexc, "fix": s.fix,
                            "single": s.single, "neg": s.neg, "cyc": s.cyc,
                        }
                    })
                    .to_string()
                } else {
                    p.to_string()
                };
                if !write_line(&mut out, &line)? {
                    break;
                }
            }
        }
        ObjectKind::Syt => {
            for t in tableaux::enumerate_syt(require_n(n)?, max_columns)? {
                let line = if json {
                    serde_json::json!({ "shape": t.shape().parts(), "rows": t.to_json() })
                        .to_string()
                } else {
                    format!("{t}\n")
                };
                if !write_line(&mut out, &line)? {
                    break;
                }
            }
        }
        ObjectKind::Owp => {
            for p in weyl::enumerate_owp(require_n(n)?)? {
                let line = if json {
                    serde_json::json!({
                        "blocks": p.to_json(),
                        "weight": p.weight().to_string(),
                    })
                    .to_string()
                } else {
                    p.to_json().to_string()
                };
                if !write_line(&mut out, &line)? {
                    break;
                }
            }
        }
        ObjectKind::Partitions => {
            for p in tableaux::partitions(require_n(n)?)? {
                let line = if json {
                    serde_json::json!({ "parts": p.parts() }).to_string()
                } else {
                    p.to_string()
                };
                if !write_line(&mut out, &line)? {
                    break;
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// expand
// ---------------------------------------------------------------------------

/// Bound on iterated grammar derivatives from the command line.
const MAX_EXPAND_N: usize = 12;

fn cmd_expand(kind: ExpandKind) -> AppResult<ExitCode> {
    let poly = match kind {
        ExpandKind::Cd { n, target } => {
            let target = match target {
                CdTargetArg::F => weyl::CdTarget::F,
                CdTargetArg::C => weyl::CdTarget::C,
            };
            weyl::cd_expand(n, target)?
        }
        ExpandKind::Grammar { rules, start, n } => {
            if n > MAX_EXPAND_N {
                return Err(format!("--n {n} exceeds the expansion cap {MAX_EXPAND_N}").into());
            }
            let g = Grammar::parse(&rules)?;
            let start = Polynomial::parse(&start)?;
            g.derivative_n(&start, n)
        }
    };
    println!("{poly}");
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn print_report(report: &CheckReport, sink: &Mutex<()>) {
    let _guard = sink.lock().unwrap();
    println!("{}", report.to_json());
}

fn cmd_verify(
    check: &str,
    n_max: Option<u32>,
    seed: Option<u64>,
    jobs: usize,
    fail_fast: bool,
    list: bool,
) -> AppResult<ExitCode> {
    if list {
        for def in identities::registry() {
            println!("{}\tn<={}\t{}", def.name, def.default_max_n, def.claim);
        }
        return Ok(ExitCode::SUCCESS);
    }
    if check != "all" {
        let report = identities::run_check(check, n_max, seed)?;
        println!("{}", report.to_json());
        return Ok(if report.passed {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }

    let defs = identities::registry();
    let next = AtomicUsize::new(0);
    let any_failed = AtomicBool::new(false);
    let sink = Mutex::new(());
    let workers = jobs.clamp(1, defs.len());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                if fail_fast && any_failed.load(Ordering::SeqCst) {
                    break;
                }
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(def) = defs.get(i) else { break };
                let report = identities::run_check(def.name, n_max, seed).expect("registered name");
                if !report.passed {
                    any_failed.store(true, Ordering::SeqCst);
                    eprintln!(
                        "check {} failed: {}",
                        report.name,
                        report.witness.as_deref().unwrap_or("no witness")
                    );
                }
                print_report(&report, &sink);
            });
        }
    });
    Ok(if any_failed.load(Ordering::SeqCst) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
