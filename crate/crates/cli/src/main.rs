use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand};
use hnfield::catalog::{
    claims_table, claims_to_json, fixture, verify_paper, ClaimStatus, Fixture, PointSet,
    VerifyOptions,
};
use hnfield::chromatic::audit::{check_certificate, UnsatCheck};
use hnfield::chromatic::{chi_exact_with, structure_probe, ChiOutcome, SearchOptions};
use hnfield::exact::FieldDesc;
use hnfield::geometry::{build_fp_graph, DiagForm, UGraph};
use hnfield::numtheory::scan_embedding_primes;
use hnfield::reduction::{color_oracle_text, OracleId};
use hnfield::Error;

#[derive(Parser)]
#[command(
    name = "hnfield",
    version,
    about = "Unit-distance graphs over finite and number fields"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Chromatic number of the unit-distance graph on F_p^d.
    ChiFp {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: Option<usize>,
        /// Diagonal coefficients, e.g. `1,-1`; Euclidean when omitted.
        #[arg(long)]
        form: Option<String>,
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        dimacs: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Chromatic number of the unit-distance graph on an explicit point set.
    ChiPoints {
        /// `q`, `quad:M` or `biquad:M1,M2`.
        #[arg(long)]
        field: String,
        /// One point per line, coordinates separated by `;`, `#` comments.
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        form: Option<String>,
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Color a point with one of the built-in oracles.
    Color {
        /// q2, sqrt2, sqrt3, sqrt7, sqrtneg5, biquad (or the full name).
        #[arg(long)]
        oracle: String,
        /// Coordinates separated by `;`.
        #[arg(long)]
        point: String,
        #[arg(long)]
        verbose: bool,
    },
    /// Run every claim and report PASS/FAIL/SKIPPED.
    VerifyPaper {
        #[arg(long)]
        json: Option<PathBuf>,
        /// Seconds allowed for the chi(F_11^2) search.
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Random pairs per oracle and per valuation.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Odd primes up to a limit filtered by residue class mod 4 and by
    /// required quadratic residues.
    ScanPrimes {
        #[arg(long)]
        mod4: Option<u64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        qr: Vec<i64>,
        #[arg(long)]
        limit: u64,
    },
    /// Write a graph in DIMACS edge format.
    ExportDimacs {
        #[command(flatten)]
        source: GraphSource,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structure report for a graph, or an audit of a certificate against it.
    Probe {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        check_certificate: Option<PathBuf>,
        /// Re-run the exhaustive search behind a certificate's lower bound.
        #[arg(long)]
        rerun_unsat: bool,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Seconds before the search gives up.
    #[arg(long)]
    time_budget: Option<f64>,
    #[arg(long)]
    node_budget: Option<u64>,
    /// Do not precolor a maximal clique.
    #[arg(long)]
    no_fix_clique: bool,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            node_budget: self.node_budget,
            time_budget: self.time_budget.map(Duration::from_secs_f64),
            threads: self.threads.max(1),
            fix_clique: !self.no_fix_clique,
        }
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("src").required(true).multiple(false)))]
struct GraphSource {
    /// Build Γ(F_p^d).
    #[arg(long, group = "src")]
    fp: Option<u64>,
    #[arg(long, requires = "fp")]
    d: Option<usize>,
    #[arg(long)]
    form: Option<String>,
    /// Read a DIMACS file.
    #[arg(long, group = "src")]
    dimacs: Option<PathBuf>,
    /// A points file; needs --field.
    #[arg(long, group = "src", requires = "field")]
    points: Option<PathBuf>,
    #[arg(long)]
    field: Option<String>,
    /// A catalog fixture with points, e.g. moser_spindle.
    #[arg(long, group = "src")]
    fixture: Option<String>,
}

enum Failure {
    /// A check ran and came out false.
    Verification(String),
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => Failure::Budget(e.to_string()),
            Error::Certificate(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_err(path, e))
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| io_err(path, e))
}

fn parse_form(form: Option<&str>, d: Option<usize>) -> Result<DiagForm, Failure> {
    let form = match form {
        Some(f) => f.parse::<DiagForm>()?,
        None => DiagForm::euclidean(d.unwrap_or(2)),
    };
    if let Some(d) = d {
        if d != form.dim() {
            return Err(Failure::Usage(format!(
                "--d {d} does not match a form with {} coefficients",
                form.dim()
            )));
        }
    }
    Ok(form)
}

fn point_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect()
}

fn points_graph(field: &str, path: &Path, form: Option<&str>) -> Result<UGraph, Failure> {
    let field: FieldDesc = field.parse()?;
    let text = read(path)?;
    let points = PointSet::parse(field, &point_lines(&text))?;
    if points.is_empty() {
        return Err(Failure::Usage(format!("{}: no points", path.display())));
    }
    let d = match &points {
        PointSet::Rational(p) => p[0].dim(),
        PointSet::Quad(p) => p[0].dim(),
        PointSet::BiQuad(p) => p[0].dim(),
    };
    let form = parse_form(form, Some(d))?;
    Ok(points.graph(&form)?)
}

fn load_graph(src: &GraphSource) -> Result<UGraph, Failure> {
    if let Some(p) = src.fp {
        return Ok(build_fp_graph(p, &parse_form(src.form.as_deref(), src.d)?)?);
    }
    if let Some(path) = &src.dimacs {
        return Ok(UGraph::from_dimacs(&read(path)?)?);
    }
    if let Some(path) = &src.points {
        let field = src.field.as_deref().expect("clap enforces --field");
        return points_graph(field, path, src.form.as_deref());
    }
    if let Some(name) = &src.fixture {
        return match fixture(name)? {
            Fixture::Points(f) => Ok(f.graph()?),
            Fixture::Sqrt2Quotient(q) => Ok(q.graph),
            _ => Err(Failure::Usage(format!("fixture {name} has no graph"))),
        };
    }
    Err(Failure::Usage("no graph source given".into()))
}

fn solve(g: &UGraph, search: &SearchArgs, certificate: Option<&Path>) -> Outcome {
    match chi_exact_with(g, &search.options()) {
        ChiOutcome::Exact(cert) => {
            println!("chi = {}", cert.chi);
            if let Some(path) = certificate {
                write(path, &cert.to_json())?;
            }
            Ok(())
        }
        ChiOutcome::Bounds { lo, hi, .. } => {
            println!("{lo} <= chi <= {hi}");
            Err(Failure::Budget("search budget exhausted".into()))
        }
    }
}

/// Writes to stdout, stopping quietly if the reader went away.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::ChiFp {
            p,
            d,
            form,
            certificate,
            dimacs,
            search,
        } => {
            let g = build_fp_graph(p, &parse_form(form.as_deref(), d)?)?;
            if let Some(path) = dimacs {
                write(&path, &g.to_dimacs())?;
            }
            solve(&g, &search, certificate.as_deref())
        }
        Cmd::ChiPoints {
            field,
            points,
            form,
            certificate,
            search,
        } => {
            let g = points_graph(&field, &points, form.as_deref())?;
            println!("n = {}, m = {}", g.n(), g.m());
            solve(&g, &search, certificate.as_deref())
        }
        Cmd::Color {
            oracle,
            point,
            verbose,
        } => {
            let id: OracleId = oracle.parse()?;
            let t = color_oracle_text(id, &point)?;
            println!("{}", t.color);
            if verbose {
                println!("oracle: {}", t.oracle);
                println!("representative: {}", t.representative);
                println!("shifted: {}", t.shifted);
                println!("residue: ({})", t.residue.join(", "));
                println!("residue color: {}", t.color);
            }
            Ok(())
        }
        Cmd::VerifyPaper {
            json,
            budget,
            threads,
            samples,
        } => {
            let opts = VerifyOptions {
                time_budget: budget.map(Duration::from_secs_f64),
                threads,
                samples,
                ..VerifyOptions::default()
            };
            let claims = verify_paper(&opts);
            print!("{}", claims_table(&claims));
            if let Some(path) = json {
                write(&path, &claims_to_json(&claims))?;
            }
            let failed: Vec<&str> = claims
                .iter()
                .filter(|c| c.status == ClaimStatus::Fail)
                .map(|c| c.id)
                .collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "failed: {}",
                    failed.join(", ")
                )))
            }
        }
        Cmd::ScanPrimes { mod4, qr, limit } => {
            if !matches!(mod4, None | Some(1) | Some(3)) {
                return Err(Failure::Usage("--mod4 must be 1 or 3".into()));
            }
            for r in scan_embedding_primes(false, &qr, limit) {
                if mod4.is_none_or(|m| r.prime % 4 == m) {
                    println!("{}", r.prime);
                }
            }
            Ok(())
        }
        Cmd::ExportDimacs { source, out } => {
            let g = load_graph(&source)?;
            match out {
                Some(path) => write(&path, &g.to_dimacs()),
                None => {
                    emit(&g.to_dimacs());
                    Ok(())
                }
            }
        }
        Cmd::Probe {
            source,
            check_certificate: cert,
            rerun_unsat,
        } => {
            let g = load_graph(&source)?;
            match cert {
                None => {
                    let report = structure_probe(&g);
                    emit(&format!(
                        "{}\n",
                        serde_json::to_string_pretty(&report).expect("serializes")
                    ));
                    Ok(())
                }
                Some(path) => {
                    let unsat = if rerun_unsat {
                        UnsatCheck::Rerun {
                            node_budget: u64::MAX,
                        }
                    } else {
                        UnsatCheck::Skip
                    };
                    let report = check_certificate(&g, &read(&path)?, unsat)?;
                    emit(&format!(
                        "{}\n",
                        serde_json::to_string_pretty(&report).expect("serializes")
                    ));
                    if report.unsat_confirmed == Some(false) {
                        return Err(Failure::Verification("exhaustive claim refuted".into()));
                    }
                    println!("certificate OK");
                    Ok(())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Verification(m) => (1, m),
                Failure::Usage(m) => (2, m),
                Failure::Budget(m) => (3, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
