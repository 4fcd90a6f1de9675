mod config;

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rgdlin::interval::{algebraic_interval, cone_membership, divergence_scan, geometric_interval, ConeFailure};
use rgdlin::rgd::{
    blueprint_444, blueprint_universal, check_nc, check_not_linear, type444_certificate, universal_certificate,
    verify_certificate, CertificateVerdict, LinearityVerdict, NonLinCertificate, TableRecord,
};
use rgdlin::{ConeVerdict, CoxeterSystem, Error, Execution, IntervalResult, MemberStatus, Root, RootBasis};

use config::{Records, RunConfig};

const FORMAT_VERSION: u32 = 1;

const EXIT_CONFIG: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "rgdlin", version, about = "Geometric vs. algebraic root intervals and non-linearity witnesses")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Geometric and algebraic intervals of one prenilpotent pair.
    Interval {
        /// First root expression, e.g. "- e : r".
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        /// Second root expression, e.g. "s : t".
        #[arg(allow_hyphen_values = true)]
        beta: String,
    },
    /// Every prenilpotent pair within the depth window whose intervals differ.
    Scan {
        /// Run the scan on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
    /// Blueprint table, linearity verdicts, (nc) and certificates for a family.
    Witness {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Comma-separated family parameters with nontrivial commutators.
        #[arg(long, default_value = "", value_delimiter = ',')]
        k: Vec<String>,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Check a JSON non-linearity certificate.
    Certificate { path: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    Universal,
    Type444,
}

#[derive(Serialize)]
struct Header<'a> {
    format: &'static str,
    version: u32,
    command: &'a str,
    matrix: String,
    bases: Vec<String>,
    radius: usize,
    length: usize,
    depth: usize,
}

#[derive(Serialize)]
struct MemberRecord {
    root: String,
    status: MemberStatus,
}

#[derive(Serialize)]
struct IntervalRecord {
    record: &'static str,
    kind: &'static str,
    basis: Option<String>,
    alpha: String,
    beta: String,
    members: Vec<MemberRecord>,
}

#[derive(Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
enum MissingReason {
    Inconsistent { coordinate: String },
    NegativeCoefficient { a: String, b: String },
}

#[derive(Serialize)]
struct Missing {
    root: String,
    #[serde(flatten)]
    reason: MissingReason,
}

#[derive(Serialize)]
struct ComparisonRecord {
    record: &'static str,
    basis: String,
    alpha: String,
    beta: String,
    equal: bool,
    strict_inclusion: bool,
    missing: Vec<Missing>,
}

#[derive(Serialize)]
struct DivergenceRecord {
    record: &'static str,
    basis: String,
    alpha: String,
    beta: String,
    geometric: Vec<MemberRecord>,
    missing: Vec<Missing>,
}

#[derive(Serialize)]
struct SkipRecord {
    record: &'static str,
    basis: String,
    alpha: String,
    beta: String,
    reason: String,
}

#[derive(Serialize)]
struct ScanSummary {
    record: &'static str,
    basis: String,
    pairs: usize,
    divergences: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct TableRow<'a> {
    record: &'static str,
    #[serde(flatten)]
    row: &'a TableRecord,
}

#[derive(Serialize)]
struct VerdictRecord {
    record: &'static str,
    basis: String,
    not_linear: bool,
    alpha: Option<String>,
    beta: Option<String>,
    witness: Option<String>,
    reason: Option<MissingReason>,
}

#[derive(Serialize)]
struct CertificateRecord<'a> {
    record: &'static str,
    n: Option<usize>,
    certificate: &'a NonLinCertificate,
    accepted: bool,
    rejection: Option<String>,
    bounded_checks: Vec<String>,
}

#[derive(Serialize)]
struct Conclusion {
    record: &'static str,
    nc: bool,
    verdict: &'static str,
}

fn reason(sys: &CoxeterSystem, f: &ConeFailure) -> MissingReason {
    match f {
        ConeFailure::Inconsistent { coordinate } => MissingReason::Inconsistent {
            coordinate: sys.matrix().label(*coordinate).to_string(),
        },
        ConeFailure::NegativeCoefficient { a, b } => MissingReason::NegativeCoefficient {
            a: a.to_string(),
            b: b.to_string(),
        },
    }
}

fn members(sys: &CoxeterSystem, res: &IntervalResult) -> Vec<MemberRecord> {
    res.members
        .iter()
        .map(|m| MemberRecord {
            root: sys.format_root(&m.root),
            status: m.status,
        })
        .collect()
}

fn certificate_record(n: Option<usize>, cert: &NonLinCertificate, v: CertificateVerdict) -> CertificateRecord<'_> {
    let (accepted, rejection, bounded_checks) = match v {
        CertificateVerdict::Accepted { bounded_checks } => (true, None, bounded_checks),
        CertificateVerdict::Rejected(why) => (false, Some(why.to_string()), Vec::new()),
    };
    CertificateRecord {
        record: "certificate",
        n,
        certificate: cert,
        accepted,
        rejection,
        bounded_checks,
    }
}

struct Session {
    sys: CoxeterSystem,
    bases: Vec<RootBasis>,
    config: RunConfig,
    records: Records,
}

impl Session {
    fn open(config: RunConfig, command: &str) -> anyhow::Result<Self> {
        let matrix = config.load_matrix()?;
        let bases = config.load_bases(&matrix)?;
        for b in &bases {
            rgdlin::interval::require_basis(&CoxeterSystem::new(matrix.clone()), b)?;
        }
        let header = Header {
            format: "rgdlin-records",
            version: FORMAT_VERSION,
            command,
            matrix: matrix.to_file_string().trim_end().replace('\n', "; "),
            bases: bases.iter().map(|b| b.kind().to_string()).collect(),
            radius: config.radius,
            length: config.length,
            depth: config.depth,
        };
        let records = Records::new(config.sink().context("opening output")?, &header)?;
        Ok(Session {
            sys: CoxeterSystem::new(matrix),
            bases,
            config,
            records,
        })
    }

    fn interval(&mut self, alpha: &str, beta: &str) -> anyhow::Result<()> {
        let sys = &self.sys;
        let (a, b) = (sys.parse_root(alpha)?, sys.parse_root(beta)?);
        let bounds = self.config.bounds();
        let geo = geometric_interval(sys, &a, &b, &bounds)?;
        let (fa, fb) = (sys.format_root(&a), sys.format_root(&b));
        self.records.emit(&IntervalRecord {
            record: "interval",
            kind: "geometric",
            basis: None,
            alpha: fa.clone(),
            beta: fb.clone(),
            members: members(sys, &geo),
        })?;
        for basis in &self.bases {
            let lin = algebraic_interval(sys, basis, &a, &b, &bounds)?;
            let missing = self.missing(basis, &geo, &a, &b)?;
            self.records.emit(&IntervalRecord {
                record: "interval",
                kind: "algebraic",
                basis: Some(basis.kind().to_string()),
                alpha: fa.clone(),
                beta: fb.clone(),
                members: members(sys, &lin),
            })?;
            self.records.emit(&ComparisonRecord {
                record: "comparison",
                basis: basis.kind().to_string(),
                alpha: fa.clone(),
                beta: fb.clone(),
                equal: missing.is_empty(),
                strict_inclusion: !missing.is_empty(),
                missing,
            })?;
        }
        Ok(())
    }

    fn missing(&self, basis: &RootBasis, geo: &IntervalResult, a: &Root, b: &Root) -> anyhow::Result<Vec<Missing>> {
        let mut out = Vec::new();
        if a == b {
            return Ok(out);
        }
        for g in geo.roots() {
            if let ConeVerdict::Outside(f) = cone_membership(&self.sys, basis, g, a, b)? {
                out.push(Missing {
                    root: self.sys.format_root(g),
                    reason: reason(&self.sys, &f),
                });
            }
        }
        Ok(out)
    }

    fn scan(&mut self, sequential: bool) -> anyhow::Result<()> {
        let sys = &self.sys;
        let exec = if sequential { Execution::Sequential } else { Execution::default() };
        for basis in &self.bases {
            let name = basis.kind().to_string();
            let report = divergence_scan(sys, basis, self.config.length, &self.config.bounds(), exec)?;
            for d in &report.divergences {
                self.records.emit(&DivergenceRecord {
                    record: "divergence",
                    basis: name.clone(),
                    alpha: sys.format_root(d.alpha()),
                    beta: sys.format_root(d.beta()),
                    geometric: members(sys, &d.geometric),
                    missing: d
                        .missing
                        .iter()
                        .map(|(g, f)| Missing {
                            root: sys.format_root(g),
                            reason: reason(sys, f),
                        })
                        .collect(),
                })?;
            }
            for s in &report.skipped {
                self.records.emit(&SkipRecord {
                    record: "skipped",
                    basis: name.clone(),
                    alpha: sys.format_root(&s.alpha),
                    beta: sys.format_root(&s.beta),
                    reason: s.reason.clone(),
                })?;
            }
            self.records.emit(&ScanSummary {
                record: "summary",
                basis: name,
                pairs: report.pairs,
                divergences: report.divergences.len(),
                skipped: report.skipped.len(),
            })?;
        }
        Ok(())
    }

    fn witness(&mut self, family: FamilyArg, k: &[String], n_max: usize) -> anyhow::Result<()> {
        let sys = &self.sys;
        let k: BTreeSet<usize> = k
            .iter()
            .map(|x| x.trim())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad K entry {x:?}"))))
            .collect::<Result<_, _>>()?;
        let table = match family {
            FamilyArg::Universal => blueprint_universal(sys, &k, n_max)?,
            FamilyArg::Type444 => blueprint_444(sys, &k, n_max)?,
        };
        for row in table.records(sys) {
            self.records.emit(&TableRow {
                record: "table",
                row: &row,
            })?;
        }
        for basis in &self.bases {
            let v = check_not_linear(sys, &table, basis)?;
            let record = match v {
                LinearityVerdict::NotLinear {
                    alpha,
                    beta,
                    witness,
                    reason: why,
                } => VerdictRecord {
                    record: "verdict",
                    basis: basis.kind().to_string(),
                    not_linear: true,
                    alpha: Some(sys.format_root(&alpha)),
                    beta: Some(sys.format_root(&beta)),
                    witness: Some(sys.format_root(&witness)),
                    reason: Some(reason(sys, &why)),
                },
                LinearityVerdict::NoWitnessFound => VerdictRecord {
                    record: "verdict",
                    basis: basis.kind().to_string(),
                    not_linear: false,
                    alpha: None,
                    beta: None,
                    witness: None,
                    reason: None,
                },
            };
            self.records.emit(&record)?;
        }
        let nc = check_nc(sys, &table, self.config.length.max(5 * n_max + 2))?;
        let mut certified = false;
        for &n in table.k() {
            let cert = match family {
                FamilyArg::Universal => universal_certificate(sys, n)?,
                FamilyArg::Type444 => type444_certificate(sys, n)?,
            };
            let v = verify_certificate(sys, &cert, self.config.depth)?;
            certified |= v.is_accepted();
            self.records.emit(&certificate_record(Some(n), &cert, v))?;
        }
        let verdict = if certified {
            "not linearizable (certified)"
        } else if nc {
            "linearizable (nc)"
        } else {
            "undecided"
        };
        self.records.emit(&Conclusion {
            record: "conclusion",
            nc,
            verdict,
        })?;
        Ok(())
    }

    fn certificate(&mut self, path: &PathBuf) -> anyhow::Result<()> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let cert: NonLinCertificate =
            serde_json::from_str(&text).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
        let v = verify_certificate(&self.sys, &cert, self.config.depth)?;
        self.records.emit(&certificate_record(None, &cert, v))?;
        Ok(())
    }

    fn finish(self) -> anyhow::Result<()> {
        self.records.finish()?;
        Ok(())
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let name = match &cli.command {
        Command::Interval { .. } => "interval",
        Command::Scan { .. } => "scan",
        Command::Witness { .. } => "witness",
        Command::Certificate { .. } => "certificate",
    };
    let mut session = Session::open(cli.config, name)?;
    match &cli.command {
        Command::Interval { alpha, beta } => session.interval(alpha, beta)?,
        Command::Scan { sequential } => session.scan(*sequential)?,
        Command::Witness { family, k, n_max } => session.witness(*family, k, *n_max)?,
        Command::Certificate { path } => session.certificate(path)?,
    }
    session.finish()
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(e) if e.is_precondition() => EXIT_PRECONDITION,
        Some(
            Error::Parse(_)
            | Error::UnknownLabel(_)
            | Error::InvalidMatrix(_)
            | Error::UnsupportedLabel(_)
            | Error::NotGcm(_)
            | Error::InvalidBasis(_)
            | Error::MalformedCertificate(_)
            | Error::Io(_),
        ) => EXIT_CONFIG,
        _ if err.downcast_ref::<std::io::Error>().is_some() => EXIT_CONFIG,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
