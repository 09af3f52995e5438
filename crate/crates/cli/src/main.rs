//! `onebridge`: command-line front end.
//!
//! Exit codes: 0 when every check passed, 1 when a mathematical check produced
//! a finding (reported as a structured record), 2 for usage errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use onebridge::braid::{FamilyParams, OneBridgeParams};
use onebridge::nlo::{CertificateRecord, Policy};
use onebridge::presentation::KnotGroupPresentation;
use onebridge::props::{self, DEFAULT_CASES, DEFAULT_SEED};
use onebridge::report::{
    AlexanderReport, AuditReport, ClassifyReport, NloReport, PresentReport, Record, SweepRecord,
};

/// Relative output paths resolve against this directory when it is set.
const OUT_DIR_VAR: &str = "ONEBRIDGE_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "onebridge",
    version,
    about = "1-bridge braid knots: presentations, audits and NLO certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Braid word, permutation, knot-ness and claimed framing.
    Classify(ParamArgs),
    /// Knot group presentation and its re-derivation.
    Present(OutArgs<FamilyArgs>),
    /// Abelianization and framing audit.
    Audit(OutArgs<FamilyArgs>),
    /// Alexander polynomial via Fox calculus and via Burau.
    Alexander(OutArgs<FamilyArgs>),
    /// Criterion check, certificate and slope bound.
    Nlo(NloArgs),
    /// Every check over a parameter range, one JSON line per parameter set.
    Sweep(SweepArgs),
    /// Seeded randomized law checks.
    Props(PropsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolicyArg {
    Claimed,
    Audited,
}

impl From<PolicyArg> for Policy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Claimed => Policy::Claimed,
            PolicyArg::Audited => Policy::Audited,
        }
    }
}

#[derive(Args, Clone, Debug)]
struct FamilyArgs {
    /// Family 1, 2 or 3.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    family: u8,
    /// Strand count ω (family 1).
    #[arg(long)]
    w: Option<usize>,
    /// Family 2 and 3 size parameter.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    m: usize,
}

impl FamilyArgs {
    fn params(&self) -> Result<FamilyParams, String> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| format!("family {} needs --{name}", self.family))
        };
        let f = match self.family {
            1 => FamilyParams::family1(need(self.w, "w")?, self.k, self.m),
            2 => FamilyParams::family2(need(self.n, "n")?, self.k, self.m),
            _ => FamilyParams::family3(need(self.n, "n")?, self.k, self.m),
        };
        f.map_err(|e| e.to_string())
    }
}

#[derive(Args, Clone, Debug)]
struct OutArgs<T: Args> {
    #[command(flatten)]
    family: T,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
}

/// Either a family (`--family`) or raw `--w --t --b [--m]`.
#[derive(Args, Clone, Debug)]
struct ParamArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    family: Option<u8>,
    #[arg(long)]
    w: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
}

#[derive(Args, Clone, Debug)]
struct NloArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = PolicyArg::Claimed)]
    policy: PolicyArg,
    /// Also write the certificate JSON here.
    #[arg(long)]
    certificate: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilySelector {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    All,
}

#[derive(Args, Clone, Debug)]
struct SweepArgs {
    #[arg(long, value_enum, default_value_t = FamilySelector::All)]
    family: FamilySelector,
    /// Largest ω for family 1.
    #[arg(long, default_value_t = 9)]
    max_w: usize,
    /// Largest n for families 2 and 3.
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    min_m: usize,
    #[arg(long, default_value_t = 1)]
    max_m: usize,
    /// Write lines here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
}

#[derive(Args, Clone, Debug)]
struct PropsArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_CASES)]
    cases: usize,
    /// Run one suite only.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<onebridge::Error> for Failure {
    fn from(e: onebridge::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn resolve(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_VAR) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn text_line(record: &Record) -> String {
    let verdict = if record.finding() { "FINDING" } else { "ok" };
    match record {
        Record::Classify(r) => format!(
            "{} knot={} permutation={} exponent_sum={} claimed_framing={} [{verdict}]",
            r.params, r.is_knot, r.permutation, r.exponent_sum, r.claimed_framing
        ),
        Record::Present(r) => format!(
            "{} relator={} rederivation_ok={} surface_script_ok={} [{verdict}]",
            r.family, r.presentation.relator, r.rederivation_ok, r.surface_script_ok
        ),
        Record::Audit(r) => match r.audit {
            Some(a) => format!(
                "{} v={} v*={} discrepancy={} [{verdict}]",
                r.family, a.v, a.v_star, a.discrepancy
            ),
            None => format!("{} no homological framing [{verdict}]", r.family),
        },
        Record::Alexander(r) => {
            let show = |p: &Option<onebridge::laurent::PolyRecord>| {
                p.as_ref().map_or("-".to_string(), |p| p.display.clone())
            };
            format!(
                "{} fox={} burau={} agree={} [{verdict}]",
                r.family,
                show(&r.fox),
                show(&r.burau),
                r.agree
            )
        }
        Record::Nlo(r) => {
            let bound = r.bound.as_ref().map_or("-".to_string(), |b| {
                format!(
                    "criterion_bound[{}]={} lspace_bound={}",
                    b.policy, b.criterion_bound, b.lspace_bound
                )
            });
            format!(
                "{} criterion={} certificate_verified={} {bound} [{verdict}]",
                r.family, r.criterion.pass, r.verified
            )
        }
        Record::Sweep(r) => format!(
            "{} knot={} rederived={} alexander={} certificate={} discrepancy={} [{verdict}]",
            r.family,
            r.is_knot,
            r.rederivation_ok,
            r.alexander_agree,
            r.certificate_verified,
            r.audit
                .map_or("-".to_string(), |a| a.discrepancy.to_string())
        ),
        Record::Props(r) => format!(
            "{} seed={} cases={} failures={} [{verdict}]",
            r.name, r.seed, r.cases, r.failure_count
        ),
    }
}

/// Writes each record as one line; returns whether any record is a finding.
fn emit(records: &[Record], format: Format, sink: &mut dyn Write) -> Result<bool, Failure> {
    for r in records {
        let line = match format {
            Format::Jsonl => serde_json::to_string(r).expect("records serialize"),
            Format::Text => text_line(r),
        };
        writeln!(sink, "{line}")?;
    }
    sink.flush()?;
    Ok(records.iter().any(Record::finding))
}

fn sweep_families(args: &SweepArgs) -> Result<Vec<FamilyParams>, Failure> {
    if args.min_m > args.max_m {
        return Err(Failure::Usage(format!(
            "empty m range {}..={}",
            args.min_m, args.max_m
        )));
    }
    let families: &[u8] = match args.family {
        FamilySelector::One => &[1],
        FamilySelector::Two => &[2],
        FamilySelector::Three => &[3],
        FamilySelector::All => &[1, 2, 3],
    };
    let params: Vec<FamilyParams> = families
        .iter()
        .flat_map(|&f| {
            let max = if f == 1 { args.max_w } else { args.max_n };
            FamilyParams::sweep(f, max, args.min_m..=args.max_m)
        })
        .collect();
    if params.is_empty() {
        return Err(Failure::Usage(
            "the sweep range contains no parameter sets".into(),
        ));
    }
    Ok(params)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let family = |a: &FamilyArgs| a.params().map_err(Failure::Usage);
    match cli.command {
        Command::Classify(a) => {
            let record = match a.family {
                Some(fam) => {
                    let k =
                        a.k.ok_or_else(|| Failure::Usage("--family needs --k".into()))?;
                    let f = family(&FamilyArgs {
                        family: fam,
                        w: a.w,
                        n: a.n,
                        k,
                        m: a.m,
                    })?;
                    ClassifyReport::new(f.one_bridge(), Some(f))
                }
                None => {
                    let (Some(w), Some(t), Some(b)) = (a.w, a.t, a.b) else {
                        return Err(Failure::Usage("give --family, or --w, --t and --b".into()));
                    };
                    let p = OneBridgeParams::new(w, t, b, a.m)
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                    ClassifyReport::new(p, None)
                }
            };
            emit(&[Record::Classify(record)], a.format, &mut out)
        }
        Command::Present(a) => emit(
            &[Record::Present(PresentReport::new(&family(&a.family)?)?)],
            a.format,
            &mut out,
        ),
        Command::Audit(a) => emit(
            &[Record::Audit(AuditReport::new(&family(&a.family)?)?)],
            a.format,
            &mut out,
        ),
        Command::Alexander(a) => emit(
            &[Record::Alexander(AlexanderReport::new(&family(
                &a.family,
            )?)?)],
            a.format,
            &mut out,
        ),
        Command::Nlo(a) => {
            let f = family(&a.family)?;
            let (report, cert) = NloReport::new(&f, a.policy.into())?;
            if let Some(path) = &a.certificate {
                let pres = KnotGroupPresentation::for_family(&f).map_err(onebridge::Error::from)?;
                let json = serde_json::to_string_pretty(&CertificateRecord::from_certificate(
                    &cert,
                    pres.relator(),
                ))
                .expect("certificates serialize");
                std::fs::write(resolve(path), json + "\n")?;
            }
            emit(&[Record::Nlo(report)], a.format, &mut out)
        }
        Command::Sweep(a) => {
            let params = sweep_families(&a)?;
            let records: Vec<Record> = params
                .par_iter()
                .map(|f| SweepRecord::new(f).map(Record::Sweep))
                .collect::<Result<_, _>>()?;
            match &a.output {
                Some(path) => emit(
                    &records,
                    a.format,
                    &mut BufWriter::new(File::create(resolve(path))?),
                ),
                None => emit(&records, a.format, &mut out),
            }
        }
        Command::Props(a) => {
            let reports = match &a.suite {
                Some(name) => vec![props::run_suite(name, a.seed, a.cases)
                    .ok_or_else(|| Failure::Usage(format!("unknown suite {name}")))?],
                None => props::run_all(a.seed, a.cases),
            };
            let records: Vec<Record> = reports.into_iter().map(Record::Props).collect();
            emit(&records, a.format, &mut out)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
