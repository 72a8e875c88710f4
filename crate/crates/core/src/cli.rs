//! Command-line front end: `gen`, `exponents` and `verify`.
//!
//! Exit codes: 0 when everything passes, 1 on a failed verification or a
//! disagreement between exponent methods, 2 on invalid input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::cartan::{validate_cartan, RankedType};
use crate::exponents::{coxeter_exponents, dual_partition, height_distribution, ExponentReport};
use crate::lemmas::ScanConfig;
use crate::roots::RootSystem;
use crate::theorem::{full_ledger, verify_g2_criterion, TheoremError, TheoremLedger};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

const SKIP_REASON: &str = "m₂ undefined (ℓ ≥ 2 required)";

#[derive(Debug, Parser)]
#[command(name = "rootsys", version, about = "Root systems, Weyl group exponents and c_max vs m2 checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate positive roots.
    Gen(CommonArgs),
    /// Compute Weyl group exponents.
    Exponents {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Run every check and print the ledger.
    Verify(CommonArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Named type such as G2 or E8.
    #[arg(long = "type", value_parser = parse_type, required_unless_present_any = ["cartan", "all"], conflicts_with_all = ["cartan", "all"])]
    pub ty: Option<RankedType>,
    /// JSON file holding a 2-D integer Cartan matrix.
    #[arg(long, conflicts_with = "all")]
    pub cartan: Option<PathBuf>,
    /// Every admissible type up to --max-rank.
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_rank: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for sampled lemma scans.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_type(s: &str) -> Result<RankedType, String> {
    s.parse().map_err(|e: crate::cartan::CartanError| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Dual,
    Coxeter,
    Both,
}

/// Which systems a command runs on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    Type(RankedType),
    All,
    Cartan(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Gen,
    Exponents(MethodArg),
    Verify,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub selector: Selector,
    pub max_rank: usize,
    pub format: Format,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let (command, common) = match cli.command {
            Command::Gen(c) => (CommandKind::Gen, c),
            Command::Exponents { common, method } => (CommandKind::Exponents(method), common),
            Command::Verify(c) => (CommandKind::Verify, c),
        };
        let selector = match (common.ty, common.cartan, common.all) {
            (Some(t), _, _) => Selector::Type(t),
            (_, Some(p), _) => Selector::Cartan(p),
            _ => Selector::All,
        };
        RunConfig {
            command,
            selector,
            max_rank: common.max_rank as usize,
            format: common.format,
            seed: common.seed,
            out: common.out,
        }
    }
}

/// What a run printed and how it should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn invalid(msg: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn load_systems(cfg: &RunConfig) -> Result<(Vec<RootSystem>, bool), String> {
    match &cfg.selector {
        Selector::Type(t) => Ok((vec![RootSystem::of_type(*t)], false)),
        Selector::All => Ok((
            RankedType::all_up_to(cfg.max_rank)
                .into_par_iter()
                .map(RootSystem::of_type)
                .collect(),
            true,
        )),
        Selector::Cartan(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let raw: Vec<Vec<i64>> = serde_json::from_str(&text)
                .map_err(|e| format!("{} is not a 2-D integer array: {e}", path.display()))?;
            let cartan = validate_cartan(raw).map_err(|e| e.to_string())?;
            let rs = RootSystem::enumerate(&cartan).map_err(|e| e.to_string())?;
            Ok((vec![rs], false))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let (systems, many) = match load_systems(cfg) {
        Ok(v) => v,
        Err(e) => return Outcome::invalid(e),
    };
    match cfg.command {
        CommandKind::Gen => cmd_gen(cfg, &systems, many),
        CommandKind::Exponents(method) => cmd_exponents(cfg, &systems, many, method),
        CommandKind::Verify => cmd_verify(cfg, &systems, many),
    }
}

pub fn cmd_gen(cfg: &RunConfig, systems: &[RootSystem], many: bool) -> Outcome {
    let stdout = match cfg.format {
        Format::Json => {
            let docs: Vec<_> = systems.iter().map(RootSystem::to_document).collect();
            if many {
                to_json(&docs)
            } else {
                to_json(&docs[0])
            }
        }
        Format::Table => {
            let mut s = String::new();
            for rs in systems {
                let _ = writeln!(
                    s,
                    "{}: {} positive roots, highest {:?}, c_max {}",
                    rs.type_id(),
                    rs.num_positive(),
                    rs.highest_root().coeffs(),
                    rs.c_max()
                );
                for r in rs.positive_roots() {
                    let _ = writeln!(s, "  {:>3}  {:?}", r.height(), r.coeffs());
                }
            }
            s
        }
    };
    Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    }
}

/// Exponents of one system by the requested method(s).
#[derive(Debug, Clone, Serialize)]
pub struct ExponentsEntry {
    pub r#type: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<ExponentReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coxeter: Option<ExponentReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn cmd_exponents(cfg: &RunConfig, systems: &[RootSystem], many: bool, method: MethodArg) -> Outcome {
    let entries: Vec<ExponentsEntry> = systems
        .par_iter()
        .map(|rs| {
            let mut errors = Vec::new();
            let dual = (method != MethodArg::Coxeter)
                .then(|| dual_partition(&height_distribution(rs)))
                .and_then(|r| r.map_err(|e| errors.push(e.to_string())).ok());
            let coxeter = (method != MethodArg::Dual)
                .then(|| coxeter_exponents(rs.cartan()))
                .and_then(|r| r.map_err(|e| errors.push(e.to_string())).ok());
            let agree = (method == MethodArg::Both).then(|| match (&dual, &coxeter) {
                (Some(d), Some(c)) => {
                    d.exponents() == c.exponents() && d.coxeter_number() == c.coxeter_number()
                }
                _ => false,
            });
            ExponentsEntry {
                r#type: rs.type_id(),
                dual,
                coxeter,
                agree,
                error: (!errors.is_empty()).then(|| errors.join("; ")),
            }
        })
        .collect();
    let failed = entries
        .iter()
        .any(|e| e.error.is_some() || e.agree == Some(false));
    let stdout = match cfg.format {
        Format::Json if many => to_json(&entries),
        Format::Json => to_json(&entries[0]),
        Format::Table => {
            let mut s = format!("{:<8} {:<4} {:<40} {}\n", "type", "h", "exponents", "agree");
            for e in &entries {
                let rep = e.dual.as_ref().or(e.coxeter.as_ref());
                let _ = writeln!(
                    s,
                    "{:<8} {:<4} {:<40} {}",
                    e.r#type,
                    rep.map_or("-".into(), |r| r.coxeter_number().to_string()),
                    rep.map_or("-".into(), |r| format!("{:?}", r.exponents())),
                    e.agree.map_or("-".into(), |a| a.to_string()),
                );
            }
            s
        }
    };
    let stderr = entries
        .iter()
        .filter_map(|e| e.error.as_ref().map(|m| format!("{}: {m}\n", e.r#type)))
        .collect();
    Outcome {
        code: if failed { EXIT_FAILED } else { EXIT_OK },
        stdout,
        stderr,
    }
}

#[derive(Debug, Clone, Serialize)]
struct Skipped {
    r#type: String,
    skipped: String,
}

pub fn cmd_verify(cfg: &RunConfig, systems: &[RootSystem], many: bool) -> Outcome {
    let scan = ScanConfig {
        seed: cfg.seed,
        ..ScanConfig::default()
    };
    let results: Vec<(String, Result<TheoremLedger, TheoremError>)> = systems
        .par_iter()
        .map(|rs| (rs.type_id(), full_ledger(rs, &scan)))
        .collect();
    let mut ledgers = Vec::new();
    let mut skipped = Vec::new();
    let mut errors = Vec::new();
    for (ty, res) in results {
        match res {
            Ok(l) => ledgers.push(l),
            Err(TheoremError::Unsupported(_)) => skipped.push(Skipped {
                r#type: ty,
                skipped: SKIP_REASON.to_string(),
            }),
            Err(e) => errors.push(json!({ "type": ty, "error": e.to_string() })),
        }
    }
    let g2 = many.then(|| verify_g2_criterion(&ledgers));
    let failed: Vec<&TheoremLedger> = ledgers.iter().filter(|l| !l.passed()).collect();
    let case1: Vec<&str> = ledgers
        .iter()
        .filter(|l| l.case == Some(1))
        .map(|l| l.r#type.as_str())
        .collect();
    let all_ok = failed.is_empty() && errors.is_empty() && g2.as_ref().is_none_or(|r| r.pass);
    let summary = format!(
        "verified {} types: {} passed, {} failed, {} skipped; Case 1: [{}]{}",
        ledgers.len(),
        ledgers.len() - failed.len(),
        failed.len() + errors.len(),
        skipped.len(),
        case1.join(", "),
        g2.as_ref()
            .map_or(String::new(), |r| format!("; G2 criterion: {}", if r.pass { "pass" } else { "FAIL" })),
    );

    let (stdout, mut stderr) = match cfg.format {
        Format::Json => {
            let body = if many {
                to_json(&json!({
                    "ledgers": ledgers,
                    "skipped": skipped,
                    "errors": errors,
                    "g2_criterion": g2,
                    "summary": summary,
                }))
            } else if let Some(l) = ledgers.first() {
                to_json(l)
            } else if let Some(s) = skipped.first() {
                to_json(s)
            } else {
                to_json(&errors[0])
            };
            (body, format!("{summary}\n"))
        }
        Format::Table => {
            let mut s = format!("{:<8} {:>5} {:>4} {:>4}  {}\n", "type", "c_max", "m2", "case", "verdict");
            for l in &ledgers {
                let verdict = if l.passed() {
                    "pass".to_string()
                } else {
                    format!("FAIL ({})", l.failed_checks().join(", "))
                };
                let case = l.case.map_or("?".to_string(), |c| c.to_string());
                let _ = writeln!(s, "{:<8} {:>5} {:>4} {:>4}  {verdict}", l.r#type, l.c_max, l.m2, case);
            }
            for sk in &skipped {
                let _ = writeln!(s, "{:<8} skipped: {}", sk.r#type, sk.skipped);
            }
            let _ = writeln!(s, "{summary}");
            (s, String::new())
        }
    };
    for l in &failed {
        let _ = writeln!(stderr, "{}: failed {}", l.r#type, l.failed_checks().join(", "));
    }
    Outcome {
        code: if all_ok { EXIT_OK } else { EXIT_FAILED },
        stdout,
        stderr,
    }
}
