//! The `cal` command line. Every command renders into strings and an exit
//! code so the binary is a thin wrapper and the output can be tested.

mod file;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{CurledTable, CurledType};
use crate::conditions::ConditionReport;
use crate::field::{Field, FieldDescriptor};
use crate::formal::reference::LEDGER;
use crate::formal::{difference_expansion, product_of_squares, square_of_product, FormalWord};
use crate::oracle::{
    budget_from_env, check_budget, differential_pass, is_ec_bruteforce, is_ec_polynomial,
    is_zeropotent_bruteforce, ClassRow, DifferentialReport, Mode, OracleError, Population,
    RunConfig,
};
use crate::selfcheck;

pub use file::{prime_table, AlgebraFile, FieldSpec, FileError, Literal, LoadedTable, Products};

pub const SCHEMA_VERSION: u32 = 1;
pub const FINITE_SYMBOLIC_CAVEAT: &str = "sufficient-only over finite fields";

#[derive(Debug, Parser)]
#[command(
    name = "cal",
    version,
    about = "Endo-commutativity of 3-dimensional curled algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report curledness, the element conditions and every decider on one algebra file.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the coefficients of (xy)^2, x^2y^2 and their difference.
    Expand {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        word: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Run the built-in consistency suite for the symbolic expansion.
    VerifyExpansion {
        /// Skip the GF(2) recombination sweep.
        #[arg(long)]
        quick: bool,
    },
    /// Compare the endo-commutativity deciders over enumerated or sampled tables.
    VerifyTheorem {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = PopulationArg::Both)]
        population: PopulationArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write per-type counts as CSV.
    Classify {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Sample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PopulationArg {
    All,
    Curled,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Prime order of the ground field.
    #[arg(long, default_value_t = 2)]
    pub field: u64,
    /// `all`, or one type as `i,j,k`; repeatable.
    #[arg(long, default_value = "all")]
    pub types: Vec<String>,
    /// Defaults to exhaustive over GF(2) and sampling otherwise.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Tables per type when sampling.
    #[arg(long, default_value_t = 100_000)]
    pub n: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; 0 uses every available processor.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

impl RunArgs {
    fn field(&self) -> Result<FieldDescriptor, String> {
        FieldDescriptor::prime(self.field).map_err(|e| e.to_string())
    }

    fn types(&self) -> Result<Vec<CurledType>, String> {
        let mut out = Vec::new();
        for spec in &self.types {
            if spec == "all" {
                out.extend(CurledType::all());
                continue;
            }
            let bits: Vec<u8> = spec
                .split(',')
                .map(|b| b.trim().parse::<u8>())
                .collect::<Result<_, _>>()
                .map_err(|_| format!("invalid type {spec:?}"))?;
            let ty = match bits[..] {
                [i, j, k] => CurledType::new(i, j, k).ok(),
                _ => None,
            };
            out.push(ty.ok_or_else(|| format!("invalid type {spec:?}"))?);
        }
        Ok(out)
    }

    fn config(&self) -> RunConfig {
        let mode = match self.mode {
            Some(ModeArg::Exhaustive) => Mode::Exhaustive,
            Some(ModeArg::Sample) => Mode::Sample {
                n: self.n,
                seed: self.seed,
            },
            None if self.field == 2 => Mode::Exhaustive,
            None => Mode::Sample {
                n: self.n,
                seed: self.seed,
            },
        };
        RunConfig {
            budget: budget_from_env(),
            ..RunConfig::new(mode).threads(self.threads)
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn execute(command: Command) -> Outcome {
    match command {
        Command::Check { path, format } => cmd_check(&path, format),
        Command::Expand { word, all } => cmd_expand(word.as_deref(), all),
        Command::VerifyExpansion { quick } => cmd_verify_expansion(!quick),
        Command::VerifyTheorem {
            run,
            population,
            out,
        } => cmd_verify_theorem(&run, population, out),
        Command::Classify { run, out } => cmd_classify(&run, out),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurledVerdict {
    pub value: bool,
    pub method: &'static str,
    pub symbolic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbolic_caveat: Option<&'static str>,
}

/// `None` marks a decider that does not apply to the field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EcVerdicts {
    pub bruteforce: Option<bool>,
    pub theorem: bool,
    pub polynomial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeropotentVerdicts {
    pub bruteforce: Option<bool>,
    pub condition: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct CheckReport<K: Field> {
    pub schema_version: u32,
    pub field: FieldDescriptor,
    #[serde(rename = "type")]
    pub ty: CurledType,
    pub curled: CurledVerdict,
    pub endo_commutative: EcVerdicts,
    pub zeropotent: ZeropotentVerdicts,
    pub conditions: ConditionReport<K>,
}

impl<K: Field> CheckReport<K> {
    pub fn new(table: &CurledTable<K>) -> Self {
        let finite = table.descriptor().is_finite();
        let symbolic = table.is_curled_symbolic();
        // brute force only fails on infinite fields
        let brute = |r: Result<bool, _>| r.ok().filter(|_| finite);
        let curled = match brute(table.is_curled_bruteforce()) {
            Some(value) => CurledVerdict {
                value,
                method: "bruteforce",
                symbolic,
                symbolic_caveat: Some(FINITE_SYMBOLIC_CAVEAT),
            },
            None => CurledVerdict {
                value: symbolic,
                method: "symbolic",
                symbolic,
                symbolic_caveat: None,
            },
        };
        let conditions = ConditionReport::new(table);
        CheckReport {
            schema_version: SCHEMA_VERSION,
            field: table.descriptor(),
            ty: table.ty(),
            curled,
            endo_commutative: EcVerdicts {
                bruteforce: brute(is_ec_bruteforce(table)),
                theorem: conditions.theorem_holds(),
                polynomial: is_ec_polynomial(table),
            },
            zeropotent: ZeropotentVerdicts {
                bruteforce: brute(is_zeropotent_bruteforce(table)),
                condition: conditions.zeropotent(),
            },
            conditions,
        }
    }

    pub fn to_text(&self) -> String {
        let yes = |b: bool| if b { "true" } else { "false" };
        let opt = |b: Option<bool>| b.map_or("n/a", yes);
        let mut s = String::new();
        let [i, j, k] = self.ty.bits();
        let _ = writeln!(s, "field: {}", self.field);
        let _ = writeln!(s, "type: ({i},{j},{k})");
        let c = &self.curled;
        let _ = writeln!(s, "curled: {} ({})", yes(c.value), c.method);
        if let Some(caveat) = c.symbolic_caveat {
            let _ = writeln!(s, "  symbolic: {} ({caveat})", yes(c.symbolic));
        }
        let ec = &self.endo_commutative;
        let _ = writeln!(s, "endo-commutative:");
        let _ = writeln!(s, "  bruteforce: {}", opt(ec.bruteforce));
        let _ = writeln!(s, "  theorem: {}", yes(ec.theorem));
        let _ = writeln!(s, "  polynomial: {}", yes(ec.polynomial));
        let z = &self.zeropotent;
        let _ = writeln!(s, "zeropotent:");
        let _ = writeln!(s, "  bruteforce: {}", opt(z.bruteforce));
        let _ = writeln!(s, "  condition: {}", yes(z.condition));
        let failing: Vec<_> = self.conditions.failures().collect();
        if failing.is_empty() {
            let _ = writeln!(s, "failing equations: none");
        } else {
            let _ = writeln!(s, "failing equations:");
            for v in failing {
                let w = v
                    .witness
                    .as_ref()
                    .expect("failing verdicts carry witnesses");
                let _ = writeln!(
                    s,
                    "  {:<5} {}  lhs {}  rhs {}",
                    v.label, v.equation, w.lhs, w.rhs
                );
            }
        }
        s
    }
}

fn render_check<K: Field>(table: &CurledTable<K>, format: Format) -> String {
    let report = CheckReport::new(table);
    match format {
        Format::Text => report.to_text(),
        Format::Json => json(&report),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn cmd_check(path: &std::path::Path, format: Format) -> Outcome {
    let loaded = AlgebraFile::read(path).and_then(|f| f.load());
    match loaded {
        Ok(LoadedTable::Prime(t)) => Outcome::ok(render_check(&t, format)),
        Ok(LoadedTable::Rational(t)) => Outcome::ok(render_check(&t, format)),
        Err(e) => Outcome::fail(e.exit_code(), e),
    }
}

/// One line `W : (xy)^2 | x^2y^2 | difference`.
pub fn expansion_line(word: &FormalWord) -> String {
    let cols = [
        square_of_product(),
        product_of_squares(),
        difference_expansion(),
    ]
    .map(|v| v.coefficient(word).to_string());
    format!("{word} : {} | {} | {}", cols[0], cols[1], cols[2])
}

pub fn cmd_expand(word: Option<&str>, all: bool) -> Outcome {
    if all {
        let mut s = String::new();
        for (w, ..) in LEDGER {
            let w: FormalWord = w.parse().expect("ledger words parse");
            s.push_str(&expansion_line(&w));
            s.push('\n');
        }
        return Outcome::ok(s);
    }
    let text = word.unwrap_or_default();
    match text.parse::<FormalWord>() {
        Ok(w) => Outcome::ok(expansion_line(&w) + "\n"),
        Err(e) => Outcome::fail(2, e),
    }
}

pub fn cmd_verify_expansion(recombination: bool) -> Outcome {
    let report = selfcheck::run(recombination);
    let mut s = String::new();
    for c in &report.checks {
        let _ = writeln!(s, "{c}");
    }
    let ok = report.ok();
    let _ = writeln!(
        s,
        "{}",
        if ok {
            "all checks passed"
        } else {
            "some checks failed"
        }
    );
    Outcome {
        code: if ok { 0 } else { 1 },
        stdout: s,
        stderr: String::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremRun {
    pub schema_version: u32,
    pub field: FieldDescriptor,
    pub mode: Mode,
    pub populations: Vec<Population>,
    pub total_tables: u64,
    pub total_mismatches: u64,
    pub reports: Vec<DifferentialReport>,
}

fn oracle_failure(e: OracleError) -> Outcome {
    Outcome::fail(2, e)
}

fn write_or_print(out: Option<PathBuf>, body: String) -> Outcome {
    match out {
        None => Outcome::ok(body),
        Some(path) => match std::fs::write(&path, body) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::fail(2, format!("cannot write {}: {e}", path.display())),
        },
    }
}

pub fn theorem_run(
    field: FieldDescriptor,
    types: &[CurledType],
    config: &RunConfig,
    populations: &[Population],
) -> Result<TheoremRun, OracleError> {
    check_budget(field, types.len() as u64, config)?;
    let mut reports = Vec::new();
    let mut total_tables = 0;
    for &ty in types {
        let pass = differential_pass(field, ty, config)?;
        total_tables += pass.all.counts.tables;
        for &p in populations {
            reports.push(pass.population(p).clone());
        }
    }
    Ok(TheoremRun {
        schema_version: SCHEMA_VERSION,
        field,
        mode: config.mode,
        populations: populations.to_vec(),
        total_tables,
        total_mismatches: reports.iter().map(|r| r.counts.mismatches).sum(),
        reports,
    })
}

pub fn cmd_verify_theorem(
    args: &RunArgs,
    population: PopulationArg,
    out: Option<PathBuf>,
) -> Outcome {
    let (field, types) = match args.field().and_then(|f| Ok((f, args.types()?))) {
        Ok(x) => x,
        Err(e) => return Outcome::fail(2, e),
    };
    let populations = match population {
        PopulationArg::All => vec![Population::All],
        PopulationArg::Curled => vec![Population::Curled],
        PopulationArg::Both => vec![Population::All, Population::Curled],
    };
    let run = match theorem_run(field, &types, &args.config(), &populations) {
        Ok(r) => r,
        Err(e) => return oracle_failure(e),
    };
    let mismatched = run.total_mismatches > 0;
    let mut outcome = write_or_print(out, json(&run));
    if outcome.code == 0 && mismatched {
        outcome.code = 1;
        outcome.stderr = format!("{} mismatching tables\n", run.total_mismatches);
    }
    outcome
}

pub fn classify_csv(rows: &[ClassRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

pub fn cmd_classify(args: &RunArgs, out: Option<PathBuf>) -> Outcome {
    let (field, types) = match args.field().and_then(|f| Ok((f, args.types()?))) {
        Ok(x) => x,
        Err(e) => return Outcome::fail(2, e),
    };
    match crate::oracle::classify_counts(field, &types, &args.config()) {
        Ok(rows) => write_or_print(out, classify_csv(&rows)),
        Err(e) => oracle_failure(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cal(args: &[&str]) -> Outcome {
        run(std::iter::once("cal").chain(args.iter().copied()))
    }

    #[test]
    fn expand_rows() {
        let o = cal(&["expand", "--word", "e"]);
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "e : a^2u^2i | a^2u^2i | 0\n");
        let o = cal(&["expand", "--word", "AB"]);
        assert_eq!(o.stdout, "AB : a^2vw | abuw | a^2vw - abuw\n");
        assert_eq!(cal(&["expand", "--word", "zz"]).code, 2);
        assert_eq!(cal(&["expand", "--all"]).stdout.lines().count(), 81);
        assert_eq!(cal(&["expand"]).code, 2);
    }

    #[test]
    fn flag_errors() {
        assert_eq!(
            cal(&["verify-theorem", "--mode", "sample", "--n", "-5"]).code,
            2
        );
        assert_eq!(cal(&["verify-theorem", "--field", "4"]).code, 2);
        assert_eq!(cal(&["verify-theorem", "--types", "2,0,0"]).code, 2);
        // GF(3) exhaustive needs 3^18 tables per type
        let o = cal(&[
            "verify-theorem",
            "--field",
            "3",
            "--mode",
            "exhaustive",
            "--types",
            "0,0,0",
        ]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("budget"), "{}", o.stderr);
    }

    #[test]
    fn small_sample_run() {
        let o = cal(&[
            "verify-theorem",
            "--field",
            "3",
            "--types",
            "1,0,1",
            "--mode",
            "sample",
            "--n",
            "50",
            "--seed",
            "7",
            "--population",
            "curled",
            "--threads",
            "1",
        ]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["field"], "GF(3)");
        assert_eq!(v["mode"]["kind"], "sample");
        assert_eq!(v["reports"][0]["population"], "curled");
        assert_eq!(v["reports"][0]["sampler"], "chacha8-rejection-v1");
        assert_eq!(v["total_tables"], 50);
    }

    #[test]
    fn classify_header() {
        let o = cal(&[
            "classify",
            "--field",
            "5",
            "--types",
            "0,0,0",
            "--n",
            "20",
            "--threads",
            "2",
        ]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let mut lines = o.stdout.lines();
        assert_eq!(
            lines.next().unwrap(),
            "field,type_i,type_j,type_k,tables,curled,ec_bruteforce,ec_theorem,ec_polynomial,\
             zeropotent_bruteforce,zeropotent_condition,mismatches"
        );
        assert!(lines.next().unwrap().starts_with("GF(5),0,0,0,20,"));
    }
}
