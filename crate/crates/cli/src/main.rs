mod cache;
mod output;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hurwitz::engine::{compute, genus0_closed_form, EngineChoice, EngineOptions, ExponentMode, DEFAULT_BUDGET};
use hurwitz::hodge::{extract_table, verify_polynomiality, ExtractionPlan};
use hurwitz::verify::{self, Suite, VerifyBounds};
use hurwitz::{Error, HurwitzInstance, Partition};

use cache::Cache;
use output::{fraction, outcome_str, HodgeDoc, HurwitzDoc, VerifyDoc};

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Exact Hurwitz numbers and linear Hodge integrals")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Directory for the result cache; caching is off when unset.
    #[arg(long, global = true, env = "HURWITZ_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable.
    Text,
    /// Line-oriented, whitespace-separated fields.
    Lines,
    /// One JSON document.
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    ClassAlgebra,
    Auto,
}

impl From<MethodArg> for EngineChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Brute => EngineChoice::Brute,
            MethodArg::ClassAlgebra => EngineChoice::ClassAlgebra,
            MethodArg::Auto => EngineChoice::Auto,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Genus0,
    Oracle,
    Multiplicity,
    Polynomiality,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Genus0 => Suite::Genus0,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Multiplicity => Suite::Multiplicity,
            SuiteArg::Polynomiality => Suite::Polynomiality,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute one connected Hurwitz number H^g_alpha.
    Hurwitz(HurwitzArgs),
    /// Extract all linear Hodge integrals for (g, m) and verify on holdouts.
    Hodge(HodgeArgs),
    /// Run a self-check suite.
    Verify(VerifyArgs),
    /// Recompute every cached result and compare.
    CacheCheck,
}

#[derive(Args)]
struct HurwitzArgs {
    #[arg(long)]
    genus: i64,
    /// Comma-separated parts, e.g. 3,1,1.
    #[arg(long)]
    partition: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Brute-force candidate-tuple budget.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Also write the JSON document here.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct HodgeArgs {
    #[arg(long)]
    genus: i64,
    #[arg(long)]
    marks: usize,
    #[arg(long, default_value_t = 2)]
    holdout: usize,
    /// Engine for the fit points.
    #[arg(long, value_enum, default_value_t = MethodArg::ClassAlgebra)]
    method: MethodArg,
    /// Engine for holdout verification.
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    verify_method: MethodArg,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Brute-force budget for holdouts under `--verify-method auto`.
    #[arg(long, default_value_t = 10_000_000)]
    verify_budget: u128,
    /// Table file to write (default: hodge-g<g>-m<m>.txt).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 5)]
    max_d: usize,
    #[arg(long, default_value_t = 8)]
    max_r: usize,
    #[arg(long, default_value_t = 6)]
    max_cycle: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, default_value_t = 10_000_000)]
    holdout_budget: u128,
}

/// Failure with its exit code: 1 check failed, 2 usage or domain error,
/// 3 resource budget.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn failed(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::BudgetExceeded { .. }) { 3 } else { 2 };
        Self { code, message: e.to_string() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<Error>() {
            Ok(core) => core.into(),
            Err(e) => Self::failed(format!("{e:#}")),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::failed(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Hurwitz(args) => cmd_hurwitz(cli, args),
        Command::Hodge(args) => cmd_hodge(cli, args),
        Command::Verify(args) => cmd_verify(cli, args),
        Command::CacheCheck => cmd_cache_check(cli),
    }
}

fn json(value: &impl serde::Serialize) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| Failure::failed(e.to_string()))
}

fn cmd_hurwitz(cli: &Cli, args: &HurwitzArgs) -> Result<String, Failure> {
    let alpha: Partition = args.partition.parse()?;
    let inst = HurwitzInstance::new(args.genus, alpha)?;
    let opts = EngineOptions { budget: args.budget };
    let choice: EngineChoice = args.method.into();
    let method = choice.resolve(&inst, &opts);

    let cache = cli.cache_dir.as_deref().map(Cache::open).transpose()?;
    let cached = match &cache {
        Some(c) => c.lookup(inst.genus(), inst.alpha(), method)?,
        None => None,
    };
    let report = match cached {
        Some(r) => r,
        None => {
            let r = compute(&inst, method.into(), &opts)?;
            if let Some(c) = &cache {
                c.store(&r)?;
            }
            r
        }
    };

    let (closed, printed) = if inst.genus() == 0 && inst.m() <= 2 {
        let closed = genus0_closed_form(inst.alpha(), ExponentMode::Oracle)?;
        let printed = (inst.m() == 2).then(|| genus0_closed_form(inst.alpha(), ExponentMode::Paper)).transpose()?;
        (Some(closed), printed)
    } else {
        (None, None)
    };
    let doc = HurwitzDoc::new(&report, closed.as_ref(), printed.as_ref());
    if let Some(path) = &args.output {
        std::fs::write(path, json(&doc)?)?;
    }

    let mut out = String::new();
    match cli.format {
        Format::Json => out = json(&doc)?,
        Format::Lines => {
            writeln!(out, "{} {} {} {} {}", doc.genus, args_partition(&doc.partition), doc.method, doc.tuple_count, doc.hurwitz_number).unwrap();
        }
        Format::Text => {
            writeln!(out, "instance: g={} alpha={} d={} m={} b={} r={} k={}", inst.genus(), inst.alpha(), inst.d(), inst.m(), inst.b(), inst.r(), inst.k()).unwrap();
            let auto = if args.method == MethodArg::Auto { " (auto)" } else { "" };
            writeln!(out, "method: {}{auto}", report.method).unwrap();
            writeln!(out, "tuple_count: {}", report.tuple_count).unwrap();
            writeln!(out, "H = {}", fraction(&report.hurwitz_number)).unwrap();
            if let Some(c) = &closed {
                let verdict = if *c == report.hurwitz_number { "agrees" } else { "DISAGREES" };
                writeln!(out, "genus-0 closed form: {} ({verdict})", fraction(c)).unwrap();
            }
            if let Some(p) = &printed {
                let verdict = if *p == report.hurwitz_number { "agrees" } else { "differs from the count" };
                writeln!(out, "two-part form with printed d^(d-1): {} ({verdict})", fraction(p)).unwrap();
            }
        }
    }
    Ok(out)
}

fn args_partition(parts: &[usize]) -> String {
    parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_hodge(cli: &Cli, args: &HodgeArgs) -> Result<String, Failure> {
    if args.genus < 0 {
        return Err(Error::NegativeGenus(args.genus).into());
    }
    let genus = u32::try_from(args.genus).map_err(|_| Failure::usage("genus too large"))?;
    let plan = ExtractionPlan::build(genus, args.marks, args.holdout)?;
    let opts = EngineOptions { budget: args.budget };
    let table = extract_table(&plan, args.method.into(), &opts)?;
    let verify_opts = EngineOptions { budget: args.verify_budget };
    let report = verify_polynomiality(&plan, &table, args.verify_method.into(), &verify_opts);

    let path = args.out.clone().unwrap_or_else(|| PathBuf::from(format!("hodge-g{genus}-m{}.txt", args.marks)));
    std::fs::write(&path, table.to_text())?;

    let mut out = String::new();
    match cli.format {
        Format::Json => out = json(&HodgeDoc::new(plan.points(), &table, &report, path.display().to_string()))?,
        Format::Lines => out = table.to_text(),
        Format::Text => {
            let pts: Vec<String> = plan.points().iter().map(|p| format!("({})", args_partition(p))).collect();
            writeln!(out, "(g, m) = ({genus}, {}): {} unknowns, fit points {}", args.marks, plan.unknowns().len(), pts.join(" ")).unwrap();
            writeln!(out, "psi-exponents | lambda-index | value").unwrap();
            for (mono, v) in table.iter() {
                writeln!(out, "{} | {} | {}", args_partition(mono.psi()), mono.lambda(), fraction(v)).unwrap();
            }
            writeln!(out, "table written to {}", path.display()).unwrap();
            writeln!(out, "{report}").unwrap();
        }
    }
    if args.holdout > 0 && !report.all_passed() {
        eprint!("{out}");
        return Err(Failure::failed(format!("{}/{} holdouts pass", report.passed(), report.checks.len())));
    }
    Ok(out)
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<String, Failure> {
    let bounds = VerifyBounds {
        max_d: args.max_d,
        max_r: args.max_r,
        max_cycle: args.max_cycle,
        engine: EngineOptions { budget: args.budget },
        holdout_budget: args.holdout_budget,
    };
    let report = verify::run(args.suite.into(), &bounds)?;
    let out = match cli.format {
        Format::Json => json(&VerifyDoc::new(&report))?,
        Format::Lines => report
            .rows
            .iter()
            .map(|r| format!("{}\t{}\t{}\t{}\t{}\n", r.suite, r.label, r.expected, r.actual, outcome_str(r.outcome)))
            .collect(),
        Format::Text => format!("{report}\n"),
    };
    if !report.all_passed() {
        eprint!("{out}");
        return Err(Failure::failed("verification failed"));
    }
    Ok(out)
}

fn cmd_cache_check(cli: &Cli) -> Result<String, Failure> {
    let dir = cli.cache_dir.as_deref().ok_or_else(|| Failure::usage("cache-check needs --cache-dir or HURWITZ_CACHE_DIR"))?;
    let cache = Cache::open(dir)?;
    let mut out = String::new();
    let mut bad = 0;
    for entry in cache.entries()? {
        let cached = entry.to_report()?;
        let fresh = compute(&cached.instance, cached.method.into(), &EngineOptions { budget: u128::MAX })?;
        let ok = fresh == cached;
        bad += usize::from(!ok);
        writeln!(
            out,
            "{} g={} alpha={} {} cached={} fresh={}",
            if ok { "PASS" } else { "FAIL" },
            entry.genus,
            cached.instance.alpha(),
            cached.method,
            fraction(&cached.hurwitz_number),
            fraction(&fresh.hurwitz_number)
        )
        .unwrap();
    }
    if bad > 0 {
        eprint!("{out}");
        return Err(Failure::failed(format!("{bad} cached result(s) differ from recomputation")));
    }
    Ok(out)
}
