//! Command-line front end.
//!
//! Subcommands: `coeff` (oracle coefficients), `stat` (crossing statistics,
//! with an ASCII diagram in human output), `feasible` (verdicts with
//! witnesses), `inequalities` (the constraints a system quantifies over),
//! and `verify` (exhaustive sweeps and the reference fixtures).
//!
//! Exit codes: 0 success; 1 infeasible verdict when `--fail-on-infeasible`
//! is set; 2 usage errors (bad flags, malformed partitions, containment
//! violations, cap exceedance); 3 internal inconsistency (oracle
//! self-check failures, sweep disagreements, fixture mismatches).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::feasibility::{
    CheckOptions, FeasibilityVerdict, HornEngine, InequalityDescriptor, RectSystem, StairSystem,
    TableMethod, Witness, WitnessKind,
};
use crate::partition::{Partition, Rectangle, Staircase, StrictPartition};
use crate::statistics::{
    inner_corner_stat, inner_crossings, outer_corner_stat, outer_crossings, rows_cols_crossings,
    rows_cols_stat, rows_crossings, rows_stat, Crossings,
};
use crate::sweep::{fixture_check, sweep_rectangle, sweep_staircase, SweepConfig, SweepReport};

pub const ENV_THREADS: &str = "LRHORN_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "lrhorn",
    version,
    about = "Decide when ordinary and shifted Littlewood-Richardson numbers are non-zero"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads for sweeps (0 = rayon default). Defaults to the
    /// LRHORN_THREADS environment variable.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficients from the brute-force oracle.
    Coeff {
        #[command(subcommand)]
        kind: CoeffCmd,
    },
    /// Crossing statistics behind the Horn-type inequalities.
    Stat {
        #[command(subcommand)]
        kind: StatCmd,
    },
    /// Feasibility verdicts with witnesses.
    Feasible {
        #[command(subcommand)]
        kind: FeasibleCmd,
    },
    /// List every inequality a system quantifies over.
    Inequalities {
        #[command(subcommand)]
        kind: InequalitiesCmd,
    },
    /// Exhaustive verification sweeps and reference fixtures.
    Verify {
        #[command(subcommand)]
        kind: VerifyCmd,
    },
}

#[derive(Debug, Subcommand)]
enum CoeffCmd {
    /// a^λ_{μν}: coefficient of S_λ in S_μ·S_ν.
    A(TripleArgs),
    /// c^λ_{μν}: coefficient of Q_λ in Q_μ·Q_ν (strict partitions).
    C(TripleArgs),
    /// d^λ_{μν}: coefficient of P_λ in P_μ·P_ν (strict partitions).
    D(TripleArgs),
    /// a_{λμν} on an n×m rectangle.
    #[command(name = "sym-a")]
    SymA(RectTripleArgs),
    /// c_{λμν} on the staircase Λ_n.
    #[command(name = "sym-c")]
    SymC(StairTripleArgs),
    /// d_{λμν} on the staircase Λ_n.
    #[command(name = "sym-d")]
    SymD(StairTripleArgs),
}

#[derive(Debug, Args)]
struct TripleArgs {
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
}

#[derive(Debug, Args)]
struct RectTripleArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
}

#[derive(Debug, Args)]
struct StairTripleArgs {
    /// Staircase side length.
    #[arg(long)]
    n: u32,
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
}

#[derive(Debug, Subcommand)]
enum StatCmd {
    /// |λ|_α: cross out the rows indexed by I_n(α).
    Rows {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        r: u32,
    },
    /// |λ|_{α,α'}: cross out rows I_n(α) and columns I_m(α').
    #[command(name = "rows-cols")]
    RowsCols {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        alpha: Partition,
        #[arg(long, value_name = "ALPHA'")]
        alpha_prime: Partition,
        #[arg(long)]
        r: u32,
    },
    /// [λ]_α: cross out staircase inner corners indexed by I_n(α).
    Inner {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        r: u32,
    },
    /// {λ}_α: cross out staircase outer corners indexed by I_{n+1}(α).
    Outer {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        r: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Horn,
    Symmetric,
    #[value(name = "type-c")]
    TypeC,
    #[value(name = "type-d")]
    TypeD,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TablesArg {
    Oracle,
    Recursive,
}

impl From<TablesArg> for TableMethod {
    fn from(value: TablesArg) -> TableMethod {
        match value {
            TablesArg::Oracle => TableMethod::Oracle,
            TablesArg::Recursive => TableMethod::Recursive,
        }
    }
}

#[derive(Debug, Subcommand)]
enum FeasibleCmd {
    /// Triples of partitions in an n×m rectangle.
    Rect {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        /// oracle | horn | symmetric.
        #[arg(long, value_enum, default_value_t = MethodArg::Horn)]
        method: MethodArg,
        #[command(flatten)]
        common: FeasibleCommon,
    },
    /// Triples of strict partitions in the staircase Λ_n.
    Staircase {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        /// oracle | type-c | type-d.
        #[arg(long, value_enum, default_value_t = MethodArg::TypeC)]
        method: MethodArg,
        #[command(flatten)]
        common: FeasibleCommon,
    },
}

#[derive(Debug, Args)]
struct FeasibleCommon {
    /// Where the indexing tables come from.
    #[arg(long, value_enum, default_value_t = TablesArg::Oracle)]
    tables: TablesArg,
    /// Stop at the first violated constraint.
    #[arg(long)]
    fail_fast: bool,
    /// Exit with status 1 when the triple is infeasible.
    #[arg(long)]
    fail_on_infeasible: bool,
}

#[derive(Debug, Subcommand)]
enum InequalitiesCmd {
    Classical {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = TablesArg::Oracle)]
        tables: TablesArg,
    },
    Symmetric {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = TablesArg::Oracle)]
        tables: TablesArg,
    },
    #[command(name = "type-c")]
    TypeC {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = TablesArg::Oracle)]
        tables: TablesArg,
    },
    #[command(name = "type-d")]
    TypeD {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = TablesArg::Oracle)]
        tables: TablesArg,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Sweep every triple in an n×m rectangle.
    Rect {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Comma-separated systems: classical, symmetric.
        #[arg(long, value_delimiter = ',', default_value = "classical")]
        systems: Vec<String>,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Sweep every strict triple in the staircase Λ_n.
    Staircase {
        #[arg(long)]
        n: u32,
        /// Comma-separated systems: type-c, type-d.
        #[arg(long, value_delimiter = ',', default_value = "type-c,type-d")]
        systems: Vec<String>,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Check the frozen reference values for index sets and statistics.
    Fixtures,
}

#[derive(Debug, Args)]
struct VerifyCommon {
    /// Refuse sweeps with more ordered triples than this.
    #[arg(long, default_value_t = 1_000_000)]
    max_triples: u64,
    /// Refuse staircase sweeps beyond this side length.
    #[arg(long, default_value_t = 5)]
    max_side: u32,
    /// Only sweep triples meeting the homogeneity weight condition.
    #[arg(long)]
    weight_filter: bool,
    #[arg(long, value_enum, default_value_t = TablesArg::Oracle)]
    tables: TablesArg,
}

/// Parses `args` and runs the selected subcommand, returning the process
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            if err.is_internal() {
                3
            } else {
                2
            }
        }
    }
}

fn execute(cli: Cli) -> Result<i32, Error> {
    let threads = cli
        .threads
        .or_else(|| std::env::var(ENV_THREADS).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(0);
    let outcome = if threads > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| dispatch(&cli))?
    } else {
        dispatch(&cli)?
    };
    match cli.out {
        Some(path) => fs::write(&path, outcome.text).map_err(|e| Error::Internal(format!(
            "cannot write {}: {e}",
            path.display()
        )))?,
        None => print!("{}", outcome.text),
    }
    Ok(outcome.code)
}

struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let engine = HornEngine::new();
    match &cli.command {
        Command::Coeff { kind } => run_coeff(&engine, kind, cli.format),
        Command::Stat { kind } => run_stat(kind, cli.format),
        Command::Feasible { kind } => run_feasible(&engine, kind, cli.format),
        Command::Inequalities { kind } => run_inequalities(&engine, kind, cli.format),
        Command::Verify { kind } => run_verify(&engine, kind, cli.format),
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffDoc {
    coefficient: u64,
    input: CoeffInput,
}

#[derive(Serialize, Deserialize)]
struct CoeffInput {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    shape: Option<String>,
    lambda: Partition,
    mu: Partition,
    nu: Partition,
}

fn run_coeff(engine: &HornEngine, cmd: &CoeffCmd, format: Format) -> Result<Outcome, Error> {
    let oracle = engine.oracle();
    let (kind, shape, lambda, mu, nu, value) = match cmd {
        CoeffCmd::A(t) => {
            let value = oracle.lr_a(&t.lambda, &t.mu, &t.nu)?;
            ("a", None, &t.lambda, &t.mu, &t.nu, value)
        }
        CoeffCmd::C(t) => {
            let (l, m, n) = strict_triple(&t.lambda, &t.mu, &t.nu)?;
            let value = oracle.lr_c(&l, &m, &n)?;
            ("c", None, &t.lambda, &t.mu, &t.nu, value)
        }
        CoeffCmd::D(t) => {
            let (l, m, n) = strict_triple(&t.lambda, &t.mu, &t.nu)?;
            let value = oracle.lr_d(&l, &m, &n)?;
            ("d", None, &t.lambda, &t.mu, &t.nu, value)
        }
        CoeffCmd::SymA(t) => {
            let rect = Rectangle::new(t.n, t.m)?;
            let value = oracle.sym_a(&t.lambda, &t.mu, &t.nu, rect)?;
            ("sym-a", Some(rect.to_string()), &t.lambda, &t.mu, &t.nu, value)
        }
        CoeffCmd::SymC(t) => {
            let stair = Staircase::new(t.n)?;
            let (l, m, n) = strict_triple(&t.lambda, &t.mu, &t.nu)?;
            let value = oracle.sym_c(&l, &m, &n, stair)?;
            ("sym-c", Some(stair.to_string()), &t.lambda, &t.mu, &t.nu, value)
        }
        CoeffCmd::SymD(t) => {
            let stair = Staircase::new(t.n)?;
            let (l, m, n) = strict_triple(&t.lambda, &t.mu, &t.nu)?;
            let value = oracle.sym_d(&l, &m, &n, stair)?;
            ("sym-d", Some(stair.to_string()), &t.lambda, &t.mu, &t.nu, value)
        }
    };
    let text = match format {
        Format::Human => format!("{value}\n"),
        Format::Json => {
            let doc = CoeffDoc {
                coefficient: value,
                input: CoeffInput {
                    kind: kind.to_string(),
                    shape,
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    nu: nu.clone(),
                },
            };
            format!("{}\n", serde_json::to_string(&doc).expect("serializable"))
        }
        Format::Csv => format!("coefficient\n{value}\n"),
    };
    Ok(Outcome::ok(text))
}

fn strict_triple(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<(StrictPartition, StrictPartition, StrictPartition), Error> {
    Ok((
        StrictPartition::from_partition(lambda.clone())?,
        StrictPartition::from_partition(mu.clone())?,
        StrictPartition::from_partition(nu.clone())?,
    ))
}

#[derive(Serialize, Deserialize)]
struct StatDoc {
    value: u64,
    input: StatInput,
}

#[derive(Serialize, Deserialize)]
struct StatInput {
    kind: String,
    n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    lambda: Partition,
    alpha: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_prime: Option<Partition>,
    r: u32,
}

fn run_stat(cmd: &StatCmd, format: Format) -> Result<Outcome, Error> {
    let (value, diagram, input) = match cmd {
        StatCmd::Rows { n, m, lambda, alpha, r } => {
            let rect = Rectangle::new(*n, *m)?;
            let value = rows_stat(lambda, rect, alpha, *r)?;
            let crossings = rows_crossings(alpha, rect, *r)?;
            (
                value,
                render_rect(lambda, rect, &crossings),
                StatInput {
                    kind: "rows".into(),
                    n: *n,
                    m: Some(*m),
                    lambda: lambda.clone(),
                    alpha: alpha.clone(),
                    alpha_prime: None,
                    r: *r,
                },
            )
        }
        StatCmd::RowsCols { n, m, lambda, alpha, alpha_prime, r } => {
            let rect = Rectangle::new(*n, *m)?;
            let value = rows_cols_stat(lambda, rect, alpha, alpha_prime, *r)?;
            let crossings = rows_cols_crossings(alpha, alpha_prime, rect, *r)?;
            (
                value,
                render_rect(lambda, rect, &crossings),
                StatInput {
                    kind: "rows-cols".into(),
                    n: *n,
                    m: Some(*m),
                    lambda: lambda.clone(),
                    alpha: alpha.clone(),
                    alpha_prime: Some(alpha_prime.clone()),
                    r: *r,
                },
            )
        }
        StatCmd::Inner { n, lambda, alpha, r } => {
            let stair = Staircase::new(*n)?;
            let strict = StrictPartition::from_partition(lambda.clone())?;
            let value = inner_corner_stat(&strict, stair, alpha, *r)?;
            let crossings = inner_crossings(alpha, stair, *r)?;
            (
                value,
                render_staircase(&strict, stair, &crossings),
                StatInput {
                    kind: "inner".into(),
                    n: *n,
                    m: None,
                    lambda: lambda.clone(),
                    alpha: alpha.clone(),
                    alpha_prime: None,
                    r: *r,
                },
            )
        }
        StatCmd::Outer { n, lambda, alpha, r } => {
            let stair = Staircase::new(*n)?;
            let strict = StrictPartition::from_partition(lambda.clone())?;
            let value = outer_corner_stat(&strict, stair, alpha, *r)?;
            let crossings = outer_crossings(alpha, stair, *r)?;
            (
                value,
                render_staircase(&strict, stair, &crossings),
                StatInput {
                    kind: "outer".into(),
                    n: *n,
                    m: None,
                    lambda: lambda.clone(),
                    alpha: alpha.clone(),
                    alpha_prime: None,
                    r: *r,
                },
            )
        }
    };
    let text = match format {
        Format::Human => format!("{value}\n{diagram}"),
        Format::Json => {
            let doc = StatDoc { value, input };
            format!("{}\n", serde_json::to_string(&doc).expect("serializable"))
        }
        Format::Csv => format!("value\n{value}\n"),
    };
    Ok(Outcome::ok(text))
}

/// Draws λ in the upper right of the rectangle: `#` surviving λ box, `x`
/// crossed λ box, `.` surviving empty box, `-` crossed empty box. Rows are
/// labelled with their Cartesian numbers.
fn render_rect(lambda: &Partition, rect: Rectangle, crossings: &Crossings) -> String {
    let (n, m) = (rect.rows(), rect.cols());
    let mut out = String::new();
    for i in 1..=n {
        let cartesian = n + 1 - i;
        let row_crossed = crossings.rows.contains(&i);
        let _ = write!(out, "{cartesian:>3} ");
        let lam = lambda.part((i - 1) as usize);
        for c in 1..=m {
            let in_lambda = c > m - lam;
            let crossed = row_crossed || crossings.cols.contains(&c);
            out.push(cell_char(in_lambda, crossed));
            out.push(' ');
        }
        out.push('\n');
    }
    if !crossings.cols.is_empty() {
        let _ = write!(out, "    ");
        for c in 1..=m {
            let _ = write!(out, "{} ", c % 10);
        }
        out.push('\n');
    }
    out
}

/// Draws λ in the upper right of the staircase; same legend as
/// [`render_rect`], with column numbers underneath.
fn render_staircase(lambda: &StrictPartition, stair: Staircase, crossings: &Crossings) -> String {
    let n = stair.side();
    let mut out = String::new();
    for i in 1..=n {
        let width = n + 1 - i;
        let row_crossed = crossings.rows.contains(&i);
        let _ = write!(out, "{i:>3} ");
        let lam = lambda.part((i - 1) as usize);
        for c in 1..=width {
            let in_lambda = c > width - lam;
            let crossed = row_crossed || crossings.cols.contains(&c);
            out.push(cell_char(in_lambda, crossed));
            out.push(' ');
        }
        out.push('\n');
    }
    let _ = write!(out, "    ");
    for c in 1..=n {
        let _ = write!(out, "{} ", c % 10);
    }
    out.push('\n');
    out
}

fn cell_char(in_lambda: bool, crossed: bool) -> char {
    match (in_lambda, crossed) {
        (true, false) => '#',
        (true, true) => 'x',
        (false, false) => '.',
        (false, true) => '-',
    }
}

#[derive(Serialize, Deserialize)]
struct VerdictDoc {
    feasible: bool,
    witnesses: Vec<Witness>,
    input: VerdictInput,
}

#[derive(Serialize, Deserialize)]
struct VerdictInput {
    kind: String,
    shape: String,
    lambda: Partition,
    mu: Partition,
    nu: Partition,
    method: String,
}

fn run_feasible(engine: &HornEngine, cmd: &FeasibleCmd, format: Format) -> Result<Outcome, Error> {
    let (verdict, input, fail_on_infeasible) = match cmd {
        FeasibleCmd::Rect { n, m, lambda, mu, nu, method, common } => {
            let rect = Rectangle::new(*n, *m)?;
            let opts = CheckOptions {
                tables: common.tables.into(),
                fail_fast: common.fail_fast,
            };
            let verdict = match method {
                MethodArg::Oracle => engine.oracle_rect_verdict(lambda, mu, nu, rect, &opts)?,
                MethodArg::Horn => engine.classical_horn_feasible(lambda, mu, nu, rect, &opts)?,
                MethodArg::Symmetric => {
                    engine.symmetric_horn_feasible(lambda, mu, nu, rect, &opts)?
                }
                _ => {
                    return Err(Error::Usage(
                        "rect accepts methods oracle, horn, symmetric".to_string(),
                    ))
                }
            };
            (
                verdict,
                VerdictInput {
                    kind: "rect".into(),
                    shape: rect.to_string(),
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    nu: nu.clone(),
                    method: method_name(*method).into(),
                },
                common.fail_on_infeasible,
            )
        }
        FeasibleCmd::Staircase { n, lambda, mu, nu, method, common } => {
            let stair = Staircase::new(*n)?;
            let (l, m, v) = strict_triple(lambda, mu, nu)?;
            let opts = CheckOptions {
                tables: common.tables.into(),
                fail_fast: common.fail_fast,
            };
            let verdict = match method {
                MethodArg::Oracle => engine.oracle_staircase_verdict(&l, &m, &v, stair, &opts)?,
                MethodArg::TypeC => engine.type_c_feasible(&l, &m, &v, stair, &opts)?,
                MethodArg::TypeD => engine.type_d_feasible(&l, &m, &v, stair, &opts)?,
                _ => {
                    return Err(Error::Usage(
                        "staircase accepts methods oracle, type-c, type-d".to_string(),
                    ))
                }
            };
            (
                verdict,
                VerdictInput {
                    kind: "staircase".into(),
                    shape: stair.to_string(),
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    nu: nu.clone(),
                    method: method_name(*method).into(),
                },
                common.fail_on_infeasible,
            )
        }
    };
    let code = if !verdict.feasible && fail_on_infeasible {
        1
    } else {
        0
    };
    let text = match format {
        Format::Human => render_verdict_human(&verdict),
        Format::Json => {
            let doc = VerdictDoc {
                feasible: verdict.feasible,
                witnesses: verdict.witnesses,
                input,
            };
            format!("{}\n", serde_json::to_string(&doc).expect("serializable"))
        }
        Format::Csv => render_witnesses_csv(&verdict),
    };
    Ok(Outcome { text, code })
}

fn method_name(method: MethodArg) -> &'static str {
    match method {
        MethodArg::Oracle => "oracle",
        MethodArg::Horn => "horn",
        MethodArg::Symmetric => "symmetric",
        MethodArg::TypeC => "type-c",
        MethodArg::TypeD => "type-d",
    }
}

fn render_verdict_human(verdict: &FeasibilityVerdict) -> String {
    if verdict.feasible {
        return "feasible\n".to_string();
    }
    let mut out = String::from("infeasible\n");
    for w in &verdict.witnesses {
        match w.kind {
            WitnessKind::Homogeneity => {
                let _ = writeln!(out, "  homogeneity: weight sum {} != {}", w.lhs, w.bound);
            }
            WitnessKind::Inequality => {
                let _ = writeln!(
                    out,
                    "  inequality r={}: {} > {} at {}",
                    w.r,
                    w.lhs,
                    w.bound,
                    format_triples(&w.triples)
                );
            }
        }
    }
    out
}

fn format_triples(triples: &[(Partition, Partition, Partition)]) -> String {
    triples
        .iter()
        .map(|(a, b, c)| format!("({a} | {b} | {c})"))
        .collect::<Vec<_>>()
        .join(" x ")
}

fn render_witnesses_csv(verdict: &FeasibilityVerdict) -> String {
    let mut out = String::from("feasible,kind,r,triples,lhs,bound\n");
    if verdict.feasible {
        out.push_str("true,,,,,\n");
        return out;
    }
    for w in &verdict.witnesses {
        let kind = match w.kind {
            WitnessKind::Homogeneity => "homogeneity",
            WitnessKind::Inequality => "inequality",
        };
        let triples = w
            .triples
            .iter()
            .map(|(a, b, c)| format!("{a}|{b}|{c}"))
            .collect::<Vec<_>>()
            .join(";");
        let _ = writeln!(out, "false,{kind},{},{triples},{},{}", w.r, w.lhs, w.bound);
    }
    out
}

fn run_inequalities(
    engine: &HornEngine,
    cmd: &InequalitiesCmd,
    format: Format,
) -> Result<Outcome, Error> {
    let descriptors: Vec<InequalityDescriptor> = match cmd {
        InequalitiesCmd::Classical { n, m, tables } => engine.list_rect_inequalities(
            RectSystem::Classical,
            Rectangle::new(*n, *m)?,
            (*tables).into(),
        )?,
        InequalitiesCmd::Symmetric { n, m, tables } => engine.list_rect_inequalities(
            RectSystem::Symmetric,
            Rectangle::new(*n, *m)?,
            (*tables).into(),
        )?,
        InequalitiesCmd::TypeC { n, tables } => engine.list_staircase_inequalities(
            StairSystem::TypeC,
            Staircase::new(*n)?,
            (*tables).into(),
        )?,
        InequalitiesCmd::TypeD { n, tables } => engine.list_staircase_inequalities(
            StairSystem::TypeD,
            Staircase::new(*n)?,
            (*tables).into(),
        )?,
    };
    let text = match format {
        Format::Human => {
            let mut out = String::new();
            for d in &descriptors {
                let _ = writeln!(out, "r={} bound={} {}", d.r, d.bound, format_triples(&d.triples));
            }
            let _ = writeln!(out, "total: {}", descriptors.len());
            out
        }
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&descriptors).expect("serializable")
        ),
        Format::Csv => {
            let mut out = String::from("r,bound,triples\n");
            for d in &descriptors {
                let triples = d
                    .triples
                    .iter()
                    .map(|(a, b, c)| format!("{a}|{b}|{c}"))
                    .collect::<Vec<_>>()
                    .join(";");
                let _ = writeln!(out, "{},{},{triples}", d.r, d.bound);
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn run_verify(engine: &HornEngine, cmd: &VerifyCmd, format: Format) -> Result<Outcome, Error> {
    let report = match cmd {
        VerifyCmd::Rect { n, m, systems, common } => {
            let systems = parse_rect_systems(systems)?;
            let config = SweepConfig {
                max_triples: common.max_triples,
                max_staircase_side: common.max_side,
                weight_filter: common.weight_filter,
                tables: common.tables.into(),
            };
            sweep_rectangle(engine, Rectangle::new(*n, *m)?, &systems, &config)?
        }
        VerifyCmd::Staircase { n, systems, common } => {
            let systems = parse_stair_systems(systems)?;
            let config = SweepConfig {
                max_triples: common.max_triples,
                max_staircase_side: common.max_side,
                weight_filter: common.weight_filter,
                tables: common.tables.into(),
            };
            sweep_staircase(engine, Staircase::new(*n)?, &systems, &config)?
        }
        VerifyCmd::Fixtures => fixture_check()?,
    };
    let code = if report.disagreements.is_empty() { 0 } else { 3 };
    let text = match format {
        Format::Human => render_report_human(&report),
        Format::Json => format!("{}\n", serde_json::to_string(&report).expect("serializable")),
        Format::Csv => render_report_csv(&report),
    };
    Ok(Outcome { text, code })
}

fn parse_rect_systems(names: &[String]) -> Result<Vec<RectSystem>, Error> {
    names
        .iter()
        .map(|name| match name.as_str() {
            "classical" => Ok(RectSystem::Classical),
            "symmetric" => Ok(RectSystem::Symmetric),
            other => Err(Error::Usage(format!(
                "unknown system {other:?}: rect systems are classical, symmetric"
            ))),
        })
        .collect()
}

fn parse_stair_systems(names: &[String]) -> Result<Vec<StairSystem>, Error> {
    names
        .iter()
        .map(|name| match name.as_str() {
            "type-c" => Ok(StairSystem::TypeC),
            "type-d" => Ok(StairSystem::TypeD),
            other => Err(Error::Usage(format!(
                "unknown system {other:?}: staircase systems are type-c, type-d"
            ))),
        })
        .collect()
}

fn render_report_human(report: &SweepReport) -> String {
    let mut out = format!(
        "shape={} systems={} total={} agree={} disagreements={} ({} ms)\n",
        report.shape,
        report.systems.join(","),
        report.total,
        report.agree,
        report.disagreements.len(),
        report.duration_ms
    );
    for d in &report.disagreements {
        let _ = writeln!(
            out,
            "  ({} | {} | {}) oracle={} failed={}",
            d.lambda,
            d.mu,
            d.nu,
            d.oracle,
            d.failed.join(";")
        );
    }
    out
}

fn render_report_csv(report: &SweepReport) -> String {
    let mut out = String::from("lambda,mu,nu,oracle,failed\n");
    for d in &report.disagreements {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            d.lambda,
            d.mu,
            d.nu,
            d.oracle,
            d.failed.join(";")
        );
    }
    out
}
