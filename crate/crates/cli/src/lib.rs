//! Command-line front end for the hermitia toolkit.
//!
//! [`run_command`] parses an argument vector, runs the requested jobs and
//! writes the result to the given streams, returning the process exit code:
//! 0 on success, 2 on invalid input, 3 when a budget ran out, 1 otherwise.

use std::io::Write;
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use hermitia::gf::field_for_q;
use hermitia::groebner::{buchberger, GroebnerBasis};
use hermitia::hermitian::{
    build_curve, code_parameters, codeword_from_support, CurveContext,
};
use hermitia::mwcount::{count_min_weight_with, line_union_codeword, parameter_system, CountOptions, Method};
use hermitia::oracle::{assignment_count_with, exhaustive_min_weight_with, OracleBudget};
use hermitia::poly::{Polynomial, Ring, TermOrder};
use hermitia::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    BudgetExceeded,
    InvalidM,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => EXIT_OK,
            Status::BudgetExceeded => EXIT_BUDGET,
            Status::InvalidM => EXIT_INVALID,
            Status::Error => EXIT_INTERNAL,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::BudgetExceeded => "budget_exceeded",
            Status::InvalidM => "invalid_m",
            Status::Error => "error",
        }
    }
}

/// One `(q, m, method)` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub q: u32,
    pub m: u32,
    pub phase: Option<u8>,
    pub d: Option<u32>,
    pub k: Option<u32>,
    pub mw: Option<u64>,
    pub method: String,
    pub elapsed_ms: u64,
    pub status: Status,
}

#[derive(Parser, Debug)]
#[command(name = "hermitia", version, about = "Minimum-weight codewords of Hermitian codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Phase, distance and dimension of C_m.
    Params(Common),
    /// Count minimum-weight codewords with the Groebner-basis pipeline.
    Count(Common),
    /// Count minimum-weight codewords by brute force.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: OracleMode,
        /// Report progress on stderr.
        #[arg(long)]
        progress: bool,
    },
    /// Build a minimum-weight codeword from a union of lines.
    SampleCodeword(Common),
    /// One row per valid m and method.
    Table {
        #[command(flatten)]
        common: Common,
        /// Comma-separated methods: algorithm1, oracle_exhaustive, oracle_assignment.
        #[arg(long, value_delimiter = ',', default_value = "algorithm1")]
        methods: Vec<MethodArg>,
    },
    /// Dump a Groebner basis.
    Gb {
        #[command(flatten)]
        common: Common,
        /// Semicolon-separated generators in x, y; defaults to the curve ideal.
        #[arg(long)]
        gens: Option<String>,
        #[arg(long, value_enum, default_value = "degrevlex")]
        order: OrderArg,
    },
    /// Time one or more methods over a range of m.
    Bench {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', default_value = "algorithm1")]
        methods: Vec<MethodArg>,
        /// Runs per job; the reported time is the median.
        #[arg(long, default_value_t = 1)]
        repeat: u32,
    },
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    m: Option<u32>,
    /// Inclusive range LO:HI.
    #[arg(long, value_parser = parse_range)]
    m_range: Option<(u32, u32)>,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100_000_000)]
    budget_enum: u128,
    #[arg(long, default_value_t = 600)]
    budget_secs: u64,
    /// Report elapsed_ms as 0 so output is byte-for-byte reproducible.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleMode {
    Exhaustive,
    Assignment,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    #[value(name = "algorithm1")]
    Algorithm1,
    #[value(name = "oracle_exhaustive")]
    OracleExhaustive,
    #[value(name = "oracle_assignment")]
    OracleAssignment,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Algorithm1 => Method::Algorithm1,
            MethodArg::OracleExhaustive => Method::OracleExhaustive,
            MethodArg::OracleAssignment => Method::OracleAssignment,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Weighted,
    Block,
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo = lo.trim().parse::<u32>().map_err(|e| e.to_string())?;
    let hi = hi.trim().parse::<u32>().map_err(|e| e.to_string())?;
    Ok((lo, hi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

impl Common {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Pretty
        }
    }

    fn budget(&self) -> OracleBudget {
        OracleBudget {
            max_enumerations: self.budget_enum,
            max_duration: Duration::from_secs(self.budget_secs),
        }
    }

    /// The requested m values; `None` when neither `--m` nor `--m-range` is set.
    fn ms(&self) -> Option<Vec<u32>> {
        match (self.m, self.m_range) {
            (_, Some((lo, hi))) => Some((lo..=hi).collect()),
            (Some(m), None) => Some(vec![m]),
            (None, None) => None,
        }
    }

    fn is_range(&self) -> bool {
        self.m_range.is_some()
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match status_of(&e) {
            Status::BudgetExceeded => EXIT_BUDGET,
            Status::InvalidM => EXIT_INVALID,
            _ if is_input_error(&e) => EXIT_INVALID,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: e.to_string(),
        }
    }
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::NotPrime(_)
            | Error::InvalidExponent
            | Error::FieldTooLarge(_)
            | Error::Parse(_)
            | Error::UnknownVariable(_)
            | Error::Unsatisfiable { .. }
            | Error::InvalidDivisor(_)
            | Error::XDegreeTooLarge { .. }
            | Error::InfiniteStaircase(_)
    )
}

fn status_of(e: &Error) -> Status {
    match e {
        Error::BudgetExceeded { .. } => Status::BudgetExceeded,
        Error::InvalidM { .. } | Error::UnsupportedPhase { .. } | Error::NoDecomposition { .. } => {
            Status::InvalidM
        }
        _ => Status::Error,
    }
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run_command<W: Write, E: Write>(argv: &[String], out: &mut W, err: &mut E) -> i32 {
    let args = std::iter::once("hermitia".to_string()).chain(argv.iter().cloned());
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    write!(out, "{e}")
                }
                _ => write!(err, "{e}"),
            };
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn curve(q: u32) -> Result<Arc<CurveContext>, Failure> {
    Ok(build_curve(field_for_q(q)?))
}

fn require_ms(c: &Common) -> Result<Vec<u32>, Failure> {
    c.ms().ok_or_else(|| Failure::invalid("either --m or --m-range is required"))
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        Some(0) => Err(Failure::invalid("--jobs must be positive")),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Failure {
                    code: EXIT_INTERNAL,
                    message: e.to_string(),
                })?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

fn dispatch<W: Write, E: Write>(cmd: Command, out: &mut W, err: &mut E) -> Result<i32, Failure> {
    match cmd {
        Command::Params(c) => params(&c, out),
        Command::Count(c) => {
            let ms = require_ms(&c)?;
            let ctx = curve(c.q)?;
            let records = with_pool(c.jobs, || run_jobs(&ctx, &ms, &[Method::Algorithm1], &c, None))?;
            emit_runs(&records, &c, out)
        }
        Command::Oracle { common, mode, progress } => {
            let ms = require_ms(&common)?;
            let ctx = curve(common.q)?;
            let method = match mode {
                OracleMode::Exhaustive => Method::OracleExhaustive,
                OracleMode::Assignment => Method::OracleAssignment,
            };
            let report = |f: f64| eprintln!("progress {:.1}%", 100.0 * f);
            let hook: Option<&(dyn Fn(f64) + Sync)> = if progress { Some(&report) } else { None };
            let records = with_pool(common.jobs, || run_jobs(&ctx, &ms, &[method], &common, hook))?;
            emit_runs(&records, &common, out)
        }
        Command::Table { common, methods } => {
            let ms = common.ms().unwrap_or_default();
            let ctx = curve(common.q)?;
            let methods: Vec<Method> = methods.into_iter().map(Method::from).collect();
            let records = with_pool(common.jobs, || run_jobs(&ctx, &ms, &methods, &common, None))?;
            out.write_all(emit_table(&records, &methods, common.format()).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Bench { common, methods, repeat } => {
            let ms = require_ms(&common)?;
            let ctx = curve(common.q)?;
            let methods: Vec<Method> = methods.into_iter().map(Method::from).collect();
            let mut runs: Vec<Vec<RunRecord>> = Vec::new();
            for _ in 0..repeat.max(1) {
                runs.push(with_pool(common.jobs, || run_jobs(&ctx, &ms, &methods, &common, None))?);
            }
            let mut records = runs[0].clone();
            for (i, r) in records.iter_mut().enumerate() {
                let mut times: Vec<u64> = runs.iter().map(|run| run[i].elapsed_ms).collect();
                times.sort_unstable();
                r.elapsed_ms = times[times.len() / 2];
            }
            out.write_all(emit_table(&records, &methods, common.format()).as_bytes())?;
            let _ = writeln!(err, "{} jobs, {} repeat(s)", records.len(), repeat.max(1));
            Ok(worst_exit(&records))
        }
        Command::SampleCodeword(c) => sample_codeword(&c, out),
        Command::Gb { common, gens, order } => gb(&common, gens.as_deref(), order, out),
    }
}

fn params<W: Write>(c: &Common, out: &mut W) -> Result<i32, Failure> {
    let ctx = curve(c.q)?;
    let mut rows = Vec::new();
    for m in require_ms(c)? {
        match code_parameters(&ctx, m) {
            Ok(code) => rows.push(ParamsRow {
                q: c.q,
                m,
                n: code.n(),
                genus: ctx.genus(),
                phase: code.phase(),
                d: code.d(),
                k: code.k(),
                mu: code.decomposition().map(|d| d.mu),
                beta: code.decomposition().map(|d| d.beta),
                lambda: code.decomposition().map(|d| d.lambda),
            }),
            Err(e) if !c.is_range() => return Err(e.into()),
            Err(_) => {}
        }
    }
    match c.format() {
        Format::Json => {
            let text = if c.is_range() {
                serde_json::to_string(&rows)
            } else {
                serde_json::to_string(&rows[0])
            };
            writeln!(out, "{}", text.map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() })?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).map_err(csv_failure)?;
            }
            out.write_all(&w.into_inner().map_err(|e| csv_failure(e.into_error().into()))?)?;
        }
        Format::Pretty => {
            for r in &rows {
                let d = r.d.map_or("?".to_string(), |d| d.to_string());
                write!(out, "q={} m={} n={} g={} phase {} d={} k={}", r.q, r.m, r.n, r.genus, r.phase, d, r.k)?;
                if let (Some(mu), Some(beta), Some(lambda)) = (r.mu, r.beta, r.lambda) {
                    write!(out, " mu={mu} beta={beta} lambda={lambda}")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ParamsRow {
    q: u32,
    m: u32,
    n: u32,
    genus: u32,
    phase: u8,
    d: Option<u32>,
    k: u32,
    mu: Option<u32>,
    beta: Option<u32>,
    lambda: Option<u32>,
}

fn csv_failure(e: csv::Error) -> Failure {
    Failure {
        code: EXIT_INTERNAL,
        message: e.to_string(),
    }
}

/// Runs one job per `(m, method)`, in parallel, returning records in
/// `(m, method)` order.
fn run_jobs(
    ctx: &Arc<CurveContext>,
    ms: &[u32],
    methods: &[Method],
    c: &Common,
    progress: Option<&(dyn Fn(f64) + Sync)>,
) -> Vec<RunRecord> {
    let jobs: Vec<(u32, Method)> = ms
        .iter()
        .flat_map(|&m| methods.iter().map(move |&meth| (m, meth)))
        .collect();
    jobs.par_iter()
        .map(|&(m, method)| {
            let mut r = run_job(ctx, m, method, c.budget(), progress);
            if c.no_timing {
                r.elapsed_ms = 0;
            }
            r
        })
        .collect()
}

/// Runs a single method on `C_m` and records the outcome.
pub fn run_job(
    ctx: &Arc<CurveContext>,
    m: u32,
    method: Method,
    budget: OracleBudget,
    progress: Option<&(dyn Fn(f64) + Sync)>,
) -> RunRecord {
    let q = ctx.q();
    let mut record = RunRecord {
        q,
        m,
        phase: None,
        d: None,
        k: None,
        mw: None,
        method: method.as_str().to_string(),
        elapsed_ms: 0,
        status: Status::Ok,
    };
    let start = std::time::Instant::now();
    let code = match code_parameters(ctx, m) {
        Ok(code) => code,
        Err(e) => {
            record.status = status_of(&e);
            return record;
        }
    };
    record.phase = Some(code.phase());
    record.d = code.d();
    record.k = Some(code.k());
    let result = match method {
        Method::Algorithm1 => count_min_weight_with(
            ctx,
            m,
            CountOptions {
                max_duration: Some(budget.max_duration),
            },
        ),
        Method::OracleExhaustive => exhaustive_min_weight_with(&code, budget, progress),
        Method::OracleAssignment => assignment_count_with(&code, budget, progress),
    };
    record.elapsed_ms = start.elapsed().as_millis() as u64;
    match result {
        Ok(r) => {
            record.mw = Some(r.mw_count);
            if method == Method::OracleExhaustive {
                record.d = Some(r.d);
            }
        }
        Err(e) => record.status = status_of(&e),
    }
    record
}

fn worst_exit(records: &[RunRecord]) -> i32 {
    let has = |s: Status| records.iter().any(|r| r.status == s);
    if has(Status::Error) {
        EXIT_INTERNAL
    } else if has(Status::BudgetExceeded) {
        EXIT_BUDGET
    } else if has(Status::InvalidM) {
        EXIT_INVALID
    } else {
        EXIT_OK
    }
}

fn emit_runs<W: Write>(records: &[RunRecord], c: &Common, out: &mut W) -> Result<i32, Failure> {
    match c.format() {
        Format::Json if !c.is_range() && records.len() == 1 => {
            writeln!(out, "{}", record_json(&records[0]))?;
        }
        f => {
            let methods: Vec<Method> = dedup_methods(records);
            out.write_all(emit_table(records, &methods, f).as_bytes())?;
        }
    }
    if !c.is_range() {
        if let Some(r) = records.iter().find(|r| r.status != Status::Ok) {
            return Err(Failure {
                code: r.status.exit_code(),
                message: format!("q={} m={} {}: {}", r.q, r.m, r.method, r.status.as_str()),
            });
        }
    }
    Ok(worst_exit(records))
}

fn dedup_methods(records: &[RunRecord]) -> Vec<Method> {
    let mut out = Vec::new();
    for r in records {
        let m = method_from_str(&r.method);
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

fn method_from_str(s: &str) -> Method {
    match s {
        "oracle_exhaustive" => Method::OracleExhaustive,
        "oracle_assignment" => Method::OracleAssignment,
        _ => Method::Algorithm1,
    }
}

pub fn record_json(r: &RunRecord) -> String {
    serde_json::to_string(r).expect("records serialize")
}

/// Renders records as a JSON array, CSV, or an aligned text table with
/// columns `m, d, mw` followed by one elapsed column per method.
pub fn emit_table(records: &[RunRecord], methods: &[Method], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(records).expect("records serialize") + "\n",
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
            w.write_record(["q", "m", "phase", "d", "k", "mw", "method", "elapsed_ms", "status"])
                .expect("in-memory write");
            for r in records {
                w.serialize(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf8")
        }
        Format::Pretty => pretty_table(records, methods),
    }
}

fn pretty_table(records: &[RunRecord], methods: &[Method]) -> String {
    let mut header = vec!["m".to_string(), "d".to_string(), "mw".to_string()];
    header.extend(methods.iter().map(|m| format!("{m} ms")));
    let mut rows = vec![header];
    let mut ms: Vec<u32> = records.iter().map(|r| r.m).collect();
    ms.dedup();
    for m in ms {
        let group: Vec<&RunRecord> = records.iter().filter(|r| r.m == m).collect();
        let d = group.iter().find_map(|r| r.d).map_or("-".to_string(), |d| d.to_string());
        let mut mws: Vec<u64> = group.iter().filter_map(|r| r.mw).collect();
        mws.dedup();
        let mw = match mws.as_slice() {
            [] => group
                .iter()
                .map(|r| r.status.as_str())
                .find(|s| *s != "ok")
                .unwrap_or("-")
                .to_string(),
            [v] => v.to_string(),
            many => many.iter().map(u64::to_string).collect::<Vec<_>>().join("/"),
        };
        let mut row = vec![m.to_string(), d, mw];
        for meth in methods {
            let cell = group
                .iter()
                .find(|r| r.method == meth.as_str())
                .map_or("-".to_string(), |r| match r.status {
                    Status::Ok => r.elapsed_ms.to_string(),
                    s => s.as_str().to_string(),
                });
            row.push(cell);
        }
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|j| rows.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        s.push_str(cells.join("  ").trim_end());
        s.push('\n');
    }
    s
}

fn sample_codeword<W: Write>(c: &Common, out: &mut W) -> Result<i32, Failure> {
    let ctx = curve(c.q)?;
    let m = c.m.ok_or_else(|| Failure::invalid("--m is required"))?;
    let code = code_parameters(&ctx, m)?;
    let (f, div) = line_union_codeword(&code, c.seed)?;
    let word = codeword_from_support(&code, &div)?;
    let points: Vec<(u32, u32)> = div
        .indices()
        .iter()
        .map(|&i| {
            let (x, y) = ctx.points()[i];
            (x.index(), y.index())
        })
        .collect();
    let entries: Vec<u32> = word.entries.iter().map(|e| e.index()).collect();
    if c.json {
        let doc = serde_json::json!({
            "q": c.q,
            "m": m,
            "d": code.d(),
            "seed": c.seed,
            "polynomial": f.to_string(),
            "support": div.indices(),
            "points": points,
            "codeword": entries,
            "weight": word.weight(),
        });
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "F = {f}")?;
        writeln!(out, "support ({} points): {:?}", div.len(), div.indices())?;
        writeln!(out, "points (x, y): {points:?}")?;
        writeln!(out, "codeword (weight {}): {entries:?}", word.weight())?;
    }
    Ok(EXIT_OK)
}

fn gb<W: Write>(c: &Common, gens: Option<&str>, order: OrderArg, out: &mut W) -> Result<i32, Failure> {
    let ctx = curve(c.q)?;
    let (basis, extra): (GroebnerBasis, Vec<Polynomial>) = match (c.m, gens) {
        (Some(m), None) => {
            let code = code_parameters(&ctx, m)?;
            let system = parameter_system(&code, Default::default())?;
            (system.basis, system.equations)
        }
        (_, gens) => {
            let ord = match order {
                OrderArg::Degrevlex => TermOrder::DegRevLex,
                OrderArg::Weighted => TermOrder::Weighted { q: c.q },
                OrderArg::Block => TermOrder::Block,
            };
            let ring = Ring::plane(ctx.field_arc().clone(), ord);
            let polys = match gens {
                Some(text) => text
                    .split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| Polynomial::parse(&ring, s))
                    .collect::<Result<Vec<_>, _>>()?,
                None => ctx.curve_ideal().iter().map(|p| p.in_ring(&ring)).collect(),
            };
            if polys.is_empty() {
                return Err(Failure::invalid("no generators given"));
            }
            (buchberger(&polys, ord)?, Vec::new())
        }
    };
    let staircase = basis.staircase().ok().map(|s| s.len());
    let ring = basis.ring().clone();
    let initial: Vec<String> = basis
        .initial()
        .iter()
        .map(|m| Polynomial::monomial(&ring, *m).to_string())
        .collect();
    let generators: Vec<String> = basis.generators().iter().map(|g| g.to_string()).collect();
    let equations: Vec<String> = extra.iter().map(|g| g.to_string()).collect();
    if c.json {
        let doc = serde_json::json!({
            "order": format!("{:?}", ring.order()),
            "generators": generators,
            "initial": initial,
            "staircase_size": staircase,
            "parameter_equations": equations,
        });
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "order: {:?}", ring.order())?;
        for g in &generators {
            writeln!(out, "{g}")?;
        }
        writeln!(out, "initial ideal: <{}>", initial.join(", "))?;
        if let Some(s) = staircase {
            writeln!(out, "staircase size: {s}")?;
        }
        if !equations.is_empty() {
            writeln!(out, "parameter equations ({}):", equations.len())?;
            for e in &equations {
                writeln!(out, "{e}")?;
            }
        }
    }
    Ok(EXIT_OK)
}
