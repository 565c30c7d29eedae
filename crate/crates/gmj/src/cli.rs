//! `gmj compute | matrix | verify | show-fixtures`.

use std::ffi::OsString;
use std::io::Write;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;
use gmj_core::eigen::{operator_matrix, transition_table, EigenKind};
use gmj_core::field::FieldMode;
use gmj_core::operators::OperatorKind;
use gmj_core::symspace::{InnerKind, SymSpace};
use serde::Serialize;

use crate::cache::{Cache, Lookup};
use crate::fixtures::FIXTURES;
use crate::json::{element_json, element_text, parse_multipartition, MatrixJson, TableJson};
use crate::verify::{self, LimitParams, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest colour count: Macdonald mode spends two variables on `a`, `b`.
pub const MAX_COLORS: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "gmj", version, about = "Generalized Macdonald and Jack symmetric functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Eigenfunctions in the monomial basis.
    Compute {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_COLORS as u64))]
        n: u64,
        #[arg(long)]
        degree: u32,
        /// A multipartition such as `[[],[1]]`; all eigenfunctions if absent.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Transition table of a kind, or the matrix of an operator.
    Matrix {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_COLORS as u64))]
        n: u64,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum)]
        operator: Option<OperatorArg>,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_COLORS as u64))]
        n: u64,
        #[arg(long)]
        max_degree: u32,
        #[arg(long)]
        beta: Option<String>,
        /// Comma-separated `u'_i`, one per colour.
        #[arg(long)]
        uprimes: Option<String>,
        /// Comma-separated positive `hbar` values.
        #[arg(long)]
        hbars: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = InnerArg::Qt)]
        inner: InnerArg,
    },
    /// Print the reference tables next to the engine's recomputation.
    ShowFixtures,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    Macdonald,
    MacdonaldDual,
    Jack,
    JackDual,
}

impl From<KindArg> for EigenKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Macdonald => EigenKind::MacdonaldP,
            KindArg::MacdonaldDual => EigenKind::MacdonaldPstar,
            KindArg::Jack => EigenKind::JackJ,
            KindArg::JackDual => EigenKind::JackJstar,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorArg {
    X0,
    Hbeta,
    X0Adjoint,
    HbetaAdjoint,
}

impl From<OperatorArg> for OperatorKind {
    fn from(o: OperatorArg) -> Self {
        match o {
            OperatorArg::X0 => OperatorKind::X0,
            OperatorArg::Hbeta => OperatorKind::Hbeta,
            OperatorArg::X0Adjoint => OperatorKind::X0Adjoint,
            OperatorArg::HbetaAdjoint => OperatorKind::HbetaAdjoint,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Triangularity,
    Orthogonality,
    Eigen,
    Limit,
    Nondegeneracy,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerArg {
    Qt,
    Beta,
}

enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
    /// A verification ran and did not pass; its output is already written.
    Verification,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

/// Parses `p/q`, an integer, or a decimal such as `0.25` or `1e-3`.
pub fn parse_rational(s: &str) -> Option<RBig> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: IBig = n.trim().parse().ok()?;
        let d: UBig = d.trim().parse().ok()?;
        return (d != UBig::ZERO).then(|| RBig::from_parts(n, d));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if frac.starts_with(['+', '-']) || (int.is_empty() && frac.is_empty()) {
        return None;
    }
    let digits: IBig = format!("{int}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = UBig::from(10u8).pow(scale.unsigned_abs() as usize);
    Some(if scale >= 0 {
        RBig::from(digits * IBig::from(ten))
    } else {
        RBig::from_parts(digits, ten)
    })
}

fn parse_list(s: &str, what: &str) -> Result<Vec<RBig>, Failure> {
    s.split(',')
        .map(|x| parse_rational(x).ok_or_else(|| Failure::Usage(format!("invalid {what} value `{x}`"))))
        .collect()
}

fn write_json<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(v).context("serializing output")?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn mode_name(mode: FieldMode) -> &'static str {
    mode.name()
}

fn cached<T, F>(cache: &Cache, key: &str, err: &mut dyn Write, valid: impl Fn(&T) -> bool, compute: F) -> Result<T, Failure>
where
    T: Serialize + serde::de::DeserializeOwned,
    F: FnOnce() -> anyhow::Result<T>,
{
    match cache.load(key, valid) {
        Lookup::Hit(v) => return Ok(v),
        Lookup::Miss => {}
        Lookup::Corrupt(msg) => writeln!(err, "warning: corrupt cache entry {msg}; recomputing")?,
    }
    let v = compute()?;
    if let Err(e) = cache.store(key, &v) {
        writeln!(err, "warning: could not write cache entry {key}: {e}")?;
    }
    Ok(v)
}

fn table_doc(cache: &Cache, kind: EigenKind, n: usize, d: u32, err: &mut dyn Write) -> Result<TableJson, Failure> {
    let vars = kind.vars(n);
    let key = Cache::key(kind.name(), n, d, mode_name(vars.mode()));
    cached(
        cache,
        &key,
        err,
        |t: &TableJson| t.n == n && t.degree == d && t.is_well_formed(&vars, kind.name()),
        || {
            let t = transition_table(kind, n, d).with_context(|| format!("{} table, N={n}, degree {d}", kind.name()))?;
            Ok(TableJson::from(&t))
        },
    )
}

fn operator_doc(cache: &Cache, op: OperatorKind, n: usize, d: u32, err: &mut dyn Write) -> Result<MatrixJson, Failure> {
    let vars = gmj_core::field::VarSet::new(op.mode(), n);
    let key = Cache::key(op.name(), n, d, mode_name(op.mode()));
    cached(
        cache,
        &key,
        err,
        |m: &MatrixJson| m.n == n && m.degree == d && m.is_well_formed(&vars, op.name()),
        || {
            let space = SymSpace::new(n, d);
            let m = match op {
                OperatorKind::X0 => operator_matrix(EigenKind::MacdonaldP, &space)?,
                OperatorKind::X0Adjoint => operator_matrix(EigenKind::MacdonaldPstar, &space)?,
                OperatorKind::Hbeta => operator_matrix(EigenKind::JackJ, &space)?,
                OperatorKind::HbetaAdjoint => operator_matrix(EigenKind::JackJstar, &space)?,
                _ => unreachable!("not selectable from the command line"),
            };
            Ok(MatrixJson::from(&m))
        },
    )
}

struct ComputeRequest<'a> {
    kind: EigenKind,
    n: usize,
    d: u32,
    lambda: Option<&'a str>,
    format: Format,
}

fn compute(cache: &Cache, req: ComputeRequest, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let ComputeRequest { kind, n, d, lambda, format } = req;
    let label = lambda
        .map(|s| parse_multipartition(s, n, d).map_err(|e| Failure::Usage(e.to_string())))
        .transpose()?;
    let table = table_doc(cache, kind, n, d, err)?;
    let vars = kind.vars(n);
    let space = SymSpace::new(n, d);
    let labels = match &label {
        Some(l) => vec![l.clone()],
        None => space.labels(kind.order()).to_vec(),
    };
    if label.is_none() && format == Format::Json {
        return write_json(out, &table);
    }
    let mut elements = Vec::new();
    for l in &labels {
        let e = table
            .element(&vars, l)
            .with_context(|| format!("reading the eigenfunction of [{l}]"))?;
        elements.push(e);
    }
    match format {
        Format::Json => write_json(out, &element_json(&elements[0], &vars)),
        Format::Text => {
            for e in &elements {
                writeln!(out, "{}", element_text(e, &vars, kind.order()))?;
            }
            Ok(())
        }
    }
}

fn limit_params(n: usize, beta: Option<&str>, uprimes: Option<&str>, hbars: Option<&str>, seed: u64) -> Result<LimitParams, Failure> {
    let beta = match beta {
        Some(s) => parse_rational(s).ok_or_else(|| Failure::Usage(format!("invalid beta `{s}`")))?,
        None => RBig::from(2u8),
    };
    if beta == RBig::ZERO {
        return Err(Failure::Usage("beta must be nonzero".into()));
    }
    let uprimes = match uprimes {
        Some(s) => parse_list(s, "uprimes")?,
        None => (0..n).map(|k| RBig::from_parts(IBig::from(k), UBig::from(2u8))).collect(),
    };
    if uprimes.len() != n {
        return Err(Failure::Usage(format!("expected {n} uprimes, found {}", uprimes.len())));
    }
    let hbars = parse_list(hbars.unwrap_or("1e-2,1e-3,1e-4"), "hbars")?;
    if hbars.iter().any(|h| h <= &RBig::ZERO) {
        return Err(Failure::Usage("hbars must be positive".into()));
    }
    Ok(LimitParams { beta, uprimes, hbars, seed })
}

fn show_fixtures(out: &mut dyn Write) -> Result<(), Failure> {
    let mut all_equal = true;
    for f in &FIXTURES {
        let vars = f.vars();
        let expected = f.matrix().with_context(|| format!("parsing fixture {}", f.name))?;
        let table = transition_table(f.kind, f.n, f.degree).with_context(|| format!("recomputing {}", f.name))?;
        let strings = f.strings();
        let dim = f.dim();
        writeln!(out, "{} ({}, N={}, degree {}): {dim}x{dim}", f.name, f.kind.name(), f.n, f.degree)?;
        let mut mismatches = 0;
        for i in 0..dim {
            for j in 0..dim {
                let got = &table.rows[i][j];
                let equal = table.rows.len() == dim && got.equals(&expected[i][j]);
                if !equal {
                    mismatches += 1;
                }
                if j > i || !equal {
                    writeln!(out, "  [{i}][{j}] fixture: {}", strings[i][j])?;
                    writeln!(out, "         engine:  {}", vars.format(got))?;
                    writeln!(out, "         {}", if equal { "equal" } else { "DIFFERENT" })?;
                    if let Some(e) = f.errata.iter().find(|e| (e.row, e.col) == (i, j)) {
                        let corrected = vars.parse(e.corrected).context("parsing erratum")?;
                        writeln!(out, "         erratum: {}", e.reason)?;
                        writeln!(out, "         corrected: {}", e.corrected)?;
                        writeln!(
                            out,
                            "         engine equals corrected: {}",
                            if got.equals(&corrected) { "yes" } else { "no" }
                        )?;
                    }
                }
            }
        }
        writeln!(
            out,
            "{}: {}",
            f.name,
            if mismatches == 0 { "all entries equal".to_owned() } else { format!("{mismatches} entries differ") }
        )?;
        all_equal &= mismatches == 0;
    }
    writeln!(out, "{}", if all_equal { "all fixtures match" } else { "fixture mismatch" })?;
    if all_equal {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn report(out: &mut dyn Write, r: &Report) -> Result<(), Failure> {
    write_json(out, r)?;
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn dispatch(cli: Cli, cache: &Cache, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Compute { kind, n, degree, lambda, format } => {
            let req = ComputeRequest { kind: kind.into(), n: n as usize, d: degree, lambda: lambda.as_deref(), format };
            compute(cache, req, out, err)
        }
        Command::Matrix { kind, n, degree, operator } => {
            let kind = EigenKind::from(kind);
            let n = n as usize;
            match operator {
                None => write_json(out, &table_doc(cache, kind, n, degree, err)?),
                Some(op) => {
                    let op = OperatorKind::from(op);
                    if op.mode() != kind.vars(n).mode() {
                        return Err(Failure::Usage(format!(
                            "operator {} does not act on the {} coefficient field",
                            op.name(),
                            kind.name()
                        )));
                    }
                    write_json(out, &operator_doc(cache, op, n, degree, err)?)
                }
            }
        }
        Command::Verify { suite, n, max_degree, beta, uprimes, hbars, seed, inner } => {
            let n = n as usize;
            let r = match suite {
                Suite::Triangularity => verify::verify_triangularity(n, max_degree),
                Suite::Orthogonality => {
                    let inner = match inner {
                        InnerArg::Qt => InnerKind::Qt,
                        InnerArg::Beta => InnerKind::Beta,
                    };
                    verify::verify_orthogonality(n, max_degree, inner)
                }
                Suite::Eigen => verify::verify_eigen(n, max_degree),
                Suite::Nondegeneracy => verify::verify_nondegeneracy(n, max_degree),
                Suite::Limit => {
                    let p = limit_params(n, beta.as_deref(), uprimes.as_deref(), hbars.as_deref(), seed)?;
                    verify::verify_limit(n, max_degree, &p)
                }
            };
            report(out, &r)
        }
        Command::ShowFixtures => show_fixtures(out),
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code: 0 success, 1 failed verification or computation error,
/// 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_cache(args, &Cache::from_env(), out, err)
}

/// [`run`] with an explicit cache instead of the one named by `GMJ_CACHE_DIR`.
pub fn run_with_cache<I, T>(args: I, cache: &Cache, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli, cache, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_FAIL,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_FAIL
        }
    }
}
