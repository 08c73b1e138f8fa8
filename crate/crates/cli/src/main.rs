use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rookq::bitrace::{btr_def, btr_matrix_with, dim_rn, hl_inner_matrix, hl_inner_pbasis, regular_char};
use rookq::characters::{CharacterEngine, CharacterTable, Method, TableOrder, TableSpec};
use rookq::identities::identity_suites;
use rookq::par::{self, Execution};
use rookq::seminormal::relations_hold;
use rookq::shapes::{partitions_of, partitions_up_to};
use rookq::{Composition, Error, LaurentPoly, Mismatch, Partition};
use serde_json::{json, Value};

/// Exact characters of the q-rook monoid algebra.
#[derive(Parser)]
#[command(name = "rookq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Character table: rows lambda ⊢ k <= n, columns mu ⊢ n.
    Table {
        #[arg(long)]
        n: usize,
        /// Only rows with |lambda| < n.
        #[arg(long)]
        restrict_lambda_lt_n: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Comma-separated; every listed method is cross-checked.
        #[arg(long, value_delimiter = ',', default_value = "mn")]
        methods: Vec<MethodArg>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = OrderArg::Lex)]
        order: OrderArg,
    },
    /// A single value chi^lambda_mu(q).
    Char {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value = "auto")]
        method: String,
        /// Recompute with every applicable method and compare.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = PlainFormat::Plain)]
        format: PlainFormat,
    },
    /// Bitrace btr(T_mu, T_nu); zero parts are allowed.
    Bitrace {
        #[arg(long)]
        mu: Composition,
        #[arg(long)]
        nu: Composition,
        #[arg(long, value_enum, default_value_t = BitraceMethod::Matrix)]
        method: BitraceMethod,
        #[arg(long, value_enum, default_value_t = PlainFormat::Plain)]
        format: PlainFormat,
    },
    /// Run every consistency check up to weight n.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// dim R_n = sum_i C(n,i)^2 i!.
    Dims {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlainFormat {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Revlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum BitraceMethod {
    Matrix,
    Def,
}

#[derive(Clone, Copy)]
struct MethodArg(Method);

impl FromStr for MethodArg {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        s.parse().map(MethodArg)
    }
}

enum Failure {
    Parse(String),
    Verification(String),
    Other(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MethodMismatch(_) => Failure::Verification(e.to_string()),
            Error::Parse(m) => Failure::Parse(m),
            e => Failure::Other(e),
        }
    }
}

fn poly_json(p: &LaurentPoly) -> Value {
    let int = |s: String| s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s));
    let terms: Vec<Value> = p
        .int_terms()
        .rev()
        .map(|(e, c)| json!([e, int(c.numer().to_string()), int(c.denom().to_string())]))
        .collect();
    json!({"var": p.var().symbol(), "terms": terms})
}

fn record(lambda: &dyn ToString, mu: &dyn ToString, value: &LaurentPoly, method: &str) -> Value {
    json!({
        "lambda": lambda.to_string(),
        "mu": mu.to_string(),
        "value": value.to_string(),
        "method": method,
        "poly": poly_json(value),
    })
}

fn check_weight(n: usize) -> Result<(), Error> {
    let max = rookq::max_weight();
    if n > max {
        return Err(Error::WeightLimit { n, max });
    }
    Ok(())
}

fn table(
    n: usize,
    below_top: bool,
    format: Format,
    methods: Vec<MethodArg>,
    jobs: Option<usize>,
    order: OrderArg,
) -> Result<(), Failure> {
    check_weight(n)?;
    let mut spec = TableSpec::new(n);
    spec.below_top = below_top;
    spec.methods = methods.into_iter().map(|m| m.0).collect();
    spec.order = match order {
        OrderArg::Lex => TableOrder::Lex,
        OrderArg::Revlex => TableOrder::RevLex,
    };
    spec.execution = if jobs == Some(1) {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let engine = CharacterEngine::new();
    let table = par::with_jobs(jobs, || CharacterTable::build(&engine, &spec))?;
    match format {
        Format::Csv => print!("{}", table.to_csv()),
        Format::Latex => print!("{}", table.to_latex()),
        Format::Json => {
            let cells: Vec<Value> = table
                .cells
                .iter()
                .flatten()
                .map(|v| record(&v.lambda, &v.mu, &v.chi, v.method.name()))
                .collect();
            let doc = json!({
                "n": n,
                "rows": table.rows.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "cols": table.cols.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "cells": cells,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    Ok(())
}

fn char_value(
    lambda: Partition,
    mu: Partition,
    method: &str,
    check: bool,
    format: PlainFormat,
) -> Result<(), Failure> {
    check_weight(mu.weight())?;
    let engine = CharacterEngine::new();
    let (value, used) = if method == "auto" {
        engine.chi_auto(&lambda, &mu)?
    } else {
        let m: Method = method.parse()?;
        (engine.chi(&lambda, &mu, m)?, m)
    };
    if check {
        for m in Method::ALL
            .iter()
            .copied()
            .filter(|m| m.applies(&lambda) && *m != used)
        {
            if m == Method::Seminormal && mu.weight() > 6 {
                continue;
            }
            let other = engine.chi(&lambda, &mu, m)?;
            if other != value {
                return Err(Error::MethodMismatch(Box::new(Mismatch {
                    lambda: lambda.to_string(),
                    mu: mu.to_string(),
                    left: used.to_string(),
                    left_value: value.to_string(),
                    right: m.to_string(),
                    right_value: other.to_string(),
                }))
                .into());
            }
        }
    }
    match format {
        PlainFormat::Plain => println!("{}", value),
        PlainFormat::Json => println!("{}", record(&lambda, &mu, &value, used.name())),
    }
    Ok(())
}

fn bitrace(
    mu: Composition,
    nu: Composition,
    method: BitraceMethod,
    format: PlainFormat,
) -> Result<(), Failure> {
    check_weight(mu.weight().max(nu.weight()))?;
    let (value, name) = match method {
        BitraceMethod::Matrix => (
            btr_matrix_with(mu.parts(), nu.parts(), Execution::Parallel)?,
            "matrix",
        ),
        BitraceMethod::Def => (
            btr_def(&CharacterEngine::new(), mu.parts(), nu.parts(), Method::Mn)?,
            "def",
        ),
    };
    match format {
        PlainFormat::Plain => println!("{}", value),
        PlainFormat::Json => println!("{}", record(&mu, &nu, &value, name)),
    }
    Ok(())
}

type Check = (&'static str, Box<dyn Fn() -> Result<Option<String>, Error>>);

fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    f: impl Fn(&T) -> Result<Option<String>, Error>,
) -> Result<Option<String>, Error> {
    for item in items {
        if let Some(msg) = f(&item)? {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

fn verify(n: usize) -> Result<(), Failure> {
    check_weight(n)?;
    let engine = std::sync::Arc::new(CharacterEngine::new());
    let mut checks: Vec<Check> = Vec::new();
    let e = engine.clone();
    checks.push((
        "all character methods agree",
        Box::new(move || {
            first_failure(0..=n, |&k| {
                let mut spec = TableSpec::new(k);
                spec.methods = Method::ALL.to_vec();
                if k > 5 {
                    spec.methods.retain(|m| *m != Method::Seminormal);
                }
                match CharacterTable::build(&e, &spec) {
                    Ok(_) => Ok(None),
                    Err(err @ Error::MethodMismatch(_)) => Ok(Some(err.to_string())),
                    Err(err) => Err(err),
                }
            })
        }),
    ));
    let e = engine.clone();
    checks.push((
        "integral values at q = 1 and chi^∅",
        Box::new(move || {
            first_failure(partitions_of(n), |mu| {
                let empty = e.chi(&Partition::empty(), mu, Method::Mn)?;
                if empty != rookq::characters::chi_empty(mu) {
                    return Ok(Some(format!("chi^[]_{} = {}", mu, empty)));
                }
                first_failure(partitions_up_to(n), |lambda| {
                    let v = e.chi(lambda, mu, Method::Mn)?;
                    let at_one = v.evaluate(&rookq::arith::int(1))?;
                    let want = rookq::characters::chi_at_one(lambda, mu)?;
                    Ok((at_one != rookq::arith::int(want))
                        .then(|| format!("chi^{}_{}(1) = {}, expected {}", lambda, mu, at_one, want)))
                })
            })
        }),
    ));
    let e = engine.clone();
    checks.push((
        "symmetric-function and a/b identities",
        Box::new(move || {
            let failed: Vec<String> = identity_suites(&e, n, Execution::Parallel)
                .into_iter()
                .filter(|s| !s.passed())
                .map(|s| format!("{}: {}", s.name, s.failures.join("; ")))
                .collect();
            Ok((!failed.is_empty()).then(|| failed.join(" | ")))
        }),
    ));
    let e = engine.clone();
    checks.push((
        "bitrace matrix sum equals definition",
        Box::new(move || {
            first_failure(partitions_of(n), |mu| {
                first_failure(partitions_of(n), |nu| {
                    let a = btr_matrix_with(mu.parts(), nu.parts(), Execution::Parallel)?;
                    let b = btr_def(&e, mu.parts(), nu.parts(), Method::Mn)?;
                    Ok((a != b).then(|| format!("btr({}, {}): {} vs {}", mu, nu, a, b)))
                })
            })
        }),
    ));
    checks.push((
        "Hall-Littlewood inner products",
        Box::new(move || {
            first_failure(partitions_of(n), |a| {
                first_failure(partitions_of(n), |b| {
                    let x = hl_inner_matrix(a.parts(), b.parts())?;
                    let y = hl_inner_pbasis(a.parts(), b.parts())?;
                    Ok((x != y).then(|| format!("<{}, {}>: {} vs {}", a, b, x, y)))
                })
            })
        }),
    ));
    let e = engine.clone();
    checks.push((
        "regular character",
        Box::new(move || {
            let ones = vec![1; n];
            let dim = LaurentPoly::from_int(rookq::Var::Q, dim_rn(n) as i64);
            if regular_char(&Partition::ones(n))? != dim {
                return Ok(Some(format!("regular character at 1^{} is not {}", n, dim)));
            }
            first_failure(partitions_of(n), |mu| {
                let a = regular_char(mu)?;
                let b = btr_def(&e, mu.parts(), &ones, Method::Mn)?;
                Ok((a != b).then(|| format!("{}: {} vs {}", mu, a, b)))
            })
        }),
    ));
    checks.push((
        "seminormal quadratic and braid relations",
        Box::new(move || {
            let m = n.min(5);
            first_failure(partitions_up_to(m), |lambda| {
                Ok((!relations_hold(lambda, m)?).then(|| format!("V^{} for n = {}", lambda, m)))
            })
        }),
    ));

    let mut failed = 0;
    for (name, check) in &checks {
        match check() {
            Ok(None) => println!("PASS  {}", name),
            Ok(Some(msg)) => {
                failed += 1;
                println!("FAIL  {}: {}", name, msg);
            }
            Err(err) => {
                failed += 1;
                println!("FAIL  {}: {}", name, err);
            }
        }
    }
    if failed > 0 {
        return Err(Failure::Verification(format!(
            "{} of {} checks failed",
            failed,
            checks.len()
        )));
    }
    println!("all {} checks passed up to n = {}", checks.len(), n);
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Table {
            n,
            restrict_lambda_lt_n,
            format,
            methods,
            jobs,
            order,
        } => table(n, restrict_lambda_lt_n, format, methods, jobs, order),
        Command::Char {
            lambda,
            mu,
            method,
            check,
            format,
        } => char_value(lambda, mu, &method, check, format),
        Command::Bitrace {
            mu,
            nu,
            method,
            format,
        } => bitrace(mu, nu, method, format),
        Command::Verify { n } => verify(n),
        Command::Dims { n } => {
            check_weight(n)?;
            println!("{}", dim_rn(n));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(3);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(3)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {}", e);
            ExitCode::FAILURE
        }
    }
}
