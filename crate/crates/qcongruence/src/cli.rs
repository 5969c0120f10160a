//! Command-line interface: `verify` runs named statement suites, `check`
//! runs ad-hoc congruences from the expression language, `eval` prints one
//! exact value.
//!
//! Exit codes: 0 when every emitted verdict holds, 1 when any fails, 2 on
//! usage, parse, or precondition errors. Results go to stdout, diagnostics
//! to stderr.

use std::ops::RangeInclusive;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::expr::{self, CheckSpec};
use crate::statements::{run_suite, StatementId, SuiteParams, VerificationReport};

#[derive(Parser)]
#[command(
    name = "qcongruence",
    about = "Exact verification of q-congruences modulo cyclotomic polynomial powers",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify a named statement (or `all`) over a range of n.
    Verify {
        /// Statement id, e.g. theorem1, lemma_b2, sun_new6; `all` runs every one.
        statement: String,
        #[command(flatten)]
        common: CommonArgs,
        /// Extra statement parameters as comma-separated key=value pairs
        /// (straub_new5 takes a and b, default a=2,b=1).
        #[arg(long)]
        params: Option<String>,
    },
    /// Check an ad-hoc congruence lhs ≡ rhs (mod m^pow) over a range of n.
    Check {
        /// Left-hand side expression.
        #[arg(long)]
        lhs: String,
        /// Right-hand side expression.
        #[arg(long)]
        rhs: String,
        /// Modulus expression; must evaluate to a monic polynomial.
        #[arg(long = "mod")]
        modulus: String,
        /// Power the modulus is raised to.
        #[arg(long = "pow", default_value_t = 1)]
        power: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Evaluate an expression at a fixed n and print the canonical form.
    Eval {
        /// Expression to evaluate.
        expr: String,
        /// Value of the parameter n.
        #[arg(long, default_value_t = 1)]
        n: i64,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Inclusive range of n, written A..B.
    #[arg(long, value_parser = parse_range)]
    range: Range,
    /// Emit a single JSON array instead of the table.
    #[arg(long)]
    json: bool,
    /// Include the full residual polynomial in the output.
    #[arg(long)]
    verbose: bool,
}

#[derive(Clone, Debug)]
struct Range(i64, i64);

fn parse_range(s: &str) -> Result<Range, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let lo = lo
        .trim()
        .parse::<i64>()
        .map_err(|e| format!("bad range start `{lo}`: {e}"))?;
    let hi = hi
        .trim()
        .parse::<i64>()
        .map_err(|e| format!("bad range end `{hi}`: {e}"))?;
    Ok(Range(lo, hi))
}

fn parse_suite_params(s: &str) -> Result<SuiteParams, String> {
    let mut out = SuiteParams::default();
    for pair in s.split(',') {
        let pair = pair.trim();
        if pair.is_empty() {
            continue;
        }
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got `{pair}`"))?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|e| format!("bad value in `{pair}`: {e}"))?;
        match key.trim() {
            "a" => out.a = value,
            "b" => out.b = value,
            other => return Err(format!("unknown parameter `{other}` (expected a or b)")),
        }
    }
    Ok(out)
}

fn parse_expr_or_exit(label: &str, src: &str) -> Result<expr::ExprAst, i32> {
    expr::parse(src).map_err(|e| {
        eprintln!("error in --{label} expression: {e}");
        2
    })
}

fn emit(reports: &[VerificationReport], json: bool, verbose: bool) -> i32 {
    let all_hold = reports.iter().all(|r| r.holds);
    if json {
        let mut reports = reports.to_vec();
        if !verbose {
            for r in &mut reports {
                r.residual = None;
            }
        }
        println!(
            "{}",
            serde_json::to_string(&reports).expect("reports serialize")
        );
    } else {
        for r in reports {
            println!("{}", r.human_line(verbose));
        }
        let failed = reports.iter().filter(|r| !r.holds).count();
        println!(
            "{} verdicts, {} hold, {} fail",
            reports.len(),
            reports.len() - failed,
            failed
        );
    }
    i32::from(!all_hold)
}

fn run(cli: Cli) -> i32 {
    match cli.cmd {
        Cmd::Verify {
            statement,
            common,
            params,
        } => {
            let ids: Vec<StatementId> = if statement == "all" {
                StatementId::all().to_vec()
            } else {
                match statement.parse::<StatementId>() {
                    Ok(id) => vec![id],
                    Err(e) => {
                        eprintln!("error: {e}");
                        return 2;
                    }
                }
            };
            let suite_params = match params.as_deref().map(parse_suite_params).transpose() {
                Ok(p) => p.unwrap_or_default(),
                Err(e) => {
                    eprintln!("error in --params: {e}");
                    return 2;
                }
            };
            let range: RangeInclusive<i64> = common.range.0..=common.range.1;
            match run_suite(&ids, range, suite_params) {
                Ok(reports) => emit(&reports, common.json, common.verbose),
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        Cmd::Check {
            lhs,
            rhs,
            modulus,
            power,
            common,
        } => {
            let spec = (|| {
                Ok::<_, i32>(CheckSpec {
                    lhs: parse_expr_or_exit("lhs", &lhs)?,
                    rhs: parse_expr_or_exit("rhs", &rhs)?,
                    modulus: parse_expr_or_exit("mod", &modulus)?,
                    power,
                    range: common.range.0..=common.range.1,
                })
            })();
            let spec = match spec {
                Ok(s) => s,
                Err(code) => return code,
            };
            match expr::run_check(&spec) {
                Ok(reports) => emit(&reports, common.json, common.verbose),
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        Cmd::Eval { expr: src, n } => {
            let ast = match expr::parse(&src) {
                Ok(ast) => ast,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            match expr::eval(&ast, n) {
                Ok(value) => {
                    println!("{value}");
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
    }
}

/// Entry point shared by the binary and the CLI tests; returns the exit code.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            code
        }
    }
}
