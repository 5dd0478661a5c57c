//! The `yl` command line.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a counterexample, 2 on
//! bad arguments or inputs. JSON output renders every big number as a
//! decimal string.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::counts::{
    average_ideal_size, average_ideal_size_at_most, b_recursive, convergence_csv, convergence_json,
    convergence_table, count_partitions, g_k, ideal_total,
};
use crate::error::Error;
use crate::partition::Partition;
use crate::rankpoly::{gaussian_poly, poincare_poly, rank_gen_poly};
use crate::rational::{to_fraction_string, to_scientific_string, Rational};
use crate::series::{qk_direct, qk_xm, MultiSeries};
use crate::verify::{self, Outcome};
use crate::ypoly::YPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "yl", version, about = "Exact computations on Young's lattice")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank generating polynomial of the interval [mu, lambda].
    Rankpoly {
        #[arg(long)]
        lambda: Partition,
        /// Lower end of the interval; empty by default.
        #[arg(long, default_value = "")]
        mu: Partition,
    },
    /// Partition counts and average lower-ideal size for k parts and rank n.
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u64,
        /// Weight of the first part in the rank, as in Q_k(X_m).
        #[arg(long, default_value_t = 0)]
        m: u32,
        /// Average over partitions with at most k parts instead.
        #[arg(long)]
        at_most: bool,
    },
    /// Gaussian polynomial of the n-by-k rectangle.
    Gaussian {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Poincaré polynomial P_lambda(y^2).
    Poincare {
        #[arg(long)]
        lambda: Partition,
    },
    /// Truncated generating series Q_k, or its X_m specialization with --m.
    Series {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        trunc: u32,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Growth constants G_1..G_max_k.
    Gk {
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u32).range(1..))]
        max_k: u32,
    },
    /// Constants B(k,m) for k + m <= max_sum, or a single one.
    Bkm {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, default_value_t = 6)]
        max_sum: u32,
    },
    /// Exact convergence table for A_{k,n} / (G_k n^k).
    Asymptotics {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long)]
        n_start: u64,
        #[arg(long)]
        n_end: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        step: u64,
    },
    /// Check an identity family; exit 1 on the first counterexample.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Recursion,
    Xm,
    Denominator,
    Decomposition,
    Bkm,
    Gaussian,
    Lemmas,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    target: Target,
    /// Series index for recursion and denominator.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 8)]
    trunc: u32,
    #[arg(long)]
    max_k: Option<usize>,
    #[arg(long)]
    max_m: Option<u32>,
    #[arg(long)]
    max_n: Option<u32>,
    #[arg(long)]
    max_sum: Option<u32>,
    #[arg(long)]
    max_rank: Option<u64>,
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = match cli.command {
        Command::Verify(v) => return run_verify(&v, cli.format, out, err),
        cmd => execute(cmd, cli.format),
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cmd: Command, format: OutputFormat) -> Result<String, Error> {
    match cmd {
        Command::Rankpoly { lambda, mu } => Ok(render_poly(&rank_gen_poly(&mu, &lambda)?, format)),
        Command::Gaussian { n, k } => Ok(render_poly(&gaussian_poly(n, k)?, format)),
        Command::Poincare { lambda } => Ok(render_poly(&poincare_poly(&lambda), format)),
        Command::Count { k, n, m, at_most } => count(k, n, m, at_most, format),
        Command::Series { k, trunc, m } => Ok(match m {
            Some(m) => render_xm(k, m, trunc, format),
            None => render_series(&qk_direct(k, trunc), format),
        }),
        Command::Gk { max_k } => gk_table(max_k as usize, format),
        Command::Bkm { k, m, max_sum } => Ok(bkm_table(k, m, max_sum, format)),
        Command::Asymptotics {
            k,
            n_start,
            n_end,
            step,
        } => asymptotics(k as usize, n_start, n_end, step, format),
        Command::Verify(_) => unreachable!("handled by run"),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn render_poly(p: &YPoly, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => format!("{p}\n"),
        OutputFormat::Json => pretty(&json!(p.to_decimal_strings())),
        OutputFormat::Csv => {
            let mut s = String::from("degree,coefficient\n");
            for (i, c) in p.coeffs().iter().enumerate() {
                s.push_str(&format!("{i},{c}\n"));
            }
            s
        }
    }
}

fn monomial(exps: &[u32]) -> String {
    let factors: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{e}", i + 1)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

fn render_series(s: &MultiSeries, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => s
            .sorted_terms()
            .iter()
            .map(|(e, c)| format!("{}: {c}\n", monomial(e)))
            .collect(),
        OutputFormat::Json => pretty(&serde_json::to_value(s).expect("series serializes")),
        OutputFormat::Csv => {
            let mut out = String::from("exponents,coefficients\n");
            for (e, c) in s.sorted_terms() {
                let e: Vec<String> = e.iter().map(u32::to_string).collect();
                out.push_str(&format!(
                    "{},{}\n",
                    e.join(";"),
                    c.to_decimal_strings().join(";")
                ));
            }
            out
        }
    }
}

fn render_xm(k: usize, m: u32, trunc: u32, format: OutputFormat) -> String {
    let coeffs = qk_xm(k, m, trunc);
    match format {
        OutputFormat::Text => coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| format!("{n}, {c}\n"))
            .collect(),
        OutputFormat::Json => {
            let v: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            pretty(&json!(v))
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,coefficient\n");
            for (n, c) in coeffs.iter().enumerate() {
                s.push_str(&format!("{n},{c}\n"));
            }
            s
        }
    }
}

fn count(k: usize, n: u64, m: u32, at_most: bool, format: OutputFormat) -> Result<String, Error> {
    let c = count_partitions(k, n);
    let total = ideal_total(k, n, m);
    let average = if at_most {
        average_ideal_size_at_most(k, n)?
    } else {
        average_ideal_size(k, n)?
    };
    let a = to_fraction_string(&average);
    Ok(match format {
        OutputFormat::Text => format!("c = {c}\nC = {total}\nA = {a}\n"),
        OutputFormat::Json => pretty(&json!({
            "k": k, "n": n, "m": m, "at_most": at_most,
            "c": c.to_string(), "C": total.to_string(), "A": a,
        })),
        OutputFormat::Csv => {
            format!("k,n,m,at_most,c,C,A\n{k},{n},{m},{at_most},{c},{total},{a}\n")
        }
    })
}

fn decimal(r: &Rational) -> String {
    to_scientific_string(r, 12)
}

fn gk_table(max_k: usize, format: OutputFormat) -> Result<String, Error> {
    let rows: Vec<(usize, Rational)> = (1..=max_k)
        .map(|k| g_k(k).map(|g| (k, g)))
        .collect::<Result<_, _>>()?;
    Ok(match format {
        OutputFormat::Text => rows
            .iter()
            .map(|(k, g)| format!("{k}, {}, {}\n", to_fraction_string(g), decimal(g)))
            .collect(),
        OutputFormat::Json => pretty(&Value::Array(
            rows.iter()
                .map(|(k, g)| json!({"k": k, "G": to_fraction_string(g), "decimal": decimal(g)}))
                .collect(),
        )),
        OutputFormat::Csv => {
            let mut s = String::from("k,G,decimal\n");
            for (k, g) in &rows {
                s.push_str(&format!("{k},{},{}\n", to_fraction_string(g), decimal(g)));
            }
            s
        }
    })
}

fn bkm_table(k: Option<usize>, m: Option<u32>, max_sum: u32, format: OutputFormat) -> String {
    let pairs: Vec<(usize, u32)> = match (k, m) {
        (Some(k), m) => vec![(k, m.unwrap_or(0))],
        (None, Some(m)) => (0..=max_sum.saturating_sub(m) as usize)
            .map(|k| (k, m))
            .collect(),
        (None, None) => (0..=max_sum as usize)
            .flat_map(|k| (0..=max_sum - k as u32).map(move |m| (k, m)))
            .collect(),
    };
    let rows: Vec<(usize, u32, Rational)> = pairs
        .into_iter()
        .map(|(k, m)| (k, m, b_recursive(k, m)))
        .collect();
    match format {
        OutputFormat::Text => rows
            .iter()
            .map(|(k, m, b)| format!("{k}, {m}, {}\n", to_fraction_string(b)))
            .collect(),
        OutputFormat::Json => pretty(&Value::Array(
            rows.iter()
                .map(|(k, m, b)| json!({"k": k, "m": m, "B": to_fraction_string(b)}))
                .collect(),
        )),
        OutputFormat::Csv => {
            let mut s = String::from("k,m,B\n");
            for (k, m, b) in &rows {
                s.push_str(&format!("{k},{m},{}\n", to_fraction_string(b)));
            }
            s
        }
    }
}

fn asymptotics(
    k: usize,
    n_start: u64,
    n_end: u64,
    step: u64,
    format: OutputFormat,
) -> Result<String, Error> {
    if n_start < k as u64 || n_end < n_start {
        return Err(Error::InvalidArgument(format!(
            "need {k} <= n-start <= n-end, got n-start {n_start}, n-end {n_end}"
        )));
    }
    let ns: Vec<u64> = (n_start..=n_end).step_by(step as usize).collect();
    let rows = convergence_table(k, &ns)?;
    Ok(match format {
        OutputFormat::Text => rows
            .iter()
            .map(|r| {
                format!(
                    "{}, {}, {}\n",
                    r.n,
                    to_fraction_string(&r.ratio),
                    r.ratio_decimal()
                )
            })
            .collect(),
        OutputFormat::Json => pretty(&convergence_json(&rows)),
        OutputFormat::Csv => convergence_csv(&rows),
    })
}

fn run_verify(
    v: &VerifyArgs,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let outcome: Outcome = match v.target {
        Target::Recursion => {
            let k = v.k.unwrap_or(3);
            if v.trunc < k as u32 {
                let _ = writeln!(err, "error: --trunc must be at least --k");
                return 2;
            }
            verify::recursion(k, v.trunc)
        }
        Target::Xm => verify::xm(v.max_k.unwrap_or(3), v.max_m.unwrap_or(2), v.trunc),
        Target::Denominator => {
            let k = v.k.unwrap_or(2);
            if k == 0 {
                let _ = writeln!(err, "error: --k must be at least 1");
                return 2;
            }
            verify::denominator(k, v.trunc)
        }
        Target::Decomposition => {
            let (k, m) = (v.max_k.unwrap_or(5), v.max_m.unwrap_or(2));
            verify::decomposition(k, m, k, m)
        }
        Target::Bkm => verify::bkm(v.max_sum.unwrap_or(8)),
        Target::Gaussian => verify::gaussian(v.max_n.unwrap_or(6), v.max_k.unwrap_or(6)),
        Target::Lemmas => verify::lemmas(v.max_rank.unwrap_or(8)),
    };
    let (code, text) = match (&outcome, format) {
        (Ok(s), OutputFormat::Text) => (0, format!("{s}\n")),
        (Err(c), OutputFormat::Text) => (1, format!("{c}\n")),
        (Ok(s), OutputFormat::Json) => (
            0,
            pretty(
                &json!({"target": s.target, "status": "ok", "checks": s.checks.to_string(), "notes": s.notes}),
            ),
        ),
        (Err(c), OutputFormat::Json) => (
            1,
            pretty(&json!({"target": c.target, "status": "counterexample", "message": c.message})),
        ),
        (Ok(s), OutputFormat::Csv) => (
            0,
            format!("target,status,checks\n{},ok,{}\n", s.target, s.checks),
        ),
        (Err(c), OutputFormat::Csv) => (
            1,
            format!("target,status,checks\n{},counterexample,\n", c.target),
        ),
    };
    let _ = out.write_all(text.as_bytes());
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("yl").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn rankpoly_forms() {
        assert_eq!(
            call(&["rankpoly", "--lambda", "2,1"]).1,
            "1 + y + 2*y^2 + y^3\n"
        );
        assert_eq!(
            call(&["rankpoly", "--lambda", "2,2", "--mu", "2,2"]).1,
            "y^4\n"
        );
        let (code, out, _) = call(&["rankpoly", "--lambda", "3,1", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Vec<String> = serde_json::from_str(&out).unwrap();
        assert_eq!(v, ["1", "1", "2", "2", "1"]);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["rankpoly", "--lambda", "1,2"]).0, 2);
        assert_eq!(call(&["rankpoly", "--lambda", "2", "--mu", "1,1"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(
            call(&["asymptotics", "--k", "3", "--n-start", "2", "--n-end", "9"]).0,
            2
        );
        assert_eq!(call(&["verify", "nothing"]).0, 2);
        assert_eq!(
            call(&["verify", "recursion", "--k", "4", "--trunc", "2"]).0,
            2
        );
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn gk_rows() {
        let (_, out, _) = call(&["gk", "--max-k", "2"]);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("1, 1,"));
        assert!(lines[1].starts_with("2, 1/8,"));
        let (_, csv, _) = call(&["gk", "--max-k", "1", "--format", "csv"]);
        assert_eq!(csv.lines().count(), 2);
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(
            call(&["verify", "recursion", "--k", "2", "--trunc", "8"]).0,
            0
        );
        let (code, out, _) = call(&["verify", "denominator", "--k", "3", "--trunc", "12"]);
        assert_eq!(code, 1);
        assert!(out.contains("counterexample"));
    }

    #[test]
    fn asymptotics_k1() {
        let (code, out, _) = call(&[
            "asymptotics",
            "--k",
            "1",
            "--n-start",
            "10",
            "--n-end",
            "30",
            "--step",
            "10",
        ]);
        assert_eq!(code, 0);
        let ratios: Vec<&str> = out.lines().map(|l| l.split(", ").nth(1).unwrap()).collect();
        assert_eq!(ratios, ["11/10", "21/20", "31/30"]);
    }
}
