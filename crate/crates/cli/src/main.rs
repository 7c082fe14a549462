use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hook_core::exactnum::{factorial, format_rational, parse_rational, rat_int, Rational};
use hook_core::identities::{Params, Registry, VerificationReport};
use hook_core::partition::{enumerate_partitions, Partition};
use hook_core::series::{
    divisor_sum_gf, euler_power, euler_power_any, log_euler_sum, revert_euler, EulerPower,
    Exponent, RevertMethod,
};
use hook_core::tcore::{
    check_odd_modulus, core_hook_product_from_v, core_weight_from_v, enumerate_t_cores, h_set,
    is_t_core, n_coding, u_coding, v_coding, CoreMethod,
};
use hook_core::Error;

/// Environment variable that fixes the worker-thread count.
const WORKERS_VAR: &str = "HOOKLEN_WORKERS";

#[derive(Parser)]
#[command(
    name = "hooklen",
    version,
    about = "Hook-length expansions of Euler product powers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the product of (1-x^m)^s up to x^N.
    Expand {
        /// A rational such as `24` or `-1/2`, or `beta` for the formal exponent beta-1.
        #[arg(long, allow_hyphen_values = true)]
        exponent: String,
        #[arg(long)]
        order: usize,
        /// Multiply the result by x^k.
        #[arg(long, default_value_t = 0)]
        shift: usize,
        #[arg(long, value_enum, default_value_t = ExpandFormat::Plain)]
        format: ExpandFormat,
    },
    /// Check a registered identity, or all of them.
    Verify {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        id: Option<String>,
        /// Series order, or the order budget with --all.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Extra parameter as key=value, e.g. alpha=2.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Plain)]
        format: ReportFormat,
    },
    /// List registered identities with their parameters.
    ListIdentities,
    /// List the partitions of n, optionally only the t-cores.
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long = "t-core")]
        t_core: Option<usize>,
    },
    /// List the t-cores of n.
    Cores {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Filter)]
        method: MethodArg,
    },
    /// Show the codings of a t-core.
    Coding {
        #[arg(long)]
        parts: String,
        #[arg(long)]
        t: usize,
    },
    /// Emit an integer sequence, 1-based.
    Seq {
        #[arg(long, value_enum)]
        name: SeqName,
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value_t = SeqFormat::Bfile)]
        format: SeqFormat,
    },
    /// Reversion of x times the Euler product.
    Revert {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = RevertArg::Lagrange)]
        method: RevertArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandFormat {
    Plain,
    Json,
    Bfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqFormat {
    Bfile,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Filter,
    Coding,
}

#[derive(Clone, Copy, ValueEnum)]
enum RevertArg {
    Lagrange,
    Iterate,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqName {
    Tau,
    A006128,
    A057623,
    A109085,
    Pp,
}

impl SeqName {
    fn label(self) -> &'static str {
        match self {
            SeqName::Tau => "tau",
            SeqName::A006128 => "a006128",
            SeqName::A057623 => "a057623",
            SeqName::A109085 => "a109085",
            SeqName::Pp => "pp",
        }
    }
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let workers = std::env::var(WORKERS_VAR).ok();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = execute(
        std::env::args_os(),
        workers.as_deref(),
        &mut out,
        &mut io::stderr(),
    );
    if out.flush().is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

/// Parses `args`, runs the command and returns the exit code:
/// 0 on success, 1 when a verification fails, 2 on usage errors.
fn execute<I, T>(args: I, workers: Option<&str>, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if let Some(value) = workers {
        if let Err(msg) = configure_workers(value) {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    }
    match run(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Checks) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn configure_workers(value: &str) -> Result<(), String> {
    let n: usize = value
        .parse()
        .map_err(|_| format!("{WORKERS_VAR} must be a positive integer, got {value:?}"))?;
    if n == 0 {
        return Err(format!("{WORKERS_VAR} must be positive"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Expand {
            exponent,
            order,
            shift,
            format,
        } => expand(out, &exponent, order, shift, format),
        Command::Verify {
            id,
            order,
            t,
            n,
            params,
            all,
            format,
        } => {
            if all {
                verify_all(out, order, format)
            } else {
                let id = id.expect("clap requires --id without --all");
                verify_one(out, &id, order, t, n, &params, format)
            }
        }
        Command::ListIdentities => list_identities(out),
        Command::Partitions { n, t_core } => {
            if let Some(t) = t_core {
                check_odd_modulus(t)?;
            }
            for l in enumerate_partitions(n) {
                if match t_core {
                    Some(t) => is_t_core(&l, t)?,
                    None => true,
                } {
                    emit(out, format_args!("{l}\n"))?;
                }
            }
            Ok(())
        }
        Command::Cores { n, t, method } => {
            check_odd_modulus(t)?;
            let method = match method {
                MethodArg::Filter => CoreMethod::Filter,
                MethodArg::Coding => CoreMethod::Coding,
            };
            for l in enumerate_t_cores(n, t, method)? {
                emit(out, format_args!("{l}\n"))?;
            }
            Ok(())
        }
        Command::Coding { parts, t } => coding(out, &parts, t),
        Command::Seq {
            name,
            count,
            format,
        } => seq(out, name, count, format),
        Command::Revert { order, method } => {
            let method = match method {
                RevertArg::Lagrange => RevertMethod::Lagrange,
                RevertArg::Iterate => RevertMethod::Iterate,
            };
            let s = revert_euler(order, method);
            for n in 1..=order {
                emit(
                    out,
                    format_args!("{n} {}\n", format_rational(&s.coeffs()[n])),
                )?;
            }
            Ok(())
        }
    }
}

fn emit(out: &mut impl Write, args: std::fmt::Arguments<'_>) -> Outcome {
    out.write_fmt(args)
        .map_err(|e| Failure::Usage(format!("write failed: {e}")))
}

fn expand(
    out: &mut impl Write,
    exponent: &str,
    order: usize,
    shift: usize,
    format: ExpandFormat,
) -> Outcome {
    let exp = if exponent.trim() == "beta" {
        Exponent::BetaMinusOne
    } else {
        Exponent::Value(parse_rational(exponent)?)
    };
    // x^k times the product only needs the product to order N-k
    let inner = order.saturating_sub(shift);
    let mut coeffs = vec!["0".to_string(); order + 1];
    if shift <= order {
        let strings = match euler_power_any(&exp, inner) {
            EulerPower::Rational(s) => s.to_strings(),
            EulerPower::Formal(s) => s.to_strings(),
        };
        for (i, c) in strings.into_iter().enumerate() {
            coeffs[i + shift] = c;
        }
    } else if matches!(exp, Exponent::BetaMinusOne) {
        coeffs = vec!["[]".to_string(); order + 1];
    }
    match format {
        ExpandFormat::Plain => {
            for (n, c) in coeffs.iter().enumerate() {
                emit(out, format_args!("x^{n} {c}\n"))?;
            }
        }
        ExpandFormat::Bfile => {
            for (n, c) in coeffs.iter().enumerate().skip(1) {
                emit(out, format_args!("{n} {c}\n"))?;
            }
        }
        ExpandFormat::Json => {
            let value = serde_json::json!({
                "exponent": exponent.trim(),
                "order": order,
                "shift": shift,
                "coefficients": coeffs,
            });
            emit(out, format_args!("{value}\n"))?;
        }
    }
    Ok(())
}

fn print_report(out: &mut impl Write, r: &VerificationReport, format: ReportFormat) -> Outcome {
    match format {
        ReportFormat::Plain => emit(out, format_args!("{r}\n")),
        ReportFormat::Json => emit(out, format_args!("{}\n", r.to_json())),
    }
}

fn verify_one(
    out: &mut impl Write,
    id: &str,
    order: Option<usize>,
    t: Option<usize>,
    n: Option<usize>,
    extra: &[String],
    format: ReportFormat,
) -> Outcome {
    let registry = Registry::standard();
    let entry = registry
        .get(id)
        .ok_or_else(|| Failure::Usage(Error::UnknownIdentity(id.to_string()).to_string()))?;
    let mut params = Params::new();
    let mut set = |key: &str, value: i64, flag: &str| -> Outcome {
        if params.insert(key.to_string(), value).is_some() {
            return Err(Failure::Usage(format!("{flag} sets {key} twice")));
        }
        Ok(())
    };
    // --order names the series order; entries indexed by weight take it as n
    let pick = |preferred: &[&'static str], flag: &str| -> Result<&'static str, Failure> {
        preferred
            .iter()
            .copied()
            .find(|p| entry.has_param(p))
            .ok_or_else(|| Failure::Usage(format!("{id} does not take {flag}")))
    };
    if let Some(v) = order {
        set(pick(&["N", "n", "k"], "--order")?, v as i64, "--order")?;
    }
    if let Some(v) = n {
        set(pick(&["n", "N"], "--n")?, v as i64, "--n")?;
    }
    if let Some(v) = t {
        set(pick(&["t"], "--t")?, v as i64, "--t")?;
    }
    for kv in extra {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("--param expects key=value, got {kv:?}")))?;
        let v: i64 = v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("--param {k} needs an integer value")))?;
        set(k.trim(), v, "--param")?;
    }
    let report = registry.verify(id, &params)?;
    print_report(out, &report, format)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn verify_all(out: &mut impl Write, budget: Option<usize>, format: ReportFormat) -> Outcome {
    let reports = Registry::standard().verify_all(budget);
    match format {
        ReportFormat::Plain => {
            for r in &reports {
                print_report(out, r, format)?;
            }
        }
        ReportFormat::Json => {
            let values: Vec<serde_json::Value> =
                reports.iter().map(|r| r.to_json_value()).collect();
            emit(out, format_args!("{}\n", serde_json::Value::Array(values)))?;
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn list_identities(out: &mut impl Write) -> Outcome {
    for e in Registry::standard().entries() {
        let params: Vec<String> = e
            .params
            .iter()
            .map(|p| match p.default {
                Some(d) => format!("{}={d}", p.name),
                None => format!("{}=sweep", p.name),
            })
            .collect();
        emit(
            out,
            format_args!("{}\t{}\t{}\n", e.id, params.join(","), e.description),
        )?;
    }
    Ok(())
}

fn coding(out: &mut impl Write, parts: &str, t: usize) -> Outcome {
    let l: Partition = parts.parse()?;
    check_odd_modulus(t)?;
    let h = h_set(&l, t)?;
    let u = u_coding(&l, t)?;
    let v = v_coding(&l, t)?;
    let nc = n_coding(&l, t)?;
    let beta = rat_int((t * t) as i64);
    emit(out, format_args!("partition: {l}\n"))?;
    emit(out, format_args!("H-set: {h}\n"))?;
    emit(out, format_args!("U-coding: {u}\n"))?;
    emit(out, format_args!("V-coding: {v}\n"))?;
    emit(out, format_args!("N-coding: {nc}\n"))?;
    emit(
        out,
        format_args!(
            "weight: {} (N-coding {}, V-coding {})\n",
            l.weight(),
            nc.weight(),
            core_weight_from_v(&v)?
        ),
    )?;
    emit(
        out,
        format_args!(
            "product at beta={}: {} (hooks), {} (V-coding)\n",
            t * t,
            format_rational(&l.hook_product_at(&beta)),
            format_rational(&core_hook_product_from_v(&v))
        ),
    )
}

fn seq_values(name: SeqName, count: usize) -> Vec<Rational> {
    let p = || euler_power(&rat_int(-1), count);
    let series = match name {
        SeqName::Tau => euler_power(&rat_int(24), count).shift(1),
        SeqName::A006128 => p().mul(&divisor_sum_gf(0, count)),
        SeqName::A057623 => {
            let s = p().mul(&log_euler_sum(count));
            let scaled = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| c * Rational::from_integer(factorial(n as u64)))
                .collect();
            hook_core::Series::from_coeffs(scaled)
        }
        SeqName::A109085 => revert_euler(count, RevertMethod::Lagrange),
        SeqName::Pp => p().mul(&p()),
    };
    series.coeffs()[1..].to_vec()
}

fn seq(out: &mut impl Write, name: SeqName, count: usize, format: SeqFormat) -> Outcome {
    let values = seq_values(name, count);
    match format {
        SeqFormat::Bfile => {
            for (i, v) in values.iter().enumerate() {
                emit(out, format_args!("{} {}\n", i + 1, format_rational(v)))?;
            }
            Ok(())
        }
        SeqFormat::Json => {
            let strings: Vec<String> = values.iter().map(format_rational).collect();
            let value = serde_json::json!({
                "name": name.label(),
                "offset": 1,
                "values": strings,
            });
            emit(out, format_args!("{value}\n"))
        }
    }
}
