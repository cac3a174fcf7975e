//! `genocchi`: identity audit, value tables and zeta evaluation.
//!
//! Exit codes: 0 success, 1 a derived identity failed, 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use genocchi_core::altsum::{
    alt_power_sum_direct, alt_power_sum_formula, alt_power_sum_formula_shifted,
    euler_variant_value,
};
use genocchi_core::audit::{parse_param_list, parse_x_list, render};
use genocchi_core::classical::ClassicalTable;
use genocchi_core::table::{emit_table, parse_complex, zeta_value, TableKind, ZetaArgs};
use genocchi_core::zeta::{parse_exact, rational_label};
use genocchi_core::{exit_code, run_suite, AuditConfig, Error, OutputFormat, ParamTriple, Precision};

#[derive(Parser)]
#[command(name = "genocchi", version, about = "Genocchi-type numbers, polynomials and zeta values")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity audit
    Audit(AuditArgs),
    /// Print a table of values
    Table(TableArgs),
    /// Evaluate Z(s, x; a, b, c)
    Zeta(ZetaCmd),
    /// Alternating power sum sum_{k<m} (-1)^k k^n by every route
    Altsum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    /// Truncation order of the series oracle
    #[arg(long, default_value_t = 16)]
    max_order: usize,
    #[arg(long, value_delimiter = ',', default_value = "1,3,5")]
    odd_y: Vec<usize>,
    /// Parameter triples `a,b,c;a,b,c`; `e` is Euler's number
    #[arg(long)]
    params: Option<String>,
    /// Comma-separated x values
    #[arg(long)]
    x: Option<String>,
    /// Comma-separated real s values
    #[arg(long, value_delimiter = ',')]
    s: Option<Vec<f64>>,
    #[arg(long, default_value_t = Precision::DEFAULT_BITS)]
    precision: usize,
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// genocchi-classical, g-number, g-poly or zeta
    kind: String,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, default_value = "text")]
    format: String,
    #[command(flatten)]
    zeta: OptZeta,
}

#[derive(Args)]
struct OptZeta {
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    c: Option<String>,
    #[arg(long, default_value_t = Precision::DEFAULT_BITS)]
    precision: usize,
}

#[derive(Args)]
struct ZetaCmd {
    /// `RE` or `RE,IM`
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[arg(long)]
    c: String,
    #[arg(long, default_value_t = Precision::DEFAULT_BITS)]
    precision: usize,
}

fn zeta_args(s: &str, x: &str, a: &str, b: &str, c: &str, bits: usize) -> Result<ZetaArgs, Error> {
    let (s_re, s_im) = parse_complex(s)?;
    Ok(ZetaArgs {
        s_re,
        s_im,
        x: parse_exact(x)?,
        params: format!("{a},{b},{c}").parse::<ParamTriple>()?,
        precision: Precision::new(bits)?,
    })
}

fn audit_config(a: &AuditArgs) -> Result<AuditConfig, Error> {
    let mut cfg = AuditConfig {
        max_n: a.max_n,
        max_order: a.max_order,
        odd_y: a.odd_y.clone(),
        precision: Precision::new(a.precision)?,
        format: a.format.parse::<OutputFormat>()?,
        ..AuditConfig::default()
    };
    if let Some(p) = &a.params {
        cfg.params = parse_param_list(p)?;
    }
    if let Some(x) = &a.x {
        cfg.x_values = parse_x_list(x)?;
    }
    if let Some(s) = &a.s {
        cfg.s_values = s.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn usage(e: Error) -> ExitCode {
    eprintln!("genocchi: {e}");
    ExitCode::from(2)
}

fn failure(e: Error) -> ExitCode {
    eprintln!("genocchi: {e}");
    ExitCode::from(1)
}

fn run_audit(a: &AuditArgs) -> ExitCode {
    let cfg = match audit_config(a) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let reports = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e @ Error::Usage(_)) => return usage(e),
        Err(e) => return failure(e),
    };
    let text = render(&reports, cfg.format);
    match &a.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("genocchi: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(exit_code(&reports) as u8)
}

fn run_table(t: &TableArgs) -> ExitCode {
    let parsed = (|| {
        let kind: TableKind = t.kind.parse()?;
        let format: OutputFormat = t.format.parse()?;
        let z = &t.zeta;
        let args = match (kind, &z.s, &z.x, &z.a, &z.b, &z.c) {
            (TableKind::Zeta, Some(s), Some(x), Some(a), Some(b), Some(c)) => {
                Some(zeta_args(s, x, a, b, c, z.precision)?)
            }
            (TableKind::Zeta, ..) => {
                return Err(Error::Usage("zeta table needs --s --x --a --b --c".into()))
            }
            _ => None,
        };
        Ok((kind, format, args))
    })();
    let (kind, format, args) = match parsed {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    match emit_table(kind, t.max_n, args.as_ref(), format) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e @ Error::Usage(_)) => usage(e),
        Err(e) => failure(e),
    }
}

fn run_zeta(z: &ZetaCmd) -> ExitCode {
    let args = match zeta_args(&z.s, &z.x, &z.a, &z.b, &z.c, z.precision) {
        Ok(a) => a,
        Err(e) => return usage(e),
    };
    match zeta_value(&args) {
        Ok((value, err)) => {
            println!("{value}");
            eprintln!("abs_err <= {err}");
            ExitCode::SUCCESS
        }
        Err(e) => failure(e),
    }
}

fn run_altsum(n: usize, m: usize) -> ExitCode {
    if n == 0 || m == 0 {
        return usage(Error::Usage("altsum needs --n >= 1 and --m >= 1".into()));
    }
    let table = ClassicalTable::new(n);
    println!("direct\t{}", rational_label(&alt_power_sum_direct(n, m)));
    println!("euler_variant\t{}", rational_label(&euler_variant_value(&table, n, m)));
    let show = |r: Result<_, Error>| match r {
        Ok(v) => rational_label(&v),
        Err(e) => e.to_string(),
    };
    println!("formula_shifted\t{}", show(alt_power_sum_formula_shifted(n, m)));
    println!("formula_printed\t{}", show(alt_power_sum_formula(n, m)));
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Audit(a) => run_audit(a),
        Command::Table(t) => run_table(t),
        Command::Zeta(z) => run_zeta(z),
        Command::Altsum { n, m } => run_altsum(*n, *m),
    }
}
