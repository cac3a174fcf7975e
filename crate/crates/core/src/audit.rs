//! The identity audit: every check in the crate run over a parameter grid,
//! collected into one deterministically ordered report list.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::altsum::altsum_reports;
use crate::classical::classical_relations_check;
use crate::error::{Error, Result};
use crate::exact::{rat, BigRational};
use crate::numeric::{ComplexVal, Ctx, Precision};
use crate::param;
use crate::report::{report_order, IdentityReport, Status};
use crate::zeta::{self, parse_exact, ParamTriple};

pub const SUITE_VERSION: &str = "1";

/// Sweeps that would dominate the run time are capped independently of `max_n`.
const CONVOLUTION_MAX_N: usize = 10;
const CONVOLUTION_MAX_ORDER: usize = 3;
const MULTIPLICATION_MAX_N: usize = 8;
const ALTSUM_MAX_N: usize = 8;
const INTERPOLATION_MAX_N: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            _ => Err(Error::Usage(format!("unknown format {s:?} (json, csv, text)"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "text",
        })
    }
}

#[derive(Debug, Clone)]
pub struct AuditConfig {
    /// Largest index in the exact identity sweeps.
    pub max_n: usize,
    /// Truncation order of the series oracle.
    pub max_order: usize,
    pub odd_y: Vec<usize>,
    pub params: Vec<ParamTriple>,
    pub x_values: Vec<BigRational>,
    pub s_values: Vec<f64>,
    pub precision: Precision,
    pub altsum_max_m: usize,
    pub format: OutputFormat,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            max_n: 12,
            max_order: 16,
            odd_y: vec![1, 3, 5],
            params: ["1,e,e", "1,2,2", "2,3,5", "0.5,3,1"]
                .iter()
                .map(|s| s.parse().expect("valid default triple"))
                .collect(),
            x_values: vec![rat(3, 10), rat(7, 10), rat(1, 1), rat(5, 2)],
            s_values: vec![1.5, 2.0, 3.5],
            precision: Precision::default(),
            altsum_max_m: 100,
            format: OutputFormat::Json,
        }
    }
}

/// Parse `a,b,c;a,b,c`.
pub fn parse_param_list(s: &str) -> Result<Vec<ParamTriple>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

/// Parse a comma-separated list of exact numbers.
pub fn parse_x_list(s: &str) -> Result<Vec<BigRational>> {
    s.split(',').map(parse_exact).collect()
}

impl AuditConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n < 1 {
            return Err(Error::Usage("max-n must be at least 1".into()));
        }
        if self.max_order < self.max_n {
            return Err(Error::Usage(format!(
                "max-order ({}) must be at least max-n ({})",
                self.max_order, self.max_n
            )));
        }
        if let Some(y) = self.odd_y.iter().find(|y| **y == 0 || *y % 2 == 0) {
            return Err(Error::Usage(format!("odd-y entries must be odd and positive, got {y}")));
        }
        if self.params.is_empty() {
            return Err(Error::Usage("at least one parameter triple is required".into()));
        }
        if self.s_values.iter().any(|s| !(*s > 0.0)) {
            return Err(Error::Usage("s values must be positive".into()));
        }
        if self.altsum_max_m < 1 {
            return Err(Error::Usage("altsum range must be at least 1".into()));
        }
        Ok(())
    }
}

type Cell = Box<dyn Fn() -> Result<Vec<IdentityReport>> + Send + Sync>;

fn exact_cells(cfg: &AuditConfig) -> Vec<Cell> {
    let max_n = cfg.max_n;
    let max_order = cfg.max_order;
    let mut cells: Vec<Cell> = vec![
        Box::new(move || Ok(classical_relations_check(max_n))),
        Box::new(move || Ok(param::oracle_checks(max_order))),
        Box::new(|| Ok(vec![param::printed_g3_check()])),
        Box::new(move || Ok(zeta::interpolation_exact_checks(max_n.min(INTERPOLATION_MAX_N)))),
    ];
    let m = cfg.altsum_max_m;
    cells.push(Box::new(move || Ok(altsum_reports(max_n.min(ALTSUM_MAX_N), m))));
    for n in 0..=max_n {
        cells.push(Box::new(move || {
            let mut v = param::shift_check(n);
            v.extend(param::addition_check(n));
            v.extend(param::reduce_check(n));
            if n >= 1 {
                v.push(param::printed_recurrence_check(n));
            }
            Ok(v)
        }));
    }
    for n in 0..=max_n.min(CONVOLUTION_MAX_N) {
        cells.push(Box::new(move || {
            let mut v = Vec::new();
            for l in 1..=CONVOLUTION_MAX_ORDER {
                for k in 1..=CONVOLUTION_MAX_ORDER {
                    v.push(param::convolution_check(n, l, k)?);
                }
            }
            Ok(v)
        }));
    }
    for n in 0..=max_n.min(MULTIPLICATION_MAX_N) {
        let ys = cfg.odd_y.clone();
        cells.push(Box::new(move || {
            let mut v = Vec::new();
            for &y in &ys {
                v.extend(param::multiplication_check(n, y)?);
            }
            Ok(v)
        }));
    }
    cells
}

fn numeric_cells(cfg: &AuditConfig) -> Vec<Cell> {
    let prec = cfg.precision;
    let mut cells: Vec<Cell> = Vec::new();
    let s_values = cfg.s_values.clone();
    cells.push(Box::new(move || {
        let ctx = Ctx::new(prec)?;
        let mut v = zeta::special_value_checks(&ctx, &s_values)?;
        for &s in &s_values {
            v.extend(zeta::eta_relation_check(&ctx, &ComplexVal::from_f64(&ctx, s, 0.0))?);
        }
        Ok(v)
    }));
    for x in &cfg.x_values {
        let x = x.clone();
        let s_values = cfg.s_values.clone();
        cells.push(Box::new(move || {
            let ctx = Ctx::new(prec)?;
            let mut v = Vec::new();
            for &s in &s_values {
                v.extend(zeta::lerch_relation_check(&ctx, &ComplexVal::from_f64(&ctx, s, 0.0), &x)?);
            }
            Ok(v)
        }));
    }
    let interp_n = cfg.max_n.min(INTERPOLATION_MAX_N);
    for p in &cfg.params {
        for x in &cfg.x_values {
            let (p1, x1) = (p.clone(), x.clone());
            cells.push(Box::new(move || {
                let ctx = Ctx::new(prec)?;
                let mut v = Vec::new();
                for n in 1..=interp_n {
                    v.extend(zeta::interpolation_check(&ctx, n, &x1, &p1)?);
                }
                Ok(v)
            }));
            for &s in &cfg.s_values {
                for &y in &cfg.odd_y {
                    let (p2, x2) = (p.clone(), x.clone());
                    cells.push(Box::new(move || {
                        let ctx = Ctx::new(prec)?;
                        let sv = ComplexVal::from_f64(&ctx, s, 0.0);
                        zeta::distribution_check(&ctx, &sv, y, &x2, &p2)
                    }));
                }
            }
        }
    }
    cells
}

/// Run every check over the configured grid.
///
/// Cells where a derived identity is evaluated outside its domain (for
/// example a non-positive base point) are left out; printed variants keep
/// their `domain_error` reports. Output is sorted by identity id and then
/// parameters, and duplicate cells are merged.
pub fn run_suite(cfg: &AuditConfig) -> Result<Vec<IdentityReport>> {
    cfg.validate()?;
    let mut cells = exact_cells(cfg);
    cells.extend(numeric_cells(cfg));
    let results: Vec<Result<Vec<IdentityReport>>> = cells.par_iter().map(|c| c()).collect();
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    reports.retain(|r| r.status != Status::DomainError || r.is_printed_variant());
    reports.sort_by(report_order);
    reports.dedup_by(|a, b| a.identity_id == b.identity_id && a.parameters == b.parameters);
    Ok(reports)
}

/// 0 when every non-printed identity verified, 1 otherwise.
pub fn exit_code(reports: &[IdentityReport]) -> i32 {
    if reports
        .iter()
        .all(|r| r.is_printed_variant() || r.is_verified())
    {
        0
    } else {
        1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteOutput {
    pub suite_version: String,
    pub reports: Vec<IdentityReport>,
}

impl SuiteOutput {
    pub fn new(reports: Vec<IdentityReport>) -> Self {
        SuiteOutput {
            suite_version: SUITE_VERSION.to_string(),
            reports,
        }
    }
}

pub fn to_json(reports: &[IdentityReport]) -> String {
    let out = SuiteOutput::new(reports.to_vec());
    let mut s = serde_json::to_string_pretty(&out).expect("reports serialize");
    s.push('\n');
    s
}

pub fn to_csv(reports: &[IdentityReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["identity_id", "parameters", "status", "witness", "tolerance"])
        .expect("in-memory write");
    for r in reports {
        let tol = r.tolerance.map(|t| format!("{t:e}")).unwrap_or_default();
        w.write_record([
            r.identity_id.as_str(),
            &r.parameters_string(),
            &r.status.to_string(),
            &r.witness.to_string(),
            &tol,
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 fields")
}

pub fn to_text(reports: &[IdentityReport]) -> String {
    let id_w = reports.iter().map(|r| r.identity_id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        let tol = r.tolerance.map(|t| format!(" (tol {t:e})")).unwrap_or_default();
        out.push_str(&format!(
            "{:<12} {:<id_w$} {} | {}{}\n",
            r.status.to_string(),
            r.identity_id,
            r.parameters_string(),
            r.witness,
            tol
        ));
    }
    let failed = reports.iter().filter(|r| !r.is_verified()).count();
    let unexpected = reports
        .iter()
        .filter(|r| !r.is_verified() && !r.is_printed_variant())
        .count();
    out.push_str(&format!(
        "{} reports, {} not verified, {} of them outside printed variants\n",
        reports.len(),
        failed,
        unexpected
    ));
    out
}

pub fn render(reports: &[IdentityReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(reports),
        OutputFormat::Csv => to_csv(reports),
        OutputFormat::Text => to_text(reports),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> AuditConfig {
        AuditConfig {
            max_n: 3,
            max_order: 4,
            odd_y: vec![1, 3],
            params: vec!["1,e,e".parse().unwrap(), "0.5,3,1".parse().unwrap()],
            x_values: vec![rat(7, 10), rat(1, 1)],
            s_values: vec![2.0],
            precision: Precision::new(64).unwrap(),
            altsum_max_m: 10,
            format: OutputFormat::Json,
        }
    }

    #[test]
    fn config_validation() {
        assert!(AuditConfig::default().validate().is_ok());
        let mut c = small();
        c.odd_y = vec![1, 4];
        assert!(matches!(c.validate(), Err(Error::Usage(_))));
        let mut c = small();
        c.max_n = 0;
        assert!(c.validate().is_err());
        let mut c = small();
        c.max_order = 2;
        assert!(c.validate().is_err());
        assert!(matches!(run_suite(&AuditConfig { odd_y: vec![2], ..small() }), Err(Error::Usage(_))));
    }

    #[test]
    fn small_suite_passes_and_is_sorted() {
        let reports = run_suite(&small()).unwrap();
        assert_eq!(exit_code(&reports), 0);
        for w in reports.windows(2) {
            assert_ne!(report_order(&w[0], &w[1]), std::cmp::Ordering::Greater);
        }
        for id in ["g3-printed", "recurrence-2bBb-printed", "interpolation-printed"] {
            assert!(
                reports.iter().any(|r| r.identity_id == id && r.status == Status::Failed),
                "{id}"
            );
        }
    }

    #[test]
    fn exit_code_ignores_printed() {
        let ok = IdentityReport::exact("x-printed", [("n", "1".to_string())], rat(1, 1));
        assert_eq!(exit_code(&[ok.clone()]), 0);
        let bad = IdentityReport::exact("x-derived", [("n", "1".to_string())], rat(1, 1));
        assert_eq!(exit_code(&[ok, bad]), 1);
    }

    #[test]
    fn renderings() {
        let r = vec![
            IdentityReport::exact("a", [("params", "1,e,e".to_string())], rat(0, 1)),
            IdentityReport::numeric("b", [("s", "2".to_string())], 1e-20, 1e-15),
        ];
        let json = to_json(&r);
        let back: SuiteOutput = serde_json::from_str(&json).unwrap();
        assert_eq!(back.reports, r);
        assert_eq!(to_json(&back.reports), json);
        let csv = to_csv(&r);
        assert!(csv.starts_with("identity_id,parameters,status,witness,tolerance\n"));
        assert!(csv.contains("\"params=1,e,e\""));
        assert!(to_text(&r).contains("2 reports, 0 not verified"));
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_param_list("1,e,e;2,3,5").unwrap().len(), 2);
        assert!(parse_param_list("1,1,1").is_err());
        assert_eq!(parse_x_list("0.3,1").unwrap(), vec![rat(3, 10), rat(1, 1)]);
        assert_eq!("csv".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
        assert!("xml".parse::<OutputFormat>().is_err());
    }
}
