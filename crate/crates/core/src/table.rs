//! Value tables for the command line.

use std::str::FromStr;

use serde::Serialize;

use crate::audit::OutputFormat;
use crate::classical::ClassicalTable;
use crate::error::{Error, Result};
use crate::exact::BigRational;
use crate::numeric::{ComplexVal, Ctx, Precision};
use crate::param::{g_number, g_poly};
use crate::zeta::{parse_exact, zeta_g, ParamTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    GenocchiClassical,
    GNumber,
    GPoly,
    Zeta,
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "genocchi-classical" => Ok(TableKind::GenocchiClassical),
            "g-number" => Ok(TableKind::GNumber),
            "g-poly" => Ok(TableKind::GPoly),
            "zeta" => Ok(TableKind::Zeta),
            _ => Err(Error::Usage(format!(
                "unknown table kind {s:?} (genocchi-classical, g-number, g-poly, zeta)"
            ))),
        }
    }
}

/// Arguments of a `zeta` evaluation.
#[derive(Debug, Clone)]
pub struct ZetaArgs {
    pub s_re: BigRational,
    pub s_im: BigRational,
    pub x: BigRational,
    pub params: ParamTriple,
    pub precision: Precision,
}

/// Parse `RE` or `RE,IM`.
pub fn parse_complex(s: &str) -> Result<(BigRational, BigRational)> {
    match s.split_once(',') {
        Some((re, im)) => Ok((parse_exact(re)?, parse_exact(im)?)),
        None => Ok((parse_exact(s)?, BigRational::from_integer(0.into()))),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub key: String,
    pub value: String,
}

/// `Z(s, x; a, b, c)` and its error estimate in scientific notation with as
/// many digits as the precision carries.
pub fn zeta_value(args: &ZetaArgs) -> Result<(String, String)> {
    let ctx = Ctx::new(args.precision)?;
    let s = ComplexVal::from_rational(&ctx, &args.s_re, &args.s_im);
    let v = zeta_g(&ctx, &s, &args.x, &args.params)?;
    Ok((
        v.value.format(&ctx, args.precision.decimal_digits()),
        format!("{:.1e}", v.abs_err),
    ))
}

pub fn table_rows(kind: TableKind, max_n: usize, zeta: Option<&ZetaArgs>) -> Result<Vec<Row>> {
    let row = |n: usize, value: String| Row {
        key: n.to_string(),
        value,
    };
    match kind {
        TableKind::GenocchiClassical => {
            let t = ClassicalTable::new(max_n);
            Ok((0..=max_n).map(|n| row(n, t.genocchi(n).to_string())).collect())
        }
        TableKind::GNumber => Ok((0..=max_n).map(|n| row(n, g_number(n).value.to_string())).collect()),
        TableKind::GPoly => Ok((0..=max_n).map(|n| row(n, g_poly(n).value.to_string())).collect()),
        TableKind::Zeta => {
            let args = zeta.ok_or_else(|| Error::Usage("zeta table needs s, x, a, b, c".into()))?;
            let (value, err) = zeta_value(args)?;
            Ok(vec![
                Row {
                    key: "value".into(),
                    value,
                },
                Row {
                    key: "abs_err".into(),
                    value: err,
                },
            ])
        }
    }
}

pub fn render_rows(rows: &[Row], key_name: &str, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => rows
            .iter()
            .map(|r| format!("{}\t{}\n", r.key, r.value))
            .collect(),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([key_name, "value"]).expect("in-memory write");
            for r in rows {
                w.write_record([&r.key, &r.value]).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 fields")
        }
        OutputFormat::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| serde_json::json!({ key_name: r.key, "value": r.value }))
                .collect();
            let mut s = serde_json::to_string_pretty(&v).expect("rows serialize");
            s.push('\n');
            s
        }
    }
}

/// Table of the requested kind rendered in `format`.
pub fn emit_table(
    kind: TableKind,
    max_n: usize,
    zeta: Option<&ZetaArgs>,
    format: OutputFormat,
) -> Result<String> {
    let rows = table_rows(kind, max_n, zeta)?;
    let key = if kind == TableKind::Zeta { "quantity" } else { "n" };
    Ok(render_rows(&rows, key, format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_table() {
        let rows = table_rows(TableKind::GenocchiClassical, 8, None).unwrap();
        let vals: Vec<&str> = rows.iter().map(|r| r.value.as_str()).collect();
        assert_eq!(vals, ["0", "1", "-1", "0", "1", "0", "-3", "0", "17"]);
    }

    #[test]
    fn g_number_row() {
        let rows = table_rows(TableKind::GNumber, 2, None).unwrap();
        assert_eq!(rows[2].value, "-La - Lb");
        let text = emit_table(TableKind::GNumber, 2, None, OutputFormat::Text).unwrap();
        assert_eq!(text, "0\t0\n1\t1\n2\t-La - Lb\n");
        let csv = emit_table(TableKind::GPoly, 2, None, OutputFormat::Csv).unwrap();
        assert_eq!(csv, "n,value\n0,0\n1,1\n2,2*Lc*X - La - Lb\n");
    }

    #[test]
    fn zeta_row() {
        let args = ZetaArgs {
            s_re: parse_exact("2").unwrap(),
            s_im: parse_exact("0").unwrap(),
            x: parse_exact("1").unwrap(),
            params: "1,e,e".parse().unwrap(),
            precision: Precision::default(),
        };
        let rows = table_rows(TableKind::Zeta, 0, Some(&args)).unwrap();
        assert!(rows[0].value.starts_with("1.6449340668"), "{}", rows[0].value);
        assert!(table_rows(TableKind::Zeta, 0, None).is_err());
    }

    #[test]
    fn kinds_and_complex_args() {
        assert!("bogus".parse::<TableKind>().is_err());
        let (re, im) = parse_complex("2,0.5").unwrap();
        assert_eq!(re, parse_exact("2").unwrap());
        assert_eq!(im, parse_exact("1/2").unwrap());
    }
}
