//! Verdicts produced by the identity checks.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::{BigRational, MPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Failed,
    DomainError,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::DomainError => "domain_error",
        })
    }
}

/// Either a canonical rendering of `LHS - RHS` (exact checks, or a message
/// for domain errors) or the numeric `|LHS - RHS|`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Numeric(f64),
    Text(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Numeric(v) => write!(f, "{v:e}"),
            Witness::Text(s) => f.write_str(s),
        }
    }
}

/// One cell of the audit: an identity evaluated at one parameter assignment.
///
/// `status == Verified` exactly when the witness is the zero polynomial
/// (exact checks) or does not exceed `tolerance` (numeric checks).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub witness: Witness,
    pub tolerance: Option<f64>,
}

/// Anything whose exact difference can be tested for zero and rendered.
pub trait ExactDifference {
    fn is_zero_difference(&self) -> bool;
    fn render(&self) -> String;
}

impl ExactDifference for MPoly {
    fn is_zero_difference(&self) -> bool {
        self.is_zero()
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl ExactDifference for BigRational {
    fn is_zero_difference(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn render(&self) -> String {
        MPoly::constant(self.clone()).to_string()
    }
}

fn params<K: Into<String>, I: IntoIterator<Item = (K, String)>>(it: I) -> BTreeMap<String, String> {
    it.into_iter().map(|(k, v)| (k.into(), v)).collect()
}

impl IdentityReport {
    /// Exact check from the difference `LHS - RHS`.
    pub fn exact<K, I, D>(id: &str, parameters: I, difference: D) -> Self
    where
        K: Into<String>,
        I: IntoIterator<Item = (K, String)>,
        D: ExactDifference,
    {
        let status = if difference.is_zero_difference() {
            Status::Verified
        } else {
            Status::Failed
        };
        IdentityReport {
            identity_id: id.to_string(),
            parameters: params(parameters),
            status,
            witness: Witness::Text(difference.render()),
            tolerance: None,
        }
    }

    /// Numeric check from `|LHS - RHS|` and an absolute tolerance.
    pub fn numeric<K, I>(id: &str, parameters: I, abs_diff: f64, tolerance: f64) -> Self
    where
        K: Into<String>,
        I: IntoIterator<Item = (K, String)>,
    {
        if !abs_diff.is_finite() {
            return IdentityReport::failed_with(id, parameters, format!("non-finite difference {abs_diff}"));
        }
        let status = if abs_diff <= tolerance {
            Status::Verified
        } else {
            Status::Failed
        };
        IdentityReport {
            identity_id: id.to_string(),
            parameters: params(parameters),
            status,
            witness: Witness::Numeric(abs_diff),
            tolerance: Some(tolerance),
        }
    }

    /// Failed check with a free-form witness (e.g. a summary over a sweep).
    pub fn failed_with<K, I>(id: &str, parameters: I, witness: String) -> Self
    where
        K: Into<String>,
        I: IntoIterator<Item = (K, String)>,
    {
        IdentityReport {
            identity_id: id.to_string(),
            parameters: params(parameters),
            status: Status::Failed,
            witness: Witness::Text(witness),
            tolerance: None,
        }
    }

    pub fn domain_error<K, I>(id: &str, parameters: I, err: &Error) -> Self
    where
        K: Into<String>,
        I: IntoIterator<Item = (K, String)>,
    {
        IdentityReport {
            identity_id: id.to_string(),
            parameters: params(parameters),
            status: Status::DomainError,
            witness: Witness::Text(err.to_string()),
            tolerance: None,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// Reports for statements checked as printed, which are expected to fail.
    pub fn is_printed_variant(&self) -> bool {
        self.identity_id.ends_with("-printed")
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.parameters.get(key).map(String::as_str)
    }

    /// Parameters rendered as `k=v;k=v`.
    pub fn parameters_string(&self) -> String {
        self.parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Compare parameter values numerically when both parse as numbers.
fn value_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<f64>(), b.parse::<f64>()) {
        (Ok(x), Ok(y)) => x.partial_cmp(&y).unwrap_or(Ordering::Equal).then_with(|| a.cmp(b)),
        _ => a.cmp(b),
    }
}

/// Deterministic report order: identity id, then parameters key by key.
pub fn report_order(a: &IdentityReport, b: &IdentityReport) -> Ordering {
    a.identity_id.cmp(&b.identity_id).then_with(|| {
        let mut ia = a.parameters.iter();
        let mut ib = b.parameters.iter();
        loop {
            match (ia.next(), ib.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ka, va)), Some((kb, vb))) => {
                    let c = ka.cmp(kb).then_with(|| value_cmp(va, vb));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Var};

    #[test]
    fn exact_status_follows_difference() {
        let ok = IdentityReport::exact("t", [("n", "1".to_string())], MPoly::zero());
        assert!(ok.is_verified());
        assert_eq!(ok.witness, Witness::Text("0".into()));
        let bad = IdentityReport::exact("t", [("n", "1".to_string())], MPoly::var(Var::La));
        assert_eq!(bad.status, Status::Failed);
        assert_eq!(bad.witness, Witness::Text("La".into()));
        let r = IdentityReport::exact("t", Vec::<(&str, String)>::new(), int(3));
        assert_eq!(r.witness, Witness::Text("3".into()));
    }

    #[test]
    fn numeric_status_follows_tolerance() {
        let r = IdentityReport::numeric("t", [("s", "2".to_string())], 1e-20, 1e-18);
        assert!(r.is_verified());
        let r = IdentityReport::numeric("t", [("s", "2".to_string())], 1e-10, 1e-18);
        assert_eq!(r.status, Status::Failed);
    }

    #[test]
    fn ordering_is_numeric_aware() {
        let a = IdentityReport::exact("id", [("n", "2".to_string())], MPoly::zero());
        let b = IdentityReport::exact("id", [("n", "10".to_string())], MPoly::zero());
        assert_eq!(report_order(&a, &b), Ordering::Less);
        let c = IdentityReport::exact("a", [("n", "10".to_string())], MPoly::zero());
        assert_eq!(report_order(&c, &a), Ordering::Less);
    }

    #[test]
    fn printed_variants_are_recognised() {
        let r = IdentityReport::exact("g3-printed", Vec::<(&str, String)>::new(), MPoly::zero());
        assert!(r.is_printed_variant());
    }
}
