//! Parameterized Genocchi-type numbers and polynomials, their interpolating
//! zeta function, and an audit harness that checks the identities they obey.
//!
//! Polynomials are exact, over the rationals, in the indeterminates
//! `La = ln a`, `Lb = ln b`, `Lc = ln c`, `X` and `Y` (see [`exact`]).
//! Numeric work runs at a caller-chosen binary precision (see [`numeric`]).

pub mod altsum;
pub mod audit;
pub mod classical;
pub mod error;
pub mod exact;
pub mod numeric;
pub mod param;
pub mod report;
pub mod series;
pub mod table;
pub mod zeta;

pub use audit::{exit_code, run_suite, AuditConfig, OutputFormat};
pub use error::{Error, Result};
pub use exact::{BigRational, MPoly, Var};
pub use numeric::{ComplexVal, Ctx, Precision};
pub use report::{IdentityReport, Status, Witness};
pub use zeta::{ParamTriple, PosParam};
