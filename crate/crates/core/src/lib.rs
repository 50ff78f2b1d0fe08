//! Exact verification of q-series identities tied to the Rogers–Ramanujan
//! continued fraction and its order-ten and order-twenty relatives.
//!
//! Series are truncated Puiseux-style expansions ([`QSeries`]) with
//! coefficients in Q or in the quartic field Q(β), β = 2cos(π/10). Both sides
//! of an identity are expanded to a common order and compared term by term;
//! identities that leave the field are checked numerically with MPFR.
//!
//! ```
//! use qverify::{verify, Status, VerifyOptions};
//!
//! let report = verify("eq-prodK", &VerifyOptions::default()).unwrap();
//! assert_eq!(report.status, Status::Pass);
//! ```

pub mod arith;
pub mod cfractions;
pub mod eisenstein;
pub mod error;
pub mod expr;
pub mod numeric;
pub mod qfunctions;
pub mod series;
pub mod verify;

pub use arith::{Coeff, ConstName, KElem, Rat};
pub use cfractions::{cf_numeric, cf_root, cf_series, series_numeric, CfName};
pub use error::{Error, Result};
pub use expr::{parse, Expr};
pub use series::QSeries;
pub use verify::{
    registry, suite_passed, to_json, verify, verify_all, Config, Expected, IdentitySpec, Profile, Report, Ring,
    Status, SuiteOptions, VerifyOptions,
};
