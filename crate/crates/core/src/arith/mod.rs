//! Exact coefficient arithmetic: rationals, the quartic field Q(β), and the
//! [`Coeff`] trait that lets series code run over either.

mod coeff;
mod field;
mod rat;

pub use coeff::Coeff;
pub use field::{const_lookup, format_significant, ConstName, KElem};
pub use rat::Rat;
