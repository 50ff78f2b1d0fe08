//! The five continued fractions R, S1, S2, T1, T2.
//!
//! Exact series come from theta quotients; the displayed fractions are
//! evaluated numerically by backward recurrence so the two can be compared.

use std::fmt;
use std::str::FromStr;

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::arith::{Coeff, Rat};
use crate::error::{Error, Result};
use crate::numeric::Precision;
use crate::qfunctions::{theta_f, MonomialArg, ThetaMethod};
use crate::series::QSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CfName {
    R,
    S1,
    S2,
    T1,
    T2,
}

impl CfName {
    pub const ALL: [CfName; 5] = [CfName::R, CfName::S1, CfName::S2, CfName::T1, CfName::T2];

    /// Leading exponent q^offset of the fraction.
    pub fn offset(self) -> Rat {
        match self {
            CfName::R => Rat::frac(1, 5),
            CfName::S1 => Rat::frac(3, 4),
            CfName::S2 => Rat::frac(1, 4),
            CfName::T1 => Rat::one(),
            CfName::T2 => Rat::from(2),
        }
    }

    /// Exponents (a, b, c, d) of the quotient f(−q^a, −q^b) / f(−q^c, −q^d).
    pub fn theta_exponents(self) -> [i64; 4] {
        match self {
            CfName::R => [1, 4, 2, 3],
            CfName::S1 => [1, 9, 4, 6],
            CfName::S2 => [2, 8, 3, 7],
            CfName::T1 => [3, 17, 7, 13],
            CfName::T2 => [1, 19, 9, 11],
        }
    }

    fn display(self) -> CfDisplay {
        let r = Rat::frac;
        match self {
            CfName::R => CfDisplay::RogersRamanujan,
            CfName::S1 => CfDisplay::Paired {
                lead: r(3, 4),
                lead_factor: Rat::one(),
                h: r(5, 2),
                shifts: [r(7, 2), r(3, 2)],
            },
            CfName::S2 => CfDisplay::Paired {
                lead: r(1, 4),
                lead_factor: Rat::from(2),
                h: r(5, 2),
                shifts: [r(9, 2), r(1, 2)],
            },
            CfName::T1 => CfDisplay::Paired {
                lead: Rat::one(),
                lead_factor: Rat::from(3),
                h: Rat::from(5),
                shifts: [Rat::from(8), Rat::from(2)],
            },
            CfName::T2 => CfDisplay::Paired {
                lead: Rat::from(2),
                lead_factor: Rat::one(),
                h: Rat::from(5),
                shifts: [Rat::from(6), Rat::from(4)],
            },
        }
    }
}

impl fmt::Display for CfName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CfName::R => "R",
            CfName::S1 => "S1",
            CfName::S2 => "S2",
            CfName::T1 => "T1",
            CfName::T2 => "T2",
        };
        f.write_str(s)
    }
}

impl FromStr for CfName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CfName::ALL
            .into_iter()
            .find(|n| n.to_string() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown continued fraction `{s}`")))
    }
}

/// Partial quotients of the displayed fraction
/// `lead / (b0 + a1/(b1 + a2/(b2 + …)))`.
enum CfDisplay {
    /// q^(1/5) / (1 + q/(1 + q²/(1 + …))).
    RogersRamanujan,
    /// lead q^lead (1 − q^lead_factor); b_0 = 1 − q^h,
    /// b_n = (1 − q^h)(1 + q^(2hn)), a_n = q^h (1 − q^(2hn − s1))(1 − q^(2hn − s2)).
    Paired {
        lead: Rat,
        lead_factor: Rat,
        h: Rat,
        shifts: [Rat; 2],
    },
}

struct QPow {
    ln_q: Float,
}

impl QPow {
    fn new(q: &Float) -> Self {
        QPow { ln_q: q.clone().ln() }
    }

    fn at(&self, e: &Rat) -> Float {
        let e = Float::with_val(self.ln_q.prec(), e.as_rational());
        (e * &self.ln_q).exp()
    }
}

impl CfDisplay {
    fn lead(&self, qp: &QPow) -> Float {
        match self {
            CfDisplay::RogersRamanujan => qp.at(&Rat::frac(1, 5)),
            CfDisplay::Paired { lead, lead_factor, .. } => qp.at(lead) * (1 - qp.at(lead_factor)),
        }
    }

    /// (a_n, b_n); a_0 is unused.
    fn partial(&self, n: usize, qp: &QPow) -> (Float, Float) {
        let prec = qp.ln_q.prec();
        match self {
            CfDisplay::RogersRamanujan => (qp.at(&Rat::from(n as i64)), Float::with_val(prec, 1)),
            CfDisplay::Paired { h, shifts, .. } => {
                let base = 1 - qp.at(h);
                if n == 0 {
                    return (Float::with_val(prec, 0), base);
                }
                let two_hn = &(h * &Rat::from(2 * n as i64));
                let b = base * (1 + qp.at(two_hn));
                let a = qp.at(h) * (1 - qp.at(&(two_hn - &shifts[0]))) * (1 - qp.at(&(two_hn - &shifts[1])));
                (a, b)
            }
        }
    }
}

/// Exact series of the fraction at q^scale, known below `order`.
pub fn cf_series(name: CfName, scale: &Rat, order: &Rat) -> Result<QSeries<Rat>> {
    cf_root(name, 1, scale, order)
}

/// n-th root of the fraction at q^scale: offset·scale/n times the root of
/// the theta-quotient unit part.
pub fn cf_root(name: CfName, n: u32, scale: &Rat, order: &Rat) -> Result<QSeries<Rat>> {
    if !scale.is_positive() {
        return Err(Error::NonPositiveExponent(scale.clone()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("root index must be positive".into()));
    }
    let offset = name.offset() / Rat::from(n as i64);
    let rel = &(order / scale) - &offset;
    if !rel.is_positive() {
        return Ok(QSeries::zero(order.clone()));
    }
    let [a, b, c, d] = name.theta_exponents();
    let theta = |x: i64, y: i64| {
        theta_f(
            &MonomialArg::neg(Rat::from(x)),
            &MonomialArg::neg(Rat::from(y)),
            &rel,
            ThetaMethod::TripleProduct,
        )
    };
    let unit = theta(a, b)?.mul(&theta(c, d)?.unit_inv()?);
    let unit = if n == 1 { unit } else { unit.nth_root(n)? };
    unit.shift(&offset).substitute(scale)
}

/// Backward evaluation of the displayed fraction truncated after `depth`
/// partial quotients.
pub fn cf_numeric(name: CfName, q: &Float, depth: usize) -> Result<Float> {
    if !(q.is_sign_positive() && *q > 0 && *q < 1) {
        return Err(Error::InvalidArgument(format!("q must lie in (0, 1), got {q}")));
    }
    if depth == 0 {
        return Err(Error::InvalidArgument("depth must be positive".into()));
    }
    let disp = name.display();
    let qp = QPow::new(q);
    let mut tail = disp.partial(depth, &qp).1;
    for k in (0..depth).rev() {
        if tail.is_zero() {
            return Err(Error::ContinuedFractionBreakdown { depth: k + 1 });
        }
        let (a, _) = disp.partial(k + 1, &qp);
        let (_, b) = disp.partial(k, &qp);
        tail = b + a / tail;
    }
    if tail.is_zero() {
        return Err(Error::ContinuedFractionBreakdown { depth: 0 });
    }
    Ok(disp.lead(&qp) / tail)
}

/// Doubles the depth from 8 until two successive values agree within `tol`.
/// Returns the value and the depth used.
pub fn cf_numeric_converged(name: CfName, q: &Float, tol: &Float) -> Result<(Float, usize)> {
    const MAX_DEPTH: usize = 1 << 14;
    let mut depth = 8;
    let mut prev = cf_numeric(name, q, depth)?;
    while depth < MAX_DEPTH {
        depth *= 2;
        let next = cf_numeric(name, q, depth)?;
        let diff = Float::with_val(q.prec(), &next - &prev).abs();
        if diff <= *tol {
            return Ok((next, depth));
        }
        prev = next;
    }
    Err(Error::InvalidArgument(format!(
        "{name} did not converge by depth {MAX_DEPTH} at q = {q}"
    )))
}

/// Value of a truncated series at a real q in (0, 1), with the heuristic tail
/// bound q^order · max|c| / (1 − q^step).
pub fn series_numeric<C: Coeff>(f: &QSeries<C>, q: &Float) -> (Float, Float) {
    let prec = q.prec();
    let qp = QPow::new(q);
    let x = qp.at(f.step());
    let mut acc = Float::with_val(prec, 0);
    let mut max = Float::with_val(prec, 0);
    for c in f.coeffs().iter().rev() {
        let v = c.to_float(prec);
        let a = Float::with_val(prec, v.abs_ref());
        if a > max {
            max = a;
        }
        acc *= &x;
        acc += v;
    }
    let value = acc * qp.at(f.offset());
    let bound = qp.at(f.order()) * max / (1 - x);
    (value, bound)
}

/// [`series_numeric`] at an `f64` sample, for quick use.
pub fn series_numeric_f64<C: Coeff>(f: &QSeries<C>, q: f64, precision: Precision) -> (Float, Float) {
    series_numeric(f, &precision.float(q))
}
