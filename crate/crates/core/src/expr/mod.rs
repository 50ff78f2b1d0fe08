//! Series expressions: a small AST shared by the identity registry and the
//! `expand` command, evaluated to a requested truncation order.

mod parse;

use std::fmt;
use std::ops;

use rug::Integer;

use crate::arith::{const_lookup, Coeff, ConstName, KElem, Rat};
use crate::cfractions::{cf_series, CfName};
use crate::eisenstein::{lambert_series, LambertSpec};
use crate::error::{Error, Result};
use crate::qfunctions::{eta_quotient, omega, pochhammer, theta_f, EtaSpec, MonomialArg, ThetaMethod};
use crate::series::QSeries;

pub use parse::parse;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rat),
    Named(ConstName),
    Field(KElem),
    /// q^exp
    Monomial(Rat),
    Poch { a: MonomialArg, step: Rat },
    Theta { a: MonomialArg, b: MonomialArg, method: ThetaMethod },
    Eta(EtaSpec),
    Omega { k: u8, scale: Rat },
    Cf { name: CfName, scale: Rat },
    Lambert(LambertSpec),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, Rat),
    /// e(q^m)
    Subst(Box<Expr>, Rat),
}

/// Padding schedule (in units of q) when a first evaluation falls short of
/// the requested order because of unforeseen cancellation.
const PADS: [i64; 4] = [0, 1, 3, 7];

impl Expr {
    pub fn pow(self, e: Rat) -> Expr {
        Expr::Pow(Box::new(self), e)
    }

    pub fn root(self, n: u32) -> Expr {
        self.pow(Rat::frac(1, n as i64))
    }

    pub fn subst(self, m: Rat) -> Expr {
        Expr::Subst(Box::new(self), m)
    }

    /// True when some leaf has coefficients outside Q.
    pub fn requires_field(&self) -> bool {
        match self {
            Expr::Named(n) => const_lookup(*n).map_or(true, |k| k.as_rational().is_none()),
            Expr::Field(k) => k.as_rational().is_none(),
            Expr::Omega { k, .. } => *k != 5,
            Expr::Num(_)
            | Expr::Monomial(_)
            | Expr::Poch { .. }
            | Expr::Theta { .. }
            | Expr::Eta(_)
            | Expr::Cf { .. }
            | Expr::Lambert(_) => false,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => a.requires_field() || b.requires_field(),
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Subst(a, _) => a.requires_field(),
        }
    }

    /// Static lower estimate of the valuation, used to plan child orders.
    pub fn valuation_estimate(&self) -> Rat {
        match self {
            Expr::Num(_) | Expr::Named(_) | Expr::Field(_) | Expr::Poch { .. } | Expr::Omega { .. } => Rat::zero(),
            Expr::Monomial(e) => e.clone(),
            Expr::Theta { a, b, .. } => theta_min_exponent(a, b),
            Expr::Eta(spec) => spec.offset(),
            Expr::Cf { name, scale } => &name.offset() * scale,
            Expr::Lambert(spec) => {
                let a = spec.terms.iter().map(|t| t.1).min().unwrap_or(1);
                Rat::from(a as i64)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => std::cmp::min(a.valuation_estimate(), b.valuation_estimate()),
            Expr::Mul(a, b) => &a.valuation_estimate() + &b.valuation_estimate(),
            Expr::Div(a, b) => &a.valuation_estimate() - &b.valuation_estimate(),
            Expr::Neg(a) => a.valuation_estimate(),
            Expr::Pow(a, e) => e * &a.valuation_estimate(),
            Expr::Subst(a, m) => m * &a.valuation_estimate(),
        }
    }

    /// Evaluate so that the result is exact below `order`, then truncate to it.
    pub fn eval<C: Coeff>(&self, order: &Rat) -> Result<QSeries<C>> {
        let mut last = None;
        for pad in PADS {
            let s = self.eval_at::<C>(&(order + &Rat::from(pad)))?;
            if s.order() >= order {
                return Ok(s.truncate(order));
            }
            last = Some(s.order().clone());
        }
        Err(Error::InsufficientOrder {
            requested: order.clone(),
            available: last.expect("at least one attempt"),
        })
    }

    fn eval_at<C: Coeff>(&self, order: &Rat) -> Result<QSeries<C>> {
        let from_rat = |s: QSeries<Rat>| s.map_coeffs(C::from_rat);
        let from_field = |s: QSeries<KElem>| s.try_map_coeffs(C::try_from_kelem).ok_or(Error::RingMismatch);
        let constant = |k: KElem| -> Result<QSeries<C>> {
            let c = C::try_from_kelem(&k).ok_or(Error::RingMismatch)?;
            Ok(QSeries::monomial(c, Rat::zero(), order.clone()))
        };
        match self {
            Expr::Num(r) => Ok(QSeries::monomial(C::from_rat(r), Rat::zero(), order.clone())),
            Expr::Named(n) => constant(const_lookup(*n)?),
            Expr::Field(k) => constant(k.clone()),
            Expr::Monomial(e) => Ok(QSeries::monomial(C::one(), e.clone(), order.clone())),
            Expr::Poch { a, step } => Ok(from_rat(pochhammer(a, step, order)?)),
            Expr::Theta { a, b, method } => Ok(from_rat(theta_f(a, b, order, *method)?)),
            Expr::Eta(spec) => Ok(from_rat(eta_quotient(spec, order)?)),
            Expr::Omega { k, scale } => from_field(omega(*k, scale, order)?),
            Expr::Cf { name, scale } => Ok(from_rat(cf_series(*name, scale, order)?)),
            Expr::Lambert(spec) => Ok(from_rat(lambert_series(spec, order))),
            Expr::Add(a, b) => Ok(a.eval_at::<C>(order)?.add(&b.eval_at(order)?)),
            Expr::Sub(a, b) => Ok(a.eval_at::<C>(order)?.sub(&b.eval_at(order)?)),
            Expr::Neg(a) => Ok(a.eval_at::<C>(order)?.neg()),
            Expr::Mul(a, b) => {
                let (va, vb) = (a.valuation_estimate(), b.valuation_estimate());
                let x = a.eval_at::<C>(&past_leading(order - &vb, &va))?;
                let y = b.eval_at::<C>(&past_leading(order - &va, &vb))?;
                Ok(x.mul(&y))
            }
            Expr::Div(a, b) => {
                let (va, vb) = (a.valuation_estimate(), b.valuation_estimate());
                let x = a.eval_at::<C>(&past_leading(order + &vb, &va))?;
                let two_vb = &vb + &vb;
                let y = b.eval_at::<C>(&past_leading(&(order - &va) + &two_vb, &vb))?;
                Ok(x.mul(&y.unit_inv()?))
            }
            Expr::Pow(a, e) => {
                let v = a.valuation_estimate();
                let child_order = &(order - &(e * &v)) + &v;
                a.eval_at::<C>(&past_leading(child_order, &v))?.pow_rat(e)
            }
            Expr::Subst(a, m) => a.eval_at::<C>(&(order / m))?.substitute(m),
        }
    }
}

/// A child order that also reaches past the child's expected leading term, so
/// the leading term is known even when the product is truncated below it.
fn past_leading(order: Rat, valuation: &Rat) -> Rat {
    let floor = valuation + &Rat::one();
    std::cmp::max(order, floor)
}

fn theta_min_exponent(a: &MonomialArg, b: &MonomialArg) -> Rat {
    let s = &a.exp + &b.exp;
    if !s.is_positive() {
        return Rat::zero();
    }
    let exponent = |n: &Integer| {
        let up = Rat::from(Integer::from(n * Integer::from(n + 1)) / 2);
        let down = Rat::from(Integer::from(n * Integer::from(n - 1)) / 2);
        &(&a.exp * &up) + &(&b.exp * &down)
    };
    let vertex = (&b.exp - &a.exp) / (&s * &Rat::from(2));
    let n0 = vertex.floor();
    let n1 = Integer::from(&n0 + 1);
    std::cmp::min(exponent(&n0), exponent(&n1))
}

// Constructors used by the registry.

pub fn num(v: i64) -> Expr {
    Expr::Num(Rat::from(v))
}

pub fn rat(n: i64, d: i64) -> Expr {
    Expr::Num(Rat::frac(n, d))
}

pub fn named(c: ConstName) -> Expr {
    Expr::Named(c)
}

pub fn q_pow(n: i64, d: i64) -> Expr {
    Expr::Monomial(Rat::frac(n, d))
}

/// f(sa·q^a, sb·q^b) for integer exponents.
pub fn theta(sa: i64, a: i64, sb: i64, b: i64) -> Expr {
    Expr::Theta {
        a: MonomialArg::int(sa, a),
        b: MonomialArg::int(sb, b),
        method: ThetaMethod::TripleProduct,
    }
}

/// (sa·q^a; q^m)∞
pub fn poch(sa: i64, a: i64, m: i64) -> Expr {
    Expr::Poch {
        a: MonomialArg::int(sa, a),
        step: Rat::from(m),
    }
}

/// Eta quotient from (multiplier, power) pairs given as (num, den) fractions.
pub fn eta(factors: &[((i64, i64), (i64, i64))]) -> Expr {
    Expr::Eta(
        EtaSpec::new(
            factors
                .iter()
                .map(|&((tn, td), (en, ed))| (Rat::frac(tn, td), Rat::frac(en, ed)))
                .collect(),
        )
        .expect("valid eta spec"),
    )
}

pub fn cf(name: CfName, scale: i64) -> Expr {
    Expr::Cf {
        name,
        scale: Rat::from(scale),
    }
}

pub fn omega_at(k: u8, scale: Rat) -> Expr {
    Expr::Omega { k, scale }
}

macro_rules! expr_binop {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl ops::$trait for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

expr_binop!(Add, add, Add);
expr_binop!(Sub, sub, Sub);
expr_binop!(Mul, mul, Mul);
expr_binop!(Div, div, Div);

impl ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

fn fmt_num(f: &mut fmt::Formatter<'_>, r: &Rat) -> fmt::Result {
    if r.is_integer() && !r.is_negative() {
        write!(f, "{r}")
    } else {
        write!(f, "({r})")
    }
}

impl fmt::Display for Expr {
    /// Prints in the grammar accepted by [`parse`], so printing and parsing
    /// round-trip to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) => fmt_num(f, r),
            Expr::Named(n) => write!(f, "{n}"),
            Expr::Field(k) => {
                let c = k.coords();
                write!(f, "k({}, {}, {}, {})", c[0], c[1], c[2], c[3])
            }
            Expr::Monomial(e) => write!(f, "q^({e})"),
            Expr::Poch { a, step } => write!(f, "poch({a}, {step})"),
            Expr::Theta { a, b, method } => {
                let head = match method {
                    ThetaMethod::TripleProduct => "f",
                    ThetaMethod::BilateralSum => "fsum",
                };
                write!(f, "{head}({a}, {b})")
            }
            Expr::Eta(spec) => {
                let fs = spec.factors();
                if fs.len() == 1 && fs[0].1 == Rat::one() {
                    write!(f, "eta({})", fs[0].0)
                } else {
                    let parts: Vec<String> = fs.iter().map(|(t, e)| format!("({t}, {e})")).collect();
                    write!(f, "etaq({})", parts.join(", "))
                }
            }
            Expr::Omega { k, scale } => write!(f, "omega({k}, {scale})"),
            Expr::Cf { name, scale } => write!(f, "{name}({scale})"),
            Expr::Lambert(spec) => write!(f, "lambert({spec})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Pow(a, e) => write!(f, "({a})^({e})"),
            Expr::Subst(a, m) => write!(f, "subst({a}, {m})"),
        }
    }
}
