//! Lambert series and the bilateral 1ψ1 sum.

use std::fmt;

use rug::Integer;

use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::qfunctions::{pochhammer, MonomialArg};
use crate::series::QSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LambertWeight {
    #[default]
    None,
    /// Multiply the n-th term by n.
    N,
    /// Multiply the n-th term by the Legendre symbol (n/3).
    Legendre3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Parity {
    #[default]
    All,
    Odd,
}

/// Σ_n weight(n) Σ_terms sign·q^(a·n) / (1 − q^(b·n)).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambertSpec {
    pub modulus: u32,
    /// (negative, residue exponent a)
    pub terms: Vec<(bool, u32)>,
    pub weight: LambertWeight,
    pub parity: Parity,
}

impl LambertSpec {
    /// Terms given as signed residues, e.g. `[3, 7, -13, -17]`.
    pub fn new(modulus: u32, residues: &[i64], weight: LambertWeight, parity: Parity) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("Lambert modulus must be positive".into()));
        }
        if residues.is_empty() || residues.contains(&0) {
            return Err(Error::InvalidArgument("Lambert residues must be nonzero".into()));
        }
        let terms = residues.iter().map(|&a| (a < 0, a.unsigned_abs() as u32)).collect();
        Ok(LambertSpec {
            modulus,
            terms,
            weight,
            parity,
        })
    }
}

impl fmt::Display for LambertSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.modulus)?;
        for (neg, a) in &self.terms {
            write!(f, ", {}{a}", if *neg { "-" } else { "+" })?;
        }
        let w = match self.weight {
            LambertWeight::None => "none",
            LambertWeight::N => "n",
            LambertWeight::Legendre3 => "legendre3",
        };
        let p = match self.parity {
            Parity::All => "all",
            Parity::Odd => "odd",
        };
        write!(f, ", {w}, {p}")
    }
}

/// Quadratic character modulo 3.
pub fn legendre3(n: u64) -> i8 {
    match n % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

pub fn lambert_series(spec: &LambertSpec, order: &Rat) -> QSeries<Rat> {
    let len = if order.is_positive() {
        order.ceil().to_usize().expect("order fits in memory")
    } else {
        0
    };
    let mut v = vec![Integer::new(); len];
    let b = spec.modulus as usize;
    let a_min = spec.terms.iter().map(|t| t.1 as usize).min().unwrap_or(1);
    let mut n = 1usize;
    while n * a_min < len {
        if spec.parity == Parity::Odd && n % 2 == 0 {
            n += 1;
            continue;
        }
        let w: i64 = match spec.weight {
            LambertWeight::None => 1,
            LambertWeight::N => n as i64,
            LambertWeight::Legendre3 => legendre3(n as u64) as i64,
        };
        if w != 0 {
            for &(neg, a) in &spec.terms {
                let c = if neg { -w } else { w };
                let mut e = n * a as usize;
                while e < len {
                    v[e] += c;
                    e += n * b;
                }
            }
        }
        n += 1;
    }
    QSeries::from_lattice(Rat::zero(), Rat::one(), v.into_iter().map(Rat::from).collect(), order.clone())
        .expect("unit step")
}

/// Exponent/sign terms of the bilateral sum Σ_{n∈Z} z^n / (1 − a Q^n) with
/// a = q^a_exp, z = q^z_exp, Q = q^base. For n = −m < 0 the summand is
/// rewritten as −Σ_{j≥1} q^(−z·m + j(base·m − a)), whose exponents grow with m.
pub fn onepsione_terms(a_exp: u32, z_exp: u32, base: u32, order: &Rat) -> Vec<(Rat, Rat)> {
    let (a, z, b) = (a_exp as i64, z_exp as i64, base as i64);
    let below = |e: i64| Rat::from(e) < *order;
    let mut terms = Vec::new();
    let mut n = 0i64;
    while below(z * n) {
        let mut j = 0i64;
        while below(z * n + j * (a + b * n)) {
            terms.push((Rat::from(z * n + j * (a + b * n)), Rat::one()));
            j += 1;
        }
        n += 1;
    }
    let mut m = 1i64;
    while below(m * (b - z) - a) {
        let mut j = 1i64;
        while below(-z * m + j * (b * m - a)) {
            terms.push((Rat::from(-z * m + j * (b * m - a)), Rat::from(-1)));
            j += 1;
        }
        m += 1;
    }
    terms
}

/// Both sides of the 1ψ1 summation at monomial a, z and base q^base:
/// the bilateral sum, and (az, Q/(az), Q, Q; Q)∞ / (a, Q/a, z, Q/z; Q)∞.
pub fn onepsione_pair(a_exp: u32, z_exp: u32, base: u32, order: &Rat) -> Result<(QSeries<Rat>, QSeries<Rat>)> {
    if a_exp == 0 || z_exp == 0 || a_exp >= base || z_exp >= base || a_exp + z_exp >= base {
        return Err(Error::InvalidArgument(format!(
            "1psi1 needs 0 < a, 0 < z and a + z < base; got a = {a_exp}, z = {z_exp}, base = {base}"
        )));
    }
    let left = QSeries::from_terms(onepsione_terms(a_exp, z_exp, base, order), order.clone());
    let m = Rat::from(base as i64);
    let p = |e: u32| pochhammer(&MonomialArg::pos(Rat::from(e as i64)), &m, order);
    let num = p(a_exp + z_exp)?
        .mul(&p(base - a_exp - z_exp)?)
        .mul(&p(base)?.pow_int(2)?);
    let den = p(a_exp)?
        .mul(&p(base - a_exp)?)
        .mul(&p(z_exp)?)
        .mul(&p(base - z_exp)?);
    let right = num.mul(&den.unit_inv()?);
    Ok((left, right))
}
