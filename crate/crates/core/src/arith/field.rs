//! The real quartic field Q(β), β = 2cos(π/10), with minimal polynomial
//! β⁴ − 5β² + 5.
//!
//! Every algebraic constant in the level-20 identities lives here:
//! √5 = 2β² − 5, √(10+2√5) = 2β, √(10−2√5) = 2√5/β and the values
//! α_k = −2cos(kπ/10) for 1 ≤ k ≤ 9. Elements are stored as coordinates in
//! the power basis {1, β, β², β³}; the numeric embedding sends β to the
//! largest real root of the minimal polynomial, ≈ 1.9021130325903.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use rug::float::Round;
use rug::Float;

use super::Rat;
use crate::error::{Error, Result};

/// Element c0 + c1·β + c2·β² + c3·β³ of Q(β).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KElem {
    coords: [Rat; 4],
}

impl KElem {
    pub fn new(c0: Rat, c1: Rat, c2: Rat, c3: Rat) -> Self {
        KElem {
            coords: [c0, c1, c2, c3],
        }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        KElem::new(Rat::from(c[0]), Rat::from(c[1]), Rat::from(c[2]), Rat::from(c[3]))
    }

    pub fn zero() -> Self {
        KElem::default()
    }

    pub fn one() -> Self {
        KElem::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        KElem::new(r, Rat::zero(), Rat::zero(), Rat::zero())
    }

    /// The generator β.
    pub fn beta() -> Self {
        KElem::from_ints([0, 1, 0, 0])
    }

    pub fn coords(&self) -> &[Rat; 4] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    /// The value as a rational when the β-coordinates vanish.
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.coords[1..].iter().all(Rat::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        KElem {
            coords: std::array::from_fn(|i| &self.coords[i] * r),
        }
    }

    /// Multiplicative inverse, by solving (multiplication-by-self) · x = 1
    /// over the rationals.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Column j holds the coordinates of self·β^j.
        let mut cols = Vec::with_capacity(4);
        let mut power = self.clone();
        for _ in 0..4 {
            cols.push(power.clone());
            power = &power * &KElem::beta();
        }
        let mut m: Vec<Vec<Rat>> = (0..4)
            .map(|row| {
                let mut r: Vec<Rat> = cols.iter().map(|c| c.coords[row].clone()).collect();
                r.push(if row == 0 { Rat::one() } else { Rat::zero() });
                r
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| !m[r][col].is_zero())
                .expect("multiplication matrix of a nonzero field element is invertible");
            m.swap(col, pivot);
            let p = m[col][col].recip()?;
            for entry in m[col].iter_mut() {
                *entry = &*entry * &p;
            }
            for r in 0..4 {
                if r != col && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in col..5 {
                        let delta = &factor * &m[col][c];
                        m[r][c] -= &delta;
                    }
                }
            }
        }
        Ok(KElem::new(
            m[0][4].clone(),
            m[1][4].clone(),
            m[2][4].clone(),
            m[3][4].clone(),
        ))
    }

    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 {
            return self.inv()?.pow(-exp);
        }
        let mut acc = KElem::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// β evaluated at `prec` bits: sqrt((5 + √5)/2).
    pub fn beta_float(prec: u32) -> Float {
        let s5 = Float::with_val(prec, 5).sqrt();
        let half = Float::with_val(prec, s5 + 5u32) / 2u32;
        half.sqrt()
    }

    /// Numeric value at `prec` bits of working precision.
    pub fn to_float(&self, prec: u32) -> Float {
        let beta = KElem::beta_float(prec);
        let mut acc = Float::with_val(prec, 0);
        for c in self.coords.iter().rev() {
            acc *= &beta;
            acc += Float::with_val(prec, c.as_rational());
        }
        acc
    }

    /// Decimal approximation with `digits` significant digits, rounded to
    /// nearest. Zero renders as `0.` followed by `digits` zeros.
    pub fn embed(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return format!("0.{}", "0".repeat(digits));
        }
        let prec = (digits as f64 * std::f64::consts::LOG2_10) as u32 + 64;
        let v = self.to_float(prec);
        format_significant(&v, digits)
    }
}

/// Render `v` positionally with `digits` significant digits.
pub fn format_significant(v: &Float, digits: usize) -> String {
    let digits = digits.max(1);
    if v.is_zero() {
        return format!("0.{}", "0".repeat(digits));
    }
    let (negative, mantissa, exp) = v
        .to_sign_string_exp_round(10, Some(digits), Round::Nearest);
    let exp = exp.expect("finite nonzero float has an exponent");
    // value = 0.mantissa × 10^exp
    let sign = if negative { "-" } else { "" };
    let body = if exp <= 0 {
        format!("0.{}{}", "0".repeat((-exp) as usize), mantissa)
    } else if exp as usize >= mantissa.len() {
        format!("{}{}", mantissa, "0".repeat(exp as usize - mantissa.len()))
    } else {
        let (int, frac) = mantissa.split_at(exp as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}

impl fmt::Display for KElem {
    /// Polynomial in β, e.g. `-5 + 2*β^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let coeff = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match i {
                0 => write!(f, "{coeff}")?,
                _ => {
                    let basis = if i == 1 { "β".to_string() } else { format!("β^{i}") };
                    if mag == Rat::one() {
                        write!(f, "{basis}")?
                    } else {
                        write!(f, "{coeff}*{basis}")?
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KElem[{self}]")
    }
}

impl<'a> Add<&'a KElem> for &'a KElem {
    type Output = KElem;
    fn add(self, rhs: &'a KElem) -> KElem {
        KElem {
            coords: std::array::from_fn(|i| &self.coords[i] + &rhs.coords[i]),
        }
    }
}

impl<'a> Sub<&'a KElem> for &'a KElem {
    type Output = KElem;
    fn sub(self, rhs: &'a KElem) -> KElem {
        KElem {
            coords: std::array::from_fn(|i| &self.coords[i] - &rhs.coords[i]),
        }
    }
}

impl<'a> Mul<&'a KElem> for &'a KElem {
    type Output = KElem;
    fn mul(self, rhs: &'a KElem) -> KElem {
        let mut p: [Rat; 7] = Default::default();
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    p[i + j] += &(a * b);
                }
            }
        }
        // β^k = 5β^(k-2) − 5β^(k-4) for k ≥ 4
        for k in (4..7).rev() {
            if p[k].is_zero() {
                continue;
            }
            let five = &p[k] * &Rat::from(5);
            p[k - 2] += &five;
            p[k - 4] -= &five;
        }
        let [c0, c1, c2, c3, ..] = p;
        KElem::new(c0, c1, c2, c3)
    }
}

impl Add for KElem {
    type Output = KElem;
    fn add(self, rhs: KElem) -> KElem {
        &self + &rhs
    }
}

impl Sub for KElem {
    type Output = KElem;
    fn sub(self, rhs: KElem) -> KElem {
        &self - &rhs
    }
}

impl Mul for KElem {
    type Output = KElem;
    fn mul(self, rhs: KElem) -> KElem {
        &self * &rhs
    }
}

impl Neg for KElem {
    type Output = KElem;
    fn neg(self) -> KElem {
        KElem {
            coords: self.coords.map(|c| -c),
        }
    }
}

impl Neg for &KElem {
    type Output = KElem;
    fn neg(self) -> KElem {
        -self.clone()
    }
}

impl<'a> AddAssign<&'a KElem> for KElem {
    fn add_assign(&mut self, rhs: &'a KElem) {
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += b;
        }
    }
}

impl<'a> SubAssign<&'a KElem> for KElem {
    fn sub_assign(&mut self, rhs: &'a KElem) {
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a -= b;
        }
    }
}

/// Named algebraic constants appearing in the identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstName {
    /// √5
    Sqrt5,
    /// √(10 + 2√5)
    Sqrt10P2S5,
    /// √(10 − 2√5)
    Sqrt10M2S5,
    /// √(50 − 10√5)
    Sqrt50M10S5,
    /// α_k = −2cos(kπ/10), valid for 1 ≤ k ≤ 9
    Alpha(u8),
    /// (√5 + 1)/2
    GoldenP,
    /// (√5 − 1)/2
    GoldenM,
}

impl ConstName {
    pub fn all() -> Vec<ConstName> {
        let mut v = vec![
            ConstName::Sqrt5,
            ConstName::Sqrt10P2S5,
            ConstName::Sqrt10M2S5,
            ConstName::Sqrt50M10S5,
            ConstName::GoldenP,
            ConstName::GoldenM,
        ];
        v.extend((1..=9).map(ConstName::Alpha));
        v
    }
}

impl fmt::Display for ConstName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstName::Sqrt5 => write!(f, "SQRT5"),
            ConstName::Sqrt10P2S5 => write!(f, "SQRT_10P2S5"),
            ConstName::Sqrt10M2S5 => write!(f, "SQRT_10M2S5"),
            ConstName::Sqrt50M10S5 => write!(f, "SQRT_50M10S5"),
            ConstName::Alpha(k) => write!(f, "ALPHA({k})"),
            ConstName::GoldenP => write!(f, "GOLDEN_P"),
            ConstName::GoldenM => write!(f, "GOLDEN_M"),
        }
    }
}

impl FromStr for ConstName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let name = match t.as_str() {
            "SQRT5" => ConstName::Sqrt5,
            "SQRT_10P2S5" => ConstName::Sqrt10P2S5,
            "SQRT_10M2S5" => ConstName::Sqrt10M2S5,
            "SQRT_50M10S5" => ConstName::Sqrt50M10S5,
            "GOLDEN_P" => ConstName::GoldenP,
            "GOLDEN_M" => ConstName::GoldenM,
            _ => {
                let k = t
                    .strip_prefix("ALPHA(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|k| k.trim().parse::<u8>().ok())
                    .ok_or_else(|| Error::UnknownConstant(s.to_string()))?;
                ConstName::Alpha(k)
            }
        };
        Ok(name)
    }
}

/// 2cos(kπ/10) by the Chebyshev recurrence c_{k+1} = β·c_k − c_{k−1}.
fn two_cos_k_pi_10(k: u8) -> KElem {
    let mut prev = KElem::from_rat(Rat::from(2));
    let mut cur = KElem::beta();
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &(&KElem::beta() * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact coordinates of a named constant.
pub fn const_lookup(name: ConstName) -> Result<KElem> {
    let sqrt5 = KElem::from_ints([-5, 0, 2, 0]);
    let value = match name {
        ConstName::Sqrt5 => sqrt5,
        ConstName::Sqrt10P2S5 => KElem::from_ints([0, 2, 0, 0]),
        ConstName::Sqrt10M2S5 => sqrt10m2s5(),
        ConstName::Sqrt50M10S5 => &sqrt5 * &sqrt10m2s5(),
        ConstName::GoldenP => (&sqrt5 + &KElem::one()).scale(&Rat::frac(1, 2)),
        ConstName::GoldenM => (&sqrt5 - &KElem::one()).scale(&Rat::frac(1, 2)),
        ConstName::Alpha(k) if (1..=9).contains(&k) => -two_cos_k_pi_10(k),
        ConstName::Alpha(_) => return Err(Error::UnknownConstant(name.to_string())),
    };
    Ok(value)
}

// (10+2√5)(10−2√5) = 80, so √(10−2√5) = 4√5 / √(10+2√5) = 2√5/β.
fn sqrt10m2s5() -> KElem {
    let four_sqrt5 = KElem::from_ints([-20, 0, 8, 0]);
    let two_beta = KElem::from_ints([0, 2, 0, 0]);
    &four_sqrt5 * &two_beta.inv().expect("2β is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(name: ConstName) -> KElem {
        const_lookup(name).unwrap()
    }

    fn close(a: &KElem, expected: f64, tol: f64) -> bool {
        (a.to_float(128).to_f64() - expected).abs() < tol
    }

    #[test]
    fn additive_inverse() {
        let one = KElem::one();
        assert!((&one + &(-&one)).is_zero());
    }

    #[test]
    fn doubling_sqrt_10p2s5() {
        let s = c(ConstName::Sqrt10P2S5);
        let d = &s + &s;
        assert_eq!(d, s.scale(&Rat::from(2)));
        assert!(close(&d, 7.608452, 1e-6));
        assert!(close(&s, 3.804226, 1e-6));
    }

    #[test]
    fn alpha_one_plus_alpha_nine_vanishes() {
        assert!((&c(ConstName::Alpha(1)) + &c(ConstName::Alpha(9))).is_zero());
    }

    #[test]
    fn sqrt5_squared() {
        let s = c(ConstName::Sqrt5);
        assert_eq!(&s * &s, KElem::from_ints([5, 0, 0, 0]));
    }

    #[test]
    fn product_of_conjugate_radicals() {
        let p = &c(ConstName::Sqrt10P2S5) * &c(ConstName::Sqrt10M2S5);
        assert_eq!(p, c(ConstName::Sqrt5).scale(&Rat::from(4)));
        assert!(close(&p, 8.944272, 1e-6));
        assert!(close(&c(ConstName::Sqrt10M2S5), 2.351141, 1e-6));
    }

    #[test]
    fn minimal_polynomial_reduction() {
        let b = KElem::beta();
        let b3 = KElem::from_ints([0, 0, 0, 1]);
        assert_eq!(&b * &b3, KElem::from_ints([-5, 0, 5, 0]));
    }

    #[test]
    fn inverses() {
        assert_eq!(KElem::one().inv().unwrap(), KElem::one());
        let s = c(ConstName::Sqrt5);
        assert_eq!(s.inv().unwrap(), s.scale(&Rat::frac(1, 5)));
        assert_eq!(c(ConstName::GoldenP).inv().unwrap(), c(ConstName::GoldenM));
        assert_eq!(KElem::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn embedding_strings() {
        assert_eq!(c(ConstName::Sqrt5).embed(10), "2.236067977");
        assert_eq!(c(ConstName::Alpha(2)).embed(10), "-1.618033989");
        assert_eq!(KElem::zero().embed(5), "0.00000");
        assert_eq!(KElem::from_rat(Rat::frac(1, 400)).embed(3), "0.00250");
        assert_eq!(KElem::from_rat(Rat::from(1234)).embed(2), "1200");
    }

    #[test]
    fn named_constants() {
        assert!(c(ConstName::Alpha(5)).is_zero());
        assert_eq!(c(ConstName::Alpha(6)), c(ConstName::GoldenM));
        assert_eq!(c(ConstName::Alpha(1)), -KElem::beta());
        assert!(close(&c(ConstName::Alpha(1)), -1.902113, 1e-6));
        assert!(close(&c(ConstName::Sqrt50M10S5), 5.257311, 1e-6));
        assert!(const_lookup(ConstName::Alpha(10)).is_err());
        assert!(const_lookup(ConstName::Alpha(0)).is_err());
    }

    // The closed forms listed next to the α table agree with the recurrence.
    #[test]
    fn alpha_table_closed_forms() {
        let half = Rat::frac(1, 2);
        let a = c(ConstName::Sqrt10P2S5).scale(&half);
        let b = c(ConstName::Sqrt10M2S5).scale(&half);
        let gp = c(ConstName::GoldenP);
        let gm = c(ConstName::GoldenM);
        let table = [-a.clone(), -gp.clone(), -b.clone(), -gm.clone(), KElem::zero(), gm, b, gp, a];
        for (k, expected) in (1..=9).zip(table) {
            assert_eq!(c(ConstName::Alpha(k)), expected, "alpha_{k}");
        }
    }

    #[test]
    fn const_names_round_trip() {
        for name in ConstName::all() {
            assert_eq!(name.to_string().parse::<ConstName>().unwrap(), name);
        }
        assert!("SQRT7".parse::<ConstName>().is_err());
    }

    #[test]
    fn display_polynomial() {
        assert_eq!(c(ConstName::Sqrt5).to_string(), "-5 + 2*β^2");
        assert_eq!(KElem::beta().to_string(), "β");
        assert_eq!(c(ConstName::GoldenM).to_string(), "-3 + β^2");
    }
}
