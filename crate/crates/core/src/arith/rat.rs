use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(Rational);

impl Rat {
    pub fn zero() -> Self {
        Rat(Rational::new())
    }

    pub fn one() -> Self {
        Rat::from(1)
    }

    /// `num / den`; fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(Rational::from((num, den))))
    }

    /// Panicking shorthand for literals in builders and tests.
    pub fn frac(num: i64, den: i64) -> Self {
        Rat::new(num, den).expect("nonzero denominator")
    }

    pub fn from_integers(num: Integer, den: Integer) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(Rational::from((num, den))))
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == Ordering::Equal
    }

    pub fn is_positive(&self) -> bool {
        self.0.cmp0() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.0.cmp0() == Ordering::Less
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denom() == 1
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.clone().recip()))
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.clone().abs())
    }

    pub fn floor(&self) -> Integer {
        self.0.clone().floor().into_numer_denom().0
    }

    pub fn ceil(&self) -> Integer {
        self.0.clone().ceil().into_numer_denom().0
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 {
            return self.recip()?.pow(-exp);
        }
        Ok(Rat(rug::ops::Pow::pow(self.0.clone(), exp as u32)))
    }

    /// Largest positive rational `g` with `a/g` and `b/g` both integers.
    /// Zero behaves as the identity.
    pub fn gcd(a: &Rat, b: &Rat) -> Rat {
        if a.is_zero() {
            return b.abs();
        }
        if b.is_zero() {
            return a.abs();
        }
        let num = Integer::from(a.numer().gcd_ref(b.numer()));
        let den = Integer::from(a.denom().lcm_ref(b.denom()));
        Rat::from_integers(num, den).expect("lcm of denominators is nonzero")
    }

    /// Canonical `p/q` rendering, used where a fixed textual schema is required.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat(Rational::from(v))
    }
}

impl From<i32> for Rat {
    fn from(v: i32) -> Self {
        Rat(Rational::from(v))
    }
}

impl From<Integer> for Rat {
    fn from(v: Integer) -> Self {
        Rat(Rational::from(v))
    }
}

impl From<Rational> for Rat {
    fn from(v: Rational) -> Self {
        Rat(v)
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `p`, `p/q` and `-p/q`, with optional surrounding whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            position: 0,
            message: format!("`{s}` is not a rational number"),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: Integer = num.parse().map_err(|_| bad())?;
        let den: Integer = den.parse().map_err(|_| bad())?;
        Rat::from_integers(num, den)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({self})")
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(Rational::from(&self.0 $op &rhs.0))
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    /// Panics on division by zero; use [`Rat::recip`] for a checked inverse.
    fn div(self, rhs: &'a Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(Rational::from(&self.0 / &rhs.0))
    }
}

impl Div<Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(Rational::from(-&self.0))
    }
}

impl<'a> AddAssign<&'a Rat> for Rat {
    fn add_assign(&mut self, rhs: &'a Rat) {
        self.0 += &rhs.0;
    }
}

impl<'a> SubAssign<&'a Rat> for Rat {
    fn sub_assign(&mut self, rhs: &'a Rat) {
        self.0 -= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rat::frac(6, -8), Rat::frac(-3, 4));
        assert_eq!(Rat::frac(0, 7), Rat::zero());
        assert_eq!(*Rat::zero().denom(), 1);
        assert!(Rat::new(1, 0).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("19/40".parse::<Rat>().unwrap(), Rat::frac(19, 40));
        assert_eq!("-3".parse::<Rat>().unwrap(), Rat::from(-3));
        assert_eq!(" -3/20 ".parse::<Rat>().unwrap(), Rat::frac(-3, 20));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
        assert_eq!(Rat::frac(-3, 4).to_string(), "-3/4");
        assert_eq!(Rat::from(10).to_string(), "10");
        assert_eq!(Rat::from(10).to_fraction_string(), "10/1");
    }

    #[test]
    fn rational_gcd() {
        assert_eq!(Rat::gcd(&Rat::frac(1, 4), &Rat::frac(1, 5)), Rat::frac(1, 20));
        assert_eq!(Rat::gcd(&Rat::from(6), &Rat::from(4)), Rat::from(2));
        assert_eq!(Rat::gcd(&Rat::frac(3, 4), &Rat::zero()), Rat::frac(3, 4));
        assert_eq!(Rat::gcd(&Rat::frac(-3, 20), &Rat::frac(1, 8)), Rat::frac(1, 40));
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(Rat::frac(19, 2).ceil(), 10);
        assert_eq!(Rat::frac(-3, 2).floor(), -2);
        assert_eq!(Rat::from(4).ceil(), 4);
    }
}
