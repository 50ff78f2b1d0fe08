use std::fmt;
use std::ops::{AddAssign, Neg, SubAssign};

use rug::Float;

use super::{KElem, Rat};

/// Exact coefficient ring for [`QSeries`](crate::series::QSeries).
///
/// Implemented by [`Rat`] (fast path for identities with integer data) and
/// [`KElem`] (needed once √5 or the α_k enter).
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    /// Short ring label for reports.
    const RING: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rat(r: &Rat) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn try_inv(&self) -> Option<Self>;
    /// Exact conversion from the field; `None` when the value is irrational
    /// and `Self` cannot hold it.
    fn try_from_kelem(k: &KElem) -> Option<Self>;
    fn to_kelem(&self) -> KElem;
    fn to_float(&self, prec: u32) -> Float;

    fn from_i64(v: i64) -> Self {
        Self::from_rat(&Rat::from(v))
    }

    fn scale_rat(&self, r: &Rat) -> Self {
        self.mul_ref(&Self::from_rat(r))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Coeff for Rat {
    const RING: &'static str = "Q";

    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn try_inv(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn try_from_kelem(k: &KElem) -> Option<Self> {
        k.as_rational().cloned()
    }
    fn to_kelem(&self) -> KElem {
        KElem::from_rat(self.clone())
    }
    fn to_float(&self, prec: u32) -> Float {
        Float::with_val(prec, self.as_rational())
    }
}

impl Coeff for KElem {
    const RING: &'static str = "Q(beta)";

    fn zero() -> Self {
        KElem::zero()
    }
    fn one() -> Self {
        KElem::one()
    }
    fn is_zero(&self) -> bool {
        KElem::is_zero(self)
    }
    fn from_rat(r: &Rat) -> Self {
        KElem::from_rat(r.clone())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn try_from_kelem(k: &KElem) -> Option<Self> {
        Some(k.clone())
    }
    fn to_kelem(&self) -> KElem {
        self.clone()
    }
    fn to_float(&self, prec: u32) -> Float {
        KElem::to_float(self, prec)
    }
    fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(r)
    }
}
