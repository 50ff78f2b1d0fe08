//! Truncated formal series with rational exponents.
//!
//! A [`QSeries`] stores coefficients on an arithmetic lattice of exponents
//! `offset + i·step` together with an absolute, exclusive truncation order:
//! the series is exact for every exponent below `order` and unknown from
//! there on. Arithmetic propagates orders sharply, so a comparison can never
//! claim more than the inputs support.

use std::fmt;

use crate::arith::{format_significant, Coeff, KElem, Rat};
use crate::error::{Error, Result};

/// Exponent lattice `offset + step·Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    pub offset: Rat,
    pub step: Rat,
}

impl Lattice {
    pub fn new(offset: Rat, step: Rat) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::InvalidArgument(format!("lattice step must be positive, got {step}")));
        }
        Ok(Lattice { offset, step })
    }

    /// Coarsest lattice containing both, based at the smaller offset.
    pub fn refine(&self, other: &Lattice) -> Lattice {
        let diff = &self.offset - &other.offset;
        let step = Rat::gcd(&Rat::gcd(&self.step, &other.step), &diff);
        let offset = std::cmp::min(&self.offset, &other.offset).clone();
        Lattice { offset, step }
    }

    /// Index of `exp` on this lattice, if it lies on it at or after the offset.
    pub fn index_of(&self, exp: &Rat) -> Option<usize> {
        let t = (exp - &self.offset) / self.step.clone();
        if t.is_integer() && !t.is_negative() {
            t.to_i64().map(|i| i as usize)
        } else {
            None
        }
    }

    /// Number of lattice points `offset + i·step`, `i ≥ 0`, strictly below `order`.
    pub fn count_below(&self, order: &Rat) -> usize {
        if order <= &self.offset {
            return 0;
        }
        let t = (order - &self.offset) / self.step.clone();
        t.ceil().to_usize().expect("series length fits in memory")
    }

    pub fn exponent(&self, index: usize) -> Rat {
        &self.offset + &(&self.step * &Rat::from(index as i64))
    }
}

/// Outcome of [`QSeries::equal_to_order`].
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesComparison<C> {
    pub equal: bool,
    /// Smallest exponent where the two sides differ, with `lhs − rhs` there.
    pub first_mismatch: Option<(Rat, C)>,
}

/// Σ c_i q^(offset + i·step) + O(q^order).
#[derive(Clone, PartialEq)]
pub struct QSeries<C> {
    offset: Rat,
    step: Rat,
    coeffs: Vec<C>,
    order: Rat,
}

impl<C: Coeff> QSeries<C> {
    /// O(q^order).
    pub fn zero(order: Rat) -> Self {
        QSeries {
            offset: Rat::zero(),
            step: Rat::one(),
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn one(order: Rat) -> Self {
        Self::monomial(C::one(), Rat::zero(), order)
    }

    /// c·q^exp + O(q^order).
    pub fn monomial(c: C, exp: Rat, order: Rat) -> Self {
        QSeries {
            offset: exp,
            step: Rat::one(),
            coeffs: vec![c],
            order,
        }
        .canonical()
    }

    pub fn from_lattice(offset: Rat, step: Rat, coeffs: Vec<C>, order: Rat) -> Result<Self> {
        Lattice::new(offset.clone(), step.clone())?;
        Ok(QSeries {
            offset,
            step,
            coeffs,
            order,
        }
        .canonical())
    }

    /// Build from sparse `(exponent, coefficient)` terms; repeated exponents add.
    pub fn from_terms(terms: Vec<(Rat, C)>, order: Rat) -> Self {
        let terms: Vec<_> = terms.into_iter().filter(|(e, c)| e < &order && !c.is_zero()).collect();
        let Some(base) = terms.iter().map(|(e, _)| e).min().cloned() else {
            return Self::zero(order);
        };
        let step = terms
            .iter()
            .fold(Rat::zero(), |g, (e, _)| Rat::gcd(&g, &(e - &base)));
        let step = if step.is_zero() { Rat::one() } else { step };
        let lattice = Lattice {
            offset: base.clone(),
            step: step.clone(),
        };
        let mut coeffs = vec![C::zero(); lattice.count_below(&order)];
        for (e, c) in &terms {
            let i = lattice.index_of(e).expect("term lies on its own gcd lattice");
            coeffs[i] += c;
        }
        QSeries {
            offset: base,
            step,
            coeffs,
            order,
        }
        .canonical()
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn step(&self) -> &Rat {
        &self.step
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn order(&self) -> &Rat {
        &self.order
    }

    pub fn lattice(&self) -> Lattice {
        Lattice {
            offset: self.offset.clone(),
            step: self.step.clone(),
        }
    }

    /// True when no coefficient below the order is nonzero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Exponent of the first nonzero term; for O(q^N) this is N.
    pub fn valuation(&self) -> Rat {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(i) => self.lattice().exponent(i),
            None => self.order.clone(),
        }
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Rat, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lattice().exponent(i), c))
    }

    /// Coefficient of q^exp; zero off the lattice.
    pub fn coeff_at(&self, exp: &Rat) -> Result<C> {
        if exp >= &self.order {
            return Err(Error::InsufficientOrder {
                requested: exp.clone(),
                available: self.order.clone(),
            });
        }
        Ok(self
            .lattice()
            .index_of(exp)
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_else(C::zero))
    }

    /// Canonical representative: leading and trailing zeros removed and the
    /// step coarsened to the gcd of the occupied exponents.
    pub fn canonical(mut self) -> Self {
        let keep = self.lattice().count_below(&self.order);
        self.coeffs.truncate(keep);
        while self.coeffs.last().is_some_and(C::is_zero) {
            self.coeffs.pop();
        }
        let Some(first) = self.coeffs.iter().position(|c| !c.is_zero()) else {
            return Self::zero(self.order);
        };
        self.offset = self.lattice().exponent(first);
        self.coeffs.drain(..first);
        let g = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .fold(0usize, |g, (i, _)| gcd_usize(g, i));
        match g {
            0 => {
                self.step = Rat::one();
                self.coeffs.truncate(1);
            }
            1 => {}
            g => {
                self.coeffs = self.coeffs.into_iter().step_by(g).collect();
                self.step = &self.step * &Rat::from(g as i64);
            }
        }
        self
    }

    /// Lower the truncation order to `order` (no-op if already lower).
    pub fn truncate(&self, order: &Rat) -> Self {
        let mut out = self.clone();
        if order < &out.order {
            out.order = order.clone();
        }
        out.canonical()
    }

    /// Coefficients placed on `lattice` for every point below `order`.
    fn dense_on(&self, lattice: &Lattice, order: &Rat) -> Vec<C> {
        let mut out = vec![C::zero(); lattice.count_below(order)];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = self.lattice().exponent(i);
            if &e >= order {
                break;
            }
            let j = lattice.index_of(&e).expect("refined lattice contains the summand lattice");
            out[j] += c;
        }
        out
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        let order = std::cmp::min(&self.order, &other.order).clone();
        let lattice = match (self.coeffs.is_empty(), other.coeffs.is_empty()) {
            (true, true) => return Self::zero(order),
            (true, false) => other.lattice(),
            (false, true) => self.lattice(),
            (false, false) => self.lattice().refine(&other.lattice()),
        };
        let mut coeffs = self.dense_on(&lattice, &order);
        for (slot, c) in coeffs.iter_mut().zip(other.dense_on(&lattice, &order)) {
            if negate_other {
                *slot -= &c;
            } else {
                *slot += &c;
            }
        }
        QSeries {
            offset: lattice.offset,
            step: lattice.step,
            coeffs,
            order,
        }
        .canonical()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn neg(&self) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().cloned().map(|c| -c).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect(),
            ..self.clone()
        }
        .canonical()
    }

    /// Multiply by q^exp; the truncation order shifts with it.
    pub fn shift(&self, exp: &Rat) -> Self {
        QSeries {
            offset: &self.offset + exp,
            order: &self.order + exp,
            ..self.clone()
        }
    }

    /// Cauchy product. The result is exact below
    /// min(self.order + v(other), other.order + v(self)).
    pub fn mul(&self, other: &Self) -> Self {
        let order = std::cmp::min(
            &self.order + &other.valuation(),
            &other.order + &self.valuation(),
        );
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero(order);
        }
        let step = Rat::gcd(&self.step, &other.step);
        let ra = (&self.step / &step).to_i64().expect("integer ratio") as usize;
        let rb = (&other.step / &step).to_i64().expect("integer ratio") as usize;
        let lattice = Lattice {
            offset: &self.offset + &other.offset,
            step,
        };
        let n = lattice.count_below(&order);
        let mut coeffs = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i * ra >= n {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = i * ra + j * rb;
                if k >= n {
                    break;
                }
                if !b.is_zero() {
                    coeffs[k] += &a.mul_ref(b);
                }
            }
        }
        QSeries {
            offset: lattice.offset,
            step: lattice.step,
            coeffs,
            order,
        }
        .canonical()
    }

    /// Dense unit part u with self = c0·q^v·u, padded to its known length.
    fn unit_part(&self) -> Result<(C, Vec<C>)> {
        let lead = self.leading_coeff().ok_or(Error::EmptySeries)?.clone();
        let rel = Lattice {
            offset: Rat::zero(),
            step: self.step.clone(),
        };
        let m = rel.count_below(&(&self.order - &self.offset));
        let inv = lead.try_inv().ok_or(Error::DivisionByZero)?;
        let mut u: Vec<C> = self.coeffs.iter().map(|c| c.mul_ref(&inv)).collect();
        u.resize(m, C::zero());
        Ok((lead, u))
    }

    /// Multiplicative inverse of a series with a nonzero leading coefficient;
    /// a leading monomial q^v becomes q^(−v).
    pub fn unit_inv(&self) -> Result<Self> {
        let (lead, u) = self.unit_part()?;
        let lead_inv = lead.try_inv().ok_or(Error::DivisionByZero)?;
        let mut b: Vec<C> = Vec::with_capacity(u.len());
        for n in 0..u.len() {
            if n == 0 {
                b.push(C::one());
                continue;
            }
            let mut acc = C::zero();
            for k in 1..=n {
                if !u[k].is_zero() && !b[n - k].is_zero() {
                    acc -= &u[k].mul_ref(&b[n - k]);
                }
            }
            b.push(acc);
        }
        let v = self.offset.clone();
        let order = &(&self.order - &v) - &v;
        Ok(QSeries {
            offset: -v,
            step: self.step.clone(),
            coeffs: b.into_iter().map(|c| c.mul_ref(&lead_inv)).collect(),
            order,
        }
        .canonical())
    }

    /// `self^alpha` for a series with leading coefficient 1, via the
    /// power-series recurrence k·r_k = Σ_{j=1..k} ((α+1)j − k) a_j r_{k−j}.
    /// The result has offset α·v and the same relative precision.
    pub fn pow_rat(&self, alpha: &Rat) -> Result<Self> {
        if let Some(n) = alpha.to_i64() {
            return self.pow_int(n);
        }
        let (lead, u) = self.unit_part()?;
        if !lead.is_one() {
            return Err(Error::LeadingCoefficientNotOne(lead.to_string()));
        }
        let alpha1 = alpha + &Rat::one();
        let mut r: Vec<C> = Vec::with_capacity(u.len());
        for k in 0..u.len() {
            if k == 0 {
                r.push(C::one());
                continue;
            }
            let mut acc = C::zero();
            for j in 1..=k {
                if u[j].is_zero() || r[k - j].is_zero() {
                    continue;
                }
                let w = &(&alpha1 * &Rat::from(j as i64)) - &Rat::from(k as i64);
                if w.is_zero() {
                    continue;
                }
                acc += &u[j].mul_ref(&r[k - j]).scale_rat(&w);
            }
            r.push(acc.scale_rat(&Rat::frac(1, k as i64)));
        }
        let v = self.offset.clone();
        let offset = alpha * &v;
        let order = &offset + &(&self.order - &v);
        Ok(QSeries {
            offset,
            step: self.step.clone(),
            coeffs: r,
            order,
        }
        .canonical())
    }

    pub fn pow_int(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.unit_inv()?.pow_int(-n);
        }
        let mut result = Self::one(&self.order - &self.valuation());
        let mut base = self.clone();
        let mut e = n;
        // the O(q^(order-v)) placeholder for 1 would understate precision; start from self
        if e == 0 {
            return Ok(result);
        }
        let mut started = false;
        while e > 0 {
            if e & 1 == 1 {
                result = if started { result.mul(&base) } else { base.clone() };
                started = true;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// n-th root of a series whose leading coefficient is 1.
    pub fn nth_root(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("root index must be positive".into()));
        }
        let lead = self.leading_coeff().ok_or(Error::EmptySeries)?;
        if !lead.is_one() {
            return Err(Error::LeadingCoefficientNotOne(lead.to_string()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        self.pow_rat(&Rat::frac(1, n as i64))
    }

    /// q ↦ q^m: offset, step and order all scale by m.
    pub fn substitute(&self, m: &Rat) -> Result<Self> {
        if !m.is_positive() {
            return Err(Error::InvalidArgument(format!("substitution exponent must be positive, got {m}")));
        }
        Ok(QSeries {
            offset: &self.offset * m,
            step: &self.step * m,
            coeffs: self.coeffs.clone(),
            order: &self.order * m,
        })
    }

    /// Compare coefficients at every exponent below `bound`.
    pub fn equal_to_order(&self, other: &Self, bound: &Rat) -> Result<SeriesComparison<C>> {
        for s in [self, other] {
            if bound > &s.order {
                return Err(Error::InsufficientOrder {
                    requested: bound.clone(),
                    available: s.order.clone(),
                });
            }
        }
        let diff = self.truncate(bound).sub(&other.truncate(bound));
        let first_mismatch = diff.terms().next().map(|(e, c)| (e, c.clone()));
        Ok(SeriesComparison {
            equal: first_mismatch.is_none(),
            first_mismatch,
        })
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries {
            offset: self.offset.clone(),
            step: self.step.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
            order: self.order.clone(),
        }
        .canonical()
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Option<D>) -> Option<QSeries<D>> {
        let coeffs = self.coeffs.iter().map(f).collect::<Option<Vec<_>>>()?;
        Some(
            QSeries {
                offset: self.offset.clone(),
                step: self.step.clone(),
                coeffs,
                order: self.order.clone(),
            }
            .canonical(),
        )
    }

    pub fn to_field(&self) -> QSeries<KElem> {
        self.map_coeffs(C::to_kelem)
    }

    /// One term per line, `c * q^(a/b)` followed by a decimal approximation,
    /// then the truncation order.
    pub fn render(&self, digits: usize) -> String {
        let prec = (digits as f64 * std::f64::consts::LOG2_10) as u32 + 64;
        let mut out = String::new();
        for (e, c) in self.terms() {
            let exact = c.to_string();
            let exact = if exact.contains(' ') { format!("({exact})") } else { exact };
            let approx = format_significant(&c.to_float(prec), digits);
            out.push_str(&format!("{exact} * q^({e})    ~ {approx}\n"));
        }
        out.push_str(&format!("+ O(q^({}))\n", self.order));
        out
    }
}

impl<C: Coeff> fmt::Display for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in self.terms() {
            let s = c.to_string();
            if s.contains(' ') {
                write!(f, "({s})*q^({e}) + ")?;
            } else {
                write!(f, "{s}*q^({e}) + ")?;
            }
        }
        write!(f, "O(q^({}))", self.order)
    }
}

impl<C: Coeff> fmt::Debug for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[{self}]")
    }
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_usize(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = QSeries<Rat>;

    fn r(n: i64, d: i64) -> Rat {
        Rat::frac(n, d)
    }

    fn int_series(coeffs: &[i64], order: i64) -> S {
        S::from_lattice(
            Rat::zero(),
            Rat::one(),
            coeffs.iter().map(|&c| Rat::from(c)).collect(),
            Rat::from(order),
        )
        .unwrap()
    }

    #[test]
    fn cancellation_keeps_order() {
        let a = int_series(&[1, -1], 6);
        let b = int_series(&[0, 1], 6);
        let s = a.add(&b);
        assert_eq!(s, S::one(Rat::from(6)));
        assert_eq!(s.order(), &Rat::from(6));
    }

    #[test]
    fn lattice_refinement_on_addition() {
        let a = S::monomial(Rat::one(), r(1, 4), Rat::from(2));
        let b = S::monomial(Rat::one(), r(1, 5), Rat::from(2));
        let s = a.add(&b);
        assert_eq!(s.offset(), &r(1, 5));
        assert_eq!(s.step(), &r(1, 20));
        assert_eq!(s.coeff_at(&r(1, 4)).unwrap(), Rat::one());
        assert_eq!(s.coeff_at(&r(1, 5)).unwrap(), Rat::one());
        assert_eq!(s.coeff_at(&r(9, 40)).unwrap(), Rat::zero());
    }

    #[test]
    fn additive_identity() {
        let f = int_series(&[3, 0, -2, 5], 4);
        assert_eq!(f.add(&S::zero(Rat::from(4))), f);
    }

    #[test]
    fn difference_of_squares() {
        let p = int_series(&[1, -1], 10).mul(&int_series(&[1, 1], 10));
        assert_eq!(p, int_series(&[1, 0, -1], 10));
    }

    #[test]
    fn monomial_product() {
        let h = S::monomial(Rat::one(), r(1, 2), Rat::from(5));
        let p = h.mul(&h);
        assert_eq!(p.terms().map(|(e, c)| (e, c.clone())).collect::<Vec<_>>(), vec![(Rat::one(), Rat::one())]);
        assert_eq!(p.order(), &r(11, 2));
    }

    #[test]
    fn geometric_inverse() {
        let inv = int_series(&[1, -1], 8).unit_inv().unwrap();
        assert_eq!(inv, int_series(&[1; 8], 8));
    }

    #[test]
    fn inverse_with_monomial_factor() {
        // q(1 + q) known below q^6
        let f = int_series(&[0, 1, 1], 6);
        let inv = f.unit_inv().unwrap();
        assert_eq!(inv.offset(), &Rat::from(-1));
        assert_eq!(inv.order(), &Rat::from(4));
        let expected: Vec<Rat> = [1, -1, 1, -1, 1].iter().map(|&c| Rat::from(c)).collect();
        assert_eq!(inv.coeffs(), expected.as_slice());
        let back = f.mul(&inv);
        assert_eq!(back, S::one(Rat::from(5)));
    }

    #[test]
    fn inverse_errors() {
        assert_eq!(S::zero(Rat::from(3)).unit_inv(), Err(Error::EmptySeries));
    }

    #[test]
    fn perfect_square_root() {
        let f = int_series(&[1, 2, 1], 12);
        assert_eq!(f.nth_root(2).unwrap(), int_series(&[1, 1], 12));
        assert_eq!(S::one(Rat::from(9)).nth_root(8).unwrap(), S::one(Rat::from(9)));
    }

    #[test]
    fn root_requires_unit_leading_coefficient() {
        let f = int_series(&[2, 1], 5);
        assert!(matches!(f.nth_root(2), Err(Error::LeadingCoefficientNotOne(_))));
    }

    #[test]
    fn root_of_shifted_series() {
        // q^(1/5)(1 - q)
        let f = int_series(&[1, -1], 9).shift(&r(1, 5));
        let root = f.nth_root(8).unwrap();
        assert_eq!(root.offset(), &r(1, 40));
        let back = root.pow_int(8).unwrap();
        assert_eq!(back.order(), f.order());
        assert!(back.equal_to_order(&f, f.order()).unwrap().equal);
    }

    #[test]
    fn substitution_scales_everything() {
        let f = int_series(&[1, 1, 1], 3);
        let g = f.substitute(&r(1, 5)).unwrap();
        assert_eq!(g.step(), &r(1, 5));
        assert_eq!(g.order(), &r(3, 5));
        assert_eq!(g.coeff_at(&r(2, 5)).unwrap(), Rat::one());
        assert_eq!(f.substitute(&Rat::one()).unwrap(), f);
        assert!(f.substitute(&Rat::zero()).is_err());
    }

    #[test]
    fn equality_to_order() {
        let a = int_series(&[1, 1], 6);
        assert!(a.equal_to_order(&a, &Rat::from(5)).unwrap().equal);
        let b = int_series(&[1, 1, 0, 1], 6);
        assert!(a.equal_to_order(&b, &Rat::from(2)).unwrap().equal);
        let c = int_series(&[1, 2], 6);
        let cmp = a.equal_to_order(&c, &Rat::from(2)).unwrap();
        assert!(!cmp.equal);
        assert_eq!(cmp.first_mismatch, Some((Rat::one(), Rat::from(-1))));
    }

    #[test]
    fn equality_beyond_order_is_an_error() {
        let a = int_series(&[1, -1], 4);
        let p = a.mul(&a.shift(&Rat::one()));
        // p is known below min(4 + 1, 5 + 0) = 5
        assert_eq!(p.order(), &Rat::from(5));
        assert!(matches!(
            p.equal_to_order(&p, &Rat::from(6)),
            Err(Error::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn canonical_coarsens_step() {
        let f = S::from_lattice(
            r(-3, 20),
            r(1, 20),
            vec![Rat::zero(), Rat::one(), Rat::zero(), Rat::zero(), Rat::from(2)],
            Rat::from(1),
        )
        .unwrap();
        assert_eq!(f.offset(), &r(-1, 10));
        assert_eq!(f.step(), &r(3, 20));
        assert_eq!(f.clone().canonical(), f);
    }

    #[test]
    fn negative_offsets() {
        let f = S::monomial(Rat::one(), r(-3, 4), Rat::from(2)).add(&S::one(Rat::from(2)));
        assert_eq!(f.valuation(), r(-3, 4));
        assert_eq!(f.step(), &r(3, 4));
    }

    #[test]
    fn render_lists_terms() {
        let f = int_series(&[1, 0, -2], 3).shift(&r(1, 5));
        let text = f.render(4);
        assert!(text.contains("1 * q^(1/5)"), "{text}");
        assert!(text.contains("-2 * q^(11/5)"), "{text}");
        assert!(text.contains("+ O(q^(16/5))"), "{text}");
    }
}
