//! Infinite products and theta functions as truncated series.

use std::fmt;

use rug::Integer;

use crate::arith::{const_lookup, Coeff, ConstName, KElem, Rat};
use crate::error::{Error, Result};
use crate::series::{Lattice, QSeries};

/// A signed monomial `±q^exp` used as an argument of a product or theta function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialArg {
    pub negative: bool,
    pub exp: Rat,
}

impl MonomialArg {
    pub fn pos(exp: Rat) -> Self {
        MonomialArg { negative: false, exp }
    }

    pub fn neg(exp: Rat) -> Self {
        MonomialArg { negative: true, exp }
    }

    /// `sign·q^exp` for integer exponents; handy in tables of instances.
    pub fn int(sign: i64, exp: i64) -> Self {
        MonomialArg {
            negative: sign < 0,
            exp: Rat::from(exp),
        }
    }

    fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    /// Product of two monomials.
    pub fn times(&self, other: &MonomialArg) -> MonomialArg {
        MonomialArg {
            negative: self.negative != other.negative,
            exp: &self.exp + &other.exp,
        }
    }

    pub fn flip(&self) -> MonomialArg {
        MonomialArg {
            negative: !self.negative,
            exp: self.exp.clone(),
        }
    }
}

impl fmt::Display for MonomialArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        if self.exp.is_integer() && !self.exp.is_negative() {
            write!(f, "{sign}q^{}", self.exp)
        } else {
            write!(f, "{sign}q^({})", self.exp)
        }
    }
}

/// ∏_{k≥0} (1 − c·σ^k·q^(e0 + m·k)) on the lattice gcd(e0, m)·Z, truncated at `order`.
/// `c` and `σ` are ±1; `e0 ≥ 0`, `m > 0`.
fn signed_product(c: i8, e0: &Rat, sigma: i8, m: &Rat, order: &Rat) -> QSeries<Rat> {
    let step = Rat::gcd(e0, m);
    let lattice = Lattice {
        offset: Rat::zero(),
        step: step.clone(),
    };
    let n = lattice.count_below(order);
    if n == 0 {
        return QSeries::zero(order.clone());
    }
    let idx = |r: &Rat| (r / &step).to_i64().expect("on lattice") as usize;
    let d0 = idx(e0);
    let dm = idx(m);
    let mut v = vec![Integer::new(); n];
    v[0] = Integer::from(1);
    let mut coef = c as i64;
    let mut d = d0;
    while d < n {
        if d == 0 {
            // constant factor 1 − coef
            let k = 1 - coef;
            for x in v.iter_mut() {
                *x *= k;
            }
        } else {
            for i in (d..n).rev() {
                let (lo, hi) = v.split_at_mut(i);
                if coef == 1 {
                    hi[0] -= &lo[i - d];
                } else {
                    hi[0] += &lo[i - d];
                }
            }
        }
        coef *= sigma as i64;
        d += dm;
    }
    QSeries::from_lattice(
        Rat::zero(),
        step,
        v.into_iter().map(Rat::from).collect(),
        order.clone(),
    )
    .expect("positive step")
}

/// (a; q^m)∞ = ∏_{k≥0} (1 − a·q^(mk)) for a = ±q^e with e > 0.
pub fn pochhammer(a: &MonomialArg, m: &Rat, order: &Rat) -> Result<QSeries<Rat>> {
    if !a.exp.is_positive() {
        return Err(Error::NonPositiveExponent(a.exp.clone()));
    }
    if !m.is_positive() {
        return Err(Error::NonPositiveExponent(m.clone()));
    }
    Ok(signed_product(a.sign(), &a.exp, 1, m, order))
}

/// (q^t; q^t)∞, the unit part of η(tτ).
pub fn euler(t: &Rat, order: &Rat) -> Result<QSeries<Rat>> {
    pochhammer(&MonomialArg::pos(t.clone()), t, order)
}

/// Evaluation strategy for [`theta_f`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ThetaMethod {
    /// Jacobi triple product after shifting the summation index.
    #[default]
    TripleProduct,
    /// Direct bilateral sum Σ a^(n(n+1)/2) b^(n(n−1)/2).
    BilateralSum,
}

fn sign_pow(negative: bool, k: &Integer) -> i8 {
    if negative && k.is_odd() {
        -1
    } else {
        1
    }
}

fn tri(n: &Integer) -> (Integer, Integer) {
    // (n(n+1)/2, n(n−1)/2)
    let up = Integer::from(n * Integer::from(n + 1)) / 2;
    let down = Integer::from(n * Integer::from(n - 1)) / 2;
    (up, down)
}

/// Ramanujan's theta function f(a, b) at monomial arguments.
/// Individual exponents may be zero or negative as long as their sum is positive.
pub fn theta_f(a: &MonomialArg, b: &MonomialArg, order: &Rat, method: ThetaMethod) -> Result<QSeries<Rat>> {
    let s = &a.exp + &b.exp;
    if !s.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "f({a}, {b}) needs the product of its arguments to have positive exponent"
        )));
    }
    match method {
        ThetaMethod::BilateralSum => Ok(theta_sum(a, b, &s, order)),
        ThetaMethod::TripleProduct => Ok(theta_product(a, b, &s, order)),
    }
}

fn theta_exponent(a: &MonomialArg, b: &MonomialArg, n: &Integer) -> (Rat, i8) {
    let (up, down) = tri(n);
    let e = &(&a.exp * &Rat::from(up.clone())) + &(&b.exp * &Rat::from(down.clone()));
    (e, sign_pow(a.negative, &up) * sign_pow(b.negative, &down))
}

fn theta_sum(a: &MonomialArg, b: &MonomialArg, s: &Rat, order: &Rat) -> QSeries<Rat> {
    // exponent is (s/2)n² + ((a−b)/2)n, minimal near n = (b − a)/(2s)
    let vertex = (&b.exp - &a.exp) / (s * &Rat::from(2));
    let mut terms = Vec::new();
    let start = vertex.floor();
    let mut n = start.clone();
    loop {
        let (e, sg) = theta_exponent(a, b, &n);
        if &e >= order {
            break;
        }
        terms.push((e, Rat::from(sg as i64)));
        n -= 1;
    }
    let mut n = start + 1;
    loop {
        let (e, sg) = theta_exponent(a, b, &n);
        if &e >= order {
            break;
        }
        terms.push((e, Rat::from(sg as i64)));
        n += 1;
    }
    QSeries::from_terms(terms, order.clone())
}

fn theta_product(a: &MonomialArg, b: &MonomialArg, s: &Rat, order: &Rat) -> QSeries<Rat> {
    // f(a,b) = a^(n(n+1)/2) b^(n(n−1)/2) f(a(ab)^n, b(ab)^(−n)), with n chosen
    // so the shifted first argument has exponent in [0, s).
    let n = -(&a.exp / s).floor();
    let (prefactor, sg) = theta_exponent(a, b, &n);
    let ab = a.times(b);
    let ab_neg = sign_pow(ab.negative, &n) < 0;
    let shift = &s.clone() * &Rat::from(n.clone());
    let a2 = MonomialArg {
        negative: a.negative != ab_neg,
        exp: &a.exp + &shift,
    };
    let b2 = MonomialArg {
        negative: b.negative != ab_neg,
        exp: &b.exp - &shift,
    };
    let rel = order - &prefactor;
    let sigma = ab.sign();
    // (−x; ab)∞ has leading sign −(sign x)
    let pa = signed_product(-a2.sign(), &a2.exp, sigma, s, &rel);
    let pb = signed_product(-b2.sign(), &b2.exp, sigma, s, &rel);
    let pab = signed_product(sigma, s, sigma, s, &rel);
    let prod = pa.mul(&pb).mul(&pab);
    let prod = if prod.order() < &rel {
        // a vanishing constant factor (f(−1, b) = 0) leaves the order at rel anyway
        QSeries::zero(rel.clone())
    } else {
        prod
    };
    let prod = if sg < 0 { prod.neg() } else { prod };
    prod.shift(&prefactor)
}

/// ψ(q) = f(q, q³).
pub fn psi(order: &Rat) -> QSeries<Rat> {
    theta_f(
        &MonomialArg::pos(Rat::one()),
        &MonomialArg::pos(Rat::from(3)),
        order,
        ThetaMethod::TripleProduct,
    )
    .expect("valid arguments")
}

/// ∏ η(t_j τ)^(e_j) as a list of (multiplier t_j, power e_j).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EtaSpec(Vec<(Rat, Rat)>);

impl EtaSpec {
    pub fn new(factors: Vec<(Rat, Rat)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidArgument("eta quotient needs at least one factor".into()));
        }
        if let Some((t, _)) = factors.iter().find(|(t, _)| !t.is_positive()) {
            return Err(Error::NonPositiveExponent(t.clone()));
        }
        Ok(EtaSpec(factors))
    }

    /// Integer shorthand: `(multiplier, power)` pairs.
    pub fn ints(factors: &[(i64, i64)]) -> Self {
        EtaSpec::new(factors.iter().map(|&(t, e)| (Rat::from(t), Rat::from(e))).collect()).expect("valid eta spec")
    }

    pub fn factors(&self) -> &[(Rat, Rat)] {
        &self.0
    }

    /// Σ t·e / 24.
    pub fn offset(&self) -> Rat {
        let s = self.0.iter().fold(Rat::zero(), |acc, (t, e)| &acc + &(t * e));
        s / Rat::from(24)
    }
}

impl fmt::Display for EtaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(t, e)| format!("({t},{e})")).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// q^(Σ t e/24) ∏ (q^t; q^t)∞^e.
pub fn eta_quotient(spec: &EtaSpec, order: &Rat) -> Result<QSeries<Rat>> {
    let offset = spec.offset();
    let rel = order - &offset;
    if !rel.is_positive() {
        return Ok(QSeries::zero(order.clone()));
    }
    let mut acc = QSeries::one(rel.clone());
    for (t, e) in spec.factors() {
        let unit = euler(t, &rel)?;
        acc = acc.mul(&unit.pow_rat(e)?);
    }
    Ok(acc.shift(&offset))
}

/// Ω_k(q^scale) = ∏_{n≥1} (1 + α_k q^(scale·n) + q^(2·scale·n)).
pub fn omega(k: u8, scale: &Rat, order: &Rat) -> Result<QSeries<KElem>> {
    if !(1..=9).contains(&k) {
        return Err(Error::InvalidArgument(format!("omega index must be in 1..=9, got {k}")));
    }
    if !scale.is_positive() {
        return Err(Error::NonPositiveExponent(scale.clone()));
    }
    let alpha = const_lookup(ConstName::Alpha(k))?;
    let lattice = Lattice {
        offset: Rat::zero(),
        step: scale.clone(),
    };
    let n = lattice.count_below(order);
    if n == 0 {
        return Ok(QSeries::zero(order.clone()));
    }
    let mut v = vec![KElem::zero(); n];
    v[0] = KElem::one();
    for d in 1..n {
        for i in (d..n).rev() {
            let mut add = v[i - d].mul_ref(&alpha);
            if i >= 2 * d {
                add += &v[i - 2 * d];
            }
            v[i] += &add;
        }
    }
    QSeries::from_lattice(Rat::zero(), scale.clone(), v, order.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::frac(n, d)
    }

    fn ints(s: &QSeries<Rat>) -> Vec<(Rat, i64)> {
        s.terms().map(|(e, c)| (e, c.to_i64().unwrap())).collect()
    }

    fn sparse(pairs: &[(i64, i64)], order: i64) -> QSeries<Rat> {
        QSeries::from_terms(
            pairs.iter().map(|&(e, c)| (Rat::from(e), Rat::from(c))).collect(),
            Rat::from(order),
        )
    }

    /// Σ (−1)^n q^(n(3n−1)/2) over n ∈ Z.
    fn pentagonal(order: i64) -> QSeries<Rat> {
        let mut terms = Vec::new();
        for n in -20i64..=20 {
            let e = n * (3 * n - 1) / 2;
            if e < order {
                terms.push((Rat::from(e), Rat::from(if n % 2 == 0 { 1 } else { -1 })));
            }
        }
        QSeries::from_terms(terms, Rat::from(order))
    }

    #[test]
    fn euler_is_pentagonal() {
        let p = pochhammer(&MonomialArg::pos(Rat::one()), &Rat::one(), &Rat::from(16)).unwrap();
        assert_eq!(p, pentagonal(16));
        assert_eq!(
            p,
            sparse(&[(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)], 16)
        );
    }

    #[test]
    fn distinct_even_parts() {
        // q^6 counts 6 and 2+4
        let p = pochhammer(&MonomialArg::neg(Rat::from(2)), &Rat::from(2), &Rat::from(9)).unwrap();
        assert_eq!(p, sparse(&[(0, 1), (2, 1), (4, 1), (6, 2), (8, 2)], 9));
    }

    #[test]
    fn fractional_step_matches_substitution() {
        let native = pochhammer(&MonomialArg::pos(r(1, 5)), &r(1, 5), &Rat::one()).unwrap();
        let via = pochhammer(&MonomialArg::pos(Rat::one()), &Rat::one(), &Rat::from(5))
            .unwrap()
            .substitute(&r(1, 5))
            .unwrap();
        assert_eq!(native, via);
    }

    #[test]
    fn pochhammer_rejects_nonpositive() {
        assert!(matches!(
            pochhammer(&MonomialArg::pos(Rat::zero()), &Rat::one(), &Rat::from(3)),
            Err(Error::NonPositiveExponent(_))
        ));
    }

    #[test]
    fn theta_quintic_example() {
        let t = theta_f(
            &MonomialArg::neg(Rat::from(3)),
            &MonomialArg::neg(Rat::from(17)),
            &Rat::from(27),
            ThetaMethod::TripleProduct,
        )
        .unwrap();
        assert_eq!(t, sparse(&[(0, 1), (3, -1), (17, -1), (26, 1)], 27));
    }

    #[test]
    fn psi_triangular() {
        assert_eq!(psi(&Rat::from(11)), sparse(&[(0, 1), (1, 1), (3, 1), (6, 1), (10, 1)], 11));
    }

    #[test]
    fn f_minus_q_is_euler() {
        for method in [ThetaMethod::TripleProduct, ThetaMethod::BilateralSum] {
            let t = theta_f(&MonomialArg::neg(Rat::one()), &MonomialArg::neg(Rat::from(2)), &Rat::from(13), method).unwrap();
            assert_eq!(t, pentagonal(13));
        }
    }

    #[test]
    fn theta_zero_exponent_argument() {
        // f(1, q²) = 2 + 2q² + 2q⁶ + ... and f(−1, q) = 0
        let t = theta_f(&MonomialArg::pos(Rat::zero()), &MonomialArg::pos(Rat::from(2)), &Rat::from(13), ThetaMethod::TripleProduct).unwrap();
        let s = theta_f(&MonomialArg::pos(Rat::zero()), &MonomialArg::pos(Rat::from(2)), &Rat::from(13), ThetaMethod::BilateralSum).unwrap();
        assert_eq!(t, s);
        assert_eq!(ints(&t)[0], (Rat::zero(), 2));
        let z = theta_f(&MonomialArg::neg(Rat::zero()), &MonomialArg::pos(Rat::one()), &Rat::from(10), ThetaMethod::TripleProduct).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.order(), &Rat::from(10));
    }

    #[test]
    fn theta_negative_exponent_argument() {
        let a = MonomialArg::pos(Rat::from(-2));
        let b = MonomialArg::neg(Rat::from(7));
        let t = theta_f(&a, &b, &Rat::from(30), ThetaMethod::TripleProduct).unwrap();
        let s = theta_f(&a, &b, &Rat::from(30), ThetaMethod::BilateralSum).unwrap();
        assert_eq!(t, s);
        assert!(theta_f(&a, &MonomialArg::pos(Rat::from(2)), &Rat::one(), ThetaMethod::TripleProduct).is_err());
    }

    #[test]
    fn eta_examples() {
        let e = eta_quotient(&EtaSpec::ints(&[(1, 1)]), &Rat::from(2)).unwrap();
        assert_eq!(e.offset(), &r(1, 24));
        assert_eq!(ints(&e), vec![(r(1, 24), 1), (r(25, 24), -1)]);

        let lhs = eta_quotient(&EtaSpec::ints(&[(4, 1), (2, -1)]), &Rat::from(30)).unwrap();
        let rhs = pochhammer(&MonomialArg::neg(Rat::from(2)), &Rat::from(2), &Rat::from(30))
            .unwrap()
            .shift(&r(1, 12));
        assert!(lhs.equal_to_order(&rhs, &Rat::from(29)).unwrap().equal);
    }

    #[test]
    fn eta_fractional_power_multiplies_back() {
        let spec = EtaSpec::new(vec![(Rat::one(), r(1, 8)), (Rat::from(5), r(-1, 8))]).unwrap();
        let e = eta_quotient(&spec, &Rat::from(12)).unwrap();
        assert_eq!(e.offset(), &r(-1, 48));
        let unit = e.shift(&r(1, 48));
        let back = unit.pow_int(8).unwrap().mul(&euler(&Rat::from(5), &Rat::from(12)).unwrap());
        let target = euler(&Rat::one(), &Rat::from(12)).unwrap();
        assert!(back.equal_to_order(&target, back.order()).unwrap().equal);
    }

    #[test]
    fn omega_examples() {
        let o5 = omega(5, &Rat::one(), &Rat::from(9)).unwrap();
        let expected = pochhammer(&MonomialArg::neg(Rat::from(2)), &Rat::from(2), &Rat::from(9)).unwrap().to_field();
        assert_eq!(o5, expected);

        let o2 = omega(2, &Rat::one(), &Rat::from(2)).unwrap();
        let golden = const_lookup(ConstName::GoldenP).unwrap();
        assert_eq!(o2.coeff_at(&Rat::one()).unwrap(), -golden);

        let scaled = omega(3, &r(1, 5), &Rat::from(2)).unwrap();
        let via = omega(3, &Rat::one(), &Rat::from(10)).unwrap().substitute(&r(1, 5)).unwrap();
        assert_eq!(scaled, via);
        assert!(omega(10, &Rat::one(), &Rat::one()).is_err());
    }
}
