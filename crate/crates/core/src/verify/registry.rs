//! The built-in identity catalog.

use crate::arith::{ConstName, Rat};
use crate::cfractions::CfName;
use crate::eisenstein::{onepsione_pair, onepsione_terms, LambertSpec, LambertWeight, Parity};
use crate::error::Result;
use crate::expr::{cf, eta, named, num, omega_at, poch, q_pow, rat, theta, Expr};
use crate::numeric::{ATable, EsLemma, EsReading};
use crate::qfunctions::{MonomialArg, ThetaMethod};
use crate::series::QSeries;

use super::{Check, Expected, IdentitySpec, NumericKind};

/// Rational-coefficient sides built directly, for identities whose terms are
/// not expression leaves.
pub type SeriesBuilder = fn(&Rat) -> Result<(QSeries<Rat>, QSeries<Rat>)>;

/// Argument pairs of the standing triple-product cross-check.
const KERNEL_PAIRS: [(i64, i64, i64, i64); 10] = [
    (-1, 1, -1, 2),
    (1, 1, 1, 3),
    (-1, 3, -1, 17),
    (-1, 7, -1, 13),
    (-1, 1, -1, 4),
    (-1, 2, -1, 3),
    (-1, 1, -1, 9),
    (-1, 4, -1, 6),
    (1, 1, 1, 1),
    (-1, 5, -1, 15),
];

/// (a, b) exponent pairs for the four theta-function lemmas.
const LEMMA_PAIRS: [(i64, i64); 7] = [(1, 1), (1, 2), (5, 95), (15, 85), (25, 75), (35, 65), (45, 55)];

fn arg_label(sign: i64, exp: i64) -> String {
    let s = if sign < 0 { "-" } else { "" };
    if exp == 1 {
        format!("{s}q")
    } else {
        format!("{s}q{exp}")
    }
}

fn exact(id: impl Into<String>, description: impl Into<String>, lhs: Expr, rhs: Expr, order: Rat) -> IdentitySpec {
    IdentitySpec {
        id: id.into(),
        description: description.into(),
        check: Check::Exact {
            lhs,
            rhs,
            rational_lhs: false,
        },
        expected: Expected::Pass,
        default_order: order,
    }
}

fn series(id: &str, description: &str, build: SeriesBuilder, order: i64) -> IdentitySpec {
    IdentitySpec {
        id: id.into(),
        description: description.into(),
        check: Check::Series(build),
        expected: Expected::Pass,
        default_order: Rat::from(order),
    }
}

fn numeric(id: &str, description: &str, kind: NumericKind, expected: Expected) -> IdentitySpec {
    IdentitySpec {
        id: id.into(),
        description: description.into(),
        check: Check::Numeric(kind),
        expected,
        default_order: Rat::zero(),
    }
}

fn document(mut spec: IdentitySpec) -> IdentitySpec {
    spec.expected = Expected::Document;
    spec
}

fn fsum(sa: i64, a: i64, sb: i64, b: i64) -> Expr {
    Expr::Theta {
        a: MonomialArg::int(sa, a),
        b: MonomialArg::int(sb, b),
        method: ThetaMethod::BilateralSum,
    }
}

fn product(factors: impl IntoIterator<Item = Expr>) -> Expr {
    factors.into_iter().reduce(|a, b| a * b).unwrap_or_else(|| num(1))
}

fn c(name: ConstName) -> Expr {
    named(name)
}

fn kernel() -> Vec<IdentitySpec> {
    KERNEL_PAIRS
        .iter()
        .map(|&(sa, a, sb, b)| {
            exact(
                format!("jtp-a={}-b={}", arg_label(sa, a), arg_label(sb, b)),
                format!("triple product against bilateral sum for f({}, {})", arg_label(sa, a), arg_label(sb, b)),
                theta(sa, a, sb, b),
                fsum(sa, a, sb, b),
                Rat::from(40),
            )
        })
        .collect()
}

fn classical() -> Vec<IdentitySpec> {
    vec![
        exact(
            "eq-pentagonal",
            "(q;q) as the pentagonal bilateral sum f(-q,-q^2)",
            poch(1, 1, 1),
            fsum(-1, 1, -1, 2),
            Rat::from(60),
        ),
        exact(
            "eq-psi-product",
            "psi(q) = f(q,q^3) = (q^2;q^2)/(q;q^2)",
            fsum(1, 1, 1, 3),
            poch(1, 2, 2) / poch(1, 1, 2),
            Rat::from(60),
        ),
        exact(
            "eq-eta-def",
            "eta(tau) = q^(1/24) f(-q)",
            eta(&[((1, 1), (1, 1))]),
            q_pow(1, 24) * fsum(-1, 1, -1, 2),
            Rat::from(60),
        ),
    ]
}

fn lemma2() -> Vec<IdentitySpec> {
    let mut out = Vec::new();
    for (x, y) in LEMMA_PAIRS {
        let tag = format!("a={}-b={}", arg_label(1, x), arg_label(1, y));
        let order = Rat::from(25);
        let f = |a: i64, b: i64| theta(1, a, 1, b);
        let fm = theta(-1, x, -1, y);
        out.push(exact(
            format!("lemma2-f1-{tag}"),
            "f(a,ab^2) f(b,a^2b) = f(a,b) psi(ab)",
            f(x, x + 2 * y) * f(y, 2 * x + y),
            f(x, y) * f(x + y, 3 * (x + y)),
            order.clone(),
        ));
        out.push(exact(
            format!("lemma2-f2-{tag}"),
            "f(a,b) + f(-a,-b) = 2 f(a^3b,ab^3)",
            f(x, y) + fm.clone(),
            num(2) * f(3 * x + y, x + 3 * y),
            order.clone(),
        ));
        out.push(exact(
            format!("lemma2-f3-{tag}"),
            "f(a,b) - f(-a,-b) = 2a f(b/a,a^5b^3)",
            f(x, y) - fm.clone(),
            num(2) * q_pow(x, 1) * f(y - x, 5 * x + 3 * y),
            order.clone(),
        ));
        out.push(exact(
            format!("lemma2-f4-{tag}"),
            "f(-a,-b) = f(a^3b,ab^3) - a f(b/a,a^5b^3)",
            fm,
            f(3 * x + y, x + 3 * y) - q_pow(x, 1) * f(y - x, 5 * x + 3 * y),
            order,
        ));
    }
    out
}

/// α_k in closed form through the named constants.
fn alpha_closed(k: u8) -> Expr {
    let half = || rat(1, 2);
    match k {
        1 => -(half() * c(ConstName::Sqrt10P2S5)),
        2 => -c(ConstName::GoldenP),
        3 => -(half() * c(ConstName::Sqrt10M2S5)),
        4 => -c(ConstName::GoldenM),
        5 => num(0),
        6 => c(ConstName::GoldenM),
        7 => half() * c(ConstName::Sqrt10M2S5),
        8 => c(ConstName::GoldenP),
        _ => half() * c(ConstName::Sqrt10P2S5),
    }
}

fn tenth_roots() -> Vec<IdentitySpec> {
    let x = || q_pow(1, 1);
    let quadratics = (1..=9u8).map(|k| num(1) + c(ConstName::Alpha(k)) * x() + x() * x());
    let poly = product([num(1) - x(), num(1) + x()].into_iter().chain(quadratics));
    let alpha_lhs = (1..=9u8)
        .map(|k| c(ConstName::Alpha(k)) * q_pow(k as i64, 1))
        .reduce(|a, b| a + b)
        .expect("nine terms");
    let alpha_rhs = (1..=9u8)
        .map(|k| alpha_closed(k) * q_pow(k as i64, 1))
        .reduce(|a, b| a + b)
        .expect("nine terms");
    let omegas = product((1..=9u8).map(|k| omega_at(k, Rat::one())));
    let mut prodk = exact(
        "eq-prodK",
        "prod_{k=1..9} Omega_k(q) = (q^20;q^20)/(q^2;q^2), with rational coefficients",
        omegas,
        poch(1, 20, 20) / poch(1, 2, 2),
        Rat::from(30),
    );
    if let Check::Exact { rational_lhs, .. } = &mut prodk.check {
        *rational_lhs = true;
    }
    vec![
        exact(
            "eq-x20-poly",
            "(1-x)(1+x) prod_{k=1..9} (1 + alpha_k x + x^2) = 1 - x^20 (x = q)",
            poly,
            num(1) - q_pow(20, 1),
            Rat::from(40),
        ),
        exact(
            "eq-alpha-table",
            "alpha_k = -2cos(k pi/10) against the closed forms in sqrt5 and sqrt(10 +- 2 sqrt5); coefficient of q^k is alpha_k",
            alpha_lhs,
            alpha_rhs,
            Rat::from(10),
        ),
        prodk,
        numeric(
            "num-Ki",
            "Omega_k(q) = q^(-1/12) theta1(k pi/20) / (2 eta(tau) sin(k pi/20)), k = 1..9",
            NumericKind::Ki,
            Expected::Pass,
        ),
    ]
}

fn cf_displays() -> Vec<IdentitySpec> {
    CfName::ALL
        .into_iter()
        .map(|name| {
            numeric(
                &format!("cf-display-{name}"),
                &format!("displayed continued fraction for {name} against its theta quotient"),
                NumericKind::CfDisplay(name),
                Expected::Pass,
            )
        })
        .collect()
}

/// Building blocks of the five-fraction theorem, all at q^(1/5) granularity.
struct Thm3 {
    fifth: Rat,
}

/// Which fraction supplies the √T factor in the X1 bracket term.
#[derive(Clone, Copy, PartialEq)]
enum Reading {
    AsPrinted,
    T2,
}

impl Thm3 {
    fn new() -> Self {
        Thm3 { fifth: Rat::frac(1, 5) }
    }

    fn om(&self, k: u8) -> Expr {
        omega_at(k, self.fifth.clone())
    }

    fn prod_except(&self, skip: &[u8]) -> Expr {
        product((1..=9u8).filter(|k| *k != 5 && !skip.contains(k)).map(|k| self.om(k)))
    }

    fn p(&self) -> Expr {
        self.prod_except(&[])
    }

    /// Ω_k · ∏_{j≠5} Ω_j
    fn op(&self, k: u8) -> Expr {
        self.om(k) * self.p()
    }

    fn alpha(&self, k: u8) -> Expr {
        c(ConstName::Alpha(k))
    }

    fn one_plus_alpha(&self, k: u8) -> Expr {
        num(1) + self.alpha(k)
    }

    /// q^(19/40) η(4τ) f(−q⁵,−q¹⁵) / (η(τ/5) η(4τ/5))
    fn e(&self) -> Expr {
        q_pow(19, 40) * eta(&[((4, 1), (1, 1)), ((1, 5), (-1, 1)), ((4, 5), (-1, 1))]) * theta(-1, 5, -1, 15)
    }

    /// q^(−3/20) η(4τ) η(20τ) η^(1/8)(τ) / (η(τ/5) η(4τ/5) η^(1/8)(5τ))
    fn f(&self) -> Expr {
        q_pow(-3, 20)
            * eta(&[
                ((4, 1), (1, 1)),
                ((20, 1), (1, 1)),
                ((1, 1), (1, 8)),
                ((1, 5), (-1, 1)),
                ((4, 5), (-1, 1)),
                ((5, 1), (-1, 8)),
            ])
    }

    fn r8(&self) -> Expr {
        cf(CfName::R, 1).root(8)
    }
    fn s1(&self) -> Expr {
        cf(CfName::S1, 1).root(4)
    }
    fn s2(&self) -> Expr {
        cf(CfName::S2, 1).root(4)
    }
    fn t1(&self) -> Expr {
        cf(CfName::T1, 1).root(2)
    }
    fn t2(&self) -> Expr {
        cf(CfName::T2, 1).root(2)
    }

    fn x7(&self) -> Expr {
        num(1) / (self.t1() * self.s2() * self.r8())
    }
    fn x3(&self) -> Expr {
        self.t1() / (self.s2() * self.r8())
    }
    fn x9(&self) -> Expr {
        self.s1() * self.r8() / self.t2()
    }
    /// √T ⁴√S1 ⁸√R with T chosen by the reading.
    fn x1(&self, reading: Reading) -> Expr {
        let t = match reading {
            Reading::AsPrinted => self.t1(),
            Reading::T2 => self.t2(),
        };
        t * self.s1() * self.r8()
    }
    /// √T1 ⁴√S2 ⁸√R
    fn y(&self) -> Expr {
        self.t1() * self.s2() * self.r8()
    }

    fn big_a(&self) -> Expr {
        c(ConstName::Sqrt10P2S5)
    }
    fn big_b(&self) -> Expr {
        c(ConstName::Sqrt10M2S5)
    }
    fn big_c(&self) -> Expr {
        c(ConstName::Sqrt50M10S5)
    }
    fn s5(&self) -> Expr {
        c(ConstName::Sqrt5)
    }

    fn o1_o9_rhs(&self, reading: Reading) -> Expr {
        let d = (self.big_c() + num(3) * self.big_b()) * rat(1, 2);
        -(self.big_a() * self.e()) + self.f() * (self.big_a() * self.x7() + d * (self.x3() - self.x1(reading)))
    }

    fn o3_o7_rhs(&self, reading: Reading) -> Expr {
        let h = (self.s5() - num(1)) * rat(1, 2);
        self.big_a() * h.clone() * self.e()
            - self.f() * (self.big_a() * h.clone() * self.x7() + self.big_b() * h * (self.x1(reading) - self.x3()))
    }

    fn p1p9_rhs(&self, reading: Reading) -> Expr {
        num(-2) * self.e()
            + self.f()
                * (num(2) * self.x9()
                    + num(2) * (self.s5() + num(1)) * self.x3()
                    + (num(3) + self.s5()) * (self.x7() - self.x1(reading)))
    }

    /// `plus` inserts the operator the printed display lacks; without it the
    /// last two factors multiply.
    fn p7p3_rhs(&self, reading: Reading, plus: bool) -> Expr {
        let head = num(2) * (self.s5() - num(1)) * self.x3();
        let tail = (self.s5() - num(3)) * (self.x1(reading) - self.x7());
        let bracket = if plus {
            num(2) * self.x9() - head + tail
        } else {
            num(2) * self.x9() - head * tail
        };
        num(-2) * self.e() + self.f() * bracket
    }

    fn m7m3_rhs(&self, reading: Reading) -> Expr {
        let ba = self.big_b() - self.big_a();
        ba.clone() * self.e() + self.f() * (self.big_b() * (self.x9() - self.x3()) + ba * self.x1(reading))
    }

    fn o99p_rhs(&self, reading: Reading) -> Expr {
        let k = num(5) + self.s5();
        -(k.clone() * self.e())
            + self.f() * ((num(5) + num(3) * self.s5()) * (self.x3() - self.x1(reading)) + k * self.x7())
    }

    fn o99m_rhs(&self, last: Expr) -> Expr {
        let k = self.big_b() + num(2) * self.big_a();
        k.clone() * self.e()
            + self.f()
                * (self.big_a() * (self.x9() - self.x7()) - k * self.x3()
                    + (num(2) * self.big_b() + num(2) * self.big_a()) * last)
    }

    fn o77p_rhs(&self, reading: Reading) -> Expr {
        let k = num(5) - self.s5();
        -(k.clone() * self.e())
            + self.f() * ((num(3) * self.s5() - num(5)) * (self.x1(reading) - self.x3()) + k * self.x7())
    }

    fn o77m_rhs(&self, last: Expr) -> Expr {
        let k = num(2) * self.big_b() - self.big_a();
        k.clone() * self.e()
            + self.f()
                * (self.big_b() * (self.x9() - self.x7()) - k * self.x3()
                    + (num(2) * self.big_b() - num(2) * self.big_a()) * last)
    }
}

fn theorem() -> Vec<IdentitySpec> {
    use Reading::{AsPrinted, T2};
    let t = Thm3::new();
    let order = || Rat::from(10);
    let o1_o9 = t.op(1) - t.op(9);
    let o3_o7 = t.op(3) - t.op(7);
    let p1p9 = t.one_plus_alpha(9) * t.op(9) + t.one_plus_alpha(1) * t.op(1);
    let m1m9 = t.one_plus_alpha(9) * t.op(9) - t.one_plus_alpha(1) * t.op(1);
    let p7p3 = t.one_plus_alpha(7) * t.op(7) + t.one_plus_alpha(3) * t.op(3);
    let m7m3 = t.one_plus_alpha(7) * t.op(7) - t.one_plus_alpha(3) * t.op(3);
    let o99p = t.alpha(9) * t.op(9) + t.alpha(1) * t.op(1);
    let o99m = t.alpha(9) * t.op(9) - t.alpha(1) * t.op(1);
    let o77p = t.alpha(7) * t.op(7) + t.alpha(3) * t.op(3);
    let o77m = t.alpha(7) * t.op(7) - t.alpha(3) * t.op(3);
    let unsquared = t.prod_except(&[1]) - t.prod_except(&[9]);

    vec![
        exact("thm3-O1-O9", "Omega_1 P - Omega_9 P as printed", o1_o9.clone(), t.o1_o9_rhs(AsPrinted), order()),
        exact("thm3-O3-O7", "Omega_3 P - Omega_7 P as printed", o3_o7.clone(), t.o3_o7_rhs(AsPrinted), order()),
        exact("thm3-1O1+9O9", "(1+alpha_9) Omega_9 P + (1+alpha_1) Omega_1 P as printed", p1p9.clone(), t.p1p9_rhs(AsPrinted), order()),
        exact("thm3-zero", "(1+alpha_9) Omega_9 P - (1+alpha_1) Omega_1 P = 0 as printed", m1m9, num(0), order()),
        exact("thm3-7O7+3O3", "(1+alpha_7) Omega_7 P + (1+alpha_3) Omega_3 P as printed (no operator before the sqrt5 - 3 term)", p7p3.clone(), t.p7p3_rhs(AsPrinted, false), order()),
        exact("thm3-7O7-3O3", "(1+alpha_7) Omega_7 P - (1+alpha_3) Omega_3 P as printed", m7m3.clone(), t.m7m3_rhs(AsPrinted), order()),
        exact("thm3-O99+O11", "alpha_9 Omega_9 P + alpha_1 Omega_1 P as printed", o99p.clone(), t.o99p_rhs(AsPrinted), order()),
        exact("thm3-O99-O11", "alpha_9 Omega_9 P - alpha_1 Omega_1 P as printed", o99m.clone(), t.o99m_rhs(t.y()), order()),
        exact("thm3-O77+O33", "alpha_7 Omega_7 P + alpha_3 Omega_3 P as printed", o77p.clone(), t.o77p_rhs(AsPrinted), order()),
        exact("thm3-O77-O33", "alpha_7 Omega_7 P - alpha_3 Omega_3 P as printed", o77m.clone(), t.o77m_rhs(t.y()), order()),
        document(exact(
            "thm3-O1-O9-var-unsquared",
            "prod_{k!=1,5} Omega_k - prod_{k!=5,9} Omega_k against the printed right side",
            unsquared,
            t.o1_o9_rhs(AsPrinted),
            order(),
        )),
        document(exact("thm3-O1-O9-var-t2", "O1-O9 with sqrt T2 in the X1 term", o1_o9.clone(), t.o1_o9_rhs(T2), order())),
        document(exact(
            "thm3-O1-O9-var-t2-neg",
            "O1-O9 with sqrt T2 in the X1 term and the right side negated",
            o1_o9,
            -t.o1_o9_rhs(T2),
            order(),
        )),
        document(exact("thm3-O3-O7-var-t2", "O3-O7 with sqrt T2 in the X1 term", o3_o7, t.o3_o7_rhs(T2), order())),
        document(exact("thm3-1O1+9O9-var-t2", "1O1+9O9 with sqrt T2 in the X1 term", p1p9, t.p1p9_rhs(T2), order())),
        document(exact(
            "thm3-7O7+3O3-var-plus",
            "7O7+3O3 with a plus before the sqrt5 - 3 term",
            p7p3.clone(),
            t.p7p3_rhs(AsPrinted, true),
            order(),
        )),
        document(exact(
            "thm3-7O7+3O3-var-plus-t2",
            "7O7+3O3 with a plus before the sqrt5 - 3 term and sqrt T2 in the X1 term",
            p7p3,
            t.p7p3_rhs(T2, true),
            order(),
        )),
        document(exact("thm3-7O7-3O3-var-t2", "7O7-3O3 with sqrt T2 in the X1 term", m7m3, t.m7m3_rhs(T2), order())),
        document(exact("thm3-O99+O11-var-t2", "O99+O11 with sqrt T2 in the X1 term", o99p, t.o99p_rhs(T2), order())),
        document(exact(
            "thm3-O99-O11-var-s1",
            "O99-O11 with the fourth root of S1 in the last bracket term",
            o99m.clone(),
            t.o99m_rhs(t.x1(AsPrinted)),
            order(),
        )),
        document(exact(
            "thm3-O99-O11-var-s1-t2",
            "O99-O11 with sqrt T2 and the fourth root of S1 in the last bracket term",
            o99m,
            t.o99m_rhs(t.x1(T2)),
            order(),
        )),
        document(exact("thm3-O77+O33-var-t2", "O77+O33 with sqrt T2 in the X1 term", o77p, t.o77p_rhs(T2), order())),
        document(exact(
            "thm3-O77-O33-var-s1",
            "O77-O33 with the fourth root of S1 in the last bracket term",
            o77m.clone(),
            t.o77m_rhs(t.x1(AsPrinted)),
            order(),
        )),
        document(exact(
            "thm3-O77-O33-var-s1-t2",
            "O77-O33 with sqrt T2 and the fourth root of S1 in the last bracket term",
            o77m,
            t.o77m_rhs(t.x1(T2)),
            order(),
        )),
    ]
}

fn numeric_tables() -> Vec<IdentitySpec> {
    vec![
        numeric("num-prodsine", "prod_{k=1..9} sin(k pi/20) = sqrt10/512", NumericKind::ProdSine, Expected::Pass),
        numeric(
            "num-tm",
            "prod_{k=1..9} theta1(k pi/20) = sqrt10 eta^9(tau) eta(20 tau)/eta(2 tau) at q = 0.1",
            NumericKind::Tm,
            Expected::Pass,
        ),
        numeric("num-A1", "A_1(n) table for 0 <= n < 120", NumericKind::ATable(ATable::A1), Expected::Pass),
        numeric("num-A2", "A_2(n) table for 0 <= n < 120", NumericKind::ATable(ATable::A2), Expected::Pass),
        numeric("num-A3", "A_3(n) table for 0 <= n < 120", NumericKind::ATable(ATable::A3), Expected::Pass),
    ]
}

fn lambert(modulus: u32, residues: &[i64], weight: LambertWeight, parity: Parity) -> Expr {
    Expr::Lambert(LambertSpec::new(modulus, residues, weight, parity).expect("valid Lambert spec"))
}

/// η⁴(40τ)/η²(20τ) · (1/T(q²) + T(q²))
fn eisenstein_rhs(name: CfName) -> Expr {
    let t = cf(name, 2);
    eta(&[((40, 1), (4, 1)), ((20, 1), (-2, 1))]) * (num(1) / t.clone() + t)
}

fn pochs(step: i64, residues: &[i64]) -> Expr {
    product(residues.iter().map(|&a| poch(1, a, step)))
}

fn e1_bilateral(order: &Rat) -> Result<(QSeries<Rat>, QSeries<Rat>)> {
    let spec = LambertSpec::new(20, &[3, 7, -13, -17], LambertWeight::None, Parity::Odd)?;
    let lhs = crate::eisenstein::lambert_series(&spec, order);
    let shifted = |z: u32, lead: i64| {
        let lead = Rat::from(lead);
        let terms = onepsione_terms(20, z, 40, &(order - &lead))
            .into_iter()
            .map(|(e, c)| (&e + &lead, c))
            .collect();
        QSeries::from_terms(terms, order.clone())
    };
    Ok((lhs, shifted(6, 3).add(&shifted(14, 7))))
}

fn onepsione_z6(order: &Rat) -> Result<(QSeries<Rat>, QSeries<Rat>)> {
    onepsione_pair(20, 6, 40, order)
}

fn onepsione_z14(order: &Rat) -> Result<(QSeries<Rat>, QSeries<Rat>)> {
    onepsione_pair(20, 14, 40, order)
}

fn eisenstein() -> Vec<IdentitySpec> {
    let sixty = || Rat::from(60);
    vec![
        exact(
            "eq-E1",
            "odd-n Lambert series in q^3, q^7, q^13, q^17 mod 20 = eta^4(40)/eta^2(20) (1/T1(q^2) + T1(q^2))",
            lambert(20, &[3, 7, -13, -17], LambertWeight::None, Parity::Odd),
            eisenstein_rhs(CfName::T1),
            sixty(),
        ),
        exact(
            "eq-E2",
            "odd-n Lambert series in q, q^9, q^11, q^19 mod 20 = eta^4(40)/eta^2(20) (1/T2(q^2) + T2(q^2))",
            lambert(20, &[1, 9, -11, -19], LambertWeight::None, Parity::Odd),
            eisenstein_rhs(CfName::T2),
            sixty(),
        ),
        series(
            "eq-1psi1-z6",
            "1psi1 summation at a = q^20, z = q^6, base q^40",
            onepsione_z6,
            60,
        ),
        series(
            "eq-1psi1-z14",
            "1psi1 summation at a = q^20, z = q^14, base q^40",
            onepsione_z14,
            60,
        ),
        series(
            "eq-E1-bilateral",
            "E1 Lambert side = q^3 sum q^(6n)/(1 - q^(40n+20)) + q^7 sum q^(14n)/(1 - q^(40n+20)) over all integers n",
            e1_bilateral,
            60,
        ),
        exact(
            "eq-Es3",
            "sum n(q^n - q^9n - q^11n + q^19n)/(1 - q^20n) as a product",
            lambert(20, &[1, -9, -11, 19], LambertWeight::N, Parity::All),
            q_pow(1, 1) * poch(1, 20, 20).pow(Rat::from(2)) * poch(1, 10, 10).pow(Rat::from(2)) * pochs(20, &[8, 12])
                / pochs(20, &[1, 9, 11, 19]).pow(Rat::from(2)),
            sixty(),
        ),
        exact(
            "eq-Es4",
            "sum n(q^3n - q^7n - q^13n + q^17n)/(1 - q^20n) as a product",
            lambert(20, &[3, -7, -13, 17], LambertWeight::N, Parity::All),
            q_pow(3, 1) * poch(1, 20, 20).pow(Rat::from(2)) * poch(1, 10, 10).pow(Rat::from(2)) * pochs(20, &[4, 16])
                / pochs(20, &[3, 7, 13, 17]).pow(Rat::from(2)),
            sixty(),
        ),
        exact(
            "eq-Es5",
            "sum (n/3)(q^n - q^9n - q^11n + q^19n)/(1 - q^20n) as a product",
            lambert(20, &[1, -9, -11, 19], LambertWeight::Legendre3, Parity::All),
            q_pow(1, 1) * poch(1, 10, 10).pow(Rat::from(2)) * poch(1, 60, 60) * pochs(20, &[1, 8, 9, 11, 12, 19])
                / (poch(1, 20, 20) * pochs(60, &[3, 27, 33, 57])),
            sixty(),
        ),
        exact(
            "eq-Es6",
            "sum (n/3)(q^3n - q^7n - q^13n + q^17n)/(1 - q^20n) as a product",
            lambert(20, &[3, -7, -13, 17], LambertWeight::Legendre3, Parity::All),
            q_pow(3, 1) * poch(1, 10, 10).pow(Rat::from(2)) * poch(1, 60, 60) * pochs(20, &[3, 4, 7, 13, 16, 17])
                / (poch(1, 20, 20) * pochs(60, &[9, 21, 39, 51])),
            sixty(),
        ),
        numeric(
            "num-Es1",
            "sum (q^n - q^9n - q^11n + q^19n)/(1 - q^20n) sin 2nz as a theta1 quotient with theta1'(0|20tau)",
            NumericKind::EsLemma(EsLemma::Es1, EsReading::Derivative),
            Expected::Pass,
        ),
        numeric(
            "num-Es2",
            "sum (q^3n - q^7n - q^13n + q^17n)/(1 - q^20n) sin 2nz as a theta1 quotient with theta1'(0|20tau)",
            NumericKind::EsLemma(EsLemma::Es2, EsReading::Derivative),
            Expected::Pass,
        ),
        numeric(
            "num-Es1-printed",
            "Es1 with theta1(0|20tau) as typeset, which vanishes",
            NumericKind::EsLemma(EsLemma::Es1, EsReading::AsPrinted),
            Expected::Document,
        ),
        numeric(
            "num-Es2-printed",
            "Es2 with theta1(0|20tau) as typeset, which vanishes",
            NumericKind::EsLemma(EsLemma::Es2, EsReading::AsPrinted),
            Expected::Document,
        ),
        numeric(
            "num-theta1-derivative",
            "theta1'(0) by central difference against 2q^(1/8)(q;q)^3",
            NumericKind::Theta1Derivative,
            Expected::Pass,
        ),
        numeric(
            "num-theta1-sum-product",
            "theta1 sine series against its product form at 20 seeded samples",
            NumericKind::Theta1SumProduct,
            Expected::Pass,
        ),
        numeric(
            "num-liu",
            "theta1(pi/3 - z) theta1(pi/3 + z) = (q;q)^3 theta1(3z|3tau) / ((q^3;q^3) theta1(z))",
            NumericKind::Liu,
            Expected::Pass,
        ),
    ]
}

/// Every registered identity, in catalog order.
pub fn registry() -> Vec<IdentitySpec> {
    let mut all = kernel();
    all.extend(classical());
    all.extend(lemma2());
    all.extend(tenth_roots());
    all.extend(cf_displays());
    all.extend(theorem());
    all.extend(numeric_tables());
    all.extend(eisenstein());
    all
}
