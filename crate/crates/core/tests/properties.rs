use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use qverify::arith::{Coeff, KElem, Rat};
use qverify::cfractions::CfName;
use qverify::expr::{parse, Expr};
use qverify::qfunctions::{theta_f, EtaSpec, MonomialArg, ThetaMethod};
use qverify::series::QSeries;

fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rat::frac(n, d))
}

fn kelem() -> impl Strategy<Value = KElem> {
    [small_rat(), small_rat(), small_rat(), small_rat()].prop_map(|[a, b, c, d]| KElem::new(a, b, c, d))
}

/// Series on a random lattice with small integer coefficients.
fn series() -> impl Strategy<Value = QSeries<Rat>> {
    (
        -4i64..=4,
        prop_oneof![Just((1i64, 1i64)), Just((1, 2)), Just((1, 3)), Just((2, 3))],
        prop::collection::vec(-3i64..=3, 1..8),
    )
        .prop_map(|(off, (sn, sd), cs)| {
            let offset = Rat::frac(off, 4);
            let step = Rat::frac(sn, sd);
            let order = &offset + &(&step * &Rat::from(cs.len() as i64));
            QSeries::from_lattice(offset, step, cs.into_iter().map(Rat::from).collect(), order).unwrap()
        })
}

/// Power series with constant term 1, as roots require.
fn unit_series() -> impl Strategy<Value = QSeries<Rat>> {
    (prop::collection::vec(small_rat(), 1..8), prop_oneof![Just(1i64), Just(2), Just(5)]).prop_map(|(tail, d)| {
        let mut cs = vec![Rat::one()];
        cs.extend(tail);
        let step = Rat::frac(1, d);
        let order = &step * &Rat::from(cs.len() as i64);
        QSeries::from_lattice(Rat::zero(), step, cs, order).unwrap()
    })
}

fn min_order<C: Coeff>(a: &QSeries<C>, b: &QSeries<C>) -> Rat {
    std::cmp::min(a.order().clone(), b.order().clone())
}

fn agree<C: Coeff>(a: &QSeries<C>, b: &QSeries<C>) -> bool {
    a.equal_to_order(b, &min_order(a, b)).unwrap().equal
}

proptest! {
    #![proptest_config(config(200, 0x5eed_0001))]

    #[test]
    fn field_ring_axioms(a in kelem(), b in kelem(), c in kelem()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn field_inverse(a in kelem()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inv().unwrap(), KElem::one());
    }

    #[test]
    fn field_embedding_is_multiplicative(a in kelem(), b in kelem()) {
        let prec = 200;
        let lhs = (&a * &b).to_float(prec);
        let rhs = a.to_float(prec) * b.to_float(prec);
        let diff = rug::Float::with_val(prec, &lhs - &rhs).abs();
        prop_assert!(diff < 1e-40);
    }
}

proptest! {
    #![proptest_config(config(150, 0x5eed_0002))]

    #[test]
    fn series_ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert!(agree(&a.mul(&b), &b.mul(&a)));
        prop_assert!(agree(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
        prop_assert!(agree(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))));
        prop_assert!(agree(&a.add(&b).sub(&b), &a.truncate(&min_order(&a, &b))));
    }

    #[test]
    fn inverse_contract(a in series()) {
        prop_assume!(!a.is_zero());
        let inv = a.unit_inv().unwrap();
        let one = a.mul(&inv);
        prop_assert!(agree(&one, &QSeries::one(one.order().clone())));
    }

    #[test]
    fn root_contract(a in unit_series(), n in prop_oneof![Just(2u32), Just(4), Just(8)]) {
        let r = a.nth_root(n).unwrap();
        prop_assert!(agree(&r.pow_int(n as i64).unwrap(), &a));
    }

    #[test]
    fn rational_power_contract(a in unit_series(), p in 1i64..=5, q in 1i64..=4) {
        let e = Rat::frac(p, q);
        let lhs = a.pow_rat(&e).unwrap().pow_int(q).unwrap();
        let rhs = a.pow_int(p).unwrap();
        prop_assert!(agree(&lhs, &rhs));
    }

    #[test]
    fn substitution_homomorphism(a in series(), b in series(), m in prop_oneof![Just(Rat::from(2)), Just(Rat::frac(1, 2)), Just(Rat::frac(3, 5))]) {
        let lhs = a.mul(&b).substitute(&m).unwrap();
        let rhs = a.substitute(&m).unwrap().mul(&b.substitute(&m).unwrap());
        prop_assert!(agree(&lhs, &rhs));
        let lhs = a.add(&b).substitute(&m).unwrap();
        let rhs = a.substitute(&m).unwrap().add(&b.substitute(&m).unwrap());
        prop_assert!(agree(&lhs, &rhs));
    }

    #[test]
    fn canonical_is_idempotent(a in series()) {
        let once = a.clone().canonical();
        prop_assert_eq!(once.clone().canonical(), once);
    }
}

fn monomial_arg() -> impl Strategy<Value = MonomialArg> {
    (any::<bool>(), 1i64..=12).prop_map(|(neg, e)| MonomialArg {
        negative: neg,
        exp: Rat::from(e),
    })
}

proptest! {
    #![proptest_config(config(25, 0x5eed_0003))]

    #[test]
    fn triple_product_matches_bilateral_sum(a in monomial_arg(), b in monomial_arg()) {
        let order = Rat::from(40);
        let p = theta_f(&a, &b, &order, ThetaMethod::TripleProduct).unwrap();
        let s = theta_f(&a, &b, &order, ThetaMethod::BilateralSum).unwrap();
        prop_assert!(p.equal_to_order(&s, &order).unwrap().equal);
    }
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..20, 1i64..4).prop_map(|(n, d)| Expr::Num(Rat::frac(n, d))),
        (-6i64..12, 1i64..6).prop_map(|(n, d)| Expr::Monomial(Rat::frac(n, d))),
        (monomial_arg(), 1i64..5).prop_map(|(a, m)| Expr::Poch { a, step: Rat::from(m) }),
        (monomial_arg(), monomial_arg()).prop_map(|(a, b)| Expr::Theta { a, b, method: ThetaMethod::TripleProduct }),
        (1i64..=20, -3i64..=3).prop_map(|(t, e)| Expr::Eta(EtaSpec::ints(&[(t, e)]))),
        (1u8..=9, 1i64..=5).prop_map(|(k, d)| Expr::Omega { k, scale: Rat::frac(1, d) }),
        (0usize..5, 1i64..=3).prop_map(|(i, s)| Expr::Cf { name: CfName::ALL[i], scale: Rat::from(s) }),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a / b),
            inner.clone().prop_map(|a| -a),
            (inner, 1u32..=8).prop_map(|(a, n)| a.root(n)),
        ]
    })
}

proptest! {
    #![proptest_config(config(300, 0x5eed_0004))]

    #[test]
    fn expression_display_round_trips(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e);
    }
}
