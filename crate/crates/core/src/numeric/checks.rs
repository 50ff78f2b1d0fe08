//! Numeric identity checks. Each returns the per-sample discrepancies and the
//! tolerance it was held to.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

use super::theta::{euler_numeric, pi, pi_tau, theta1_complex, theta1_prime_zero, theta1_product, theta1_real};
use super::Precision;
use crate::arith::{const_lookup, ConstName, KElem, Rat};
use crate::cfractions::{cf_numeric, cf_series, series_numeric, CfName};
use crate::error::{Error, Result};

/// A numeric sample point (nome q, real argument z).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub q: f64,
    pub z: f64,
}

impl Sample {
    pub fn new(q: f64, z: f64) -> Result<Self> {
        if !(q > 0.0 && q <= 0.5) {
            return Err(Error::InvalidArgument(format!("sample nome must lie in (0, 0.5], got {q}")));
        }
        Ok(Sample { q, z })
    }

    pub fn label(&self) -> String {
        format!("q={} z={}", self.q, self.z)
    }
}

/// Default sample set for the two-variable lemma.
pub fn default_samples() -> Vec<Sample> {
    vec![
        Sample { q: 0.1, z: 0.7 },
        Sample { q: 0.05, z: 1.1 },
        Sample { q: 0.2, z: 0.3 },
    ]
}

#[derive(Debug, Clone)]
pub struct SampleOutcome {
    pub point: String,
    pub lhs: Float,
    pub rhs: Float,
    pub error: Float,
}

#[derive(Debug, Clone)]
pub struct NumericOutcome {
    pub samples: Vec<SampleOutcome>,
    pub tolerance: Float,
}

impl NumericOutcome {
    pub fn passed(&self) -> bool {
        !self.samples.is_empty() && self.samples.iter().all(|s| s.error <= self.tolerance)
    }

    pub fn worst(&self) -> Option<&SampleOutcome> {
        self.samples
            .iter()
            .max_by(|a, b| a.error.partial_cmp(&b.error).expect("errors are finite"))
    }

    /// First sample exceeding the tolerance, in sample order.
    pub fn first_failure(&self) -> Option<&SampleOutcome> {
        self.samples.iter().find(|s| s.error > self.tolerance)
    }
}

fn outcome(point: String, lhs: Float, rhs: Float) -> SampleOutcome {
    let error = Float::with_val(lhs.prec(), &lhs - &rhs).abs();
    SampleOutcome { point, lhs, rhs, error }
}

fn tolerance(prec: &Precision, exp10: i32) -> Float {
    Float::with_val(prec.bits(), 10).pow_i(exp10)
}

trait PowI {
    fn pow_i(self, e: i32) -> Float;
}

impl PowI for Float {
    fn pow_i(self, e: i32) -> Float {
        rug::ops::Pow::pow(self, e)
    }
}

fn sin_frac_pi(num: i64, den: i64, prec: u32) -> Float {
    (pi(prec) * num / den).sin()
}

/// ∏_{k=1..9} sin(kπ/20) against √10/512, plus the co-function pairing
/// sin(kπ/20) = cos((10 − k)π/20).
pub fn sine_product_check(prec: Precision) -> NumericOutcome {
    let bits = prec.bits();
    let mut prod = Float::with_val(bits, 1);
    for k in 1..=9 {
        prod *= sin_frac_pi(k, 20, bits);
    }
    let target = Float::with_val(bits, 10).sqrt() / 512u32;
    let mut samples = vec![outcome("product".into(), prod, target)];
    for k in 1..=9 {
        let c = Float::with_val(bits, pi(bits) * (10 - k) / 20i64).cos();
        samples.push(outcome(format!("pair k={k}"), sin_frac_pi(k, 20, bits), c));
    }
    NumericOutcome {
        samples,
        tolerance: tolerance(&prec, 5 - prec.digits as i32),
    }
}

/// η(tτ) as q^(t/24)(q^t; q^t)∞ at a real nome.
fn eta(q: &Float, t: u32) -> Float {
    let qt = Float::with_val(q.prec(), rug::ops::Pow::pow(q, t));
    let pre = (Float::with_val(q.prec(), q.ln_ref()) * t / 24u32).exp();
    pre * euler_numeric(&qt)
}

/// ∏_{k=1..9} θ1(kπ/20|τ) against √10 η⁹(τ) η(20τ)/η(2τ).
pub fn tm_check(q: f64, prec: Precision) -> NumericOutcome {
    let bits = prec.bits();
    let qf = Float::with_val(bits, q);
    let mut lhs = Float::with_val(bits, 1);
    for k in 1..=9 {
        lhs *= theta1_real(&(pi(bits) * k / 20u32), &qf);
    }
    let e1 = eta(&qf, 1);
    let rhs = Float::with_val(bits, 10).sqrt() * e1.pow_i(9) * eta(&qf, 20) / eta(&qf, 2);
    NumericOutcome {
        samples: vec![outcome(format!("q={q}"), lhs, rhs)],
        tolerance: tolerance(&prec, -20),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ATable {
    A1,
    A2,
    A3,
}

impl ATable {
    /// Tabulated closed form for residues 0..=9; residues 10..=19 are negated.
    fn closed_form(self, r: usize) -> KElem {
        let c = |n| const_lookup(n).expect("named constant");
        let a = c(ConstName::Sqrt10P2S5);
        let b = c(ConstName::Sqrt10M2S5);
        let cc = c(ConstName::Sqrt50M10S5);
        let s5 = c(ConstName::Sqrt5);
        let k = |v: i64| KElem::from_rat(v.into());
        let half = Rat::frac(1, 2);
        let (r, sign) = if r < 10 { (r, 1) } else { (r - 10, -1) };
        let v = match self {
            ATable::A1 => {
                let d = (&cc + &(&k(3) * &b)).scale(&half);
                [KElem::zero(), a.clone(), a.clone(), d.clone(), d.clone(), d.clone(), d, a.clone(), a, KElem::zero()][r].clone()
            }
            ATable::A2 => {
                let t = -(&k(3) + &s5);
                let u = -(&k(2) * &(&s5 + &k(1)));
                [k(2), t.clone(), k(-2), u.clone(), t.clone(), t.clone(), u, k(-2), t, k(2)][r].clone()
            }
            ATable::A3 => {
                let e = &b + &(&k(2) * &a);
                let f = &(&k(2) * &b) + &(&k(2) * &a);
                [a.clone(), a.clone(), e.clone(), e.clone(), f.clone(), f, e.clone(), e, a.clone(), a][r].clone()
            }
        };
        if sign < 0 {
            -v
        } else {
            v
        }
    }

    /// Value from the sine-ratio definition.
    fn from_sines(self, n: i64, bits: u32) -> Float {
        let ratio = |k: i64| sin_frac_pi((2 * n + 1) * k, 20, bits) / sin_frac_pi(k, 20, bits);
        let alpha = |k: i64| -(pi(bits) * (2 * k) / 20u32).cos() * 2u32;
        let (s1, s9) = (ratio(1), ratio(9));
        match self {
            ATable::A1 => s1 - s9,
            ATable::A2 => (1 + alpha(9)) * s9 + (1 + alpha(1)) * s1,
            ATable::A3 => alpha(9) * s9 - alpha(1) * s1,
        }
    }
}

/// Tabulated A-values against their sine-ratio definitions for n in `range`.
pub fn a_table_check(table: ATable, range: std::ops::Range<i64>, prec: Precision) -> NumericOutcome {
    let bits = prec.bits();
    let samples = range
        .into_par_iter()
        .map(|n| {
            let tab = table.closed_form(n.rem_euclid(20) as usize).to_float(bits);
            outcome(format!("n={n}"), table.from_sines(n, bits), tab)
        })
        .collect();
    NumericOutcome {
        samples,
        tolerance: tolerance(&prec, -25),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EsLemma {
    Es1,
    Es2,
}

/// Which prefactor the right side carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EsReading {
    /// θ1′(0|20τ), the reading that makes the lemma true.
    Derivative,
    /// θ1(0|20τ) as typeset, which vanishes identically.
    AsPrinted,
}

impl EsLemma {
    fn residues(self) -> [(i64, u32); 4] {
        match self {
            EsLemma::Es1 => [(1, 1), (-1, 9), (-1, 11), (1, 19)],
            EsLemma::Es2 => [(1, 3), (-1, 7), (-1, 13), (1, 17)],
        }
    }

    /// (c1, c2, c3): denominators at z ± c1πτ, z ± c2πτ and the numerator θ1(c3πτ|20τ).
    fn shifts(self) -> (u32, u32, u32) {
        match self {
            EsLemma::Es1 => (1, 9, 8),
            EsLemma::Es2 => (3, 7, 4),
        }
    }
}

fn es_lhs(which: EsLemma, q: &Float, z: &Float) -> Float {
    let prec = q.prec();
    let eps = Float::with_val(prec, Float::u_exp(1, -(prec as i32) - 16));
    let mut acc = Float::with_val(prec, 0);
    let mut n = 1u32;
    loop {
        let qn = Float::with_val(prec, rug::ops::Pow::pow(q, n));
        if qn < eps {
            return acc;
        }
        let mut num = Float::with_val(prec, 0);
        for (sg, a) in which.residues() {
            let t = Float::with_val(prec, rug::ops::Pow::pow(&qn, a));
            if sg > 0 {
                num += t;
            } else {
                num -= t;
            }
        }
        let den = 1 - Float::with_val(prec, rug::ops::Pow::pow(&qn, 20u32));
        acc += num / den * Float::with_val(prec, z * (2 * n)).sin();
        n += 1;
    }
}

fn es_rhs(which: EsLemma, reading: EsReading, q: &Float, z: &Float) -> Result<Complex> {
    let prec = q.prec();
    let big_q = Float::with_val(prec, rug::ops::Pow::pow(q, 20u32));
    let pt = pi_tau(q);
    let (c1, c2, c3) = which.shifts();
    let th = |arg: Complex| theta1_complex(&arg, &big_q);
    let zc = Complex::with_val(prec, (z, 0));
    let lead = match reading {
        EsReading::Derivative => theta1_prime_zero(&big_q),
        EsReading::AsPrinted => theta1_real(&Float::with_val(prec, 0), &big_q),
    };
    let num = th(Complex::with_val(prec, &zc * 2u32))
        * th(Complex::with_val(prec, &pt * 10u32))
        * th(Complex::with_val(prec, &pt * c3))
        * lead;
    let floor = Float::with_val(prec, 1e-10);
    let mut den = Complex::with_val(prec, 4);
    for c in [c1, c2] {
        for s in [1i32, -1] {
            let arg = Complex::with_val(prec, &zc + Complex::with_val(prec, &pt * (s * c as i32)));
            let t = th(arg);
            if Float::with_val(prec, t.abs_ref()) < floor {
                return Err(Error::SampleRejected(format!(
                    "theta1 factor near a zero at z = {z}, shift {s}·{c}πτ"
                )));
            }
            den *= t;
        }
    }
    Ok(-(num / den))
}

/// Lambert-sine side against the θ1 quotient at every sample.
pub fn es_lemma_check(which: EsLemma, reading: EsReading, samples: &[Sample], prec: Precision) -> Result<NumericOutcome> {
    let bits = prec.bits();
    let samples = samples
        .par_iter()
        .map(|s| {
            let q = Float::with_val(bits, s.q);
            let z = Float::with_val(bits, s.z);
            let lhs = es_lhs(which, &q, &z);
            let rhs = es_rhs(which, reading, &q, &z)?;
            let diff = Complex::with_val(bits, &rhs - &lhs);
            let error = Float::with_val(bits, diff.abs_ref());
            Ok(SampleOutcome {
                point: s.label(),
                lhs,
                rhs: rhs.real().clone(),
                error,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NumericOutcome {
        samples,
        tolerance: tolerance(&prec, -20),
    })
}

/// θ1(π/3 − z)θ1(π/3 + z) against (q;q)³ θ1(3z|3τ) / ((q³;q³) θ1(z)).
pub fn liu_check(samples: &[Sample], prec: Precision) -> NumericOutcome {
    let bits = prec.bits();
    let samples = samples
        .par_iter()
        .map(|s| {
            let q = Float::with_val(bits, s.q);
            let z = Float::with_val(bits, s.z);
            let third = pi(bits) / 3u32;
            let lhs = theta1_real(&Float::with_val(bits, &third - &z), &q) * theta1_real(&Float::with_val(bits, &third + &z), &q);
            let q3 = Float::with_val(bits, rug::ops::Pow::pow(&q, 3u32));
            let e = euler_numeric(&q);
            let rhs = e.clone() * &e * &e * theta1_real(&Float::with_val(bits, &z * 3u32), &q3)
                / (euler_numeric(&q3) * theta1_real(&z, &q));
            outcome(s.label(), lhs, rhs)
        })
        .collect();
    NumericOutcome {
        samples,
        tolerance: tolerance(&prec, -25),
    }
}

/// Seeded random samples with q in [0.01, 0.5] and z in [0.05, 3].
pub fn random_samples(count: usize, seed: u64) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Sample {
            q: rng.gen_range(0.01..=0.5),
            z: rng.gen_range(0.05..=3.0),
        })
        .collect()
}

/// Sine series against the product form.
pub fn theta1_sum_product_check(samples: &[Sample], prec: Precision) -> NumericOutcome {
    let bits = prec.bits();
    let samples = samples
        .par_iter()
        .map(|s| {
            let q = Float::with_val(bits, s.q);
            let z = Float::with_val(bits, s.z);
            outcome(s.label(), theta1_real(&z, &q), theta1_product(&z, &q))
        })
        .collect();
    NumericOutcome {
        samples,
        tolerance: tolerance(&prec, -25),
    }
}

/// Central difference of θ1 at 0 against 2q^(1/8)(q;q)³∞.
pub fn theta1_derivative_check(qs: &[f64], prec: Precision) -> NumericOutcome {
    let bits = prec.bits();
    let samples = qs
        .par_iter()
        .map(|&qv| {
            let q = Float::with_val(bits, qv);
            let h = tolerance(&prec, -(prec.digits as i32) / 3);
            let plus = theta1_real(&h, &q);
            let minus = theta1_real(&Float::with_val(bits, -&h), &q);
            let fd = (plus - minus) / (h * 2u32);
            let e = euler_numeric(&q);
            let target = (Float::with_val(bits, q.ln_ref()) / 8u32).exp() * 2u32 * e.clone() * &e * &e;
            outcome(format!("q={qv}"), fd, target)
        })
        .collect();
    NumericOutcome {
        samples,
        tolerance: tolerance(&prec, -15),
    }
}

/// Ω_k(q) as a truncated product against q^(−1/12) θ1(kπ/20) / (2η(τ) sin(kπ/20)),
/// for every k in 1..=9 at every nome.
pub fn ki_check(qs: &[f64], prec: Precision) -> NumericOutcome {
    let bits = prec.bits();
    let points: Vec<(u8, f64)> = qs.iter().flat_map(|&q| (1..=9u8).map(move |k| (k, q))).collect();
    let samples = points
        .par_iter()
        .map(|&(k, qv)| {
            let q = Float::with_val(bits, qv);
            let alpha = const_lookup(ConstName::Alpha(k)).expect("alpha constant").to_float(bits);
            let eps = Float::with_val(bits, Float::u_exp(1, -(bits as i32) - 16));
            let mut lhs = Float::with_val(bits, 1);
            let mut qn = q.clone();
            while qn > eps {
                let q2n = Float::with_val(bits, qn.square_ref());
                lhs *= Float::with_val(bits, &alpha * &qn) + 1u32 + q2n;
                qn *= &q;
            }
            let arg = pi(bits) * u32::from(k) / 20u32;
            let pre = (Float::with_val(bits, q.ln_ref()) / -12i32).exp();
            let rhs = pre * theta1_real(&arg, &q) / (eta(&q, 1) * 2u32 * sin_frac_pi(i64::from(k), 20, bits));
            outcome(format!("k={k} q={qv}"), lhs, rhs)
        })
        .collect();
    NumericOutcome {
        samples,
        tolerance: tolerance(&prec, -25),
    }
}

/// Displayed continued fraction at a fixed depth against the value of its
/// theta-quotient series.
pub fn cf_display_check(name: CfName, qs: &[f64], depth: usize, order: i64, prec: Precision) -> Result<NumericOutcome> {
    let series = cf_series(name, &Rat::one(), &Rat::from(order))?;
    let bits = prec.bits();
    let samples = qs
        .par_iter()
        .map(|&qv| {
            let q = Float::with_val(bits, qv);
            let lhs = cf_numeric(name, &q, depth)?;
            let rhs = series_numeric(&series, &q).0;
            Ok(outcome(format!("q={qv}"), lhs, rhs))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NumericOutcome {
        samples,
        tolerance: tolerance(&prec, -8),
    })
}
