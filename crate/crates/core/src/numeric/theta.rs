//! θ1(z|τ) with nome convention θ1 = 2 Σ (−1)^n q^((2n+1)²/8) sin((2n+1)z).

use rug::float::Constant;
use rug::{Complex, Float};

/// Number of terms after which every further term of the sine series is
/// below 2^(−prec − 60) in modulus, for |Im z| ≤ `im`.
fn sine_series_terms(ln_q: f64, im: f64, prec: u32) -> usize {
    let target = -((prec as f64 + 60.0) * std::f64::consts::LN_2);
    let turn = (4.0 * im / -ln_q).ceil().max(0.0) as usize;
    let mut n = 0usize;
    loop {
        let k = (2 * n + 1) as f64;
        if n > turn && ln_q * k * k / 8.0 + k * im < target {
            return n;
        }
        n += 1;
    }
}

/// q^((2n+1)²/8) for a nome given by its logarithm.
fn nome_power(ln_q: &Float, k: u64) -> Float {
    let e = Float::with_val(ln_q.prec(), k * k) / 8u32;
    (e * ln_q).exp()
}

/// Truncated sine series with `terms` terms, and the magnitude of the first
/// omitted term as an error estimate.
pub fn theta1_numeric(z: &Float, q: &Float, terms: usize) -> (Float, Float) {
    let prec = q.prec();
    let ln_q = Float::with_val(prec, q.ln_ref());
    let mut acc = Float::with_val(prec, 0);
    for n in 0..terms {
        let k = 2 * n as u64 + 1;
        let t = nome_power(&ln_q, k) * Float::with_val(prec, z * k).sin();
        if n % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    let next = nome_power(&ln_q, 2 * terms as u64 + 1) * 2u32;
    (acc * 2u32, next)
}

/// θ1 at a complex argument, summed until the tail is negligible at the
/// working precision of `q`.
pub fn theta1_complex(z: &Complex, q: &Float) -> Complex {
    let prec = q.prec();
    let ln_q = Float::with_val(prec, q.ln_ref());
    let im = z.imag().to_f64().abs();
    let terms = sine_series_terms(ln_q.to_f64(), im, prec);
    let mut acc = Complex::with_val(prec, 0);
    for n in 0..=terms {
        let k = 2 * n as u64 + 1;
        let s = Complex::with_val(prec, z * k).sin();
        let t = s * nome_power(&ln_q, k);
        if n % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc * 2u32
}

/// θ1 at a real argument, to full working precision.
pub fn theta1_real(z: &Float, q: &Float) -> Float {
    let terms = sine_series_terms(q.to_f64().ln(), 0.0, q.prec());
    theta1_numeric(z, q, terms + 1).0
}

/// ∂θ1/∂z at z = 0 from the differentiated sine series.
pub fn theta1_prime_zero(q: &Float) -> Float {
    let prec = q.prec();
    let ln_q = Float::with_val(prec, q.ln_ref());
    let terms = sine_series_terms(ln_q.to_f64(), 0.0, prec) + 8;
    let mut acc = Float::with_val(prec, 0);
    for n in 0..terms {
        let k = 2 * n as u64 + 1;
        let t = nome_power(&ln_q, k) * k;
        if n % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc * 2u32
}

/// (q; q)∞ for real 0 < q < 1.
pub fn euler_numeric(q: &Float) -> Float {
    let prec = q.prec();
    let eps = Float::with_val(prec, Float::u_exp(1, -(prec as i32) - 16));
    let mut acc = Float::with_val(prec, 1);
    let mut qn = q.clone();
    while qn > eps {
        acc *= Float::with_val(prec, 1 - &qn);
        qn *= q;
    }
    acc
}

/// 2 q^(1/8) sin z ∏ (1 − q^n)(1 − 2 q^n cos 2z + q^(2n)).
pub fn theta1_product(z: &Float, q: &Float) -> Float {
    let prec = q.prec();
    let eps = Float::with_val(prec, Float::u_exp(1, -(prec as i32) - 16));
    let cos2z = Float::with_val(prec, z * 2u32).cos();
    let mut acc = Float::with_val(prec, z.sin_ref()) * 2u32;
    acc *= (Float::with_val(prec, q.ln_ref()) / 8u32).exp();
    let mut qn = q.clone();
    while qn > eps {
        let q2n = Float::with_val(prec, qn.square_ref());
        let f = Float::with_val(prec, 1 - &qn) * (1 - Float::with_val(prec, &qn * &cos2z) * 2u32 + q2n);
        acc *= f;
        qn *= q;
    }
    acc
}

/// πτ for the nome q = e^(2πiτ): i·(−ln q)/2.
pub fn pi_tau(q: &Float) -> Complex {
    let prec = q.prec();
    let im = -Float::with_val(prec, q.ln_ref()) / 2u32;
    Complex::with_val(prec, (Float::with_val(prec, 0), im))
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 200;

    fn f(v: f64) -> Float {
        Float::with_val(P, v)
    }

    fn close(a: &Float, b: &Float, tol: f64) -> bool {
        Float::with_val(P, a - b).abs() < tol
    }

    #[test]
    fn vanishes_at_zero() {
        assert!(theta1_numeric(&f(0.0), &f(0.3), 10).0.is_zero());
    }

    #[test]
    fn sum_matches_product() {
        let (q, z) = (f(0.1), f(0.7));
        assert!(close(&theta1_real(&z, &q), &theta1_product(&z, &q), 1e-40));
    }

    #[test]
    fn derivative_matches_euler_cube() {
        let q = f(0.1);
        let e = euler_numeric(&q);
        let expected = (Float::with_val(P, q.ln_ref()) / 8u32).exp() * 2u32 * e.clone() * &e * &e;
        assert!(close(&theta1_prime_zero(&q), &expected, 1e-40));
    }

    #[test]
    fn complex_agrees_on_real_axis() {
        let q = f(0.2);
        let z = Complex::with_val(P, (0.4, 0.0));
        let c = theta1_complex(&z, &q);
        assert!(close(c.real(), &theta1_real(&f(0.4), &q), 1e-40));
        assert!(c.imag().clone().abs() < 1e-40);
    }

    #[test]
    fn quasi_periodicity() {
        // θ1(z + πτ) = −q^(−1/2) e^(−2iz) θ1(z)
        let q = f(0.1);
        let z = Complex::with_val(P, (0.3, 0.1));
        let shifted = theta1_complex(&(z.clone() + pi_tau(&q)), &q);
        let factor = Complex::with_val(P, z.clone() * Complex::with_val(P, (0, -2))).exp()
            * (Float::with_val(P, q.ln_ref()) * -0.5f64).exp();
        let expected = -(factor * theta1_complex(&z, &q));
        let diff = Complex::with_val(P, &shifted - &expected);
        assert!(Float::with_val(P, diff.abs_ref()) < 1e-35);
    }
}
