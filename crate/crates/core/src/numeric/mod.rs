//! Multiprecision evaluation for the identities that leave the exact field.

use rug::Float;
use serde::{Deserialize, Serialize};

/// Working precision, given in decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Precision {
    pub digits: u32,
}

impl Precision {
    pub const DEFAULT: Precision = Precision { digits: 50 };

    pub fn digits(digits: u32) -> Self {
        Precision { digits }
    }

    /// Binary precision with a small guard margin.
    pub fn bits(&self) -> u32 {
        (self.digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 16
    }

    pub fn float<T>(&self, v: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.bits(), v)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::DEFAULT
    }
}

pub mod checks;
pub mod theta;

pub use checks::{
    a_table_check, cf_display_check, default_samples, es_lemma_check, ki_check, liu_check, random_samples, sine_product_check,
    theta1_derivative_check, theta1_sum_product_check, tm_check, ATable, EsLemma, EsReading, NumericOutcome,
    Sample, SampleOutcome,
};
pub use theta::{euler_numeric, theta1_complex, theta1_numeric, theta1_prime_zero, theta1_product, theta1_real};
