//! Identity registry and the verification driver.
//!
//! Every entry is either an exact comparison of two series up to a truncation
//! order, or a numeric check at sample points. [`verify`] runs one entry,
//! [`verify_all`] runs the catalog and returns reports in catalog order.

pub mod config;
mod registry;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::arith::{Coeff, KElem, Rat};
use crate::cfractions::CfName;
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::numeric::{self, ATable, EsLemma, EsReading, NumericOutcome, Precision, Sample};
use crate::series::QSeries;

pub use config::Config;
pub use registry::{registry, SeriesBuilder};

/// How an entry is checked.
#[derive(Debug, Clone)]
pub enum Check {
    /// Both sides as expressions. With `rational_lhs`, the left side must
    /// also have all its coefficients in Q.
    Exact { lhs: Expr, rhs: Expr, rational_lhs: bool },
    /// Both sides built directly over Q.
    Series(SeriesBuilder),
    Numeric(NumericKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumericKind {
    ProdSine,
    Tm,
    ATable(ATable),
    EsLemma(EsLemma, EsReading),
    Liu,
    Theta1SumProduct,
    Theta1Derivative,
    Ki,
    CfDisplay(CfName),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

/// Whether a failure counts against the suite. `Document` entries record
/// which reading of an ambiguous display holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expected {
    Pass,
    Document,
}

#[derive(Debug, Clone)]
pub struct IdentitySpec {
    pub id: String,
    pub description: String,
    pub check: Check,
    pub expected: Expected,
    /// Truncation order for exact entries; unused by numeric ones.
    pub default_order: Rat,
}

impl IdentitySpec {
    pub fn mode(&self) -> Mode {
        match self.check {
            Check::Exact { .. } | Check::Series(_) => Mode::Exact,
            Check::Numeric(_) => Mode::Numeric,
        }
    }

    /// Order used under `profile` unless overridden.
    pub fn profile_order(&self, profile: Profile) -> Rat {
        match profile {
            Profile::Full => self.default_order.clone(),
            Profile::Quick => Rat::from(rug::Integer::from(self.default_order.ceil() / 2u32)),
        }
    }
}

/// Coefficient ring for exact entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Ring {
    /// Q when no leaf needs Q(β), otherwise Q(β).
    #[default]
    Auto,
    Rational,
    Field,
}

impl FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Ring::Auto),
            "rational" => Ok(Ring::Rational),
            "field" => Ok(Ring::Field),
            _ => Err(Error::InvalidArgument(format!("unknown ring `{s}`; expected auto, rational or field"))),
        }
    }
}

/// Order profile for a full catalog run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Half the default orders, for a fast smoke run.
    Quick,
    #[default]
    Full,
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(Error::InvalidArgument(format!("unknown profile `{s}`; expected quick or full"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Overrides the entry's default order.
    pub order: Option<Rat>,
    pub ring: Ring,
    pub precision: Precision,
    /// Overrides the sample points of the two-variable lemma and Liu's identity.
    pub samples: Option<Vec<Sample>>,
    /// When false, `wall_ms` is reported as 0 so output is reproducible.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order: None,
            ring: Ring::Auto,
            precision: Precision::digits(40),
            samples: None,
            timing: true,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub profile: Profile,
    /// Worker threads; `None` lets rayon decide.
    pub jobs: Option<usize>,
    /// Per-id order overrides, applied after the profile.
    pub orders: BTreeMap<String, Rat>,
    pub base: VerifyOptions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

/// Smallest exponent where the two sides differ.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub exponent: Rat,
    /// lhs − rhs at that exponent.
    pub delta: KElem,
    pub delta_numeric: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Extent {
    Order(Rat),
    Samples(Vec<String>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub id: String,
    pub status: Status,
    pub mode: Mode,
    pub extent: Extent,
    pub first_mismatch: Option<Mismatch>,
    pub wall_ms: u64,
    pub expected: Expected,
    /// Error text, or the worst sample of a numeric failure. Not part of the
    /// JSON schema.
    pub message: Option<String>,
}

impl Report {
    /// True when this report makes the suite fail.
    pub fn is_blocking(&self) -> bool {
        self.expected == Expected::Pass && self.status != Status::Pass
    }
}

struct FirstMismatch<'a>(&'a Mismatch);

impl Serialize for FirstMismatch<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m = self.0;
        let coords: Vec<String> = m.delta.coords().iter().map(Rat::to_fraction_string).collect();
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("exponent", &m.exponent.to_fraction_string())?;
        map.serialize_entry("delta_exact", &coords)?;
        map.serialize_entry("delta_numeric", &m.delta_numeric)?;
        map.end()
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(6))?;
        map.serialize_entry("id", &self.id)?;
        map.serialize_entry("status", &self.status)?;
        map.serialize_entry("mode", &self.mode)?;
        match &self.extent {
            Extent::Order(o) => map.serialize_entry("order", &o.to_fraction_string())?,
            Extent::Samples(v) => map.serialize_entry("samples", v)?,
        }
        map.serialize_entry("first_mismatch", &self.first_mismatch.as_ref().map(FirstMismatch))?;
        map.serialize_entry("wall_ms", &self.wall_ms)?;
        map.end()
    }
}

/// Reports as a pretty-printed JSON array.
pub fn to_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn lookup(id: &str) -> Result<IdentitySpec> {
    registry()
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Run one registered entry.
pub fn verify(id: &str, opts: &VerifyOptions) -> Result<Report> {
    Ok(verify_spec(&lookup(id)?, opts))
}

/// Run an entry; evaluation errors become `error` reports.
pub fn verify_spec(spec: &IdentitySpec, opts: &VerifyOptions) -> Report {
    let start = Instant::now();
    let order = opts.order.clone().unwrap_or_else(|| spec.default_order.clone());
    let (extent, outcome) = match &spec.check {
        Check::Exact { lhs, rhs, rational_lhs } => (
            Extent::Order(order.clone()),
            compare_exprs(lhs, rhs, *rational_lhs, &order, opts.ring),
        ),
        Check::Series(build) => (
            Extent::Order(order.clone()),
            build(&order).and_then(|(l, r)| compare(&l, &r, &order)),
        ),
        Check::Numeric(kind) => {
            let samples = numeric_points(*kind, opts);
            let outcome = run_numeric(*kind, opts).map(numeric_verdict);
            (Extent::Samples(samples), outcome)
        }
    };
    let wall_ms = if opts.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    let (status, first_mismatch, message) = match outcome {
        Ok(Verdict::Pass) => (Status::Pass, None, None),
        Ok(Verdict::Fail(m, msg)) => (Status::Fail, m, msg),
        Err(e) => (Status::Error, None, Some(e.to_string())),
    };
    Report {
        id: spec.id.clone(),
        status,
        mode: spec.mode(),
        extent,
        first_mismatch,
        wall_ms,
        expected: spec.expected,
        message,
    }
}

/// Run the whole catalog. Reports come back in catalog order regardless of
/// scheduling.
pub fn verify_all(opts: &SuiteOptions) -> Result<Vec<Report>> {
    let specs = registry();
    for id in opts.orders.keys() {
        if !specs.iter().any(|s| &s.id == id) {
            return Err(Error::UnknownIdentity(id.clone()));
        }
    }
    let run = || {
        specs
            .par_iter()
            .map(|spec| {
                let mut o = opts.base.clone();
                o.order = Some(
                    opts.orders
                        .get(&spec.id)
                        .cloned()
                        .unwrap_or_else(|| spec.profile_order(opts.profile)),
                );
                verify_spec(spec, &o)
            })
            .collect::<Vec<_>>()
    };
    match opts.jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Config(e.to_string()))?;
            Ok(pool.install(run))
        }
        None => Ok(run()),
    }
}

/// Exit-code contract: true iff every expected-pass entry passed.
pub fn suite_passed(reports: &[Report]) -> bool {
    !reports.iter().any(Report::is_blocking)
}

enum Verdict {
    Pass,
    Fail(Option<Mismatch>, Option<String>),
}

fn mismatch<C: Coeff>(exponent: Rat, delta: &C) -> Mismatch {
    let delta = delta.to_kelem();
    Mismatch {
        exponent,
        delta_numeric: delta.embed(20),
        delta,
    }
}

fn compare<C: Coeff>(lhs: &QSeries<C>, rhs: &QSeries<C>, order: &Rat) -> Result<Verdict> {
    let cmp = lhs.equal_to_order(rhs, order)?;
    Ok(match cmp.first_mismatch {
        None => Verdict::Pass,
        Some((e, d)) => Verdict::Fail(Some(mismatch(e, &d)), None),
    })
}

fn compare_exprs(lhs: &Expr, rhs: &Expr, rational_lhs: bool, order: &Rat, ring: Ring) -> Result<Verdict> {
    let needs_field = lhs.requires_field() || rhs.requires_field();
    let use_field = match ring {
        Ring::Auto => needs_field,
        Ring::Field => true,
        Ring::Rational if needs_field => return Err(Error::RingMismatch),
        Ring::Rational => false,
    };
    if !use_field {
        let (l, r) = (lhs.eval::<Rat>(order)?, rhs.eval::<Rat>(order)?);
        return compare(&l, &r, order);
    }
    let (l, r) = (lhs.eval::<KElem>(order)?, rhs.eval::<KElem>(order)?);
    if rational_lhs {
        if let Some((e, c)) = l.terms().find(|(_, c)| c.as_rational().is_none()) {
            let irrational = c - &KElem::from_rat(c.coords()[0].clone());
            return Ok(Verdict::Fail(
                Some(mismatch(e, &irrational)),
                Some("left side has a coefficient outside Q".into()),
            ));
        }
    }
    compare(&l, &r, order)
}

fn numeric_verdict(o: NumericOutcome) -> Verdict {
    if o.passed() {
        return Verdict::Pass;
    }
    let msg = match o.first_failure() {
        Some(s) => format!(
            "{}: |lhs - rhs| = {} exceeds {}",
            s.point,
            s.error.to_string_radix(10, Some(6)),
            o.tolerance.to_string_radix(10, Some(3))
        ),
        None => "no samples evaluated".into(),
    };
    Verdict::Fail(None, Some(msg))
}

const CF_NOMES: [f64; 3] = [0.05, 0.1, 0.2];
const KI_NOMES: [f64; 2] = [0.1, 0.3];
const DERIVATIVE_NOMES: [f64; 3] = [0.05, 0.1, 0.3];
const TM_NOME: f64 = 0.1;
const A_TABLE_RANGE: std::ops::Range<i64> = 0..120;
const SUM_PRODUCT_SEED: u64 = 20;
const LIU_SEED: u64 = 5;

fn lemma_samples(opts: &VerifyOptions) -> Vec<Sample> {
    opts.samples.clone().unwrap_or_else(numeric::default_samples)
}

fn liu_samples(opts: &VerifyOptions) -> Vec<Sample> {
    opts.samples.clone().unwrap_or_else(|| numeric::random_samples(5, LIU_SEED))
}

fn numeric_points(kind: NumericKind, opts: &VerifyOptions) -> Vec<String> {
    let nomes = |qs: &[f64]| qs.iter().map(|q| format!("q={q}")).collect();
    match kind {
        NumericKind::ProdSine => vec!["exact angles".into()],
        NumericKind::Tm => nomes(&[TM_NOME]),
        NumericKind::ATable(_) => vec![format!("n={}..{}", A_TABLE_RANGE.start, A_TABLE_RANGE.end)],
        NumericKind::EsLemma(..) => lemma_samples(opts).iter().map(Sample::label).collect(),
        NumericKind::Liu => liu_samples(opts).iter().map(Sample::label).collect(),
        NumericKind::Theta1SumProduct => numeric::random_samples(20, SUM_PRODUCT_SEED)
            .iter()
            .map(Sample::label)
            .collect(),
        NumericKind::Theta1Derivative => nomes(&DERIVATIVE_NOMES),
        NumericKind::Ki => nomes(&KI_NOMES),
        NumericKind::CfDisplay(_) => nomes(&CF_NOMES),
    }
}

/// Evaluate a numeric check at its sample points.
pub fn run_numeric(kind: NumericKind, opts: &VerifyOptions) -> Result<NumericOutcome> {
    let p = opts.precision;
    Ok(match kind {
        NumericKind::ProdSine => numeric::sine_product_check(p),
        NumericKind::Tm => numeric::tm_check(TM_NOME, p),
        NumericKind::ATable(t) => numeric::a_table_check(t, A_TABLE_RANGE, p),
        NumericKind::EsLemma(which, reading) => numeric::es_lemma_check(which, reading, &lemma_samples(opts), p)?,
        NumericKind::Liu => numeric::liu_check(&liu_samples(opts), p),
        NumericKind::Theta1SumProduct => {
            numeric::theta1_sum_product_check(&numeric::random_samples(20, SUM_PRODUCT_SEED), p)
        }
        NumericKind::Theta1Derivative => numeric::theta1_derivative_check(&DERIVATIVE_NOMES, p),
        NumericKind::Ki => numeric::ki_check(&KI_NOMES, p),
        NumericKind::CfDisplay(name) => numeric::cf_display_check(name, &CF_NOMES, 40, 60, p)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions {
            timing: false,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<String> = registry().into_iter().map(|s| s.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(verify("nope", &quick()), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn lemma_instance_passes() {
        let r = verify("lemma2-f1-a=q-b=q2", &quick()).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.extent, Extent::Order(Rat::from(25)));
    }

    #[test]
    fn perturbation_reports_smallest_exponent() {
        let spec = IdentitySpec {
            id: "perturbed".into(),
            description: String::new(),
            check: Check::Exact {
                lhs: crate::expr::parse("f(-1,-2)").unwrap(),
                rhs: crate::expr::parse("poch(1, 1) + 3*q^7 - q^9").unwrap(),
                rational_lhs: false,
            },
            expected: Expected::Pass,
            default_order: Rat::from(20),
        };
        let r = verify_spec(&spec, &quick());
        assert_eq!(r.status, Status::Fail);
        let m = r.first_mismatch.unwrap();
        assert_eq!(m.exponent, Rat::from(7));
        assert_eq!(m.delta, KElem::from_rat(Rat::from(-3)));
    }

    #[test]
    fn forced_rational_ring_rejects_field_entries() {
        let opts = VerifyOptions {
            ring: Ring::Rational,
            order: Some(Rat::from(4)),
            ..quick()
        };
        let r = verify("eq-prodK", &opts).unwrap();
        assert_eq!(r.status, Status::Error);
    }

    #[test]
    fn json_field_order() {
        let r = verify("eq-pentagonal", &VerifyOptions { order: Some(Rat::from(10)), ..quick() }).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(
            text,
            r#"{"id":"eq-pentagonal","status":"pass","mode":"exact","order":"10/1","first_mismatch":null,"wall_ms":0}"#
        );
    }

    #[test]
    fn quick_profile_halves_orders() {
        let s = lookup("eq-Es3").unwrap();
        assert_eq!(s.profile_order(Profile::Quick), Rat::from(30));
        assert_eq!(s.profile_order(Profile::Full), Rat::from(60));
    }
}
