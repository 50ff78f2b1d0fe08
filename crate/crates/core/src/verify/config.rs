//! Optional TOML configuration for suite runs.
//!
//! ```toml
//! profile = "full"        # or "quick"
//! digits = 40             # numeric working precision
//! jobs = 4                # worker threads for verify-all
//!
//! # sample points for the two-variable lemma and Liu's identity
//! samples = [{ q = 0.1, z = 0.7 }, { q = 0.05, z = 1.1 }]
//!
//! [orders]                # per-identity truncation orders
//! "thm3-O1-O9" = "12"
//! "eq-Es3" = "80"
//! ```
//!
//! Every key is optional; unknown keys are rejected.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use super::{registry, Profile, SuiteOptions, VerifyOptions};
use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::numeric::{Precision, Sample};

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub profile: Option<Profile>,
    pub digits: Option<u32>,
    pub jobs: Option<usize>,
    pub samples: Option<Vec<Sample>>,
    #[serde(default)]
    pub orders: BTreeMap<String, String>,
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Config> {
        let cfg: Config = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Config::from_toml(&text)
    }

    fn validate(&self) -> Result<()> {
        if let Some(d) = self.digits {
            if d < 30 {
                return Err(Error::Config(format!("digits must be at least 30, got {d}")));
            }
        }
        if self.jobs == Some(0) {
            return Err(Error::Config("jobs must be positive".into()));
        }
        for s in self.samples.iter().flatten() {
            Sample::new(s.q, s.z)?;
        }
        self.order_overrides().map(|_| ())
    }

    /// Parsed per-id orders; ids must be registered.
    pub fn order_overrides(&self) -> Result<BTreeMap<String, Rat>> {
        let ids: Vec<String> = registry().into_iter().map(|s| s.id).collect();
        self.orders
            .iter()
            .map(|(id, text)| {
                if !ids.contains(id) {
                    return Err(Error::UnknownIdentity(id.clone()));
                }
                let order: Rat = text
                    .parse()
                    .map_err(|_| Error::Config(format!("order for {id} is not a rational: `{text}`")))?;
                Ok((id.clone(), order))
            })
            .collect()
    }

    /// Options for a single entry, before command-line overrides.
    pub fn verify_options(&self) -> VerifyOptions {
        let mut o = VerifyOptions::default();
        if let Some(d) = self.digits {
            o.precision = Precision::digits(d);
        }
        o.samples = self.samples.clone();
        o
    }

    pub fn suite_options(&self) -> Result<SuiteOptions> {
        Ok(SuiteOptions {
            profile: self.profile.unwrap_or_default(),
            jobs: self.jobs,
            orders: self.order_overrides()?,
            base: self.verify_options(),
        })
    }
}
