//! Run configuration: seed, tolerances and size caps.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Environment variable that overrides the configured seed.
pub const SEED_ENV: &str = "KACFORGE_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Floating equality of matrix entries and algebra coefficients.
    pub equality: f64,
    /// Distance of a computed dimension or multiplicity from the nearest integer.
    pub integer_residual: f64,
    /// Hopf-axiom residuals.
    pub axiom: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            equality: 1e-8,
            integer_residual: 1e-6,
            axiom: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    pub closure: usize,
    pub character_table: usize,
    pub isomorphism: usize,
    pub exhaustive_associativity: usize,
    pub sampled_triples: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            closure: 20_000,
            character_table: 2000,
            isomorphism: 512,
            exhaustive_associativity: 64,
            sampled_triples: 100_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    pub tolerances: Tolerances,
    pub caps: Caps,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            tolerances: Tolerances::default(),
            caps: Caps::default(),
            format: OutputFormat::Text,
        }
    }
}

impl RunConfig {
    /// Default configuration with the seed taken from `KACFORGE_SEED` when set.
    pub fn from_env() -> Self {
        Self::default().with_env_seed()
    }

    /// Replaces the seed by `KACFORGE_SEED` when it is set and parses.
    pub fn with_env_seed(mut self) -> Self {
        if let Some(seed) = std::env::var(SEED_ENV).ok().and_then(|s| parse_seed(&s)) {
            self.seed = seed;
        }
        self
    }

    /// Tolerances must be positive and finite, caps positive.
    pub fn validate(&self) -> Result<()> {
        let t = &self.tolerances;
        for (name, v) in [
            ("equality", t.equality),
            ("integer_residual", t.integer_residual),
            ("axiom", t.axiom),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::ValidationError {
                    invariant: format!("tolerance `{name}` is positive"),
                });
            }
        }
        let c = &self.caps;
        for (name, v) in [
            ("closure", c.closure),
            ("character_table", c.character_table),
            ("isomorphism", c.isomorphism),
            ("exhaustive_associativity", c.exhaustive_associativity),
            ("sampled_triples", c.sampled_triples),
        ] {
            if v == 0 {
                return Err(Error::ValidationError {
                    invariant: format!("cap `{name}` is positive"),
                });
            }
        }
        Ok(())
    }
}

/// Parses a decimal or `0x`-prefixed hexadecimal seed.
pub fn parse_seed(s: &str) -> Option<u64> {
    let s = s.trim();
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16).ok(),
        None => s.parse().ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_parse_in_both_radices() {
        assert_eq!(parse_seed("0xC0FFEE"), Some(DEFAULT_SEED));
        assert_eq!(parse_seed("12648430"), Some(DEFAULT_SEED));
        assert_eq!(parse_seed("zz"), None);
    }

    #[test]
    fn validation_rejects_nonpositive_settings() {
        assert!(RunConfig::default().validate().is_ok());
        let mut c = RunConfig::default();
        c.tolerances.axiom = 0.0;
        assert!(c.validate().is_err());
        let mut c = RunConfig::default();
        c.caps.closure = 0;
        assert!(c.validate().is_err());
    }
}
