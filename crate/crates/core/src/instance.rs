//! On-disk form of a rational function: poles, zeros and leading coefficient.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ratfun::{PoleSet, RatFunError, RationalFunction};

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed instance: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid instance: {0}")]
    Invalid(#[from] RatFunError),
}

/// Root-form instance. Numerator coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub poles: Vec<[f64; 2]>,
    pub zeros: Vec<[f64; 2]>,
    pub leading: [f64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn complex(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

impl InstanceFile {
    pub fn from_function(r: &RationalFunction, k: Option<f64>) -> Self {
        Self {
            poles: r.poles().as_slice().iter().copied().map(pair).collect(),
            zeros: r.zeros().iter().copied().map(pair).collect(),
            leading: pair(r.leading()),
            k,
        }
    }

    pub fn to_function(&self) -> Result<RationalFunction, RatFunError> {
        let poles = PoleSet::new(self.poles.iter().copied().map(complex).collect())?;
        RationalFunction::from_roots(
            complex(self.leading),
            self.zeros.iter().copied().map(complex).collect(),
            poles,
        )
    }

    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, InstanceError> {
        let text = std::fs::read_to_string(path).map_err(|source| InstanceError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }

    pub fn save(&self, path: &Path) -> Result<(), InstanceError> {
        std::fs::write(path, self.to_json() + "\n").map_err(|source| InstanceError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}
