//! Complex polynomials and rational functions with prescribed poles.
//!
//! A [`RationalFunction`] is a numerator polynomial of degree at most `n`
//! divided by `w(z) = (z - a_1)...(z - a_n)`, where every pole `a_j` lies
//! strictly outside the closed unit disk. Repeated poles and zeros are
//! represented by repetition, never by exponent fields.

mod polynomial;
mod rational;
mod roots;

use num_complex::Complex64;
use thiserror::Error;

pub use polynomial::Polynomial;
pub use rational::RationalFunction;
pub use roots::{aberth_roots, RootOptions};

/// The scalar field everything is computed over.
pub type ComplexScalar = Complex64;

/// Evaluation closer than this to a pole is refused.
pub const POLE_PROXIMITY: f64 = 1e-12;

/// Width of the band around `|z| = k` inside which a zero counts as lying on `T_k`.
pub const ZERO_LOCATION_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RatFunError {
    #[error("non-finite value supplied: {0}")]
    NonFinite(ComplexScalar),
    #[error("pole set is empty")]
    EmptyPoleSet,
    #[error("pole {0} does not lie outside the closed unit disk")]
    PoleNotOutsideUnitDisk(ComplexScalar),
    #[error("the zero polynomial has no roots")]
    ZeroPolynomial,
    #[error("leading coefficient must be nonzero")]
    ZeroLeading,
    #[error("numerator degree {degree} exceeds pole count {poles}")]
    DegreeExceedsPoles { degree: usize, poles: usize },
    #[error("numerator zero {zero} coincides with pole {pole}")]
    Reducible {
        zero: ComplexScalar,
        pole: ComplexScalar,
    },
    #[error("evaluation point {0} is within {POLE_PROXIMITY:e} of a pole")]
    NearPole(ComplexScalar),
    #[error("root iteration did not converge within {sweeps} sweeps")]
    NonConvergence { sweeps: usize },
}

pub type Result<T> = std::result::Result<T, RatFunError>;

pub(crate) fn check_finite(z: ComplexScalar) -> Result<ComplexScalar> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(RatFunError::NonFinite(z))
    }
}

/// Prescribed poles `a_1..a_n`, each with `|a_j| > 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PoleSet {
    poles: Vec<ComplexScalar>,
}

impl PoleSet {
    pub fn new(poles: Vec<ComplexScalar>) -> Result<Self> {
        if poles.is_empty() {
            return Err(RatFunError::EmptyPoleSet);
        }
        for &a in &poles {
            check_finite(a)?;
            if a.norm() <= 1.0 {
                return Err(RatFunError::PoleNotOutsideUnitDisk(a));
            }
        }
        Ok(Self { poles })
    }

    /// `n` copies of the same pole.
    pub fn repeated(a: ComplexScalar, n: usize) -> Result<Self> {
        Self::new(vec![a; n])
    }

    pub fn as_slice(&self) -> &[ComplexScalar] {
        &self.poles
    }

    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    /// `w(z) = prod (z - a_j)`.
    pub fn denominator(&self, z: ComplexScalar) -> ComplexScalar {
        self.poles.iter().map(|&a| z - a).product()
    }

    /// `w'(z) / w(z) = sum 1/(z - a_j)`.
    pub fn denominator_log_derivative(&self, z: ComplexScalar) -> ComplexScalar {
        self.poles.iter().map(|&a| (z - a).inv()).sum()
    }

    pub fn check_distance(&self, z: ComplexScalar) -> Result<()> {
        if self.poles.iter().any(|&a| (z - a).norm() < POLE_PROXIMITY) {
            Err(RatFunError::NearPole(z))
        } else {
            Ok(())
        }
    }

    /// Smallest `| |a_j| - k |`, the distance from the pole set to the circle `T_k`.
    pub fn distance_to_circle(&self, k: f64) -> f64 {
        self.poles
            .iter()
            .map(|a| (a.norm() - k).abs())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Region hypothesis on the finite zeros of a rational function.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "mode", content = "k", rename_all = "kebab-case")]
pub enum ZeroLocation {
    /// Every zero satisfies `|b| >= k`.
    AllOutsideOrOn(f64),
    /// Every zero satisfies `|b| <= k`.
    AllInsideOrOn(f64),
    Unconstrained,
}

impl ZeroLocation {
    pub fn radius(&self) -> Option<f64> {
        match *self {
            ZeroLocation::AllOutsideOrOn(k) | ZeroLocation::AllInsideOrOn(k) => Some(k),
            ZeroLocation::Unconstrained => None,
        }
    }

    /// Region predicate on a single zero, with a `ZERO_LOCATION_TOL` band on `|b| - k`.
    pub fn admits(&self, b: ComplexScalar) -> bool {
        match *self {
            ZeroLocation::AllOutsideOrOn(k) => b.norm() - k >= -ZERO_LOCATION_TOL,
            ZeroLocation::AllInsideOrOn(k) => b.norm() - k <= ZERO_LOCATION_TOL,
            ZeroLocation::Unconstrained => true,
        }
    }
}
