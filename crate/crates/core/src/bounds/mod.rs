//! Closed-form right-hand sides of the Bernstein-type inequalities, grid
//! certification of each inequality, and the equality families.
//!
//! Every inequality has the shape `|r'(z)| <= RHS(z)` (upper) or
//! `|r'(z)| >= RHS(z)` (lower) for `z` on the unit circle. The signed slack
//! is the *margin*: `RHS - |r'|` for upper bounds, `|r'| - RHS` for lower
//! bounds, so a negative margin is a violation in both cases.

mod certify;
mod extremal;
mod theorem;

use thiserror::Error;

pub use certify::{certify, margin_at, sharpness_gap, BoundVerdict, PointBound, MARGIN_TOL};
pub use extremal::{make_extremal, Extremal, ExtremalParams};
pub use theorem::{Hypothesis, MinCircle, RadiusRule, Side, TheoremId};

use crate::blaschke::{check_on_unit_circle, BlaschkeError, BlaschkeProduct};
use crate::circlescan::{self, CircleGrid, ScanError};
use crate::ratfun::{RatFunError, RationalFunction, ZeroLocation, ZERO_LOCATION_TOL};
use num_complex::Complex64;

/// `||r|| - m` at or below this makes the main upper bound undefined.
pub const DEGENERATE_GAP: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("hypothesis of {theorem} violated: {reason}")]
    HypothesisViolated { theorem: TheoremId, reason: String },
    #[error("{theorem} is degenerate here: {reason}")]
    Degenerate { theorem: TheoremId, reason: String },
    #[error("context does not match the function: {0}")]
    ContextMismatch(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error(transparent)]
    Scan(#[from] ScanError),
    #[error(transparent)]
    Blaschke(#[from] BlaschkeError),
    #[error(transparent)]
    RatFun(#[from] RatFunError),
}

pub type Result<T> = std::result::Result<T, BoundsError>;

/// The scalar data an inequality needs besides the pointwise values.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct BoundContext {
    /// `||r||`, the sup of `|r|` on the unit circle.
    pub norm: f64,
    /// The minimum modulus the theorem uses; 0 when it uses none.
    pub m: f64,
    /// Radius of the circle `m` was taken on, if any.
    pub m_radius: Option<f64>,
    pub t: usize,
    pub n: usize,
    pub k: f64,
}

impl BoundContext {
    /// Computes `||r||` and the theorem's `m` on grids of `grid_count` points.
    ///
    /// When a zero of `r` lies on the circle that defines `m`, `m` is 0
    /// without scanning.
    pub fn compute(id: TheoremId, r: &RationalFunction, k: f64, grid_count: usize) -> Result<Self> {
        let hyp = id.hypothesis();
        let k = hyp.radius.effective(k);
        let unit = CircleGrid::unit(grid_count)?;
        let norm = circlescan::sup_modulus_on_circle(r, &unit)?.value;
        let (m, m_radius) = match hyp.min_circle {
            MinCircle::None => (0.0, None),
            MinCircle::Unit => (min_on(r, 1.0, grid_count)?, Some(1.0)),
            MinCircle::ZeroRegion => (min_on(r, k, grid_count)?, Some(k)),
        };
        Ok(Self {
            norm,
            m,
            m_radius,
            t: r.t(),
            n: r.n(),
            k,
        })
    }

    /// `max(1, ||r||)`, the scale the margin tolerance is relative to.
    pub fn scale(&self) -> f64 {
        self.norm.max(1.0)
    }
}

fn min_on(r: &RationalFunction, k: f64, grid_count: usize) -> Result<f64> {
    if r.zero_distance_to_circle(k) <= ZERO_LOCATION_TOL {
        return Ok(0.0);
    }
    let grid = CircleGrid::new(k, grid_count)?;
    Ok(circlescan::min_modulus_on_circle(r, &grid)?.value)
}

/// Checks `r` against the theorem's hypothesis at radius `k`; returns the
/// radius the theorem actually uses (1 for the fixed-radius theorems).
pub fn check_hypothesis(id: TheoremId, r: &RationalFunction, k: f64) -> Result<f64> {
    let hyp = id.hypothesis();
    let violated = |reason: String| BoundsError::HypothesisViolated {
        theorem: id,
        reason,
    };
    let k = hyp.radius.effective(k);
    if !hyp.radius.admits(k) {
        return Err(violated(format!(
            "radius k = {k} is outside {}",
            hyp.radius
        )));
    }
    let region = hyp.zero_region(k);
    if let Some(b) = r.zeros().iter().find(|&&b| !region.admits(b)) {
        return Err(violated(format!(
            "zero {b} (|b| = {}) is not in {}",
            b.norm(),
            describe_region(&region)
        )));
    }
    if hyp.exactly_n_zeros && r.t() != r.n() {
        return Err(violated(format!(
            "requires exactly n = {} zeros, found t = {}",
            r.n(),
            r.t()
        )));
    }
    if hyp.zero_on_circle && r.zero_distance_to_circle(k) > ZERO_LOCATION_TOL {
        return Err(violated(format!("requires a zero on |z| = {k}")));
    }
    // exactly-n-poles holds for every RationalFunction: shared zero/pole
    // pairs are rejected at construction.
    Ok(k)
}

fn describe_region(loc: &ZeroLocation) -> String {
    match *loc {
        ZeroLocation::AllOutsideOrOn(k) => format!("|z| >= {k}"),
        ZeroLocation::AllInsideOrOn(k) => format!("|z| <= {k}"),
        ZeroLocation::Unconstrained => "the plane".to_string(),
    }
}

/// Right-hand side of the theorem's inequality from its scalar ingredients:
/// `bprime = |B'(z)|` and `rmod = |r(z)|`.
pub fn rhs_from_parts(id: TheoremId, ctx: &BoundContext, bprime: f64, rmod: f64) -> Result<f64> {
    let n = ctx.n as f64;
    let t = ctx.t as f64;
    let k = ctx.k;
    let norm = ctx.norm;
    let m = ctx.m;
    let value = match id {
        TheoremId::LiUpper => 0.5 * bprime * norm,
        TheoremId::LiLower => (0.5 * bprime - 0.5 * (n - t)) * rmod,
        TheoremId::AzizShahUpper97 => 0.5 * bprime * (norm - m),
        TheoremId::AzizShahLower97 => 0.5 * bprime * (rmod + m),
        TheoremId::AzizZarger99 => {
            let q = rmod / norm;
            0.5 * (bprime - n * (k - 1.0) / (k + 1.0) * q * q) * norm
        }
        TheoremId::AzizShah04 => 0.5 * (bprime + (2.0 * t - n * (1.0 + k)) / (1.0 + k)) * rmod,
        TheoremId::AzizShah04Cor => 0.5 * (bprime + n * (1.0 - k) / (1.0 + k)) * rmod,
        TheoremId::MainUpper => {
            let gap = norm - m;
            if gap <= DEGENERATE_GAP {
                return Err(BoundsError::Degenerate {
                    theorem: id,
                    reason: format!("||r|| - m = {gap:e} is not positive"),
                });
            }
            let q = (rmod - m) / gap;
            0.5 * (bprime - (n * (1.0 + k) - 2.0 * t) / (1.0 + k) * q * q) * gap
        }
        TheoremId::MainUpperCor => {
            let q = rmod / norm;
            0.5 * (bprime - (n * (1.0 + k) - 2.0 * t) / (1.0 + k) * q * q) * norm
        }
        TheoremId::MainLower => 0.5 * (bprime + (2.0 * t - n * (1.0 + k)) / (1.0 + k)) * (rmod + m),
        TheoremId::MainLowerCor => 0.5 * (bprime + n * (1.0 - k) / (1.0 + k)) * (rmod + m),
    };
    Ok(value)
}

/// `|B'(z)|/2 + (2t - n(1+k)) / (2(1+k))`, the bound on `Re(z r'(z) / r(z))`
/// over the unit circle. It is an upper bound when every zero lies in
/// `|z| >= k >= 1` and a lower bound when every zero lies in `|z| <= k <= 1`.
pub fn log_derivative_bound(bprime: f64, n: usize, t: usize, k: f64) -> f64 {
    0.5 * bprime + (2.0 * t as f64 - n as f64 * (1.0 + k)) / (2.0 * (1.0 + k))
}

/// `RHS(z)` of the theorem for `r` at `z` on the unit circle.
pub fn bound_rhs(
    id: TheoremId,
    ctx: &BoundContext,
    r: &RationalFunction,
    z: Complex64,
) -> Result<f64> {
    check_on_unit_circle(z)?;
    if ctx.t != r.t() || ctx.n != r.n() {
        return Err(BoundsError::ContextMismatch(format!(
            "context has (t, n) = ({}, {}), function has ({}, {})",
            ctx.t,
            ctx.n,
            r.t(),
            r.n()
        )));
    }
    check_hypothesis(id, r, ctx.k)?;
    let bprime = BlaschkeProduct::of(r).deriv_modulus_on_unit_circle(z)?;
    let rmod = r.eval(z)?.norm();
    rhs_from_parts(id, ctx, bprime, rmod)
}
