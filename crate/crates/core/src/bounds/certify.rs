use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{check_hypothesis, rhs_from_parts, BoundContext, BoundsError, Result, Side, TheoremId};
use crate::blaschke::{check_on_unit_circle, BlaschkeProduct};
use crate::circlescan::CircleGrid;
use crate::ratfun::{RatFunError, RationalFunction};

/// Relative violation tolerance; a point violates iff `margin < -MARGIN_TOL * scale`.
pub const MARGIN_TOL: f64 = 1e-9;

/// Outcome of sweeping one inequality over a unit-circle grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub theorem: TheoremId,
    pub grid_count: usize,
    pub context: BoundContext,
    pub min_margin: f64,
    pub worst_theta: f64,
    pub violations: usize,
    pub skipped_points: usize,
    pub degenerate: Option<String>,
}

impl BoundVerdict {
    pub fn passed(&self) -> bool {
        self.degenerate.is_none() && self.violations == 0
    }
}

/// One grid point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointBound {
    pub deriv_modulus: f64,
    pub rhs: f64,
    pub margin: f64,
}

/// `|r'(z)|`, `RHS(z)` and the signed margin at `z` on the unit circle.
///
/// The hypothesis is not re-checked; use [`super::bound_rhs`] for a checked
/// single evaluation.
pub fn margin_at(
    id: TheoremId,
    ctx: &BoundContext,
    r: &RationalFunction,
    z: Complex64,
) -> Result<PointBound> {
    check_on_unit_circle(z)?;
    let bprime = BlaschkeProduct::of(r).deriv_modulus_on_unit_circle(z)?;
    let (value, deriv) = r.eval_with_derivative(z)?;
    let deriv_modulus = deriv.norm();
    let rhs = rhs_from_parts(id, ctx, bprime, value.norm())?;
    let margin = match id.hypothesis().side {
        Side::Upper => rhs - deriv_modulus,
        Side::Lower => deriv_modulus - rhs,
    };
    Ok(PointBound {
        deriv_modulus,
        rhs,
        margin,
    })
}

/// Sweeps `grid` (a unit-circle grid) and reports the smallest margin.
///
/// `||r||` and `m` are computed on grids of the same density. A failed
/// hypothesis is an error; a vanishing `||r|| - m` yields a verdict with
/// `degenerate` set and no sweep.
pub fn certify(
    id: TheoremId,
    r: &RationalFunction,
    k: f64,
    grid: &CircleGrid,
) -> Result<BoundVerdict> {
    let k = check_hypothesis(id, r, k)?;
    let ctx = BoundContext::compute(id, r, k, grid.count())?;
    let mut verdict = BoundVerdict {
        theorem: id,
        grid_count: grid.count(),
        context: ctx,
        min_margin: f64::INFINITY,
        worst_theta: 0.0,
        violations: 0,
        skipped_points: 0,
        degenerate: None,
    };
    let unit = grid.with_radius(1.0)?;
    let tol = MARGIN_TOL * ctx.scale();
    for (theta, z) in unit.points() {
        match margin_at(id, &ctx, r, z) {
            Ok(pb) => {
                if pb.margin < verdict.min_margin {
                    verdict.min_margin = pb.margin;
                    verdict.worst_theta = theta;
                }
                if pb.margin < -tol {
                    verdict.violations += 1;
                }
            }
            Err(BoundsError::RatFun(RatFunError::NearPole(_)))
            | Err(BoundsError::Blaschke(crate::blaschke::BlaschkeError::RatFun(
                RatFunError::NearPole(_),
            ))) => verdict.skipped_points += 1,
            Err(BoundsError::Degenerate { reason, .. }) => {
                verdict.degenerate = Some(reason);
                verdict.min_margin = f64::NAN;
                return Ok(verdict);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(verdict)
}

/// `| RHS(z) - |r'(z)| |` at `z` on the unit circle; zero means equality.
pub fn sharpness_gap(
    id: TheoremId,
    r: &RationalFunction,
    k: f64,
    z: Complex64,
    grid_count: usize,
) -> Result<f64> {
    let k = check_hypothesis(id, r, k)?;
    let ctx = BoundContext::compute(id, r, k, grid_count)?;
    let pb = margin_at(id, &ctx, r, z)?;
    Ok((pb.rhs - pb.deriv_modulus).abs())
}
