//! Scans over circles `|z| = k`: extrema of `|r|` (the Chebyshev norm and
//! the minimum modulus), argument-principle zero counting, and the real part
//! of the logarithmic derivative on the unit circle.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use thiserror::Error;

use crate::blaschke::{check_on_unit_circle, BlaschkeError};
use crate::ratfun::{Polynomial, RatFunError, RationalFunction};

/// Circles with a pole closer than this are refused.
pub const POLE_CIRCLE_MARGIN: f64 = 1e-9;
/// Minimum-modulus values below this are reported as an exact zero.
pub const MIN_ZERO_FLOOR: f64 = 1e-13;
/// `|r(z)|` at or below this excludes `z` from log-derivative sweeps.
pub const LOG_DERIVATIVE_FLOOR: f64 = 1e-10;
/// Golden-section refinement stops once the bracket is narrower than this.
pub const REFINE_WIDTH: f64 = 1e-12;

const WINDING_START: usize = 256;
const WINDING_MAX: usize = 1 << 22;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScanError {
    #[error("grid must have a power-of-two count >= 64 and a positive radius (got count {count}, k {k})")]
    InvalidGrid { count: usize, k: f64 },
    #[error("a pole lies within {POLE_CIRCLE_MARGIN:e} of the circle |z| = {0}")]
    PoleOnCircle(f64),
    #[error(
        "phase increments did not resolve on |z| = {0}; a zero is on or too close to the contour"
    )]
    ZeroOnContour(f64),
    #[error("|r(z)| <= {LOG_DERIVATIVE_FLOOR:e} at {0}")]
    NearZeroOfR(Complex64),
    #[error(transparent)]
    Blaschke(#[from] BlaschkeError),
    #[error(transparent)]
    RatFun(#[from] RatFunError),
}

pub type Result<T> = std::result::Result<T, ScanError>;

/// Equispaced points `k * exp(2 pi i j / count)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleGrid {
    k: f64,
    count: usize,
}

impl CircleGrid {
    pub fn new(k: f64, count: usize) -> Result<Self> {
        if !(k.is_finite() && k > 0.0) || count < 64 || !count.is_power_of_two() {
            return Err(ScanError::InvalidGrid { count, k });
        }
        Ok(Self { k, count })
    }

    pub fn unit(count: usize) -> Result<Self> {
        Self::new(1.0, count)
    }

    pub fn with_radius(&self, k: f64) -> Result<Self> {
        Self::new(k, self.count)
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn theta(&self, j: usize) -> f64 {
        TAU * j as f64 / self.count as f64
    }

    pub fn point(&self, j: usize) -> Complex64 {
        Complex64::from_polar(self.k, self.theta(j))
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, Complex64)> + '_ {
        (0..self.count).map(|j| (self.theta(j), self.point(j)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleScanResult {
    /// The extremum of `|f|`.
    pub value: f64,
    /// Where it is attained, in `[0, 2 pi)`.
    pub arg_at: f64,
    pub grid_count: usize,
    pub refined: bool,
    /// Half the largest jump between neighbouring grid values: a coarse
    /// estimate of how far the true extremum can sit from the best grid value.
    pub certified_bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Orientation {
    Max,
    Min,
}

impl Orientation {
    fn better(self, a: f64, b: f64) -> bool {
        match self {
            Orientation::Max => a > b,
            Orientation::Min => a < b,
        }
    }
}

/// `||r||` on `|z| = grid.k()`; for the Chebyshev norm pass a unit grid.
pub fn sup_modulus_on_circle(r: &RationalFunction, grid: &CircleGrid) -> Result<CircleScanResult> {
    check_pole_clearance(r, grid.k())?;
    scan(grid, Orientation::Max, |z| r.eval(z).map(|v| v.norm()))
}

/// `min |r|` on `|z| = grid.k()`; exactly 0 when any sampled value drops below
/// [`MIN_ZERO_FLOOR`].
pub fn min_modulus_on_circle(r: &RationalFunction, grid: &CircleGrid) -> Result<CircleScanResult> {
    check_pole_clearance(r, grid.k())?;
    let mut res = scan(grid, Orientation::Min, |z| r.eval(z).map(|v| v.norm()))?;
    if res.value < MIN_ZERO_FLOOR {
        res.value = 0.0;
        res.refined = false;
    }
    Ok(res)
}

fn check_pole_clearance(r: &RationalFunction, k: f64) -> Result<()> {
    if r.poles().distance_to_circle(k) <= POLE_CIRCLE_MARGIN {
        Err(ScanError::PoleOnCircle(k))
    } else {
        Ok(())
    }
}

fn scan<F>(grid: &CircleGrid, orient: Orientation, f: F) -> Result<CircleScanResult>
where
    F: Fn(Complex64) -> std::result::Result<f64, RatFunError>,
{
    let values = grid
        .points()
        .map(|(_, z)| f(z))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let count = values.len();
    let mut best = 0;
    for (j, &v) in values.iter().enumerate() {
        if orient.better(v, values[best]) {
            best = j;
        }
    }
    let max_jump = (0..count)
        .map(|j| (values[(j + 1) % count] - values[j]).abs())
        .fold(0.0, f64::max);

    let grid_value = values[best];
    let mut result = CircleScanResult {
        value: grid_value,
        arg_at: grid.theta(best),
        grid_count: count,
        refined: false,
        certified_bound: 0.5 * max_jump,
    };
    if orient == Orientation::Min && grid_value < MIN_ZERO_FLOOR {
        return Ok(result);
    }

    let h = TAU / count as f64;
    let center = grid.theta(best);
    let k = grid.k();
    let objective = |theta: f64| -> std::result::Result<f64, RatFunError> {
        f(Complex64::from_polar(k, theta))
    };
    let (theta, value) = golden_section(objective, center - h, center + h, orient)?;
    result.refined = true;
    if orient.better(value, grid_value) {
        result.value = value;
        result.arg_at = theta.rem_euclid(TAU);
    }
    Ok(result)
}

/// Golden-section search for the extremum of a unimodal `f` on `[lo, hi]`.
fn golden_section<F>(
    f: F,
    mut lo: f64,
    mut hi: f64,
    orient: Orientation,
) -> std::result::Result<(f64, f64), RatFunError>
where
    F: Fn(f64) -> std::result::Result<f64, RatFunError>,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    while hi - lo > REFINE_WIDTH {
        if orient.better(f1, f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2)?;
        }
    }
    Ok(if orient.better(f1, f2) {
        (x1, f1)
    } else {
        (x2, f2)
    })
}

/// Number of zeros of `r` in `|z| < k`, as the winding number of the numerator.
pub fn count_zeros_in_disk(r: &RationalFunction, k: f64) -> Result<usize> {
    winding_count(r.numerator(), k)
}

/// Winding number of `p(k e^{i theta})` around the origin.
///
/// The sampling doubles from 256 points until every phase increment is
/// below `pi/2` at two consecutive levels that agree on the count.
pub fn winding_count(p: &Polynomial, k: f64) -> Result<usize> {
    if !(k.is_finite() && k > 0.0) {
        return Err(ScanError::InvalidGrid { count: 0, k });
    }
    if p.is_zero() {
        return Err(RatFunError::ZeroPolynomial.into());
    }
    let mut count = WINDING_START;
    let mut previous: Option<i64> = None;
    while count <= WINDING_MAX {
        match winding_at(p, k, count) {
            Some(w) => {
                if previous == Some(w) {
                    return usize::try_from(w).map_err(|_| ScanError::ZeroOnContour(k));
                }
                previous = Some(w);
            }
            None => previous = None,
        }
        count *= 2;
    }
    Err(ScanError::ZeroOnContour(k))
}

fn winding_at(p: &Polynomial, k: f64, count: usize) -> Option<i64> {
    let values: Vec<Complex64> = (0..count)
        .map(|j| p.eval(Complex64::from_polar(k, TAU * j as f64 / count as f64)))
        .collect();
    if values.iter().any(|v| *v == Complex64::new(0.0, 0.0)) {
        return None;
    }
    let mut total = 0.0;
    for j in 0..count {
        let step = (values[(j + 1) % count] / values[j]).arg();
        if step.abs() >= FRAC_PI_2 {
            return None;
        }
        total += step;
    }
    Some((total / TAU).round() as i64)
}

/// `Re(z r'(z) / r(z))` for `|z| = 1`.
pub fn log_derivative_real_part(r: &RationalFunction, z: Complex64) -> Result<f64> {
    check_on_unit_circle(z)?;
    let value = r.eval(z)?;
    if value.norm() <= LOG_DERIVATIVE_FLOOR {
        return Err(ScanError::NearZeroOfR(z));
    }
    Ok((z * r.log_derivative(z)?).re)
}
