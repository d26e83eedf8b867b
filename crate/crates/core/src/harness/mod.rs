//! Random admissible instances and falsification campaigns.

mod rng;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{certify, BoundVerdict, BoundsError, Side, TheoremId};
use crate::circlescan::CircleGrid;
use crate::instance::InstanceFile;
use crate::ratfun::{PoleSet, RatFunError, RationalFunction, ZeroLocation};

pub use rng::StreamRng;

/// Poles closer than this to `T_1` are refused outright.
pub const MIN_POLE_MODULUS: f64 = 1.01;
/// Below this the generator warns about conditioning.
pub const SAFE_POLE_MODULUS: f64 = 1.1;
/// Sampled zeros are redrawn when closer than this to a pole.
const ZERO_POLE_SEPARATION: f64 = 1e-6;
const MAX_REDRAWS: usize = 64;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid generator spec: {0}")]
    SpecInvalid(String),
    #[error("spec does not match the hypotheses of {theorem}: {reason}")]
    HypothesisMismatch { theorem: TheoremId, reason: String },
    #[error("instance {index}: {source}")]
    Instance { index: usize, source: BoundsError },
    #[error("instance {index}: {source}")]
    Construction { index: usize, source: RatFunError },
}

pub type Result<T> = std::result::Result<T, HarnessError>;

/// Recipe for a batch of random rational functions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub n: usize,
    pub t: usize,
    /// Pole moduli are area-uniform in `[r_min, r_max]`.
    pub pole_annulus: (f64, f64),
    pub zero_region: ZeroLocation,
    /// Probability that a zero is placed exactly on `|z| = k`.
    pub p_boundary: f64,
    /// The first this-many zeros always go on `|z| = k`.
    pub min_boundary_zeros: usize,
    /// Off-boundary zeros fill `k <= |z| <= spread k`, `|z| <= k`, or
    /// `|z| <= spread` for an unconstrained region.
    pub zero_spread: f64,
    pub seed: u64,
    pub count: usize,
}

impl GeneratorSpec {
    pub fn new(n: usize, t: usize, zero_region: ZeroLocation, seed: u64, count: usize) -> Self {
        Self {
            n,
            t,
            pole_annulus: (SAFE_POLE_MODULUS, 4.0),
            zero_region,
            p_boundary: 0.0,
            min_boundary_zeros: 0,
            zero_spread: 3.0,
            seed,
            count,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(HarnessError::SpecInvalid(msg));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        if self.t > self.n {
            return bad(format!("t = {} exceeds n = {}", self.t, self.n));
        }
        if self.count == 0 {
            return bad("count must be at least 1".into());
        }
        let (lo, hi) = self.pole_annulus;
        if !(lo.is_finite() && hi.is_finite() && lo >= MIN_POLE_MODULUS && hi >= lo) {
            return bad(format!(
                "pole annulus ({lo}, {hi}) must satisfy {MIN_POLE_MODULUS} <= r_min <= r_max"
            ));
        }
        if !(0.0..=1.0).contains(&self.p_boundary) {
            return bad(format!("p_boundary = {} outside [0, 1]", self.p_boundary));
        }
        if self.min_boundary_zeros > self.t {
            return bad(format!(
                "{} boundary zeros requested but t = {}",
                self.min_boundary_zeros, self.t
            ));
        }
        if !(self.zero_spread.is_finite() && self.zero_spread >= 1.0) {
            return bad(format!("zero spread {} must be >= 1", self.zero_spread));
        }
        match self.zero_region.radius() {
            Some(k) if !(k.is_finite() && k > 0.0) => {
                bad(format!("region radius {k} must be positive"))
            }
            None if self.min_boundary_zeros > 0 || self.p_boundary > 0.0 => {
                bad("boundary zeros need a region radius".into())
            }
            _ => Ok(()),
        }
    }
}

/// Instance `index` of `spec`. Each index owns its own random stream, so
/// this does not depend on any other instance.
pub fn generate_one(spec: &GeneratorSpec, index: usize) -> Result<RationalFunction> {
    let mut rng = StreamRng::new(spec.seed, index as u64);
    let leading = Complex64::from_polar(1.0, rng.angle());
    let (lo, hi) = spec.pole_annulus;
    let poles: Vec<Complex64> = (0..spec.n)
        .map(|_| {
            let rho = rng.area_radius(lo, hi);
            Complex64::from_polar(rho, rng.angle())
        })
        .collect();

    let mut zeros = Vec::with_capacity(spec.t);
    for j in 0..spec.t {
        let mut attempt = 0;
        let b = loop {
            let on_boundary = rng.uniform() < spec.p_boundary || j < spec.min_boundary_zeros;
            let rho = match spec.zero_region {
                _ if on_boundary => spec.zero_region.radius().expect("validated"),
                ZeroLocation::AllOutsideOrOn(k) => rng.area_radius(k, spec.zero_spread * k),
                ZeroLocation::AllInsideOrOn(k) => rng.area_radius(0.0, k),
                ZeroLocation::Unconstrained => rng.area_radius(0.0, spec.zero_spread),
            };
            let b = Complex64::from_polar(rho, rng.angle());
            let clear = poles.iter().all(|a| (a - b).norm() >= ZERO_POLE_SEPARATION);
            attempt += 1;
            if clear || attempt >= MAX_REDRAWS {
                break b;
            }
        };
        zeros.push(b);
    }

    let poles =
        PoleSet::new(poles).map_err(|source| HarnessError::Construction { index, source })?;
    RationalFunction::from_roots(leading, zeros, poles)
        .map_err(|source| HarnessError::Construction { index, source })
}

/// All `spec.count` instances, in index order.
pub fn generate(spec: &GeneratorSpec) -> Result<Vec<RationalFunction>> {
    spec.validate()?;
    if spec.pole_annulus.0 < SAFE_POLE_MODULUS {
        log::warn!(
            "poles as close as {} to the unit circle; |B'| grows like 1/dist and may need a denser grid",
            spec.pole_annulus.0 - 1.0
        );
    }
    (0..spec.count).map(|i| generate_one(spec, i)).collect()
}

/// Checks that every instance `spec` can produce satisfies the hypotheses of `id`.
pub fn check_spec_matches(spec: &GeneratorSpec, id: TheoremId) -> Result<()> {
    let hyp = id.hypothesis();
    let mismatch = |reason: String| {
        Err(HarnessError::HypothesisMismatch {
            theorem: id,
            reason,
        })
    };
    let k = match (hyp.side, spec.zero_region) {
        (Side::Upper, ZeroLocation::AllOutsideOrOn(k))
        | (Side::Lower, ZeroLocation::AllInsideOrOn(k)) => k,
        (_, region) => {
            return mismatch(format!(
                "zero region {region:?} is not of the form {:?}",
                hyp.zero_region(1.0)
            ))
        }
    };
    if !hyp.radius.admits(k) {
        return mismatch(format!("region radius {k} violates {}", hyp.radius));
    }
    if hyp.exactly_n_zeros && spec.t != spec.n {
        return mismatch(format!(
            "needs t = n, got t = {} and n = {}",
            spec.t, spec.n
        ));
    }
    let forced_boundary = spec.min_boundary_zeros > 0 || (spec.p_boundary == 1.0 && spec.t > 0);
    if hyp.zero_on_circle && !forced_boundary {
        return mismatch("needs a zero on |z| = k in every instance".into());
    }
    Ok(())
}

/// Aggregate outcome of certifying every instance of a spec.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub spec: GeneratorSpec,
    pub theorem: TheoremId,
    pub grid_count: usize,
    pub instances: usize,
    /// Smallest margin over non-degenerate instances.
    pub min_margin: Option<f64>,
    pub violations: usize,
    pub violating_instances: usize,
    pub degenerate: usize,
    pub skipped_points: usize,
    pub worst_index: Option<usize>,
    pub worst_instance: Option<InstanceFile>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Certifies every instance of `spec` against `id` on `grid`.
pub fn run_campaign(
    spec: &GeneratorSpec,
    id: TheoremId,
    grid: &CircleGrid,
) -> Result<CampaignReport> {
    spec.validate()?;
    check_spec_matches(spec, id)?;
    let k = spec
        .zero_region
        .radius()
        .expect("matched region has a radius");
    let functions = generate(spec)?;
    let verdicts: Vec<BoundVerdict> = functions
        .par_iter()
        .enumerate()
        .map(|(index, r)| {
            certify(id, r, k, grid).map_err(|source| HarnessError::Instance { index, source })
        })
        .collect::<Result<_>>()?;

    let mut report = CampaignReport {
        spec: spec.clone(),
        theorem: id,
        grid_count: grid.count(),
        instances: functions.len(),
        min_margin: None,
        violations: 0,
        violating_instances: 0,
        degenerate: 0,
        skipped_points: 0,
        worst_index: None,
        worst_instance: None,
    };
    for (index, v) in verdicts.iter().enumerate() {
        report.violations += v.violations;
        report.violating_instances += usize::from(v.violations > 0);
        report.skipped_points += v.skipped_points;
        if v.degenerate.is_some() {
            report.degenerate += 1;
            continue;
        }
        if report.min_margin.is_none_or(|m| v.min_margin < m) {
            report.min_margin = Some(v.min_margin);
            report.worst_index = Some(index);
        }
    }
    report.worst_instance = report
        .worst_index
        .map(|i| InstanceFile::from_function(&functions[i], Some(k)));
    Ok(report)
}
