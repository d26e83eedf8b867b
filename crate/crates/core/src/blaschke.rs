//! Finite Blaschke products over a prescribed pole set, and the reflected
//! function `r*(z) = B(z) * conj(r(1/conj(z)))`.

use num_complex::Complex64;
use thiserror::Error;

use crate::ratfun::{PoleSet, RatFunError, RationalFunction};

/// Allowed deviation of `|z|` from 1 for operations defined on the unit circle.
pub const UNIT_CIRCLE_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BlaschkeError {
    #[error("point {0} is not on the unit circle")]
    OffCircle(Complex64),
    #[error(transparent)]
    RatFun(#[from] RatFunError),
}

pub type Result<T> = std::result::Result<T, BlaschkeError>;

pub fn check_on_unit_circle(z: Complex64) -> Result<()> {
    if (z.norm() - 1.0).abs() <= UNIT_CIRCLE_TOL {
        Ok(())
    } else {
        Err(BlaschkeError::OffCircle(z))
    }
}

/// `B(z) = prod (1 - conj(a_j) z) / (z - a_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    poles: PoleSet,
}

impl BlaschkeProduct {
    pub fn new(poles: PoleSet) -> Self {
        Self { poles }
    }

    pub fn poles(&self) -> &PoleSet {
        &self.poles
    }

    pub fn degree(&self) -> usize {
        self.poles.len()
    }

    /// Factor by factor; never expanded.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.poles.check_distance(z)?;
        Ok(self
            .poles
            .as_slice()
            .iter()
            .map(|&a| (Complex64::new(1.0, 0.0) - a.conj() * z) / (z - a))
            .product())
    }

    /// `B'(z) / B(z) = sum [ conj(a)/(conj(a) z - 1) - 1/(z - a) ]`.
    pub fn log_derivative(&self, z: Complex64) -> Result<Complex64> {
        self.poles.check_distance(z)?;
        Ok(self
            .poles
            .as_slice()
            .iter()
            .map(|&a| a.conj() / (a.conj() * z - 1.0) - (z - a).inv())
            .sum())
    }

    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.eval(z)? * self.log_derivative(z)?)
    }

    /// `|B'(z)| = sum (|a_j|^2 - 1) / |z - a_j|^2` for `|z| = 1`.
    ///
    /// Every term is positive, so the sum never cancels.
    pub fn deriv_modulus_on_unit_circle(&self, z: Complex64) -> Result<f64> {
        check_on_unit_circle(z)?;
        self.poles.check_distance(z)?;
        Ok(self
            .poles
            .as_slice()
            .iter()
            .map(|&a| (a.norm_sqr() - 1.0) / (z - a).norm_sqr())
            .sum())
    }

    /// The Blaschke product of `r`'s pole set.
    pub fn of(r: &RationalFunction) -> Self {
        Self::new(r.poles().clone())
    }

    /// `B` itself as a member of the rational class: zeros `1/conj(a_j)`,
    /// scaled by `lambda`.
    pub fn to_rational(&self, lambda: Complex64) -> Result<RationalFunction> {
        let leading = self
            .poles
            .as_slice()
            .iter()
            .fold(lambda, |acc, &a| acc * (-a.conj()));
        let zeros = self
            .poles
            .as_slice()
            .iter()
            .map(|a| a.conj().inv())
            .collect();
        Ok(RationalFunction::from_roots(
            leading,
            zeros,
            self.poles.clone(),
        )?)
    }
}

/// `r*(z) = B(z) * conj(r(1/conj(z)))`.
pub fn star_eval(r: &RationalFunction, z: Complex64) -> Result<Complex64> {
    let b = BlaschkeProduct::of(r).eval(z)?;
    let reflected = r.eval(z.conj().inv())?;
    Ok(b * reflected.conj())
}

/// `|(r*)'(z)|` on the unit circle, through `| |B'(z)| r(z) - z r'(z) |`.
pub fn star_transform_deriv_modulus(r: &RationalFunction, z: Complex64) -> Result<f64> {
    check_on_unit_circle(z)?;
    let bprime = BlaschkeProduct::of(r).deriv_modulus_on_unit_circle(z)?;
    let (value, deriv) = r.eval_with_derivative(z)?;
    Ok((value * bprime - z * deriv).norm())
}
