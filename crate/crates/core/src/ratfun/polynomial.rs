use num_complex::Complex64;

use super::roots::{aberth_roots, RootOptions};
use super::{check_finite, RatFunError, Result};

/// Complex polynomial in coefficient form, `coeffs[i]` multiplying `z^i`.
///
/// When built from roots, the factored form `leading * prod (z - root)` is
/// kept alongside the expanded coefficients and is treated as authoritative:
/// [`Polynomial::roots`] returns it verbatim instead of re-solving.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
    factored: Option<Factored>,
}

#[derive(Debug, Clone, PartialEq)]
struct Factored {
    leading: Complex64,
    roots: Vec<Complex64>,
}

impl Polynomial {
    /// Trailing zero coefficients are trimmed, so the leading coefficient of
    /// the result is nonzero unless the polynomial is identically zero.
    pub fn from_coeffs(mut coeffs: Vec<Complex64>) -> Result<Self> {
        for &c in &coeffs {
            check_finite(c)?;
        }
        while coeffs
            .last()
            .is_some_and(|c| *c == Complex64::new(0.0, 0.0))
        {
            coeffs.pop();
        }
        Ok(Self {
            coeffs,
            factored: None,
        })
    }

    pub fn from_real_coeffs(coeffs: &[f64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn from_roots(leading: Complex64, roots: Vec<Complex64>) -> Result<Self> {
        check_finite(leading)?;
        if leading == Complex64::new(0.0, 0.0) {
            return Err(RatFunError::ZeroLeading);
        }
        for &r in &roots {
            check_finite(r)?;
        }
        let coeffs = expand(leading, &roots);
        Ok(Self {
            coeffs,
            factored: Some(Factored { leading, roots }),
        })
    }

    pub fn constant(c: Complex64) -> Result<Self> {
        Self::from_coeffs(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn cached_roots(&self) -> Option<&[Complex64]> {
        self.factored.as_ref().map(|f| f.roots.as_slice())
    }

    /// Horner evaluation on the coefficients.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Value and first derivative by a single Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        self.coeffs
            .iter()
            .rev()
            .fold((zero, zero), |(p, dp), &c| (p * z + c, dp * z + p))
    }

    /// Value from the factored form, when one is cached.
    pub fn eval_factored(&self, z: Complex64) -> Option<Complex64> {
        self.factored
            .as_ref()
            .map(|f| f.roots.iter().fold(f.leading, |acc, &r| acc * (z - r)))
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as f64)
            .collect();
        Polynomial {
            coeffs,
            factored: None,
        }
    }

    /// All `deg(p)` roots with multiplicity.
    pub fn roots(&self) -> Result<Vec<Complex64>> {
        self.roots_with(&RootOptions::default())
    }

    pub fn roots_with(&self, opts: &RootOptions) -> Result<Vec<Complex64>> {
        if let Some(f) = &self.factored {
            return Ok(f.roots.clone());
        }
        aberth_roots(&self.coeffs, opts)
    }

    pub fn max_coeff_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Coefficients of `leading * prod (z - r)`.
pub(crate) fn expand(leading: Complex64, roots: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = vec![leading];
    for &r in roots {
        coeffs.push(Complex64::new(0.0, 0.0));
        for i in (1..coeffs.len()).rev() {
            let lower = coeffs[i - 1];
            coeffs[i] = coeffs[i] * (-r) + lower;
        }
        coeffs[0] *= -r;
    }
    coeffs
}
