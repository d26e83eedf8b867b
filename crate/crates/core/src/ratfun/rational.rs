use num_complex::Complex64;

use super::{check_finite, PoleSet, Polynomial, RatFunError, Result, ZeroLocation, POLE_PROXIMITY};

/// `r(z) = p(z) / w(z)` with `deg p <= n` and `w(z) = prod (z - a_j)`.
///
/// The finite zeros of `p` are always available: either supplied at
/// construction (root form) or recovered once by root finding. `t` is their
/// number counted with multiplicity; zeros at infinity are not counted.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction {
    numer: Polynomial,
    zeros: Vec<Complex64>,
    poles: PoleSet,
}

impl RationalFunction {
    /// `leading * prod (z - zeros[i]) / prod (z - poles[j])`.
    pub fn from_roots(leading: Complex64, zeros: Vec<Complex64>, poles: PoleSet) -> Result<Self> {
        let numer = Polynomial::from_roots(leading, zeros.clone())?;
        Self::assemble(numer, zeros, poles)
    }

    /// Numerator in coefficient form; its zeros are recovered by root finding.
    pub fn from_numerator(numer: Polynomial, poles: PoleSet) -> Result<Self> {
        if numer.is_zero() {
            return Err(RatFunError::ZeroPolynomial);
        }
        let zeros = numer.roots()?;
        Self::assemble(numer, zeros, poles)
    }

    fn assemble(numer: Polynomial, zeros: Vec<Complex64>, poles: PoleSet) -> Result<Self> {
        let degree = zeros.len();
        if degree > poles.len() {
            return Err(RatFunError::DegreeExceedsPoles {
                degree,
                poles: poles.len(),
            });
        }
        for &b in &zeros {
            if let Some(&a) = poles
                .as_slice()
                .iter()
                .find(|&&a| (a - b).norm() < POLE_PROXIMITY)
            {
                return Err(RatFunError::Reducible { zero: b, pole: a });
            }
        }
        Ok(Self {
            numer,
            zeros,
            poles,
        })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numer
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn poles(&self) -> &PoleSet {
        &self.poles
    }

    pub fn leading(&self) -> Complex64 {
        self.numer.leading()
    }

    /// Number of poles.
    pub fn n(&self) -> usize {
        self.poles.len()
    }

    /// Number of finite zeros with multiplicity.
    pub fn t(&self) -> usize {
        self.zeros.len()
    }

    fn numer_value(&self, z: Complex64) -> Complex64 {
        self.numer
            .eval_factored(z)
            .unwrap_or_else(|| self.numer.eval(z))
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_finite(z)?;
        self.poles.check_distance(z)?;
        Ok(self.numer_value(z) / self.poles.denominator(z))
    }

    /// `r'(z) = (p' w - p w') / w^2`, written as `(p' - p * w'/w) / w`.
    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        check_finite(z)?;
        self.poles.check_distance(z)?;
        let p = self.numer_value(z);
        let (_, dp) = self.numer.eval_with_derivative(z);
        let w = self.poles.denominator(z);
        Ok((dp - p * self.poles.denominator_log_derivative(z)) / w)
    }

    /// Value and derivative together.
    pub fn eval_with_derivative(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        check_finite(z)?;
        self.poles.check_distance(z)?;
        let p = self.numer_value(z);
        let (_, dp) = self.numer.eval_with_derivative(z);
        let w = self.poles.denominator(z);
        Ok((
            p / w,
            (dp - p * self.poles.denominator_log_derivative(z)) / w,
        ))
    }

    /// `sum 1/(z - b_j) - sum 1/(z - a_j)`, i.e. `r'/r` through the zero and pole lists.
    pub fn log_derivative(&self, z: Complex64) -> Result<Complex64> {
        check_finite(z)?;
        self.poles.check_distance(z)?;
        let zero_part: Complex64 = self.zeros.iter().map(|&b| (z - b).inv()).sum();
        Ok(zero_part - self.poles.denominator_log_derivative(z))
    }

    /// `r(z) * r'(z)/r(z)` from the zero/pole sums; `None` when `|r(z)|` is below `floor`.
    pub fn derivative_log_form(&self, z: Complex64, floor: f64) -> Result<Option<Complex64>> {
        let r = self.eval(z)?;
        if r.norm() <= floor {
            return Ok(None);
        }
        Ok(Some(r * self.log_derivative(z)?))
    }

    /// Whether every finite zero lies in the region described by `loc`.
    pub fn classify_zeros(&self, loc: &ZeroLocation) -> bool {
        self.zeros.iter().all(|&b| loc.admits(b))
    }

    /// Smallest `| |b_j| - k |` over the zeros; infinite when there are none.
    pub fn zero_distance_to_circle(&self, k: f64) -> f64 {
        self.zeros
            .iter()
            .map(|b| (b.norm() - k).abs())
            .fold(f64::INFINITY, f64::min)
    }
}
