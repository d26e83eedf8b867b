use num_complex::Complex64;

use super::{BoundsError, RadiusRule, Result, TheoremId};
use crate::blaschke::BlaschkeProduct;
use crate::ratfun::{PoleSet, Polynomial, RationalFunction};

/// Parameters of an equality family.
///
/// The power family `(z + k)^t / (z - a)^n` uses `a`, `k`, `t`, `n`; the
/// Blaschke families `B(z) + h e^{i alpha}` use `a`, `n`, `h`, `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalParams {
    pub a: f64,
    pub k: f64,
    pub t: usize,
    pub n: usize,
    pub h: f64,
    pub alpha: f64,
}

impl ExtremalParams {
    pub fn new(a: f64, k: f64, t: usize, n: usize) -> Self {
        Self {
            a,
            k,
            t,
            n,
            h: 1.0,
            alpha: 0.0,
        }
    }

    pub fn with_shift(mut self, h: f64, alpha: f64) -> Self {
        self.h = h;
        self.alpha = alpha;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Extremal {
    pub function: RationalFunction,
    pub k: f64,
    /// Where equality is attained, when known in closed form.
    pub equality_point: Option<Complex64>,
}

/// Builds the function on which `id` holds with equality.
pub fn make_extremal(id: TheoremId, p: &ExtremalParams) -> Result<Extremal> {
    let out_of_range = |msg: String| BoundsError::ParameterOutOfRange(format!("{id}: {msg}"));
    if !(p.a.is_finite() && p.a > 1.0) {
        return Err(out_of_range(format!("pole a = {} must exceed 1", p.a)));
    }
    if p.n == 0 {
        return Err(out_of_range("n must be at least 1".into()));
    }
    let poles = PoleSet::repeated(Complex64::new(p.a, 0.0), p.n)?;

    match id {
        TheoremId::LiUpper
        | TheoremId::LiLower
        | TheoremId::AzizShahUpper97
        | TheoremId::AzizShahLower97 => {
            let h_ok = match id {
                TheoremId::AzizShahUpper97 => p.h >= 1.0,
                TheoremId::AzizShahLower97 => (0.0..=1.0).contains(&p.h),
                _ => p.h == 1.0,
            };
            if !(p.h.is_finite() && h_ok && p.alpha.is_finite()) {
                return Err(out_of_range(format!("shift h = {} not admissible", p.h)));
            }
            let shift = Complex64::from_polar(p.h, p.alpha);
            Ok(Extremal {
                function: blaschke_plus_constant(&BlaschkeProduct::new(poles), shift)?,
                k: 1.0,
                equality_point: None,
            })
        }
        _ => {
            let rule = id.hypothesis().radius;
            if !rule.admits(p.k) {
                return Err(out_of_range(format!("k = {} outside {rule}", p.k)));
            }
            if p.t > p.n {
                return Err(out_of_range(format!("t = {} exceeds n = {}", p.t, p.n)));
            }
            let needs_full = id.hypothesis().exactly_n_zeros || id == TheoremId::AzizZarger99;
            if needs_full && p.t != p.n {
                return Err(out_of_range(format!("family requires t = n = {}", p.n)));
            }
            let needs_zero = matches!(
                id,
                TheoremId::MainUpper
                    | TheoremId::MainUpperCor
                    | TheoremId::MainLower
                    | TheoremId::MainLowerCor
            );
            if needs_zero && p.t == 0 {
                return Err(out_of_range("family needs t >= 1 for m = 0".into()));
            }
            debug_assert!(rule != RadiusRule::Unit);
            let function = RationalFunction::from_roots(
                Complex64::new(1.0, 0.0),
                vec![Complex64::new(-p.k, 0.0); p.t],
                poles,
            )?;
            Ok(Extremal {
                function,
                k: p.k,
                equality_point: Some(Complex64::new(1.0, 0.0)),
            })
        }
    }
}

/// `B(z) + c` over `B`'s own poles: numerator `prod (1 - conj(a) z) + c w(z)`.
fn blaschke_plus_constant(b: &BlaschkeProduct, c: Complex64) -> Result<RationalFunction> {
    let poles = b.poles();
    let lead = poles
        .as_slice()
        .iter()
        .fold(Complex64::new(1.0, 0.0), |acc, &a| acc * (-a.conj()));
    let reflected = Polynomial::from_roots(
        lead,
        poles.as_slice().iter().map(|a| a.conj().inv()).collect(),
    )?;
    let w = Polynomial::from_roots(Complex64::new(1.0, 0.0), poles.as_slice().to_vec())?;
    let coeffs = reflected
        .coeffs()
        .iter()
        .zip(w.coeffs())
        .map(|(&x, &y)| x + c * y)
        .collect();
    Ok(RationalFunction::from_numerator(
        Polynomial::from_coeffs(coeffs)?,
        poles.clone(),
    )?)
}
