//! Simultaneous root refinement (Aberth–Ehrlich).

use num_complex::Complex64;

use super::{RatFunError, Result};

#[derive(Debug, Clone, Copy)]
pub struct RootOptions {
    /// Full sweeps over all root estimates before giving up.
    pub max_sweeps: usize,
    /// Accepted residual relative to `max|coeff| * max(1,|root|)^deg`.
    pub residual_tol: f64,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            max_sweeps: 200,
            residual_tol: 1e-10,
        }
    }
}

/// Roots of the polynomial with coefficients `coeffs` (index = power).
///
/// Trailing zero coefficients must already be trimmed. Exact zero roots are
/// deflated first; the remaining roots start on a circle of radius
/// `|c_0 / c_d|^(1/d)` and are refined jointly, each estimate frozen once its
/// residual reaches the rounding level of the Horner sum.
pub fn aberth_roots(coeffs: &[Complex64], opts: &RootOptions) -> Result<Vec<Complex64>> {
    let zero = Complex64::new(0.0, 0.0);
    let Some(deg) = coeffs.len().checked_sub(1) else {
        return Err(RatFunError::ZeroPolynomial);
    };
    let low = coeffs.iter().take_while(|c| **c == zero).count();
    let mut roots = vec![zero; low];
    let reduced = &coeffs[low..];
    let d = deg - low;
    match d {
        0 => return Ok(roots),
        1 => {
            roots.push(-reduced[0] / reduced[1]);
            return Ok(roots);
        }
        _ => {}
    }

    let lead = reduced[d];
    let monic: Vec<Complex64> = reduced.iter().map(|&c| c / lead).collect();
    let abs_coeffs: Vec<f64> = monic.iter().map(|c| c.norm()).collect();

    let radius = monic[0].norm().powf(1.0 / d as f64);
    let mut z: Vec<Complex64> = (0..d)
        .map(|j| {
            let angle = std::f64::consts::TAU * j as f64 / d as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    let mut done = vec![false; d];

    for _ in 0..opts.max_sweeps {
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (p, dp) = horner_pair(&monic, z[i]);
            let bound = horner_abs(&abs_coeffs, z[i].norm()) * 4.0 * f64::EPSILON;
            if p.norm() <= bound {
                done[i] = true;
                continue;
            }
            let ratio = if dp == zero {
                // stationary point: kick the estimate off it
                Complex64::new(1e-3 * (1.0 + z[i].norm()), 0.0)
            } else {
                p / dp
            };
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let delta = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !(delta.re.is_finite() && delta.im.is_finite()) {
                continue;
            }
            z[i] -= delta;
            if delta.norm() <= 2.0 * f64::EPSILON * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|&x| x) {
            break;
        }
    }

    let scale = reduced.iter().map(|c| c.norm()).fold(0.0, f64::max);
    for &r in &z {
        let residual = horner_pair(reduced, r).0.norm();
        let allowed = opts.residual_tol * scale * r.norm().max(1.0).powi(deg as i32);
        if residual.is_nan() || residual > allowed {
            return Err(RatFunError::NonConvergence {
                sweeps: opts.max_sweeps,
            });
        }
    }
    roots.extend(z);
    Ok(roots)
}

fn horner_pair(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let zero = Complex64::new(0.0, 0.0);
    coeffs
        .iter()
        .rev()
        .fold((zero, zero), |(p, dp), &c| (p * z + c, dp * z + p))
}

fn horner_abs(abs_coeffs: &[f64], x: f64) -> f64 {
    abs_coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::polynomial::expand;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn roots_of(coeffs: &[f64]) -> Vec<Complex64> {
        let cs: Vec<Complex64> = coeffs.iter().map(|&x| c(x, 0.0)).collect();
        aberth_roots(&cs, &RootOptions::default()).unwrap()
    }

    #[test]
    fn quadratic_by_inspection() {
        let mut r = roots_of(&[-0.25, 0.0, 1.0]);
        r.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((r[0] - c(-0.5, 0.0)).norm() < 1e-14);
        assert!((r[1] - c(0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn triple_root_cluster() {
        let coeffs = expand(c(1.0, 0.0), &[c(2.0, 0.0); 3]);
        assert_eq!(
            coeffs,
            vec![c(-8.0, 0.0), c(12.0, 0.0), c(-6.0, 0.0), c(1.0, 0.0)]
        );
        let r = aberth_roots(&coeffs, &RootOptions::default()).unwrap();
        assert_eq!(r.len(), 3);
        for root in r {
            assert!((root - c(2.0, 0.0)).norm() < 1e-4, "{root}");
        }
    }

    #[test]
    fn linear_and_zero_roots() {
        assert_eq!(roots_of(&[0.0, 1.0]), vec![c(0.0, 0.0)]);
        let r = roots_of(&[0.0, 0.0, -3.0, 1.0]);
        assert_eq!(r.len(), 3);
        assert_eq!(r[0], c(0.0, 0.0));
        assert_eq!(r[1], c(0.0, 0.0));
        assert!((r[2] - c(3.0, 0.0)).norm() < 1e-15);
        assert!(roots_of(&[5.0]).is_empty());
    }

    #[test]
    fn budget_exhaustion_reports_nonconvergence() {
        let coeffs = expand(
            c(1.0, 0.0),
            &[c(0.3, 0.1), c(-1.2, 0.4), c(0.0, 2.0), c(1.7, -0.2)],
        );
        let opts = RootOptions {
            max_sweeps: 1,
            ..RootOptions::default()
        };
        assert_eq!(
            aberth_roots(&coeffs, &opts),
            Err(RatFunError::NonConvergence { sweeps: 1 })
        );
    }
}
