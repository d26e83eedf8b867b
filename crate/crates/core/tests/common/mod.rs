//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls the library's derivative, Blaschke or winding code;
//! functions are evaluated straight from their product forms.

#![allow(dead_code)]

use std::f64::consts::TAU;

use num_complex::Complex64;
use ratbound::harness::StreamRng;
use ratbound::ratfun::{PoleSet, RationalFunction};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `f'(z)` from the trapezoid rule on the Cauchy integral over `|w - z| = rho`.
///
/// The error decays like `(rho / R)^points` where `R` is the distance from
/// `z` to the nearest singularity, so `rho = R / 4` and 64 points are far
/// below 1e-12 relative error.
pub fn cauchy_derivative<F: Fn(Complex64) -> Complex64>(
    f: F,
    z: Complex64,
    rho: f64,
    points: usize,
) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..points {
        let w = Complex64::from_polar(1.0, TAU * j as f64 / points as f64);
        acc += f(z + rho * w) / w;
    }
    acc / (rho * points as f64)
}

/// Symmetric difference quotient along the real direction.
pub fn central_difference<F: Fn(Complex64) -> Complex64>(f: F, z: Complex64, h: f64) -> Complex64 {
    (f(z + h) - f(z - h)) / (2.0 * h)
}

/// `r(z)` straight from zeros, poles and leading coefficient.
pub fn eval_product(
    leading: Complex64,
    zeros: &[Complex64],
    poles: &[Complex64],
    z: Complex64,
) -> Complex64 {
    let num: Complex64 = zeros.iter().map(|&b| z - b).product();
    let den: Complex64 = poles.iter().map(|&a| z - a).product();
    leading * num / den
}

pub fn eval_r(r: &RationalFunction, z: Complex64) -> Complex64 {
    eval_product(r.leading(), r.zeros(), r.poles().as_slice(), z)
}

/// `B(z) = prod (1 - conj(a) z) / (z - a)`.
pub fn eval_blaschke(poles: &[Complex64], z: Complex64) -> Complex64 {
    poles
        .iter()
        .map(|&a| (Complex64::new(1.0, 0.0) - a.conj() * z) / (z - a))
        .product()
}

/// `r*(z) = B(z) conj(r(1 / conj(z)))`, evaluated from the product forms.
pub fn eval_star(r: &RationalFunction, z: Complex64) -> Complex64 {
    eval_blaschke(r.poles().as_slice(), z) * eval_r(r, z.conj().inv()).conj()
}

/// Cauchy radius for a point on the unit circle: a quarter of the distance
/// to the nearest pole or reflected pole.
pub fn safe_radius(poles: &[Complex64], z: Complex64) -> f64 {
    poles
        .iter()
        .flat_map(|&a| [(z - a).norm(), (z - a.conj().inv()).norm()])
        .fold(f64::INFINITY, f64::min)
        / 4.0
}

/// Roots strictly inside `|z| < k`, counted from an explicit list.
pub fn brute_root_count(roots: &[Complex64], k: f64) -> usize {
    roots.iter().filter(|b| b.norm() < k).count()
}

/// Unit-circle point `e^{i theta}`.
pub fn on_circle(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// Random pole set with moduli in `[lo, hi]`.
pub fn random_poles(rng: &mut StreamRng, n: usize, lo: f64, hi: f64) -> Vec<Complex64> {
    (0..n)
        .map(|_| {
            let rho = rng.uniform_in(lo, hi);
            Complex64::from_polar(rho, rng.angle())
        })
        .collect()
}

/// A random member of the rational class with `t` zeros anywhere in `|z| <= 3`.
pub fn random_function(rng: &mut StreamRng, n: usize, t: usize) -> RationalFunction {
    let poles = random_poles(rng, n, 1.1, 5.0);
    let zeros = (0..t)
        .map(|_| {
            let rho = rng.area_radius(0.0, 3.0);
            Complex64::from_polar(rho, rng.angle())
        })
        .collect();
    let leading = Complex64::from_polar(rng.uniform_in(0.5, 2.0), rng.angle());
    RationalFunction::from_roots(leading, zeros, PoleSet::new(poles).unwrap()).unwrap()
}
