//! Bernstein-type inequalities for rational functions with prescribed poles
//! outside the unit disk: exact evaluation of each bound, grid certification,
//! equality families and random falsification campaigns.
//!
//! ```
//! use ratbound::bounds::{certify, make_extremal, ExtremalParams, TheoremId};
//! use ratbound::circlescan::CircleGrid;
//!
//! let ex = make_extremal(TheoremId::MainUpper, &ExtremalParams::new(3.0, 1.0, 2, 2)).unwrap();
//! let grid = CircleGrid::unit(1024).unwrap();
//! let v = certify(TheoremId::MainUpper, &ex.function, ex.k, &grid).unwrap();
//! assert!(v.passed());
//! ```

pub mod blaschke;
pub mod bounds;
pub mod circlescan;
pub mod cli;
pub mod harness;
pub mod instance;
pub mod ratfun;

pub use blaschke::BlaschkeProduct;
pub use bounds::{certify, BoundVerdict, TheoremId};
pub use ratfun::{PoleSet, Polynomial, RationalFunction};
