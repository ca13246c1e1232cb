//! Exact scalars, dense matrices and small polynomial helpers.

pub mod matrix;
pub mod poly;
pub mod rational;

pub use matrix::{det, exp_nilpotent, inverse, invert_unitriangular, Matrix};
pub use poly::{poly_det, Poly};
pub use rational::{format_rational, frac, int, parse_rational, Rational};
