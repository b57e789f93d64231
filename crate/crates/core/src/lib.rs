//! Certified numerics for improved Bohr-type inequalities of the Cesàro
//! operator acting on bounded analytic functions of the unit disk.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`] evaluates the weights `φ_k(r) = Σ_{i≥k} r^i/(i+1)` and the
//!   closed forms attached to the extremal Möbius family `(a+z)/(1+az)`.
//! * [`quadrature`] is a small adaptive Gauss–Legendre integrator used as an
//!   independent route to the Cesàro transform.
//! * [`series`] and [`cesaro`] hold coefficient sequences and the operator
//!   itself, together with the left and right sides of the inequalities.
//! * [`radii`] defines every radius equation as a residual and certifies its
//!   root by bisection.
//! * [`sturm`] counts real roots of exact rational polynomials.
//! * [`verify`] is the claim registry, grid scans, sharpness search,
//!   randomized checks and figure tables.

pub mod cesaro;
pub mod error;
pub mod quadrature;
pub mod radii;
pub mod series;
pub mod specfun;
pub mod sturm;
pub mod verify;

pub use error::{Error, Result};
pub use specfun::{MoebiusWitness, Radius};
