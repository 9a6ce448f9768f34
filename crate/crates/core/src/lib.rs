//! Numerical laboratory for Bohr-type and Bohr–Rogosinski-type inequalities
//! on the unit disk.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`]: coefficient access and bounded-error summation for analytic
//!   functions on the disk (Möbius maps, Blaschke products, the half-plane
//!   map, the Koebe function, explicit series and their combinators).
//! - [`harmonic`]: sense-preserving harmonic pairs `f = h + conj(g)` with a
//!   dilatation bound `k`.
//! - [`functional`]: the catalog of left-hand sides, right-hand sides and
//!   stated radii, one row per inequality.
//! - [`constants`]: bracketed root finding and reproduction of every sharp
//!   constant from its defining equation.
//! - [`extremal`]: closed forms of each functional along the Möbius family
//!   `f_a(z) = (a - z)/(1 - a z)`, used for boundary-equality certificates.
//! - [`verify`]: grid sweeps, envelope suites and sharpness probes.

pub mod constants;
pub mod error;
pub mod extremal;
pub mod functional;
pub mod harmonic;
pub mod search;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use functional::{CatalogId, FunctionalSpec, Subject, Subordinator, ZPolicy};
pub use harmonic::HarmonicPair;
pub use series::{DiskFunction, Family, SupMode, TruncationPolicy};

pub use num_complex::Complex64;
