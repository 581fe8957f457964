//! Exact real tropical geometry over the field of real Puiseux series.
//!
//! The crate tropicalizes with signs, decides membership in real tropical
//! hypersurfaces, synthesizes and verifies real tropical bases for
//! zero-dimensional and linear ideals, certifies patchworking hypersurfaces,
//! and decides real tropical singularity of hypersurface points. All
//! arithmetic is exact: series are finite sums with rational coefficients
//! and exponents, root counting goes through Sturm sequences, and linear
//! feasibility through Fourier-Motzkin elimination over the rationals.
//!
//! Core types are generic over the scalar field via [`scalar::Scalar`];
//! the aliases below fix the default arbitrary-precision rational scalar.

pub mod basis;
pub mod discriminant;
pub mod error;
pub mod feasibility;
pub mod kpoly;
pub mod linear;
pub mod puiseux;
pub mod roots;
pub mod scalar;
pub mod sturm;
pub mod subdivision;
pub mod text;
pub mod tropical;
pub mod upoly;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use tropical::Sign;

/// Default exact scalar: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

/// Fixed-width exact scalar for small inputs.
pub type Rat128 = num_rational::Ratio<i128>;

pub type Puiseux = puiseux::Puiseux<Rat>;
pub type SignedTrop = tropical::SignedTrop<Rat>;
pub type TropPoint = tropical::TropPoint<Rat>;
pub type TropPoly = tropical::TropPoly<Rat>;
pub type PuiseuxPoly = kpoly::PuiseuxPoly<Rat>;
pub type MPoly = kpoly::MPoly<Rat>;
pub type UPoly = upoly::UPoly<Rat>;
pub type RootReport = roots::RootReport<Rat>;
pub type Subdivision = subdivision::Subdivision<Rat>;
pub type PlaneCurve = subdivision::PlaneCurve<Rat>;
pub type LinearSystem = linear::LinearSystem<Rat>;
pub type CircuitForm = linear::CircuitForm<Rat>;
pub type PointSet = basis::PointSet<Rat>;
pub type BasisCertificate = basis::BasisCertificate<Rat>;
pub type Flag = discriminant::Flag<Rat>;
pub type SingularityVerdict = discriminant::SingularityVerdict<Rat>;
