//! Polar decomposition and operator classes under perturbed scalar products.
//!
//! Every positive definite matrix `a` defines a scalar product
//! `<ξ,η>_a = <aξ,η>` on the underlying complex space, and with it a
//! perturbed notion of adjoint, unitarity, Hermitianness and positivity.
//! This crate computes:
//!
//! * the classical polar decomposition `g = λu = uλ'` and its weighted
//!   sibling `g = R·V = V·R'` with `V` a-unitary and `R`, `R'` a-positive
//!   ([`fibration`]),
//! * the unique positive solution of the quadratic matrix equation
//!   `x·a·x = b` (the Pedersen–Takesaki equation for invertible data) and
//!   the complete family of its Hermitian solutions ([`pt`]),
//! * the explicit inverse section of the unitary-part map restricted to
//!   the a-unitary group, and the induced lift of orthogonal reflections
//!   ([`fibration::alpha`], [`fibration::lift_reflection`]),
//! * membership classifiers for the a-unitary / a-Hermitian / a-positive
//!   classes, their pairwise intersections and their unions over all
//!   weights, with concrete witness weights ([`weighted`], [`sets`]).
//!
//! All numerical kernels work on dense square complex matrices
//! ([`CMatrix`]) and are generic over the real scalar type through the
//! [`Scalar`] trait; `f64` is the precision used by the CLI and the
//! verification harness.

pub mod eigen;
pub mod error;
pub mod fibration;
pub mod linalg;
pub mod pt;
pub mod random;
pub mod sets;
pub mod verify;
pub mod weighted;

pub use error::{Error, Result};
pub use fibration::{PolarFactors, WeightedPolarFactors};
pub use linalg::{HermitianEigen, StructureReport, Tolerance};
pub use pt::SolutionFamily;
pub use random::Kind;
pub use sets::{GsRoutes, IntersectionKind, IntersectionReport, UnionVerdict};
pub use weighted::{ClassVerdict, Weight, WeightedProjection};

/// Real scalar types the numerical kernels are generic over.
///
/// Implemented by `f32` and `f64`; complex entries are `Complex<T>`.
pub trait Scalar:
    nalgebra::RealField + num_traits::FromPrimitive + num_traits::ToPrimitive + Copy
{
}

impl<T> Scalar for T where
    T: nalgebra::RealField + num_traits::FromPrimitive + num_traits::ToPrimitive + Copy
{
}

/// Complex scalar over a real type.
pub type C<T> = num_complex::Complex<T>;
/// Dense complex matrix, the universal carrier for algebra elements.
pub type CMatrix<T> = nalgebra::DMatrix<C<T>>;
/// Dense complex column vector.
pub type CVector<T> = nalgebra::DVector<C<T>>;

/// Double precision aliases, the default for the CLI and test harness.
pub type CMatrix64 = CMatrix<f64>;
pub type CVector64 = CVector<f64>;
/// Single precision aliases.
pub type CMatrix32 = CMatrix<f32>;
pub type CVector32 = CVector<f32>;

pub(crate) fn from_f64<T: Scalar>(v: f64) -> T {
    T::from_f64(v).expect("scalar conversion from f64")
}

pub(crate) fn to_f64<T: Scalar>(v: T) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}
