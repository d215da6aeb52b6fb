//! Equivariant D-modules on binary cubic forms: characters, the catalog of
//! simple objects, and the quiver with relations describing the category.

pub mod catalog;
pub mod cubics;
pub mod character;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod repfile;
pub mod scalar;
pub mod verify;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// The exact field used throughout.
pub type Rational = BigRational;
/// Multiplicities are arbitrary-precision integers.
pub type Multiplicity = BigInt;
pub type QMatrix = linalg::Matrix<Rational>;
