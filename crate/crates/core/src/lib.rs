//! locus-core: exact localization computations for commutative rings.
//!
//! The crate is organized around five subsystems:
//!
//! * [`ideal`] — multivariate polynomial arithmetic and the Gröbner-basis
//!   primitives (normal form, colon, saturation, elimination, radical and
//!   unit membership) over Q and GF(p);
//! * [`localization`] — associated ideals, localization presentations,
//!   element classification, maximal localizable sets, localization radicals
//!   and the complete/absolute quotient rings of finitely presented algebras;
//! * [`finite`] — an exhaustive oracle over small finite commutative rings
//!   given by multiplication tables;
//! * [`product`] — the filter calculus on finite direct products of fields,
//!   matrix rings and formal division rings;
//! * [`module`] — localization of finitely presented modules, torsion
//!   submodules and the exactness condition.

pub mod finite;
pub mod ideal;
pub mod localization;
pub mod modgb;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod primes;
pub mod product;
pub mod ring;
pub mod scalar;

pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::{MultSetSpec, RingPresentation, Status, StatusTagged};
pub use scalar::{FieldSpec, Scalar};

/// Error type shared by every subsystem.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed or inconsistent input.
    #[error("input error: {0}")]
    Input(String),
    /// A precondition holds but the requested answer cannot be certified.
    #[error("refused: {0}")]
    Refused(String),
    /// A consistency check that must never fail did fail.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
