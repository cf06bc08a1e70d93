//! Exact computational algebra for involutivity of characteristic varieties.
//!
//! The crate is layered bottom-up:
//!
//! - [`poly`]: sparse polynomials over the rationals, monomial orders, gcd.
//! - [`ideal`]: Groebner bases, membership, radical membership, elimination,
//!   quotient dimension and radicals for the supported ideal shapes.
//! - [`weyl`]: the Weyl algebra, left Groebner bases, principal symbols and
//!   characteristic ideals of cyclic D-modules.
//! - [`poisson`]: bivectors, forms, brackets, involutivity and the conormal
//!   criteria.
//! - [`hochschild`]: Koszul complexes, HKR ranks, tautological classes,
//!   multiplicities and the contraction action.
//! - [`pipeline`]: the stanza input format, the end-to-end check and reports.

pub mod error;
pub mod hochschild;
mod gb;
pub mod ideal;
pub mod weyl;
pub mod pipeline;
pub mod poisson;
pub mod poly;
mod text;

pub use error::{Error, ParseError, Result};
