//! Sparse polynomials over prime fields and exhaustive checks of
//! Nullstellensatz-style counting theorems.
//!
//! The algebra is generic over the unsigned word holding a residue
//! ([`Residue`]); the aliases below fix it to `u32` (and `u64`), which covers
//! every supported modulus.

pub mod chevalley;
pub mod cnss;
pub mod enumerate;
pub mod error;
pub mod exclusion;
pub mod field;
pub mod graph;
pub mod monomial;
pub mod parity;
mod parse;
pub mod poly;
pub mod random;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField, Residue};
pub use monomial::ExponentVector;
pub use poly::{Degree, Polynomial};

pub type Fp = PrimeField<u32>;
pub type Element = FieldElement<u32>;
pub type Poly = Polynomial<u32>;
pub type System = chevalley::PolySystem<u32>;
pub type Grid = cnss::Grid<u32>;

pub type Fp64 = PrimeField<u64>;
pub type Poly64 = Polynomial<u64>;
