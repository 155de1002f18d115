//! Minimum-weight codeword counting for Hermitian codes over GF(q^2).

pub mod error;
pub mod gf;
pub mod groebner;
pub mod hermitian;
pub mod linalg;
pub mod mwcount;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use gf::{build_field, FieldElement, FieldSpec};
pub use poly::{Monomial, Polynomial, Ring, TermOrder};
