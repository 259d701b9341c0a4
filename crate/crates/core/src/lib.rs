//! Filtered knot Floer chain complexes `CFK^∞` over F2, their realized
//! subquotients, the meridian-cable filtration on large surgeries, and the
//! concordance invariants τ, ε and a₁.

pub mod builders;
pub mod complex;
pub mod error;
pub mod f2;
pub mod filtration;
pub mod format;
pub mod invariants;
pub mod library;
pub mod poly;
pub mod region;
pub mod suite;

pub use complex::{
    mirror, tensor, validate, CfkComplex, DiffEntry, Generator, LatticePoint, ValidationReport,
};
pub use error::{ComplexError, ExponentError, InvariantError, LoadError, ParseError, RegionError};
pub use invariants::{a1_algebraic, a1_surgery, epsilon, tau, InvariantReport};
