//! Finite-model workbench for point-free relation algebra.
//!
//! Concrete relations over small named carriers ([`relcore`]), residuals
//! ([`factors`]), domain operators and predicates ([`domains`]), indexes and
//! cores ([`indexcore`]), isomorphism ([`isomorph`]), points and pairs
//! ([`pointlattice`]), finite abstract algebras ([`absmodel`]) and an
//! executable law registry ([`laws`]).

pub mod exec;
pub mod absmodel;
pub mod domains;
pub mod factors;
pub mod indexcore;
pub mod isomorph;
pub mod laws;
pub mod pointlattice;
pub mod relcore;

pub use relcore::{Carrier, Coreflexive, RelError, Relation};
