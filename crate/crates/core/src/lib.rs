//! Cyclic words over a free group: cyclic reduction, cyclic products,
//! decompositions of cyclic products, identities among relations and
//! the twisted associativity lemma and theorem, with van Kampen diagram
//! construction for certificates.

pub mod decompose;
pub mod identities;
pub mod twisted_assoc;
pub mod vankampen;
pub mod word_core;

pub use word_core::{Letter, ParseError, Word};
