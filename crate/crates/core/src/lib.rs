//! Exact engine for Nichols algebras of Weyl-group Yetter–Drinfeld modules and
//! their quantized operators, realizing the small quantum cohomology ring of
//! flag varieties `G/B` for classical types of small rank.
//!
//! The crate is `no_std` with `alloc`; IO, caching and the CLI live in the
//! companion `nqf` crate.

#![no_std]

extern crate alloc;

pub mod error;
pub mod scalars;
pub mod roots;
pub mod braided;
pub mod linalg;
pub mod nichols;
pub mod polyring;
pub mod quantum;

pub use error::{Error, Result};
pub use nichols::{BElem, NicholsBasis};
pub use polyring::{Basis, CPoly, Constants};
pub use quantum::{GradedOperator, MonomialImages, QuantumEngine, YOperators};
pub use roots::{CartanType, Root, RootSystem, SignedRoot, WeylElem};
pub use scalars::{QMonomial, Rational, RingElem};
