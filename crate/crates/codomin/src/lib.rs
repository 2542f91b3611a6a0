//! Exact computational toolkit for finite-dimensional coalgebras, bialgebras
//! and Hopf algebras over `Q`, `F_p` and simple field extensions.
//!
//! The crate decides monomorphism/epimorphism status of (co)algebra
//! morphisms, computes dominions and codominions, Takeuchi `l`/`r` operators,
//! coinvariants and cotensor products, and transports all of these along
//! field extensions — everything in exact arithmetic, with brute-force
//! enumeration oracles cross-checking the decision procedures at small
//! dimensions.

pub mod catalog;
pub mod cli;
pub mod comodules;
pub mod dominion;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod linalg;
pub mod scalars;
pub mod structures;
pub mod takeuchi;
pub mod wsfile;

pub use error::{Error, Result};
pub use linalg::{ExactMatrix, Subspace};
pub use scalars::{Field, Scalar, Value};
