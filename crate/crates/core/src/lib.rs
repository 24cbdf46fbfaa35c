//! Two-site Yangian realizations of Y(sl(2)) and Y(su(3)): generator construction,
//! numerical verification of the commutation tables, similarity reductions on the
//! constraint surface `μν = −λ²/4`, and the entanglement of states acted on by
//! Yangian transition operators.

pub mod battery;
pub mod config;
pub mod entanglement;
pub mod lie;
pub mod linalg;
pub mod reduction;
pub mod report;
pub mod suites;
pub mod yangian;

pub use linalg::{Complex, ComplexMatrix, LinalgError};
pub use report::{RelationCheck, SuiteReport};
pub use yangian::YangianParams;
