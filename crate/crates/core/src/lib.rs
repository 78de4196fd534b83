//! Rough convenience lattices: finite bounded lattices carrying lower and
//! upper approximation operators, the aggregations, negations and
//! implications derived from them, exhaustive law audits, set-based
//! granular instances, bias measures, and a finite model search engine.

pub mod aggregation;
pub mod algebra;
pub mod approx;
pub mod bias;
pub mod bits;
pub mod error;
pub mod granular;
pub mod lattice;
pub mod laws;
pub mod negation;
pub mod search;

pub use error::{Error, Result};
