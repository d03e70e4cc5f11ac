//! Gorenstein duality pairings on Jacobian modules of one-dimensional almost
//! complete intersections, their signatures, and an exact real-topology
//! cross-check for projective plane curves.
//!
//! Everything is computed over the rationals with positive integer weights on
//! the variables. The main entry points are [`gorenstein::signature`] and
//! [`realtopo::verify_signature_theorem`].

pub mod error;
pub mod gorenstein;
pub mod groebner;
pub mod homology;
pub mod linalg;
pub mod polyarith;
pub mod quadform;
pub mod realtopo;

pub use error::{Error, Result};
pub use polyarith::{parse, Monomial, Polynomial, Rational, Ring, VarSet};
