//! Exact verification engine for the trigonometric R-matrix, its scalar
//! normalizer and the central elements of the quantum affine algebra.

pub mod central;
pub mod coeffring;
pub mod tensoralg;
pub mod error;
pub mod fusion;
pub mod normalizer;
pub mod report;
pub mod rmatrix;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Field, Rational};

pub type QPoly = coeffring::LaurentPoly<Rational>;
pub type QFraction = coeffring::LaurentFraction<Rational>;
pub type QSeries = coeffring::TruncSeries<Rational>;
pub type FSeries = coeffring::TruncSeries<f64>;
