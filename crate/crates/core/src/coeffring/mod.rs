//! Coefficient rings: Laurent polynomials, their fractions and truncated
//! series in `u` and `h`.

mod bivariate;
mod expand;
mod serde_io;
mod fraction;
mod laurent_poly;
mod layer;
mod series;
pub mod upoly;

pub use bivariate::BiSeries;
pub use expand::{exp_expand, from_fraction, from_fraction_with, geom_inverse, with_padding, VarMap};
pub use fraction::LaurentFraction;
pub use laurent_poly::{vars, LaurentPoly, Vars};
pub use layer::{LaurentLayer, EXACT};
pub use series::{SeriesWindow, TruncSeries};
pub use serde_io::{SeriesJson, TermJson};
