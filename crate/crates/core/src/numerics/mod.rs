//! Precision substrate: high-precision reals and complexes, exact quadratic
//! fields, truncated power series and a safeguarded root finder.

mod complex;
mod field;
mod precision;
mod quadratic;
mod real;
pub mod roots;
pub mod series;
mod value;

pub use complex::Complex;
pub use field::{Field, FieldTag};
pub use precision::Precision;
pub use quadratic::Quad;
pub use real::Real;
pub use series::{series_compose, series_eval, series_revert, PowerSeries, DEFAULT_ORDER};
pub use value::{parse_complex, parse_exact, parse_rational, Value};

pub(crate) use quadratic::fmt_rat;
