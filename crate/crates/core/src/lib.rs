//! Fractional iterates of one-dimensional maps whose orbits converge to an
//! attracting fixed point from alternating sides.
//!
//! The crate covers Schröder/Koenig linearization (complex iterates), Abel
//! functions with branch-cut logarithms, and a two-branch real Abel function
//! built from the even and odd double-step Koenig functions.

pub mod abel_complex;
pub mod abel_modified;
pub mod corrigendum;
pub mod error;
pub mod lambda3;
pub mod linearize;
pub mod maps;
pub mod numerics;
pub mod report;
pub mod verify;

pub use abel_complex::{AbelChart, BranchCut, DiskPosition};
pub use abel_modified::{FracIterate, ModifiedAbelChart};
pub use corrigendum::MobiusMap;
pub use error::{Error, Result};
pub use lambda3::NeutralKind;
pub use linearize::{ChartMode, KoenigChart};
pub use maps::{Branch, MapKind, MapSpec, OrbitTable, Side};
pub use num_rational::BigRational;
pub use numerics::{Complex, PowerSeries, Precision, Quad, Real, Value};
pub use report::Check;
pub use verify::{Report, Suite};
