//! Duality numerology for graded complete intersections and their rings of
//! invariants, in exact rational arithmetic.
//!
//! The pipeline runs bottom-up: [`series`] supplies rational functions in `t`,
//! [`graded_ring`] turns presentations into Hilbert series and Gorenstein
//! shifts, [`duality`] assembles local-cohomology and Čech series,
//! [`invariants`] handles finite group actions, and [`descent`] combines the
//! last two. [`input`] and [`dataset`] provide the text formats and the
//! bundled fixtures used by the command-line tool.

use thiserror::Error;

pub mod dataset;
pub mod descent;
pub mod duality;
pub mod graded_ring;
pub mod input;
pub mod invariants;
pub mod series;

pub use num_rational::BigRational;

/// Any error raised by the library, tagged by the module it came from.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Ring(#[from] graded_ring::RingError),
    #[error(transparent)]
    Duality(#[from] duality::DualityError),
    #[error(transparent)]
    Invariants(#[from] invariants::InvariantsError),
    #[error(transparent)]
    Descent(#[from] descent::DescentError),
    #[error(transparent)]
    Parse(#[from] input::ParseError),
}
