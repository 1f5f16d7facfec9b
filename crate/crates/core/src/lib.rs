//! Exact computation with finite quantale-valued structures.
//!
//! The crate works with finite carriers over a value quantale (the exact
//! extended nonnegative rationals, or a finite chain standing in for them)
//! and provides generalized metric spaces, finite ordered sets and lattices,
//! weighted suprema and tensors, value-quantale actions on orders, the
//! ultrafilter functor on orders and metrics, and approach spaces in both
//! the point-set-distance and the ultrafilter-convergence presentation.
//! Everything is small enough to check by literal enumeration, and the
//! classical equivalences between these structures ship as executable
//! verification suites.

pub mod action;
pub mod approach;
pub mod bits;
pub mod colimit;
pub mod doc;
pub mod error;
pub mod gen;
pub mod metric;
pub mod order;
pub mod quantale;
pub mod suites;
pub mod ultra;

pub use error::{Error, Result};
pub use metric::{MetricMap, MetricSpace, Variance, Weight};
pub use order::{MonotoneMap, Poset};
pub use quantale::{Quantale, Value};
pub use ultra::Ultrafilter;
